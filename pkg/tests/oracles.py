"""Independent evaluators used as oracles against the normalisers.

The ring oracle interprets expressions and normal forms in the ring of
2x2 integer matrices (noncommutative, so word order matters); the rig
oracle interprets them in the two-element Boolean rig.  Both are written
directly against the arithmetic, never through the package's monads.
"""

import random

from distlaw.expr import Add, IntLit, Mul, Neg, OneLit, Var, ZeroLit
from distlaw.terms import Seq, ZERO

MAT_ID = ((1, 0), (0, 1))
MAT_ZERO = ((0, 0), (0, 0))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(2)) for c in range(2))
        for r in range(2))


def mat_scale(k, a):
    return tuple(tuple(k * x for x in row) for row in a)


def random_matrix(rng):
    return tuple(tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(2))


def eval_expr_matrix(node, assignment):
    if isinstance(node, Var):
        return assignment[node.name]
    if isinstance(node, OneLit):
        return MAT_ID
    if isinstance(node, ZeroLit):
        return MAT_ZERO
    if isinstance(node, IntLit):
        return mat_scale(node.value, MAT_ID)
    if isinstance(node, Neg):
        return mat_neg(eval_expr_matrix(node.arg, assignment))
    if isinstance(node, Add):
        return mat_add(eval_expr_matrix(node.left, assignment),
                       eval_expr_matrix(node.right, assignment))
    if isinstance(node, Mul):
        return mat_mul(eval_expr_matrix(node.left, assignment),
                       eval_expr_matrix(node.right, assignment))
    raise TypeError(node)


def eval_word_matrix(word, assignment):
    out = MAT_ID
    for g in word.items:
        out = mat_mul(out, assignment[g.name])
    return out


def eval_ring_nf_matrix(comb, assignment):
    """A combination of words: sum of coefficient-scaled word products."""
    out = MAT_ZERO
    for word, coeff in comb.pairs:
        out = mat_add(out, mat_scale(coeff, eval_word_matrix(word, assignment)))
    return out


def eval_ring2_nf_matrix(comb, assignment):
    """Commutative monomials evaluated with commuting assignments only."""
    out = MAT_ZERO
    for mono, coeff in comb.pairs:
        prod = MAT_ID
        for g in mono.items:
            prod = mat_mul(prod, assignment[g.name])
        out = mat_add(out, mat_scale(coeff, prod))
    return out


def eval_expr_bool(node, assignment):
    """The two-element rig: or as addition, and as multiplication."""
    if isinstance(node, Var):
        return assignment[node.name]
    if isinstance(node, OneLit):
        return 1
    if isinstance(node, ZeroLit):
        return 0
    if isinstance(node, IntLit):
        return 1 if node.value else 0
    if isinstance(node, Add):
        return eval_expr_bool(node.left, assignment) | eval_expr_bool(node.right, assignment)
    if isinstance(node, Mul):
        return eval_expr_bool(node.left, assignment) & eval_expr_bool(node.right, assignment)
    raise TypeError(node)


def eval_rig_nf_bool(term, assignment):
    if term == ZERO:
        return 0
    out = 0
    for word in term.inner.items:
        prod = 1
        for g in word.items:
            prod &= assignment[g.name]
        out |= prod
    return out


def random_expression(rng, names, max_leaves):
    """A random AST with at most ``max_leaves`` leaves, ring-compatible."""
    def build(budget):
        if budget == 1 or rng.random() < 0.25:
            kind = rng.randrange(4)
            if kind == 0:
                return Var(rng.choice(names)), 1
            if kind == 1:
                return OneLit(), 1
            if kind == 2:
                return ZeroLit(), 1
            return IntLit(rng.randint(2, 3)), 1
        if rng.random() < 0.2:
            inner, used = build(budget)
            return Neg(inner), used
        split = rng.randint(1, budget - 1)
        left, used_l = build(split)
        right, used_r = build(budget - split)
        ctor = Add if rng.random() < 0.5 else Mul
        return ctor(left, right), used_l + used_r

    node, _ = build(rng.randint(1, max_leaves))
    return node


def word_to_tuple(word):
    assert isinstance(word, Seq)
    return tuple(g.name for g in word.items)
