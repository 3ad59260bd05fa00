import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distlaw import Carrier, Gen, IntComb, MSet, Seq, ZERO, abelianize, \
    format_normal, normalize_expr, parse_expr
from distlaw.errors import ParseError, UnknownGenerator, UnsupportedNode
from distlaw.expr import Add, IntLit, Mul, Neg, OneLit, Var, ZeroLit

from oracles import (eval_expr_bool, eval_expr_matrix, eval_ring2_nf_matrix,
                     eval_ring_nf_matrix, eval_rig_nf_bool, mat_mul,
                     random_expression, random_matrix)

X = Carrier(("a", "b", "c", "d", "x", "y"))


def test_parse_binomial_product():
    assert parse_expr("(a+b)*(c+d)", X) == Mul(Add(Var("a"), Var("b")),
                                               Add(Var("c"), Var("d")))


def test_subtraction_desugars():
    assert parse_expr("a - a", X) == Add(Var("a"), Neg(Var("a")))


def test_integer_literals():
    assert parse_expr("2*(x+y)", X) == Mul(IntLit(2), Add(Var("x"), Var("y")))
    assert parse_expr("0", X) == ZeroLit()
    assert parse_expr("1", X) == OneLit()


def test_precedence_and_unary_minus():
    assert parse_expr("a+b*c", X) == Add(Var("a"), Mul(Var("b"), Var("c")))
    assert parse_expr("-a*b", X) == Mul(Neg(Var("a")), Var("b"))
    assert parse_expr("a--b", X) == Add(Var("a"), Neg(Neg(Var("b"))))


def test_whitespace_is_insignificant():
    assert parse_expr(" ( a + b ) * c ", X) == parse_expr("(a+b)*c", X)


def test_parse_errors_report_position_and_expectations():
    with pytest.raises(ParseError) as info:
        parse_expr("a + ", X)
    assert info.value.position == 4
    assert "IDENT" in info.value.expected
    with pytest.raises(ParseError) as info:
        parse_expr("(a+b", X)
    assert info.value.expected == (")",)
    with pytest.raises(ParseError):
        parse_expr("a $ b", X)


def test_unknown_identifier_is_rejected():
    with pytest.raises(UnknownGenerator):
        parse_expr("a + q", X)


def nf(theory, src):
    return normalize_expr(theory, parse_expr(src, X))


def test_ring3_binomial_expansion():
    got = nf("ring3", "(a+b)*(c+d)")
    expected = IntComb(tuple((Seq((Gen(u), Gen(v))), 1)
                             for u in "ab" for v in "cd"))
    assert got == expected
    assert format_normal("ring3", got) == "a*c + a*d + b*c + b*d"


def test_ring3_cancellation():
    assert nf("ring3", "a - a") == IntComb(())
    assert format_normal("ring3", nf("ring3", "a - a")) == "0"


def test_ring3_keeps_word_order():
    assert nf("ring3", "a*b") != nf("ring3", "b*a")
    assert nf("ring2", "a*b") == nf("ring2", "b*a")


def test_rig_zero_annihilates_and_unit_vanishes():
    got = nf("rig", "a*0 + b")
    assert format_normal("rig", got) == "b"
    assert nf("rig", "0") == ZERO
    assert format_normal("rig", nf("rig", "a*1*b")) == "a*b"


def test_ring2_binomial_expansion():
    got = nf("ring2", "(a+b)*(c+d)")
    expected = IntComb(tuple((MSet((Gen(u), Gen(v))), 1)
                             for u in "ab" for v in "cd"))
    assert got == expected


def test_integer_literals_desugar_to_repeated_units():
    assert nf("ring3", "3") == nf("ring3", "1+1+1")
    assert nf("ring3", "-2*a") == nf("ring3", "0-a-a")
    assert nf("rig", "2*a") == nf("rig", "a+a")


def test_monoid_and_cmonoid_normal_forms():
    assert nf("monoid", "a*b*1*c") == Seq((Gen("a"), Gen("b"), Gen("c")))
    assert nf("cmonoid", "c*a*b") == MSet((Gen("a"), Gen("b"), Gen("c")))
    assert format_normal("monoid", nf("monoid", "1")) == "1"


def test_unsupported_nodes_per_theory():
    for theory, src in (("monoid", "a+b"), ("cmonoid", "a-a"),
                        ("rig", "-a"), ("monoid", "0")):
        with pytest.raises(UnsupportedNode):
            nf(theory, src)
    with pytest.raises(UnsupportedNode):
        normalize_expr("nope", parse_expr("a", X))


def test_equal_ring_expressions_share_a_normal_form():
    pairs = [
        ("(a+b)*(a+b)", "a*a + a*b + b*a + b*b"),
        ("a*(b+c)", "a*b + a*c"),
        ("(a-b)*(a+b)", "a*a + a*b - b*a - b*b"),
        ("2*(a+b) - a - b", "a + b"),
        ("(a+b)*0", "0"),
        ("1*a*1", "a"),
    ]
    for left, right in pairs:
        assert nf("ring3", left) == nf("ring3", right), (left, right)


def test_ring3_soundness_against_matrix_ring_sample():
    rng = random.Random(11)
    names = ["a", "b", "c"]
    for _ in range(25):
        expr = random_expression(rng, names, 6)
        normal = normalize_expr("ring3", expr)
        for _ in range(5):
            assignment = {n: random_matrix(rng) for n in names}
            assert eval_expr_matrix(expr, assignment) == \
                eval_ring_nf_matrix(normal, assignment)


def test_ring2_soundness_on_commuting_assignments():
    rng = random.Random(19)
    names = ["a", "b", "c"]
    for _ in range(25):
        expr = random_expression(rng, names, 6)
        normal = normalize_expr("ring2", expr)
        for _ in range(5):
            assignment = {n: ((rng.randint(-2, 2), 0), (0, rng.randint(-2, 2)))
                          for n in names}
            assert eval_expr_matrix(expr, assignment) == \
                eval_ring2_nf_matrix(normal, assignment)


def test_rig_soundness_against_boolean_rig():
    rng = random.Random(13)
    names = ["a", "b", "c"]
    for _ in range(40):
        expr = random_expression(rng, names, 5)
        if _uses_negation(expr):
            continue
        normal = normalize_expr("rig", expr)
        for assignment in _all_bool_assignments(names):
            assert eval_expr_bool(expr, assignment) == \
                eval_rig_nf_bool(normal, assignment)


def _uses_negation(node):
    if isinstance(node, Neg):
        return True
    if isinstance(node, (Add, Mul)):
        return _uses_negation(node.left) or _uses_negation(node.right)
    return False


def _all_bool_assignments(names):
    from itertools import product
    for values in product((0, 1), repeat=len(names)):
        yield dict(zip(names, values))


def test_abelianized_ring3_equals_ring2():
    rng = random.Random(17)
    names = ["a", "b", "c"]
    for _ in range(40):
        expr = random_expression(rng, names, 6)
        assert abelianize(normalize_expr("ring3", expr)) == \
            normalize_expr("ring2", expr)


def test_format_signed_sums():
    assert format_normal("ring3", nf("ring3", "b - 2*a")) == "-2*a + b"
    assert format_normal("ring3", nf("ring3", "-3")) == "-3"
    assert format_normal("ring3", nf("ring3", "1 + a")) == "1 + a"
    assert format_normal("ring2", nf("ring2", "a*a - b")) == "a*a - b"


_vars = st.sampled_from([Var("a"), Var("b"), OneLit(), ZeroLit()])
_exprs = st.recursive(
    _vars,
    lambda sub: st.one_of(
        st.tuples(sub, sub).map(lambda p: Add(*p)),
        st.tuples(sub, sub).map(lambda p: Mul(*p)),
        sub.map(Neg)),
    max_leaves=8)


@settings(max_examples=60, deadline=None)
@given(_exprs)
def test_normalization_is_stable_and_sound(expr):
    normal = normalize_expr("ring3", expr)
    again = normalize_expr("ring3", expr)
    assert normal == again
    rng = random.Random(23)
    assignment = {n: random_matrix(rng) for n in ("a", "b")}
    assert eval_expr_matrix(expr, assignment) == \
        eval_ring_nf_matrix(normal, assignment)


@settings(max_examples=40, deadline=None)
@given(_exprs)
def test_commutative_image_of_word_normal_form(expr):
    assert abelianize(normalize_expr("ring3", expr)) == \
        normalize_expr("ring2", expr)
