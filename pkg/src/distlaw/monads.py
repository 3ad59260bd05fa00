"""Executable monads on finite term domains.

A monad here is a concrete gadget: a functor action on terms (``fmap``),
a unit, a multiplication, and a bounded enumerator of its free normal
forms over any finite domain of terms.  The enumerator returns exactly
the normal forms whose weighted size stays within the bound, sorted by
(size, structural key), so enumerations at growing bounds extend each
other by appending.
"""

from .errors import BoundTooLarge, ShapeMismatch
from .terms import Inj, IntComb, MSet, ONE, Seq, ZERO, weight

ENUM_CEILING = 10 ** 6


def _sorted_terms(terms):
    return sorted(terms, key=lambda t: (t.size, t.key))


def _by_weight(domain):
    """Domain sorted by (weight, key), so enumerators can stop early."""
    return sorted(domain, key=lambda t: (weight(t), t.key))


class MonadSpec:
    """Interface every concrete monad implements."""

    name = "?"

    def unit(self, x):
        raise NotImplementedError

    def mult(self, t):
        raise NotImplementedError

    def fmap(self, f, t):
        raise NotImplementedError

    def enumerate(self, domain, bound, ceiling=ENUM_CEILING):
        raise NotImplementedError

    def apply(self, domain, bound, ceiling=ENUM_CEILING):
        """Functor action on a finite domain: same as ``enumerate``."""
        return self.enumerate(domain, bound, ceiling)

    def map(self, f):
        """Functor action on a function, curried."""
        return lambda t: self.fmap(f, t)

    def __repr__(self):
        return f"<monad {self.name}>"


def _guard(count, ceiling):
    if count > ceiling:
        raise BoundTooLarge(f"enumeration exceeds ceiling of {ceiling} terms")


class FreeMonoid(MonadSpec):
    """Words over the domain, including the empty word."""

    name = "free-monoid"
    nonempty = False

    def unit(self, x):
        return Seq((x,))

    def mult(self, t):
        if not isinstance(t, Seq):
            raise ShapeMismatch(f"{self.name}: mult expects a word of words, got {t}")
        out = []
        for part in t.items:
            if not isinstance(part, Seq):
                raise ShapeMismatch(f"{self.name}: inner factor {part} is not a word")
            out.extend(part.items)
        if self.nonempty and not out:
            raise ShapeMismatch(f"{self.name}: flattening produced the empty word")
        return Seq(out)

    def fmap(self, f, t):
        if not isinstance(t, Seq):
            raise ShapeMismatch(f"{self.name}: fmap expects a word, got {t}")
        return Seq(tuple(f(x) for x in t.items))

    def enumerate(self, domain, bound, ceiling=ENUM_CEILING):
        domain = _by_weight(domain)
        out = [] if self.nonempty else [Seq(())]
        stack = [((), 0)]
        while stack:
            prefix, used = stack.pop()
            for x in domain:
                w = used + weight(x)
                if w > bound:
                    break
                ext = prefix + (x,)
                out.append(Seq(ext))
                _guard(len(out), ceiling)
                stack.append((ext, w))
        return _sorted_terms(out)


class FreeSemigroup(FreeMonoid):
    """Nonempty words: associative multiplication with no unit."""

    name = "free-semigroup"
    nonempty = True

    def unit(self, x):
        return Seq((x,))


class FreeCommutativeMonoid(MonadSpec):
    """Multisets over the domain, including the empty one."""

    name = "free-commutative-monoid"
    nonempty = False

    def unit(self, x):
        return MSet((x,))

    def mult(self, t):
        if not isinstance(t, MSet):
            raise ShapeMismatch(f"{self.name}: mult expects a multiset of multisets, got {t}")
        out = []
        for part in t.items:
            if not isinstance(part, MSet):
                raise ShapeMismatch(f"{self.name}: inner factor {part} is not a multiset")
            out.extend(part.items)
        if self.nonempty and not out:
            raise ShapeMismatch(f"{self.name}: flattening produced the empty multiset")
        return MSet(out)

    def fmap(self, f, t):
        if not isinstance(t, MSet):
            raise ShapeMismatch(f"{self.name}: fmap expects a multiset, got {t}")
        return MSet(tuple(f(x) for x in t.items))

    def enumerate(self, domain, bound, ceiling=ENUM_CEILING):
        domain = _by_weight(domain)
        out = []

        def extend(start, chosen, used):
            if chosen or not self.nonempty:
                out.append(MSet(chosen))
                _guard(len(out), ceiling)
            for idx in range(start, len(domain)):
                w = used + weight(domain[idx])
                if w > bound:
                    break
                extend(idx, chosen + (domain[idx],), w)

        extend(0, (), 0)
        return _sorted_terms(out)


class FreeCommutativeSemigroup(FreeCommutativeMonoid):
    """Nonempty multisets: commutative addition with no unit."""

    name = "free-commutative-semigroup"
    nonempty = True


class FreeAbelianGroup(MonadSpec):
    """Finite integer combinations of domain elements."""

    name = "free-abelian-group"

    def unit(self, x):
        return IntComb(((x, 1),))

    def mult(self, t):
        if not isinstance(t, IntComb):
            raise ShapeMismatch(f"{self.name}: mult expects a combination of combinations, got {t}")
        pairs = []
        for inner, outer_coeff in t.pairs:
            if not isinstance(inner, IntComb):
                raise ShapeMismatch(f"{self.name}: inner term {inner} is not a combination")
            for x, c in inner.pairs:
                pairs.append((x, outer_coeff * c))
        return IntComb(pairs)

    def fmap(self, f, t):
        if not isinstance(t, IntComb):
            raise ShapeMismatch(f"{self.name}: fmap expects a combination, got {t}")
        return IntComb(tuple((f(x), c) for x, c in t.pairs))

    def enumerate(self, domain, bound, ceiling=ENUM_CEILING):
        domain = _by_weight(domain)
        out = []

        def assign(idx, chosen, used):
            if idx == len(domain) or weight(domain[idx]) > bound - used:
                out.append(IntComb(chosen))
                _guard(len(out), ceiling)
                return
            w = weight(domain[idx])
            assign(idx + 1, chosen, used)
            c = 1
            while used + c * w <= bound:
                assign(idx + 1, chosen + ((domain[idx], c),), used + c * w)
                assign(idx + 1, chosen + ((domain[idx], -c),), used + c * w)
                c += 1

        assign(0, (), 0)
        return _sorted_terms(out)


class AdjoinConstant(MonadSpec):
    """Adjoin one distinguished constant: X maps to X plus a point."""

    constant = ONE

    def unit(self, x):
        return Inj(x)

    def mult(self, t):
        if t == self.constant:
            return self.constant
        if isinstance(t, Inj):
            inner = t.inner
            if inner == self.constant or isinstance(inner, Inj):
                return inner
            raise ShapeMismatch(f"{self.name}: {inner} is not an element of an adjoined domain")
        raise ShapeMismatch(f"{self.name}: mult expects a doubly adjoined element, got {t}")

    def fmap(self, f, t):
        if t == self.constant:
            return self.constant
        if isinstance(t, Inj):
            return Inj(f(t.inner))
        raise ShapeMismatch(f"{self.name}: fmap expects an adjoined element, got {t}")

    def enumerate(self, domain, bound, ceiling=ENUM_CEILING):
        out = [Inj(x) for x in domain if x.size <= bound]
        out.append(self.constant)
        _guard(len(out), ceiling)
        return _sorted_terms(out)


class AdjoinUnit(AdjoinConstant):
    name = "adjoin-unit"
    constant = ONE


class AdjoinZero(AdjoinConstant):
    name = "adjoin-zero"
    constant = ZERO


class IdentityMonad(MonadSpec):
    """The identity functor with trivial unit and multiplication."""

    name = "identity"

    def unit(self, x):
        return x

    def mult(self, t):
        return t

    def fmap(self, f, t):
        return f(t)

    def enumerate(self, domain, bound, ceiling=ENUM_CEILING):
        return _sorted_terms(x for x in domain if x.size <= bound)


FREE_MONOID = FreeMonoid()
FREE_SEMIGROUP = FreeSemigroup()
FREE_COMM_MONOID = FreeCommutativeMonoid()
FREE_COMM_SEMIGROUP = FreeCommutativeSemigroup()
FREE_ABELIAN_GROUP = FreeAbelianGroup()
ADJOIN_UNIT = AdjoinUnit()
ADJOIN_ZERO = AdjoinZero()
IDENTITY = IdentityMonad()

ZOO = {
    m.name: m
    for m in (FREE_MONOID, FREE_SEMIGROUP, FREE_COMM_MONOID,
              FREE_COMM_SEMIGROUP, FREE_ABELIAN_GROUP, ADJOIN_UNIT, ADJOIN_ZERO)
}


def enum_stack(monads, base, bound, ceiling=ENUM_CEILING):
    """Enumerate the composite functor ``monads[0] ∘ ... ∘ monads[-1]``.

    ``base`` is the innermost domain; each layer enumerates over the one
    below it with the same bound, so the result is every element of the
    composite within the weighted size bound.
    """
    domain = list(base)
    for monad in reversed(monads):
        domain = monad.enumerate(domain, bound, ceiling)
    return domain
