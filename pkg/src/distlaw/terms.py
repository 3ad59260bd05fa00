"""Normal-form terms of free algebraic structures over finite carriers.

Every term is immutable and carries a precomputed structural key and size.
Structural equality of keys is the only equality used anywhere: two terms
denote the same free-algebra element iff they are equal.  Constructors
canonicalise on the way in (multisets are sorted, integer combinations are
merged, zero coefficients dropped), so a term is always in normal form.

The size of a term counts generator occurrences plus adjoined constants;
an integer combination weighs each item by the absolute value of its
coefficient.  Size-zero terms exist (the empty word, the empty multiset,
the zero combination), so enumerators use a parallel *weight* in which
every structure node costs at least one: over a plain carrier weight and
size agree except on the single empty term, and over nested domains the
weight keeps every enumeration finite.
"""

from .errors import ShapeMismatch, UnknownGenerator


class Term:
    """Base class; subclasses populate ``_key`` and ``_size`` eagerly."""

    __slots__ = ("_key", "_size", "_weight", "_hash")

    def _seal(self, key, size, enum_weight):
        self._key = key
        self._size = size
        self._weight = enum_weight
        self._hash = hash(key)

    @property
    def size(self):
        return self._size

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Term) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return str(self)


class Gen(Term):
    """A generator of the carrier."""

    __slots__ = ("name",)

    def __init__(self, name):
        assert isinstance(name, str) and name
        self.name = name
        self._seal(("g", name), 1, 1)

    def __str__(self):
        return self.name


class One(Term):
    """The adjoined multiplicative unit (the point of a pointed set)."""

    __slots__ = ()

    def __init__(self):
        self._seal(("one",), 1, 1)

    def __str__(self):
        return "1"


class Zero(Term):
    """The adjoined absorbing zero."""

    __slots__ = ()

    def __init__(self):
        self._seal(("zero",), 1, 1)

    def __str__(self):
        return "0"


ONE = One()
ZERO = Zero()


class Inj(Term):
    """Coproduct injection of an element alongside an adjoined constant."""

    __slots__ = ("inner",)

    def __init__(self, inner):
        assert isinstance(inner, Term)
        self.inner = inner
        self._seal(("i", inner._key), inner._size, inner._weight)

    def __str__(self):
        return str(self.inner)


class Seq(Term):
    """A word: the free monoid / free semigroup shape.  Order significant."""

    __slots__ = ("items",)

    def __init__(self, items):
        items = tuple(items)
        assert all(isinstance(t, Term) for t in items)
        self.items = items
        self._seal(("s",) + tuple(t._key for t in items),
                   sum(t._size for t in items),
                   max(sum(t._weight for t in items), 1))

    def __len__(self):
        return len(self.items)

    def __str__(self):
        if not self.items:
            return "()"
        return "(" + ".".join(str(t) for t in self.items) + ")"


class MSet(Term):
    """A multiset, stored as a sorted tuple with repetitions."""

    __slots__ = ("items",)

    def __init__(self, items):
        items = tuple(sorted(items, key=lambda t: t._key))
        assert all(isinstance(t, Term) for t in items)
        self.items = items
        self._seal(("m",) + tuple(t._key for t in items),
                   sum(t._size for t in items),
                   max(sum(t._weight for t in items), 1))

    def __len__(self):
        return len(self.items)

    def __str__(self):
        if not self.items:
            return "{}"
        return "{" + ".".join(str(t) for t in self.items) + "}"


class IntComb(Term):
    """A formal integer combination: sorted (term, coefficient) pairs.

    Duplicate keys are merged and zero coefficients dropped, so equality
    of combinations is structural equality.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        merged = {}
        for term, coeff in pairs:
            assert isinstance(term, Term) and isinstance(coeff, int)
            if term in merged:
                merged[term] += coeff
            else:
                merged[term] = coeff
        kept = tuple(sorted(((t, c) for t, c in merged.items() if c != 0),
                            key=lambda pair: pair[0]._key))
        self.pairs = kept
        self._seal(("z",) + tuple((t._key, c) for t, c in kept),
                   sum(abs(c) * max(t._size, 1) for t, c in kept),
                   max(sum(abs(c) * t._weight for t, c in kept), 1))

    def coefficient(self, term):
        for t, c in self.pairs:
            if t == term:
                return c
        return 0

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        if not self.pairs:
            return "<0>"
        return "<" + " + ".join(f"{c}*{t}" for t, c in self.pairs) + ">"


def weight(term):
    """Enumeration weight of a domain element: at least one."""
    return term._weight


def gen_count(term):
    """Number of generator occurrences, ignoring adjoined constants."""
    if isinstance(term, Gen):
        return 1
    if isinstance(term, (One, Zero)):
        return 0
    if isinstance(term, Inj):
        return gen_count(term.inner)
    if isinstance(term, (Seq, MSet)):
        return sum(gen_count(t) for t in term.items)
    if isinstance(term, IntComb):
        return sum(abs(c) * gen_count(t) for t, c in term.pairs)
    raise ShapeMismatch(f"not a term: {term!r}")


class Carrier:
    """An ordered finite set of named generators."""

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names: {names}")
        self.names = names
        self._gens = tuple(Gen(n) for n in names)

    @classmethod
    def of_size(cls, k):
        """Carrier with generators a, b, c, ... (then a1, a2, ... past z)."""
        alphabet = "abcdefghijklmnopqrstuvwxyz"
        if k <= len(alphabet):
            return cls(alphabet[:k])
        return cls(list(alphabet) + [f"a{i}" for i in range(1, k - len(alphabet) + 1)])

    def gens(self):
        return self._gens

    def gen(self, name):
        if name not in self.names:
            raise UnknownGenerator(f"unknown generator {name!r}; carrier is {list(self.names)}")
        return Gen(name)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self._gens)

    def __repr__(self):
        return f"Carrier({list(self.names)})"


def functions_between(src_carrier, dst_carrier):
    """All maps between two carriers, as dicts Gen -> Gen, in a fixed order."""
    from itertools import product
    src = src_carrier.gens()
    dst = dst_carrier.gens()
    maps = []
    for images in product(dst, repeat=len(src)):
        maps.append(dict(zip(src, images)))
    return maps
