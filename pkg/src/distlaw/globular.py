"""Finite globular sets and the free composition monads on them.

Cells are self-contained values: a generator cell carries its boundary
cells, and a string cell is a list of cells composed along one
dimension, or an empty string anchored at the cell it is the identity
of.  Boundaries are therefore computable structurally:

* above the composition dimension, the boundary of a string is taken
  entry by entry (same length);
* at or below it, the source comes from the first entry and the target
  from the last (from the anchor when the string is empty).

The monad for composition along dimension ``i`` leaves dimensions up to
``i`` alone and fills higher dimensions with strings of ``i``-composable
cells, including one empty string per ``i``-cell.  Composing these
monads innermost-first over descending dimensions yields free strict
n-categories; the law that lets adjacent layers swap is interchange,
implemented as transposition of the rectangular grids that boundary
matching forces.
"""

import json

from .checks import CheckReport, Witness, compare, merge_reports
from .errors import (BoundTooLarge, ComposabilityError, DimensionError,
                     FileFormatError, IndexOrder, ShapeMismatch, RaggedGrid)

CELL_CEILING = 10 ** 6


def _guard_cells(count, ceiling=None):
    ceiling = CELL_CEILING if ceiling is None else ceiling
    if count > ceiling:
        raise BoundTooLarge(f"cell enumeration exceeds ceiling of {ceiling}")


class Cell:
    """Base: immutable, compared and hashed by a precomputed key."""

    __slots__ = ("_key", "_hash", "dim")

    def _seal(self, key, dim):
        self._key = key
        self._hash = hash(key)
        self.dim = dim

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Cell) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return str(self)


class GenCell(Cell):
    """A generating cell with direct references to its boundary cells."""

    __slots__ = ("name", "src", "tgt")

    def __init__(self, name, dim, src=None, tgt=None):
        assert (dim == 0) == (src is None) == (tgt is None)
        self.name = name
        self.src = src
        self.tgt = tgt
        key = ("g", dim, name,
               None if src is None else src._key,
               None if tgt is None else tgt._key)
        self._seal(key, dim)

    def __str__(self):
        return self.name


class StringCell(Cell):
    """A string of ``dim``-cells composed along dimension ``along``.

    An empty string is the iterated identity on its anchor, a cell of
    dimension ``along``.
    """

    __slots__ = ("along", "entries", "anchor")

    def __init__(self, along, dim, entries, anchor=None):
        if not 0 <= along < dim:
            raise DimensionError(
                f"a string along {along} must live strictly above that dimension, got {dim}")
        entries = tuple(entries)
        for e in entries:
            if e.dim != dim:
                raise ShapeMismatch(f"entry {e} has dimension {e.dim}, expected {dim}")
        if entries:
            assert anchor is None
        else:
            if anchor is None or anchor.dim != along:
                raise ShapeMismatch(f"empty string along {along} needs an anchor of that dimension")
        self.along = along
        self.entries = entries
        self.anchor = anchor
        if entries:
            key = ("s", dim, along, tuple(e._key for e in entries))
        else:
            key = ("s", dim, along, ("anchor", anchor._key))
        self._seal(key, dim)

    def __str__(self):
        if not self.entries:
            return f"[~{self.anchor}]^{self.dim}_{self.along}"
        return "[" + ";".join(str(e) for e in self.entries) + f"]_{self.along}"


def boundary_to(cell, side, d):
    """Iterated boundary of a cell down to dimension ``d`` (``d == dim`` is the cell)."""
    assert side in ("src", "tgt")
    if d > cell.dim:
        raise DimensionError(f"no dimension-{d} boundary of a {cell.dim}-cell")
    if d == cell.dim:
        return cell
    if isinstance(cell, GenCell):
        step = cell.src if side == "src" else cell.tgt
        return boundary_to(step, side, d)
    if isinstance(cell, StringCell):
        i = cell.along
        if d > i:
            if not cell.entries:
                return StringCell(i, d, (), cell.anchor)
            return StringCell(i, d, tuple(boundary_to(e, side, d) for e in cell.entries))
        if not cell.entries:
            return boundary_to(cell.anchor, side, d)
        end = cell.entries[0] if side == "src" else cell.entries[-1]
        return boundary_to(end, side, d)
    raise ShapeMismatch(f"not a cell: {cell!r}")


def boundary(cell, side, d):
    """Public boundary: strictly below the cell's own dimension."""
    if d >= cell.dim:
        raise DimensionError(f"boundary dimension {d} must be below {cell.dim}")
    return boundary_to(cell, side, d)


def composable(left, right, i):
    return boundary_to(left, "tgt", i) == boundary_to(right, "src", i)


class GlobularSet:
    """A finite tower of cell lists with structurally computed boundaries."""

    def __init__(self, n, cells):
        cells = [tuple(layer) for layer in cells]
        assert len(cells) == n + 1
        self.n = n
        self.cells = cells

    def cells_at(self, m):
        return self.cells[m]

    def all_cells(self):
        for layer in self.cells:
            yield from layer

    def counts(self):
        return [len(layer) for layer in self.cells]

    def __repr__(self):
        return f"<{self.n}-globular set, counts {self.counts()}>"


def validate_globular(gset):
    """Globularity at every cell of every dimension at least two."""
    sections = []
    for m in range(2, gset.n + 1):
        witnesses = []
        for cell in gset.cells_at(m):
            s1 = boundary_to(cell, "src", m - 1)
            t1 = boundary_to(cell, "tgt", m - 1)
            ss = boundary_to(s1, "src", m - 2)
            st = boundary_to(t1, "src", m - 2)
            ts = boundary_to(s1, "tgt", m - 2)
            tt = boundary_to(t1, "tgt", m - 2)
            if ss != st or ts != tt:
                witnesses.append(Witness(f"globular:dim{m}", cell, (ss, ts), (st, tt)))
        sections.append(CheckReport(f"globular:dim{m}",
                                    checked=len(gset.cells_at(m)),
                                    witnesses=witnesses))
    return merge_reports("globular", sections)


def globular_set_from_names(n, cells, src, tgt):
    """Build generator cells from name tables; reject non-globular data."""
    if len(cells) != n + 1:
        raise FileFormatError(f"expected {n + 1} cell layers, got {len(cells)}")
    if len(src) != n or len(tgt) != n:
        raise FileFormatError(f"expected {n} src and tgt maps, got {len(src)}/{len(tgt)}")
    layers = []
    for m, names in enumerate(cells):
        if len(set(names)) != len(names):
            raise FileFormatError(f"duplicate cell names in dimension {m}")
        layer = {}
        if m == 0:
            for name in names:
                layer[name] = GenCell(name, 0)
        else:
            below = layers[m - 1]
            for name in names:
                for mapping, label in ((src[m - 1], "src"), (tgt[m - 1], "tgt")):
                    if name not in mapping:
                        raise FileFormatError(f"cell {name!r} has no {label} at dimension {m}")
                    if mapping[name] not in below:
                        raise FileFormatError(
                            f"cell {name!r}: {label} {mapping[name]!r} is not a {m - 1}-cell")
                layer[name] = GenCell(name, m, below[src[m - 1][name]], below[tgt[m - 1][name]])
        layers.append(layer)
    gset = GlobularSet(n, [tuple(layer.values()) for layer in layers])
    report = validate_globular(gset)
    if not report.passed:
        bad = report.all_witnesses()[0].input
        raise FileFormatError(f"globularity fails at cell {bad!r}")
    return gset


def load_gset(source):
    """Load the structured text format: fields n, cells, src, tgt."""
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"not valid structured text: {exc}") from None
    else:
        data = source
    if not isinstance(data, dict):
        raise FileFormatError("top level must be a mapping")
    for field in ("n", "cells", "src", "tgt"):
        if field not in data:
            raise FileFormatError(f"missing field {field!r}")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise FileFormatError("field 'n' must be a non-negative integer")
    return globular_set_from_names(n, data["cells"], data["src"], data["tgt"])


class CompositionMonad:
    """The monad composing cells freely along one fixed dimension."""

    def __init__(self, i):
        self.i = i
        self.name = f"compose-along-{i}"

    def unit(self, cell):
        if cell.dim <= self.i:
            return cell
        return StringCell(self.i, cell.dim, (cell,))

    def mult(self, cell):
        i = self.i
        if cell.dim <= i:
            return cell
        if not isinstance(cell, StringCell) or cell.along != i:
            raise ShapeMismatch(f"mult along {i}: {cell} is not a string along {i}")
        if not cell.entries:
            return cell
        flat = []
        anchors = []
        for entry in cell.entries:
            if not isinstance(entry, StringCell) or entry.along != i:
                raise ShapeMismatch(f"mult along {i}: entry {entry} is not a string along {i}")
            flat.extend(entry.entries)
            if not entry.entries:
                anchors.append(entry.anchor)
        if not flat:
            if any(a != anchors[0] for a in anchors):
                raise ComposabilityError(
                    f"flattening identities with different anchors: {anchors}")
            return StringCell(i, cell.dim, (), anchors[0])
        for left, right in zip(flat, flat[1:]):
            if not composable(left, right, i):
                raise ComposabilityError(
                    f"flattened entries {left} and {right} do not meet along {i}")
        return StringCell(i, cell.dim, tuple(flat))

    def fmap(self, f, cell):
        if cell.dim <= self.i:
            return f(cell)
        if not isinstance(cell, StringCell) or cell.along != self.i:
            raise ShapeMismatch(f"fmap along {self.i}: {cell} is not a string along {self.i}")
        if not cell.entries:
            return StringCell(self.i, cell.dim, (), f(cell.anchor))
        return StringCell(self.i, cell.dim, tuple(f(e) for e in cell.entries))

    def apply(self, gset, bound):
        """All strings of length up to ``bound``, every dimension above ``i``."""
        i = self.i
        layers = [gset.cells_at(m) for m in range(0, min(i, gset.n) + 1)]
        for m in range(i + 1, gset.n + 1):
            cells = [StringCell(i, m, (), a) for a in gset.cells_at(i)]
            members = gset.cells_at(m)
            frontier = [(c,) for c in members]
            cells.extend(StringCell(i, m, chain) for chain in frontier)
            for _ in range(bound - 1):
                extended = []
                for chain in frontier:
                    tail = boundary_to(chain[-1], "tgt", i)
                    for c in members:
                        if boundary_to(c, "src", i) == tail:
                            extended.append(chain + (c,))
                cells.extend(StringCell(i, m, chain) for chain in extended)
                _guard_cells(len(cells))
                frontier = extended
            layers.append(cells)
        return GlobularSet(gset.n, layers)


def apply_ti(gset, i, bound):
    if not 0 <= i <= gset.n - 1:
        raise DimensionError(f"composition dimension {i} must be in 0..{gset.n - 1}")
    return CompositionMonad(i).apply(gset, bound)


def ti_unit(cell, i):
    return CompositionMonad(i).unit(cell)


def ti_mult(cell, i):
    return CompositionMonad(i).mult(cell)


def interchange_law(cell, i, j):
    """Transpose a string-along-``i`` of strings-along-``j`` (i > j).

    Boundary matching forces the inner strings to share one length, so
    the cell is a rectangular grid; the result nests the other way.
    Degenerate grids hand identities through via anchors.  A ragged
    input (only constructible by bypassing composability) is rejected:
    it is exactly the shape the opposite direction would need to handle.
    """
    if not i > j:
        raise IndexOrder(f"interchange needs i > j, got ({i},{j})")
    if cell.dim <= i:
        return cell
    if not isinstance(cell, StringCell) or cell.along != i:
        raise ShapeMismatch(f"interchange: {cell} is not a string along {i}")
    if not cell.entries:
        anchor = cell.anchor
        if not isinstance(anchor, StringCell) or anchor.along != j:
            raise ShapeMismatch(f"interchange: anchor {anchor} is not a string along {j}")
        if not anchor.entries:
            return StringCell(j, cell.dim, (), anchor.anchor)
        return StringCell(j, cell.dim,
                          tuple(StringCell(i, cell.dim, (), a) for a in anchor.entries))
    rows = []
    for entry in cell.entries:
        if not isinstance(entry, StringCell) or entry.along != j:
            raise ShapeMismatch(f"interchange: entry {entry} is not a string along {j}")
        rows.append(entry)
    lengths = {len(r.entries) for r in rows}
    if len(lengths) != 1:
        raise RaggedGrid(f"inner strings have lengths {sorted(lengths)}")
    width = lengths.pop()
    if width == 0:
        anchors = {r.anchor for r in rows}
        if len(anchors) != 1:
            raise ComposabilityError(f"stacked identities with different anchors")
        return StringCell(j, cell.dim, (), rows[0].anchor)
    columns = [StringCell(i, cell.dim, tuple(r.entries[col] for r in rows))
               for col in range(width)]
    return StringCell(j, cell.dim, tuple(columns))


def identity_cell(cell):
    """The identity one dimension up, inflated componentwise."""
    if isinstance(cell, StringCell):
        if not cell.entries:
            return StringCell(cell.along, cell.dim + 1, (), cell.anchor)
        return StringCell(cell.along, cell.dim + 1,
                          tuple(identity_cell(e) for e in cell.entries))
    return StringCell(cell.dim, cell.dim + 1, (), cell)


def identity_at(cell, dim):
    while cell.dim < dim:
        cell = identity_cell(cell)
    if cell.dim != dim:
        raise DimensionError(f"cannot lower {cell} to dimension {dim}")
    return cell


def padded_transpose_candidate(cell, i, j):
    """The would-be opposite interchange: pad short columns, then transpose.

    Given a string-along-``j`` of strings-along-``i`` whose heights vary,
    extend every column to the maximum height by appending identities on
    its target boundary, then transpose.  It typechecks, but it is not a
    distributive law; the adapted checker exhibits failing diagrams.
    """
    if not i > j:
        raise IndexOrder(f"padding candidate needs i > j, got ({i},{j})")
    if cell.dim <= i:
        return cell
    if not isinstance(cell, StringCell) or cell.along != j:
        raise ShapeMismatch(f"padding candidate: {cell} is not a string along {j}")
    if not cell.entries:
        return StringCell(i, cell.dim, (), StringCell(j, i, (), cell.anchor))
    columns = []
    for entry in cell.entries:
        if not isinstance(entry, StringCell) or entry.along != i:
            raise ShapeMismatch(f"padding candidate: entry {entry} is not a string along {i}")
        columns.append(entry)
    height = max(len(c.entries) for c in columns)
    if height == 0:
        anchors = tuple(c.anchor for c in columns)
        return StringCell(i, cell.dim, (), StringCell(j, i, anchors))
    padded = []
    for c in columns:
        pad = identity_at(boundary_to(c, "tgt", i), cell.dim)
        padded.append(c.entries + (pad,) * (height - len(c.entries)))
    rows = [StringCell(j, cell.dim, tuple(col[s] for col in padded))
            for s in range(height)]
    return StringCell(i, cell.dim, tuple(rows))


def free_ncat(gset, bound):
    """Free strict n-category: compose along n-1, then n-2, ..., then 0."""
    report = validate_globular(gset)
    if not report.passed:
        bad = report.all_witnesses()[0].input
        raise ShapeMismatch(f"input is not globular at {bad!r}")
    out = gset
    for i in range(gset.n - 1, -1, -1):
        out = CompositionMonad(i).apply(out, bound)
    return out


def _within_bounds(cell, bound):
    if isinstance(cell, StringCell):
        if len(cell.entries) > bound:
            return False
        if cell.entries:
            return all(_within_bounds(e, bound) for e in cell.entries)
        return _within_bounds(cell.anchor, bound)
    return True


def _embed(cell):
    """Fully nested singleton form of a generating cell."""
    out = cell
    for lay in range(cell.dim - 1, -1, -1):
        out = StringCell(lay, cell.dim, (out,))
    return out


def _compose_nested(a, b, i):
    """Concatenate two nested normal forms at layer ``i`` (zip above it)."""
    if not (isinstance(a, StringCell) and isinstance(b, StringCell)
            and a.along == b.along):
        raise ShapeMismatch(f"cannot compose {a} with {b}")
    j = a.along
    if j == i:
        if not a.entries:
            return b
        if not b.entries:
            return a
        return StringCell(i, a.dim, a.entries + b.entries)
    if not a.entries and not b.entries:
        return a
    if len(a.entries) != len(b.entries):
        raise ComposabilityError(f"layer-{j} lengths differ between {a} and {b}")
    return StringCell(j, a.dim,
                      tuple(_compose_nested(x, y, i) for x, y in zip(a.entries, b.entries)))


def _oracle_closure(gset, bound):
    """All formal composites of embedded generators and identities.

    Closure of the embedded cells under taking identities and binary
    composition along every dimension, keeping only normal forms whose
    string layers stay within the bound.  Composition is interpreted
    directly on normal forms: concatenation at the composition layer,
    entrywise descent above it.
    """
    members = {m: set() for m in range(gset.n + 1)}
    for m in range(gset.n + 1):
        for cell in gset.cells_at(m):
            members[m].add(_embed(cell))
    changed = True
    while changed:
        changed = False
        for m in range(gset.n):
            for cell in list(members[m]):
                ident = identity_cell(cell)
                if _within_bounds(ident, bound) and ident not in members[m + 1]:
                    members[m + 1].add(ident)
                    changed = True
        for m in range(1, gset.n + 1):
            current = list(members[m])
            for a in current:
                for b in current:
                    for i in range(m):
                        if boundary_to(a, "tgt", i) != boundary_to(b, "src", i):
                            continue
                        try:
                            combined = _compose_nested(a, b, i)
                        except ComposabilityError:
                            continue
                        if _within_bounds(combined, bound) and combined not in members[m]:
                            members[m].add(combined)
                            changed = True
            _guard_cells(len(members[m]))
    return members


def brute_force_oracle(gset, bound):
    """Per-dimension counts of distinct formal-composite normal forms."""
    members = _oracle_closure(gset, bound)
    return [len(members[m]) for m in range(gset.n + 1)]


def _all_cells(gset):
    return list(gset.all_cells())


def check_globular_monad_laws(i, gset, bound):
    """Unit and associativity of composition along ``i``, cellwise."""
    T = CompositionMonad(i)
    level1 = _all_cells(T.apply(gset, bound))
    level3 = _all_cells(T.apply(T.apply(T.apply(gset, bound), bound), bound))
    return merge_reports(f"globular-monad[{i}]", [
        compare(f"globular-monad[{i}]:unit-left", level1,
                lambda c: T.mult(T.unit(c)), lambda c: c),
        compare(f"globular-monad[{i}]:unit-right", level1,
                lambda c: T.mult(T.fmap(T.unit, c)), lambda c: c),
        compare(f"globular-monad[{i}]:assoc", level3,
                lambda c: T.mult(T.mult(c)),
                lambda c: T.mult(T.fmap(T.mult, c))),
    ])


def check_globular_distlaw(s_dim, t_dim, transform, gset, bound, title=None):
    """The four coherence diagrams for a cellwise law T_s∘T_t => T_t∘T_s."""
    S = CompositionMonad(s_dim)
    T = CompositionMonad(t_dim)
    tg = T.apply(gset, bound)
    sg = S.apply(gset, bound)
    sst = _all_cells(S.apply(S.apply(tg, bound), bound))
    stt = _all_cells(S.apply(T.apply(tg, bound), bound))
    title = title or f"globular-distlaw[{s_dim}over{t_dim}]"
    return merge_reports(title, [
        compare(f"{title}:unit-S", _all_cells(tg),
                lambda c: transform(S.unit(c)),
                lambda c: T.fmap(S.unit, c)),
        compare(f"{title}:mult-S", sst,
                lambda c: transform(S.mult(c)),
                lambda c: T.fmap(S.mult, transform(S.fmap(transform, c)))),
        compare(f"{title}:unit-T", _all_cells(sg),
                lambda c: transform(S.fmap(T.unit, c)),
                lambda c: T.unit(c)),
        compare(f"{title}:mult-T", stt,
                lambda c: transform(S.fmap(T.mult, c)),
                lambda c: T.mult(T.fmap(transform, transform(c)))),
    ])


def check_interchange(i, j, gset, bound):
    """Adapted law check for the interchange transposition (i > j)."""
    return check_globular_distlaw(
        i, j, lambda c: interchange_law(c, i, j), gset, bound,
        title=f"interchange[{i}over{j}]")


def check_globular_yang_baxter(i, j, k, gset, bound):
    """Hexagon for three composition monads, i > j > k, cellwise."""
    if not i > j > k:
        raise IndexOrder(f"need i > j > k, got ({i},{j},{k})")
    Ti, Tj, Tk = (CompositionMonad(d) for d in (i, j, k))
    lam_ij = lambda c: interchange_law(c, i, j)
    lam_ik = lambda c: interchange_law(c, i, k)
    lam_jk = lambda c: interchange_law(c, j, k)
    inputs = _all_cells(Ti.apply(Tj.apply(Tk.apply(gset, bound), bound), bound))

    def upper(c):
        return lam_jk(Tj.fmap(lam_ik, lam_ij(c)))

    def lower(c):
        return Tk.fmap(lam_ij, lam_ik(Ti.fmap(lam_jk, c)))

    return compare(f"globular-yang-baxter({i},{j},{k})", inputs, upper, lower)
