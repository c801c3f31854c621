"""Multi-coordinate skew shapes and their standard tableaux.

A shape is a finite collection of boxes spread over ``ell`` coordinates
(indexed by ``beta``).  Each connected component lives in one coordinate and
is stored as a set of cells ``(row, c)`` where ``c`` is the integer part of
the box content; the component's rational ``offset`` in ``[0, 1)`` is added
to ``c`` to obtain the actual content.  A cell ``(row, c)`` sits at grid
position ``x = c + row, y = row``, so content is ``x - y`` as usual and
sliding a component along its diagonal only renumbers rows.

Canonical form: every component has minimal row 1, offset in ``[0, 1)``
(the integer part of a supplied offset is folded into the cells), and the
component list is sorted by ``(beta, offset, cells)``.  Two components in
the same coordinate with equal offset interact: their content intervals
must be disjoint with gaps of at least 2, which is exactly the condition
for a simultaneous placement of all components whose union satisfies the
skew-closure condition.  ``joint_placement`` searches for such a placement
directly and is used both as the validator's final check and as an
independent oracle in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import fraction_from_str, fraction_to_str
from .errors import (DegenerateShape, EmptyShape, NotAPartition, NotConnected,
                     NotSkew, NotStandard)

Cell = tuple[int, int]  # (row, integer content part)


@dataclass(frozen=True)
class Component:
    beta: int
    offset: Fraction
    cells: tuple[Cell, ...]  # sorted by (row, c)

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def min_content(self) -> Fraction:
        return min(c for _, c in self.cells) + self.offset

    @property
    def max_content(self) -> Fraction:
        return max(c for _, c in self.cells) + self.offset

    def sort_key(self):
        return (self.beta, self.offset, self.cells)


@dataclass(frozen=True)
class SkewShapeL:
    ell: int
    components: tuple[Component, ...]

    @property
    def n(self) -> int:
        return sum(comp.size for comp in self.components)


@dataclass(frozen=True)
class Tableau:
    """A standard filling: labels[k][j] is the entry in the j-th cell of the
    k-th component (cells in their canonical sorted order)."""

    shape: SkewShapeL
    labels: tuple[tuple[int, ...], ...]

    def boxes(self) -> list[tuple[int, Cell]]:
        """boxes()[i-1] is the (component index, cell) holding label i."""
        out: list = [None] * self.shape.n
        for k, comp in enumerate(self.shape.components):
            for cell, lab in zip(comp.cells, self.labels[k]):
                out[lab - 1] = (k, cell)
        return out

    def entry(self, comp_index: int, cell: Cell) -> int:
        comp = self.shape.components[comp_index]
        return self.labels[comp_index][comp.cells.index(cell)]


@dataclass(frozen=True)
class Weight:
    a: tuple[Fraction, ...]
    b: tuple[int, ...]


# ---------------------------------------------------------------------------
# low-level lattice helpers

_NEIGHBOR_STEPS = ((0, 1), (0, -1), (-1, 1), (1, -1))  # right, left, up, down


def _points(cells) -> set[tuple[int, int]]:
    """Grid realization (x, y) of cells (row, c)."""
    return {(c + r, r) for r, c in cells}


def _closure_ok(points: set[tuple[int, int]]) -> bool:
    """Whole-rectangle condition: comparable pairs span filled rectangles."""
    for x1, y1 in points:
        for x2, y2 in points:
            k, l = x2 - x1, y2 - y1
            if k >= 0 and l >= 0 and (k or l):
                if (k + 1) * (l + 1) > len(points):
                    return False
                for xx in range(x1, x2 + 1):
                    for yy in range(y1, y2 + 1):
                        if (xx, yy) not in points:
                            return False
    return True


def _connected(cells: set[Cell]) -> bool:
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for dr, dc in _NEIGHBOR_STEPS:
            q = (r + dr, c + dc)
            if q in cells and q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(cells)


def _normalize_cells(cells) -> tuple[Cell, ...]:
    shift = 1 - min(r for r, _ in cells)
    return tuple(sorted((r + shift, c) for r, c in cells))


def _component_checked(ell: int, beta, offset, cells) -> Component:
    cells = {(int(r), int(c)) for r, c in cells}
    if not cells:
        raise EmptyShape("component with no cells")
    beta = int(beta)
    if not 0 <= beta < ell:
        raise NotSkew(f"coordinate {beta} out of range for ell={ell}")
    offset = Fraction(offset)
    whole = math.floor(offset)
    if whole:
        offset -= whole
        cells = {(r, c + whole) for r, c in cells}
    cells = set(_normalize_cells(cells))
    if not _closure_ok(_points(cells)):
        raise NotSkew(f"cells {sorted(cells)} violate skew closure")
    if not _connected(cells):
        raise NotConnected(f"cells {sorted(cells)} split into several parts")
    return Component(beta, offset, tuple(sorted(cells)))


def joint_placement(components) -> list[int] | None:
    """Search for row shifts placing all components simultaneously.

    The components are assumed to share a coordinate and a fractional
    offset.  Returns per-component row shifts such that the union of the
    shifted realizations satisfies skew closure and no two components touch,
    or None when no placement exists inside the (provably sufficient)
    search window.  Brute force by design: this is the oracle the faster
    interval-gap criterion is checked against.
    """
    comps = [list(c.cells) if isinstance(c, Component) else list(c) for c in components]
    if len(comps) <= 1:
        return [0] * len(comps)
    order = sorted(range(len(comps)), key=lambda i: min(c for _, c in comps[i]))
    spans = sum(max(r for r, _ in cc) - min(r for r, _ in cc) + 1 for cc in comps)
    allc = [c for cc in comps for _, c in cc]
    window = (max(allc) - min(allc)) + spans + 2
    shifts: list[int | None] = [None] * len(comps)
    shifts[order[0]] = 0
    placed = _points(comps[order[0]])

    def attempt(rank: int, placed: set) -> bool:
        if rank == len(order):
            return True
        idx = order[rank]
        for t in range(-window, window + 1):
            pts = _points((r + t, c) for r, c in comps[idx])
            union = placed | pts
            if len(union) != len(placed) + len(pts):
                continue
            if any((x + dx, y + dy) in placed
                   for x, y in pts
                   for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))):
                continue  # touching components would merge
            if not _closure_ok(union):
                continue
            shifts[idx] = t
            if attempt(rank + 1, union):
                return True
        return False

    if attempt(1, placed):
        return [s for s in shifts]  # type: ignore[misc]
    return None


def _check_coset_gaps(comps: list[Component]):
    """Same-coordinate, same-offset components must keep content gaps >= 2."""
    ivals = sorted((c.min_content, c.max_content) for c in comps)
    for (lo1, hi1), (lo2, hi2) in zip(ivals, ivals[1:]):
        if lo2 - hi1 < 2:
            raise DegenerateShape(
                f"content intervals [{lo1},{hi1}] and [{lo2},{hi2}] in one "
                f"coordinate are closer than 2")


def _assemble(ell: int, comps: list[Component]) -> SkewShapeL:
    if ell < 1:
        raise EmptyShape("ell must be at least 1")
    if not comps:
        raise EmptyShape("a shape needs at least one box")
    cosets: dict = {}
    for comp in comps:
        cosets.setdefault((comp.beta, comp.offset), []).append(comp)
    for group in cosets.values():
        if len(group) > 1:
            _check_coset_gaps(group)
            if joint_placement(group) is None:
                raise DegenerateShape(
                    "no simultaneous placement of same-coordinate components")
    return SkewShapeL(ell, tuple(sorted(comps, key=Component.sort_key)))


def validate_and_canonicalize(ell: int, components) -> SkewShapeL:
    """Check raw component data and return the canonical shape.

    Each entry of ``components`` is a Component or a ``(beta, offset, cells)``
    triple with cells ``(row, c)``.  Raises NotSkew / NotConnected /
    DegenerateShape / EmptyShape as appropriate.
    """
    comps = []
    for comp in components:
        if isinstance(comp, Component):
            beta, offset, cells = comp.beta, comp.offset, comp.cells
        else:
            beta, offset, cells = comp
        comps.append(_component_checked(ell, beta, offset, cells))
    return _assemble(ell, comps)


def shift_contents(shape: SkewShapeL, delta) -> SkewShapeL:
    """The same shape with every box content increased by delta."""
    delta = Fraction(delta)
    return validate_and_canonicalize(
        shape.ell,
        [(c.beta, c.offset + delta, c.cells) for c in shape.components])


# ---------------------------------------------------------------------------
# partitions

def partition_shape(ell: int, partitions) -> SkewShapeL:
    """Shape of a tuple of partitions, one per coordinate, each anchored with
    its corner box at content 0."""
    if len(partitions) != ell:
        raise NotAPartition(f"expected {ell} partitions, got {len(partitions)}")
    comps = []
    for beta, lam in enumerate(partitions):
        lam = [int(p) for p in lam]
        if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
            raise NotAPartition(f"{lam} is not weakly decreasing and positive")
        if not lam:
            continue
        cells = [(r + 1, x - (r + 1)) for r, row_len in enumerate(lam)
                 for x in range(1, row_len + 1)]
        comps.append(_component_checked(ell, beta, Fraction(0), cells))
    return _assemble(ell, comps)


def hook_dimension(ell: int, partitions) -> int:
    """Number of standard fillings of an ell-tuple of partitions, by the
    hook-product formula ``n! * prod(1/h_b)`` over all boxes."""
    lams = []
    for lam in partitions:
        lam = [int(p) for p in lam]
        if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
            raise NotAPartition(f"{lam} is not weakly decreasing and positive")
        lams.append(lam)
    if len(lams) != ell:
        raise NotAPartition(f"expected {ell} partitions, got {len(lams)}")
    n = sum(sum(lam) for lam in lams)
    if n == 0:
        raise EmptyShape("empty multipartition")
    dim = Fraction(math.factorial(n))
    for lam in lams:
        for r, row_len in enumerate(lam):
            for x in range(1, row_len + 1):
                arm = row_len - x
                leg = sum(1 for rr in range(r + 1, len(lam)) if lam[rr] >= x)
                dim /= arm + leg + 1
    assert dim.denominator == 1
    return int(dim)


# ---------------------------------------------------------------------------
# enumeration of integral shapes

@lru_cache(maxsize=None)
def _connected_classes(m: int) -> tuple[frozenset, ...]:
    """Connected skew cell-sets with m boxes, rows and contents anchored at
    (1, 0), grown one box at a time (removing the reading-maximal box of a
    connected skew shape keeps it connected and skew, so growth finds all)."""
    if m == 1:
        return (frozenset({(1, 0)}),)
    out = set()
    for smaller in _connected_classes(m - 1):
        for r, c in smaller:
            for dr, dc in _NEIGHBOR_STEPS:
                q = (r + dr, c + dc)
                if q in smaller:
                    continue
                cand = set(smaller) | {q}
                if not _closure_ok(_points(cand)):
                    continue
                rshift = 1 - min(rr for rr, _ in cand)
                cshift = -min(cc for _, cc in cand)
                out.add(frozenset((rr + rshift, cc + cshift) for rr, cc in cand))
    return tuple(sorted(out, key=sorted))


@lru_cache(maxsize=None)
def _one_coordinate_catalog(m: int, window: int) -> tuple[tuple[tuple[int, frozenset], ...], ...]:
    """All ways to fill one coordinate with m boxes: tuples of
    (content_anchor, connected class), anchors ascending starting at 0,
    consecutive content gaps >= 2, max content <= window."""
    if m == 0:
        return ((),)

    def rec(remaining: int, min_anchor: int, first: bool):
        if remaining == 0:
            yield ()
            return
        for size in range(1, remaining + 1):
            for cls in _connected_classes(size):
                span = max(c for _, c in cls) + 1
                anchors = [0] if first else range(min_anchor, window - span + 2)
                for a in anchors:
                    if a + span - 1 > window:
                        continue
                    for rest in rec(remaining - size, a + span + 1, False):
                        yield ((a, cls),) + rest

    return tuple(rec(m, 0, True))


@lru_cache(maxsize=None)
def enumerate_shapes(ell: int, n: int, window: int) -> tuple[SkewShapeL, ...]:
    """Deterministic corpus of integral shapes with n boxes and offset 0.

    Representatives are anchored: in every nonempty coordinate the minimal
    content is 0, and all contents lie in [0, window].  Shapes differing only
    by sliding whole coordinates along the diagonal are thus enumerated once.
    """
    if n < 1:
        raise EmptyShape("n must be positive")

    def rec(beta: int, remaining: int):
        if beta == ell:
            if remaining == 0:
                yield []
            return
        for m in range(remaining + 1):
            for fill in _one_coordinate_catalog(m, window):
                comps = [
                    Component(beta, Fraction(0),
                              tuple(sorted((r, c + anchor) for r, c in cls)))
                    for anchor, cls in fill
                ]
                for rest in rec(beta + 1, remaining - m):
                    yield comps + rest

    shapes = [_assemble(ell, comps) for comps in rec(0, n) if comps]
    shapes.sort(key=lambda s: tuple(c.sort_key() for c in s.components))
    return tuple(shapes)


# ---------------------------------------------------------------------------
# tableaux

def _reading_boxes(shape: SkewShapeL) -> list[tuple[int, Cell]]:
    """All boxes in reading order: by component, then row, then left-to-right."""
    return [(k, cell) for k, comp in enumerate(shape.components)
            for cell in sorted(comp.cells)]


class _ShapeContext:
    """Precomputed combinatorial data for one shape.

    boxes are indexed in reading order; preds[b] lists box indices that must
    carry smaller labels (left and upper neighbors inside the component);
    blocked[b] is the set of boxes whose label may not be swapped with b's
    when the labels are consecutive (row/column neighbors in the component).
    """

    def __init__(self, shape: SkewShapeL):
        self.shape = shape
        self.boxes = _reading_boxes(shape)
        index = {box: i for i, box in enumerate(self.boxes)}
        n = len(self.boxes)
        self.preds = [[] for _ in range(n)]
        self.blocked = [set() for _ in range(n)]
        self.rank = []  # (component, row) used for "strictly above" tests
        for i, (k, (r, c)) in enumerate(self.boxes):
            self.rank.append((k, r))
            for q in ((k, (r, c - 1)), (k, (r - 1, c + 1))):
                if q in index:
                    self.preds[i].append(index[q])
            for q in ((k, (r, c + 1)), (k, (r, c - 1)),
                      (k, (r - 1, c + 1)), (k, (r + 1, c - 1))):
                if q in index:
                    self.blocked[i].add(index[q])

    def above(self, b1: int, b2: int) -> bool:
        """Is box b1 strictly above box b2 (cross-component: earlier wins)?"""
        k1, r1 = self.rank[b1]
        k2, r2 = self.rank[b2]
        return k1 < k2 or (k1 == k2 and r1 < r2)

    def positions_of(self, tab: Tableau) -> tuple[int, ...]:
        index = {box: i for i, box in enumerate(self.boxes)}
        return tuple(index[box] for box in tab.boxes())

    def tableau_from_positions(self, pos) -> Tableau:
        labels = [[0] * comp.size for comp in self.shape.components]
        cell_slot = {}
        for k, comp in enumerate(self.shape.components):
            for j, cell in enumerate(comp.cells):
                cell_slot[(k, cell)] = j
        for lab0, b in enumerate(pos):
            k, cell = self.boxes[b]
            labels[k][cell_slot[(k, cell)]] = lab0 + 1
        return Tableau(self.shape, tuple(tuple(row) for row in labels))

    def standard_positions(self, pos) -> bool:
        place = {b: i for i, b in enumerate(pos)}
        return all(place[p] < place[b] for b in pos for p in self.preds[b])

    def all_positions(self) -> list[tuple[int, ...]]:
        """Every standard filling as a label->box tuple, lexicographic."""
        n = len(self.boxes)
        indeg = [len(self.preds[b]) for b in range(n)]
        succs = [[] for _ in range(n)]
        for b in range(n):
            for p in self.preds[b]:
                succs[p].append(b)
        out = []
        pos = []

        def rec():
            if len(pos) == n:
                out.append(tuple(pos))
                return
            for b in range(n):
                if indeg[b] == 0:
                    indeg[b] = -1
                    for s in succs[b]:
                        indeg[s] -= 1
                    pos.append(b)
                    rec()
                    pos.pop()
                    for s in succs[b]:
                        indeg[s] += 1
                    indeg[b] = 0

        rec()
        return out


@lru_cache(maxsize=None)
def _context(shape: SkewShapeL) -> _ShapeContext:
    return _ShapeContext(shape)


@lru_cache(maxsize=None)
def enumerate_syt(shape: SkewShapeL) -> tuple[Tableau, ...]:
    """All standard fillings, deterministically ordered; the first one is the
    row-reading tableau."""
    ctx = _context(shape)
    return tuple(ctx.tableau_from_positions(p) for p in ctx.all_positions())


def row_reading_tableau(shape: SkewShapeL) -> Tableau:
    """Labels assigned along reading order (component, then row, then left
    to right); always standard."""
    ctx = _context(shape)
    return ctx.tableau_from_positions(tuple(range(shape.n)))


def is_standard(tab: Tableau) -> bool:
    ctx = _context(tab.shape)
    return ctx.standard_positions(ctx.positions_of(tab))


def weight_of(tab: Tableau) -> Weight:
    """Eigenvalue data of a filling: a_i = ell * content, b_i = coordinate of
    the box holding label i."""
    ell = tab.shape.ell
    a, b = [], []
    for k, cell in tab.boxes():
        comp = tab.shape.components[k]
        a.append(ell * (cell[1] + comp.offset))
        b.append(comp.beta)
    return Weight(tuple(a), tuple(b))


def inversion_set(tab: Tableau) -> frozenset[tuple[int, int]]:
    """Pairs (i, j), i < j, whose boxes appear in reversed vertical order:
    the box of j strictly above the box of i (components compared by their
    canonical reading order)."""
    ctx = _context(tab.shape)
    pos = ctx.positions_of(tab)
    n = len(pos)
    return frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
                     if ctx.above(pos[j], pos[i]))


def apply_transposition(tab: Tableau, i: int) -> Tableau:
    """Swap labels i and i+1; NotStandard if they are row- or
    column-adjacent in one component."""
    n = tab.shape.n
    if not 1 <= i <= n - 1:
        raise IndexError(f"transposition index {i} out of range")
    ctx = _context(tab.shape)
    pos = list(ctx.positions_of(tab))
    b1, b2 = pos[i - 1], pos[i]
    if b2 in ctx.blocked[b1]:
        raise NotStandard(f"labels {i} and {i + 1} are adjacent in a row or column")
    pos[i - 1], pos[i] = b2, b1
    return ctx.tableau_from_positions(tuple(pos))


def _descent_path_to_reading(ctx: _ShapeContext, pos: tuple[int, ...]) -> list[int]:
    """Adjacent swaps carrying pos to the row-reading filling, smallest
    applicable index first; each swap removes exactly one inversion."""
    pos = list(pos)
    moves = []
    n = len(pos)
    while True:
        for i in range(1, n):
            if ctx.above(pos[i], pos[i - 1]):
                pos[i - 1], pos[i] = pos[i], pos[i - 1]
                moves.append(i)
                break
        else:
            break
    assert pos == list(range(n)), "reduction did not reach the reading tableau"
    return moves


def tableau_path(t1: Tableau, t2: Tableau) -> list[int]:
    """A sequence of adjacent transpositions carrying t1 to t2 through
    standard fillings only; empty exactly when t1 == t2."""
    if t1.shape != t2.shape:
        raise ValueError("tableaux live on different shapes")
    if t1 == t2:
        return []
    ctx = _context(t1.shape)
    down = _descent_path_to_reading(ctx, ctx.positions_of(t1))
    up = _descent_path_to_reading(ctx, ctx.positions_of(t2))
    return down + list(reversed(up))


# ---------------------------------------------------------------------------
# serialization

def shape_to_json(shape: SkewShapeL) -> dict:
    return {
        "ell": shape.ell,
        "components": [
            {"beta": c.beta, "offset": fraction_to_str(c.offset),
             "cells": [[r, cc] for r, cc in c.cells]}
            for c in shape.components
        ],
    }


def shape_from_json(data: dict) -> SkewShapeL:
    return validate_and_canonicalize(
        int(data["ell"]),
        [(comp["beta"], fraction_from_str(comp["offset"]),
          [tuple(cell) for cell in comp["cells"]])
         for comp in data["components"]])


def tableau_to_json(tab: Tableau) -> dict:
    data = shape_to_json(tab.shape)
    entries = []
    for k, comp in enumerate(tab.shape.components):
        for cell, lab in zip(comp.cells, tab.labels[k]):
            entries.append([cell[0], cell[1], k, lab])
    entries.sort(key=lambda e: e[3])
    data["entries"] = entries
    return data


def tableau_from_json(data: dict) -> Tableau:
    shape = shape_from_json(data)
    labels = [[0] * comp.size for comp in shape.components]
    seen = set()
    for r, c, k, lab in data["entries"]:
        comp = shape.components[k]
        labels[k][comp.cells.index((r, c))] = int(lab)
        seen.add(int(lab))
    if seen != set(range(1, shape.n + 1)):
        raise NotStandard("entries are not a bijection onto 1..n")
    tab = Tableau(shape, tuple(tuple(row) for row in labels))
    if not is_standard(tab):
        raise NotStandard("entries do not increase along rows and columns")
    return tab


def weight_to_json(weight: Weight, ell: int) -> dict:
    return {"ell": ell,
            "a": [fraction_to_str(x) for x in weight.a],
            "b": list(weight.b)}


def weight_from_json(data: dict) -> tuple[Weight, int]:
    ell = int(data["ell"])
    a = tuple(fraction_from_str(x) for x in data["a"])
    b = tuple(int(x) % ell for x in data["b"])
    if len(a) != len(b):
        raise ValueError("weight lists have different lengths")
    return Weight(a, b), ell
