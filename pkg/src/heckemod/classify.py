"""Weight classification: decide which joint eigenvalue lists arise from
standard tableaux and rebuild the unique shape/tableau pair.

A weight is a pair of lists (a_1..a_n, b_1..b_n): rational u-eigenvalues and
color exponents.  ``check_weight_condition`` tests the pairwise criterion
(equal entries need intermediate +ell and -ell steps in the same color
class), ``reconstruct`` replays the weight box by box, growing components per
(color, fractional content) group, merging components when a new box pulls
their content intervals within touching distance.  Boxes in different groups
never interact, so each group is rebuilt independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cyclo import fraction_to_str
from .errors import ConditionFailed, NoAddablePosition
from .modules import RelationCheck, VerificationReport
from .shapes import (SkewShapeL, Tableau, Weight, _closure_ok, _connected,
                     _points, enumerate_syt, is_standard,
                     validate_and_canonicalize, weight_of)

ADJACENT_EQUAL = "AdjacentEqual"
MISSING_UP = "MissingUpStep"
MISSING_DOWN = "MissingDownStep"


@dataclass(frozen=True)
class ConditionViolation:
    """Witness of a failed weight condition at the 1-based pair (i, j):
    equal entries with nothing usable strictly between.  For the two Missing
    kinds, ``required_a`` records the absent intermediate u-eigenvalue."""

    kind: str
    i: int
    j: int
    required_a: Fraction | None = None

    def to_json(self) -> dict:
        data = {"kind": self.kind, "i": self.i, "j": self.j}
        if self.required_a is not None:
            data["required_a"] = fraction_to_str(self.required_a)
        return data


def _normalize_weight(w: Weight, ell: int) -> Weight:
    if len(w.a) != len(w.b):
        raise ValueError("weight lists have different lengths")
    return Weight(tuple(Fraction(x) for x in w.a),
                  tuple(int(x) % ell for x in w.b))


def check_weight_condition(w: Weight, ell: int) -> ConditionViolation | None:
    """First violation of the pairwise condition, or None when it holds.

    For every i < j with a_i = a_j and b_i = b_j there must exist k and m
    strictly between with the same color, a_k = a_i + ell and a_m = a_i - ell.
    A pair at adjacent positions can have neither and gets its own kind.
    """
    w = _normalize_weight(w, ell)
    n = len(w.a)
    for i in range(n):
        for j in range(i + 1, n):
            if w.a[i] != w.a[j] or w.b[i] != w.b[j]:
                continue
            if j == i + 1:
                return ConditionViolation(ADJACENT_EQUAL, i + 1, j + 1)
            between = [k for k in range(i + 1, j) if w.b[k] == w.b[i]]
            if not any(w.a[k] == w.a[i] + ell for k in between):
                return ConditionViolation(MISSING_UP, i + 1, j + 1, w.a[i] + ell)
            if not any(w.a[k] == w.a[i] - ell for k in between):
                return ConditionViolation(MISSING_DOWN, i + 1, j + 1, w.a[i] - ell)
    return None


def violation_holds(w: Weight, ell: int, violation: ConditionViolation) -> bool:
    """Re-check a reported violation against the weight it came from."""
    w = _normalize_weight(w, ell)
    i, j = violation.i - 1, violation.j - 1
    if not (0 <= i < j < len(w.a)):
        return False
    if w.a[i] != w.a[j] or w.b[i] != w.b[j]:
        return False
    if violation.kind == ADJACENT_EQUAL:
        return j == i + 1
    if violation.kind == MISSING_UP:
        expected = w.a[i] + ell
    elif violation.kind == MISSING_DOWN:
        expected = w.a[i] - ell
    else:
        return False
    if violation.required_a != expected:
        return False
    return not any(w.a[k] == expected and w.b[k] == w.b[i]
                   for k in range(i + 1, j))


# ---------------------------------------------------------------------------
# reconstruction

Cell = tuple[int, int]
State = tuple[dict, ...]  # per-component {cell: label}


def _interval(comp: dict) -> tuple[int, int]:
    cs = [c for _, c in comp]
    return min(cs), max(cs)


def _normalize_comp(comp: dict) -> dict:
    shift = 1 - min(r for r, _ in comp)
    return {(r + shift, c): lab for (r, c), lab in comp.items()}


def _comp_key(comp: dict):
    comp = _normalize_comp(comp)
    return tuple(sorted((r, c, lab) for (r, c), lab in comp.items()))


def _state_key(comps) -> tuple:
    return tuple(sorted(_comp_key(c) for c in comps))


def _labels_standard(comp: dict) -> bool:
    for (r, c), lab in comp.items():
        right = comp.get((r, c + 1))
        below = comp.get((r + 1, c - 1))
        if (right is not None and right < lab) or (below is not None and below < lab):
            return False
    return True


def _attach_cells(comp: dict, m: int) -> list[Cell]:
    """Cells of integer content m where a new maximal label can extend the
    component: edge-adjacent, closure preserved, no smaller label to the
    right or below."""
    out = []
    cells = set(comp)
    candidates = set()
    for r, c in cells:
        for q in ((r, c + 1), (r, c - 1), (r - 1, c + 1), (r + 1, c - 1)):
            if q not in cells and q[1] == m:
                candidates.add(q)
    for q in sorted(candidates):
        if (q[0], q[1] + 1) in cells or (q[0] + 1, q[1] - 1) in cells:
            continue
        if _closure_ok(_points(cells | {q})):
            out.append(q)
    return out


def _resolve_merges(grown: dict, others: list[dict]) -> list[list[dict]]:
    """All group states extending ``grown``: components whose content
    intervals now touch it (gap < 2, transitively) must fold into one
    connected component at some vertical shift; the rest stay put."""
    lo, hi = _interval(grown)
    cluster: list[dict] = []
    separate = list(others)
    changed = True
    while changed:
        changed = False
        for comp in separate[:]:
            clo, chi = _interval(comp)
            if not (chi <= lo - 2 or clo >= hi + 2):
                cluster.append(comp)
                separate.remove(comp)
                lo, hi = min(lo, clo), max(hi, chi)
                changed = True
    if not cluster:
        return [separate + [grown]]

    span = (max(r for r, _ in grown)
            + sum(max(r for r, _ in c) - min(r for r, _ in c) + 1 for c in cluster) + 1)
    out = []
    for shifts in product(range(-span, span + 1), repeat=len(cluster)):
        union = dict(grown)
        ok = True
        for comp, t in zip(cluster, shifts):
            for (r, c), lab in comp.items():
                q = (r + t, c)
                if q in union:
                    ok = False
                    break
                union[q] = lab
            if not ok:
                break
        if not ok:
            continue
        cells = set(union)
        if not _connected(cells) or not _closure_ok(_points(cells)):
            continue
        if not _labels_standard(union):
            continue
        out.append(separate + [union])
    return out


def _placements(comps: list[dict], m: int, label: int) -> list[tuple[str, list[dict]]]:
    out = []
    if all(m <= lo - 2 or m >= hi + 2 for lo, hi in map(_interval, comps)):
        out.append(("fresh", comps + [{(1, m): label}]))
    for idx, comp in enumerate(comps):
        others = comps[:idx] + comps[idx + 1:]
        for q in _attach_cells(comp, m):
            grown = dict(comp)
            grown[q] = label
            for state in _resolve_merges(grown, others):
                out.append(("attach", state))
    return out


def reconstruct(w: Weight, ell: int) -> tuple[SkewShapeL, Tableau]:
    """Rebuild the unique (shape, tableau) with the given weight.

    Grows one box per index: content a_i/ell in coordinate b_i, placed at the
    single legal position (attachment preferred over a fresh component,
    canonically least state on ties).  Raises ConditionFailed when the
    pairwise condition fails, NoAddablePosition when no placement is legal.
    """
    violation = check_weight_condition(w, ell)
    if violation is not None:
        raise ConditionFailed(violation)
    w = _normalize_weight(w, ell)

    groups: dict[tuple[int, Fraction], list[dict]] = {}
    for i, (a, b) in enumerate(zip(w.a, w.b), start=1):
        content = a / ell
        m = math.floor(content)
        key = (b, content - m)
        comps = groups.setdefault(key, [])
        candidates = _placements(comps, m, i)
        if not candidates:
            raise NoAddablePosition(
                f"label {i}: no legal box of content {content} in coordinate {b}")
        attachments = {_state_key(st): st for kind, st in candidates if kind == "attach"}
        pool = attachments or {_state_key(st): st
                               for kind, st in candidates if kind == "fresh"}
        chosen = pool[min(pool)]
        groups[key] = [_normalize_comp(c) for c in chosen]

    labeled = []
    for (b, frac), comps in groups.items():
        for comp in comps:
            cells = tuple(sorted(comp))
            labels = tuple(comp[cell] for cell in cells)
            labeled.append((b, frac, cells, labels))
    labeled.sort()
    shape = validate_and_canonicalize(ell, [(b, f, cells) for b, f, cells, _ in labeled])
    remaining = list(labeled)
    tab_labels = []
    for comp in shape.components:
        for idx, (b, f, cells, labels) in enumerate(remaining):
            if (b, f, cells) == (comp.beta, comp.offset, comp.cells):
                tab_labels.append(labels)
                del remaining[idx]
                break
        else:  # pragma: no cover - canonicalization preserves components
            raise AssertionError("component lost during canonicalization")
    tableau = Tableau(shape, tuple(tab_labels))
    assert is_standard(tableau)
    assert weight_of(tableau) == w
    return shape, tableau


def is_isomorphic(d1: SkewShapeL, d2: SkewShapeL) -> bool:
    """Modules of canonical shapes are isomorphic exactly when the shapes
    coincide (diagonal slides are already quotiented out)."""
    return d1 == d2


def classify_roundtrip(shape: SkewShapeL) -> VerificationReport:
    """For every standard tableau of the shape: the weight passes the
    condition and reconstructs to exactly this (shape, tableau)."""
    checks = []
    for t_index, tab in enumerate(enumerate_syt(shape), start=1):
        name = f"T{t_index}"
        w = weight_of(tab)
        violation = check_weight_condition(w, shape.ell)
        if violation is not None:
            checks.append(RelationCheck(name, False,
                                        (t_index, 0, f"condition: {violation}")))
            continue
        try:
            shape2, tab2 = reconstruct(w, shape.ell)
        except (ConditionFailed, NoAddablePosition) as exc:
            checks.append(RelationCheck(name, False, (t_index, 0, repr(exc))))
            continue
        if is_isomorphic(shape, shape2) and tab2 == tab:
            checks.append(RelationCheck(name, True))
        else:
            checks.append(RelationCheck(name, False,
                                        (t_index, 0, "reconstructed a different pair")))
    return VerificationReport(tuple(checks))
