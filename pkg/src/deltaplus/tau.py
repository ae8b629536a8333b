"""Exact computation of the triangle operation on step functions.

For step functions f and g the plane splits into finitely many half-open
cells ]a, a'] x ]b, b'] on which T(f(u), g(v)) is constant.  The primary
output is the left-continuous regularization

    h(x) = sup{ T(f(u), g(v)) : L(u, v) < x }        (finite x; h(inf) = 1)

computed by the corner rule: for a continuous increasing L, the infimum of
L over a half-open cell is its value at the closed lower corner, so a cell
reaches below x exactly when its lower-corner image does.  The result is
again a step function whose jumps sit at corner images.

The raw (unregularized) pointwise value sup{ ... : L(u, v) = x } is kept
as a diagnostic: the two coincide exactly when the pair (T, L) yields a
genuine triangle operation, and a raw/regularized gap is a concrete
counterexample.  Deciding whether x lies in the image of L over a
half-open cell needs care on value plateaus: the lower-corner value is
attained inside the cell either when L is constant on the whole cell or
when a plateau touches the corner with room to move in both coordinates
(the truncated ordinal sum does this); descriptors carry an exact
predicate for the latter.

The drastic conorm is the one catalog entry the corner rule cannot serve
(it is discontinuous off the axes); a dedicated branch handles it: every
cell off the axes maps to infinity, and on the axes one argument is zero,
so the regularized output collapses to the step at infinity.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .ddf import DDF, EPS_INF, canonicalize, last_jump_to_one
from .rationals import (
    EXT_INF,
    EXT_ZERO,
    UNIT_ONE,
    UNIT_ZERO,
    ExtRat,
    UnitRat,
)
from .tconorms import TConormDesc
from .tnorms import TNormDesc


class UnsupportedPairError(ValueError):
    """The conorm lacks the continuity the corner rule requires."""


@dataclass(frozen=True)
class RectangleGrid:
    """Finite carrier for the supremum: band cut points and cell values.

    ``values_f[i]`` is f's constant value on ]cuts_f[i], cuts_f[i+1]]
    (the last band is unbounded); ``cell_values[i][j] = T(f_i, g_j)``.
    Cell (i, j) has closed lower corner (cuts_f[i], cuts_g[j]).
    """

    cuts_f: tuple[ExtRat, ...]
    cuts_g: tuple[ExtRat, ...]
    values_f: tuple[UnitRat, ...]
    values_g: tuple[UnitRat, ...]
    cell_values: tuple[tuple[UnitRat, ...], ...]


def _band_decomposition(f: DDF) -> tuple[tuple[ExtRat, ...], tuple[UnitRat, ...]]:
    cuts = [EXT_ZERO]
    cuts.extend(x for x in f.breakpoints if x > EXT_ZERO)
    values = [f.value_at(cuts[i + 1]) for i in range(len(cuts) - 1)]
    values.append(f.value_at(ExtRat(cuts[-1].finite + 1)))
    return tuple(cuts), tuple(values)


def build_grid(t: TNormDesc, f: DDF, g: DDF) -> RectangleGrid:
    cuts_f, values_f = _band_decomposition(f)
    cuts_g, values_g = _band_decomposition(g)
    cells = tuple(
        tuple(t(fv, gv) for gv in values_g) for fv in values_f
    )
    return RectangleGrid(cuts_f, cuts_g, values_f, values_g, cells)


def _require_supported(l: TConormDesc) -> None:
    if l.name == "drastic":
        return
    if l.declared is None or not l.declared.is_continuous:
        raise UnsupportedPairError(
            f"conorm {l.spec} is not known to be continuous; the corner rule"
            " does not apply"
        )


def tau(t: TNormDesc, l: TConormDesc, f: DDF, g: DDF) -> DDF:
    """The regularized triangle operation, exact on step functions."""
    _require_supported(l)
    if l.name == "drastic":
        # Off the axes L is infinite; on the axes one factor evaluates to
        # f(0) = 0 or g(0) = 0, so nothing reaches any finite level.
        return EPS_INF
    grid = build_grid(t, f, g)
    jumps = []
    for i, a in enumerate(grid.cuts_f):
        row = grid.cell_values[i]
        for j, b in enumerate(grid.cuts_g):
            value = row[j]
            if value == UNIT_ZERO:
                continue
            corner = l(a, b)
            if not corner.is_infinite:
                jumps.append((corner, value))
    return canonicalize(jumps)


def corner_images(l: TConormDesc, f: DDF, g: DDF) -> list[ExtRat]:
    """Sorted finite images of the grid's lower corners under L."""
    if l.name == "drastic":
        cuts_f, _ = _band_decomposition(f)
        cuts_g, _ = _band_decomposition(g)
        images = {b for b in cuts_g} | {a for a in cuts_f}
        return sorted(images, key=lambda e: e.finite)
    cuts_f, _ = _band_decomposition(f)
    cuts_g, _ = _band_decomposition(g)
    images = set()
    for a in cuts_f:
        for b in cuts_g:
            c = l(a, b)
            if not c.is_infinite:
                images.add(c)
    return sorted(images, key=lambda e: e.finite)


def probe_abscissae(l: TConormDesc, f: DDF, g: DDF) -> list[ExtRat]:
    """Corner images, midpoints between consecutive ones, and one beyond."""
    corners = corner_images(l, f, g)
    keys = sorted({c.finite for c in corners} | {Fraction(0)})
    probes = [keys[0]]
    for lo, hi in zip(keys, keys[1:]):
        probes.append((lo + hi) / 2)
        probes.append(hi)
    probes.append(keys[-1] + 1)
    return [ExtRat(q) for q in probes]


def tau_raw_at(t: TNormDesc, l: TConormDesc, f: DDF, g: DDF, x: ExtRat) -> UnitRat:
    """The definitional supremum over { L(u,v) = x }, evaluated exactly.

    A cell contributes when x lies in the image of L over the half-open
    cell: always for x in ]m, M] with m, M the closed-corner values, and
    at x = m exactly when L is constant on the cell or its plateau enters
    the cell interior.
    """
    _require_supported(l)
    if x.is_infinite:
        return UNIT_ONE
    if x == EXT_ZERO:
        return UNIT_ZERO
    if l.name == "drastic":
        # L(u, v) = x finite forces one coordinate to 0 and the other to x.
        return max(
            t(f.value_at(x), g.value_at(EXT_ZERO)),
            t(f.value_at(EXT_ZERO), g.value_at(x)),
            key=lambda p: p.value,
        )
    grid = build_grid(t, f, g)
    nf, ng = len(grid.cuts_f), len(grid.cuts_g)
    best = UNIT_ZERO
    for i, a in enumerate(grid.cuts_f):
        a_hi = grid.cuts_f[i + 1] if i + 1 < nf else EXT_INF
        row = grid.cell_values[i]
        for j, b in enumerate(grid.cuts_g):
            value = row[j]
            if value.value <= best.value:
                continue
            b_hi = grid.cuts_g[j + 1] if j + 1 < ng else EXT_INF
            m = l(a, b)
            if m < x:
                hi = l(a_hi, b_hi)
                if x <= hi:
                    best = value
            elif m == x:
                if l(a_hi, b_hi) == m:
                    best = value
                elif l.cell_inf_attained is not None and l.cell_inf_attained(
                    a, b, a_hi, b_hi
                ):
                    best = value
    return best


def tau_d_closed_form(f: DDF, g: DDF) -> DDF:
    """Triangle operation for the drastic t-norm with addition, in closed
    form: each function shifted by the other's time-to-certainty, then the
    pointwise maximum."""
    shift_f = last_jump_to_one(g)
    shift_g = last_jump_to_one(f)
    jumps = []
    if not shift_f.is_infinite:
        jumps.extend((x + shift_f, p) for x, p in f.jumps)
    if not shift_g.is_infinite:
        jumps.extend((x + shift_g, p) for x, p in g.jumps)
    return canonicalize(jumps)


def level_split_witness(
    t: TNormDesc, l: TConormDesc, f: DDF, g: DDF, y: ExtRat, x: ExtRat
) -> tuple[ExtRat, ExtRat]:
    """A pair (u, v) with L(u, v) = x and T(f(u), g(v)) >= tau(f, g)(y).

    Requires 0 < y < x and an Archimedean catalog conorm with an exact
    level-set solver (plus, nilpotent_rat).  The pair is located inside
    the cell whose value realizes the regularized level at y: u moves a
    little past the cell's lower edge and v solves L(u, v) = x, shrinking
    the step until v clears the cell's other lower edge.
    """
    if not (EXT_ZERO < y < x):
        raise ValueError("need 0 < y < x")
    if l.solve_second is None or l.declared is None or not l.declared.is_archimedean:
        raise ValueError(f"conorm {l.spec} has no exact level-set solver")
    if x.is_infinite:
        return EXT_INF, EXT_INF
    grid = build_grid(t, f, g)
    nf = len(grid.cuts_f)
    best: tuple[UnitRat, ExtRat, ExtRat, ExtRat] | None = None
    for i, a in enumerate(grid.cuts_f):
        a_hi = grid.cuts_f[i + 1] if i + 1 < nf else EXT_INF
        row = grid.cell_values[i]
        for j, b in enumerate(grid.cuts_g):
            corner = l(a, b)
            if corner < y and (best is None or row[j].value > best[0].value):
                best = (row[j], a, b, a_hi)
    assert best is not None  # the (0, 0) corner is always below y
    _, a, b, a_hi = best
    m = l(a, b)
    width = None if a_hi.is_infinite else a_hi.finite - a.finite
    delta = (x.finite - m.finite) / 2
    if width is not None and width < delta * 2:
        delta = width / 2
    while True:
        u = ExtRat(a.finite + delta)
        v = l.solve_second(u, x)
        if v > b:
            return u, v
        delta /= 2


def _oracle_probes(f: DDF) -> list[Fraction]:
    xs = [x.finite for x in f.breakpoints]
    seq = sorted({Fraction(0)} | set(xs))
    points = set(seq)
    points.update((lo + hi) / 2 for lo, hi in zip(seq, seq[1:]))
    points.add(seq[-1] + 1)
    return sorted(points)


def _floor_cut(xs: list[Fraction], u: Fraction) -> Fraction:
    # Largest element of {0} + breakpoints strictly below u.
    i = bisect_right(xs, u) - 1
    while i >= 0 and xs[i] >= u:
        i -= 1
    return xs[i] if i >= 0 else Fraction(0)


def oracle_contributions(
    t: TNormDesc, l: TConormDesc, f: DDF, g: DDF
) -> list[tuple[ExtRat, UnitRat]]:
    """Probe-pair contributions for the grid oracle.

    Each finite probe pair (u, v) yields the honest pointwise value
    T(f(u), g(v)) keyed by the infimum of L over the probe's cell, which
    for a continuous L is the image of the cell's closed lower corner (for
    the drastic conorm no cell off the axes reaches any finite level).
    The oracle answer at x is the largest value whose key lies below x.
    """
    if l.name == "drastic":
        # Every cell off the axes maps to infinity; no finite level is
        # reached from any probe pair.
        return []
    xs_f = sorted(x.finite for x in f.breakpoints)
    xs_g = sorted(x.finite for x in g.breakpoints)
    f_side = [
        (f.value_at(ExtRat(u)), ExtRat(_floor_cut(xs_f, u))) for u in _oracle_probes(f)
    ]
    g_side = [
        (g.value_at(ExtRat(v)), ExtRat(_floor_cut(xs_g, v))) for v in _oracle_probes(g)
    ]
    pairs: list[tuple[ExtRat, UnitRat]] = []
    for fu, floor_u in f_side:
        for gv, floor_v in g_side:
            reach = l(floor_u, floor_v)
            if not reach.is_infinite:
                pairs.append((reach, t(fu, gv)))
    return pairs


def grid_oracle_tau_at(
    t: TNormDesc, l: TConormDesc, f: DDF, g: DDF, x: ExtRat
) -> UnitRat:
    """Independent oracle for the regularized value at x.

    Enumerates probe points (breakpoints, midpoints, one beyond, zero) of
    each operand and takes the largest pointwise T-value among probe pairs
    whose cell reaches below x; agrees with :func:`tau` at every finite x.
    """
    if x.is_infinite:
        return UNIT_ONE
    best = UNIT_ZERO
    for reach, value in oracle_contributions(t, l, f, g):
        if reach < x and value.value > best.value:
            best = value
    return best
