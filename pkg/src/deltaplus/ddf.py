"""Distance distribution functions as canonical rational step functions.

A distance distribution function maps [0, infinity] into [0, 1], is zero
at 0, one at infinity, and is increasing and left-continuous in between.
This module represents exactly the step-shaped members of that space: a
finite list of jumps ``(x_k, p_k)`` with strictly increasing finite
abscissae and strictly increasing positive values.  The induced function
is

    f(t)   =  max{ p_k : x_k < t }     for finite t (0 if no jump is below t)
    f(inf) =  1                        always, never stored

Jumps carry the value *after* the abscissa, so left continuity is a
structural property of the encoding rather than a checked one.  The empty
jump list denotes the function that is zero at every finite point.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .rationals import (
    EXT_INF,
    UNIT_ONE,
    UNIT_ZERO,
    ExtRat,
    RationalParseError,
    UnitRat,
    format_ext,
    format_unit,
    parse_ext,
    parse_unit,
)

Jump = tuple[ExtRat, UnitRat]


class DdfParseError(ValueError):
    """Raised on malformed ``.ddf`` text, with a line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class DDF:
    """Canonical left-continuous rational step function."""

    jumps: tuple[Jump, ...]
    _xs: list[Fraction] = field(init=False, repr=False, compare=False)
    _ps: list[UnitRat] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        last_x: Fraction | None = None
        last_p = Fraction(0)
        for x, p in self.jumps:
            if x.is_infinite:
                raise ValueError("jump abscissae must be finite")
            if last_x is not None and x.finite <= last_x:
                raise ValueError("jump abscissae must be strictly increasing")
            if p.value <= last_p:
                raise ValueError("jump values must be strictly increasing and positive")
            last_x, last_p = x.finite, p.value
        object.__setattr__(self, "_xs", [x.finite for x, _ in self.jumps])
        object.__setattr__(self, "_ps", [p for _, p in self.jumps])

    def value_at(self, t: ExtRat) -> UnitRat:
        """Evaluate the induced function; exact at every point."""
        if t.is_infinite:
            return UNIT_ONE
        i = bisect_left(self._xs, t.finite)
        return self._ps[i - 1] if i > 0 else UNIT_ZERO

    @property
    def breakpoints(self) -> tuple[ExtRat, ...]:
        return tuple(x for x, _ in self.jumps)

    def __str__(self) -> str:
        return serialize(self)


EPS_INF = DDF(())


def canonicalize(raw: Iterable[Jump]) -> DDF:
    """Collapse an arbitrary jump list to the unique canonical DDF.

    Sorts by abscissa, keeps the maximum value at duplicate abscissae,
    deletes jumps dominated by an earlier jump of equal-or-greater value,
    and drops zero-valued jumps.
    """
    ordered = sorted(raw, key=lambda j: (j[0].finite, -j[1].value))
    kept: list[Jump] = []
    seen_x: Fraction | None = None
    best = Fraction(0)
    for x, p in ordered:
        if x.is_infinite:
            raise ValueError("jump abscissae must be finite")
        if seen_x is not None and x.finite == seen_x:
            continue
        seen_x = x.finite
        if p.value > best:
            kept.append((x, p))
            best = p.value
    return DDF(tuple(kept))


def make_epsilon(r: ExtRat) -> DDF:
    """Unit step at r: certainty that the distance equals the constant r."""
    if r.is_infinite:
        return EPS_INF
    return DDF(((r, UNIT_ONE),))


def make_v(p: UnitRat) -> DDF:
    """Constant level p on all finite positive distances."""
    if p.value == 0:
        return EPS_INF
    return DDF(((ExtRat(Fraction(0)), p),))


def leq(f: DDF, g: DDF) -> bool:
    """Pointwise order, decided exactly on the merged breakpoint set."""
    probes = sorted(set(f._xs) | set(g._xs))
    if probes:
        probes.append(probes[-1] + 1)
    else:
        probes.append(Fraction(1))
    for t in probes:
        point = ExtRat(t)
        if f.value_at(point) > g.value_at(point):
            return False
    return True


def last_jump_to_one(f: DDF) -> ExtRat:
    """sup{ t : f(t) < 1 } -- the abscissa where f first reaches 1, if ever."""
    if f.jumps and f.jumps[-1][1] == UNIT_ONE:
        return f.jumps[-1][0]
    return EXT_INF


def serialize(f: DDF) -> str:
    lines = ["DDF v1"]
    lines.extend(f"jump {format_ext(x)} {format_unit(p)}" for x, p in f.jumps)
    return "\n".join(lines) + "\n"


def parse_ddf(text: str) -> DDF:
    """Parse the line-oriented ``.ddf`` format, validating canonical shape."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != "DDF v1":
        raise DdfParseError(1, "expected header 'DDF v1'")
    jumps: list[Jump] = []
    last_x: Fraction | None = None
    last_p = Fraction(0)
    for line_no, line in enumerate(lines[1:], start=2):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        parts = body.split()
        if parts[0] != "jump" or len(parts) != 3:
            raise DdfParseError(line_no, f"expected 'jump <x> <p>', got {body!r}")
        try:
            x = parse_ext(parts[1])
            p = parse_unit(parts[2])
        except RationalParseError as exc:
            raise DdfParseError(line_no, str(exc)) from exc
        if x.is_infinite:
            raise DdfParseError(line_no, "jump abscissa must be finite")
        if last_x is not None and x.finite <= last_x:
            raise DdfParseError(line_no, f"abscissa {parts[1]} does not increase")
        if p.value <= last_p:
            raise DdfParseError(
                line_no, f"value {parts[2]} does not increase (values must be positive)"
            )
        jumps.append((x, p))
        last_x, last_p = x.finite, p.value
    return DDF(tuple(jumps))


def merged_probe_points(*fs: DDF) -> list[ExtRat]:
    """Breakpoints of all arguments, their midpoints, and one point beyond.

    A convenient exact sampling set: the induced functions are constant
    between consecutive probes.
    """
    cuts = sorted({Fraction(0)} | {x for f in fs for x in f._xs})
    probes = [cuts[0]]
    for lo, hi in zip(cuts, cuts[1:]):
        probes.append((lo + hi) / 2)
        probes.append(hi)
    probes.append(cuts[-1] + 1)
    return [ExtRat(t) for t in probes]
