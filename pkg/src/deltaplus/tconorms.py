"""Catalog of binary operations on [0,infinity] with verified metadata.

Entries carry exact rational evaluators plus declared structure: t-conorm
axioms, continuity, joint strict monotonicity (unconditional and the
variant conditioned on a finite result), and Archimedean-ness, together
with hints at known idempotent elements.

Two families are built from an order isomorphism between [0,infinity] and
[0,1] that stays inside the rationals:

    squash(t)   = t / (1 + t)         squash(inf) = 1
    unsquash(s) = s / (1 - s)         unsquash(1) = inf

``nilpotent_rat`` is capped addition transported through that map; it is
order-isomorphic to truncated addition on [0,1], which pins down every
order-theoretic property this package consumes (Archimedean, conditionally
strictly increasing, not jointly strictly increasing).  The ordinal-sum
constructors take a single idempotent parameter p: below p they behave
like (truncated or strict) addition, above p like the maximum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .rationals import (
    EXT_INF,
    EXT_ZERO,
    ExtRat,
    ext,
    ext_add,
    ext_max,
    ext_min,
)
from .verdicts import Verdict, Witness2D

TConormFn = Callable[[ExtRat, ExtRat], ExtRat]


class CatalogError(ValueError):
    """Unknown catalog name or invalid parameter."""


def squash(t: ExtRat) -> Fraction:
    """Order isomorphism [0,inf] -> [0,1]."""
    if t.is_infinite:
        return Fraction(1)
    return t.finite / (1 + t.finite)


def unsquash(s: Fraction) -> ExtRat:
    """Inverse of :func:`squash`."""
    if s == 1:
        return EXT_INF
    return ExtRat(s / (1 - s))


@dataclass(frozen=True)
class TConormTraits:
    is_tconorm: bool
    is_continuous: bool
    # Continuity away from (0,inf) and (inf,0); weaker than is_continuous.
    is_continuous_off_corners: bool
    satisfies_ls: bool
    satisfies_lcs: bool
    is_archimedean: bool


@dataclass(frozen=True)
class LCSWitness:
    """A quadruple u<u', v<v' with equal finite results: a genuine
    violation of conditional strict monotonicity."""

    u: ExtRat
    u_hi: ExtRat
    v: ExtRat
    v_hi: ExtRat
    value_lo: ExtRat
    value_hi: ExtRat


@dataclass(frozen=True)
class TConormDesc:
    """A named operation on [0,inf] with declared, verifiable structure."""

    name: str
    fn: TConormFn
    declared: TConormTraits | None
    param: Fraction | None = None
    idempotent_hints: tuple[ExtRat, ...] = ()
    # Exact predicate: does L attain its infimum L(a,b) somewhere inside the
    # half-open cell ]a,a_hi] x ]b,b_hi]?  None means never (strict families).
    cell_inf_attained: Callable[[ExtRat, ExtRat, ExtRat, ExtRat], bool] | None = None
    # Exact solver for L(u, v) = x given u, where defined (Archimedean entries).
    solve_second: Callable[[ExtRat, ExtRat], ExtRat] | None = None

    def __call__(self, u: ExtRat, v: ExtRat) -> ExtRat:
        return self.fn(u, v)

    @property
    def spec(self) -> str:
        if self.param is None:
            return self.name
        p = self.param
        text = str(p.numerator) if p.denominator == 1 else f"{p.numerator}/{p.denominator}"
        return f"{self.name}:{text}"


def _plus_solve(u: ExtRat, x: ExtRat) -> ExtRat:
    if x.is_infinite:
        return EXT_INF
    if u.is_infinite or u.finite > x.finite:
        raise ValueError("no solution: first argument exceeds target")
    return ExtRat(x.finite - u.finite)


def _nilpotent(u: ExtRat, v: ExtRat) -> ExtRat:
    return unsquash(min(squash(u) + squash(v), Fraction(1)))


def _nilpotent_solve(u: ExtRat, x: ExtRat) -> ExtRat:
    if x.is_infinite:
        return EXT_INF
    rest = squash(x) - squash(u)
    if rest < 0:
        raise ValueError("no solution: first argument exceeds target")
    return unsquash(rest)


def _drastic(u: ExtRat, v: ExtRat) -> ExtRat:
    if u == EXT_ZERO or v == EXT_ZERO:
        return ext_max(u, v)
    return EXT_INF


def _make_osum_trunc(p: Fraction) -> TConormFn:
    cap = ExtRat(p)

    def fn(u: ExtRat, v: ExtRat) -> ExtRat:
        if u <= cap and v <= cap:
            return ext_min(ext_add(u, v), cap)
        return ext_max(u, v)

    return fn


def _make_osum_trunc_inf_attained(p: Fraction):
    cap = ExtRat(p)

    def attained(a: ExtRat, b: ExtRat, a_hi: ExtRat, b_hi: ExtRat) -> bool:
        # The value plateau {u,v <= p, u+v >= p} reaches into the cell
        # interior exactly when the lower corner sits on it with room to
        # move in both coordinates.
        return a < cap and b < cap and ext_add(a, b) >= cap

    return attained


def _make_osum_strict(p: Fraction) -> TConormFn:
    cap = ExtRat(p)

    def gen(t: ExtRat) -> Fraction | None:
        # t / (p - t) on [0, p]; None encodes the pole at t = p.
        if t == cap:
            return None
        return t.finite / (p - t.finite)

    def fn(u: ExtRat, v: ExtRat) -> ExtRat:
        if ext_max(u, v) > cap:
            return ext_max(u, v)
        gu, gv = gen(u), gen(v)
        if gu is None or gv is None:
            return cap
        s = gu + gv
        return ExtRat(p * s / (1 + s))

    return fn


_FIXED_CATALOG: dict[str, TConormDesc] = {
    "max": TConormDesc(
        "max",
        ext_max,
        TConormTraits(True, True, True, True, True, False),
        idempotent_hints=(ext(1), ext(2)),
    ),
    "plus": TConormDesc(
        "plus",
        ext_add,
        TConormTraits(True, True, True, True, True, True),
        solve_second=_plus_solve,
    ),
    "nilpotent_rat": TConormDesc(
        "nilpotent_rat",
        _nilpotent,
        TConormTraits(True, True, True, False, True, True),
        solve_second=_nilpotent_solve,
    ),
    "drastic": TConormDesc(
        "drastic",
        _drastic,
        TConormTraits(True, False, False, False, True, True),
    ),
}

TCONORM_NAMES = ("max", "plus", "nilpotent_rat", "drastic", "osum_trunc", "osum_strict")


def catalog_tconorm(name: str, param: Fraction | int | None = None) -> TConormDesc:
    """Look up a catalog entry; the ordinal-sum families require a
    positive finite rational parameter."""
    if name in _FIXED_CATALOG:
        if param is not None:
            raise CatalogError(f"{name} takes no parameter")
        return _FIXED_CATALOG[name]
    if name in ("osum_trunc", "osum_strict"):
        if param is None:
            raise CatalogError(f"{name} requires a parameter, e.g. {name}:2")
        p = Fraction(param)
        if p <= 0:
            raise CatalogError(f"{name} parameter must be positive, got {p}")
        hints = (ExtRat(p), ExtRat(p + 1))
        if name == "osum_trunc":
            return TConormDesc(
                "osum_trunc",
                _make_osum_trunc(p),
                TConormTraits(True, True, True, False, False, False),
                param=p,
                idempotent_hints=hints,
                cell_inf_attained=_make_osum_trunc_inf_attained(p),
            )
        return TConormDesc(
            "osum_strict",
            _make_osum_strict(p),
            TConormTraits(True, True, True, True, True, False),
            param=p,
            idempotent_hints=hints,
        )
    raise CatalogError(
        f"unknown t-conorm {name!r}; valid names: {', '.join(TCONORM_NAMES)}"
    )


def catalog_tconorm_spec(spec: str) -> TConormDesc:
    """Parse CLI-style names such as ``plus`` or ``osum_trunc:3/2``."""
    name, sep, param_text = spec.partition(":")
    if not sep:
        return catalog_tconorm(name)
    try:
        param = Fraction(param_text)
    except (ValueError, ZeroDivisionError):
        raise CatalogError(f"bad parameter in {spec!r}") from None
    return catalog_tconorm(name, param)


def _sample_pool(l: TConormDesc) -> list[ExtRat]:
    pool = [EXT_ZERO, EXT_INF, ext(1)]
    pool.extend(l.idempotent_hints)
    if l.param is not None:
        p = l.param
        pool.extend(ExtRat(q) for q in (p / 2, p, 2 * p, p - p / 8, p + p / 8))
    return pool


def _random_ext(rng: random.Random, pool: list[ExtRat]) -> ExtRat:
    roll = rng.random()
    if roll < 0.08:
        return EXT_INF
    if roll < 0.16:
        return EXT_ZERO
    if roll < 0.35 and pool:
        return pool[rng.randrange(len(pool))]
    den = rng.randint(1, 16)
    num = rng.randint(0, 8 * den)
    return ExtRat(Fraction(num, den))


def check_tconorm_axioms(l: TConormDesc, budget: int, seed: int) -> Verdict:
    """Randomized falsification of commutativity, associativity,
    monotonicity, and the identity 0, on samples including the endpoints."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = random.Random(seed)
    pool = _sample_pool(l)
    for case in range(budget):
        u = _random_ext(rng, pool)
        v = _random_ext(rng, pool)
        w = _random_ext(rng, pool)
        if l(u, v) != l(v, u):
            return Verdict(False, case + 1, Witness2D((u, v), "not commutative"))
        if l(l(u, v), w) != l(u, l(v, w)):
            return Verdict(
                False, case + 1, Witness2D((u, v), f"not associative with w={w}")
            )
        if l(u, EXT_ZERO) != u or l(EXT_ZERO, u) != u:
            return Verdict(False, case + 1, Witness2D((u, EXT_ZERO), "0 not identity"))
        lo, hi = (u, v) if u <= v else (v, u)
        if l(lo, w) > l(hi, w) or l(w, lo) > l(w, hi):
            return Verdict(
                False, case + 1, Witness2D((lo, hi), f"not monotone against w={w}")
            )
    return Verdict(True, budget)


def _strictness_quadruples(l: TConormDesc, rng: random.Random, budget: int):
    # Targeted quadruples around caps and idempotents first, then random.
    if l.param is not None:
        p = l.param
        yield (ExtRat(3 * p / 4), ExtRat(9 * p / 10),
               ExtRat(19 * p / 20), ExtRat(19 * p / 20))
    for hint in l.idempotent_hints:
        if not hint.is_infinite and hint.finite > 0:
            h = hint.finite
            yield (ExtRat(h / 2), ExtRat(3 * h / 4), ExtRat(h), ExtRat(h))
            yield (ExtRat(h), ExtRat(h / 2), ExtRat(2 * h), ExtRat(h))
    pool = _sample_pool(l)
    for _ in range(budget):
        a, b = _random_ext(rng, pool), _random_ext(rng, pool)
        c, d = _random_ext(rng, pool), _random_ext(rng, pool)
        u, u_hi = (a, b) if a < b else (b, a)
        v, v_hi = (c, d) if c < d else (d, c)
        if u < u_hi and v < v_hi:
            yield (u, v, u_hi, v_hi)


def check_LCS(l: TConormDesc, budget: int, seed: int) -> Verdict:
    """Search for u<u', v<v' with L(u',v') finite and L(u,v) = L(u',v')."""
    rng = random.Random(seed)
    cases = 0
    for u, v, u_hi, v_hi in _strictness_quadruples(l, rng, budget):
        cases += 1
        hi = l(u_hi, v_hi)
        if hi.is_infinite:
            continue
        lo = l(u, v)
        if lo == hi:
            return Verdict(False, cases, LCSWitness(u, u_hi, v, v_hi, lo, hi))
    return Verdict(True, cases)


def check_LS(l: TConormDesc, budget: int, seed: int) -> Verdict:
    """Search for u<u', v<v' with L(u,v) = L(u',v') (finite or not)."""
    rng = random.Random(seed)
    cases = 0
    for u, v, u_hi, v_hi in _strictness_quadruples(l, rng, budget):
        cases += 1
        lo, hi = l(u, v), l(u_hi, v_hi)
        if lo == hi:
            return Verdict(False, cases, LCSWitness(u, u_hi, v, v_hi, lo, hi))
    return Verdict(True, cases)


def idempotents(l: TConormDesc, grid: set[ExtRat] | frozenset[ExtRat]) -> set[ExtRat]:
    """Fixed points of the diagonal among grid and hinted elements; the
    endpoints 0 and infinity always qualify."""
    found = {EXT_ZERO, EXT_INF}
    for x in set(grid) | set(l.idempotent_hints):
        if l(x, x) == x:
            found.add(x)
    return found


def is_archimedean(l: TConormDesc, budget: int, seed: int) -> Verdict:
    """Pass means Archimedean.  A Fail verdict carries an interior
    idempotent element as its witness.

    Sampled and hinted interior points are screened for idempotency; the
    supporting power test then iterates diagonal powers of small elements
    until they overtake larger samples.
    """
    rng = random.Random(seed)
    pool = _sample_pool(l)
    cases = 0
    probes = [h for h in l.idempotent_hints]
    probes.extend(_random_ext(rng, pool) for _ in range(budget))
    for x in probes:
        if x == EXT_ZERO or x.is_infinite:
            continue
        cases += 1
        if l(x, x) == x:
            return Verdict(False, cases, Witness2D((x, x), "interior idempotent"))
    power_pairs = max(1, budget // 64)
    for _ in range(power_pairs):
        y = _random_ext(rng, pool)
        x = _random_ext(rng, pool)
        if y == EXT_ZERO or y.is_infinite or x.is_infinite or not y < x:
            continue
        cases += 1
        power = y
        for _ in range(min(budget, 4096)):
            power = l(power, y)
            if x < power:
                break
        else:
            return Verdict(
                False, cases, Witness2D((y, x), "diagonal powers stalled below sample")
            )
    return Verdict(True, cases)
