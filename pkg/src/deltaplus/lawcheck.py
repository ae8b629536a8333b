"""Randomized law suites and counterexample mining for a (T, L) pair.

Seven laws are checked on the triangle operation induced by a catalog
pair: closure (agreement of the raw and regularized values at every
corner abscissa), commutativity, associativity, identity, monotonicity,
and the two embedding homomorphisms (unit steps compose through L,
constant levels compose through T).  All comparisons are exact canonical
equality; a failing case always carries a fully serialized witness that
re-verifies standalone.

The miner interleaves all laws over structured candidates first --
unit-step and constant-level families, two-step functions straddling the
t-norm's discontinuity curves, steps straddling the conorm's idempotents
and caps, and staircase approximations of linear ramps -- before random
drift with escalating jump counts.  A miss on a pair the classifier
rejects is reported as inconclusive, never as a pass: the underlying
theory guarantees a counterexample exists among general distribution
functions, not that one is representable as a finite step function.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .classify import classify as _classify_pair
from .ddf import DDF, canonicalize, make_epsilon, make_v, merged_probe_points, serialize
from .rationals import (
    EXT_INF,
    EXT_ZERO,
    ExtRat,
    UnitRat,
    format_ext,
    format_unit,
)
from .tau import probe_abscissae, tau, tau_raw_at
from .tconorms import TConormDesc
from .tnorms import TNormDesc

LAWS = (
    "closure",
    "commutativity",
    "associativity",
    "identity",
    "monotonicity",
    "embedding_eps",
    "embedding_V",
)


@dataclass(frozen=True)
class RandomDDFConfig:
    """Shape of the random step-function distribution: jump-count bound
    and denominator bounds for abscissae and values."""

    max_jumps: int = 4
    abscissa_pool: int = 8
    value_pool: int = 8

    def __post_init__(self) -> None:
        if self.max_jumps < 0 or self.abscissa_pool < 1 or self.value_pool < 1:
            raise ValueError("bounds must be positive (max_jumps may be 0)")


@dataclass(frozen=True)
class LawWitness:
    """Operands plus one abscissa where the two sides differ."""

    law: str
    operands: tuple[DDF, ...]
    x: ExtRat
    lhs: UnitRat
    rhs: UnitRat
    detail: str = ""


@dataclass(frozen=True)
class LawReport:
    tnorm: str
    tconorm: str
    law: str
    verdict: str  # "pass" | "fail" | "inconclusive"
    cases: int
    budget: int
    seed: int
    config: RandomDDFConfig
    witness: LawWitness | None = None


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\n", "\\n")


def serialize_report(report: LawReport) -> str:
    """Line-oriented key=value records; witness operands embed escaped
    .ddf payloads.  Byte-stable for replay comparison."""
    cfg = report.config
    lines = [
        "report"
        f" tnorm={report.tnorm} tconorm={report.tconorm} law={report.law}"
        f" verdict={report.verdict} cases={report.cases} budget={report.budget}"
        f" seed={report.seed} max_jumps={cfg.max_jumps}"
        f" abscissa_pool={cfg.abscissa_pool} value_pool={cfg.value_pool}"
    ]
    w = report.witness
    if w is not None:
        lines.append(
            f"witness law={w.law} x={format_ext(w.x)}"
            f" lhs={format_unit(w.lhs)} rhs={format_unit(w.rhs)}"
            f" detail={_escape(w.detail)}"
        )
        for slot, operand in enumerate(w.operands):
            lines.append(f"operand slot={slot} ddf={_escape(serialize(operand))}")
    return "\n".join(lines) + "\n"


def random_ddf(cfg: RandomDDFConfig, seed: int) -> DDF:
    """Deterministic random canonical DDF with at most max_jumps jumps."""
    return _random_ddf(cfg, random.Random(seed))


def _random_ddf(cfg: RandomDDFConfig, rng: random.Random) -> DDF:
    count = rng.randint(0, cfg.max_jumps)
    if count == 0:
        return DDF(())
    xs: set[Fraction] = set()
    ps: set[Fraction] = set()
    # Attempt caps keep tiny pools from stalling; fewer jumps are fine.
    for _ in range(64 * count):
        if len(xs) >= count:
            break
        den = rng.randint(1, cfg.abscissa_pool)
        xs.add(Fraction(rng.randint(0, 4 * den), den))
    for _ in range(64 * count):
        if len(ps) >= count:
            break
        den = rng.randint(1, cfg.value_pool)
        ps.add(Fraction(rng.randint(1, den), den))
    jumps = tuple(
        (ExtRat(x), UnitRat(p)) for x, p in zip(sorted(xs), sorted(ps))
    )
    return DDF(jumps)


def _random_ext(rng: random.Random, cfg: RandomDDFConfig) -> ExtRat:
    if rng.random() < 0.1:
        return EXT_INF
    den = rng.randint(1, cfg.abscissa_pool)
    return ExtRat(Fraction(rng.randint(0, 4 * den), den))


def _random_unit(rng: random.Random, cfg: RandomDDFConfig) -> UnitRat:
    den = rng.randint(1, cfg.value_pool)
    return UnitRat(Fraction(rng.randint(0, den), den))


def _pointwise_max(f: DDF, g: DDF) -> DDF:
    return canonicalize(f.jumps + g.jumps)


def _first_difference(
    lhs: DDF, rhs: DDF
) -> tuple[ExtRat, UnitRat, UnitRat] | None:
    for x in merged_probe_points(lhs, rhs):
        a, b = lhs.value_at(x), rhs.value_at(x)
        if a != b:
            return x, a, b
    return None


def _case_closure(t, l, f: DDF, g: DDF) -> LawWitness | None:
    h = tau(t, l, f, g)
    for x in probe_abscissae(l, f, g):
        reg = h.value_at(x)
        raw = tau_raw_at(t, l, f, g, x)
        if reg != raw:
            return LawWitness(
                "closure", (f, g), x, reg, raw, "regularized vs raw value"
            )
    return None


def _case_commutativity(t, l, f: DDF, g: DDF) -> LawWitness | None:
    diff = _first_difference(tau(t, l, f, g), tau(t, l, g, f))
    if diff:
        x, a, b = diff
        return LawWitness("commutativity", (f, g), x, a, b, "tau(f,g) vs tau(g,f)")
    return None


def _case_associativity(t, l, f: DDF, g: DDF, h: DDF) -> LawWitness | None:
    left = tau(t, l, tau(t, l, f, g), h)
    right = tau(t, l, f, tau(t, l, g, h))
    diff = _first_difference(left, right)
    if diff:
        x, a, b = diff
        return LawWitness(
            "associativity", (f, g, h), x, a, b, "tau(tau(f,g),h) vs tau(f,tau(g,h))"
        )
    return None


def _case_identity(t, l, f: DDF) -> LawWitness | None:
    diff = _first_difference(tau(t, l, f, make_epsilon(EXT_ZERO)), f)
    if diff:
        x, a, b = diff
        return LawWitness(
            "identity", (f,), x, a, b, "tau(f, unit step at 0) vs f"
        )
    return None


def _case_monotonicity(t, l, lo: DDF, hi: DDF, g: DDF) -> LawWitness | None:
    # hi dominates lo pointwise by construction; the induced outputs must
    # stay ordered in each operand slot.
    left = tau(t, l, lo, g)
    right = tau(t, l, hi, g)
    for x in merged_probe_points(left, right):
        a, b = left.value_at(x), right.value_at(x)
        if a > b:
            return LawWitness(
                "monotonicity", (lo, hi, g), x, a, b, "tau(lo,g) above tau(hi,g)"
            )
    left = tau(t, l, g, lo)
    right = tau(t, l, g, hi)
    for x in merged_probe_points(left, right):
        a, b = left.value_at(x), right.value_at(x)
        if a > b:
            return LawWitness(
                "monotonicity", (lo, hi, g), x, a, b, "tau(g,lo) above tau(g,hi)"
            )
    return None


def _case_embedding_eps(t, l, u: ExtRat, v: ExtRat) -> LawWitness | None:
    actual = tau(t, l, make_epsilon(u), make_epsilon(v))
    expected = make_epsilon(l(u, v))
    diff = _first_difference(actual, expected)
    if diff:
        x, a, b = diff
        return LawWitness(
            "embedding_eps",
            (make_epsilon(u), make_epsilon(v), expected),
            x,
            a,
            b,
            "unit steps must compose through the conorm",
        )
    return None


def _case_embedding_v(t, l, p: UnitRat, q: UnitRat) -> LawWitness | None:
    actual = tau(t, l, make_v(p), make_v(q))
    expected = make_v(t(p, q))
    diff = _first_difference(actual, expected)
    if diff:
        x, a, b = diff
        return LawWitness(
            "embedding_V",
            (make_v(p), make_v(q), expected),
            x,
            a,
            b,
            "constant levels must compose through the t-norm",
        )
    return None


def _run_case(
    t: TNormDesc,
    l: TConormDesc,
    law: str,
    cfg: RandomDDFConfig,
    rng: random.Random,
) -> LawWitness | None:
    if law == "closure":
        return _case_closure(t, l, _random_ddf(cfg, rng), _random_ddf(cfg, rng))
    if law == "commutativity":
        return _case_commutativity(t, l, _random_ddf(cfg, rng), _random_ddf(cfg, rng))
    if law == "associativity":
        return _case_associativity(
            t, l, _random_ddf(cfg, rng), _random_ddf(cfg, rng), _random_ddf(cfg, rng)
        )
    if law == "identity":
        return _case_identity(t, l, _random_ddf(cfg, rng))
    if law == "monotonicity":
        lo = _random_ddf(cfg, rng)
        hi = _pointwise_max(lo, _random_ddf(cfg, rng))
        return _case_monotonicity(t, l, lo, hi, _random_ddf(cfg, rng))
    if law == "embedding_eps":
        return _case_embedding_eps(t, l, _random_ext(rng, cfg), _random_ext(rng, cfg))
    if law == "embedding_V":
        return _case_embedding_v(t, l, _random_unit(rng, cfg), _random_unit(rng, cfg))
    raise ValueError(f"unknown law {law!r}; valid laws: {', '.join(LAWS)}")


def check_law(
    t: TNormDesc,
    l: TConormDesc,
    law: str,
    cfg: RandomDDFConfig,
    budget: int,
    seed: int,
) -> LawReport:
    """Run ``budget`` randomized cases of one law; exact equality only."""
    if law not in LAWS:
        raise ValueError(f"unknown law {law!r}; valid laws: {', '.join(LAWS)}")
    rng = random.Random(seed)
    for case in range(budget):
        witness = _run_case(t, l, law, cfg, rng)
        if witness is not None:
            return LawReport(
                t.name, l.spec, law, "fail", case + 1, budget, seed, cfg, witness
            )
    return LawReport(t.name, l.spec, law, "pass", budget, budget, seed, cfg)


def reverify(t: TNormDesc, l: TConormDesc, witness: LawWitness) -> bool:
    """Recompute both sides of a failing case at the recorded abscissa."""
    x = witness.x
    ops = witness.operands
    if witness.law == "closure":
        f, g = ops
        return tau(t, l, f, g).value_at(x) != tau_raw_at(t, l, f, g, x)
    if witness.law == "commutativity":
        f, g = ops
        return tau(t, l, f, g).value_at(x) != tau(t, l, g, f).value_at(x)
    if witness.law == "associativity":
        f, g, h = ops
        left = tau(t, l, tau(t, l, f, g), h)
        right = tau(t, l, f, tau(t, l, g, h))
        return left.value_at(x) != right.value_at(x)
    if witness.law == "identity":
        (f,) = ops
        return tau(t, l, f, make_epsilon(EXT_ZERO)).value_at(x) != f.value_at(x)
    if witness.law == "monotonicity":
        lo, hi, g = ops
        return (
            tau(t, l, lo, g).value_at(x) > tau(t, l, hi, g).value_at(x)
            or tau(t, l, g, lo).value_at(x) > tau(t, l, g, hi).value_at(x)
        )
    if witness.law in ("embedding_eps", "embedding_V"):
        f, g, expected = ops
        return tau(t, l, f, g).value_at(x) != expected.value_at(x)
    raise ValueError(f"unknown law {witness.law!r}")


def _staircase(a: Fraction, top: Fraction, steps: int) -> DDF:
    # Increasing staircase under the ramp of slope top/a on [0, a].
    jumps = tuple(
        (ExtRat(a * k / steps), UnitRat(top * k / steps)) for k in range(1, steps + 1)
    )
    return DDF(jumps)


def _structured_candidates(t: TNormDesc, l: TConormDesc) -> list[DDF]:
    """Seeds for the miner: families the theory's failure modes point at."""
    abscissae: set[Fraction] = {Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)}
    caps: set[Fraction] = set()
    if l.param is not None:
        caps.add(l.param)
    for hint in l.idempotent_hints:
        if not hint.is_infinite and hint.finite > 0:
            caps.add(hint.finite)
    for c in caps:
        abscissae.update(
            (c / 2, 3 * c / 4, 9 * c / 10, 19 * c / 20, c, 21 * c / 20, 3 * c / 2)
        )
    levels: set[Fraction] = {Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)}
    for x, y in t.boundary_probes[:8]:
        levels.add(x.value)
        levels.add(y.value)
    candidates: list[DDF] = [DDF(()), make_epsilon(EXT_ZERO)]
    candidates.extend(make_epsilon(ExtRat(a)) for a in sorted(abscissae))
    candidates.extend(make_v(UnitRat(p)) for p in sorted(levels) if 0 < p <= 1)
    # Two-step functions whose value pairs straddle the t-norm's curves.
    pairs = [
        (Fraction(1, 2), Fraction(1, 2)),
        (Fraction(1, 2), Fraction(7, 16)),
        (Fraction(1, 4), Fraction(3, 4)),
        (Fraction(3, 8), Fraction(5, 8)),
    ]
    for lo, hi in pairs:
        if lo < hi:
            candidates.append(
                DDF(((ExtRat(Fraction(1)), UnitRat(lo)), (ExtRat(Fraction(2)), UnitRat(hi))))
            )
    # Staircase approximations of ramps reaching level 1/2.
    for a in sorted(caps | {Fraction(1), Fraction(2)}):
        for steps in (4, 8):
            candidates.append(_staircase(a, Fraction(1, 2), steps))
    return candidates


def mine_counterexample(
    t: TNormDesc,
    l: TConormDesc,
    cfg: RandomDDFConfig,
    budget: int,
    seed: int,
) -> LawReport:
    """Interleave every law over structured candidates, then random drift
    with escalating jump counts; first failure wins."""
    rng = random.Random(seed)
    cases = 0
    seeds = _structured_candidates(t, l)

    def finish(witness: LawWitness | None) -> LawReport | None:
        if witness is None:
            return None
        return LawReport(
            t.name, l.spec, witness.law, "fail", cases, budget, seed, cfg, witness
        )

    # Structured phase: all candidate pairs through the cheap laws, plus
    # embeddings on the candidate parameters.
    for f in seeds:
        for g in seeds:
            if cases >= budget:
                break
            cases += 1
            report = finish(_case_closure(t, l, f, g)) or finish(
                _case_commutativity(t, l, f, g)
            )
            if report is None and (found := _case_identity(t, l, f)) is not None:
                report = finish(found)
            if report is not None:
                return report
        if cases >= budget:
            break
    for f in seeds:
        for g in seeds:
            if cases >= budget:
                break
            cases += 1
            if (found := _case_associativity(t, l, f, g, _pointwise_max(f, g))) is not None:
                return finish(found)

    # Random drift, laws in a fixed rotation, jump counts escalating.
    escalation = (1, 2, cfg.max_jumps, cfg.max_jumps + 2, cfg.max_jumps + 4)
    law_cycle = LAWS
    while cases < budget:
        for law in law_cycle:
            if cases >= budget:
                break
            jumps = escalation[(cases // len(law_cycle)) % len(escalation)]
            round_cfg = RandomDDFConfig(
                max_jumps=max(jumps, 1),
                abscissa_pool=cfg.abscissa_pool,
                value_pool=cfg.value_pool,
            )
            cases += 1
            if (found := _run_case(t, l, law, round_cfg, rng)) is not None:
                return finish(found)

    classification = _classify_pair(t, l, budget=400, seed=0)
    verdict = "pass" if classification.verdict == "Triangle" else "inconclusive"
    return LawReport(t.name, l.spec, "all", verdict, cases, budget, seed, cfg)
