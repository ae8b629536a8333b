from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deltaplus.ddf import (
    DDF,
    EPS_INF,
    DdfParseError,
    canonicalize,
    last_jump_to_one,
    leq,
    make_epsilon,
    make_v,
    merged_probe_points,
    parse_ddf,
    serialize,
)
from deltaplus.rationals import EXT_INF, EXT_ZERO, UNIT_ONE, UNIT_ZERO, ExtRat, UnitRat, ext, unit

raw_jumps = st.lists(
    st.tuples(
        st.fractions(min_value=0, max_value=8).map(ExtRat),
        st.fractions(min_value=0, max_value=1).map(UnitRat),
    ),
    max_size=8,
)


def naive_eval(pairs, t: ExtRat) -> UnitRat:
    """The semantics, computed straight off the raw pairs."""
    if t.is_infinite:
        return UNIT_ONE
    best = UNIT_ZERO
    for x, p in pairs:
        if x < t and p.value > best.value:
            best = p
    return best


def test_canonicalize_examples():
    dominated = canonicalize([(ext(2), unit(1, 2)), (ext(1), unit(1, 2))])
    assert dominated.jumps == ((ext(1), unit(1, 2)),)
    assert canonicalize([]) == EPS_INF
    tail = canonicalize([(ext(0), unit(1, 3)), (ext(5), unit(1, 4))])
    assert tail.jumps == ((ext(0), unit(1, 3)),)


@given(raw_jumps, st.one_of(st.just(EXT_INF), st.fractions(min_value=0, max_value=10).map(ExtRat)))
def test_canonicalize_preserves_semantics(pairs, t):
    assert canonicalize(pairs).value_at(t) == naive_eval(pairs, t)


@given(raw_jumps)
def test_eval_endpoints_and_monotonicity(pairs):
    f = canonicalize(pairs)
    assert f.value_at(EXT_ZERO) == UNIT_ZERO
    assert f.value_at(EXT_INF) == UNIT_ONE
    chain = sorted({Fraction(k, 3) for k in range(0, 25)})
    values = [f.value_at(ExtRat(q)).value for q in chain]
    assert values == sorted(values)


@given(raw_jumps)
def test_left_continuity_at_jumps(pairs):
    f = canonicalize(pairs)
    previous = UNIT_ZERO
    for x, p in f.jumps:
        assert f.value_at(x) == previous  # the jump takes effect strictly after x
        previous = p


def test_eval_spec_values():
    eps2 = make_epsilon(ext(2))
    assert eps2.value_at(ext(2)) == UNIT_ZERO
    assert eps2.value_at(ext(3)) == UNIT_ONE
    assert make_v(unit(1, 2)).value_at(ext(1)) == unit(1, 2)
    assert EPS_INF.value_at(ext(10**6)) == UNIT_ZERO


def test_epsilon_and_v_coincide_at_endpoints():
    assert make_epsilon(EXT_ZERO) == make_v(UNIT_ONE)
    assert make_epsilon(EXT_INF) == make_v(UNIT_ZERO) == EPS_INF
    assert make_v(unit(1, 3)).jumps == ((EXT_ZERO, unit(1, 3)),)


def test_order_embeddings():
    assert leq(make_epsilon(ext(3)), make_epsilon(ext(2)))  # reverses order
    assert leq(make_v(unit(1, 3)), make_v(unit(1, 2)))  # preserves order
    assert not leq(make_epsilon(ext(1)), make_v(unit(1, 2)))


@given(raw_jumps, raw_jumps, raw_jumps)
def test_leq_is_a_partial_order(p1, p2, p3):
    f, g, h = canonicalize(p1), canonicalize(p2), canonicalize(p3)
    assert leq(f, f)
    if leq(f, g) and leq(g, f):
        assert f == g
    if leq(f, g) and leq(g, h):
        assert leq(f, h)


def test_last_jump_to_one():
    assert last_jump_to_one(make_epsilon(ext(2))) == ext(2)
    assert last_jump_to_one(make_v(unit(1, 2))) == EXT_INF
    assert last_jump_to_one(make_epsilon(EXT_ZERO)) == EXT_ZERO


def test_serialize_examples():
    assert serialize(make_epsilon(ext(Fraction(3, 2)))) == "DDF v1\njump 3/2 1\n"
    assert parse_ddf("DDF v1") == EPS_INF
    assert parse_ddf("DDF v1\n# comment\n\njump 1 1/2\n") == DDF(((ext(1), unit(1, 2)),))


@given(raw_jumps)
def test_serialize_round_trip(pairs):
    f = canonicalize(pairs)
    assert parse_ddf(serialize(f)) == f


@pytest.mark.parametrize(
    "text, line",
    [
        ("DDF v2", 1),
        ("DDF v1\njump 1 1/2\njump 1 3/4", 3),
        ("DDF v1\njump 2 1/2\njump 3 1/4", 3),
        ("DDF v1\njump 2 0", 2),
        ("DDF v1\njump inf 1", 2),
        ("DDF v1\njump 1/0 1", 2),
        ("DDF v1\nleap 1 1", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(DdfParseError) as err:
        parse_ddf(text)
    assert err.value.line_no == line


def test_constructor_rejects_non_canonical():
    with pytest.raises(ValueError):
        DDF(((ext(1), unit(1, 2)), (ext(2), unit(1, 2))))
    with pytest.raises(ValueError):
        DDF(((EXT_INF, UNIT_ONE),))


@given(raw_jumps, raw_jumps)
def test_merged_probe_points_decide_equality(p1, p2):
    f, g = canonicalize(p1), canonicalize(p2)
    same_everywhere = all(
        f.value_at(x) == g.value_at(x) for x in merged_probe_points(f, g)
    )
    assert same_everywhere == (f == g)
