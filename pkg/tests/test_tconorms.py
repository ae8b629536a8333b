import random
from fractions import Fraction
from itertools import product

import pytest

from deltaplus.rationals import EXT_INF, EXT_ZERO, ext
from deltaplus.tconorms import (
    CatalogError,
    catalog_tconorm,
    catalog_tconorm_spec,
    check_LCS,
    check_LS,
    check_tconorm_axioms,
    idempotents,
    is_archimedean,
    squash,
    unsquash,
)

BUDGET = 300
SEED = 20240811

ALL_SPECS = ["max", "plus", "nilpotent_rat", "drastic", "osum_trunc:2", "osum_strict:2"]

GRID = [
    EXT_ZERO,
    ext(Fraction(1, 4)),
    ext(Fraction(1, 2)),
    ext(1),
    ext(Fraction(3, 2)),
    ext(2),
    ext(Fraction(5, 2)),
    ext(4),
    EXT_INF,
]


def test_catalog_values():
    plus = catalog_tconorm("plus")
    assert plus(ext(Fraction(3, 2)), EXT_INF) == EXT_INF
    assert catalog_tconorm("drastic")(ext(Fraction(1, 2)), ext(Fraction(1, 2))) == EXT_INF
    ot2 = catalog_tconorm("osum_trunc", 2)
    assert ot2(ext(Fraction(3, 2)), ext(Fraction(9, 5))) == ext(2)
    assert ot2(ext(Fraction(1, 2)), ext(1)) == ext(Fraction(3, 2))
    assert catalog_tconorm("max")(ext(1), ext(3)) == ext(3)


def test_spec_string_parsing_and_errors():
    assert catalog_tconorm_spec("osum_strict:3/2").param == Fraction(3, 2)
    with pytest.raises(CatalogError):
        catalog_tconorm_spec("osum_trunc")
    with pytest.raises(CatalogError):
        catalog_tconorm("osum_trunc", 0)
    with pytest.raises(CatalogError):
        catalog_tconorm("plus", 2)
    with pytest.raises(CatalogError):
        catalog_tconorm_spec("bogus")
    with pytest.raises(CatalogError):
        catalog_tconorm_spec("osum_trunc:x")


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_catalog_passes_axioms(spec):
    verdict = check_tconorm_axioms(catalog_tconorm_spec(spec), BUDGET, SEED)
    assert verdict.passed


@pytest.mark.parametrize("spec", ["nilpotent_rat", "osum_trunc:2", "osum_strict:2", "drastic"])
def test_associativity_by_brute_force(spec):
    l = catalog_tconorm_spec(spec)
    for u, v, w in product(GRID, repeat=3):
        assert l(l(u, v), w) == l(u, l(v, w))
    for u in GRID:
        assert l(u, EXT_ZERO) == u


def test_squash_is_an_order_isomorphism():
    values = sorted(squash(x) for x in GRID)
    assert values == [squash(x) for x in GRID]
    for x in GRID:
        assert unsquash(squash(x)) == x


def test_nilpotent_is_isomorphic_to_truncated_addition():
    nil = catalog_tconorm("nilpotent_rat")
    for u, v in product(GRID, repeat=2):
        assert squash(nil(u, v)) == min(squash(u) + squash(v), Fraction(1))


def test_osum_strict_blocks():
    os2 = catalog_tconorm("osum_strict", 2)
    # above the idempotent it is the maximum
    assert os2(ext(3), ext(Fraction(5, 2))) == ext(3)
    assert os2(ext(1), ext(3)) == ext(3)
    # on [0, p] it is strictly increasing in each place where finite
    below = [ext(Fraction(k, 4)) for k in range(8)]
    for u in below:
        row = [os2(u, v) for v in below]
        assert all(a < b for a, b in zip(row, row[1:]))
    assert os2(ext(2), ext(2)) == ext(2)
    assert os2(ext(2), ext(Fraction(1, 2))) == ext(2)


def test_lcs_witness_for_truncated_ordinal_sum():
    verdict = check_LCS(catalog_tconorm("osum_trunc", 2), BUDGET, SEED)
    assert not verdict.passed
    w = verdict.witness
    assert (w.u, w.v) == (ext(Fraction(3, 2)), ext(Fraction(9, 5)))
    assert w.u_hi == w.v_hi == ext(Fraction(19, 10))
    assert w.value_lo == w.value_hi == ext(2)


def test_ls_failure_for_nilpotent_has_infinite_values():
    verdict = check_LS(catalog_tconorm("nilpotent_rat"), BUDGET, SEED)
    assert not verdict.passed
    assert verdict.witness.value_lo == EXT_INF
    assert verdict.witness.value_hi == EXT_INF


@pytest.mark.parametrize(
    "spec, ls, lcs",
    [
        ("max", True, True),
        ("plus", True, True),
        ("nilpotent_rat", False, True),
        ("drastic", False, True),
        ("osum_trunc:2", False, False),
        ("osum_strict:2", True, True),
    ],
)
def test_strictness_classification(spec, ls, lcs):
    l = catalog_tconorm_spec(spec)
    assert check_LS(l, BUDGET, SEED).passed == ls
    assert check_LCS(l, BUDGET, SEED).passed == lcs
    assert l.declared.satisfies_ls == ls
    assert l.declared.satisfies_lcs == lcs


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_ls_implies_lcs(spec):
    l = catalog_tconorm_spec(spec)
    if check_LS(l, BUDGET, SEED).passed:
        assert check_LCS(l, BUDGET, SEED).passed


def test_idempotent_examples():
    small = {ext(Fraction(1, 2)), ext(1), ext(2)}
    assert idempotents(catalog_tconorm("plus"), small) == {EXT_ZERO, EXT_INF}
    assert idempotents(catalog_tconorm("max"), small) == small | {EXT_ZERO, EXT_INF}
    assert idempotents(catalog_tconorm("osum_trunc", 2), {ext(1), ext(2), ext(3)}) == {
        EXT_ZERO,
        ext(2),
        ext(3),
        EXT_INF,
    }


@pytest.mark.parametrize(
    "spec, archimedean, witness",
    [
        ("plus", True, None),
        ("nilpotent_rat", True, None),
        ("drastic", True, None),
        ("max", False, ext(1)),
        ("osum_trunc:2", False, ext(2)),
        ("osum_strict:2", False, ext(2)),
    ],
)
def test_archimedean_classification(spec, archimedean, witness):
    verdict = is_archimedean(catalog_tconorm_spec(spec), BUDGET, SEED)
    assert verdict.passed == archimedean
    if witness is not None:
        assert verdict.witness.point[0] == witness


def test_max_below_every_entry_below_drastic():
    rng = random.Random(SEED)
    mx, dr = catalog_tconorm("max"), catalog_tconorm("drastic")
    for spec in ALL_SPECS:
        l = catalog_tconorm_spec(spec)
        for _ in range(200):
            u = ext(Fraction(rng.randint(0, 32), 8))
            v = ext(Fraction(rng.randint(0, 32), 8))
            assert mx(u, v) <= l(u, v) <= dr(u, v)


def test_drastic_is_discontinuous_off_corners():
    dr = catalog_tconorm("drastic")
    for k in (1, 2, 10, 100):
        assert dr(ext(Fraction(1, k)), ext(1)) == EXT_INF
    assert dr(EXT_ZERO, ext(1)) == ext(1)
    assert not dr.declared.is_continuous
    assert not dr.declared.is_continuous_off_corners


def test_idempotent_hints_are_sound():
    for spec in ALL_SPECS:
        l = catalog_tconorm_spec(spec)
        for hint in l.idempotent_hints:
            assert l(hint, hint) == hint
