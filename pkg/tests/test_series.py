from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypkac.errors import RegionViolation, UnsupportedTypeC
from hypkac.rootlat import RootVec
from hypkac.series import (
    CasimirData,
    Kind,
    KpmKind,
    RootType,
    Variant,
    base_point_closed_form,
    cartan_modules,
    casimir_8mu,
    classify_L,
    exception_sweep,
    figure_dataset,
    monotonicity_scan,
    principal_tuples,
    real_roots_in_L,
    root_type,
    s1_zero_status,
    series_kind,
    sweep_discrepancies,
    sweep_n,
    type_grid,
    type_theorem_counterexamples,
)
from hypkac.triple import make_config, roots_in_L

STAR_IJ = {(4, 1, 0), (3, 1, 0), (3, 2, 1), (3, 3, 2), (3, 4, 3)}
STAR_IJ1 = {(a, 0, 0) for a in range(3, 19)} | {(5, 1, 1), (4, 1, 1), (3, 1, 1), (3, 1, 0), (3, 2, 2), (3, 3, 3), (3, 4, 4)}


def test_root_type_examples():
    assert root_type(make_config(3, 1, 1), RootVec(1, 1)) is RootType.A
    assert root_type(make_config(3, 1, 2), RootVec(1, 3)) is RootType.B
    assert root_type(make_config(3, 1, 2), RootVec(2, 5)) is RootType.C
    with pytest.raises(RegionViolation):
        root_type(make_config(3, 1, 1), RootVec(3, 1))


def test_casimir_examples():
    assert casimir_8mu(make_config(5, 1, 1), RootVec(1, 0)).eight_mu == Fraction(-25, 27)
    assert casimir_8mu(make_config(4, 1, 1), RootVec(1, 0)).eight_mu == Fraction(-32, 25)
    assert casimir_8mu(make_config(3, 1, 1), RootVec(1, 1)).eight_mu == -1
    with pytest.raises(UnsupportedTypeC):
        casimir_8mu(make_config(3, 1, 1), RootVec(2, 1))


def test_s1_zero_status_examples():
    # the (3,1,0) module: disc = 1/4 - 3/2 < 0
    assert s1_zero_status(CasimirData(Fraction(1, 2), Fraction(-3, 8), Fraction(0))).kind is KpmKind.NO_REAL_SOLUTION
    st0 = s1_zero_status(CasimirData(Fraction(1, 2), Fraction(0), Fraction(0)))
    assert st0.kind is KpmKind.INTEGER_SOLUTION and st0.k == 0 and str(st0) == "integer_solution(0)"
    assert s1_zero_status(CasimirData(Fraction(0), Fraction(-1, 4), Fraction(-1))).kind is KpmKind.RATIONAL_NON_INTEGER
    assert s1_zero_status(CasimirData(Fraction(1, 3), Fraction(-1, 100), Fraction(0))).kind is KpmKind.IRRATIONAL_PAIR


@given(st.fractions(min_value=-4, max_value=4, max_denominator=50), st.fractions(min_value=-2, max_value=0, max_denominator=50))
def test_s1_zero_status_matches_definition(lam, k0):
    data = CasimirData(lam, k0, lam * lam - 2 * lam + 4 * k0)
    status = s1_zero_status(data)
    disc = data.discriminant
    # s1(k) = (8 mu - (lam + 2k - 1)^2 + 1) / 4 vanishes exactly at the reported integer
    if status.kind is KpmKind.INTEGER_SOLUTION:
        k = status.k
        assert data.eight_mu - (lam + 2 * k - 1) ** 2 + 1 == 0
    elif status.kind is KpmKind.NO_REAL_SOLUTION:
        assert disc < 0
    else:
        assert disc >= 0
        for k in range(-10, 11):
            assert data.eight_mu - (lam + 2 * k - 1) ** 2 + 1 != 0


def test_series_kind_examples():
    assert series_kind(make_config(4, 1, 1), RootVec(1, 0)).kind is Kind.UNITARY_PRINCIPAL
    assert series_kind(make_config(5, 1, 1), RootVec(1, 0)).kind is Kind.COMPLEMENTARY
    v = series_kind(make_config(3, 1, 1), RootVec(2, 1))
    assert v.kind is Kind.ROUTED_TO_PARTNER and v.partner == RootVec(1, 0) and v.residual == 0
    assert series_kind(make_config(3, 1, 1), RootVec(1, 1)).kind is Kind.LOWEST_WEIGHT
    assert series_kind(make_config(3, 1, 1), RootVec(-1, -1)).kind is Kind.HIGHEST_WEIGHT


def test_type_c_residuals():
    # mult(3,7) = 2 for a = 3, so one dimension is left over after the partner line
    v = series_kind(make_config(3, 2, 2), RootVec(3, 7))
    assert v.kind is Kind.ROUTED_TO_PARTNER and v.residual == 1


def test_cartan_modules():
    sl2, cartan = cartan_modules(make_config(3, 1, 1))
    assert sl2.kind is Kind.SL2_ITSELF and not sl2.unitarizable
    assert cartan.kind is Kind.CARTAN_PRINCIPAL and cartan.series is Kind.UNITARY_PRINCIPAL
    assert cartan.kpm_status.kind is KpmKind.NO_REAL_SOLUTION


# type-C residuals need multiplicities of roots near theta, so keep the boxes small
@pytest.mark.parametrize("a,i,j", [(a, i, j) for a in (3, 4, 5) for i in range(3) for j in range(max(0, i - 1), i + 2)])
def test_verdict_invariants(a, i, j):
    cfg = make_config(a, i, j)
    for v in classify_L(cfg):
        if v.kind in (Kind.UNITARY_PRINCIPAL, Kind.COMPLEMENTARY):
            assert v.kpm_status.kind is not KpmKind.INTEGER_SOLUTION
            assert (v.kind is Kind.UNITARY_PRINCIPAL) == (v.eight_mu <= -1)
            assert v.full_line
        n = series_kind(cfg, -v.root)
        assert n.root_type is v.root_type
        if v.eight_mu is not None:
            assert n.eight_mu == v.eight_mu


def test_spot_values():
    assert casimir_8mu(make_config(3, 1, 1), RootVec(1, 0)).eight_mu == Fraction(-9, 4)
    assert casimir_8mu(make_config(3, 2, 2), RootVec(3, 1)).eight_mu == Fraction(-168, 121)
    assert casimir_8mu(make_config(18, 0, 1), RootVec(0, 1)).eight_mu == -1
    assert series_kind(make_config(18, 0, 1), RootVec(0, 1)).kind is Kind.UNITARY_PRINCIPAL
    assert series_kind(make_config(19, 0, 1), RootVec(0, 1)).kind is Kind.COMPLEMENTARY


def test_sweep_n_labels():
    assert sweep_n(make_config(3, 2, 2), RootVec(3, 1)) == 1
    assert sweep_n(make_config(3, 2, 2), RootVec(1, 0)) == 0
    assert sweep_n(make_config(3, 1, 2), RootVec(0, 1)) == 0
    assert sweep_n(make_config(3, 1, 2), RootVec(1, 3)) == 1


def test_exception_lists_small_range():
    star = exception_sweep(8, 4, Variant.STAR, "ij")
    assert set(principal_tuples(star)) == STAR_IJ
    star1 = exception_sweep(20, 4, Variant.STAR, "ij1")
    assert set(principal_tuples(star1)) == STAR_IJ1
    assert [r.key for r in star] == sorted(r.key for r in star)


def test_discrepancies_are_the_pairing_changes():
    star = exception_sweep(6, 4, Variant.STAR, "ij")
    pairing = exception_sweep(6, 4, Variant.PAIRING, "ij")
    diffs = sweep_discrepancies(star, pairing)
    assert {(s.a, s.i, s.n) for s, _ in diffs} == {(3, 3, 2), (3, 4, 3)}
    for s, p in diffs:
        assert s.kind is Kind.UNITARY_PRINCIPAL and p.kind is Kind.COMPLEMENTARY


def test_real_roots_in_L_pattern_matches_scan():
    from hypkac.rootlat import RootKind, root_kind

    for a in (3, 4, 5):
        for i in range(4):
            for j in (i, i + 1):
                cfg = make_config(a, i, j)
                scan = [v for v in roots_in_L(cfg) if root_kind(a, v) is RootKind.REAL]
                assert real_roots_in_L(cfg) == scan


@pytest.mark.parametrize("shape", ["ij", "ij1"])
def test_monotonicity_star(shape):
    rep = monotonicity_scan(shape, range(3, 16), range(8), Variant.STAR)
    assert rep.ok, rep.violations
    assert all(rep.checked.values())


def test_monotonicity_pairing_ij1_records_violations():
    rep = monotonicity_scan("ij1", range(3, 8), range(4), Variant.PAIRING)
    assert rep.passed("i") and rep.passed("a")
    assert not rep.passed("n") and not rep.passed("base")


def test_base_point_closed_forms():
    for a in range(3, 31):
        cfg = make_config(a, 1, 1)
        assert casimir_8mu(cfg, RootVec(1, 0)).eight_mu == base_point_closed_form("ij", a)
        cfg = make_config(a, 0, 1)
        assert casimir_8mu(cfg, RootVec(0, 1)).eight_mu == base_point_closed_form("ij1", a) == Fraction(-16, a - 2)


def test_figure_sets():
    d = figure_dataset(make_config(3, 1, 1))
    assert d.points["type_a"] == [RootVec(1, 1)]
    assert set(d.points["type_b"]) == {RootVec(1, 0), RootVec(0, 1)}
    assert set(d.points["type_c"]) == {RootVec(2, 1), RootVec(1, 2)}
    assert set(d.points["roots_of_x"]) == {RootVec(3, 1), RootVec(1, 3)}
    assert len(figure_dataset(make_config(3, 2, 2)).points["imaginary"]) == 25


@pytest.mark.parametrize("a,i,j", [(a, i, j) for a in (3, 4) for i in range(4) for j in range(max(0, i - 1), i + 2)])
def test_type_grid_matches_scalar(a, i, j):
    cfg = make_config(a, i, j)
    g = type_grid(cfg)
    assert ["ABC"[c] for c in g.code] == [root_type(cfg, v).value for v in roots_in_L(cfg)]
    assert not any(type_theorem_counterexamples(cfg, g).values())
