import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ssm_kit.a2pp import (
    METHODS,
    d_determinant,
    fundamental_class_sigma,
    gamma_partitions,
    integer_determinant,
    disjoint_path_count,
    pascal_inverse_check,
    phi_class,
    phi_determinant_series,
    phi_from_strata,
    phi_top_product,
    ssm_sigma_closure_sieve,
    ssm_sigma_sieve,
    ssm_sigma_tssm,
    supersymmetry_check,
)
from ssm_kit.errors import ArgumentError
from ssm_kit.genfun import tssm
from ssm_kit.ringcore import Poly
from ssm_kit.schurbasis import apply_rho, partitions_up_to, schur_to_poly, sum_series

from conftest import S

SIGMA0_L1 = {
    "": 1, "2": -1, "3": 2, "21": 1, "4": -3, "31": -3, "211": -1,
    "5": 4, "41": 6, "311": 4, "2111": 1,
    "6": -5, "51": -10, "411": -10, "33": 1, "3111": -5, "21111": -1,
}


def test_gamma_region_for_column_partitions():
    assert gamma_partitions(0, 1, 4) == [(), (1,), (1, 1), (1, 1, 1), (1, 1, 1, 1)]
    assert all(lam[0] >= 3 and (len(lam) < 3 or lam[2] <= 3) for lam in gamma_partitions(2, 1, 8) if lam)


def test_sigma0_matches_printed_expansion_and_tssm_sum():
    series, value = ssm_sigma_tssm(1, 2, 0, 6)
    assert series == S(SIGMA0_L1, 6)
    columns = sum_series((tssm((1,) * m, 6).series for m in range(7)), 6)
    assert series == columns


def test_sieve_matches_gamma_route_examples():
    assert ssm_sigma_sieve(2, 3, 1, 6) == ssm_sigma_tssm(2, 3, 1, 6)[1]
    assert ssm_sigma_sieve(1, 2, 0, 6) == apply_rho(S(SIGMA0_L1, 6), 1, 2, 6)


@pytest.mark.parametrize("k, n", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_open_strata_add_up_to_closures(k, n):
    cap = 5
    for r in range(0, k + 1):
        closure = ssm_sigma_closure_sieve(k, n, r, cap)
        strata = sum((ssm_sigma_sieve(k, n, s, cap).poly for s in range(r, k + 1)), Poly.const(0))
        assert closure.poly == strata


@pytest.mark.parametrize("k, n", [(1, 2), (2, 3)])
def test_phi_recovered_from_strata(k, n):
    cap = 5
    for r in range(0, k + 1):
        both = phi_from_strata(k, n, r, cap)
        assert both["open"] == phi_class(r, k, n, cap)
        assert both["closure"] == phi_class(r, k, n, cap)


def test_pascal_inversion():
    assert all(pascal_inverse_check(size) for size in range(1, 7))


def test_fundamental_class_examples():
    assert fundamental_class_sigma(2, 3, 0) == Poly.const(1)
    assert fundamental_class_sigma(2, 3, 1) == schur_to_poly((2,), 2, 3)
    for k, n, r in [(2, 3, 1), (2, 2, 2)]:
        low = ssm_sigma_sieve(k, n, r, 6).poly
        assert low.homogeneous_part(low.low_degree()) == fundamental_class_sigma(k, n, r)


def _fraction_det(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    total = Fraction(0)
    size = len(rows)
    for p in itertools.permutations(range(size)):
        sign = (-1) ** sum(1 for i, j in itertools.combinations(range(size), 2) if p[i] > p[j])
        total += sign * math.prod(rows[i][p[i]] for i in range(size))
    return total


@given(st.integers(0, 4).flatmap(lambda m: st.lists(st.lists(st.integers(-6, 6), min_size=m, max_size=m), min_size=m, max_size=m)))
def test_bareiss_matches_leibniz(rows):
    assert integer_determinant(rows) == _fraction_det(rows)


def test_binomial_determinant_examples():
    for l in range(4):
        assert d_determinant((), (), 1, l) == 1
    with pytest.raises(ArgumentError):
        d_determinant((1, 1, 1), (), 2, 0)


@pytest.mark.parametrize("s", [1, 2])
@pytest.mark.parametrize("l", [0, 1, 2])
def test_binomial_determinant_counts_lattice_paths(s, l):
    for mu in partitions_up_to(4, max_length=s):
        for nu in partitions_up_to(4, max_length=s):
            assert d_determinant(mu, nu, s, l) == disjoint_path_count(mu, nu, s, l)


def test_binomial_determinants_nonnegative():
    for s in range(1, 4):
        for l in range(3):
            for mu in partitions_up_to(6, max_length=s):
                for nu in partitions_up_to(6, max_length=s):
                    assert d_determinant(mu, nu, s, l) >= 0


def test_phi_methods_agree():
    values = {m: phi_class(1, 2, 3, 6, m) for m in METHODS}
    assert values["sss"] == values["det"] == values["loc"]


@pytest.mark.parametrize("s, l", [(1, 0), (1, 2), (2, 0), (2, 1)])
def test_phi_top_stratum_is_product(s, l):
    cap = 6
    for m in METHODS:
        assert phi_class(s, s, s + l, cap, m) == phi_top_product(s, l, cap)
    assert ssm_sigma_tssm(s, s + l, s, cap)[1] == phi_top_product(s, l, cap)


def test_phi_zero_is_one():
    assert phi_class(0, 2, 3, 4).poly == Poly.const(1)


@pytest.mark.parametrize("s, l", [(1, 0), (1, 1), (2, 0), (2, 1)])
def test_phi_schur_terms_fit_in_hook(s, l):
    for lam, _ in phi_determinant_series(s, l, 9).items():
        assert len(lam) <= s or lam[s] <= s


def test_supersymmetry_example():
    assert supersymmetry_check(1, 1, 2, 5)


def test_argument_validation():
    with pytest.raises(ArgumentError):
        phi_class(3, 2, 3, 4)
    with pytest.raises(ArgumentError):
        phi_class(1, 2, 3, 4, "magic")
    with pytest.raises(ArgumentError):
        ssm_sigma_sieve(2, 1, 0, 4)
    with pytest.raises(ArgumentError):
        ssm_sigma_tssm(2, 3, 3, 4)
