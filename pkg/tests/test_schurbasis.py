import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ssm_kit.errors import ArgumentError
from ssm_kit.ringcore import Poly
from ssm_kit.schurbasis import (
    RationalSeriesExpr,
    SchurSeries,
    apply_rho,
    conjugate,
    is_partition,
    partitions_of,
    partitions_up_to,
    residue_at_infinity,
    rho_kernel_test,
    schur_expand,
    schur_to_poly,
    sss_expand,
    straighten,
    straighten_by_rules,
)
from ssm_kit.suites import random_series_expr

from conftest import S, a, b, evaluate, z


@pytest.mark.parametrize(
    "v, expected",
    [((3, 4), (0, None)), ((3, 5), (-1, (4, 4))), ((3, 1, 0), (1, (3, 1))), ((), (1, ())), ((0, -1), (0, None))],
)
def test_straighten_examples(v, expected):
    assert straighten(v) == expected


@given(st.lists(st.integers(-2, 6), max_size=4))
def test_straighten_agrees_with_literal_rules(v):
    # both normal forms must coincide whatever order the rules fire in
    assert straighten(tuple(v)) == straighten_by_rules(v)


@given(st.lists(st.integers(0, 6), max_size=4))
def test_straighten_fixes_partitions(v):
    v = sorted(v, reverse=True)
    sign, lam = straighten(tuple(v))
    assert sign == 1 and lam == tuple(x for x in v if x)


def test_partition_helpers():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 2, 1))) == (4, 2, 2, 1)
    assert [len(list(partitions_of(w))) for w in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert all(is_partition(p) for p in partitions_up_to(6, max_length=3))
    assert len(partitions_up_to(4, max_length=2, max_part=2)) == 6


def test_schur_series_straightens_and_truncates():
    s = SchurSeries({(3, 5): 1, (4, 4): 1, (9,): 7}, cap=8)
    assert s.is_zero()
    assert S({"31": 1, "41": -4}, 5).to_str() == "Sc_3,1 - 4*Sc_4,1"
    with pytest.raises(ArgumentError):
        S({"1": 1}, 3).truncate(4)


def test_rho_examples():
    k, n = 2, 3
    assert apply_rho(S({"1": 1}, 3), k, n).poly == b(1) + b(2) + b(3) - a(1) - a(2)
    e2 = a(1) * a(2) + a(1) * a(3) + a(2) * a(3)
    assert apply_rho(S({"11": 1}, 3), 3, 0).poly == e2
    assert apply_rho(S({"": 1}, 3), k, n).poly == Poly.const(1)


def _bialternant(lam, xs):
    k = len(xs)
    lam = tuple(lam) + (0,) * (k - len(lam))

    def det(m):
        return sum(
            math.prod(m[i][p[i]] for i in range(k)) * _perm_sign(p) for p in itertools.permutations(range(k))
        )

    top = det([[x ** (lam[j] + k - 1 - j) for j in range(k)] for x in xs])
    bottom = det([[x ** (k - 1 - j) for j in range(k)] for x in xs])
    return Fraction(top, 1) / bottom


def _perm_sign(p):
    sign = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            sign = -sign
    return sign


@pytest.mark.parametrize("k", [1, 2, 3])
def test_rho_at_beta_zero_is_signed_bialternant(k):
    rng = random.Random(k)
    for lam in partitions_up_to(6, max_length=k):
        poly = schur_to_poly(lam, k, 0)
        for _ in range(2):
            xs = rng.sample(range(-7, 8), k)
            point = {f"a{i + 1}": x for i, x in enumerate(xs)}
            got = evaluate(poly, point) if not poly.is_zero() else 0
            assert got == (-1) ** sum(lam) * _bialternant(lam, xs)


def test_rho_sc31_is_s31():
    x1, x2 = 3, -5
    val = evaluate(apply_rho(S({"31": 1}, 4), 2, 0).poly, {"a1": x1, "a2": x2})
    assert val == _bialternant((3, 1), [x1, x2])


def test_kernel_test_matches_direct_evaluation():
    assert rho_kernel_test((1, 1, 1), 2, 0)
    assert not rho_kernel_test((5,), 1, 0)
    for k in range(0, 4):
        for n in range(0, 4):
            for lam in partitions_up_to(6):
                assert rho_kernel_test(lam, k, n) == schur_to_poly(lam, k, n).is_zero(), (lam, k, n)


@st.composite
def schur_series_in_k(draw, k=2, cap=6):
    lams = partitions_up_to(cap, max_length=k)
    chosen = draw(st.lists(st.sampled_from(lams), max_size=5))
    return SchurSeries({lam: draw(st.integers(-4, 4)) for lam in chosen}, cap)


@given(schur_series_in_k())
@settings(max_examples=40, deadline=None)
def test_schur_expand_inverts_rho(series):
    poly = apply_rho(series, 2, 0, 6).poly
    assert schur_expand(poly, 2, 6) == series


def test_sss_expand_on_geometric_example():
    expr = RationalSeriesExpr(z(1) ** 3 * z(2), [(1 - z(2), 1)], 2)
    assert sss_expand(expr, 8) == S({"31": 1, "32": 1, "33": 1, "44": -1}, 8)
    assert sss_expand(expr, 10) == S({"31": 1, "32": 1, "33": 1, "44": -1, "54": -1, "64": -1}, 10)
    assert residue_at_infinity(expr, 10) == sss_expand(expr, 10)


def test_sss_monomial_and_single_variable():
    assert sss_expand(RationalSeriesExpr(z(1) ** 3 * z(2), (), 2), 6) == S({"31": 1}, 6)
    assert sss_expand(RationalSeriesExpr(z(1) ** 4, (), 1), 6) == S({"4": 1}, 6)


@pytest.mark.parametrize("seed", range(50))
def test_sss_engine_matches_residue_oracle(seed):
    expr = random_series_expr(random.Random(seed))
    assert sss_expand(expr, 6) == residue_at_infinity(expr, 6)


def test_residue_route_on_weight_example():
    # f_I for k=1, n=2, I={2} at beta=0 is z; its image under rho is -a1
    got = residue_at_infinity(RationalSeriesExpr(z(1), (), 1), 4)
    assert apply_rho(got, 1, 0).poly == -a(1)


def test_rational_expr_validation():
    with pytest.raises(ArgumentError):
        RationalSeriesExpr(z(1), [(2 + z(1), 1)], 1)
    with pytest.raises(ArgumentError):
        RationalSeriesExpr(z(3), (), 2)
