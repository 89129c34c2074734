import random

import pytest

from ssm_kit.cellgeom import ColumnSet, enumerate_orbits
from ssm_kit.errors import ArgumentError
from ssm_kit.ringcore import Poly, poly_product
from ssm_kit.schurbasis import apply_rho, schur_expand
from ssm_kit.weightfn import (
    beta_zero,
    codimension,
    csm_cell,
    csm_coordinate_arrangement,
    schubert_cell_classes,
    ssm_cell,
    total_space_euler,
    verify_interpolation_axioms,
    weight_function,
    weight_function_residue_beta0,
)

from conftest import S, a, b


def W(k, n, *els):
    return weight_function(ColumnSet(k, n, els))


def test_weight_functions_k1_n2():
    assert W(1, 2, 1) == 1 + b(2) - a(1)
    assert W(1, 2, 2) == b(1) - a(1)
    assert W(1, 2) == (b(1) - a(1)) * (b(2) - a(1))


def test_weight_function_k2_n2():
    expected = 1 + b(1) + b(2) + 2 * b(1) * b(2) - (a(1) + a(2)) * (b(1) + b(2)) - a(1) - a(2) + 2 * a(1) * a(2)
    assert W(2, 2, 1, 2) == expected


def test_weight_degree_is_codimension():
    for I in enumerate_orbits(2, 3):
        assert weight_function(I).degree() == 6 - I.d == codimension(I) + cell_dim_correction(I)


def cell_dim_correction(I):
    # deg W = kn - d while codim = kn - dim, so the gap is dim - d
    from ssm_kit.cellgeom import cell_geometry

    return cell_geometry(I).dimension - I.d


@pytest.mark.parametrize("k, n", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)])
def test_csm_classes_add_up_to_total_chern_class(k, n):
    total = poly_product(1 + b(v) - a(u) for v in range(1, n + 1) for u in range(1, k + 1))
    assert sum((weight_function(I) for I in enumerate_orbits(k, n)), Poly.const(0)) == total


def test_lowest_part_is_fundamental_class_of_open_cell():
    # the lowest part of W for the dense cell is 1, and for {} it is the Euler class of the whole space
    assert W(2, 3, 1, 2).homogeneous_part(0) == Poly.const(1)
    assert W(2, 3) == total_space_euler(2, 3)


def test_residue_route_examples():
    assert weight_function_residue_beta0(ColumnSet(1, 2, (2,))) == -a(1)
    assert weight_function_residue_beta0(ColumnSet(1, 2, ())) == a(1) ** 2


@pytest.mark.parametrize("k, n", [(1, 3), (2, 3), (2, 4), (3, 3)])
def test_residue_route_matches_symmetrization(k, n):
    for I in enumerate_orbits(k, n):
        assert weight_function_residue_beta0(I) == beta_zero(weight_function(I), n), I


def test_example_csm_and_ssm_expansions_n4():
    I = ColumnSet(2, 4, (2,))
    csm = schur_expand(csm_cell(I, beta0=True).value, 2)
    assert csm == S({"31": 1, "41": 1, "32": 1, "42": 2, "33": -1, "43": 1}, csm.cap)
    ssm = schur_expand(ssm_cell(I, 7, beta0=True).value.poly, 2, 7)
    assert ssm == S({"31": 1, "41": -3, "32": -3, "51": 6, "42": 10, "33": 5, "61": -10, "52": -22, "43": -17}, 7)


def test_example_csm_expansion_n5():
    I = ColumnSet(2, 5, (2, 5))
    csm = schur_expand(csm_cell(I, beta0=True).value, 2)
    assert csm == S({"31": 1, "41": 1, "32": 2, "42": 3, "43": 3, "44": 2}, csm.cap)


def test_ssm_cell_rejects_small_cap():
    with pytest.raises(ArgumentError):
        ssm_cell(ColumnSet(2, 4, ()), 7)


def test_ssm_times_total_chern_class_is_csm():
    I = ColumnSet(2, 3, (2,))
    cap = 7
    ssm = ssm_cell(I, cap).value
    c_total = poly_product(1 + b(v) - a(u) for v in range(1, 4) for u in range(1, 3))
    assert (ssm * c_total).poly == csm_cell(I).value.truncate(cap)


@pytest.mark.parametrize("k, n", [(0, 2), (1, 2), (2, 3), (3, 3)])
def test_axioms_hold_for_weight_functions(k, n):
    report = verify_interpolation_axioms({I: weight_function(I) for I in enumerate_orbits(k, n)}, k, n)
    assert report.passed, report.summary()


def test_axiom_checker_localizes_perturbations():
    k, n = 2, 3
    orbits = enumerate_orbits(k, n)
    euler = total_space_euler(k, n)
    rng = random.Random(7)
    for _ in range(20):
        victim = rng.choice(orbits)
        classes = {I: weight_function(I) for I in orbits}
        classes[victim] = classes[victim] + euler.scale(rng.choice([-2, -1, 1, 3]))
        report = verify_interpolation_axioms(classes, k, n)
        assert not report.passed
        assert {omega for omega, _, _ in report.failures()} == {victim}


def test_axiom_checker_needs_every_class():
    with pytest.raises(ArgumentError):
        verify_interpolation_axioms({}, 1, 1)


def test_coordinate_arrangement_example():
    alpha, beta = a(1), b(1)
    w = [alpha, 2 * beta, Poly.const(0)]
    X, Y = ("sub", [0]), ("sub", [1])
    assert csm_coordinate_arrangement(w, X) == (1 + 2 * beta) * alpha
    assert csm_coordinate_arrangement(w, Y) == (1 + alpha) * 2 * beta
    assert csm_coordinate_arrangement(w, ("meet", [X, Y])) == 2 * alpha * beta
    assert csm_coordinate_arrangement(w, ("union", [X, Y])) == alpha + 2 * beta + 2 * alpha * beta
    assert csm_coordinate_arrangement(w, ("sub", [])) == (1 + alpha) * (1 + 2 * beta)
    with pytest.raises(ArgumentError):
        csm_coordinate_arrangement(w, ("sub", [5]))
    with pytest.raises(ArgumentError):
        csm_coordinate_arrangement(w, ("xor", []))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schubert_matrix_csm_is_weight_function(n):
    for I in enumerate_orbits(2, n):
        if I.is_full_rank:
            c = schubert_cell_classes(I, "matrix-csm")
            assert c.value == weight_function(I)
            assert apply_rho(c.schur, 2, 0).poly == beta_zero(c.value, n).truncate(c.schur.cap)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schubert_matrix_ssm_is_ssm_cell(n):
    cap = 6
    for I in enumerate_orbits(2, n):
        if I.is_full_rank and codimension(I) <= cap:
            c = schubert_cell_classes(I, "matrix-ssm", cap)
            assert c.value == ssm_cell(I, cap).value
            assert apply_rho(c.schur, 2, 0, cap) == ssm_cell(I, cap, beta0=True).value


@pytest.mark.parametrize("k, n", [(1, 3), (2, 3), (2, 4)])
def test_grassmannian_csm_two_routes(k, n):
    for I in enumerate_orbits(k, n):
        if I.is_full_rank:
            cap = k * (n - k) + 2
            c = schubert_cell_classes(I, "grassmannian-csm", cap)
            assert apply_rho(c.schur, k, 0, cap).poly == beta_zero(c.value.poly, n).truncate(cap)


def test_schubert_variants_validate():
    with pytest.raises(ArgumentError):
        schubert_cell_classes(ColumnSet(2, 3, (1,)), "matrix-csm")
    with pytest.raises(ArgumentError):
        schubert_cell_classes(ColumnSet(1, 3, (1,)), "bogus")
