import copy

import pytest

from heckeverify import build_glN_rep, build_kit
from heckeverify.baxter import k_minus_hat
from heckeverify.errors import DimensionMismatch, InternalMismatch
from heckeverify.hecke import murphy, murphy_inverse
from heckeverify.params import sample_params
from heckeverify.rings import LaurentPoly, rat
from heckeverify.tensor import PolyMatrix, embed_site, mat_proportional
from heckeverify.transfer import (build_t_one_boundary,
                                  build_t_two_boundary, check_aux_trace,
                                  check_commuting_family, check_degeneration,
                                  check_hamiltonian, explore_generic,
                                  extract_edges, hamiltonian,
                                  t_two_boundary_direct,
                                  t_two_boundary_factorized,
                                  verify_murphy_edges_one_boundary,
                                  verify_murphy_two_boundary)

from conftest import FIXED, SEEDS


# ---------------------------------------------------------------------------
# edges
# ---------------------------------------------------------------------------

def test_extract_edges():
    m = PolyMatrix((2,))
    m._set(0, 0, LaurentPoly({0: 1, 1: 2, 3: 5}))
    m._set(1, 1, LaurentPoly({1: 7}))
    e = extract_edges(m)
    assert (e.low_deg, e.high_deg) == (0, 3)
    assert e.low_coeff.get(0, 0) == LaurentPoly.const(1)
    assert e.low_coeff.get(1, 1).is_zero
    assert e.high_coeff.get(0, 0) == LaurentPoly.const(5)

    const = PolyMatrix.identity((2,))
    e = extract_edges(const)
    assert e.low_deg == e.high_deg == 0

    with pytest.raises(DimensionMismatch):
        extract_edges(PolyMatrix((2,)))


# ---------------------------------------------------------------------------
# one-boundary pipeline
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("dim", [2, 3])
def test_aux_trace_scalar_formula(dim):
    rep = build_glN_rep(dim, 2, FIXED)
    report = check_aux_trace(rep, 2)
    assert report.status == "pass"
    q = FIXED.q
    expected = LaurentPoly({0: q**dim, 1: -(1 / q) ** dim})
    assert report.ratio == str(expected)


def test_aux_trace_needs_twist(rep22):
    rep = copy.copy(rep22)
    rep.m_local = PolyMatrix.identity((2,))
    assert check_aux_trace(rep, 2).status == "fail"


def test_one_boundary_n1(rep22):
    res = build_t_one_boundary(rep22, 1)
    expected = embed_site(k_minus_hat(rep22, LaurentPoly.unit(1)), 0, rep22.layout)
    assert res.matrix == expected
    assert res.internal_ratio is not None


def test_one_boundary_unit_point_scalar(rep23):
    res = build_t_one_boundary(rep23, 3, cross_check=False)
    at_one = res.matrix.evaluate(rat(1))
    assert mat_proportional(at_one, rep23.identity()) is not None


def test_one_boundary_internal_ratio_value(rep22):
    # the direct trace equals (q - 1/q) * f(u^2) * factorized at two sites
    res = build_t_one_boundary(rep22, 2)
    q = FIXED.q
    assert res.internal_ratio is not None
    assert res.internal_ratio.num == LaurentPoly.const(q - 1 / q)
    assert res.internal_ratio.den == LaurentPoly.const(1)


@pytest.mark.parametrize("n", [2, 3])
def test_one_boundary_edges(n):
    rep = build_glN_rep(2, n, FIXED)
    reports = verify_murphy_edges_one_boundary(rep, n)
    assert all(r.status == "pass" for r in reports)
    res = build_t_one_boundary(rep, n, cross_check=False)
    assert res.matrix.min_degree() == 0
    assert res.matrix.max_degree() == 2 * n
    edges = extract_edges(res.matrix)
    # zero-order coefficient is exactly the boundary-family element
    assert edges.low_coeff == murphy(rep, "B", n - 1)


def test_one_boundary_hierarchy_sub_n(rep23):
    # n below the chain length acts as identity on the remaining sites
    reports = verify_murphy_edges_one_boundary(rep23, 2)
    assert all(r.status == "pass" for r in reports)


@pytest.mark.parametrize("n", [2, 3])
def test_corollary_edges(n):
    rep = build_glN_rep(2, n, FIXED)
    reports = verify_murphy_edges_one_boundary(rep, n, trivial_k=True)
    assert all(r.status == "pass" for r in reports)
    res = build_t_one_boundary(rep, n, trivial_k=True, cross_check=False)
    edges = extract_edges(res.matrix)
    assert edges.low_coeff == murphy(rep, "A", n - 1)
    assert mat_proportional(edges.high_coeff, murphy_inverse(rep, "A", n - 1)) is not None


# ---------------------------------------------------------------------------
# two-boundary pipeline
# ---------------------------------------------------------------------------

def test_t_minus_factorized_zero_order(rep22):
    fac = t_two_boundary_factorized(rep22, "minus")
    assert fac.coefficient(0) == rep22.bn * rep22.braid[1] * rep22.b0 * rep22.braid[1]
    assert fac.coefficient(0) == murphy(rep22, "C", 1)
    # total degree: boundary factors contribute 2N each, bulk 2N(N-1)
    n = rep22.sites
    assert fac.max_degree() == 2 * n * n + 2 * n


def test_t_plus_factorized_zero_order(rep22):
    fac = t_two_boundary_factorized(rep22, "plus")
    assert fac.coefficient(0) == murphy(rep22, "C", 0)
    n = rep22.sites
    assert fac.max_degree() == n * n + n + 2


def test_build_two_boundary_minus(rep22, kit22):
    res = build_t_two_boundary(rep22, kit22, "minus")
    assert res.internal_ratio is not None
    assert not res.internal_ratio.num.is_zero


def test_build_two_boundary_plus(rep22, kit22):
    res = build_t_two_boundary(rep22, kit22, "plus")
    assert res.internal_ratio is None  # only the edges are shared
    assert res.edge_ratio.is_scalar
    # both edges of the family member match the factorized product
    from heckeverify.tensor import mat_proportional as mp
    ed, ef = extract_edges(res.direct), extract_edges(res.factorized)
    assert mp(ed.high_coeff, ef.high_coeff) is not None


def test_two_boundary_internal_mismatch_detected(rep22, kit22):
    kit = copy.copy(kit22)
    a0, a1, a2 = kit22.aplus
    kit.aplus = (a0, a1.scale(rat(3)), a2)
    with pytest.raises(InternalMismatch):
        build_t_two_boundary(rep22, kit, "minus")


@pytest.mark.parametrize("dim,sites", [(2, 2), (2, 3), (3, 2)])
def test_murphy_two_boundary_four_points(dim, sites):
    rep = build_glN_rep(dim, sites, FIXED)
    kit = build_kit(rep)
    reports = verify_murphy_two_boundary(rep, kit)
    assert len(reports) == 4
    assert all(r.status == "pass" for r in reports)


def test_two_boundary_direct_family_commutes(rep22, kit22):
    a = t_two_boundary_direct(rep22, kit22, 2).evaluate(rat(3, 7))
    b = t_two_boundary_direct(rep22, kit22, 1).evaluate(rat(3, 7))
    assert a * b == b * a


def test_degeneration(fixed_params):
    rep_deg = build_glN_rep(2, 2, fixed_params, degenerate_right=True)
    assert check_degeneration(rep_deg).status == "pass"
    rep_deg3 = build_glN_rep(2, 3, fixed_params, degenerate_right=True)
    assert check_degeneration(rep_deg3).status == "pass"


# ---------------------------------------------------------------------------
# Hamiltonian and commuting family
# ---------------------------------------------------------------------------

def closed_form_coeffs(params, n):
    s = params.q - 1 / params.q
    kappa = params.Q0 - 1 / params.Q0 + params.c_minus
    beta = 4 * s ** (2 * n - 3) * kappa
    gamma = 4 * s ** (2 * n - 2)
    alpha = -2 * s ** (2 * n - 2) * (2 * (n - 1) * kappa + params.c_minus
                                     + 2 * (params.Q0 - 1 / params.Q0))
    return alpha, beta, gamma


@pytest.mark.parametrize("n", [2, 3])
def test_hamiltonian_closed_form(n):
    rep = build_glN_rep(2, n, FIXED)
    res = hamiltonian(rep, n)
    alpha, beta, gamma = closed_form_coeffs(FIXED, n)
    assert res.coefficients["identity"] == alpha
    assert res.coefficients["g[0]"] == gamma
    for i in range(1, n):
        assert res.coefficients[f"g[{i}]"] == beta  # site independent


def test_hamiltonian_checks(rep23):
    reports = check_hamiltonian(rep23, 3)
    assert all(r.status == "pass" for r in reports)


@pytest.mark.parametrize("seed", SEEDS)
def test_commuting_family(seed):
    rep = build_glN_rep(2, 3, sample_params(seed))
    assert check_commuting_family(rep, 3, seed=seed).status == "pass"


def test_commuting_family_needs_reflection_solution(rep23):
    rep = copy.copy(rep23)
    rep.g0_inv_local = PolyMatrix.identity((2,))  # boundary no longer solves RE
    assert check_commuting_family(rep, 3).status == "fail"


# ---------------------------------------------------------------------------
# exploration
# ---------------------------------------------------------------------------

def test_explore_boundary_case_equals_t_minus(rep23, kit23):
    reports = explore_generic(rep23, kit23, rep23.sites)
    notes = {r.check_name: r.note for r in reports}
    assert "low~J_C[2]" in notes["explore/lattice[p=3]"]
    assert "low~J_C[2]^-1" in notes["explore/lattice[p=-3]"]


def test_explore_intermediate_point_finds_middle_element(rep23, kit23):
    reports = explore_generic(rep23, kit23, 2)
    notes = {r.check_name: r.note for r in reports}
    assert "low~J_C[1]" in notes["explore/lattice[p=2]"]
    assert "low~J_C[1]^-1" in notes["explore/lattice[p=-2]"]
