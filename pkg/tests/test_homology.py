import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_rep, sympy_hom_dim
from tautilt.homology import (AtLeast, dtr, ext1_dim, ext_dim, g_vector, is_projective, min_presentation, nu,
                              pd_capped, random_module, syzygy, tau, top_dims)
from tautilt.rep import direct_sum, hom_dim, indec_injective, indec_projective, is_isomorphic, simple, tensor_module


def euler_form(alg, x, y) -> int:
    """Ringel form of an acyclic quiver from the vertex and arrow counts alone."""
    val = sum(a * b for a, b in zip(x, y))
    for k, _ in enumerate(alg.arrow_elems):
        s, t = alg.arrow_ends(k)
        val -= x[s] * y[t]
    return val


@pytest.mark.parametrize("fx", ["a3", "a3rad2", "lam", "dual_a2"])
def test_tau_is_dtr(fx, request):
    alg = request.getfixturevalue(fx)
    rng = random.Random(11)
    for _ in range(6):
        M = random_module(alg, rng)
        if M.total == 0:
            continue
        assert is_isomorphic(tau(M), dtr(M))


def test_tau_of_projective_is_zero(lam):
    for i in range(lam.n):
        assert tau(indec_projective(lam, i)).total == 0


def test_auslander_reiten_translate_a3(a3):
    # tau S2 = S3 and tau S1 = S2 for 1 -> 2 -> 3
    assert is_isomorphic(tau(simple(a3, 0)), simple(a3, 1))
    assert is_isomorphic(tau(simple(a3, 1)), simple(a3, 2))
    assert is_isomorphic(tau(indec_injective(a3, 1)), indec_projective(a3, 1))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_ar_duality_hereditary(a3, data):
    ints = lambda: data.draw(st.integers(-1, 1))
    dm = data.draw(st.lists(st.integers(0, 2), min_size=3, max_size=3))
    dn = data.draw(st.lists(st.integers(0, 2), min_size=3, max_size=3))
    M, N = random_rep(a3, ints, dm), random_rep(a3, ints, dn)
    e = ext1_dim(M, N)
    assert e == hom_dim(N, tau(M))
    assert sympy_hom_dim(M, N) - e == euler_form(a3, M.dims, N.dims)
    assert ext_dim(2, M, N) == 0


def test_ar_duality_kronecker():
    from tautilt.algebra import Arrow, Quiver, path_algebra
    K = path_algebra(Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2"))))
    rng = random.Random(5)
    for _ in range(8):
        M, N = random_module(K, rng), random_module(K, rng)
        assert ext1_dim(M, N) == hom_dim(N, tau(M))
        assert hom_dim(M, N) - ext1_dim(M, N) == euler_form(K, M.dims, N.dims)


def test_pd_rad_square(a3rad2):
    S = [simple(a3rad2, i) for i in range(3)]
    assert [pd_capped(s) for s in S] == [2, 1, 0]
    assert ext_dim(2, S[0], S[2]) == 1
    assert ext_dim(1, S[0], S[1]) == 1


def test_pd_cap_reports_lower_bound(dual_a2):
    S = simple(dual_a2, 0)
    p = pd_capped(S, 3)
    assert isinstance(p, AtLeast) and p == AtLeast(3)


def test_projectivity_and_syzygy(a3):
    assert is_projective(indec_projective(a3, 0))
    assert not is_projective(simple(a3, 0))
    assert is_isomorphic(syzygy(simple(a3, 0)), indec_projective(a3, 1))


def test_g_vectors(a2, lam):
    assert g_vector(simple(a2, 0)) == (1, -1)
    assert g_vector(indec_projective(a2, 0)) == (1, 0)
    # rad P1 is generated by x, y at vertex 1 and by a at vertex 2
    assert g_vector(simple(lam, 0)) == (-1, -1)
    pres = min_presentation(simple(a2, 0))
    assert pres.alpha == [1, 0] and pres.beta == [0, 1]


def test_top(lam):
    P = indec_projective(lam, 0)
    assert top_dims(P) == [1, 0]
    M = direct_sum([P, simple(lam, 1)])[0]
    assert top_dims(M) == [1, 1]


# Over R = k[x,y]/(x^2,y^2): the simple has two self-extensions (one per loop), R is
# self-injective, so Ext^1(-, R) = 0, and free modules have no Ext^1 out of them.
R_HOM = {("S", "S"): 1, ("S", "R"): 1, ("R", "S"): 1, ("R", "R"): 4}
R_EXT = {("S", "S"): 2, ("S", "R"): 0, ("R", "S"): 0, ("R", "R"): 0}


def test_tensor_ext_formula(a2, lam):
    """Ext^1(X (x) M, Y (x) N) = Ext^1_R(X,Y) Hom(M,N) + Hom_R(X,Y) Ext^1(M,N)."""
    R = lam.tensor.local
    rmods = {"S": simple(R, 0), "R": indec_projective(R, 0)}
    for a, b in R_HOM:
        assert hom_dim(rmods[a], rmods[b]) == R_HOM[a, b]
    Ms = [simple(a2, 0), simple(a2, 1), indec_projective(a2, 0)]
    for a in rmods:
        for b in rmods:
            for M in Ms:
                for N in Ms:
                    h = sympy_hom_dim(M, N)
                    e = h - euler_form(a2, M.dims, N.dims)
                    lhs = ext1_dim(tensor_module(rmods[a], M, lam), tensor_module(rmods[b], N, lam))
                    assert lhs == R_EXT[a, b] * h + R_HOM[a, b] * e


@pytest.mark.parametrize("fx", ["a3", "a3rad2", "lam"])
def test_nakayama_on_projectives(fx, request):
    alg = request.getfixturevalue(fx)
    for i in range(alg.n):
        assert is_isomorphic(nu(indec_projective(alg, i)), indec_injective(alg, i))


def test_nakayama_commutes_with_induction(a2, lam):
    from tautilt.rep import induction
    for M in (simple(a2, 0), simple(a2, 1), indec_projective(a2, 0)):
        assert is_isomorphic(nu(induction(M, lam)), induction(nu(M), lam))
