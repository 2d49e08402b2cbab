import random

import pytest

from tautilt.homology import dtr, g_vector, random_module
from tautilt.rep import hom_dim, indec_projective, is_isomorphic
from tautilt.tau import Catalog
from tautilt.twoterm import hom_k, hom_upto_homotopy, is_presilting, presentation_complex, shifted_projective, stalk


def _sample(alg, k=6, seed=2):
    rng = random.Random(seed)
    mods = list(Catalog.of(alg).mods)
    while len(mods) < k:
        M = random_module(alg, rng)
        if M.total:
            mods.append(M)
    return mods


@pytest.mark.parametrize("fx", ["a3", "a3rad2", "lam"])
def test_shift_hom_is_hom_into_tau(fx, request):
    """Hom_K(P_M, P_N[1]) = D Hom(N, tau M), computed with tau as D Tr."""
    alg = request.getfixturevalue(fx)
    mods = _sample(alg)
    for M in mods:
        PM = presentation_complex(M)
        tM = dtr(M)
        for N in mods:
            assert hom_upto_homotopy(PM, presentation_complex(N), 1) == hom_dim(N, tM)


@pytest.mark.parametrize("fx", ["a3rad2", "lam"])
def test_h0_and_g_vector(fx, request):
    alg = request.getfixturevalue(fx)
    for M in _sample(alg):
        P = presentation_complex(M)
        assert is_isomorphic(P.h0(), M)
        assert P.g_vector() == g_vector(M)


def test_presilting_iff_tau_rigid(lam, r_xy):
    for alg in (lam, r_xy):
        for M in _sample(alg, 5):
            assert is_presilting(presentation_complex(M)) == (hom_dim(M, dtr(M)) == 0)


def test_stalk_and_shift(lam):
    for M in _sample(lam):
        PM = presentation_complex(M)
        for i in range(lam.n):
            # Hom_K(P(i), P_M) = Hom(P(i), M) = M_i
            assert hom_k(stalk(lam, [i]), PM).dim == M.dims[i]
            # Hom_K(P(i)[1], P_M[1]) = Hom(P(i), M)
            assert hom_upto_homotopy(shifted_projective(lam, [i]), PM, 1) == hom_dim(indec_projective(lam, i), M)


def test_shifted_projective_is_presilting(lam):
    assert is_presilting(shifted_projective(lam, [0, 1]))
    assert shifted_projective(lam, [0]).g_vector() == (-1, 0)
