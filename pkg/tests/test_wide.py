import itertools
import random

import pytest

from tautilt.homology import ext_dim, pd_capped, random_module, tau
from tautilt.rep import hom_dim, indec_projective, induction, is_isomorphic, simple
from tautilt.tau import Catalog, bongartz, co_bongartz, torsion_free
from tautilt.wide import (WideError, find_local_isomorphism, level_of, pd_in_wide, ext_in_wide, tau_in_wide,
                          w_left)


def by_name(alg):
    cat = Catalog.of(alg)
    return {M.name: k for k, M in enumerate(cat.mods)}


def induce_token(tok, down, up):
    if tok[0] == "P":
        return tok
    return ("M", up.catalog.index(induction(down.catalog.mods[tok[1]], up.alg)))


def induce_object(U, down, up):
    toks = [induce_token(t, down, up) for t in U.summands()]
    return up.catalog.obj([i for k, i in toks if k == "M"], [i for k, i in toks if k == "P"])


# ---------------------------------------------------------------------------
# the reductions J(M) over Lambda are mod R

@pytest.mark.parametrize("name", ["P1", "I1", "P2"])
def test_gamma_is_r(lam, name):
    L = level_of(lam)
    J = L.jasso(L.catalog.obj([by_name(lam)[name]]))
    G = J.alg
    assert G.dim == 4 and G.n == 1
    assert G.is_local() and G.is_commutative()
    phi = find_local_isomorphism(G, lam.tensor.local)
    assert phi is not None and phi.rank() == 4
    # dim Gamma agrees with the endomorphism ring of the torsion-free part of the complement
    cat = L.catalog
    M = [cat.mods[by_name(lam)[name]]]
    comp = [b for b in bongartz(cat.obj([by_name(lam)[name]])) if b != by_name(lam)[name]]
    T = torsion_free(M, cat.mods[comp[0]])
    assert hom_dim(T, T) == 4


def test_reduction_simples(lam):
    L = level_of(lam)
    nm = by_name(lam)
    dims = {}
    for name in ("P1", "I1", "P2"):
        J = L.jasso(L.catalog.obj([nm[name]]))
        dims[name] = [S.dims for S in J.simples()]
    assert dims == {"P1": [(0, 1)], "I1": [(1, 1)], "P2": [(1, 0)]}


@pytest.mark.parametrize("name", ["P1", "I1", "P2"])
def test_round_trip_gf(lam, name):
    L = level_of(lam)
    J = L.jasso(L.catalog.obj([by_name(lam)[name]]))
    rng = random.Random(7)
    for _ in range(20):
        Y = random_module(J.alg, rng, max_dim=3)
        X = J.up(Y)
        assert L.membership(J.defining, X)
        assert is_isomorphic(J.down(X), Y)


# ---------------------------------------------------------------------------
# membership against the definition

@pytest.mark.parametrize("fx", ["a3", "a3rad2", "lam"])
def test_membership_by_definition(fx, request):
    alg = request.getfixturevalue(fx)
    L = level_of(alg)
    cat = L.catalog
    rng = random.Random(1)
    probes = list(cat.mods) + [simple(alg, i) for i in range(alg.n)] + \
        [m for m in (random_module(alg, rng) for _ in range(6)) if m.total]
    for U in cat.cliques():
        J = L.jasso(U)
        for X in probes:
            by_def = all(hom_dim(M, X) == 0 and hom_dim(X, tau(M)) == 0 for M in U.modules()) and \
                all(hom_dim(indec_projective(alg, v), X) == 0 for v in U.projs)
            assert J.contains_ambient(X) == by_def


@pytest.mark.parametrize("fx", ["a3", "a3rad2", "lam"])
def test_simples_form_a_semibrick(fx, request):
    alg = request.getfixturevalue(fx)
    L = level_of(alg)
    for U in L.catalog.cliques():
        S = L.jasso(U).simples()
        assert len(S) == alg.n - U.size
        for (i, A), (j, B) in itertools.product(enumerate(S), repeat=2):
            assert hom_dim(A, B) == (1 if i == j else 0)


def test_kA2_membership(a2):
    L = level_of(a2)
    nm = by_name(a2)
    J = L.jasso(L.catalog.obj([nm["S1"]]))
    P1, P2 = indec_projective(a2, 0), indec_projective(a2, 1)
    assert J.contains_ambient(P1)
    assert not J.contains_ambient(P2)


# ---------------------------------------------------------------------------
# epsilon

@pytest.mark.parametrize("fx", ["a2", "a3", "lam", "a3rad2"])
def test_epsilon_is_bijective(fx, request):
    alg = request.getfixturevalue(fx)
    L = level_of(alg)
    for U in L.catalog.cliques():
        if U.is_complete():
            continue
        J = L.jasso(U)
        comp = L.catalog.compatible_with(U)
        images = [L.epsilon(U, V)[1] for V in comp]
        assert sorted(images) == sorted(J.objects())
        for V, W in zip(comp, images):
            assert L.epsilon_inverse(U, W) == V


def test_epsilon_kA2_values(a2):
    L = level_of(a2)
    nm = by_name(a2)
    U = L.catalog.obj([nm["P1"]])
    J = L.jasso(U)
    got = {L.name_of(V): J.name_of(L.epsilon(U, V)[1]) for V in L.catalog.compatible_with(U)}
    # J(P1) = add S2 = add P2; S1 is in Gen P1 (shifted image), P2 is not (torsion-free part)
    assert got == {"P2": "P2", "S1": "P2[1]"}


def test_epsilon_commutes_with_induction(a2, lam):
    Ld, Lu = level_of(a2), level_of(lam)
    checked = 0
    for U in Ld.catalog.cliques():
        if U.is_complete() or not U.summands():
            continue
        Uu = induce_object(U, Ld, Lu)
        for V in Ld.catalog.compatible_with(U):
            Jd, w = Ld.epsilon(U, V)
            Ju, wu = Lu.epsilon(Uu, induce_token(V, Ld, Lu))
            assert w[0] == wu[0]
            X = induction(Jd.ambient_of(w), lam)
            assert is_isomorphic(X, Ju.ambient_of(wu))
            checked += 1
    assert checked == 10  # five rigid indecomposables, two complements each


def test_epsilon_outside_compatibility_raises(a2):
    L = level_of(a2)
    nm = by_name(a2)
    U = L.catalog.obj([nm["S1"]])
    with pytest.raises(WideError):
        L.epsilon(U, ("M", nm["P2"]))


# ---------------------------------------------------------------------------
# left finite wide subcategories

def test_w_left_is_tau_perpendicular(a3, lam):
    for alg in (a3, lam):
        L = level_of(alg)
        keys = {L.jasso(U).key() for U in L.catalog.cliques()}
        for T in L.catalog.support_tau_tilting():
            W = w_left(T)
            assert W.key() in keys
            # the simples of W lie in Gen of the module part of T
            for S in W.simples():
                from tautilt.tau import gen_membership
                assert gen_membership(T.modules(), S)


def test_co_bongartz_induces(a2, lam):
    Ld, Lu = level_of(a2), level_of(lam)
    for U in Ld.catalog.cliques():
        if U.projs or not U.mods:
            continue
        C, Q = co_bongartz(U)
        Cu, Qu = co_bongartz(induce_object(U, Ld, Lu))
        assert sorted(Qu) == sorted(Q)
        assert sorted(induce_token(("M", c), Ld, Lu)[1] for c in C) == sorted(Cu)


# ---------------------------------------------------------------------------
# homological dimension inside wide subcategories of kA3/rad^2

def test_pd_in_wide_strict(a3rad2):
    L = level_of(a3rad2)
    S1, S3 = simple(a3rad2, 0), simple(a3rad2, 2)
    assert pd_capped(S1) == 2
    W = L.jasso(L.catalog.obj([], [2]))  # J(P3[1]) = mod k(1 -> 2)
    assert sorted(S.dims for S in W.simples()) == [(0, 1, 0), (1, 0, 0)]
    assert pd_in_wide(S1, W) == 1
    V = L.jasso(L.catalog.obj([], [1]))  # J(P2[1]) = add(S1 + S3)
    assert ext_dim(2, S1, S3) == 1
    assert all(ext_in_wide(2, A, B, V) == 0 for A in (S1, S3) for B in (S1, S3))
    assert is_isomorphic(tau_in_wide(S1, W), simple(a3rad2, 1))
    with pytest.raises(WideError):
        pd_in_wide(simple(a3rad2, 1), V)
