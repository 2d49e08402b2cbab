"""Two-term complexes of projectives and maps up to homotopy."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra
from .exactlin import Mat, ZERO, column_space, kernel_basis, kernel_matrix, rref, solve
from .homology import ProjSum, element_matrix, min_presentation, proj_sum
from .rep import (Module, RepMorphism, combine, coordinates, direct_sum, end_semisimple_dim, hom_basis,
                  quotient, submodule, zero_map)


class ApproximationError(AssertionError):
    pass


@dataclass
class TwoTermComplex:
    """``P_{-1} --d--> P_0``."""

    Pm1: ProjSum
    P0: ProjSum
    d: RepMorphism

    @property
    def alg(self) -> Algebra:
        return self.d.source.alg

    def h0(self) -> Module:
        from .rep import cokernel
        return cokernel(self.d)[0]

    def g_vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.P0.mult, self.Pm1.mult))


@dataclass
class ChainMap:
    src: TwoTermComplex
    tgt: TwoTermComplex
    fm1: RepMorphism
    f0: RepMorphism

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(other.src, self.tgt, self.fm1 @ other.fm1, self.f0 @ other.f0)

    def flatten(self) -> list[Fraction]:
        return self.fm1.flatten() + self.f0.flatten()

    def is_chain_map(self) -> bool:
        return (self.f0 @ self.src.d).flatten() == (self.tgt.d @ self.fm1).flatten()


def presentation_complex(M: Module) -> TwoTermComplex:
    p = min_presentation(M)
    return TwoTermComplex(p.P1, p.P0, p.d1)


def shifted_projective(alg: Algebra, labels: Sequence[int]) -> TwoTermComplex:
    Pm1, P0 = proj_sum(alg, labels), proj_sum(alg, [])
    return TwoTermComplex(Pm1, P0, zero_map(Pm1.module, P0.module))


def stalk(alg: Algebra, labels: Sequence[int]) -> TwoTermComplex:
    Pm1, P0 = proj_sum(alg, []), proj_sum(alg, labels)
    return TwoTermComplex(Pm1, P0, zero_map(Pm1.module, P0.module))


def _sum_proj(parts: Sequence[ProjSum], alg: Algebra) -> tuple[ProjSum, list[RepMorphism], list[RepMorphism]]:
    """Concatenate projective sums; returns the sum and block inclusions/projections."""
    labels = [i for P in parts for i in P.labels]
    S = proj_sum(alg, labels)
    incs, projs = [], []
    k0 = 0
    for P in parts:
        inc = zero_map(P.module, S.module)
        prj = zero_map(S.module, P.module)
        for k in range(len(P.labels)):
            inc = inc + S.incs[k0 + k] @ P.projs[k]
            prj = prj + P.incs[k] @ S.projs[k0 + k]
        incs.append(inc)
        projs.append(prj)
        k0 += len(P.labels)
    return S, incs, projs


def complex_sum(parts: Sequence[TwoTermComplex], alg: Algebra) -> tuple[TwoTermComplex, list[ChainMap], list[ChainMap]]:
    Sm1, im1, pm1 = _sum_proj([X.Pm1 for X in parts], alg)
    S0, i0, p0 = _sum_proj([X.P0 for X in parts], alg)
    d = zero_map(Sm1.module, S0.module)
    for k, X in enumerate(parts):
        d = d + i0[k] @ X.d @ pm1[k]
    S = TwoTermComplex(Sm1, S0, d)
    incs = [ChainMap(X, S, im1[k], i0[k]) for k, X in enumerate(parts)]
    projs = [ChainMap(S, X, pm1[k], p0[k]) for k, X in enumerate(parts)]
    return S, incs, projs


@dataclass
class HomK:
    """``Hom_K(X, Y)``: chain maps modulo null-homotopic ones."""

    src: TwoTermComplex
    tgt: TwoTermComplex
    chain: list[ChainMap]  # basis of all chain maps
    null: list[list[Fraction]]  # null-homotopic maps, as chain-map coordinates
    reps: list[ChainMap]  # chain maps whose classes form a basis of the quotient

    @property
    def dim(self) -> int:
        return len(self.reps)

    def _coords(self, f: ChainMap) -> list[Fraction] | None:
        if not self.chain:
            return [] if all(x == 0 for x in f.flatten()) else None
        A = Mat.from_columns([c.flatten() for c in self.chain], len(self.chain[0].flatten()))
        x = solve(A, Mat.from_columns([f.flatten()], A.rows))
        return None if x is None else x.column(0)

    def class_coords(self, f: ChainMap) -> list[Fraction]:
        """Coordinates of the class of ``f`` in the basis ``reps``."""
        c = self._coords(f)
        if c is None:
            raise ApproximationError("not a chain map")
        if not self.reps:
            return []
        n = len(self.chain)
        cols = list(self.null) + [self._coords(r) for r in self.reps]
        x = solve(Mat.from_columns(cols, n), Mat.from_columns([c], n))
        return x.column(0)[len(self.null):]

    def is_null(self, f: ChainMap) -> bool:
        return all(x == 0 for x in self.class_coords(f))


def hom_k(X: TwoTermComplex, Y: TwoTermComplex) -> HomK:
    A = hom_basis(X.Pm1.module, Y.Pm1.module)
    B = hom_basis(X.P0.module, Y.P0.module)
    eqs = [(Y.d @ a).flatten() for a in A] + [[-v for v in (b @ X.d).flatten()] for b in B]
    n = len(A) + len(B)
    length = len((Y.d @ A[0]).flatten()) if A else (len((B[0] @ X.d).flatten()) if B else 0)
    if n == 0:
        chain_vecs = []
    elif length == 0:
        chain_vecs = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    else:
        chain_vecs = kernel_basis(Mat.from_columns(eqs, length))
    chain = [ChainMap(X, Y, combine(A, v[:len(A)], X.Pm1.module, Y.Pm1.module),
                      combine(B, v[len(A):], X.P0.module, Y.P0.module)) for v in chain_vecs]
    H = hom_basis(X.P0.module, Y.Pm1.module)
    tmp = HomK(X, Y, chain, [], [])
    null = []
    for h in H:
        c = tmp._coords(ChainMap(X, Y, h @ X.d, Y.d @ h))
        if c is None:
            raise ApproximationError("homotopy is not a chain map")
        if any(c):
            null.append(c)
    if null:
        _, piv = rref(Mat.from_columns(null, len(chain)))
        null = [null[p] for p in piv]
    # complete null to a basis of the chain space with unit vectors
    reps = []
    cur = list(null)
    for k in range(len(chain)):
        e = [1 if i == k else 0 for i in range(len(chain))]
        trial = cur + [e]
        if Mat.from_columns(trial, len(chain)).rank() > len(cur):
            cur = trial
            reps.append(chain[k])
    return HomK(X, Y, chain, null, reps)


def hom_upto_homotopy(X: TwoTermComplex, Y: TwoTermComplex, shift: int = 0) -> int:
    """``dim Hom_K(X, Y[shift])`` for shift in {-1, 0, 1}."""
    if shift == 0:
        return hom_k(X, Y).dim
    if shift == 1:
        # Hom(X_{-1}, Y_0) / (d_Y Hom(X_{-1}, Y_{-1}) + Hom(X_0, Y_0) d_X)
        total = hom_basis(X.Pm1.module, Y.P0.module)
        if not total:
            return 0
        null = [(Y.d @ a).flatten() for a in hom_basis(X.Pm1.module, Y.Pm1.module)]
        null += [(b @ X.d).flatten() for b in hom_basis(X.P0.module, Y.P0.module)]
        r = Mat.from_rows(null).rank() if null and null[0] else 0
        return len(total) - r
    if shift == -1:
        # g: X_0 -> Y_{-1} with g d_X = 0 and d_Y g = 0
        G = hom_basis(X.P0.module, Y.Pm1.module)
        if not G:
            return 0
        rows = [(g @ X.d).flatten() + (Y.d @ g).flatten() for g in G]
        if not rows[0]:
            return len(G)
        return len(G) - Mat.from_rows(rows).rank()
    raise ValueError("shift must be -1, 0 or 1")


def is_presilting(X: TwoTermComplex) -> bool:
    return hom_upto_homotopy(X, X, 1) == 0


def _radical_functional(X: TwoTermComplex, f: ChainMap) -> Fraction:
    """Trace of the map induced on the top of the degree-0 term (degree -1 for shifts)."""
    alg = X.alg
    if X.P0.labels:
        C = element_matrix(f.f0, X.P0, X.P0)
        labels = X.P0.labels
    else:
        C = element_matrix(f.fm1, X.Pm1, X.Pm1)
        labels = X.Pm1.labels
    return sum((C[k][k].get(alg.idem[i], ZERO) for k, i in enumerate(labels)), ZERO)


def radical_k(X: TwoTermComplex, Y: TwoTermComplex, same: bool) -> list[ChainMap]:
    """Radical maps ``X -> Y`` between indecomposables (``same``: ``X`` is ``Y``)."""
    H = hom_k(X, Y)
    if not same:
        return H.reps
    vals = [_radical_functional(X, r) for r in H.reps]
    if not any(vals):
        raise ApproximationError("identity has vanishing top trace")
    piv = next(k for k, v in enumerate(vals) if v)
    out = [r for k, r in enumerate(H.reps) if k != piv and not vals[k]]
    for k, r in enumerate(H.reps):
        if k != piv and vals[k]:
            c = vals[k] / vals[piv]
            out.append(ChainMap(X, X, r.fm1 - H.reps[piv].fm1.scale(c), r.f0 - H.reps[piv].f0.scale(c)))
    return out


def minimal_right_approximation(Y: TwoTermComplex, sources: Sequence[TwoTermComplex]
                                ) -> tuple[list[int], TwoTermComplex, ChainMap]:
    """Minimal right ``add(sources)``-approximation of ``Y`` (sources indecomposable, pairwise
    non-isomorphic).  Returns multiplicities, the source complex and the map."""
    alg = Y.alg
    mults, chosen = [], []
    for k, Xk in enumerate(sources):
        H = hom_k(Xk, Y)
        rad_vecs = []
        for l, Xl in enumerate(sources):
            rads = radical_k(Xk, Xl, k == l)
            if not rads:
                continue
            for b in hom_k(Xl, Y).reps:
                for r in rads:
                    rad_vecs.append(H.class_coords(b @ r))
        picked = []
        cur = [v for v in rad_vecs if any(v)]
        base_rank = Mat.from_columns(cur, H.dim).rank() if cur else 0
        for j, rep in enumerate(H.reps):
            e = [1 if i == j else 0 for i in range(H.dim)]
            trial = cur + [e]
            r = Mat.from_columns(trial, H.dim).rank()
            if r > base_rank:
                cur, base_rank = trial, r
                picked.append(rep)
        mults.append(len(picked))
        chosen.extend((k, p) for p in picked)
    parts = [sources[k] for k, _ in chosen]
    S, incs, projs = complex_sum(parts, alg)
    fm1 = zero_map(S.Pm1.module, Y.Pm1.module)
    f0 = zero_map(S.P0.module, Y.P0.module)
    for (k, p), pr in zip(chosen, projs):
        fm1 = fm1 + p.fm1 @ pr.fm1
        f0 = f0 + p.f0 @ pr.f0
    return mults, S, ChainMap(S, Y, fm1, f0)


def h0_of_cocone(alpha: ChainMap) -> Module:
    """``H^0`` of ``cone(alpha)[-1]``: degree 0 is ``X_0 (+) Y_{-1}``."""
    X, Y = alpha.src, alpha.tgt
    D0, (i1, i2), (p1, p2) = direct_sum([X.P0.module, Y.Pm1.module])
    out = alpha.f0 @ p1 + Y.d @ p2
    inn = i1 @ X.d - i2 @ alpha.fm1
    K, inc = submodule(D0, [kernel_matrix(m) for m in out.maps])
    img = []
    for i in range(D0.alg.n):
        cols = inn.maps[i]
        if K.dims[i] == 0:
            img.append(Mat.zeros(0, 0))
            continue
        x = solve(inc.maps[i], cols)
        if x is None:
            raise ApproximationError("cone differential does not square to zero")
        img.append(column_space(x) if x.cols else Mat.zeros(K.dims[i], 0))
    return quotient(K, img)[0]


def minimal_left_module_approximation(Q: Module, targets: Sequence[Module]) -> list[int]:
    """Multiplicities of a minimal left ``add(targets)``-approximation of ``Q``
    (targets indecomposable, pairwise non-isomorphic, with local endomorphism rings)."""
    mults = []
    for k, Bk in enumerate(targets):
        H = hom_basis(Q, Bk)
        if not H:
            mults.append(0)
            continue
        vecs = []
        for l, Bl in enumerate(targets):
            if l == k:
                if end_semisimple_dim(Bk) != 1:
                    raise ApproximationError("endomorphism ring is not split local")
                E = hom_basis(Bk, Bk)
                tr = [e.total().trace() for e in E]
                piv = next(j for j, t in enumerate(tr) if t)
                rads = [E[j] - E[piv].scale(tr[j] / tr[piv]) for j in range(len(E)) if j != piv]
            else:
                rads = hom_basis(Bl, Bk)
            for r in rads:
                for g in hom_basis(Q, Bl):
                    c = coordinates(r @ g, H)
                    vecs.append(c)
        r = Mat.from_columns(vecs, len(H)).rank() if vecs else 0
        mults.append(len(H) - r)
    return mults
