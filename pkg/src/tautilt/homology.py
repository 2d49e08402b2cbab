"""Projective covers, minimal presentations, g-vectors, the Nakayama functor and tau."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence

from .algebra import Algebra, opposite
from .exactlin import Mat, ONE, ZERO, complement_basis
from .rep import (Module, RepMorphism, cokernel, direct_sum, hom_basis, image_spaces, indec_injective, indec_projective,
                  kernel, quotient, span_spaces, submodule)


@total_ordering
class AtLeast:
    """A projective dimension known only to be at least ``cap``."""

    def __init__(self, cap: int):
        self.cap = cap

    def __repr__(self) -> str:
        return f">={self.cap}"

    def __eq__(self, other) -> bool:
        return isinstance(other, AtLeast) and other.cap == self.cap

    def __hash__(self):
        return hash(("AtLeast", self.cap))

    def __lt__(self, other) -> bool:
        return False if isinstance(other, int) else self.cap < other.cap

    def __gt__(self, other) -> bool:
        return True if isinstance(other, int) else self.cap > other.cap


# ---------------------------------------------------------------------------
# radical and top

def radical_spaces(M: Module) -> list[Mat]:
    alg = M.alg
    fams = []
    for lab, b in alg.arrow_elems:
        t = alg.basis[b].target
        fam = [Mat.zeros(M.dims[i], 0) for i in range(alg.n)]
        fam[t] = M.act[b]
        fams.append(fam)
    return span_spaces(M, fams)


def radical_of_module(M: Module) -> tuple[Module, RepMorphism]:
    return submodule(M, radical_spaces(M))


def top(M: Module) -> tuple[Module, RepMorphism]:
    return quotient(M, radical_spaces(M))


def top_dims(M: Module) -> list[int]:
    return [M.dims[i] - s.cols for i, s in enumerate(radical_spaces(M))]


# ---------------------------------------------------------------------------
# maps between projectives

@dataclass
class ProjSum:
    """``(+) P(labels[k])`` with the inclusion and projection of every copy."""

    module: Module
    labels: list[int]
    incs: list[RepMorphism]
    projs: list[RepMorphism]

    @property
    def mult(self) -> list[int]:
        return [self.labels.count(i) for i in range(self.module.alg.n)]


def proj_sum(alg: Algebra, labels: Sequence[int]) -> ProjSum:
    labels = list(labels)
    S, incs, projs = direct_sum([indec_projective(alg, i) for i in labels], alg)
    return ProjSum(S, labels, incs, projs)


def proj_map_from_vector(alg: Algebra, i: int, M: Module, v: Sequence[Fraction]) -> RepMorphism:
    """The map ``P(i) -> M`` sending ``e_i`` to ``v`` in ``M_i``."""
    P = indec_projective(alg, i)
    maps = []
    for j in range(alg.n):
        cols = []
        for b in alg.block(i, j):
            if alg.is_idempotent(b):
                cols.append(list(v))
            else:
                cols.append(M.act[b].apply(v))
        maps.append(Mat.from_columns(cols, M.dims[j]))
    return RepMorphism(P, M, maps, check=False)


def map_from_generators(src: ProjSum, M: Module, vectors: Sequence[Sequence[Fraction]]) -> RepMorphism:
    """``src -> M`` sending the top generator of copy ``k`` to ``vectors[k]``."""
    alg = M.alg
    maps = [Mat.zeros(M.dims[j], src.module.dims[j]) for j in range(alg.n)]
    for k, (i, v) in enumerate(zip(src.labels, vectors)):
        f = proj_map_from_vector(alg, i, M, v) @ src.projs[k]
        maps = [a + b for a, b in zip(maps, f.maps)]
    return RepMorphism(src.module, M, maps, check=False)


def generator_images(f: RepMorphism, src: ProjSum) -> list[list[Fraction]]:
    """Image of each copy's top generator ``e_i`` (in ``target_i``)."""
    out = []
    for k, i in enumerate(src.labels):
        inc = src.incs[k].maps[i]
        out.append(f.maps[i].apply(inc.column(0)))
    return out


def element_matrix(f: RepMorphism, src: ProjSum, tgt: ProjSum) -> list[list[dict[int, Fraction]]]:
    """``C[l][k]``: the element of ``e_{src_k} A e_{tgt_l}`` such that copy ``k`` maps to copy ``l``
    by right multiplication."""
    alg = f.source.alg
    gens = generator_images(f, src)
    C = []
    for l, j in enumerate(tgt.labels):
        row = []
        for k, i in enumerate(src.labels):
            v = tgt.projs[l].maps[i].apply(gens[k])
            row.append({b: x for b, x in zip(alg.block(j, i), v) if x})
        C.append(row)
    return C


def map_from_elements(alg: Algebra, src: ProjSum, tgt: ProjSum, C) -> RepMorphism:
    vecs = []
    for k, i in enumerate(src.labels):
        total = [ZERO] * tgt.module.dims[i]
        for l, j in enumerate(tgt.labels):
            coeffs = C[l][k]
            if not coeffs:
                continue
            local = [coeffs.get(b, ZERO) for b in alg.block(j, i)]
            part = tgt.incs[l].maps[i].apply(local)
            total = [a + b for a, b in zip(total, part)]
        vecs.append(total)
    return map_from_generators(src, tgt.module, vecs)


# ---------------------------------------------------------------------------
# covers and presentations

def projective_cover(M: Module) -> tuple[ProjSum, RepMorphism]:
    alg = M.alg
    rad = radical_spaces(M)
    labels, vecs = [], []
    for i in range(alg.n):
        for j in complement_basis(rad[i], M.dims[i]):
            labels.append(i)
            vecs.append([ONE if r == j else ZERO for r in range(M.dims[i])])
    P = proj_sum(alg, labels)
    return P, map_from_generators(P, M, vecs)


@dataclass
class MinPresentation:
    P1: ProjSum
    P0: ProjSum
    d1: RepMorphism  # P1 -> P0
    d0: RepMorphism  # P0 -> M
    syzygy: Module
    syzygy_inc: RepMorphism

    @property
    def alpha(self) -> list[int]:
        return self.P0.mult

    @property
    def beta(self) -> list[int]:
        return self.P1.mult


def min_presentation(M: Module) -> MinPresentation:
    if "pres" in M._memo:
        return M._memo["pres"]
    P0, d0 = projective_cover(M)
    K, inc = kernel(d0)
    P1, c1 = projective_cover(K)
    pres = MinPresentation(P1, P0, inc @ c1, d0, K, inc)
    M._memo["pres"] = pres
    return pres


def syzygy(M: Module) -> Module:
    return min_presentation(M).syzygy


def g_vector(M: Module) -> tuple[int, ...]:
    p = min_presentation(M)
    return tuple(a - b for a, b in zip(p.alpha, p.beta))


def is_projective(M: Module) -> bool:
    return syzygy(M).total == 0


# ---------------------------------------------------------------------------
# Nakayama functor and tau

@dataclass
class InjSum:
    module: Module
    labels: list[int]
    incs: list[RepMorphism]
    projs: list[RepMorphism]


def inj_sum(alg: Algebra, labels: Sequence[int]) -> InjSum:
    labels = list(labels)
    S, incs, projs = direct_sum([indec_injective(alg, i) for i in labels], alg)
    return InjSum(S, labels, incs, projs)


def nakayama(P: ProjSum) -> InjSum:
    return inj_sum(P.module.alg, P.labels)


def nakayama_map(f: RepMorphism, src: ProjSum, tgt: ProjSum) -> tuple[InjSum, InjSum, RepMorphism]:
    """``nu(f)`` for a map between projective sums: right multiplication by ``c`` becomes
    ``phi -> phi(c . -)`` between the duals."""
    alg = f.source.alg
    C = element_matrix(f, src, tgt)
    I0, I1 = nakayama(src), nakayama(tgt)
    maps = [Mat.zeros(I1.module.dims[v], I0.module.dims[v]) for v in range(alg.n)]
    for l, j in enumerate(tgt.labels):
        for k, i in enumerate(src.labels):
            c = C[l][k]
            if not c:
                continue
            for v in range(alg.n):
                rows_blk = alg.block(v, j)  # basis of e_j A e_v: dual basis of I(j)_v
                cols_blk = alg.block(v, i)
                if not rows_blk or not cols_blk:
                    continue
                colpos = {b: p for p, b in enumerate(cols_blk)}
                local = Mat.zeros(len(rows_blk), len(cols_blk))
                for r, y in enumerate(rows_blk):
                    for cb, cx in c.items():
                        for d, z in alg.mul_basis(cb, y).items():
                            local.data[r][colpos[d]] += cx * z
                inc = I1.incs[l].maps[v]
                prj = I0.projs[k].maps[v]
                maps[v] = maps[v] + inc @ local @ prj
    return I0, I1, RepMorphism(I0.module, I1.module, maps, check=False)


def tau(M: Module) -> Module:
    """``ker nu(d1)`` for the minimal presentation."""
    if "tau" in M._memo:
        return M._memo["tau"]
    p = min_presentation(M)
    _, _, nd = nakayama_map(p.d1, p.P1, p.P0)
    T, _ = kernel(nd)
    M._memo["tau"] = T
    return T


def nu(M: Module) -> Module:
    """``nu M = D Hom(M, A)`` as the cokernel of ``nu(d1)``."""
    p = min_presentation(M)
    _, _, nd = nakayama_map(p.d1, p.P1, p.P0)
    return cokernel(nd)[0]


def dual_module(N: Module, target: Algebra) -> Module:
    """``D N = Hom_k(N, k)`` over the opposite algebra ``target``."""
    act = [None if m is None else m.T() for m in N.act]
    return Module(target, N.dims, act, check=False)


def transpose(M: Module) -> Module:
    """``Tr M``: cokernel of ``Hom(d1, A)`` as a module over the opposite algebra."""
    alg = M.alg
    op = opposite(alg)
    p = min_presentation(M)
    C = element_matrix(p.d1, p.P1, p.P0)
    src = proj_sum(op, p.P0.labels)
    tgt = proj_sum(op, p.P1.labels)
    Ct = [[C[l][k] for l in range(len(p.P0.labels))] for k in range(len(p.P1.labels))]
    d = map_from_elements(op, src, tgt, Ct)
    return cokernel(d)[0]


def dtr(M: Module) -> Module:
    return dual_module(transpose(M), M.alg)


# ---------------------------------------------------------------------------
# Ext and projective dimension

def ext1_dim(M: Module, N: Module) -> int:
    p = min_presentation(M)
    K, inc = p.syzygy, p.syzygy_inc
    H = hom_basis(K, N)
    if not H:
        return 0
    restricted = [(g @ inc).flatten() for g in hom_basis(p.P0.module, N)]
    if not restricted or not restricted[0]:
        return len(H)
    return len(H) - Mat.from_rows(restricted).rank()


def ext_dim(n: int, M: Module, N: Module) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    for _ in range(n - 1):
        M = syzygy(M)
        if M.total == 0:
            return 0
    return ext1_dim(M, N)


def pd_capped(M: Module, cap: int = 32):
    k = 0
    while k < cap:
        K = syzygy(M)
        if K.total == 0:
            return k
        M = K
        k += 1
    return AtLeast(cap)


def random_module(alg: Algebra, rng, max_dim: int = 3, summands: int = 2) -> Module:
    """A random quotient of a small projective sum (deterministic for a seeded ``rng``)."""
    labels = [rng.randrange(alg.n) for _ in range(rng.randint(1, summands))]
    P = proj_sum(alg, labels)
    fams = []
    for _ in range(rng.randint(0, 2)):
        i = rng.randrange(alg.n)
        if P.module.dims[i] == 0:
            continue
        v = [Fraction(rng.randint(-2, 2)) for _ in range(P.module.dims[i])]
        if any(v):
            fams.append(image_spaces(proj_map_from_vector(alg, i, P.module, v)))
    Q = quotient(P.module, span_spaces(P.module, fams))[0] if fams else P.module
    # pass to the top when too large
    if Q.total > max_dim * alg.n:
        Q = top(Q)[0]
    return Q
