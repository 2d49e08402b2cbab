"""Modules over an :class:`~tautilt.algebra.Algebra` and their morphisms.

A module stores one matrix per non-idempotent basis element; for a basis
element from vertex ``i`` to ``j`` it is a ``dims[j] x dims[i]`` matrix.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, AlgebraError
from .exactlin import (Mat, ONE, ZERO, as_scalar, block_diag, column_space, complement_basis, hstack,
                       kernel_basis, kernel_matrix, kron, solve)

_uid = itertools.count()


class ModuleError(ValueError):
    pass


class DecompositionError(RuntimeError):
    """Raised when an endomorphism algebra does not split over the rationals."""


class Module:
    __slots__ = ("alg", "dims", "act", "uid", "name", "_memo")

    def __init__(self, alg: Algebra, dims: Sequence[int], act: Sequence[Mat | None], name: str = "",
                 check: bool = True):
        self.alg = alg
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != alg.n:
            raise ModuleError("dimension vector has wrong length")
        self.act = list(act)
        self.uid = next(_uid)
        self.name = name
        self._memo: dict = {}
        for k, b in enumerate(alg.basis):
            if alg.is_idempotent(k):
                self.act[k] = None
                continue
            m = self.act[k]
            if m is None or m.shape != (self.dims[b.target], self.dims[b.source]):
                raise ModuleError(f"action of {b.name} has wrong shape")
        if check:
            self.check()

    # -- construction ---------------------------------------------------
    @classmethod
    def from_arrows(cls, alg: Algebra, dims: Sequence[int], arrow_maps: dict, name: str = "") -> "Module":
        """Module from one matrix per arrow; relations are validated."""
        dims = tuple(int(d) for d in dims)
        mats = []
        for k, (label, b) in enumerate(alg.arrow_elems):
            s, t = alg.arrow_ends(k)
            m = arrow_maps.get(label)
            if m is None:
                m = Mat.zeros(dims[t], dims[s])
            elif not isinstance(m, Mat):
                m = Mat(dims[t], dims[s], m) if dims[t] else Mat.zeros(0, dims[s])
            if m.shape != (dims[t], dims[s]):
                raise ModuleError(f"arrow {label} has shape {m.shape}, expected {(dims[t], dims[s])}")
            mats.append(m)
        unknown = set(arrow_maps) - {lab for lab, _ in alg.arrow_elems}
        if unknown:
            raise ModuleError(f"unknown arrows {sorted(unknown)}")
        act: list[Mat | None] = []
        for k, b in enumerate(alg.basis):
            if alg.is_idempotent(k):
                act.append(None)
                continue
            acc = Mat.zeros(dims[b.target], dims[b.source])
            for c, path in alg.exprs[k]:
                m = Mat.identity(dims[alg.arrow_ends(path[0])[0]])
                for a in path:
                    m = mats[a] @ m
                acc = acc + m.scale(c)
            act.append(acc)
        return cls(alg, dims, act, name=name)

    @classmethod
    def zero(cls, alg: Algebra) -> "Module":
        return cls(alg, [0] * alg.n, [None if alg.is_idempotent(k) else
                                      Mat.zeros(0, 0) for k in range(alg.dim)], check=False)

    def check(self) -> None:
        alg = self.alg
        for (b, c), prod in alg.table.items():
            lhs = self.act[b] @ self.act[c]
            rhs = Mat.zeros(*lhs.shape)
            for d, x in prod.items():
                rhs = rhs + (self.act[d].scale(x) if not alg.is_idempotent(d) else Mat.identity(lhs.rows).scale(x))
            if lhs != rhs:
                raise ModuleError(f"relation violated: {alg.basis[b].name} * {alg.basis[c].name}")
        for b in range(alg.dim):
            if alg.is_idempotent(b):
                continue
            for c in range(alg.dim):
                if alg.is_idempotent(c) or alg.basis[b].source != alg.basis[c].target or (b, c) in alg.table:
                    continue
                if not (self.act[b] @ self.act[c]).is_zero():
                    raise ModuleError(f"relation violated: {alg.basis[b].name} * {alg.basis[c].name} != 0")

    # -- basic data -----------------------------------------------------
    def __repr__(self) -> str:
        nm = f"{self.name} " if self.name else ""
        return f"<Module {nm}{self.dims}>"

    @property
    def total(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total == 0

    def offsets(self) -> list[int]:
        out, o = [], 0
        for d in self.dims:
            out.append(o)
            o += d
        return out

    def arrow_map(self, label: str) -> Mat:
        return self.act[self.alg.arrow_elems[self.alg.arrow_index(label)][1]]

    def action(self, k: int) -> Mat:
        b = self.alg.basis[k]
        if self.alg.is_idempotent(k):
            return Mat.identity(self.dims[b.source])
        return self.act[k]

    def element_action(self, vec: Sequence[Fraction]) -> Mat:
        """Total (block) matrix of an algebra element acting on the whole module."""
        n = self.total
        off = self.offsets()
        out = Mat.zeros(n, n)
        for k, c in enumerate(vec):
            if not c:
                continue
            b = self.alg.basis[k]
            m = self.action(k)
            for i in range(m.rows):
                for j in range(m.cols):
                    if m.data[i][j]:
                        out.data[off[b.target] + i][off[b.source] + j] += c * m.data[i][j]
        return out

    def identity(self) -> "RepMorphism":
        return RepMorphism(self, self, [Mat.identity(d) for d in self.dims], check=False)

    # -- serialization --------------------------------------------------
    def to_dict(self) -> dict:
        return {"dims": list(self.dims),
                "arrows": {lab: [[str(x) for x in row] for row in self.act[b].data]
                           for lab, b in self.alg.arrow_elems}}

    @classmethod
    def from_dict(cls, alg: Algebra, d: dict) -> "Module":
        unknown = set(d) - {"dims", "arrows", "name"}
        if unknown:
            raise ModuleError(f"unknown fields {sorted(unknown)}")
        dims = d["dims"]
        maps = {}
        for k, (lab, b) in enumerate(alg.arrow_elems):
            s, t = alg.arrow_ends(k)
            rows = d["arrows"].get(lab)
            if rows is None:
                continue
            maps[lab] = Mat._raw(dims[t], dims[s], [[Fraction(x) for x in r] for r in rows]) if dims[t] \
                else Mat.zeros(0, dims[s])
        return cls.from_arrows(alg, dims, maps, name=d.get("name", ""))


@dataclass
class RepMorphism:
    source: Module
    target: Module
    maps: list[Mat]

    def __init__(self, source: Module, target: Module, maps: Sequence[Mat], check: bool = True):
        self.source, self.target, self.maps = source, target, list(maps)
        if source.alg is not target.alg:
            raise ModuleError("algebra mismatch")
        if check:
            for i, m in enumerate(self.maps):
                if m.shape != (target.dims[i], source.dims[i]):
                    raise ModuleError("vertex map has wrong shape")
            alg = source.alg
            for lab, b in alg.arrow_elems:
                s, t = alg.basis[b].source, alg.basis[b].target
                if self.maps[t] @ source.act[b] != target.act[b] @ self.maps[s]:
                    raise ModuleError(f"square for arrow {lab} does not commute")

    def __repr__(self) -> str:
        return f"<RepMorphism {self.source.dims}->{self.target.dims}>"

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """``self @ other`` is ``self`` after ``other``."""
        return RepMorphism(other.source, self.target, [a @ b for a, b in zip(self.maps, other.maps)],
                           check=False)

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target, [a + b for a, b in zip(self.maps, other.maps)],
                           check=False)

    def __sub__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target, [a - b for a, b in zip(self.maps, other.maps)],
                           check=False)

    def scale(self, c) -> "RepMorphism":
        return RepMorphism(self.source, self.target, [m.scale(c) for m in self.maps], check=False)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.maps)

    def is_iso(self) -> bool:
        return all(m.rows == m.cols and (m.rows == 0 or m.det() != 0) for m in self.maps)

    def inverse(self) -> "RepMorphism":
        return RepMorphism(self.target, self.source, [m.inverse() if m.rows else m for m in self.maps],
                           check=False)

    def total(self) -> Mat:
        return block_diag(self.maps)

    def flatten(self) -> list[Fraction]:
        return [x for m in self.maps for x in m.flatten()]

    def rank(self) -> int:
        return sum(m.rank() for m in self.maps)


def zero_map(M: Module, N: Module) -> RepMorphism:
    return RepMorphism(M, N, [Mat.zeros(N.dims[i], M.dims[i]) for i in range(M.alg.n)], check=False)


def combine(maps: Sequence[RepMorphism], coeffs: Sequence, M: Module, N: Module) -> RepMorphism:
    out = [Mat.zeros(N.dims[i], M.dims[i]) for i in range(M.alg.n)]
    for f, c in zip(maps, coeffs):
        c = as_scalar(c)
        if c:
            out = [o + m.scale(c) for o, m in zip(out, f.maps)]
    return RepMorphism(M, N, out, check=False)


# ---------------------------------------------------------------------------
# Hom spaces

_HOM_CACHE: dict[tuple[int, int], list[RepMorphism]] = {}


def _hom_system(M: Module, N: Module) -> tuple[Mat, list[int]]:
    alg = M.alg
    n = alg.n
    offs, o = [], 0
    for i in range(n):
        offs.append(o)
        o += N.dims[i] * M.dims[i]
    nvars = o
    rows: list[list[Fraction]] = []
    for lab, b in alg.arrow_elems:
        s, t = alg.basis[b].source, alg.basis[b].target
        Ma, Na = M.act[b], N.act[b]
        for p in range(N.dims[t]):
            for q in range(M.dims[s]):
                row = [ZERO] * nvars
                # (N_a f_s)[p, q]
                for r in range(N.dims[s]):
                    x = Na.data[p][r]
                    if x:
                        row[offs[s] + r * M.dims[s] + q] += x
                # -(f_t M_a)[p, q]
                for r in range(M.dims[t]):
                    x = Ma.data[r][q]
                    if x:
                        row[offs[t] + p * M.dims[t] + r] -= x
                if any(row):
                    rows.append(row)
    return Mat._raw(len(rows), nvars, rows), offs


def _unflatten(M: Module, N: Module, v: Sequence[Fraction], offs: Sequence[int]) -> list[Mat]:
    out = []
    for i in range(M.alg.n):
        r, c = N.dims[i], M.dims[i]
        out.append(Mat._raw(r, c, [list(v[offs[i] + p * c: offs[i] + (p + 1) * c]) for p in range(r)]))
    return out


def hom_basis(M: Module, N: Module) -> list[RepMorphism]:
    """Basis of ``Hom(M, N)``."""
    if M.alg is not N.alg:
        raise ModuleError("algebra mismatch")
    key = (M.uid, N.uid)
    hit = _HOM_CACHE.get(key)
    if hit is not None:
        return hit
    if M.total == 0 or N.total == 0:
        out: list[RepMorphism] = []
    else:
        system, offs = _hom_system(M, N)
        if system.rows:
            vecs = kernel_basis(system)
        else:
            vecs = [[ONE if j == k else ZERO for j in range(system.cols)] for k in range(system.cols)]
        out = [RepMorphism(M, N, _unflatten(M, N, v, offs), check=False) for v in vecs]
    if len(_HOM_CACHE) > 400000:
        _HOM_CACHE.clear()
    _HOM_CACHE[key] = out
    return out


def hom_dim(M: Module, N: Module) -> int:
    return len(hom_basis(M, N))


def coordinates(f: RepMorphism, basis: Sequence[RepMorphism]) -> list[Fraction] | None:
    """Coordinates of ``f`` in a list of morphisms (``None`` if not in their span)."""
    if not basis:
        return [] if f.is_zero() else None
    A = Mat.from_columns([g.flatten() for g in basis], len(f.flatten()))
    x = solve(A, Mat.from_columns([f.flatten()], A.rows))
    return None if x is None else x.column(0)


# ---------------------------------------------------------------------------
# standard modules

def simple(alg: Algebra, i: int) -> Module:
    key = ("simple", i)
    if key not in alg._cache:
        dims = [1 if j == i else 0 for j in range(alg.n)]
        alg._cache[key] = Module(alg, dims, [None if alg.is_idempotent(k) else
                                             Mat.zeros(dims[b.target], dims[b.source])
                                             for k, b in enumerate(alg.basis)], name=f"S{alg.vertices[i]}")
    return alg._cache[key]


def indec_projective(alg: Algebra, i: int) -> Module:
    """``P(i) = A e_i``: at vertex ``j`` the basis elements from ``i`` to ``j``."""
    key = ("proj", i)
    if key in alg._cache:
        return alg._cache[key]
    blocks = [alg.block(i, j) for j in range(alg.n)]
    pos = {b: p for j in range(alg.n) for p, b in enumerate(blocks[j])}
    act = []
    for k, c in enumerate(alg.basis):
        if alg.is_idempotent(k):
            act.append(None)
            continue
        m = Mat.zeros(len(blocks[c.target]), len(blocks[c.source]))
        for col, b in enumerate(blocks[c.source]):
            for d, x in alg.mul_basis(k, b).items():
                m.data[pos[d]][col] += x
        act.append(m)
    P = Module(alg, [len(b) for b in blocks], act, name=f"P{alg.vertices[i]}")
    alg._cache[key] = P
    return P


def projective_basis_index(alg: Algebra, i: int, j: int) -> list[int]:
    """Algebra basis indices spanning ``P(i)`` at vertex ``j`` (in module order)."""
    return alg.block(i, j)


def indec_injective(alg: Algebra, i: int) -> Module:
    """``I(i) = D(e_i A)``: at vertex ``j`` the dual of the basis elements from ``j`` to ``i``."""
    key = ("inj", i)
    if key in alg._cache:
        return alg._cache[key]
    blocks = [alg.block(j, i) for j in range(alg.n)]
    pos = {b: p for j in range(alg.n) for p, b in enumerate(blocks[j])}
    act = []
    for k, c in enumerate(alg.basis):
        if alg.is_idempotent(k):
            act.append(None)
            continue
        # (c.phi)(x) = phi(x c) for x in e_i A e_target(c)
        m = Mat.zeros(len(blocks[c.target]), len(blocks[c.source]))
        for row, x in enumerate(blocks[c.target]):
            for d, coef in alg.mul_basis(x, k).items():
                m.data[row][pos[d]] += coef
        act.append(m)
    I = Module(alg, [len(b) for b in blocks], act, name=f"I{alg.vertices[i]}")
    alg._cache[key] = I
    return I


def regular_module(alg: Algebra) -> Module:
    return direct_sum([indec_projective(alg, i) for i in range(alg.n)])[0]


def projective_sum(alg: Algebra, mult: Sequence[int]) -> tuple[Module, list[tuple[int, RepMorphism, RepMorphism]]]:
    """``(+) P(i)^{mult[i]}`` with (vertex, inclusion, projection) per copy."""
    parts = [indec_projective(alg, i) for i in range(alg.n) for _ in range(mult[i])]
    labels = [i for i in range(alg.n) for _ in range(mult[i])]
    S, inc, proj = direct_sum(parts)
    return S, [(labels[k], inc[k], proj[k]) for k in range(len(parts))]


# ---------------------------------------------------------------------------
# sums, sub and quotient modules

def direct_sum(mods: Sequence[Module], alg: Algebra | None = None
               ) -> tuple[Module, list[RepMorphism], list[RepMorphism]]:
    mods = list(mods)
    if not mods:
        if alg is None:
            raise ModuleError("empty direct sum needs an algebra")
        Z = Module.zero(alg)
        return Z, [], []
    alg = mods[0].alg
    dims = [sum(M.dims[i] for M in mods) for i in range(alg.n)]
    act = [None if alg.is_idempotent(k) else block_diag([M.act[k] for M in mods]) for k in range(alg.dim)]
    S = Module(alg, dims, act, check=False)
    incs, projs = [], []
    offs = [0] * alg.n
    for M in mods:
        inc, proj = [], []
        for i in range(alg.n):
            a = Mat.zeros(dims[i], M.dims[i])
            for r in range(M.dims[i]):
                a.data[offs[i] + r][r] = ONE
            inc.append(a)
            proj.append(a.T())
            offs[i] += M.dims[i]
        incs.append(RepMorphism(M, S, inc, check=False))
        projs.append(RepMorphism(S, M, proj, check=False))
    return S, incs, projs


def submodule(M: Module, spaces: Sequence[Mat]) -> tuple[Module, RepMorphism]:
    """Submodule spanned at vertex ``i`` by the (independent) columns of ``spaces[i]``."""
    alg = M.alg
    dims = [s.cols for s in spaces]
    act = []
    for k, b in enumerate(alg.basis):
        if alg.is_idempotent(k):
            act.append(None)
            continue
        img = M.act[k] @ spaces[b.source]
        if dims[b.target] == 0:
            if not img.is_zero():
                raise ModuleError("subspace is not a submodule")
            act.append(Mat.zeros(0, dims[b.source]))
            continue
        x = solve(spaces[b.target], img)
        if x is None:
            raise ModuleError("subspace is not a submodule")
        act.append(x)
    S = Module(alg, dims, act, check=False)
    return S, RepMorphism(S, M, list(spaces), check=False)


def quotient(M: Module, spaces: Sequence[Mat]) -> tuple[Module, RepMorphism]:
    """``M / N`` for a submodule given by column spaces; returns the projection."""
    alg = M.alg
    comps, projs = [], []
    for i, s in enumerate(spaces):
        idx = complement_basis(s, M.dims[i])
        C = Mat.from_columns([[ONE if r == j else ZERO for r in range(M.dims[i])] for j in idx], M.dims[i])
        full = hstack([s, C]) if s.cols else C
        inv = full.inverse() if full.rows else full
        comps.append(C)
        projs.append(inv.submatrix(range(s.cols, s.cols + C.cols), range(M.dims[i])))
    dims = [c.cols for c in comps]
    act = [None if alg.is_idempotent(k) else projs[b.target] @ M.act[k] @ comps[b.source]
           for k, b in enumerate(alg.basis)]
    Q = Module(alg, dims, act, check=False)
    return Q, RepMorphism(M, Q, projs, check=False)


def kernel(f: RepMorphism) -> tuple[Module, RepMorphism]:
    return submodule(f.source, [kernel_matrix(m) for m in f.maps])


def image_spaces(f: RepMorphism) -> list[Mat]:
    return [column_space(m) for m in f.maps]


def image(f: RepMorphism) -> tuple[Module, RepMorphism]:
    return submodule(f.target, image_spaces(f))


def cokernel(f: RepMorphism) -> tuple[Module, RepMorphism]:
    return quotient(f.target, image_spaces(f))


def span_spaces(M: Module, spaces: Sequence[Sequence[Mat]]) -> list[Mat]:
    """Per-vertex sum of several families of column spaces."""
    out = []
    for i in range(M.alg.n):
        cols = [c for fam in spaces for c in fam[i].columns()]
        out.append(column_space(Mat.from_columns(cols, M.dims[i])) if cols else Mat.zeros(M.dims[i], 0))
    return out


# ---------------------------------------------------------------------------
# endomorphisms, decomposition and isomorphism

def _end_radical_codim(M: Module) -> tuple[list[RepMorphism], int]:
    E = hom_basis(M, M)
    mats = [f.total() for f in E]
    gram = Mat(len(E), len(E), [[(a @ b).trace() for b in mats] for a in mats])
    return E, gram.rank()


def end_semisimple_dim(M: Module) -> int:
    """``dim End(M) / rad End(M)`` (trace-form criterion)."""
    if "endss" not in M._memo:
        M._memo["endss"] = _end_radical_codim(M)[1]
    return M._memo["endss"]


def _nilpotent(m: Mat) -> bool:
    n = m.rows
    if n == 0:
        return True
    p = m
    k = 1
    while k < n:
        p = p @ p
        k *= 2
    return p.is_zero()


def _charpoly_factors(m: Mat):
    import sympy
    x = sympy.Symbol("x")
    sm = sympy.Matrix(m.rows, m.cols, [sympy.Rational(v.numerator, v.denominator) for v in m.flatten()])
    poly = sympy.Poly(sm.charpoly(x).as_expr(), x)
    _, facs = poly.factor_list()
    out = []
    for f, e in facs:
        coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in f.all_coeffs()]
        out.append((coeffs, e))
    return out


def _poly_eval(coeffs: Sequence[Fraction], m: Mat) -> Mat:
    acc = Mat.zeros(m.rows, m.cols)
    for c in coeffs:
        acc = acc @ m + Mat.identity(m.rows).scale(c)
    return acc


def _mat_power(m: Mat, e: int) -> Mat:
    out = Mat.identity(m.rows)
    for _ in range(e):
        out = out @ m
    return out


def _split_by(M: Module, f: RepMorphism) -> list[list[Mat]] | None:
    facs = _charpoly_factors(f.total())
    if len(facs) < 2:
        return None
    parts = []
    for coeffs, e in facs:
        spaces = []
        for i in range(M.alg.n):
            if M.dims[i] == 0:
                spaces.append(Mat.zeros(0, 0))
                continue
            pm = _mat_power(_poly_eval(coeffs, f.maps[i]), e)
            spaces.append(kernel_matrix(pm))
        parts.append(spaces)
    return parts


def _candidates(E: list[RepMorphism], seed: int):
    yield from E
    for a, b in itertools.combinations(E, 2):
        yield a + b
    for a in E:
        for b in E:
            yield a @ b
    rng = random.Random(seed)
    for _ in range(400):
        coeffs = [rng.choice((0, 0, 1, -1, 2, -2, 3)) for _ in E]
        yield combine(E, coeffs, E[0].source, E[0].source)


@dataclass
class Decomposition:
    summands: list[tuple[Module, int]]
    parts: list[tuple[Module, RepMorphism]]  # each indecomposable part with its inclusion into M
    witness: RepMorphism  # iso from the direct sum of the parts (in order) to M

    def dims(self) -> list[tuple[int, ...]]:
        return [S.dims for S, _ in self.parts]


def _split_parts(M: Module, seed: int) -> list[tuple[Module, RepMorphism]]:
    if M.total == 0:
        return []
    E, codim = _end_radical_codim(M)
    M._memo["endss"] = codim
    if codim == 1:
        return [(M, M.identity())]
    saw_field_ext = False
    for f in _candidates(E, seed):
        facs = None
        parts = _split_by(M, f)
        if parts is None:
            facs = _charpoly_factors(f.total())
            if facs and len(facs[0][0]) > 2:
                saw_field_ext = True
            continue
        out = []
        for spaces in parts:
            S, inc = submodule(M, spaces)
            for T, j in _split_parts(S, seed):
                out.append((T, inc @ j))
        return out
    msg = f"could not split module {M.dims}: dim End/rad = {codim}"
    if saw_field_ext:
        msg += " (irreducible characteristic factors of degree > 1: residue algebra larger than Q)"
    raise DecompositionError(msg)


def decompose(M: Module, seed: int = 0) -> Decomposition:
    """Krull-Schmidt decomposition with grouped multiplicities."""
    if "decomp" in M._memo:
        return M._memo["decomp"]
    parts = _split_parts(M, seed)
    summands: list[tuple[Module, int]] = []
    for S, _ in parts:
        for k, (T, m) in enumerate(summands):
            if _indec_iso(S, T) is not None:
                summands[k] = (T, m + 1)
                break
        else:
            summands.append((S, 1))
    if parts:
        total = [hstack([inc.maps[i] for _, inc in parts]) for i in range(M.alg.n)]
        src = direct_sum([S for S, _ in parts])[0]
        witness = RepMorphism(src, M, total, check=False)
    else:
        witness = zero_map(M, M)
    d = Decomposition(summands, parts, witness)
    M._memo["decomp"] = d
    return d


def indecomposable_summands(M: Module) -> list[Module]:
    return [S for S, _ in decompose(M).parts]


def is_indecomposable(M: Module) -> tuple[bool, int]:
    """(indecomposable?, dim End/rad)."""
    if M.total == 0:
        raise ModuleError("zero module")
    codim = end_semisimple_dim(M)
    if codim == 1:
        return True, 1
    return len(decompose(M).parts) == 1, codim


def _indec_iso(M: Module, N: Module) -> RepMorphism | None:
    """Exact isomorphism test for indecomposables (local endomorphism rings)."""
    if M.dims != N.dims:
        return None
    F = hom_basis(M, N)
    if not F:
        return None
    G = hom_basis(N, M)
    for f in F:
        if f.is_iso():
            return f
    for f in F:
        for g in G:
            if not _nilpotent((g @ f).total()):
                return f
    return None


def is_isomorphic(M: Module, N: Module, seed: int = 0, witness: bool = False):
    """Decide ``M ~ N``; with ``witness=True`` return the isomorphism (or ``None``)."""
    res = _is_iso(M, N, seed)
    return res if witness else res is not None


def _is_iso(M: Module, N: Module, seed: int) -> RepMorphism | None:
    if M.alg is not N.alg:
        raise ModuleError("algebra mismatch")
    if M.dims != N.dims:
        return None
    if M.total == 0:
        return zero_map(M, N)
    if M is N:
        return M.identity()
    F = hom_basis(M, N)
    d = len(hom_basis(M, M))
    if len(F) != d or len(hom_basis(N, M)) != d or len(hom_basis(N, N)) != d:
        return None
    rng = random.Random(seed)
    for f in F:
        if f.is_iso():
            return f
    for _ in range(6):
        f = combine(F, [rng.randint(-7, 7) for _ in F], M, N)
        if f.is_iso():
            return f
    if end_semisimple_dim(M) == 1:
        return _indec_iso(M, N)
    # exact fallback through the decompositions
    dm, dn = decompose(M, seed), decompose(N, seed)
    if len(dm.parts) != len(dn.parts):
        return None
    used = [False] * len(dn.parts)
    pieces = []
    for S, incS in dm.parts:
        for k, (T, incT) in enumerate(dn.parts):
            if used[k]:
                continue
            phi = _indec_iso(S, T)
            if phi is not None:
                used[k] = True
                pieces.append((incS, incT, phi))
                break
        else:
            return None
    # assemble witness M -> N through the decomposition of M
    inv = dm.witness.inverse()
    maps = [Mat.zeros(N.dims[i], M.dims[i]) for i in range(M.alg.n)]
    row0 = [0] * M.alg.n
    for incS, incT, phi in pieces:
        S = incS.source
        for i in range(M.alg.n):
            rows = range(row0[i], row0[i] + S.dims[i])
            piS = inv.maps[i].submatrix(rows, range(M.dims[i]))
            maps[i] = maps[i] + incT.maps[i] @ phi.maps[i] @ piS
            row0[i] += S.dims[i]
    return RepMorphism(M, N, maps, check=False)


def find_iso_class(M: Module, reps: Sequence[Module]) -> int | None:
    for k, R in enumerate(reps):
        if is_isomorphic(M, R):
            return k
    return None


def is_basic(M: Module) -> bool:
    return all(m == 1 for _, m in decompose(M).summands)


def basic_part(M: Module) -> Module:
    return direct_sum([S for S, _ in decompose(M).summands], M.alg)[0]


# ---------------------------------------------------------------------------
# induction and restriction along kQ -> R (x) kQ

def _tensor_check(lam: Algebra, kq: Algebra) -> None:
    if lam.tensor is None:
        raise AlgebraError("not a tensor construction")
    h = lam.tensor.hereditary
    if kq is not h and not (kq.quiver == h.quiver and not kq.relations and kq.dim == h.dim):
        raise AlgebraError("algebra provenance mismatch: not a tensor construction over this path algebra")


def tensor_module(X: Module, M: Module, lam: Algebra) -> Module:
    """``X (x)_k M`` over ``R (x) kQ`` for an ``R``-module ``X`` and a ``kQ``-module ``M``."""
    td = lam.tensor
    _tensor_check(lam, M.alg)
    R = td.local
    if X.alg is not R:
        raise AlgebraError("first factor must be a module over the local algebra of the tensor product")
    d = X.total
    kq = M.alg
    maps = {}
    for lab, b in lam.arrow_elems:
        if lab in td.loop_of:
            x, v = td.loop_of[lab]
            i = kq.vertex_index(v)
            maps[lab] = kron(X.arrow_map(x), Mat.identity(M.dims[i]))
        else:
            maps[lab] = kron(Mat.identity(d), M.arrow_map(lab))
    return Module.from_arrows(lam, [d * x for x in M.dims], maps)


def induction(M: Module, lam: Algebra) -> Module:
    """``Lambda (x)_{kQ} M = R (x) M``."""
    N = tensor_module(indec_projective(lam.tensor.local, 0), M, lam)
    N.name = f"ind({M.name})" if M.name else ""
    return N


def induction_map(f: RepMorphism, lam: Algebra) -> RepMorphism:
    d = lam.tensor.local.dim
    return RepMorphism(induction(f.source, lam), induction(f.target, lam),
                       [kron(Mat.identity(d), m) for m in f.maps], check=False)


def induce_with(f: RepMorphism, src: Module, tgt: Module) -> RepMorphism:
    """``id (x) f`` between already induced modules."""
    d = src.alg.tensor.local.dim
    return RepMorphism(src, tgt, [kron(Mat.identity(d), m) for m in f.maps], check=False)


def restriction(N: Module, kq: Algebra) -> Module:
    _tensor_check(N.alg, kq)
    maps = {lab: N.arrow_map(lab) for lab, _ in kq.arrow_elems}
    return Module.from_arrows(kq, N.dims, maps)


def restrict_scalars(N: Module, sub: Algebra, emb: dict[str, str]) -> Module:
    return Module.from_arrows(sub, N.dims, {a: N.arrow_map(b) for a, b in emb.items()})


# ---------------------------------------------------------------------------
# quotient algebras

def to_quotient(M: Module, quo: Algebra) -> Module:
    """A module killed by the removed idempotents, viewed over ``A / <e>``."""
    qd = quo.quotient
    if qd is None or qd.parent is not M.alg:
        raise AlgebraError("not a quotient of this module's algebra")
    for i in range(M.alg.n):
        if i not in qd.kept and M.dims[i]:
            raise ModuleError("module is not supported on the quotient")
    dims = [M.dims[i] for i in qd.kept]
    act = [None if quo.is_idempotent(k) else M.act[qd.section[k]] for k in range(quo.dim)]
    return Module(quo, dims, act, name=M.name, check=False)


def inflate(Y: Module, alg: Algebra) -> Module:
    """An ``A / <e>``-module viewed as an ``A``-module."""
    qd = Y.alg.quotient
    if qd is None or qd.parent is not alg:
        raise AlgebraError("not a quotient of the target algebra")
    pos = {v: k for k, v in enumerate(qd.kept)}
    dims = [Y.dims[pos[i]] if i in pos else 0 for i in range(alg.n)]
    act = []
    for k, b in enumerate(alg.basis):
        if alg.is_idempotent(k):
            act.append(None)
            continue
        m = Mat.zeros(dims[b.target], dims[b.source])
        if dims[b.target] and dims[b.source]:
            for j in range(Y.alg.dim):
                c = qd.proj.data[j][k]
                if c and not Y.alg.is_idempotent(j):
                    m = m + Y.act[j].scale(c)
        act.append(m)
    return Module(alg, dims, act, name=Y.name, check=False)


def quotient_morphism(f: RepMorphism, src: Module, tgt: Module) -> RepMorphism:
    """Transport a morphism between modules along :func:`to_quotient`/:func:`inflate`."""
    if len(f.maps) == src.alg.n:
        return RepMorphism(src, tgt, f.maps, check=False)
    qd = (src.alg.quotient or f.source.alg.quotient)
    if src.alg.n > f.source.alg.n:  # inflate
        pos = {v: k for k, v in enumerate(qd.kept)}
        maps = [f.maps[pos[i]] if i in pos else Mat.zeros(0, 0) for i in range(src.alg.n)]
    else:
        maps = [f.maps[i] for i in qd.kept]
    return RepMorphism(src, tgt, maps, check=False)
