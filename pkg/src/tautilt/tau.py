"""tau-rigid modules, support tau-tilting objects, torsion functors and completions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Algebra, is_dynkin, positive_root_count
from .exactlin import Mat
from .homology import g_vector, tau
from .rep import (Module, RepMorphism, decompose, direct_sum, hom_basis, hom_dim, image_spaces, indec_injective,
                  indec_projective, induction, is_isomorphic, quotient, simple, span_spaces, submodule,
                  to_quotient)


class EnumerationError(RuntimeError):
    pass


class CompletionError(AssertionError):
    pass


def is_tau_rigid(M: Module) -> bool:
    return hom_dim(M, tau(M)) == 0


def _as_list(M) -> list[Module]:
    return list(M) if isinstance(M, (list, tuple)) else [M]


def torsion_spaces(gens, X: Module) -> list[Mat]:
    fams = [image_spaces(f) for G in _as_list(gens) for f in hom_basis(G, X)]
    return span_spaces(X, fams) if fams else [Mat.zeros(d, 0) for d in X.dims]


def gen_membership(gens, X: Module) -> bool:
    """``X`` in ``Gen(gens)``: the evaluation map is onto."""
    return all(s.cols == d for s, d in zip(torsion_spaces(gens, X), X.dims))


@dataclass
class TorsionDecomposition:
    X: Module
    tX: Module
    fX: Module
    inc: RepMorphism
    proj: RepMorphism


def torsion_parts(gens, X: Module) -> TorsionDecomposition:
    sp = torsion_spaces(gens, X)
    t, inc = submodule(X, sp)
    f, proj = quotient(X, sp)
    return TorsionDecomposition(X, t, f, inc, proj)


def torsion_free(gens, X: Module) -> Module:
    """``f_M X = X / t_M X``."""
    return quotient(X, torsion_spaces(gens, X))[0]


def perp_membership(gens, X: Module) -> bool:
    """``Hom(gens, X) = 0``."""
    return all(hom_dim(G, X) == 0 for G in _as_list(gens))


def standard_name(M: Module) -> str:
    alg = M.alg
    for kind, fn in (("P", indec_projective), ("S", simple), ("I", indec_injective)):
        for i in range(alg.n):
            if is_isomorphic(M, fn(alg, i)):
                return f"{kind}{alg.vertices[i]}"
    return "M" + "".join(str(d) for d in M.dims) if max(M.dims) < 10 else f"M{M.dims}"


# ---------------------------------------------------------------------------
# enumeration of indecomposable tau-rigid modules

def _hereditary_dynkin(alg: Algebra) -> list[Module] | None:
    if alg.quiver is None or not alg.quiver.is_acyclic() or alg.relations:
        return None
    if not alg.is_hereditary():
        return None
    types = is_dynkin(alg.quiver)
    if types is None:
        return None
    found: list[Module] = []
    for i in range(alg.n):
        X = indec_injective(alg, i)
        while X.total:
            if not any(is_isomorphic(X, Y) for Y in found):
                found.append(X)
            X = tau(X)
    if len(found) != positive_root_count(types):
        raise EnumerationError(f"found {len(found)} indecomposables, expected {positive_root_count(types)}")
    return found


def _left_mutation_cokernel(X: Module, U: Sequence[Module]) -> list[Module]:
    """Indecomposable summands of ``coker(X -> U')`` outside ``add U`` for a left ``add U``-approximation."""
    maps = [f for Uj in U for f in hom_basis(X, Uj)]
    if not maps:
        return []
    targets = [f.target for f in maps]
    S, incs, _ = direct_sum(targets, X.alg)
    total = incs[0] @ maps[0]
    for inc, f in zip(incs[1:], maps[1:]):
        total = total + inc @ f
    C = quotient(S, image_spaces(total))[0]
    if C.total == 0:
        return []
    return [Y for Y, _ in decompose(C).parts if not any(Y.dims == Uj.dims and is_isomorphic(Y, Uj) for Uj in U)]


def mutation_closure(alg: Algebra, cap: int = 5000) -> tuple[list[Module], list[tuple[frozenset, frozenset]]]:
    """Support tau-tilting pairs reachable from the regular module by left mutation.

    For a tau-tilting finite algebra this is all of them.  Returns the
    indecomposable tau-rigid modules met and the pairs as (module indices,
    projective vertices)."""
    found: list[Module] = []

    def idx(Y: Module) -> int:
        for k, Z in enumerate(found):
            if Z.dims == Y.dims and is_isomorphic(Y, Z):
                return k
        if not is_tau_rigid(Y):
            raise EnumerationError(f"mutation produced a non tau-rigid module {Y.dims}")
        found.append(Y)
        return len(found) - 1

    start = (frozenset(idx(indec_projective(alg, i)) for i in range(alg.n)), frozenset())
    seen = {start}
    queue = [start]
    while queue:
        mods, projs = queue.pop(0)
        for x in sorted(mods):
            U = [found[k] for k in sorted(mods) if k != x]
            if U and gen_membership(U, found[x]):
                continue
            new = _left_mutation_cokernel(found[x], U)
            if len(new) > 1:
                raise EnumerationError("left mutation produced a decomposable complement")
            rest = mods - {x}
            if new:
                state = (rest | {idx(new[0])}, projs)
            else:
                P = frozenset(v for v in range(alg.n) if all(hom_dim(indec_projective(alg, v), Y) == 0 for Y in U))
                if len(P) != len(projs) + 1:
                    raise EnumerationError("left mutation lost the support count")
                state = (rest, P)
            if state not in seen:
                seen.add(state)
                queue.append(state)
                if len(seen) > cap:
                    raise EnumerationError(f"more than {cap} support tau-tilting pairs (tau-tilting infinite?)")
    return found, sorted(seen, key=lambda s: (sorted(s[0]), sorted(s[1])))


def _sort_key(M: Module, k: int):
    return (tuple(M.dims), k)


def indec_tau_rigid(alg: Algebra, candidates: Sequence[Module] | None = None) -> list[Module]:
    """Indecomposable tau-rigid modules, one per iso-class, in (dim vector, discovery) order.

    Routes: Dynkin hereditary (tau-orbits of the injectives), tensor construction over a
    Dynkin quiver (induce and verify), idempotent quotient of an algebra with a known list,
    local algebra (only the regular module), an explicit candidate list, or left mutation
    from the regular module (tau-tilting finite algebras).
    """
    cached = alg._cache.get("taurigid")
    if cached is not None and candidates is None:
        return cached
    found: list[Module] | None = None
    if candidates is not None:
        found = []
        for X in candidates:
            if X.total and decompose(X).parts and len(decompose(X).parts) == 1 and is_tau_rigid(X) \
                    and not any(is_isomorphic(X, Y) for Y in found):
                found.append(X)
    elif alg.tensor is not None:
        base = indec_tau_rigid(alg.tensor.hereditary)
        found = []
        for X in base:
            Y = induction(X, alg)
            if not is_tau_rigid(Y):
                raise EnumerationError(f"induced module {Y.dims} is not tau-rigid")
            found.append(Y)
    elif alg.quotient is not None:
        parent = alg.quotient.parent
        removed = [i for i in range(parent.n) if i not in alg.quotient.kept]
        found = []
        for X in indec_tau_rigid(parent):
            if all(X.dims[i] == 0 for i in removed):
                Y = to_quotient(X, alg)
                if is_tau_rigid(Y):
                    found.append(Y)
    elif alg.n == 1:
        found = [indec_projective(alg, 0)]
    else:
        found = _hereditary_dynkin(alg)
        if found is None:
            found = mutation_closure(alg)[0]
    order = sorted(range(len(found)), key=lambda k: _sort_key(found[k], k))
    found = [found[k] for k in order]
    for X in found:
        X.name = standard_name(X)
    if candidates is None:
        alg._cache["taurigid"] = found
    return found


def register_tau_rigid(alg: Algebra, modules: Sequence[Module]) -> list[Module]:
    """Install an externally derived list (verified) as the algebra's catalogue."""
    out = indec_tau_rigid(alg, candidates=modules)
    alg._cache["taurigid"] = out
    alg._cache.pop("catalog", None)
    return out


# ---------------------------------------------------------------------------
# support tau-rigid objects

@dataclass(frozen=True)
class SupportTauRigidObject:
    """``M (+) P[1]`` as catalogue indices of the summands of ``M`` and vertices of ``P``."""

    catalog: "Catalog" = field(compare=False, hash=False, repr=False)
    mods: tuple[int, ...]
    projs: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.mods) + len(self.projs)

    @property
    def alg(self) -> Algebra:
        return self.catalog.alg

    def modules(self) -> list[Module]:
        return [self.catalog.mods[i] for i in self.mods]

    def module(self) -> Module:
        return direct_sum(self.modules(), self.alg)[0]

    def proj_module(self) -> Module:
        return direct_sum([indec_projective(self.alg, v) for v in self.projs], self.alg)[0]

    def is_complete(self) -> bool:
        return self.size == self.alg.n

    def g_vectors(self) -> list[tuple[int, ...]]:
        out = [g_vector(M) for M in self.modules()]
        for v in self.projs:
            out.append(tuple(-1 if j == v else 0 for j in range(self.alg.n)))
        return out

    def names(self) -> list[str]:
        return [self.catalog.mods[i].name for i in self.mods] + \
               [f"P{self.alg.vertices[v]}[1]" for v in self.projs]

    def label(self) -> str:
        return " + ".join(self.names()) or "0"

    def summands(self) -> list[tuple[str, int]]:
        return [("M", i) for i in self.mods] + [("P", v) for v in self.projs]


class Catalog:
    """Indecomposable tau-rigid modules of an algebra plus the compatibility relation."""

    def __init__(self, alg: Algebra):
        self.alg = alg
        self.mods = indec_tau_rigid(alg)
        m = len(self.mods)
        self.taus = [tau(X) for X in self.mods]
        hz = [[hom_dim(self.mods[i], self.taus[j]) == 0 for j in range(m)] for i in range(m)]
        self.compat_mm = [[hz[i][j] and hz[j][i] for j in range(m)] for i in range(m)]
        self.compat_mp = [[hom_dim(indec_projective(alg, v), self.mods[i]) == 0 for v in range(alg.n)]
                          for i in range(m)]
        self._cliques: list[SupportTauRigidObject] | None = None
        self._index_cache: dict[int, int | None] = {}

    @classmethod
    def of(cls, alg: Algebra) -> "Catalog":
        cat = alg._cache.get("catalog")
        if cat is None:
            cat = cls(alg)
            alg._cache["catalog"] = cat
        return cat

    def index(self, X: Module) -> int | None:
        if X.uid in self._index_cache:
            return self._index_cache[X.uid]
        out = None
        for k, Y in enumerate(self.mods):
            if Y.dims == X.dims and is_isomorphic(X, Y):
                out = k
                break
        self._index_cache[X.uid] = out
        return out

    def indices(self, M: Module) -> list[int]:
        """Catalogue indices of the indecomposable summands of ``M`` (with repetition)."""
        out = []
        for S in (S for S, _ in decompose(M).parts):
            k = self.index(S)
            if k is None:
                raise EnumerationError(f"summand {S.dims} is not in the tau-rigid catalogue")
            out.append(k)
        return out

    def obj(self, mods: Iterable[int] = (), projs: Iterable[int] = ()) -> SupportTauRigidObject:
        return SupportTauRigidObject(self, tuple(sorted(set(mods))), tuple(sorted(set(projs))))

    def from_pair(self, M: Module | None, P: Iterable[int] = ()) -> SupportTauRigidObject:
        mods = self.indices(M) if M is not None and M.total else []
        return self.obj(mods, P)

    def compatible(self, a: tuple[str, int], b: tuple[str, int]) -> bool:
        if a[0] == "M" and b[0] == "M":
            return self.compat_mm[a[1]][b[1]]
        if a[0] == "M":
            return self.compat_mp[a[1]][b[1]]
        if b[0] == "M":
            return self.compat_mp[b[1]][a[1]]
        return True

    def self_compatible(self, a: tuple[str, int]) -> bool:
        return a[0] == "P" or self.compat_mm[a[1]][a[1]]

    def objects(self) -> list[tuple[str, int]]:
        return [("M", i) for i in range(len(self.mods))] + [("P", v) for v in range(self.alg.n)]

    def is_support_tau_rigid(self, summands: Sequence[tuple[str, int]]) -> bool:
        if len(set(summands)) != len(summands):
            return False
        return all(self.self_compatible(a) for a in summands) and all(
            self.compatible(a, b) for a, b in itertools.combinations(summands, 2))

    def cliques(self) -> list[SupportTauRigidObject]:
        """All basic support tau-rigid objects (including 0) by deterministic backtracking."""
        if self._cliques is None:
            verts = self.objects()
            out: list[SupportTauRigidObject] = []

            def grow(chosen: list[tuple[str, int]], start: int):
                out.append(self.obj([i for k, i in chosen if k == "M"], [v for k, v in chosen if k == "P"]))
                for j in range(start, len(verts)):
                    v = verts[j]
                    if all(self.compatible(v, c) for c in chosen):
                        chosen.append(v)
                        grow(chosen, j + 1)
                        chosen.pop()

            grow([], 0)
            if any(o.size > self.alg.n for o in out):
                raise EnumerationError("support tau-rigid object with more than n summands")
            self._cliques = out
        return self._cliques

    def support_tau_tilting(self) -> list[SupportTauRigidObject]:
        return [o for o in self.cliques() if o.size == self.alg.n]

    def compatible_with(self, U: SupportTauRigidObject) -> list[tuple[str, int]]:
        """Indecomposable ``V`` not in ``U`` with ``U (+) V`` support tau-rigid."""
        us = U.summands()
        return [v for v in self.objects() if v not in us and self.self_compatible(v)
                and all(self.compatible(v, u) for u in us)]

    def module_of(self, a: tuple[str, int]) -> Module:
        return self.mods[a[1]] if a[0] == "M" else indec_projective(self.alg, a[1])

    def name_of(self, a: tuple[str, int]) -> str:
        return self.mods[a[1]].name if a[0] == "M" else f"P{self.alg.vertices[a[1]]}[1]"


def support_tau_tilting(alg: Algebra) -> list[SupportTauRigidObject]:
    return Catalog.of(alg).support_tau_tilting()


# ---------------------------------------------------------------------------
# completions

def _gen_contains(cat: Catalog, gens: Sequence[int], targets: Iterable[int]) -> bool:
    G = [cat.mods[i] for i in gens]
    return all(gen_membership(G, cat.mods[j]) for j in targets)


def bongartz(U: SupportTauRigidObject) -> list[int]:
    """Catalogue indices of the Bongartz completion of the module part of ``U``."""
    cat = U.catalog
    if U.projs:
        raise CompletionError("Bongartz completion is taken for modules")
    comps = [T for T in cat.support_tau_tilting() if not T.projs and set(U.mods) <= set(T.mods)]
    if not comps:
        raise CompletionError("no module-only completion")
    best = [T for T in comps if all(_gen_contains(cat, T.mods, S.mods) for S in comps)]
    if len(best) != 1:
        raise CompletionError(f"Gen-maximal completion not unique ({len(best)} candidates)")
    B = best[0]
    # Ext-projectivity certificate inside the torsion class ^perp(tau M)
    from .homology import ext1_dim
    tM = [cat.taus[i] for i in U.mods]
    inside = [j for j in range(len(cat.mods)) if all(hom_dim(cat.mods[j], t) == 0 for t in tM)]
    for i in B.mods:
        if any(hom_dim(cat.mods[i], t) for t in tM):
            raise CompletionError("completion summand outside ^perp(tau M)")
        for j in inside:
            if ext1_dim(cat.mods[i], cat.mods[j]):
                raise CompletionError("completion summand is not Ext-projective")
    return list(B.mods)


def co_bongartz(U: SupportTauRigidObject) -> tuple[list[int], list[int]]:
    """``(C_M, Q)`` with ``C_M (+) M (+) Q[1]`` support tau-tilting and Gen unchanged."""
    cat = U.catalog
    M = [cat.mods[i] for i in U.mods]
    C = [j for j in range(len(cat.mods)) if j not in U.mods and gen_membership(M, cat.mods[j])
         and all(hom_dim(X, cat.taus[j]) == 0 for X in M)]
    Q = [v for v in range(cat.alg.n) if all(hom_dim(indec_projective(cat.alg, v), X) == 0 for X in M)]
    total = cat.obj(list(U.mods) + C, Q)
    if not total.is_complete() or not cat.is_support_tau_rigid(total.summands()):
        raise CompletionError("co-Bongartz completion is not support tau-tilting")
    return C, Q


def split_projective_split(T: SupportTauRigidObject) -> tuple[list[int], list[int]]:
    """``(M_s, M_ns)``: the minimal summand set generating ``Gen M`` and the rest."""
    cat = T.catalog
    mods = list(T.mods)
    all_min = []
    for r in range(len(mods) + 1):
        for S in itertools.combinations(mods, r):
            if _gen_contains(cat, S, mods) and not any(set(m) <= set(S) for m in all_min):
                all_min.append(S)
    if len(all_min) != 1:
        raise CompletionError("minimal generating subset not unique")
    ms = list(all_min[0])
    return ms, [i for i in mods if i not in ms]


def g_vector_reduction_check(lam: Algebra) -> dict:
    """Compare g-vector multisets of indecomposable tau-rigid modules over ``lam`` and ``kQ``."""
    kq = lam.tensor.hereditary
    up = sorted(g_vector(X) for X in indec_tau_rigid(lam))
    down = sorted(g_vector(X) for X in indec_tau_rigid(kq))
    if up != down:
        raise AssertionError(f"g-vector mismatch: {up} vs {down}")
    return {"g_vectors": up, "count": len(up)}
