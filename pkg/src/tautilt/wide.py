"""tau-perpendicular subcategories ``J(U)``, their algebras and the epsilon maps.

A :class:`WideSubcategory` is a module category ``mod A_W`` together with an
exact embedding into its parent category (``up``) and the inverse on objects
of the parent lying in it (``down``).  Levels chain back to the root algebra,
so every object has an *ambient* form in ``mod`` of the root.

For ``U = M (+) P[1]`` we first pass to ``mod A/<e_P>`` and then, if ``M`` is
nonzero, to ``mod Gamma`` with ``Gamma = End(T)^op``, ``T = f_M(B)`` for the
summands ``B`` of the Bongartz completion not in ``add M``.  ``G = Hom(T, -)``
and ``F = T (x)_Gamma -``.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, BasisElement, _finish_abstract, idempotent_quotient
from .exactlin import Mat, ONE, ZERO, column_space
from .homology import g_vector, pd_capped, ext_dim, tau
from .rep import (DecompositionError, Module, RepMorphism, coordinates, decompose, direct_sum,
                  end_semisimple_dim, hom_basis, hom_dim, indec_projective, inflate, is_isomorphic, quotient,
                  simple, to_quotient)
from .tau import (Catalog, SupportTauRigidObject, bongartz, gen_membership, register_tau_rigid,
                  split_projective_split, torsion_free)
from .twoterm import (h0_of_cocone, minimal_left_module_approximation, minimal_right_approximation,
                      presentation_complex)


class WideError(AssertionError):
    pass


Token = tuple  # ("M", catalogue index) or ("P", vertex)


def _local_basis(T: Module) -> list[RepMorphism]:
    """Identity first, then a basis of the trace-zero (radical) endomorphisms."""
    if end_semisimple_dim(T) != 1:
        raise DecompositionError(f"endomorphism ring of {T.dims} is not split local")
    E = hom_basis(T, T)
    tr = [e.total().trace() for e in E]
    piv = next(k for k, t in enumerate(tr) if t)
    out = [T.identity()]
    for k, e in enumerate(E):
        if k != piv:
            out.append(e - E[piv].scale(tr[k] / tr[piv]))
    return out


class GammaData:
    """``Gamma = End(T_1 (+) ... (+) T_r)^op`` with the functors ``G`` and ``F``."""

    def __init__(self, T: Sequence[Module], name: str = ""):
        self.T = list(T)
        r = len(self.T)
        self.homs: dict[tuple[int, int], list[RepMorphism]] = {}
        basis: list[BasisElement] = []
        self.maps: list[RepMorphism] = []
        for i in range(r):
            basis.append(BasisElement(i, i, f"e{i + 1}", ()))
            self.maps.append(self.T[i].identity())
        for i in range(r):
            for j in range(r):
                hb = _local_basis(self.T[i]) if i == j else hom_basis(self.T[i], self.T[j])
                self.homs[(i, j)] = hb
                for k, g in enumerate(hb):
                    if i == j and k == 0:
                        continue
                    basis.append(BasisElement(j, i, f"g{i + 1}{j + 1}_{k}", None))
                    self.maps.append(g)
        index = {}
        for b, el in enumerate(basis):
            index.setdefault((el.target, el.source), []).append(b)
        # idempotents sit first in each diagonal list
        for i in range(r):
            index[(i, i)].remove(i)
            index[(i, i)].insert(0, i)
        self._index = index
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for b, eb in enumerate(basis):
            if eb.path == ():
                continue
            for c, ec in enumerate(basis):
                if ec.path == () or eb.source != ec.target:
                    continue
                # (gamma_b . gamma_c) acts as phi -> phi o c~ o b~
                comp = self.maps[c] @ self.maps[b]
                a, d = eb.target, ec.source  # comp: T_a -> T_d
                coords = coordinates(comp, self.homs[(a, d)])
                if coords is None:
                    raise WideError("Gamma product left the Hom space")
                out = {}
                for k, x in enumerate(coords):
                    if x:
                        out[index[(a, d)][k]] = x
                if out:
                    table[(b, c)] = out
        self.alg = _finish_abstract([str(i + 1) for i in range(r)], basis, table, name)
        dim = len(basis)
        if dim <= 12:
            triples = None
        else:
            rng = random.Random(0)
            triples = [tuple(rng.randrange(dim) for _ in range(3)) for _ in range(600)]
        if not self.alg.check_associative(triples):
            raise WideError("Gamma is not associative")

    def G(self, X: Module) -> Module:
        """``Hom(T, X)`` as a ``Gamma``-module."""
        alg = self.alg
        hb = [hom_basis(Ti, X) for Ti in self.T]
        dims = [len(h) for h in hb]
        act: list[Mat | None] = []
        for k, el in enumerate(alg.basis):
            if el.path == ():
                act.append(None)
                continue
            i, j = el.target, el.source  # map T_i -> T_j
            g = self.maps[k]
            m = Mat.zeros(dims[i], dims[j])
            for col, phi in enumerate(hb[j]):
                c = coordinates(phi @ g, hb[i])
                if c is None:
                    raise WideError("G is not well defined")
                for row, x in enumerate(c):
                    m.data[row][col] = x
            act.append(m)
        return Module(alg, dims, act)

    def G_map(self, f: RepMorphism, GX: Module, GY: Module) -> RepMorphism:
        maps = []
        for i, Ti in enumerate(self.T):
            hx, hy = hom_basis(Ti, f.source), hom_basis(Ti, f.target)
            m = Mat.zeros(len(hy), len(hx))
            for col, phi in enumerate(hx):
                c = coordinates(f @ phi, hy)
                for row, x in enumerate(c):
                    m.data[row][col] = x
            maps.append(m)
        return RepMorphism(GX, GY, maps)

    def F(self, Y: Module) -> Module:
        """``T (x)_Gamma Y``: the quotient of ``(+) T_i (x) Y_i`` by the balancing relations."""
        alg = self.alg
        parts, owners = [], []
        for i, Ti in enumerate(self.T):
            for r in range(Y.dims[i]):
                parts.append(Ti)
                owners.append((i, r))
        base = self.T[0].alg if self.T else None
        V, incs, _ = direct_sum(parts, base)
        pos = {o: k for k, o in enumerate(owners)}
        spaces = []
        for v in range(base.n):
            cols = []
            for k, el in enumerate(alg.basis):
                if el.path == ():
                    continue
                i, j = el.target, el.source  # g~ : T_i -> T_j, Y-action Y_j -> Y_i
                g = self.maps[k]
                Ya = Y.act[k]
                for rj in range(Y.dims[j]):
                    for t in range(self.T[i].dims[v]):
                        e = [ONE if q == t else ZERO for q in range(self.T[i].dims[v])]
                        vec = incs[pos[(j, rj)]].maps[v].apply(g.maps[v].apply(e))
                        for ri in range(Y.dims[i]):
                            c = Ya.data[ri][rj]
                            if c:
                                w = incs[pos[(i, ri)]].maps[v].apply(e)
                                vec = [a - c * b for a, b in zip(vec, w)]
                        if any(vec):
                            cols.append(vec)
            spaces.append(column_space(Mat.from_columns(cols, V.dims[v])) if cols else Mat.zeros(V.dims[v], 0))
        return quotient(V, spaces)[0]


class WideSubcategory:
    """A level in a chain of tau-perpendicular reductions."""

    def __init__(self, alg: Algebra, parent: "WideSubcategory | None" = None, kind: str = "root",
                 defining: SupportTauRigidObject | None = None):
        self.alg = alg
        self.parent = parent
        self.kind = kind
        self.defining = defining
        self.root = parent.root if parent is not None else self
        self.depth = parent.depth + 1 if parent is not None else 0
        self._children: dict = {}
        self._amb: dict = {}
        self._up_cache: dict[int, Module] = {}
        # module-level data
        self.gamma: GammaData | None = None
        self.M: list[int] = []
        self.B: list[int] = []
        self.N: list[int] = []
        # root data
        self.registry: list[Module] = []
        alg._cache.setdefault("wide_level", self)

    @classmethod
    def of(cls, alg: Algebra) -> "WideSubcategory":
        w = alg._cache.get("wide_root")
        if w is None:
            w = cls(alg)
            alg._cache["wide_root"] = w
        return w

    def __repr__(self) -> str:
        return f"<WideSubcategory depth={self.depth} n={self.alg.n} key={self.key()}>"

    @property
    def catalog(self) -> Catalog:
        return Catalog.of(self.alg)

    @property
    def rank(self) -> int:
        return self.alg.n

    # -- functors -------------------------------------------------------
    def up(self, Y: Module) -> Module:
        if self.parent is None:
            return Y
        hit = self._up_cache.get(Y.uid)
        if hit is not None:
            return hit
        if self.kind == "quotient":
            X = inflate(Y, self.parent.alg)
        else:
            X = self.gamma.F(Y)
            if not is_isomorphic(self.gamma.G(X), Y):
                raise WideError("round trip G(F(Y)) is not isomorphic to Y")
        X.name = Y.name
        self._up_cache[Y.uid] = X
        return X

    def down(self, X: Module) -> Module:
        if self.parent is None:
            return X
        if self.kind == "quotient":
            return to_quotient(X, self.alg)
        return self.gamma.G(X)

    def ambient(self, Y: Module) -> Module:
        lvl = self
        while lvl.parent is not None:
            Y = lvl.up(Y)
            lvl = lvl.parent
        return Y

    def chain(self) -> list["WideSubcategory"]:
        out, lvl = [], self
        while lvl is not None:
            out.append(lvl)
            lvl = lvl.parent
        return out[::-1]

    def contains_parent(self, X: Module) -> bool:
        """Membership of a parent-level module."""
        if self.parent is None:
            return True
        D = self.defining
        pc = self.parent.catalog
        if self.kind == "quotient":
            return all(X.dims[v] == 0 for v in D.projs)
        Ms = [pc.mods[i] for i in self.M]
        return all(hom_dim(Mi, X) == 0 and hom_dim(X, pc.taus[i]) == 0 for Mi, i in zip(Ms, self.M))

    def contains_ambient(self, X: Module) -> bool:
        Y = X
        for lvl in self.chain()[1:]:
            if not lvl.contains_parent(Y):
                return False
            Y = lvl.down(Y)
        return True

    def from_ambient(self, X: Module) -> Module:
        Y = X
        for lvl in self.chain()[1:]:
            if not lvl.contains_parent(Y):
                raise WideError("not in subcategory")
            Y = lvl.down(Y)
        return Y

    # -- ambient forms, names and keys ------------------------------------
    def ambient_of(self, tok: Token) -> Module:
        if tok not in self._amb:
            Y = self.catalog.mods[tok[1]] if tok[0] == "M" else indec_projective(self.alg, tok[1])
            self._amb[tok] = self.ambient(Y)
        return self._amb[tok]

    def token_of_ambient(self, X: Module, shifted: bool) -> Token:
        toks = [("P", v) for v in range(self.alg.n)] if shifted else \
            [("M", i) for i in range(len(self.catalog.mods))]
        hits = [t for t in toks if self.ambient_of(t).dims == X.dims and is_isomorphic(self.ambient_of(t), X)]
        if len(hits) != 1:
            raise WideError(f"ambient object {X.dims} matched {len(hits)} objects")
        return hits[0]

    def name_of(self, tok: Token) -> str:
        X = self.ambient_of(tok)
        base = self.root.ambient_name(X)
        return base + "[1]" if tok[0] == "P" else base

    def ambient_name(self, X: Module) -> str:
        cat = self.catalog
        k = cat.index(X) if X.alg is self.alg else None
        if k is not None:
            return cat.mods[k].name
        from .tau import standard_name
        return standard_name(X)

    def token(self, X: Module) -> int:
        """Canonical token of an ambient module: the first-found representative's index."""
        root = self.root
        for k, R in enumerate(root.registry):
            if R.dims == X.dims and is_isomorphic(R, X):
                return k
        root.registry.append(X)
        return len(root.registry) - 1

    def simples(self) -> list[Module]:
        return [self.ambient(simple(self.alg, i)) for i in range(self.alg.n)]

    def key(self) -> tuple[int, ...]:
        if "key" not in self._amb:
            self._amb["key"] = tuple(sorted(self.token(S) for S in self.simples()))
        return self._amb["key"]

    # -- reductions -------------------------------------------------------
    def quotient_level(self, projs: Sequence[int]) -> "WideSubcategory":
        projs = tuple(sorted(set(projs)))
        if not projs:
            return self
        key = ("Q", projs)
        if key not in self._children:
            A = idempotent_quotient(self.alg, projs)
            lvl = WideSubcategory(A, self, "quotient", self.catalog.obj((), projs))
            lvl.catalog  # builds the restricted catalogue
            self._children[key] = lvl
        return self._children[key]

    def module_level(self, mods: Sequence[int]) -> "WideSubcategory":
        mods = tuple(sorted(set(mods)))
        if not mods:
            return self
        key = ("M", mods)
        if key in self._children:
            return self._children[key]
        cat = self.catalog
        U = cat.obj(mods, ())
        B = bongartz(U)
        N = [b for b in B if b not in mods]
        Ms = [cat.mods[i] for i in mods]
        T = [torsion_free(Ms, cat.mods[b]) for b in N]
        for b, Tb in zip(N, T):
            Tb.name = f"f({cat.mods[b].name})"
        gd = GammaData(T, name=f"Gamma[{self.alg.name}|{','.join(cat.mods[i].name for i in mods)}]")
        lvl = WideSubcategory(gd.alg, self, "module", U)
        lvl.gamma, lvl.M, lvl.B, lvl.N = gd, list(mods), list(B), N
        # tau-rigid catalogue of J(M): f_M X for compatible X outside Gen M
        cands = []
        for x in range(len(cat.mods)):
            if x in mods or not all(cat.compatible(("M", x), ("M", m)) for m in mods) \
                    or not cat.self_compatible(("M", x)):
                continue
            X = cat.mods[x]
            if gen_membership(Ms, X):
                continue
            cands.append(gd.G(torsion_free(Ms, X)))
        register_tau_rigid(gd.alg, cands)
        self._children[key] = lvl
        return lvl

    def jasso(self, U: SupportTauRigidObject) -> "WideSubcategory":
        """``J(U)`` for a support tau-rigid object of this level."""
        if U.catalog is not self.catalog:
            raise WideError("object belongs to another category")
        key = ("J", U.mods, U.projs)
        if key in self._children:
            return self._children[key]
        Q = self.quotient_level(U.projs)
        if U.mods:
            cat = self.catalog
            mods = [Q.catalog.index(Q.down(cat.mods[i])) for i in U.mods] if U.projs else list(U.mods)
            if any(m is None for m in mods):
                raise WideError("module part is not supported away from P")
            J = Q.module_level(mods)
        else:
            J = Q
        self._children[key] = J
        return J

    def membership(self, U: SupportTauRigidObject, X: Module) -> bool:
        """``X`` (a module of this level) lies in ``J(U)``."""
        cat = self.catalog
        return all(hom_dim(cat.mods[i], X) == 0 and hom_dim(X, cat.taus[i]) == 0 for i in U.mods) and \
            all(X.dims[v] == 0 for v in U.projs)

    # -- epsilon ------------------------------------------------------------
    def b_m_v(self, mods: Sequence[int], V: Token) -> int:
        """Catalogue index of ``B_M^V`` (for ``V`` in ``Gen M`` or ``V = Q[1]``)."""
        cat = self.catalog
        U = cat.obj(mods, ())
        B = bongartz(U)
        Ms = [cat.mods[i] for i in mods]
        if V[0] == "M":
            X = cat.mods[V[1]]
            if not gen_membership(Ms, X):
                raise WideError("V not in Gen M and not shifted projective")
            mults, _, alpha = minimal_right_approximation(presentation_complex(X),
                                                          [presentation_complex(Mi) for Mi in Ms])
            H = h0_of_cocone(alpha)
            parts = decompose(H).parts
            if len(parts) != 1:
                raise WideError(f"cone gives decomposable module {H.dims}")
            k = cat.index(H)
            gM, gX = [g_vector(Mi) for Mi in Ms], g_vector(X)
            expect = [sum(m * g[c] for m, g in zip(mults, gM)) - gX[c] for c in range(self.alg.n)]
            if k is None or list(g_vector(cat.mods[k])) != expect:
                raise WideError("B_M^V fails the g-vector check")
        else:
            Q = indec_projective(self.alg, V[1])
            mults = minimal_left_module_approximation(Q, [cat.mods[b] for b in B])
            nz = [(b, m) for b, m in zip(B, mults) if m]
            if len(nz) != 1 or nz[0][1] != 1:
                raise WideError("minimal left approximation target is not indecomposable")
            k = nz[0][0]
        if k not in B or k in mods:
            raise WideError("B_M^V is not a summand of the Bongartz complement")
        return k

    def epsilon(self, U: SupportTauRigidObject, V: Token) -> tuple["WideSubcategory", Token]:
        """``epsilon_U(V)`` as an object of ``J(U)``."""
        cat = self.catalog
        if V in U.summands():
            raise WideError("V is a summand of U")
        if not cat.self_compatible(V) or not all(cat.compatible(V, u) for u in U.summands()):
            raise WideError("not jointly rigid")
        lvl = self
        if U.projs:
            Q = self.quotient_level(U.projs)
            if V[0] == "M":
                V = ("M", Q.catalog.index(Q.down(cat.mods[V[1]])))
            else:
                kept = Q.alg.quotient.kept
                V = ("P", kept.index(V[1]))
            mods = [Q.catalog.index(Q.down(cat.mods[i])) for i in U.mods]
            lvl = Q
        else:
            mods = list(U.mods)
        if not mods:
            return lvl, V
        J = lvl.module_level(mods)
        lc = lvl.catalog
        Ms = [lc.mods[i] for i in mods]
        if V[0] == "M" and not gen_membership(Ms, lc.mods[V[1]]):
            Y = J.gamma.G(torsion_free(Ms, lc.mods[V[1]]))
            k = J.catalog.index(Y)
            if k is None:
                raise WideError("f_M V is not tau-rigid in J(M)")
            out = ("M", k)
        else:
            b = lvl.b_m_v(mods, V)
            out = ("P", J.N.index(b))
        if J is not self.jasso(U):
            raise WideError("epsilon landed in an unexpected level")
        return J, out

    def epsilon_inverse(self, U: SupportTauRigidObject, W: Token,
                        level: "WideSubcategory | None" = None) -> Token:
        """The unique ``V`` with ``epsilon_U(V) = W``; ``W`` may live in any level equal to ``J(U)``."""
        J = self.jasso(U)
        if level is not None and level is not J:
            W = transport(W, level, J)
        hits = [V for V in self.catalog.compatible_with(U) if self.epsilon(U, V)[1] == W]
        if not hits:
            raise WideError("no preimage")
        if len(hits) > 1:
            raise WideError("non-unique preimage")
        return hits[0]

    def objects(self) -> list[Token]:
        cat = self.catalog
        return [t for t in cat.objects() if cat.self_compatible(t)]


def transport(tok: Token, src: WideSubcategory, dst: WideSubcategory) -> Token:
    """Move an indecomposable object between two levels describing the same subcategory."""
    if src is dst:
        return tok
    return dst.token_of_ambient(src.ambient_of(tok), tok[0] == "P")


def transport_object(U: SupportTauRigidObject, src: WideSubcategory, dst: WideSubcategory) -> SupportTauRigidObject:
    toks = [transport(t, src, dst) for t in U.summands()]
    return dst.catalog.obj([i for k, i in toks if k == "M"], [i for k, i in toks if k == "P"])


# ---------------------------------------------------------------------------
# convenience front ends

def level_of(alg: Algebra) -> WideSubcategory:
    """The level an algebra was created for (a fresh root otherwise)."""
    return alg._cache.get("wide_level") or WideSubcategory.of(alg)


def jasso_reduction(U: SupportTauRigidObject) -> WideSubcategory:
    return level_of(U.alg).jasso(U)


def j_membership(U: SupportTauRigidObject, X: Module) -> bool:
    return level_of(U.alg).membership(U, X)


def simples_and_key(W: WideSubcategory) -> tuple[list[Module], tuple[int, ...]]:
    return W.simples(), W.key()


def f_inverse(W: WideSubcategory, Y: Module) -> Module:
    return W.ambient(Y)


def epsilon(U: SupportTauRigidObject, V: Token) -> tuple[WideSubcategory, Token]:
    return level_of(U.alg).epsilon(U, V)


def epsilon_inverse(U: SupportTauRigidObject, W: Token) -> Token:
    return level_of(U.alg).epsilon_inverse(U, W)


def w_left(T: SupportTauRigidObject, level: WideSubcategory | None = None) -> WideSubcategory:
    level = level or level_of(T.alg)
    if not T.is_complete():
        raise WideError("w_left needs a support tau-tilting object")
    _, mns = split_projective_split(T)
    return level.jasso(T.catalog.obj(mns, T.projs))


def pd_in_wide(M: Module, W: WideSubcategory, cap: int = 32):
    if not W.contains_ambient(M):
        raise WideError("not in subcategory")
    return pd_capped(W.from_ambient(M), cap)


def ext_in_wide(n: int, M: Module, N: Module, W: WideSubcategory) -> int:
    if not (W.contains_ambient(M) and W.contains_ambient(N)):
        raise WideError("not in subcategory")
    return ext_dim(n, W.from_ambient(M), W.from_ambient(N))


def tau_in_wide(M: Module, W: WideSubcategory) -> Module:
    """``tau_W M`` in ambient form."""
    return W.ambient(tau(W.from_ambient(M)))


def algebra_map_from_generators(src: Algebra, tgt: Algebra, images: Sequence[Sequence[Fraction]]) -> Mat | None:
    """Linear map ``src -> tgt`` extending arrow images multiplicatively; ``None`` if not an algebra map."""
    cols = []
    for k, el in enumerate(src.basis):
        if el.path == ():
            cols.append(tgt.unit_vec(tgt.idem[el.source]) if tgt.n == src.n else
                        [ONE if tgt.is_idempotent(j) else ZERO for j in range(tgt.dim)])
            continue
        v = [ZERO] * tgt.dim
        for c, path in src.exprs[k]:
            w = list(images[path[0]])
            for a in path[1:]:
                w = tgt.mul(images[a], w)
            v = [x + c * y for x, y in zip(v, w)]
        cols.append(v)
    phi = Mat.from_columns(cols, tgt.dim)
    for b in range(src.dim):
        for c in range(src.dim):
            lhs = phi.apply(src.mul(src.unit_vec(b), src.unit_vec(c)))
            rhs = tgt.mul(phi.column(b), phi.column(c))
            if lhs != rhs:
                return None
    return phi


def find_local_isomorphism(gamma: Algebra, R: Algebra, coeffs: Sequence[int] = (-1, 0, 1)) -> Mat | None:
    """Grid search for an algebra isomorphism ``R -> gamma`` between local algebras.

    Arrow images range over small integer combinations of the radical basis of ``gamma``."""
    if gamma.dim != R.dim or gamma.n != 1 or R.n != 1:
        return None
    rad = [k for k in range(gamma.dim) if not gamma.is_idempotent(k)]
    vecs = []
    for combo in itertools.product(coeffs, repeat=len(rad)):
        if any(combo):
            v = [ZERO] * gamma.dim
            for k, c in zip(rad, combo):
                v[k] = Fraction(c)
            vecs.append(v)
    for imgs in itertools.product(vecs, repeat=len(R.arrow_elems)):
        phi = algebra_map_from_generators(R, gamma, imgs)
        if phi is not None and phi.rank() == gamma.dim:
            return phi
    return None
