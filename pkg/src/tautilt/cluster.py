"""The tau-cluster morphism category as a finite concrete category, the induction functor, export."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra, opposite
from .homology import dual_module
from .rep import induction
from .sequences import OrderedSupportRigid, psi
from .tau import Catalog, EnumerationError, SupportTauRigidObject
from .wide import WideError, WideSubcategory, level_of, transport_object, w_left


@dataclass(frozen=True)
class Morphism:
    """``g_U`` out of object ``src``; ``U`` is given by catalogue indices in the source's level."""

    src: int
    tgt: int
    mods: tuple[int, ...]
    projs: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return not self.mods and not self.projs


@dataclass
class ClusterCategory:
    alg: Algebra
    levels: list[WideSubcategory]
    defining: list[SupportTauRigidObject]
    homs: dict[tuple[int, int], list[Morphism]]
    compose_table: dict[tuple[Morphism, Morphism], Morphism] = field(default_factory=dict)

    @property
    def objects(self) -> list[tuple[int, ...]]:
        return [lvl.key() for lvl in self.levels]

    def index_of_key(self, key) -> int:
        return self.objects.index(key)

    def hom(self, a: int, b: int) -> list[Morphism]:
        return self.homs.get((a, b), [])

    def morphisms(self) -> list[Morphism]:
        return [m for k in sorted(self.homs) for m in self.homs[k]]

    def identity(self, a: int) -> Morphism:
        return Morphism(a, a, (), ())

    def source_object(self, g: Morphism) -> SupportTauRigidObject:
        return self.levels[g.src].catalog.obj(g.mods, g.projs)

    def label(self, g: Morphism) -> str:
        lvl = self.levels[g.src]
        names = [lvl.name_of(("M", i)) for i in g.mods] + [lvl.name_of(("P", v)) for v in g.projs]
        return " + ".join(names) or "0"

    def object_label(self, a: int) -> str:
        if a == 0 and self.defining[a].size == 0:
            return f"mod {self.alg.name}"
        if self.levels[a].rank == 0:
            return "0"
        U = self.defining[a]
        root = self.levels[0]
        return "J(" + " + ".join(root.name_of(t) for t in U.summands()) + ")"

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """``g o f`` for ``f: W1 -> W2``, ``g: W2 -> W3``."""
        if f.tgt != g.src:
            raise WideError("morphisms are not composable")
        hit = self.compose_table.get((g, f))
        if hit is not None:
            return hit
        W1 = self.levels[f.src]
        U = self.source_object(f)
        J = W1.jasso(U)
        V = transport_object(self.source_object(g), self.levels[g.src], J)
        pre = [W1.epsilon_inverse(U, w) for w in V.summands()]
        toks = U.summands() + pre
        total = W1.catalog.obj([i for k, i in toks if k == "M"], [i for k, i in toks if k == "P"])
        if total.size != len(toks) or not W1.catalog.is_support_tau_rigid(toks):
            raise WideError("composite is not support tau-rigid")
        out = Morphism(f.src, g.tgt, total.mods, total.projs)
        if W1.jasso(total).key() != self.levels[g.tgt].key():
            raise WideError("composite has the wrong target")
        self.compose_table[(g, f)] = out
        return out

    def composable_pairs(self):
        for f in self.morphisms():
            for g in self.morphisms():
                if g.src == f.tgt:
                    yield g, f

    def check_laws(self) -> dict:
        """Units, associativity on every composable triple, ``Hom(W, W) = {id}``."""
        units = all(self.compose(self.identity(f.tgt), f) == f and self.compose(f, self.identity(f.src)) == f
                    for f in self.morphisms())
        endo = all(self.hom(a, a) == [self.identity(a)] for a in range(len(self.levels)))
        assoc = True
        ms = self.morphisms()
        for f in ms:
            for g in ms:
                if g.src != f.tgt:
                    continue
                gf = self.compose(g, f)
                for h in ms:
                    if h.src != g.tgt:
                        continue
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        assoc = False
        return {"units": units, "endomorphisms": endo, "associativity": assoc,
                "ok": units and endo and assoc}

    def skeleton(self) -> "Skeleton":
        order = export_order(self)
        pos = {a: k for k, a in enumerate(order)}
        objs = tuple((self.object_label(a), self.levels[a].rank, tuple(self.levels[a].key())) for a in order)
        morphs = []
        for a in order:
            for b in order:
                for g in self.hom(a, b):
                    morphs.append((pos[a], pos[b], self.label(g)))
        morphs = tuple(morphs)
        mlist = _morph_keys(self, order)
        mpos = {g: k for k, g in enumerate(mlist)}
        comp = tuple(sorted((mpos[f], mpos[g], mpos[self.compose(g, f)]) for g, f in self.composable_pairs()))
        return Skeleton(objs, morphs, comp)


def _morph_keys(cat: ClusterCategory, order: Sequence[int]) -> list[Morphism]:
    return [g for a in order for b in order for g in cat.hom(a, b)]


def build_category(alg: Algebra | WideSubcategory) -> ClusterCategory:
    """Objects are the distinct ``J(U)``; ``Hom(W1, W2)`` are the ``g_U`` with ``J_{W1}(U) = W2``."""
    root = alg if isinstance(alg, WideSubcategory) else level_of(alg)
    cat = root.catalog
    try:
        cliques = cat.cliques()
    except EnumerationError as exc:
        raise EnumerationError(f"tau-tilting infinite input: {exc}") from exc
    levels: list[WideSubcategory] = []
    defining: list[SupportTauRigidObject] = []
    keys: list = []
    for U in cliques:
        J = root.jasso(U)
        if J.key() not in keys:
            keys.append(J.key())
            levels.append(J)
            defining.append(U)
    homs: dict[tuple[int, int], list[Morphism]] = {}
    for a, W in enumerate(levels):
        for U in W.catalog.cliques():
            b = keys.index(W.jasso(U).key()) if W.jasso(U).key() in keys else None
            if b is None:
                raise WideError("reduction left the set of objects")
            homs.setdefault((a, b), []).append(Morphism(a, b, U.mods, U.projs))
    return ClusterCategory(root.alg, levels, defining, homs)


def factorizations(cat: ClusterCategory, g: Morphism) -> list[tuple[str, ...]]:
    """Factorizations of ``g`` into irreducible morphisms, one per ordering of ``U``'s summands."""
    W = cat.levels[g.src]
    U = cat.source_object(g)
    if not U.summands():
        return [()]
    out = []
    for perm in itertools.permutations(U.summands()):
        out.append(psi(OrderedSupportRigid(W, tuple(perm))).names())
    return out


# ---------------------------------------------------------------------------
# the induction functor

@dataclass
class ClusterFunctor:
    down: ClusterCategory
    up: ClusterCategory
    objects: dict[int, int]
    morphisms: dict[Morphism, Morphism]

    def verify(self) -> dict:
        obj_bij = sorted(self.objects.values()) == list(range(len(self.up.levels))) and \
            len(self.objects) == len(self.down.levels)
        hom_bij = True
        for a in range(len(self.down.levels)):
            for b in range(len(self.down.levels)):
                imgs = [self.morphisms[g] for g in self.down.hom(a, b)]
                target = self.up.hom(self.objects[a], self.objects[b])
                if len(set(imgs)) != len(imgs) or set(imgs) != set(target):
                    hom_bij = False
        ids = all(self.morphisms[self.down.identity(a)] == self.up.identity(self.objects[a])
                  for a in range(len(self.down.levels)))
        functorial = all(self.morphisms[self.down.compose(g, f)] ==
                         self.up.compose(self.morphisms[g], self.morphisms[f])
                         for g, f in self.down.composable_pairs())
        return {"objects": obj_bij, "homs": hom_bij, "identities": ids, "functorial": functorial,
                "ok": obj_bij and hom_bij and ids and functorial}


def _induce_object(U: SupportTauRigidObject, src: WideSubcategory, dst: WideSubcategory, lam: Algebra):
    toks = []
    for t in U.summands():
        X = induction(src.ambient_of(t), lam)
        toks.append(dst.token_of_ambient(X, t[0] == "P"))
    return dst.catalog.obj([i for k, i in toks if k == "M"], [i for k, i in toks if k == "P"])


def build_functor(down: ClusterCategory, up: ClusterCategory) -> ClusterFunctor:
    lam = up.alg
    uroot = up.levels[0].root
    objects = {}
    for a, U in enumerate(down.defining):
        U_up = _induce_object(U, down.levels[0].root, uroot, lam)
        objects[a] = up.index_of_key(uroot.jasso(U_up).key())
    morphisms = {}
    for g in down.morphisms():
        a, b = objects[g.src], objects[g.tgt]
        V = _induce_object(down.source_object(g), down.levels[g.src], up.levels[a], lam)
        morphisms[g] = Morphism(a, b, V.mods, V.projs)
    return ClusterFunctor(down, up, objects, morphisms)


# ---------------------------------------------------------------------------
# wide subcategories three ways

def w_right_keys(alg: Algebra) -> set:
    """Keys of the right finite wide subcategories, as duals of left finite ones over the opposite."""
    root = level_of(alg)
    op = opposite(alg)
    oroot = level_of(op)
    keys = set()
    for T in Catalog.of(op).support_tau_tilting():
        W = w_left(T, oroot)
        keys.add(tuple(sorted(root.token(dual_module(S, alg)) for S in W.simples())))
    return keys


def conjecture_check(alg: Algebra) -> dict:
    root = level_of(alg)
    cat = root.catalog
    j_keys = {root.jasso(U).key() for U in cat.cliques()}
    l_keys = {w_left(T, root).key() for T in cat.support_tau_tilting()}
    r_keys = w_right_keys(alg)
    return {"tau_perpendicular": len(j_keys), "left_finite": len(l_keys), "right_finite": len(r_keys),
            "ok": j_keys == l_keys == r_keys}


# ---------------------------------------------------------------------------
# export

@dataclass(frozen=True)
class Skeleton:
    """Algebra-free description: objects (label, rank, key), morphisms (src, tgt, label), composition triples."""

    objects: tuple
    morphisms: tuple
    composition: tuple


def export_order(cat: ClusterCategory) -> list[int]:
    return sorted(range(len(cat.levels)), key=lambda a: (-cat.levels[a].rank, cat.levels[a].key()))


def export_dot(cat: ClusterCategory) -> str:
    order = export_order(cat)
    pos = {a: k for k, a in enumerate(order)}
    lines = ["digraph cluster_morphisms {", "  rankdir=TB;"]
    for a in order:
        lines.append(f'  n{pos[a]} [shape=box, label="{cat.object_label(a)}"];')
    for a in order:
        for b in order:
            if a == b:
                continue
            for g in cat.hom(a, b):
                if _irreducible(g):
                    lines.append(f'  n{pos[a]} -> n{pos[b]} [label="{cat.label(g)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _irreducible(g: Morphism) -> bool:
    return len(g.mods) + len(g.projs) == 1


def export_structured(cat: ClusterCategory) -> str:
    sk = cat.skeleton()
    data = {
        "objects": [{"label": l, "rank": r, "key": list(k)} for l, r, k in sk.objects],
        "morphisms": [{"src": s, "tgt": t, "label": l} for s, t, l in sk.morphisms],
        "composition": [list(c) for c in sk.composition],
    }
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def parse_structured(text: str) -> Skeleton:
    data = json.loads(text)
    objs = tuple((o["label"], o["rank"], tuple(o["key"])) for o in data["objects"])
    morphs = tuple((m["src"], m["tgt"], m["label"]) for m in data["morphisms"])
    comp = tuple(sorted(tuple(c) for c in data["composition"]))
    return Skeleton(objs, morphs, comp)
