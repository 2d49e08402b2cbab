"""Finite-dimensional basic algebras with an explicit basis and multiplication table.

Conventions used throughout the package:

* A path is a tuple of arrow labels in traversal order; ``("x_1", "a")`` means
  first ``x_1`` and then ``a``.  As an algebra element it is the product
  ``a * x_1`` (composition order), so ``b * c`` is "``c`` then ``b``" and is
  nonzero only when ``source(b) == target(c)``.
* Modules are left modules.  A basis element from vertex ``i`` to ``j`` acts
  as a linear map ``M_i -> M_j``.  The projective ``P(i) = A e_i`` is spanned by
  paths starting at ``i``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import Mat, ONE, ZERO, as_scalar, hstack, kernel_basis, rref, solve


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("vertex labels must be unique")
        labels = [a.label for a in arrows]
        if len(set(labels)) != len(labels) or set(labels) & set(self.vertices):
            raise AlgebraError("arrow labels must be unique and distinct from vertices")
        for a in arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise AlgebraError(f"arrow {a.label} references an undeclared vertex")

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def reversed(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.label, a.target, a.source) for a in self.arrows))

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        ready.append(a.target)
        return seen == len(self.vertices)

    def longest_path(self) -> int:
        if not self.is_acyclic():
            raise AlgebraError("quiver has oriented cycle")
        memo: dict[str, int] = {}

        def depth(v):
            if v not in memo:
                memo[v] = max((1 + depth(a.target) for a in self.arrows if a.source == v), default=0)
            return memo[v]

        return max((depth(v) for v in self.vertices), default=0)


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths, each of length at least two."""

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def __post_init__(self):
        terms = tuple((as_scalar(c), tuple(p)) for c, p in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise AlgebraError("relation needs at least one term")

    @classmethod
    def of(cls, *terms) -> "Relation":
        """``Relation.of((1, "xy"), (-1, "yx"))`` with single-character arrow labels
        or ``Relation.of((1, ("x_1", "a")), ...)`` with explicit tuples."""
        return cls(tuple((c, tuple(p)) for c, p in terms))

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(p))) for c, p in self.terms))


@dataclass(frozen=True)
class BasisElement:
    source: int
    target: int
    name: str
    path: tuple[int, ...] | None = None  # arrow indices, traversal order


@dataclass
class TensorData:
    """How an algebra ``R (x) kQ`` was assembled from its factors."""

    local: "Algebra"
    hereditary: "Algebra"
    loop_of: dict[str, tuple[str, str]]  # loop arrow label -> (loop of R, vertex)


@dataclass
class QuotientData:
    """``A / <e_P>`` for a set of vertices ``P``."""

    parent: "Algebra"
    kept: tuple[int, ...]  # parent vertex index for each vertex of the quotient
    proj: Mat  # quotient coordinates of each parent basis element (dim' x dim)
    section: tuple[int, ...]  # parent basis index representing each quotient basis element


class Algebra:
    """A basic finite-dimensional algebra with a vertex-adapted basis.

    Every basis element lives in some ``e_t A e_s``; the vertex idempotents are
    basis elements and all other basis elements span the radical.  ``arrows``
    are basis elements generating the radical modulo its square; ``exprs``
    writes every basis element as a combination of arrow paths, which is how
    modules are evaluated from arrow matrices.
    """

    def __init__(self, vertices: Sequence[str], basis: Sequence[BasisElement],
                 table: dict[tuple[int, int], dict[int, Fraction]],
                 arrows: Sequence[tuple[str, int]],
                 exprs: Sequence[list[tuple[Fraction, tuple[int, ...]]]],
                 quiver: Quiver | None = None, relations: Sequence[Relation] = (),
                 bound: int | None = None, name: str = ""):
        self.vertices = tuple(vertices)
        self.n = len(self.vertices)
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.table = table
        self.arrow_elems = list(arrows)  # (label, basis index)
        self.exprs = list(exprs)
        self.quiver = quiver
        self.relations = tuple(relations)
        self.bound = bound
        self.name = name
        self.tensor: TensorData | None = None
        self.quotient: QuotientData | None = None
        self.opposite_of: Algebra | None = None
        self._opposite: Algebra | None = None
        self.idem = [-1] * self.n
        for k, b in enumerate(self.basis):
            if b.path == ():
                self.idem[b.source] = k
        if -1 in self.idem:
            raise AlgebraError("basis must contain every vertex idempotent")
        self.by_block: dict[tuple[int, int], list[int]] = {}
        for k, b in enumerate(self.basis):
            self.by_block.setdefault((b.source, b.target), []).append(k)
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Algebra({self.name or '?'}, n={self.n}, dim={self.dim})"

    # -- products -------------------------------------------------------
    def is_idempotent(self, k: int) -> bool:
        return self.basis[k].path == ()

    def mul_basis(self, b: int, c: int) -> dict[int, Fraction]:
        if self.basis[b].source != self.basis[c].target:
            return {}
        if self.is_idempotent(b):
            return {c: ONE}
        if self.is_idempotent(c):
            return {b: ONE}
        return self.table.get((b, c), {})

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
        out = [ZERO] * self.dim
        for b, x in enumerate(u):
            if not x:
                continue
            for c, y in enumerate(v):
                if not y:
                    continue
                for d, z in self.mul_basis(b, c).items():
                    out[d] += x * y * z
        return out

    def unit_vec(self, k: int) -> list[Fraction]:
        v = [ZERO] * self.dim
        v[k] = ONE
        return v

    def left_mult(self, u: Sequence[Fraction]) -> Mat:
        cols = [self.mul(u, self.unit_vec(c)) for c in range(self.dim)]
        return Mat.from_columns(cols, self.dim)

    def block(self, source: int, target: int) -> list[int]:
        """Basis indices of ``e_target A e_source``."""
        return self.by_block.get((source, target), [])

    def is_radical_elem(self, k: int) -> bool:
        return not self.is_idempotent(k)

    def cartan(self) -> list[list[int]]:
        return [[len(self.block(i, j)) for j in range(self.n)] for i in range(self.n)]

    def arrow_index(self, label: str) -> int:
        for k, (lab, _) in enumerate(self.arrow_elems):
            if lab == label:
                return k
        raise KeyError(label)

    def arrow_ends(self, k: int) -> tuple[int, int]:
        b = self.basis[self.arrow_elems[k][1]]
        return b.source, b.target

    def vertex_index(self, label) -> int:
        return self.vertices.index(str(label))

    # -- checks ---------------------------------------------------------
    def check_associative(self, triples: Iterable[tuple[int, int, int]] | None = None) -> bool:
        rng = range(self.dim)
        triples = triples if triples is not None else itertools.product(rng, rng, rng)
        for a, b, c in triples:
            ea, eb, ec = self.unit_vec(a), self.unit_vec(b), self.unit_vec(c)
            if self.mul(self.mul(ea, eb), ec) != self.mul(ea, self.mul(eb, ec)):
                return False
        return True

    def is_commutative(self) -> bool:
        for b in range(self.dim):
            for c in range(self.dim):
                if self.mul_basis(b, c) != self.mul_basis(c, b) and (
                        self.mul(self.unit_vec(b), self.unit_vec(c)) != self.mul(self.unit_vec(c), self.unit_vec(b))):
                    return False
        return True

    def is_local(self) -> bool:
        return self.n == 1

    def radical_dimension(self) -> int:
        return len(trace_form_radical(self))

    def is_hereditary(self) -> bool:
        from .homology import pd_capped
        from .rep import simple
        return all(pd_capped(simple(self, i), 2) <= 1 for i in range(self.n))

    def opposite(self) -> "Algebra":
        return opposite(self)


# ---------------------------------------------------------------------------
# bound quiver algebras

def _path_key(p: tuple[int, ...]):
    return (len(p), p)


def build_algebra(quiver: Quiver, relations: Sequence[Relation], m: int, name: str = "") -> Algebra:
    """``kQ / I`` with a basis of normal-form paths.

    The ideal is closed degree by degree: every relation is multiplied by all
    paths on both sides, terms longer than ``m`` are dropped, and every path of
    length ``m`` must then lie in the closure.
    """
    if m < 2:
        raise AlgebraError("nilpotency bound must be at least 2")
    vidx = {v: i for i, v in enumerate(quiver.vertices)}
    aidx = {a.label: k for k, a in enumerate(quiver.arrows)}
    src = [vidx[a.source] for a in quiver.arrows]
    tgt = [vidx[a.target] for a in quiver.arrows]

    def ends(p):
        return src[p[0]], tgt[p[-1]]

    rels = []
    for r in relations:
        terms = []
        st = None
        for c, path in r.terms:
            if len(path) < 2:
                raise AlgebraError("relation not admissible: every term needs length >= 2")
            try:
                p = tuple(aidx[x] for x in path)
            except KeyError as exc:
                raise AlgebraError(f"unknown arrow {exc.args[0]} in relation") from None
            for x, y in zip(p, p[1:]):
                if tgt[x] != src[y]:
                    raise AlgebraError(f"path {path} is not composable")
            if st is None:
                st = ends(p)
            elif ends(p) != st:
                raise AlgebraError("relation not parallel")
            if c:
                terms.append((c, p))
        if terms:
            rels.append((st, terms))

    # all paths of length 1..m
    by_len: list[list[tuple[int, ...]]] = [[], [(k,) for k in range(len(quiver.arrows))]]
    for L in range(2, m + 1):
        by_len.append([p + (k,) for p in by_len[-1] for k in range(len(quiver.arrows)) if tgt[p[-1]] == src[k]])
    paths_from: dict[int, list[tuple[int, ...]]] = {i: [()] for i in range(len(quiver.vertices))}
    paths_to: dict[int, list[tuple[int, ...]]] = {i: [()] for i in range(len(quiver.vertices))}
    for L in range(1, m + 1):
        for p in by_len[L]:
            s, t = ends(p)
            paths_from[s].append(p)
            paths_to[t].append(p)
    all_paths = sorted((p for L in range(1, m + 1) for p in by_len[L]), key=_path_key, reverse=True)
    col = {p: i for i, p in enumerate(all_paths)}  # column 0 is the largest path

    echelon: dict[int, dict[int, Fraction]] = {}

    def reduce(row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = dict(row)
        while row:
            lead = min(row)
            piv = echelon.get(lead)
            if piv is None:
                return row
            f = row[lead]
            for c, x in piv.items():
                y = row.get(c, ZERO) - f * x
                if y:
                    row[c] = y
                else:
                    row.pop(c, None)
        return row

    def insert(row: dict[int, Fraction]) -> bool:
        row = reduce(row)
        if not row:
            return False
        lead = min(row)
        f = row[lead]
        echelon[lead] = {c: x / f for c, x in row.items()}
        return True

    for (s, t), terms in rels:
        minlen = min(len(p) for _, p in terms)
        for v in paths_to[s]:
            for u in paths_from[t]:
                if len(u) + len(v) + minlen > m:
                    continue
                row: dict[int, Fraction] = {}
                for c, p in terms:
                    q = v + p + u
                    if len(q) <= m:
                        row[col[q]] = row.get(col[q], ZERO) + c
                row = {k: x for k, x in row.items() if x}
                if row:
                    insert(row)
    for p in by_len[m]:
        if insert({col[p]: ONE}):
            raise AlgebraError(f"not admissible at bound {m}: path of length {m} survives the ideal")

    # back-substitute to fully reduced rows
    for lead in sorted(echelon, reverse=True):
        row = echelon[lead]
        for c in sorted(k for k in row if k != lead):
            if c in echelon and c in row:
                f = row[c]
                for cc, x in echelon[c].items():
                    y = row.get(cc, ZERO) - f * x
                    if y:
                        row[cc] = y
                    else:
                        row.pop(cc, None)

    nonpivot = [p for p in all_paths if col[p] not in echelon and len(p) < m]
    normal_paths = sorted(nonpivot, key=_path_key)
    basis: list[BasisElement] = []
    index: dict[tuple, int] = {}
    for i, v in enumerate(quiver.vertices):
        index[("e", i)] = len(basis)
        basis.append(BasisElement(i, i, f"e{v}", ()))
    for p in normal_paths:
        s, t = ends(p)
        index[p] = len(basis)
        basis.append(BasisElement(s, t, ".".join(quiver.arrows[k].label for k in p), p))

    def normal_form(q: tuple[int, ...]) -> dict[int, Fraction]:
        if len(q) >= m:
            return {}
        c = col[q]
        if c not in echelon:
            return {index[q]: ONE}
        out = {}
        for cc, x in echelon[c].items():
            if cc != c:
                out[index[all_paths[cc]]] = -x
        return out

    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for b, eb in enumerate(basis):
        if not eb.path:
            continue
        for c, ec in enumerate(basis):
            if not ec.path or eb.source != ec.target:
                continue
            prod = normal_form(ec.path + eb.path)
            if prod:
                table[(b, c)] = prod

    arrows = []
    for k, a in enumerate(quiver.arrows):
        if (k,) not in index:
            raise AlgebraError(f"arrow {a.label} is zero or redundant modulo the relations")
        arrows.append((a.label, index[(k,)]))
    exprs = [[(ONE, b.path)] for b in basis]
    alg = Algebra(quiver.vertices, basis, table, arrows, exprs, quiver=quiver,
                  relations=relations, bound=m, name=name)
    return alg


def path_algebra(quiver: Quiver, name: str = "") -> Algebra:
    if not quiver.is_acyclic():
        raise AlgebraError("quiver has oriented cycle")
    return build_algebra(quiver, [], max(2, quiver.longest_path() + 1), name=name)


def linear_quiver(n: int) -> Quiver:
    verts = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple(Arrow(chr(ord("a") + i), verts[i], verts[i + 1]) for i in range(n - 1))
    return Quiver(verts, arrows)


# ---------------------------------------------------------------------------
# abstract algebras

def trace_form_radical(alg: Algebra) -> list[list[Fraction]]:
    """Radical as the kernel of ``(a, b) -> tr(L_a L_b)`` (characteristic zero)."""
    L = [alg.left_mult(alg.unit_vec(k)) for k in range(alg.dim)]
    gram = Mat(alg.dim, alg.dim, [[(L[a] @ L[b]).trace() for b in range(alg.dim)] for a in range(alg.dim)])
    return kernel_basis(gram)


def algebra_from_structure_constants(dim: int, idempotents: Sequence[Sequence], table,
                                     name: str = "", vertex_labels: Sequence[str] | None = None) -> Algebra:
    """Wrap an abstract algebra given by structure constants.

    ``table[(i, j)]`` is the product of basis vectors ``i`` and ``j`` as a
    dense or sparse (``{index: coeff}``) vector.  ``idempotents`` are the
    coordinates of a complete set of orthogonal idempotents summing to one.
    The result is re-based so that it is vertex adapted.
    """
    def vec(x):
        if isinstance(x, dict):
            v = [ZERO] * dim
            for k, c in x.items():
                v[k] = as_scalar(c)
            return v
        return [as_scalar(c) for c in x]

    T = {(i, j): vec(table.get((i, j), {})) for i in range(dim) for j in range(dim)}

    def mul(u, v):
        out = [ZERO] * dim
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        for k, z in enumerate(T[(i, j)]):
                            if z:
                                out[k] += x * y * z
        return out

    idems = [vec(e) for e in idempotents]
    one = [sum((e[k] for e in idems), ZERO) for k in range(dim)]
    for k in range(dim):
        ek = [ZERO] * dim
        ek[k] = ONE
        if mul(one, ek) != ek or mul(ek, one) != ek:
            raise AlgebraError("unit mismatch")
    units = [[ONE if i == k else ZERO for i in range(dim)] for k in range(dim)]
    for a in units:
        for b in units:
            ab = mul(a, b)
            for c in units:
                if mul(ab, c) != mul(a, mul(b, c)):
                    raise AlgebraError("not associative")
    for i, e in enumerate(idems):
        for j, f in enumerate(idems):
            if mul(e, f) != (e if i == j else [ZERO] * dim):
                raise AlgebraError("idempotents are not orthogonal")

    n = len(idems)
    # radical via the trace form of the regular representation
    Lmats = [Mat.from_columns([mul(u, w) for w in units], dim) for u in units]
    gram = Mat(dim, dim, [[(Lmats[a] @ Lmats[b]).trace() for b in range(dim)] for a in range(dim)])
    rad = kernel_basis(gram)
    radM = Mat.from_columns(rad, dim) if rad else Mat.zeros(dim, 0)
    if dim - len(rad) != n:
        raise AlgebraError("algebra is not basic with the given idempotents")

    new_basis: list[BasisElement] = []
    vectors: list[list[Fraction]] = []
    labels = list(vertex_labels) if vertex_labels else [str(i + 1) for i in range(n)]
    for i in range(n):
        new_basis.append(BasisElement(i, i, f"e{labels[i]}", ()))
        vectors.append(idems[i])
    for i in range(n):
        for j in range(n):
            # e_j A e_i intersected with the radical
            span = [mul(mul(idems[j], u), idems[i]) for u in units]
            red, piv = rref(Mat.from_columns(span, dim))
            block = [Mat.from_columns(span, dim).column(p) for p in piv]
            if i == j:
                # radical part of the corner algebra: drop the idempotent direction
                blk = Mat.from_columns(block, dim)
                inter = []
                both = hstack([blk, radM]) if rad else blk
                ker = kernel_basis(both)
                inter_vecs = []
                for kv in ker:
                    w = blk.apply(kv[:blk.cols])
                    inter_vecs.append(w)
                if inter_vecs:
                    _, p2 = rref(Mat.from_columns(inter_vecs, dim))
                    inter = [inter_vecs[p] for p in p2]
                if len(inter) != len(block) - 1:
                    raise AlgebraError("corner algebra is not local with residue field k")
                block = inter
            for v in block:
                new_basis.append(BasisElement(i, j, f"b{len(new_basis)}", None))
                vectors.append(v)
    if len(vectors) != dim:
        raise AlgebraError("idempotents do not decompose the algebra")
    P = Mat.from_columns(vectors, dim)
    Pinv = P.inverse()

    def coords(v):
        return Pinv.apply(v)

    table2: dict[tuple[int, int], dict[int, Fraction]] = {}
    for b in range(n, dim):
        for c in range(n, dim):
            if new_basis[b].source != new_basis[c].target:
                continue
            w = coords(mul(vectors[b], vectors[c]))
            d = {k: x for k, x in enumerate(w) if x}
            if d:
                table2[(b, c)] = d
    alg = _finish_abstract(labels, new_basis, table2, name)
    alg._cache["change_of_basis"] = P
    return alg


def _finish_abstract(labels, basis, table, name) -> Algebra:
    """Choose arrows (radical modulo radical squared) and arrow-path expressions."""
    dim = len(basis)
    tmp = Algebra(labels, basis, table, [], [[]] * dim, name=name)
    radidx = [k for k in range(dim) if basis[k].path != ()]
    sq = []
    for b in radidx:
        for c in radidx:
            v = tmp.mul(tmp.unit_vec(b), tmp.unit_vec(c))
            if any(v):
                sq.append(v)
    arrows: list[int] = []
    for (s, t), ks in sorted(tmp.by_block.items()):
        ks = [k for k in ks if basis[k].path != ()]
        if not ks:
            continue
        cur = [list(v) for v in sq if any(v[k] for k in ks)]
        for k in ks:
            trial = cur + [tmp.unit_vec(k)]
            if Mat.from_rows(trial).rank() > (Mat.from_rows(cur).rank() if cur else 0):
                arrows.append(k)
                cur = trial
    arrows.sort()
    # express basis elements via arrow paths
    path_vecs: list[tuple[tuple[int, ...], list[Fraction]]] = []
    frontier = [((a,), tmp.unit_vec(arrows[a])) for a in range(len(arrows))]
    while frontier:
        path_vecs.extend(frontier)
        nxt = []
        for p, v in frontier:
            for a in range(len(arrows)):
                w = tmp.mul(tmp.unit_vec(arrows[a]), v)
                if any(w):
                    nxt.append((p + (a,), w))
        frontier = nxt
        if len(path_vecs) > 20000:
            raise AlgebraError("radical is not nilpotent")
    exprs: list[list[tuple[Fraction, tuple[int, ...]]]] = []
    if path_vecs:
        PV = Mat.from_columns([v for _, v in path_vecs], dim)
    for k in range(dim):
        if basis[k].path == ():
            exprs.append([(ONE, ())])
            continue
        x = solve(PV, Mat.from_columns([tmp.unit_vec(k)], dim))
        if x is None:
            raise AlgebraError("arrows do not generate the radical")
        exprs.append([(c, path_vecs[i][0]) for i, c in enumerate(x.column(0)) if c])
    arrow_list = [(f"g{k}", arrows[k]) for k in range(len(arrows))]
    quiver = Quiver(tuple(labels), tuple(Arrow(lab, labels[basis[b].source], labels[basis[b].target])
                                         for lab, b in arrow_list))
    alg = Algebra(labels, basis, table, arrow_list, exprs, quiver=quiver, name=name)
    return alg


def opposite(alg: Algebra) -> Algebra:
    """Same basis with reversed arrows and the transposed multiplication table."""
    if alg._opposite is not None:
        return alg._opposite
    basis = [BasisElement(b.target, b.source, b.name,
                          None if b.path is None else tuple(reversed(b.path)))
             for b in alg.basis]
    table = {(c, b): v for (b, c), v in alg.table.items()}
    exprs = [[(c, tuple(reversed(p))) for c, p in e] for e in alg.exprs]
    quiver = alg.quiver.reversed() if alg.quiver is not None else None
    rels = tuple(r.reversed() for r in alg.relations)
    op = Algebra(alg.vertices, basis, table, list(alg.arrow_elems), exprs, quiver=quiver,
                 relations=rels, bound=alg.bound, name=f"{alg.name}^op")
    op._opposite = alg
    op.opposite_of = alg
    alg._opposite = op
    if alg.tensor is not None:
        op.tensor = TensorData(opposite(alg.tensor.local), opposite(alg.tensor.hereditary),
                               dict(alg.tensor.loop_of))
    return op


def idempotent_quotient(alg: Algebra, removed: Iterable[int]) -> Algebra:
    """``A / <sum of e_i for i in removed>`` on a subset of the original basis."""
    removed = sorted(set(removed))
    key = ("quot", tuple(removed))
    if key in alg._cache:
        return alg._cache[key]
    if not removed:
        return alg
    ideal = []
    for r in removed:
        e = alg.idem[r]
        for b in range(alg.dim):
            be = alg.mul(alg.unit_vec(b), alg.unit_vec(e))
            if not any(be):
                continue
            for c in range(alg.dim):
                v = alg.mul(be, alg.unit_vec(c))
                if any(v):
                    ideal.append(v)
    if ideal:
        red, piv = rref(Mat.from_columns(ideal, alg.dim))
        I = Mat.from_columns([ideal[p] for p in piv], alg.dim)
    else:
        I = Mat.zeros(alg.dim, 0)
    kept = [i for i in range(alg.n) if i not in removed]
    # prefer idempotents, then the basis in order
    order = [alg.idem[i] for i in kept] + [k for k in range(alg.dim) if not alg.is_idempotent(k)]
    chosen = []
    cur = I
    for k in order:
        trial = hstack([cur, Mat.from_columns([alg.unit_vec(k)], alg.dim)])
        if trial.rank() > cur.rank():
            chosen.append(k)
            cur = trial
    full = hstack([I, Mat.from_columns([alg.unit_vec(k) for k in chosen], alg.dim)])
    inv = full.inverse()
    proj = inv.submatrix(range(I.cols, I.cols + len(chosen)), range(alg.dim))
    newv = {old: new for new, old in enumerate(kept)}
    basis = []
    for k in chosen:
        b = alg.basis[k]
        basis.append(BasisElement(newv[b.source], newv[b.target], b.name, b.path))
    table = {}
    for bi, b in enumerate(chosen):
        for ci, c in enumerate(chosen):
            if alg.is_idempotent(b) or alg.is_idempotent(c):
                continue
            w = proj.apply(alg.mul(alg.unit_vec(b), alg.unit_vec(c)))
            d = {k: x for k, x in enumerate(w) if x}
            if d:
                table[(bi, ci)] = d
    labels = [alg.vertices[i] for i in kept]
    quo = _finish_abstract(labels, [BasisElement(b.source, b.target, b.name, () if b.path == () else None)
                                    for b in basis], table, f"{alg.name}/<{','.join(alg.vertices[r] for r in removed)}>")
    quo.quotient = QuotientData(alg, tuple(kept), proj, tuple(chosen))
    alg._cache[key] = quo
    return quo


# ---------------------------------------------------------------------------
# tensor construction

def tensor_construction(local: Algebra, quiver: Quiver, name: str = "") -> Algebra:
    """``R (x) kQ`` as a bound quiver algebra.

    Each vertex gets a copy of every loop of ``R`` (labelled ``x_v``), ``R``'s
    relations are repeated at each vertex, and loops commute with arrows.
    """
    if local.n != 1 or local.quiver is None:
        raise AlgebraError("local factor must be a one-vertex bound quiver algebra")
    if not quiver.is_acyclic():
        raise AlgebraError("quiver has oriented cycle")
    loops = [a.label for a in local.quiver.arrows]
    arrows = list(quiver.arrows)
    loop_of = {}
    for v in quiver.vertices:
        for x in loops:
            lab = f"{x}_{v}"
            loop_of[lab] = (x, v)
            arrows.append(Arrow(lab, v, v))
    rels = []
    for v in quiver.vertices:
        for r in local.relations:
            rels.append(Relation(tuple((c, tuple(f"{x}_{v}" for x in p)) for c, p in r.terms)))
    for a in quiver.arrows:
        for x in loops:
            rels.append(Relation(((ONE, (f"{x}_{a.source}", a.label)), (-ONE, (a.label, f"{x}_{a.target}")))))
    L = quiver.longest_path()
    bound = (local.bound or 2) + L
    big = build_algebra(Quiver(quiver.vertices, tuple(arrows)), rels, bound, name=name)
    kq = path_algebra(quiver, name="kQ")
    if big.dim != local.dim * kq.dim:
        raise AlgebraError(f"tensor dimension {big.dim} != {local.dim} * {kq.dim}")
    big.tensor = TensorData(local, kq, loop_of)
    return big


def quotient_to_hereditary(lam: Algebra) -> Mat:
    """Matrix of ``Lambda -> kQ`` killing every loop (kQ coordinates x Lambda coordinates)."""
    td = lam.tensor
    kq = td.hereditary
    proj = Mat.zeros(kq.dim, lam.dim)
    kq_index = {b.path and tuple(kq.quiver.arrows[k].label for k in b.path): i
                for i, b in enumerate(kq.basis) if b.path}
    for i, b in enumerate(lam.basis):
        if b.path == ():
            proj.data[kq.idem[b.source]][i] = ONE
            continue
        labels = tuple(lam.quiver.arrows[k].label for k in b.path)
        if any(l in td.loop_of for l in labels):
            continue
        proj.data[kq_index[labels]][i] = ONE
    return proj


# ---------------------------------------------------------------------------
# Dynkin classification

POSITIVE_ROOTS = {"A": lambda n: n * (n + 1) // 2, "D": lambda n: n * (n - 1),
                  "E": lambda n: {6: 36, 7: 63, 8: 120}[n]}


def is_dynkin(quiver: Quiver) -> list[str] | None:
    """Dynkin type of each connected component, or ``None`` if some component is not Dynkin."""
    if not quiver.is_acyclic():
        raise AlgebraError("quiver has oriented cycle")
    adj: dict[str, list[str]] = {v: [] for v in quiver.vertices}
    edges = set()
    for a in quiver.arrows:
        e = frozenset((a.source, a.target))
        if e in edges or len(e) == 1:
            return None
        edges.add(e)
        adj[a.source].append(a.target)
        adj[a.target].append(a.source)
    seen: set[str] = set()
    types = []
    for v0 in quiver.vertices:
        if v0 in seen:
            continue
        comp = []
        stack = [v0]
        seen.add(v0)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        nedges = sum(len(adj[v]) for v in comp) // 2
        if nedges != len(comp) - 1:
            return None
        n = len(comp)
        branch = [v for v in comp if len(adj[v]) >= 3]
        if any(len(adj[v]) > 3 for v in comp) or len(branch) > 1:
            return None
        if not branch:
            types.append(f"A{n}")
            continue
        c = branch[0]
        arms = []
        for w in adj[c]:
            length, prev, cur = 1, c, w
            while len(adj[cur]) == 2:
                prev, cur = cur, next(x for x in adj[cur] if x != prev)
                length += 1
            arms.append(length)
        p, q, r = sorted(arms)
        if p == 1 and q == 1:
            types.append(f"D{n}")
        elif (p, q) == (1, 2) and r in (2, 3, 4):
            types.append(f"E{n}")
        else:
            return None
    return types


def positive_root_count(types: Sequence[str]) -> int:
    return sum(POSITIVE_ROOTS[t[0]](int(t[1:])) for t in types)
