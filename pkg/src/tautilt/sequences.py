"""Signed tau-exceptional sequences, the psi/phi correspondences and induction of sequences."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra
from .homology import ext_dim, pd_capped, AtLeast
from .rep import Module, hom_dim, induction, is_isomorphic
from .tau import Catalog, EnumerationError
from .wide import Token, WideSubcategory, WideError, level_of, transport


@dataclass(frozen=True)
class Entry:
    """An indecomposable support tau-rigid object of a level."""

    level: WideSubcategory
    token: Token

    @property
    def shifted(self) -> bool:
        return self.token[0] == "P"

    def ambient(self) -> Module:
        return self.level.ambient_of(self.token)

    def name(self) -> str:
        return self.level.name_of(self.token)

    def signature(self) -> tuple[str, int]:
        return self.token[0], self.level.root.token(self.ambient())


@dataclass(frozen=True)
class SignedSequence:
    """``(U_1, ..., U_t)``: ``U_t`` lives in the base level, ``U_i`` in ``J`` of ``U_{i+1}`` one level down."""

    entries: tuple[Entry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def chain(self) -> list[WideSubcategory]:
        return [e.level for e in self.entries]

    def names(self) -> tuple[str, ...]:
        return tuple(e.name() for e in self.entries)

    def label(self) -> str:
        return "(" + ", ".join(self.names()) + ")"

    def signature(self) -> tuple:
        return tuple(e.signature() for e in self.entries)

    def is_unsigned(self) -> bool:
        return not any(e.shifted for e in self.entries)

    def validate(self) -> bool:
        """Re-check the certificate chain."""
        for k, e in enumerate(self.entries):
            if not e.level.catalog.self_compatible(e.token):
                return False
            if k + 1 < len(self.entries):
                nxt = self.entries[k + 1]
                if nxt.level.jasso(_single(nxt.level, nxt.token)) is not e.level:
                    return False
        return True


@dataclass(frozen=True)
class OrderedSupportRigid:
    """``(T_1, ..., T_t)`` with basic support tau-rigid direct sum."""

    level: WideSubcategory
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if not self.level.catalog.is_support_tau_rigid(list(self.tokens)):
            raise WideError("ordered object is not basic support tau-rigid")

    def names(self) -> tuple[str, ...]:
        return tuple(self.level.name_of(t) for t in self.tokens)

    def label(self) -> str:
        return "(" + ", ".join(self.names()) + ")"


def _single(level: WideSubcategory, tok: Token):
    return level.catalog.obj([tok[1]] if tok[0] == "M" else [], [tok[1]] if tok[0] == "P" else [])


def _obj(level: WideSubcategory, toks: Sequence[Token]):
    return level.catalog.obj([i for k, i in toks if k == "M"], [i for k, i in toks if k == "P"])


def _base(x: Algebra | WideSubcategory) -> WideSubcategory:
    return x if isinstance(x, WideSubcategory) else level_of(x)


# ---------------------------------------------------------------------------
# enumeration

def enumerate_tau_exceptional(alg: Algebra | WideSubcategory, t: int, signed: bool = True) -> list[SignedSequence]:
    """All (signed) tau-exceptional sequences of length ``t``, in deterministic order."""
    level = _base(alg)
    seqs = _enumerate(level, t)
    if not signed:
        seqs = [s for s in seqs if s.is_unsigned()]
    return seqs


def _enumerate(level: WideSubcategory, t: int) -> list[SignedSequence]:
    if t == 0:
        return [SignedSequence(())]
    if t > level.rank:
        return []
    out = []
    for tok in level.objects():
        J = level.jasso(_single(level, tok))
        for rest in _enumerate(J, t - 1):
            out.append(SignedSequence(rest.entries + (Entry(level, tok),)))
    return out


def ordered_objects(alg: Algebra | WideSubcategory, t: int) -> list[OrderedSupportRigid]:
    level = _base(alg)
    out = []
    for U in level.catalog.cliques():
        if U.size == t:
            for perm in itertools.permutations(U.summands()):
                out.append(OrderedSupportRigid(level, tuple(perm)))
    return out


def classical_exceptional(alg: Algebra, t: int, indecomposables: Sequence[Module] | None = None) -> list[tuple[Module, ...]]:
    """Exceptional sequences by brute force over the indecomposables (Dynkin hereditary input)."""
    if not alg.is_hereditary():
        raise EnumerationError("not hereditary")
    mods = list(indecomposables) if indecomposables is not None else list(Catalog.of(alg).mods)
    exc = [M for M in mods if hom_dim(M, M) == 1 and ext_dim(1, M, M) == 0]

    def orth(Mi: Module, Mj: Module) -> bool:
        if hom_dim(Mi, Mj):
            return False
        p = pd_capped(Mi, 4)
        top = p if not isinstance(p, AtLeast) else 4
        return all(ext_dim(k, Mi, Mj) == 0 for k in range(1, top + 1))

    out = []
    for combo in itertools.product(range(len(exc)), repeat=t):
        if all(orth(exc[combo[i]], exc[combo[j]]) for i in range(t) for j in range(i)):
            out.append(tuple(exc[k] for k in combo))
    return out


# ---------------------------------------------------------------------------
# psi and phi

def psi(ordered: OrderedSupportRigid) -> SignedSequence:
    """``U_t = T_t`` and the rest is psi of the epsilon-images inside ``J(T_t)``."""
    level, toks = ordered.level, ordered.tokens
    if not toks:
        return SignedSequence(())
    last = toks[-1]
    U = _single(level, last)
    J = level.jasso(U)
    images = []
    for T in toks[:-1]:
        lvl, w = level.epsilon(U, T)
        images.append(transport(w, lvl, J))
    head = psi(OrderedSupportRigid(J, tuple(images)))
    return SignedSequence(head.entries + (Entry(level, last),))


def phi(seq: SignedSequence) -> OrderedSupportRigid:
    """Inverse of :func:`psi`, level by level with epsilon inverses."""
    if not seq.entries:
        raise WideError("empty sequence has no base level")
    last = seq.entries[-1]
    level = last.level
    if len(seq.entries) == 1:
        return OrderedSupportRigid(level, (last.token,))
    U = _single(level, last.token)
    inner = phi(SignedSequence(seq.entries[:-1]))
    pre = tuple(level.epsilon_inverse(U, w, inner.level) for w in inner.tokens)
    return OrderedSupportRigid(level, pre + (last.token,))


# ---------------------------------------------------------------------------
# induction

def induce_entry_ambient(e: Entry, lam: Algebra) -> Module:
    return induction(e.ambient(), lam)


def _match(seq_down: SignedSequence, seq_up: SignedSequence, lam: Algebra) -> bool:
    if len(seq_down) != len(seq_up):
        return False
    for a, b in zip(seq_down.entries, seq_up.entries):
        if a.shifted != b.shifted:
            return False
        X, Y = induce_entry_ambient(a, lam), b.ambient()
        if X.dims != Y.dims or not is_isomorphic(X, Y):
            return False
    return True


def induce_sequence(seq: SignedSequence, lam: Algebra, candidates: Sequence[SignedSequence] | None = None
                    ) -> SignedSequence:
    """The upstairs sequence whose entries are the inductions of ``seq``'s entries."""
    if candidates is None:
        candidates = enumerate_tau_exceptional(lam, len(seq), signed=True)
    hits = [s for s in candidates if _match(seq, s, lam)]
    if len(hits) != 1:
        raise WideError(f"induced sequence {seq.label()} matched {len(hits)} upstairs sequences")
    return hits[0]


def induce_ordered(ordered: OrderedSupportRigid, lam: Algebra) -> OrderedSupportRigid:
    """Entrywise induction of an ordered object of the root level."""
    up = level_of(lam)
    toks = []
    for t in ordered.tokens:
        if t[0] == "P":
            toks.append(t)
        else:
            k = up.catalog.index(induction(ordered.level.catalog.mods[t[1]], lam))
            if k is None:
                raise WideError("induced module is not in the upstairs catalogue")
            toks.append(("M", k))
    return OrderedSupportRigid(up, tuple(toks))


def verify_sequence_bijection(kq: Algebra, lam: Algebra, t: int, signed: bool = True) -> dict:
    """Induce every downstairs sequence, match against an independent upstairs enumeration,
    and check the psi-square on ordered objects."""
    down = enumerate_tau_exceptional(kq, t, signed)
    up = enumerate_tau_exceptional(lam, t, signed)
    images = [induce_sequence(s, lam, up) for s in down]
    sigs = [s.signature() for s in images]
    injective = len(set(sigs)) == len(sigs)
    surjective = set(sigs) == {s.signature() for s in up}
    up_all = up if signed else enumerate_tau_exceptional(lam, t, True)
    square = True
    for o in ordered_objects(kq, t):
        a = induce_sequence(psi(o), lam, up_all).signature()
        b = psi(induce_ordered(o, lam)).signature()
        if a != b:
            square = False
    return {
        "length": t,
        "downstairs": len(down),
        "upstairs": len(up),
        "injective": injective,
        "surjective": surjective,
        "psi_square": square,
        "ok": injective and surjective and square and len(down) == len(up),
        "pairs": [(d.label(), u.label()) for d, u in zip(down, images)],
    }
