"""Command-line front end.

    tautilt [--algebra A] [--format table|json|dot] [--seed N] [--pd-cap N] COMMAND ...

Exit codes: 0 pass, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable

from .algebra import AlgebraError
from .homology import AtLeast, g_vector, nu, pd_capped, tau
from .rep import induction, is_isomorphic, simple
from .specfile import FIXTURES, SpecError, resolve
from .tau import Catalog, CompletionError, EnumerationError, bongartz, co_bongartz


def _dims(d) -> str:
    return "(" + ",".join(str(x) for x in d) + ")"


def _pd(p) -> str:
    return str(p) if not isinstance(p, AtLeast) else f">={p.cap}"


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[k]) for r in cells]) for k, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
           "  ".join("-" * w for w in widths)]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(out)


class Report:
    """Collects rows and named checks; renders table or JSON deterministically."""

    def __init__(self, title: str):
        self.title = title
        self.sections: list[tuple[str, list[str], list[list]]] = []
        self.checks: list[tuple[str, bool, str]] = []
        self.data: dict = {}

    def section(self, name: str, headers: list[str], rows: list[list]) -> None:
        self.sections.append((name, headers, rows))

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((name, bool(ok), detail))
        return ok

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            payload = {"title": self.title, **self.data,
                       "sections": {n: [dict(zip(h, map(str, r))) for r in rows] for n, h, rows in self.sections},
                       "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
                       "status": "PASS" if self.ok else "FAIL"}
            return json.dumps(payload, indent=1, sort_keys=True)
        parts = [self.title]
        for name, headers, rows in self.sections:
            parts.append(f"\n{name}\n" + _table(headers, rows))
        if self.checks:
            parts.append("")
            parts += [f"{'PASS' if ok else 'FAIL'}  {n}" + (f"  [{d}]" if d else "") for n, ok, d in self.checks]
            parts.append(f"\nstatus: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(parts)


# ---------------------------------------------------------------------------
# commands

def cmd_algebra_check(args, alg) -> Report:
    r = Report(f"algebra {alg.name or '(unnamed)'}")
    pds = [pd_capped(simple(alg, i), args.pd_cap) for i in range(alg.n)]
    r.section("invariants", ["property", "value"], [
        ["vertices", alg.n], ["dimension", alg.dim], ["cartan", alg.cartan()],
        ["nilpotency bound", alg.bound], ["local", alg.is_local()], ["commutative", alg.is_commutative()],
        ["pd of simples", " ".join(_pd(p) for p in pds)],
        ["hereditary", all(not isinstance(p, AtLeast) and p <= 1 for p in pds)],
    ])
    r.check("associative", alg.check_associative())
    r.check("dimension = sum of cartan entries", sum(map(sum, alg.cartan())) == alg.dim)
    if alg.tensor is not None:
        r.check("dim = dim R * dim kQ", alg.dim == alg.tensor.local.dim * alg.tensor.hereditary.dim)
    return r


def cmd_tau_list(args, alg) -> Report:
    cat = Catalog.of(alg)
    r = Report(f"indecomposable tau-rigid modules of {alg.name}: {len(cat.mods)}")
    r.section("modules", ["name", "dims", "g-vector", "tau dims"],
              [[M.name, _dims(M.dims), _dims(g_vector(M)), _dims(t.dims)] for M, t in zip(cat.mods, cat.taus)])
    r.data["count"] = len(cat.mods)
    return r


def cmd_stt_list(args, alg) -> Report:
    cat = Catalog.of(alg)
    objs = cat.support_tau_tilting()
    r = Report(f"support tau-tilting objects of {alg.name}: {len(objs)}")
    r.section("objects", ["object", "g-vectors"],
              [[T.label(), " ".join(_dims(g) for g in T.g_vectors())] for T in objs])
    r.data["count"] = len(objs)
    return r


def cmd_bongartz(args, alg) -> Report:
    cat = Catalog.of(alg)
    r = Report(f"Bongartz and co-Bongartz completions over {alg.name}")
    rows = []
    for i, M in enumerate(cat.mods):
        U = cat.obj([i])
        B = bongartz(U)
        C, Q = co_bongartz(U)
        co = cat.obj(list(C) + [i], Q)
        rows.append([M.name, cat.obj(B).label(), co.label()])
        r.check(f"{M.name}: Bongartz completion is support tau-tilting", cat.obj(B).is_complete())
    r.section("completions", ["M", "Bongartz", "co-Bongartz"], rows)
    return r


def cmd_perp(args, alg) -> Report:
    from .wide import level_of
    L = level_of(alg)
    cat = L.catalog
    r = Report(f"tau-perpendicular subcategories J(U) over {alg.name} (U indecomposable)")
    rows = []
    for tok in L.objects():
        U = cat.obj([tok[1]] if tok[0] == "M" else [], [tok[1]] if tok[0] == "P" else [])
        J = L.jasso(U)
        G = J.alg
        rows.append([cat.name_of(tok), G.dim, G.is_local(), G.is_commutative(),
                     " ".join(_dims(S.dims) for S in J.simples()),
                     " ".join(J.name_of(t) for t in J.objects())])
        r.check(f"J({cat.name_of(tok)}) has n-1 simples", len(J.simples()) == alg.n - 1)
    r.section("reductions", ["U", "dim Gamma", "local", "commutative", "simples", "objects"], rows)
    return r


def cmd_seq_list(args, alg) -> Report:
    from .sequences import enumerate_tau_exceptional
    t = args.length if args.length is not None else alg.n
    if t < 0:
        raise SpecError("--length must be non-negative")
    seqs = enumerate_tau_exceptional(alg, t, signed=args.signed)
    kind = "signed tau-exceptional" if args.signed else "tau-exceptional"
    r = Report(f"{kind} sequences of length {t} over {alg.name}: {len(seqs)}")
    r.section("sequences", ["#", "sequence", "dims"],
              [[k + 1, s.label(), " ".join(_dims(e.ambient().dims) + ("[1]" if e.shifted else "")
                                          for e in s.entries)] for k, s in enumerate(seqs)])
    r.data["count"] = len(seqs)
    return r


def cmd_cluster_build(args, alg):
    from .cluster import build_category, export_dot, export_structured
    C = build_category(alg)
    if args.dot or args.format == "dot":
        return export_dot(C)
    if args.format == "json":
        return export_structured(C)
    r = Report(f"tau-cluster morphism category of {alg.name}: {len(C.levels)} objects")
    from .cluster import export_order
    order = export_order(C)
    r.section("objects", ["object", "rank"], [[C.object_label(a), C.levels[a].rank] for a in order])
    r.section("morphisms", ["from", "to", "count", "labels"],
              [[C.object_label(a), C.object_label(b), len(C.hom(a, b)), "; ".join(C.label(g) for g in C.hom(a, b))]
               for a in order for b in order if C.hom(a, b)])
    laws = C.check_laws()
    r.check("category laws", laws["ok"], ", ".join(k for k, v in laws.items() if k != "ok" and not v))
    return r


def _tensor_parts(alg):
    if alg.tensor is None:
        raise SpecError("this command needs a tensor algebra ({local, quiver} spec or a tensor fixture)")
    return alg.tensor.hereditary, alg


def verify_bijections(lam, report: Report, seed: int = 0) -> Report:
    """Induction bijections kQ -> Lambda: tau-rigid modules, support tau-tilting objects, g-vectors,
    completions, epsilon, sequences and the cluster morphism categories."""
    from .cluster import build_category, build_functor
    from .sequences import verify_sequence_bijection
    from .wide import level_of
    kq = lam.tensor.hereditary
    dc, uc = Catalog.of(kq), Catalog.of(lam)
    ind = [uc.index(induction(X, lam)) for X in dc.mods]
    report.check("tau-rigid: induction is a bijection", None not in ind and sorted(ind) == list(range(len(uc.mods))),
                 f"{len(dc.mods)} -> {len(uc.mods)}")
    report.check("tau commutes with induction",
                 all(is_isomorphic(tau(induction(X, lam)), induction(tau(X), lam)) for X in dc.mods))
    report.check("Nakayama functor commutes with induction",
                 all(is_isomorphic(nu(induction(X, lam)), induction(nu(X), lam)) for X in dc.mods))
    report.check("g-vectors preserved", all(g_vector(induction(X, lam)) == g_vector(X) for X in dc.mods))

    def lift(T):
        return uc.obj([ind[i] for i in T.mods], T.projs)

    down_stt = dc.support_tau_tilting()
    up_stt = {(T.mods, T.projs) for T in uc.support_tau_tilting()}
    lifted = {(lift(T).mods, lift(T).projs) for T in down_stt}
    report.check("support tau-tilting: induction is a bijection", lifted == up_stt and len(lifted) == len(down_stt),
                 f"{len(down_stt)} -> {len(up_stt)}")
    ok_b = all(sorted(ind[j] for j in bongartz(dc.obj([i]))) == sorted(bongartz(uc.obj([ind[i]])))
               for i in range(len(dc.mods)))
    report.check("Bongartz completion commutes with induction", ok_b)
    ok_c = True
    for i in range(len(dc.mods)):
        C, Q = co_bongartz(dc.obj([i]))
        C2, Q2 = co_bongartz(uc.obj([ind[i]]))
        ok_c &= sorted(ind[j] for j in C) == sorted(C2) and sorted(Q) == sorted(Q2)
    report.check("co-Bongartz complement commutes with induction", ok_c)
    Ld, Lu = level_of(kq), level_of(lam)
    ok_e = True
    for U in dc.cliques():
        if U.size != 1:
            continue
        for V in dc.compatible_with(U):
            Jd, wd = Ld.epsilon(U, V)
            Vu = ("M", ind[V[1]]) if V[0] == "M" else V
            Ju, wu = Lu.epsilon(lift(U), Vu)
            X = induction(Jd.ambient_of(wd), lam)
            Y = Ju.ambient_of(wu)
            ok_e &= wd[0] == wu[0] and X.dims == Y.dims and is_isomorphic(X, Y)
    report.check("epsilon commutes with induction", ok_e)
    seq = verify_sequence_bijection(kq, lam, kq.n, signed=True)
    report.check("signed tau-exceptional sequences: induction is a bijection", seq["ok"],
                 f"{seq['downstairs']} -> {seq['upstairs']}")
    F = build_functor(build_category(kq), build_category(lam))
    v = F.verify()
    report.check("cluster morphism categories: F is an equivalence", v["ok"],
                 ", ".join(k for k, x in v.items() if k != "ok" and not x))
    return report


def cmd_verify_bijections(args, alg) -> Report:
    _tensor_parts(alg)
    return verify_bijections(alg, Report(f"induction bijections {alg.tensor.hereditary.name} -> {alg.name}"),
                             args.seed)


def cmd_verify_paper_example(args, alg) -> Report:
    """The worked example: R = k[x,y]/(x^2, y^2, xy - yx), Lambda = R (x) kA2."""
    from .cluster import build_category, conjecture_check
    from .sequences import enumerate_tau_exceptional
    from .wide import level_of, find_local_isomorphism
    from .specfile import fixture
    lam = alg if args.algebra_given else fixture("example-7")
    kq = lam.tensor.hereditary if lam.tensor is not None else None
    r = Report(f"worked example over {lam.name}")
    cat = Catalog.of(lam)
    r.check("3 indecomposable tau-rigid modules", len(cat.mods) == 3, f"{len(cat.mods)}")
    r.check("dims (4,0), (4,4), (0,4)", sorted(M.dims for M in cat.mods) == sorted([(4, 0), (4, 4), (0, 4)]))
    stt = cat.support_tau_tilting()
    r.check("5 support tau-tilting objects", len(stt) == 5, f"{len(stt)}")
    seqs = enumerate_tau_exceptional(lam, 2, signed=True)
    r.check("10 signed tau-exceptional sequences", len(seqs) == 10, f"{len(seqs)}")
    C = build_category(lam)
    r.check("5 objects in the cluster morphism category", len(C.levels) == 5, f"{len(C.levels)}")
    L = level_of(lam)
    R = lam.tensor.local if lam.tensor is not None else None
    for i, M in enumerate(cat.mods):
        J = L.jasso(cat.obj([i]))
        G = J.alg
        iso = find_local_isomorphism(G, R) if R is not None else None
        r.check(f"Gamma for {M.name}: dim 4, local, commutative, isomorphic to R",
                G.dim == 4 and G.is_local() and G.is_commutative() and iso is not None)
    # round trip of the equivalence on random small modules
    rng = random.Random(args.seed)
    J = L.jasso(cat.obj([0]))
    from .homology import random_module
    ok = True
    for _ in range(5):
        Y = random_module(J.alg, rng, max_dim=2)
        ok &= is_isomorphic(J.down(J.up(Y)), Y)
    r.check("G(F(Y)) = Y on random modules", ok)
    r.check("tau-perpendicular, left and right finite wide subcategories coincide", conjecture_check(lam)["ok"])
    if kq is not None:
        verify_bijections(lam, r, args.seed)
    r.section("counts", ["quantity", "value"], [["tau-rigid", len(cat.mods)], ["support tau-tilting", len(stt)],
                                                ["signed sequences", len(seqs)], ["objects", len(C.levels)]])
    r.data["counts"] = [len(cat.mods), len(stt), len(seqs), len(C.levels)]
    return r


COMMANDS: dict[tuple[str, str], Callable] = {
    ("algebra", "check"): cmd_algebra_check,
    ("tau", "list"): cmd_tau_list,
    ("stt", "list"): cmd_stt_list,
    ("bongartz", ""): cmd_bongartz,
    ("perp", ""): cmd_perp,
    ("seq", "list"): cmd_seq_list,
    ("cluster", "build"): cmd_cluster_build,
    ("verify", "paper-example"): cmd_verify_paper_example,
    ("verify", "bijections"): cmd_verify_bijections,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tautilt", description="tau-tilting computations for bound quiver algebras")
    p.add_argument("--algebra", default=None,
                   help=f"fixture name ({', '.join(FIXTURES)}) or path to a JSON spec (default a2)")
    p.add_argument("--format", choices=["table", "json", "dot"], default="table")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pd-cap", type=int, default=16)
    p.add_argument("--signed", action="store_true", help="signed sequences (seq list)")
    p.add_argument("--length", type=int, default=None, help="sequence length (seq list; default n)")
    p.add_argument("--dot", action="store_true", help="DOT output (cluster build)")
    p.add_argument("command", choices=sorted({c for c, _ in COMMANDS}))
    p.add_argument("sub", nargs="?", default="")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    key = (args.command, args.sub)
    if key not in COMMANDS:
        subs = sorted(s for c, s in COMMANDS if c == args.command)
        print(f"error: '{args.command}' expects one of: {', '.join(subs)}", file=sys.stderr)
        return 2
    if args.pd_cap < 1:
        print("error: --pd-cap must be positive", file=sys.stderr)
        return 2
    args.algebra_given = args.algebra is not None
    try:
        default = "example-7" if args.command == "verify" else "a2"
        alg = resolve(args.algebra or default)
    except (SpecError, AlgebraError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    try:
        out = COMMANDS[key](args, alg)
    except SpecError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (EnumerationError, CompletionError, AssertionError) as exc:
        print(f"verification failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, str):
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
        return 0
    fmt = "table" if args.format == "dot" else args.format
    print(out.render(fmt))
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
