"""Command-line interface.  Exit codes: 0 pass, 1 findings, 2 malformed input."""

from __future__ import annotations

import argparse
import sys

from . import fixtures
from .io import (
    MalformedInput,
    dumps_lieconst,
    dumps_sl2act,
    format_rational,
    loads_lieconst,
    loads_linmap,
    loads_sl2act,
    parse_rational,
)
from .lie import (
    center,
    derivation_algebra,
    derivation_violations,
    is_ideal,
    lower_central_series,
    matrix_lie_tests,
    quotient,
    type_of,
    verify_jacobi,
)
from .linalg import Subspace

EXIT_OK, EXIT_FINDINGS, EXIT_MALFORMED = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vec(v: dict, labels) -> str:
    return " + ".join(f"{format_rational(c)}*{labels[k]}" for k, c in sorted(v.items())) or "0"


def _fail(msg: str) -> None:
    print(f"FAIL {msg}")


def cmd_free(args) -> int:
    from .free import free_nilpotent

    F = free_nilpotent(args.d, args.t)
    _emit(dumps_lieconst(F.algebra), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    L = loads_lieconst(_read(args.alg))
    if args.what == "jacobi":
        n = L.dim
        bad = verify_jacobi(L)
        print(f"jacobi: {n * (n - 1) * (n - 2) // 6} triples checked, {len(bad)} violations")
        for i, j, k, res in bad:
            _fail(f"jacobi ({i + 1},{j + 1},{k + 1}) [{L.labels[i]},{L.labels[j]},{L.labels[k]}] residual {_vec(res, L.labels)}")
        return EXIT_FINDINGS if bad else EXIT_OK
    if args.other is None:
        raise MalformedInput(f"verify {args.what} needs a second file")
    if args.what == "derivation":
        D = loads_linmap(_read(args.other))
        if D.shape != (L.dim, L.dim):
            raise MalformedInput("map and algebra have different dimensions")
        bad = derivation_violations(L, D)
        print(f"derivation: {len(bad)} violating pairs")
        for i, j, res in bad:
            _fail(f"derivation ({i + 1},{j + 1}) residual {_vec(res, L.labels)}")
        return EXIT_FINDINGS if bad else EXIT_OK
    from .sl2 import is_equivariant_bilinear

    A = loads_sl2act(_read(args.other))
    if A.dim != L.dim:
        raise MalformedInput("action and algebra have different dimensions")
    bad = is_equivariant_bilinear(A, L)
    print(f"equivariance: H, E, F checked on {L.dim * (L.dim - 1) // 2} pairs, {len(bad)} violations")
    for name, i, j, res in bad:
        _fail(f"equivariant {name} ({i + 1},{j + 1}) [{L.labels[i]},{L.labels[j]}] residual {_vec(res, L.labels)}")
    return EXIT_FINDINGS if bad else EXIT_OK


def cmd_der(args) -> int:
    L = loads_lieconst(_read(args.alg))
    basis = derivation_algebra(L)
    print(f"dim Der = {len(basis)}")
    if args.series:
        rep = matrix_lie_tests(basis)
        print(f"derived series dims {tuple(rep.derived_dims)}; solvable {rep.solvable}")
        print(f"lower central series dims {tuple(rep.lcs_dims)}; nilpotent {rep.nilpotent}")
    if args.verbose:
        for n, D in enumerate(basis):
            print(f"D{n + 1}: " + ", ".join(f"({i + 1},{j + 1})={format_rational(c)}" for i, j, c in D.entries()))
    return EXIT_OK


def cmd_lcs(args) -> int:
    L = loads_lieconst(_read(args.alg))
    lcs = lower_central_series(L)
    dims = tuple(s.dim for s in lcs)
    print(f"lcs dims {dims}")
    print(f"type {type_of(L)}")
    print(f"center dim {center(L).dim}")
    if lcs[-1].dim:
        print("not nilpotent")
    else:
        print(f"nilindex {len(lcs) - 1}")
    return EXIT_OK


def cmd_sl2(args) -> int:
    from .sl2 import decompose

    A = loads_sl2act(_read(args.act))
    dec = decompose(A)
    print("weights " + " ".join(map(str, dec.weights())))
    for n, mult, _ in dec.summands:
        print(f"V({n}) x {mult}")
    return EXIT_OK


def cmd_quotient(args) -> int:
    L = loads_lieconst(_read(args.alg))
    M = loads_linmap(_read(args.ideal))
    if M.nrows != L.dim:
        raise MalformedInput("ideal generators live in the wrong dimension")
    I = Subspace(L.dim, (M.column(j) for j in range(M.ncols)))
    if not is_ideal(L, I):
        _fail("the spanned subspace is not an ideal")
        return EXIT_FINDINGS
    Q, _ = quotient(L, I)
    _emit(dumps_lieconst(Q), args.out)
    return EXIT_OK


def cmd_heisenberg_quotient(args) -> int:
    from .levi import heisenberg_quotient

    Q, ev = heisenberg_quotient(args.n)
    n = args.n
    checks = [
        ("dim", Q.dim == 2 * n + 1, f"{Q.dim}"),
        ("center dim", ev.center_dim == 1, f"{ev.center_dim}"),
        ("center = derived", ev.center_is_derived, ""),
        ("form rank", ev.form_rank == 2 * n, f"{ev.form_rank}"),
        ("isomorphic to standard", ev.isomorphic_to_standard, ""),
        ("symplectic maps descend", ev.symplectic_descend, f"{ev.symplectic_dim} basis maps"),
    ]
    print(f"N_{{{2 * n},2}} / I with dim I = {ev.ideal_dim}")
    bad = 0
    for name, ok, info in checks:
        print(f"{'ok  ' if ok else 'FAIL'} {name} {info}".rstrip())
        bad += not ok
    return EXIT_FINDINGS if bad else EXIT_OK


def cmd_table1(args) -> int:
    from .weyl import table1_audit

    lines = table1_audit()
    for ln in lines:
        print(ln)
    bad = [ln for ln in lines if ln.endswith("MISMATCH")]
    for ln in bad:
        _fail(ln)
    return EXIT_FINDINGS if bad else EXIT_OK


def cmd_fixture(args) -> int:
    name, param = args.name, args.param
    needs = {"heisenberg", "filiform"}
    if (name in needs) != (param is not None):
        raise MalformedInput(f"fixture {name} {'needs' if name in needs else 'takes no'} size argument")
    if name == "table2-action":
        _emit(dumps_sl2act(fixtures.table2_action()), args.out)
        return EXIT_OK
    if name == "table2":
        L = fixtures.table2()
        if args.repaired:
            from .repair import repair_equivariant

            L = repair_equivariant(L, fixtures.table2_action()).algebra
    elif name == "dl8":
        L = fixtures.dl8()
    elif name == "l0h1":
        L = fixtures.glued_l0_h1()
    elif name == "heisenberg":
        L = fixtures.heisenberg(param)
    else:
        L = fixtures.standard_filiform(param)
    _emit(dumps_lieconst(L), args.out)
    return EXIT_OK


def cmd_repair(args) -> int:
    from .repair import repair_equivariant

    L = loads_lieconst(_read(args.alg)) if args.alg else fixtures.table2()
    A = loads_sl2act(_read(args.act)) if args.act else fixtures.table2_action()
    if A.dim != L.dim:
        raise MalformedInput("action and algebra have different dimensions")
    try:
        res = repair_equivariant(L, A)
    except ValueError as exc:
        _fail(str(exc))
        return EXIT_FINDINGS
    if res is None:
        print("already equivariant; empty diff")
        return EXIT_OK
    print(f"{len(res.violations_before)} equivariance violations before repair")
    for ln in res.lines():
        print(f"diff {ln}")
    print("after repair: equivariance and Jacobi pass")
    if args.out:
        _emit(dumps_lieconst(res.algebra), args.out)
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    from .levi import GraphQuotientFailure, nonhomogeneous_graph_quotient

    lam = parse_rational(args.lam, "--lambda: ")
    try:
        g = nonhomogeneous_graph_quotient(10, 14, lam=lam, extra_P=[10, 2])
    except GraphQuotientFailure as exc:
        _fail(str(exc))
        for ln in exc.report:
            print(ln)
        return EXIT_FINDINGS
    Q = g.algebra
    lcs = tuple(s.dim for s in lower_central_series(Q))
    print(f"N_{{11,3}} dim {g.free.dim}; ideal dim {g.ideal.subspace.dim}")
    print(f"quotient dim {Q.dim}; type {type_of(Q)}; lcs dims {lcs}")
    print(f"ideal homogeneous: {g.ideal.is_homogeneous}")
    for ln in g.report:
        print(ln)
    if args.out:
        _emit(dumps_lieconst(Q.relabel(Q.labels, name=f"nqc lambda={format_rational(lam)}")), args.out)
    ok = Q.dim == 52 and type_of(Q) == 11 and lcs == (52, 41, 15, 0) and not g.ideal.is_homogeneous
    if not ok:
        _fail("reconstruction does not have the expected shape")
    return EXIT_OK if ok else EXIT_FINDINGS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leviext", description=__doc__)
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; computation is single-threaded and output never depends on it")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("free", help="free nilpotent algebra N_{d,t} on a Hall basis")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_free)

    s = sub.add_parser("verify", help="jacobi ALG | derivation ALG MAP | equivariant ALG ACT")
    s.add_argument("what", choices=["jacobi", "derivation", "equivariant"])
    s.add_argument("alg")
    s.add_argument("other", nargs="?")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("der", help="derivation algebra")
    s.add_argument("alg")
    s.add_argument("--series", action="store_true")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_der)

    s = sub.add_parser("lcs", help="lower central series, type and nilindex")
    s.add_argument("alg")
    s.set_defaults(func=cmd_lcs)

    s = sub.add_parser("sl2", help="sl2 module tools")
    s.add_argument("op", choices=["decompose"])
    s.add_argument("act")
    s.set_defaults(func=cmd_sl2)

    s = sub.add_parser("quotient", help="quotient by the ideal spanned by the columns of a linmap file")
    s.add_argument("alg")
    s.add_argument("ideal")
    s.add_argument("--out")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("heisenberg-quotient", help="h_n as a quotient of N_{2n,2}")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_heisenberg_quotient)

    s = sub.add_parser("table1-audit", help="dimension audit of the module table")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("fixture", help="write a bundled algebra")
    s.add_argument("name", choices=["table2", "table2-action", "dl8", "heisenberg", "filiform", "l0h1"])
    s.add_argument("param", nargs="?", type=int)
    s.add_argument("--repaired", action="store_true", help="table2 only: apply the equivariant repair")
    s.add_argument("--out")
    s.set_defaults(func=cmd_fixture)

    s = sub.add_parser("reconstruct-nqc", help="rebuild a 52-dim non-quasi-cyclic algebra from N_{11,3}")
    s.add_argument("--lambda", dest="lam", default="1")
    s.add_argument("--out")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("repair-equivariant", help="solve for the unique equivariant correction (default: bundled table)")
    s.add_argument("alg", nargs="?")
    s.add_argument("act", nargs="?")
    s.add_argument("--out")
    s.set_defaults(func=cmd_repair)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
