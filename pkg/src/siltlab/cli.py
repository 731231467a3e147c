"""``silt-lab``: command-line access to the silting, braid and orbit computations.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .braid import (
    WellDefinednessError,
    diagram_strands,
    format_word,
    normal_form,
    parse_word,
    section_algebra,
    section_to_braid,
    section_to_silting,
)
from .derived import DerivedObject, a2_object, objects_in_window
from .modules import knit_ar_quiver
from .orbit import (
    OrbitError,
    OrbitFunctor,
    amiot_map_check,
    build_orbit,
    enumerate_ctilt,
    exchange_graph,
    exchange_graph_dot,
)
from .quiver import QuiverA, Section
from .silting import (
    MutationError,
    NotSiltingError,
    SiltingCandidate,
    enumerate_interval,
    hasse,
    is_d_silting,
    is_silting,
    mutate,
    projective_silting,
    silting_from_pool,
)
from .verify import UnknownSuite, run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _quiver(text: str) -> QuiverA:
    try:
        return QuiverA.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


_OBJ = re.compile(r"(\d+):(\d+)(?:@(-?\d+))?")


def parse_object(Q: QuiverA, token: str) -> DerivedObject:
    """``lo:hi`` or ``lo:hi@shift``; on A_2 a bare integer is a chart label."""
    token = token.strip()
    m = _OBJ.fullmatch(token)
    if m:
        lo, hi, s = int(m.group(1)), int(m.group(2)), int(m.group(3) or 0)
        if not 1 <= lo <= hi <= Q.n:
            raise UsageError(f"interval {lo}:{hi} does not fit {Q}")
        return DerivedObject(lo, hi, s)
    if re.fullmatch(r"-?\d+", token):
        if Q.n != 2:
            raise UsageError("integer labels are only available on A_2")
        return a2_object(Q, int(token))
    raise UsageError(f"cannot read object {token!r}; use lo:hi[@shift] or an A_2 label")


def parse_candidate(Q: QuiverA, text: str | None) -> SiltingCandidate:
    if text is None or text.strip() in ("", "proj", "A"):
        return projective_silting(Q)
    return SiltingCandidate.of(parse_object(Q, t) for t in re.split(r"[\s,+]+", text.strip()) if t)


def _emit(args, payload, text: str, dot: str | None = None) -> None:
    if getattr(args, "dot", False):
        if dot is None:
            raise UsageError("this command has no DOT output")
        print(dot)
    elif getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _name(Q: QuiverA, P) -> str:
    if Q.n == 2:
        return " + ".join(str(i) for i in P.labels(Q))
    return str(P)


# -- subcommands ------------------------------------------------------------

def cmd_ar_quiver(args) -> int:
    Q = _quiver(args.quiver)
    ar = knit_ar_quiver(Q)
    payload = {
        "quiver": Q.to_json(),
        "vertices": [dict(M.to_json(), coords=list(ar.coords[M])) for M in ar.vertices],
        "arrows": [[a.to_json(), b.to_json()] for a, b in ar.arrows],
        "tau": [[X.to_json(), Y.to_json()] for X, Y in sorted(ar.translate.items())],
    }
    lines = [f"AR quiver of {Q}: {len(ar.vertices)} modules"]
    for M in ar.vertices:
        t = ar.tau(M)
        lines.append(f"  {M}  at {ar.coords[M]}" + (f"  tau = {t}" if t else "  projective"))
    _emit(args, payload, "\n".join(lines), ar.to_dot())
    return EXIT_OK


def cmd_silt_interval(args) -> int:
    Q = _quiver(args.quiver)
    A = parse_candidate(Q, args.top)
    nodes = enumerate_interval(Q, A, args.n)
    payload = {"quiver": Q.to_json(), "top": A.to_json(Q), "n": args.n, "silting": [P.to_json(Q) for P in nodes]}
    text = "\n".join([f"{len(nodes)} silting objects in [A[{args.n}], A], A = {_name(Q, A)}"]
                     + [f"  {_name(Q, P)}" for P in nodes])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_hasse(args) -> int:
    Q = _quiver(args.quiver)
    A = parse_candidate(Q, args.top)
    H = hasse(Q, enumerate_interval(Q, A, args.n))
    text = "\n".join([f"{len(H.nodes)} nodes, {len(H.arrows)} arrows"]
                     + [f"  {_name(Q, T)} -> {_name(Q, R)}" for T, R in H.covers()])
    _emit(args, H.to_json(Q), text, H.to_dot(Q, top=A))
    return EXIT_OK


def cmd_d_silting(args) -> int:
    Q = _quiver(args.quiver)
    if args.labels is not None:
        if Q.n != 2:
            raise UsageError("--labels needs an A_2 quiver")
        lo, hi = args.labels
        pool = [a2_object(Q, i) for i in range(lo, hi + 1)]
    else:
        lo, hi = args.shifts
        pool = objects_in_window(Q, lo, hi)
    found = [P for P in silting_from_pool(Q, pool) if is_d_silting(Q, P, args.d)]
    payload = {"quiver": Q.to_json(), "d": args.d, "silting": [P.to_json(Q) for P in found]}
    text = "\n".join([f"{len(found)} {args.d}-silting objects in the window"] + [f"  {_name(Q, P)}" for P in found])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_mutate(args) -> int:
    Q = _quiver(args.quiver)
    T = parse_candidate(Q, args.object)
    if not is_silting(Q, T):
        raise NotSiltingError(f"{_name(Q, T)} is not silting")
    X = parse_object(Q, args.at)
    R = mutate(Q, T, X, args.direction)
    _emit(args, {"input": T.to_json(Q), "at": X.to_json(Q), "direction": args.direction, "result": R.to_json(Q)},
          _name(Q, R))
    return EXIT_OK


def cmd_braid_encode(args) -> int:
    Q = _quiver(args.quiver)
    offsets = tuple(int(x) for x in re.split(r"[\s,]+", args.section.strip()) if x)
    try:
        S = Section(Q, offsets)
    except ValueError as exc:
        raise UsageError(f"bad section: {exc}") from None
    b = section_to_braid(Q, S, args.depth)
    T = section_to_silting(Q, S)
    alg = section_algebra(Q)
    payload = {"section": S.to_json(), "normal_form": str(b), "word": format_word(b.word()),
               "silting": T.to_json(alg)}
    text = f"{b}\nword: {format_word(b.word())}\nsilting: {_name(alg, T)}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_braid_nf(args) -> int:
    N = diagram_strands(_quiver(args.diagram))
    try:
        x = normal_form(parse_word(args.word, N), N)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"normal_form": str(x), "inf": x.inf, "factors": [list(f) for f in x.factors]}, str(x))
    return EXIT_OK


def cmd_ctilt(args) -> int:
    Q = _quiver(args.quiver)
    try:
        G = OrbitFunctor.parse(args.functor)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    C = build_orbit(Q, G)
    d = args.d or C.cy_dim
    if d is None:
        raise UsageError("this functor has no Calabi-Yau dimension; pass --d")
    ct = enumerate_ctilt(C, d)
    payload = {"category": C.name, "ind_count": len(C.reps), "d": d,
               "ctilt": [[X.to_json(Q) for X in sorted(U)] for U in ct], "exchange": exchange_graph(ct)}
    lines = [f"{C.name}: {len(C.reps)} indecomposables, {len(ct)} {d}-cluster tilting objects"]
    lines += ["  " + " + ".join(str(X) for X in sorted(U)) for U in ct]
    _emit(args, payload, "\n".join(lines), exchange_graph_dot(Q, ct))
    return EXIT_OK


def cmd_amiot(args) -> int:
    Q = _quiver(args.quiver)
    r = amiot_map_check(Q, args.d)
    text = (f"{r['category']}: {len(r['silt_in_F'])} silting objects in F, {len(r['ctilt'])} cluster tilting; "
            f"bijection {'holds' if r['bijection'] else 'FAILS'}")
    _emit(args, r, text)
    return EXIT_OK if r["bijection"] else EXIT_FAIL


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, jobs=args.jobs, d=args.d)
    if args.json:
        print(report.dumps())
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="silt-lab", description="Silting, braids and cluster categories in type A.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, quiver=True, dot=False):
        sp = sub.add_parser(name, help=help)
        if quiver:
            sp.add_argument("--quiver", default="a2", help="e.g. a2, a3:FB")
        out = sp.add_mutually_exclusive_group()
        out.add_argument("--json", action="store_true")
        if dot:
            out.add_argument("--dot", action="store_true")
        sp.set_defaults(func=fn)
        return sp

    add("ar-quiver", cmd_ar_quiver, "knit the AR quiver of mod kQ", dot=True)
    for name, fn, dot in (("silt-interval", cmd_silt_interval, False), ("hasse", cmd_hasse, True)):
        sp = add(name, fn, "silting objects between A[n] and A", dot=dot)
        sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--top", help="A as objects 'lo:hi[@s]' or A_2 labels; default: projectives")
    sp = add("d-silting", cmd_d_silting, "d-silting objects in a window")
    sp.add_argument("--d", type=int, required=True)
    win = sp.add_mutually_exclusive_group()
    win.add_argument("--labels", type=int, nargs=2, metavar=("LO", "HI"))
    win.add_argument("--shifts", type=int, nargs=2, metavar=("LO", "HI"), default=(-1, 2))
    sp = add("mutate", cmd_mutate, "irreducible mutation at one summand")
    sp.add_argument("--object", required=True, help="silting object, e.g. '1 2' on A_2")
    sp.add_argument("--at", required=True, help="the summand to exchange")
    sp.add_argument("--direction", choices=("left", "right"), default="left")
    sp = add("braid-encode", cmd_braid_encode, "braid image of a section")
    sp.add_argument("--section", required=True, help="offsets, e.g. '0,-1'")
    sp.add_argument("--depth", type=int, default=12)
    sp = add("braid-nf", cmd_braid_nf, "Garside normal form of a braid word", quiver=False)
    sp.add_argument("word")
    sp.add_argument("--diagram", default="a2")
    sp = add("ctilt", cmd_ctilt, "cluster tilting objects of an orbit category", dot=True)
    sp.add_argument("--functor", default="nu2", help="nu<d>, fold<d> or comp:<p>,<q>")
    sp.add_argument("--d", type=int)
    sp = add("amiot-check", cmd_amiot, "silting in F against cluster tilting in C_d(kQ)")
    sp.add_argument("--d", type=int, default=2)
    sp = add("verify", cmd_verify, "run a verification suite", quiver=False)
    sp.add_argument("suite", help=", ".join(suite_names()))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--d", type=int)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"silt-lab: {exc}", file=sys.stderr)
    except UnknownSuite as exc:
        print(f"silt-lab: {exc.args[0]}", file=sys.stderr)
    except LookupError as exc:
        print(f"silt-lab: {exc.args[0]}", file=sys.stderr)
    except NotSiltingError as exc:
        print(f"silt-lab: not silting: {exc}", file=sys.stderr)
    except WellDefinednessError as exc:
        print(f"silt-lab: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (MutationError, OrbitError, ValueError) as exc:
        print(f"silt-lab: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
