"""Command-line front end.

Every command prints exactly one JSON document on standard output.  Exit
status is 0 on success, 1 when a theorem check reports a Mismatch and 2 on
usage, parse or input errors (message on standard error).
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import formats
from .cones import normal_cone, proper_separation
from .errors import PolycalError
from .functions import INF, MaxAffineFn, subdiff
from .harness import KINDS, TheoremId, check_theorem, gen_instance, run_suite
from .harness.suite import SuiteReport
from .maps import SVMap, coderivative, optimal_value
from .polyhedra import HPoly, canonicalize, ri_member, ri_point
from .rational import parse_csv, rat_str

SEED_ENV = "POLYCAL_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- argument helpers -------------------------------------------------------

def _csv(text):
    try:
        return parse_csv(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dims(text):
    try:
        dims = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not dims:
        raise argparse.ArgumentTypeError("empty dimension list")
    return dims


def _load(path, *types):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = formats.parse(data)
    except PolycalError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if types and not isinstance(obj, types):
        names = " or ".join(_TYPE_NAMES[t] for t in types)
        raise UsageError(f"{path}: expected document type {names}")
    return obj


_TYPE_NAMES = {HPoly: "hpoly", MaxAffineFn: "maxaffine", SVMap: "svmap", formats.CheckDoc: "check"}


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None or not env.strip():
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _set_doc(P):
    return formats.hpoly_doc(canonicalize(P))


# -- commands ---------------------------------------------------------------

def cmd_canon(args):
    return formats.to_doc(_load(args.file)), 0


def cmd_ri_point(args):
    P = _load(args.file, HPoly)
    return {"point": formats.rats(ri_point(P))}, 0


def cmd_ri_member(args):
    P = _load(args.file, HPoly)
    return {"member": ri_member(P, args.point)}, 0


def cmd_normal_cone(args):
    P = _load(args.file, HPoly)
    C = normal_cone(P, args.point)
    return {"cone": {"dim": C.dim, "generators": [formats.rats(g) for g in C.generators],
                     "lineality": [formats.rats(g) for g in C.lineality]},
            "set": _set_doc(C.hrep)}, 0


def cmd_separate(args):
    P = _load(args.file1, HPoly)
    Q = _load(args.file2, HPoly)
    cert = proper_separation(P, Q)
    if cert is None:
        return {"separable": False, "certificate": None}, 0
    return {"separable": True,
            "certificate": {"v": formats.rats(cert.v), "sup_first": rat_str(cert.sup_first),
                            "inf_second": rat_str(cert.inf_second),
                            "witnesses": [formats.rats(w) for w in cert.witnesses]}}, 0


def cmd_subdiff(args):
    f = _load(args.file, MaxAffineFn)
    return {"set": _set_doc(subdiff(f, args.point))}, 0


def cmd_coderiv(args):
    F = _load(args.file, SVMap)
    if len(args.at) != F.n + F.m:
        raise UsageError(f"--at needs {F.n + F.m} entries (x then y), got {len(args.at)}")
    res = coderivative(F, args.at[:F.n], args.at[F.n:], args.v)
    return {"set": _set_doc(res.uset)}, 0


def cmd_optval(args):
    F = _load(args.fmap, SVMap)
    phi = _load(args.phi, MaxAffineFn)
    mu = optimal_value(F, phi)
    val = mu(args.at)
    if val == INF:
        return {"value": "inf", "subdiff": None}, 0
    return {"value": rat_str(val), "subdiff": _set_doc(mu.subdiff(args.at))}, 0


def cmd_check(args):
    target = args.theorem
    if target.lower().endswith(".json"):
        doc = _load(target, formats.CheckDoc)
        try:
            tid = TheoremId.parse(doc.theorem)
        except ValueError as exc:
            raise UsageError(f"{target}: {exc}") from None
        verdict = check_theorem(tid, doc.instances, doc.points, doc.params, corrupt=args.corrupt)
        report = SuiteReport((verdict,))
    else:
        try:
            tid = TheoremId.parse(target)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.trials < 1:
            raise UsageError("--trials must be at least 1")
        report = run_suite([tid], args.trials, _seed(args), dims=args.dims,
                           qualified=not args.violated, corrupt=args.corrupt)
    return report.to_json(), report.exit_status


def cmd_gen(args):
    obj = gen_instance(args.kind, args.dims, args.density, _seed(args), qualified=not args.violated)
    if isinstance(obj, tuple):
        return {"instances": [formats.to_doc(x) for x in obj]}, 0
    return formats.to_doc(obj), 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polycal", description="Exact convex generalized differentiation over rational polyhedra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("canon", help="print the canonical form of an instance document")
    s.add_argument("file")
    s.set_defaults(run=cmd_canon)

    s = sub.add_parser("ri-point", help="a relative-interior point of an hpoly")
    s.add_argument("file")
    s.set_defaults(run=cmd_ri_point)

    s = sub.add_parser("ri-member", help="relative-interior membership")
    s.add_argument("file")
    s.add_argument("--point", type=_csv, required=True)
    s.set_defaults(run=cmd_ri_member)

    s = sub.add_parser("normal-cone", help="normal cone of an hpoly at a point")
    s.add_argument("file")
    s.add_argument("--point", type=_csv, required=True)
    s.set_defaults(run=cmd_normal_cone)

    s = sub.add_parser("separate", help="proper separation certificate for two hpolys")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(run=cmd_separate)

    s = sub.add_parser("subdiff", help="subdifferential of a maxaffine function")
    s.add_argument("file")
    s.add_argument("--point", type=_csv, required=True)
    s.set_defaults(run=cmd_subdiff)

    s = sub.add_parser("coderiv", help="coderivative of an svmap at (x, y) applied to v")
    s.add_argument("file")
    s.add_argument("--at", type=_csv, required=True, help="x and y concatenated")
    s.add_argument("--v", type=_csv, required=True)
    s.set_defaults(run=cmd_coderiv)

    s = sub.add_parser("optval", help="optimal value function: value and subdifferential")
    s.add_argument("fmap")
    s.add_argument("phi")
    s.add_argument("--at", type=_csv, required=True)
    s.set_defaults(run=cmd_optval)

    s = sub.add_parser("check", help="run a theorem check (id or check document)")
    s.add_argument("theorem", help="theorem id (case-insensitive) or a check .json file")
    s.add_argument("--trials", type=int, default=10)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--dims", type=_dims, default=None)
    s.add_argument("--violated", action="store_true", help="draw qualification-violated instances")
    s.add_argument("--corrupt", action="store_true", help="self-test: use a deliberately wrong RHS")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("gen", help="generate a random instance")
    s.add_argument("kind", choices=KINDS)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--dims", type=_dims, default=(2,))
    s.add_argument("--density", type=float, default=0.5)
    s.add_argument("--violated", action="store_true", help="pair/triple with disjoint relative interiors")
    s.set_defaults(run=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, code = args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PolycalError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    sys.stdout.write(formats.dumps(doc) + "\n")
    return code
