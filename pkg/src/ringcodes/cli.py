"""Command-line front end.

Machine output goes to stdout (JSON with ``--json``, indented text
otherwise); timing and diagnostics go to stderr so that stdout is
byte-identical across runs with the same flags.

Code specs accepted by ``--code``::

    cyclic:N:EXPR        cyclic R-code generated by EXPR in R[x]/(x^N-1); ';' separates generators
    gen:N:ROW;ROW        R-linear span of rows of comma-separated ring elements, e.g. 1+u,2v
    z4:N:ROW;ROW         Z4 code with integer rows; in R contexts it stands for R (x) C
    comp:N:G1|G2|G3|G4   R-code from four Z4 components, each given as z4 rows

An empty row list gives the zero code.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from .cyclic import Z4CyclicSpec, dual_cyclic_z4, is_cyclic_r, parse_r_generator
from .enumerators import (clwe_of, lee_direct, lee_enumerator, macwilliams_lee, macwilliams_slwe,
                          slwe_of, symmetrize, verify_clwe_macwilliams)
from .exceptions import BudgetExceeded, IdentityViolation, ParseError, UndefinedDistance
from .expr import parse_element
from .linear import DEFAULT_BUDGET, RCode, Z4Code, decompose_rcode
from .mds import classify_z4_mds, singleton_r, singleton_z4, verify_mds_structure
from .oracles import brute_force_dual, random_r_generators
from .reports import example_23, reproduce_table1
from .z4 import Z4Poly


@dataclass
class CommandResult:
    command: list
    status: str
    payload: object
    elapsed_ms: float = 0.0

    @property
    def exit_code(self):
        return {"ok": 0, "violation": 1, "error": 1}.get(self.status, 0)

    def to_json(self):
        return {"command": self.command, "status": self.status, "payload": self.payload}


class CLIError(Exception):
    pass


# --- code specs ------------------------------------------------------------

def _z4_rows(body, n):
    rows = []
    for part in body.split(";"):
        if part.strip():
            row = [int(x) % 4 for x in part.split(",")]
            if len(row) != n:
                raise CLIError(f"row {part!r} has length {len(row)}, expected {n}")
            rows.append(row)
    return Z4Code(rows, n)


def parse_code_spec(text):
    """Return ``(kind, code)``; kind is "z4" for Z4 codes and "r" otherwise."""
    try:
        kind, n, body = text.split(":", 2)
        n = int(n)
    except ValueError:
        raise CLIError(f"bad code spec {text!r}; expected KIND:N:BODY") from None
    if n < 1:
        raise CLIError("length must be positive")
    if kind == "cyclic":
        return "r", parse_r_generator(body, n)
    if kind == "z4":
        return "z4", _z4_rows(body, n)
    if kind == "comp":
        parts = body.split("|")
        if len(parts) != 4:
            raise CLIError("comp spec needs four components separated by '|'")
        return "r", RCode(_z4_rows(p, n) for p in parts)
    if kind == "gen":
        rows = []
        for part in body.split(";"):
            if part.strip():
                row = [parse_element(x) for x in part.split(",")]
                if len(row) != n:
                    raise CLIError(f"row {part!r} has length {len(row)}, expected {n}")
                rows.append(row)
        return "r", decompose_rcode(rows, n) if rows else RCode.zero(n)
    raise CLIError(f"unknown code kind {kind!r}")


def as_rcode(kind, code):
    return RCode([code] * 4) if kind == "z4" else code


# --- serializers -----------------------------------------------------------

def slwe_json(slwe):
    return [{"exponents": list(k), "coeff": int(v)} for k, v in sorted(slwe.items())]


def _z4_json(code, budget):
    k1, k2 = code.type
    out = {"n": code.n, "k1": k1, "k2": k2, "generator": code.standard_form.matrix[:, np.argsort(code.standard_form.perm)].tolist()}
    try:
        out["dLee"], out["dHamming"] = (int(x) for x in code.min_distances(budget))
    except UndefinedDistance:
        out["dLee"] = out["dHamming"] = None
    return out


def _r_json(code, budget):
    out = code.params(budget).to_json()
    out["log2Size"] = 2 * out["k1"] + out["k2"]
    out["components"] = [_z4_json(c, budget) for c in code.components]
    return out


# --- handlers --------------------------------------------------------------

def cmd_code(args):
    kind, code = parse_code_spec(args.code)
    if args.action == "params":
        return "ok", _z4_json(code, args.budget) if kind == "z4" else _r_json(code, args.budget)
    if args.action == "generator":
        if kind == "z4":
            return "ok", {"generator": code.generator.tolist()}
        rows = code.generator_matrix()
        return "ok", {"generator": [[str(x) for x in row] for row in rows],
                      "generatorCRT": [[x.crt_str() for x in row] for row in rows],
                      "gray": code.gray_image().generator.tolist()}
    dual = code.dual()
    payload = _z4_json(dual, args.budget) if kind == "z4" else _r_json(dual, args.budget)
    payload["selfDual"] = code.is_self_dual()
    payload["selfOrthogonal"] = code.is_self_orthogonal()
    return "ok", payload


def _poly(text):
    return Z4Poly.parse(text)


def cmd_cyclic(args):
    if args.action == "build":
        code = parse_r_generator(args.gen, args.n)
        payload = _r_json(code, args.budget)
        payload["cyclic"] = is_cyclic_r(code)
        return "ok", payload
    if args.action == "table1":
        return cmd_table1(args)
    if args.action == "example23":
        return cmd_example23(args)
    p = _poly(args.p) if args.p else Z4Poly()
    spec = Z4CyclicSpec(args.n, _poly(args.f), p, _poly(args.g)).validate()
    dual = dual_cyclic_z4(spec)
    primal_dual = spec.code().dual()
    spans = dual.code() == primal_dual
    payload = {"n": args.n, "primal": {"f": str(spec.f), "p": str(spec.p), "g": str(spec.g)},
               "dual": {"f": str(dual.f), "p": str(dual.p), "g": str(dual.g)},
               "dualType": list(primal_dual.type), "spansDual": spans}
    return ("ok" if spans else "violation"), payload


def cmd_table1(args):
    return "ok", reproduce_table1(args.budget, args.threads)


def cmd_example23(args):
    return "ok", example_23(args.budget, args.threads)


def cmd_enum(args):
    code = as_rcode(*parse_code_spec(args.code))
    if args.kind == "slwe":
        return "ok", {"n": code.n, "size": code.cardinality, "slwe": slwe_json(slwe_of(code, args.budget))}
    lee = lee_enumerator(code, args.budget)
    if args.kind == "lee":
        return "ok", {"n": code.n, "size": code.cardinality, "lee": lee}
    dual_lee = macwilliams_lee(lee, code.cardinality)
    direct = lee_enumerator(code.dual(), args.budget)
    status = "ok" if dual_lee == direct else "violation"
    return status, {"n": code.n, "size": code.cardinality, "dualLee": dual_lee, "matchesDualCode": dual_lee == direct}


def _macwilliams_trial(code, level, budget):
    dual = brute_force_dual(code)
    structural = code.dual()
    if len(dual) != structural.cardinality:
        return False, {"reason": "dual size", "bruteForce": len(dual), "structural": structural.cardinality}
    if level == "lee":
        got = macwilliams_lee(lee_direct(code, budget), code.cardinality)
        want = lee_direct(dual)
    elif level == "slwe":
        got = slwe_json(macwilliams_slwe(slwe_of(code, budget), code.cardinality))
        want = slwe_json(symmetrize(clwe_of(dual)))
    else:
        try:
            verify_clwe_macwilliams(code, dual_words=dual, budget=budget)
        except IdentityViolation as exc:
            return False, {"reason": str(exc), "witness": exc.witness}
        return True, {}
    return got == want, ({} if got == want else {"transform": got, "dual": want})


def cmd_verify(args):
    if args.n > 2:
        raise CLIError("the exhaustive dual scan supports n <= 2")
    rng = np.random.default_rng(args.seed)
    trials = []
    for t in range(args.trials):
        gens = random_r_generators(args.n, rng)
        code = decompose_rcode(gens, args.n) if gens else RCode.zero(args.n)
        ok, detail = _macwilliams_trial(code, args.level, args.budget)
        trials.append({"trial": t, "type": list(code.type), "ok": ok, **detail})
    failed = [t for t in trials if not t["ok"]]
    payload = {"level": args.level, "n": args.n, "trials": len(trials), "failures": len(failed),
               "results": trials}
    return ("violation" if failed else "ok"), payload


def cmd_mds(args):
    if args.action == "sweep":
        return "ok", verify_mds_structure(args.max_n, args.seed)
    kind, code = parse_code_spec(args.code)
    if kind == "z4":
        if code.cardinality == 1:
            raise CLIError("the zero code has no minimum distance")
        payload = singleton_z4(code, args.budget).to_json()
        payload["classification"] = classify_z4_mds(code, args.budget).to_json()
        return "ok", payload
    payload = singleton_r(code, args.budget).to_json()
    payload["components"] = [None if c.cardinality == 1 else singleton_z4(c, args.budget).to_json()
                             for c in code.components]
    return "ok", payload


# --- parser ----------------------------------------------------------------

def _budget(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON on stdout")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized trials (default 0)")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads for component enumeration")
    common.add_argument("--budget", type=_budget, default=argparse.SUPPRESS,
                        help=f"maximum codewords to enumerate (default {DEFAULT_BUDGET})")

    parser = argparse.ArgumentParser(prog="ringcodes", parents=[common],
                                     description="Linear and cyclic codes over Z4+uZ4+vZ4+uvZ4 (u^2=u, v^2=v).",
                                     epilog=__doc__.split("Code specs", 1)[1].join(["Code specs", ""]),
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", parents=[common], help="parameters, generators and duals of a code")
    p.add_argument("action", choices=["params", "generator", "dual"])
    p.add_argument("--code", required=True, help="code spec, see top-level help")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("cyclic", parents=[common], help="cyclic codes from generator polynomials",
                       description="EXPR grammar: sums and products of integers, u, v, x, "
                                   "parentheses and ^k powers; juxtaposition multiplies.")
    csub = p.add_subparsers(dest="action", required=True)
    b = csub.add_parser("build", parents=[common], help="build the cyclic R-code generated by EXPR")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--gen", required=True, help="R[x] expression; ';' separates generators")
    csub.add_parser("table1", parents=[common], help="rebuild the table of cyclic codes of odd length")
    csub.add_parser("example23", parents=[common], help="the length-23 quasi-cyclic example")
    d = csub.add_parser("dual", parents=[common], help="dual spec of the Z4 cyclic code (f+2p, 2g)")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--f", required=True)
    d.add_argument("--g", required=True)
    d.add_argument("--p", default=None)
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("enum", parents=[common], help="weight enumerators")
    p.add_argument("kind", choices=["slwe", "lee", "dual-lee"])
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("verify", parents=[common], help="MacWilliams identities against a brute-force dual")
    vsub = p.add_subparsers(dest="identity", required=True)
    m = vsub.add_parser("macwilliams", parents=[common])
    m.add_argument("--level", choices=["clwe", "slwe", "lee"], required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mds", parents=[common], help="Singleton bound and MDS structure checks")
    msub = p.add_subparsers(dest="action", required=True)
    c = msub.add_parser("check", parents=[common])
    c.add_argument("--code", required=True)
    s = msub.add_parser("sweep", parents=[common])
    s.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_mds)

    p = sub.add_parser("table1", parents=[common], help="same as 'cyclic table1'")
    p.set_defaults(func=cmd_table1)
    p = sub.add_parser("example23", parents=[common], help="same as 'cyclic example23'")
    p.set_defaults(func=cmd_example23)
    return parser


_DEFAULTS = {"json": False, "seed": 0, "threads": 1, "budget": DEFAULT_BUDGET}


def run(argv):
    """Parse ``argv`` and execute it; errors are captured in the result, not raised."""
    argv = list(argv)
    args = build_parser().parse_args(argv)
    for k, v in _DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    start = time.perf_counter()
    try:
        status, payload = args.func(args)
    except IdentityViolation as exc:
        status, payload = "violation", {"error": str(exc), "witness": _jsonable(exc.witness)}
    except (CLIError, ParseError, BudgetExceeded, UndefinedDistance, ValueError) as exc:
        status, payload = "error", {"error": str(exc)}
    elapsed = (time.perf_counter() - start) * 1000
    return CommandResult(argv, status, _jsonable(payload), elapsed)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def render_text(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _flat_list(item):
                lines.append(f"{pad}-")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x) for x in v)


def _scalar(v):
    return json.dumps(v) if isinstance(v, (list, dict)) else str(v)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    result = run(argv)
    as_json = "--json" in argv
    if result.status == "error":
        print(f"error: {result.payload['error']}", file=sys.stderr)
    if as_json:
        sys.stdout.write(json.dumps(result.to_json(), sort_keys=True) + "\n")
    elif result.status != "error":
        print(f"status: {result.status}")
        print("\n".join(render_text(result.payload)))
    print(f"elapsed: {result.elapsed_ms:.1f} ms", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
