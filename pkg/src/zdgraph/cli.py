"""Command-line entry point.  Every subcommand prints a JSON run report.

Exit codes: 0 pass, 1 verification failure, 2 bad input, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .dotprod import build_dot_embedding, parse_colored, verify_trichotomy
from .embed import BACKENDS, embed, size_bound, verify_embedding
from .errors import CapExceeded, NotThresholdError, VerificationError, ZdgError
from .graph import extension_property_check, find_induced_embedding, random_graph
from .graphio import guess_format, parse_graph, to_graph6
from .rings import get_cap, load_ring
from .threshold import PATTERNS, ThresholdCertificate, nsg_decomposition, recognize_threshold
from .zdg import zero_divisor_graph

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
SCHEMA = "1"


class Run:
    """Accumulates one report; timing is kept in its own field."""

    def __init__(self, command: str, seed=None):
        self.report = {
            "schema": SCHEMA,
            "command": command,
            "tool_version": __version__,
            "inputs": [],
            "seed": seed,
            "outputs": {},
            "verification": None,
        }
        self.start = time.perf_counter()

    def read_input(self, path: str, format: str = None) -> str:
        with open(path, "rb") as fh:
            data = fh.read()
        text = data.decode()
        if format is None:
            format = guess_format(path, text)
        self.report["inputs"].append(
            {"path": os.path.basename(path), "sha256": hashlib.sha256(data).hexdigest(), "format": format}
        )
        return text

    def finish(self, args, code: int) -> int:
        self.report["exit_code"] = code
        self.report["timing"] = {"seconds": round(time.perf_counter() - self.start, 6)}
        text = json.dumps(self.report, sort_keys=True, indent=2)
        if getattr(args, "report", None):
            with open(args.report, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return code


def _write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def _load_graph(run: Run, args):
    text = run.read_input(args.graph, args.format)
    return parse_graph(text, run.report["inputs"][-1]["format"])


def cmd_embed(args, run: Run) -> int:
    g = _load_graph(run, args)
    try:
        emb = embed(g, args.backend, args.prime, verify=False)
    except NotThresholdError as exc:
        run.report["outputs"]["witness"] = exc.witness.to_json()
        run.report["error"] = "graph is not threshold"
        return EXIT_INPUT
    report = verify_embedding(g, emb, args.cap)
    run.report["outputs"]["embedding"] = emb.to_json()
    run.report["verification"] = report.to_json()
    if args.out:
        _write(args.out, json.dumps(emb.to_json(), sort_keys=True, indent=2))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_zdg(args, run: Run) -> int:
    run.read_input(args.ring, "ring-json")
    R = load_ring(args.ring)
    lg = zero_divisor_graph(R, args.cap)
    run.report["outputs"] = {"ring": R.descriptor(), "order": R.order, "graph": lg.to_json()}
    if args.out:
        _write(args.out, lg.to_dot() if args.emit == "dot" else json.dumps(lg.to_json(), sort_keys=True, indent=2))
    return EXIT_OK


def cmd_threshold(args, run: Run) -> int:
    g = _load_graph(run, args)
    result = recognize_threshold(g)
    out = run.report["outputs"]
    out["graph6"] = to_graph6(g)
    out["threshold"] = isinstance(result, ThresholdCertificate)
    if isinstance(result, ThresholdCertificate):
        out["certificate"] = result.to_json()
        nsg = nsg_decomposition(result)
        out["nsg"] = {"U": [list(c) for c in nsg.independent_cells], "V": [list(c) for c in nsg.clique_cells]}
        ok = result.replay() == g and result.weights_realize(g) and nsg.check(g)
    else:
        out["witness"] = result.to_json()
        ok = find_induced_embedding(PATTERNS[result.pattern], g) is not None
    run.report["verification"] = {"pass": ok}
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_dotprod(args, run: Run) -> int:
    x = parse_colored(run.read_input(args.graph, "colored-edgelist"))
    emb = build_dot_embedding(x)
    report = verify_trichotomy(x, emb)
    run.report["outputs"]["embedding"] = emb.to_json()
    run.report["verification"] = report.to_json()
    if args.out:
        _write(args.out, json.dumps(emb.to_json(), sort_keys=True, indent=2))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_bound(args, run: Run) -> int:
    g = _load_graph(run, args)
    b = size_bound(g)
    run.report["outputs"] = b.to_json()
    run.report["verification"] = {"pass": b.p_actual <= b.nominal_count + 1}
    return EXIT_OK if b.p_actual <= b.nominal_count + 1 else EXIT_VERIFY


def cmd_rado(args, run: Run) -> int:
    g = random_graph(args.n, args.seed)
    rep = extension_property_check(g, args.s, args.t)
    run.report["outputs"] = {"graph6": to_graph6(g), "extension": rep.to_json()}
    run.report["verification"] = {"pass": rep.passed}
    # a failing extension property is a finding about the sample, not a tool error
    return EXIT_OK


def cmd_find(args, run: Run) -> int:
    run.read_input(args.ring, "ring-json")
    R = load_ring(args.ring)
    lg = zero_divisor_graph(R, args.cap)
    if args.pattern in PATTERNS:
        pattern = PATTERNS[args.pattern]
    else:
        pattern = _load_graph(run, argparse.Namespace(graph=args.pattern, format=None))
    found = find_induced_embedding(pattern, lg.graph, cap=max(pattern.n, 10))
    run.report["outputs"] = {
        "ring": R.descriptor(),
        "pattern": args.pattern,
        "found": found is not None,
        "vertices": None if found is None else list(found),
        "labels": None if found is None else [lg.labels[v] for v in found],
    }
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (overrides ZDG_CAP)")
    common.add_argument("--report", help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", parents=[common], help="embed a graph in a zero-divisor graph")
    p.add_argument("graph")
    p.add_argument("--backend", choices=BACKENDS, default="boolean")
    p.add_argument("--prime", type=int)
    p.add_argument("--format", choices=("graph6", "edgelist"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("zdg", parents=[common], help="zero-divisor graph of a ring descriptor")
    p.add_argument("ring")
    p.add_argument("--emit", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_zdg)

    p = sub.add_parser("threshold", parents=[common], help="threshold recognition")
    p.add_argument("graph")
    p.add_argument("--format", choices=("graph6", "edgelist"))
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("dotprod", parents=[common], help="red/green/blue colouring embedding")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dotprod)

    p = sub.add_parser("bound", parents=[common], help="Boolean backend ground-set size")
    p.add_argument("graph")
    p.add_argument("--format", choices=("graph6", "edgelist"))
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("rado", parents=[common], help="extension property of a random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_rado)

    p = sub.add_parser("find", parents=[common], help="find an induced pattern in a zero-divisor graph")
    p.add_argument("ring")
    p.add_argument("pattern", help="C4, P4, 2K2 or a graph file")
    p.set_defaults(func=cmd_find)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cap is not None and args.cap < 1:
        print("--cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    args.cap = get_cap(args.cap)
    run = Run(args.command, getattr(args, "seed", None))
    try:
        code = args.func(args, run)
    except CapExceeded as exc:
        run.report["error"] = str(exc)
        code = EXIT_CAP
    except VerificationError as exc:
        run.report["error"] = str(exc)
        code = EXIT_VERIFY
    except (ZdgError, ValueError, OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        run.report["error"] = f"{type(exc).__name__}: {exc}"
        code = EXIT_INPUT
    return run.finish(args, code)


if __name__ == "__main__":
    sys.exit(main())
