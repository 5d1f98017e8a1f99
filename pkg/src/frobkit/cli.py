"""``frobkit`` command line.

Exit codes: 0 yes/success, 1 no/disagreement, 2 error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .caps import Caps, default_caps
from .core import bounds, erdos_graham_classic, frobenius, frobenius_bruteforce, is_representable_dp
from .errors import FrobkitError
from .instances import KINDS, dumps, generate, instance_to_obj, load, load_set_only
from .problems import (
    decide_assoc_ikp,
    decide_cofrobenius,
    decide_exact_frobenius,
    decide_frob_cofrob_pair,
    decide_frobenius,
    decide_integer_knapsack,
    decide_pi2_3dm,
    decide_pi2_3dm_bruteforce,
    decide_pi2_ikp,
)
from .reductions import reduce_3dm_to_assoc_ikp, reduce_assoc_ikp_to_cofrobenius
from .verify import VerifyReport, verify_reduction_phi, verify_reduction_psi, verify_solvers

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

# problem name -> instance kinds it accepts
PROBLEM_KINDS = {
    "frobenius": ("frobenius", "exact"),
    "cofrobenius": ("frobenius", "exact"),
    "exact": ("exact", "frobenius"),
    "pair": ("pair",),
    "3dm": ("3dm",),
    "knapsack": ("knapsack",),
    "pi2ikp": ("pi2ikp",),
    "assoc-ikp": ("assoc-ikp",),
}
DEFAULT_PROBLEM = {"frobenius": "frobenius", "exact": "exact", "pair": "pair", "3dm": "3dm",
                   "knapsack": "knapsack", "pi2ikp": "pi2ikp", "assoc-ikp": "assoc-ikp"}


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    output: str | None = None
    seed: int = 0
    caps: Caps = field(default_factory=Caps)
    format: str = "text"


class UsageError(FrobkitError):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _table(fmt: str, rows: list[dict[str, Any]]) -> str:
    if fmt == "json":
        return json.dumps(rows[0] if len(rows) == 1 else rows, indent=2, default=str) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    return "".join(" ".join(f"{k}={v}" for k, v in r.items()) + "\n" for r in rows)


# --------------------------------------------------------------------------
# commands


def cmd_solve(args, cfg: RunConfig) -> int:
    a = load_set_only(args.path)
    g = frobenius(a, args.algorithm, cfg.caps)
    if cfg.format == "text":
        _emit(f"{g}\n", cfg.output)
    else:
        _emit(_table(cfg.format, [{"a": str(a), "algorithm": args.algorithm, "g": g}]), cfg.output)
    return EXIT_YES


def _decide(problem: str, kind: str, inst: Any, caps: Caps) -> bool:
    if kind not in PROBLEM_KINDS[problem]:
        raise UsageError(f"problem {problem!r} cannot take a {kind!r} instance")
    if problem == "frobenius":
        return decide_frobenius(inst, caps=caps)
    if problem == "cofrobenius":
        return decide_cofrobenius(inst, caps=caps)
    if problem == "exact":
        return decide_exact_frobenius(inst, caps=caps)
    if problem == "pair":
        return decide_frob_cofrob_pair(*inst, caps=caps)
    if problem == "3dm":
        return decide_pi2_3dm(inst, caps)
    if problem == "knapsack":
        return decide_integer_knapsack(inst.a, inst.k, caps)
    if problem == "pi2ikp":
        return decide_pi2_ikp(inst, caps=caps)
    return decide_assoc_ikp(inst, caps=caps)


def _oracle(kind: str, inst: Any, caps: Caps) -> bool:
    """The independent brute-force route for each instance kind."""
    if kind in ("frobenius", "exact"):
        g = frobenius_bruteforce(inst.a, caps)
        return g == inst.k if kind == "exact" else g >= inst.k
    if kind == "pair":
        first, second = inst
        return frobenius_bruteforce(first.a, caps) >= first.k and frobenius_bruteforce(second.a, caps) < second.k
    if kind == "3dm":
        return decide_pi2_3dm_bruteforce(inst, caps)
    if kind == "knapsack":
        return is_representable_dp(inst.a, inst.k, caps)
    if kind == "pi2ikp":
        return decide_pi2_ikp(inst, "dp", caps)
    return decide_assoc_ikp(inst, "dp", caps)


def _verdict(problem: str, answer: bool, cfg: RunConfig) -> int:
    word = "yes" if answer else "no"
    if cfg.format == "text":
        _emit(f"{word}\n", cfg.output)
    else:
        _emit(_table(cfg.format, [{"problem": problem, "answer": word}]), cfg.output)
    return EXIT_YES if answer else EXIT_NO


def cmd_decide(args, cfg: RunConfig) -> int:
    kind, inst = load(args.path)
    problem = args.problem or DEFAULT_PROBLEM[kind]
    return _verdict(problem, _decide(problem, kind, inst, cfg.caps), cfg)


def cmd_oracle(args, cfg: RunConfig) -> int:
    kind, inst = load(args.path)
    return _verdict(f"{kind} (oracle)", _oracle(kind, inst, cfg.caps), cfg)


def cmd_bounds(args, cfg: RunConfig) -> int:
    a = load_set_only(args.path)
    rep = bounds(a)
    row = {"a": str(a), **asdict(rep), "erdos_graham_classic": erdos_graham_classic(a)}
    _emit(_table(cfg.format, [row]), cfg.output)
    return EXIT_YES


def cmd_reduce(args, cfg: RunConfig) -> int:
    kind, inst = load(args.path)
    if args.direction == "3dm-to-ikp":
        if kind != "3dm":
            raise UsageError(f"3dm-to-ikp needs a 3dm instance, got {kind!r}")
        out, cert = reduce_3dm_to_assoc_ikp(inst)
        out_kind = "assoc-ikp"
    else:
        if kind != "assoc-ikp":
            raise UsageError(f"ikp-to-cofrob needs an assoc-ikp instance, got {kind!r}")
        out, cert = reduce_assoc_ikp_to_cofrobenius(inst)
        out_kind = "frobenius"
    text = dumps(out_kind, out)
    sidecar = json.dumps({k: (str(v) if isinstance(v, int) and k == "lambda" else v)
                          for k, v in cert.sidecar().items()}, indent=2) + "\n"
    if cfg.output:
        Path(cfg.output).write_text(text)
        Path(cfg.output).with_suffix(".cert.json").write_text(sidecar)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def render_report(report: VerifyReport, cfg: RunConfig) -> str:
    header = {
        "frobkit_version": report.version,
        "which": report.which,
        "run_config": {**asdict(cfg), "caps": asdict(cfg.caps)},
        "params": report.config,
    }
    rows = [
        {"trial": t.index, "trial_seed": t.trial_seed, "label": t.label, "source": t.source,
         "image": t.image, "agree": t.agree, "wall_time_s": f"{t.wall_time_s:.6f}"}
        for t in report.trials
    ]
    if cfg.format == "json":
        return json.dumps({**header, **report.to_dict()}, indent=2, default=str) + "\n"
    summary = f"agreement {report.agreed}/{len(report.trials)}"
    if cfg.format == "csv":
        buf = io.StringIO()
        buf.write(f"# {json.dumps(header, sort_keys=True, default=str)}\n")
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["trial"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        buf.write(f"# {summary}\n")
        return buf.getvalue()
    lines = [f"frobkit {report.version} verify {report.which}",
             f"config: {json.dumps(header['run_config'], sort_keys=True, default=str)}",
             f"params: {json.dumps(report.config, sort_keys=True)}"]
    for r in rows:
        mark = "ok" if r["agree"] else "DISAGREE"
        lines.append(f"{r['trial']:>5} seed={r['trial_seed']} {r['label']} source={r['source']} "
                     f"image={r['image']} {mark} | wall_time_s={r['wall_time_s']}")
    lines.append(f"answers: {dict(sorted(report.answer_counts().items()))}")
    lines.append(f"labels: {dict(sorted(report.label_counts().items()))}")
    lines.append(summary)
    lines.append(f"total wall_time_s={report.wall_time_s:.3f}")
    return "\n".join(lines) + "\n"


def cmd_verify(args, cfg: RunConfig) -> int:
    seed = cfg.seed
    if args.which == "psi":
        report = verify_reduction_psi(args.trials, args.q_max, args.m1_max, args.m2_max, seed,
                                      q_min=args.q_min, m1_min=args.m1_min, caps=cfg.caps)
    elif args.which == "phi":
        report = verify_reduction_phi(args.trials, args.a_max, args.n_max, seed, caps=cfg.caps)
    else:
        report = verify_solvers(args.trials, args.n_max, args.a_max, seed, caps=cfg.caps)
    _emit(render_report(report, cfg), cfg.output)
    if report.ok:
        return EXIT_YES
    dump_dir = Path(args.dump_dir)
    dump_dir.mkdir(parents=True, exist_ok=True)
    for t in report.disagreements:
        path = dump_dir / f"disagreement-{report.which}-{seed}-{t.index}.json"
        path.write_text(json.dumps(t.instance, indent=2) + "\n")
        print(f"frobkit: disagreement on trial {t.index}; instance written to {path}", file=sys.stderr)
    return EXIT_NO


def cmd_gen(args, cfg: RunConfig) -> int:
    inst = generate(args.kind, cfg.seed, q=args.q, m1=args.m1, m2=args.m2, n=args.n, a_max=args.a_max)
    _emit(dumps(args.kind, inst), cfg.output)
    return EXIT_YES


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="64-bit seed")
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--cap-residues", type=int, default=argparse.SUPPRESS)
    common.add_argument("--cap-dp-bits", type=int, default=argparse.SUPPRESS)
    common.add_argument("--cap-enum", type=int, default=argparse.SUPPRESS)
    common.add_argument("-o", "--output", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="frobkit", parents=[common],
                                description="Frobenius numbers, decision problems and reductions.")
    p.add_argument("--version", action="version", version=f"frobkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="print g(A)")
    s.add_argument("path")
    s.add_argument("--algorithm", choices=("nijenhuis", "bruteforce", "binsearch", "auto"), default="auto")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("decide", parents=[common], help="decide an instance (exit 0 yes, 1 no)")
    s.add_argument("path")
    s.add_argument("--problem", choices=sorted(PROBLEM_KINDS))
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("oracle", parents=[common], help="decide an instance by brute force")
    s.add_argument("path")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bounds", parents=[common], help="classical bounds on g(A)")
    s.add_argument("path")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("reduce", parents=[common], help="apply a reduction")
    s.add_argument("direction", choices=("3dm-to-ikp", "ikp-to-cofrob"))
    s.add_argument("path")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify", parents=[common], help="seeded dual-oracle agreement run")
    s.add_argument("which", choices=("psi", "phi", "solvers"))
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--q-min", type=int, default=1)
    s.add_argument("--q-max", type=int, default=2)
    s.add_argument("--m1-min", type=int, default=0)
    s.add_argument("--m1-max", type=int, default=2)
    s.add_argument("--m2-max", type=int, default=4)
    s.add_argument("--a-max", type=int, default=60)
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--dump-dir", default=".")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", parents=[common], help="write a seeded random instance")
    s.add_argument("kind", choices=KINDS)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--m1", type=int, default=1)
    s.add_argument("--m2", type=int, default=3)
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--a-max", type=int, default=100)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        caps = default_caps().override(
            residues=getattr(args, "cap_residues", None),
            dp_bits=getattr(args, "cap_dp_bits", None),
            enum=getattr(args, "cap_enum", None),
        )
        cfg = RunConfig(
            command=args.command,
            input=getattr(args, "path", None),
            output=getattr(args, "output", None),
            seed=getattr(args, "seed", 0),
            caps=caps,
            format=getattr(args, "format", "text"),
        )
        return args.func(args, cfg)
    except (FrobkitError, OSError, ValueError) as exc:
        print(f"frobkit: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
