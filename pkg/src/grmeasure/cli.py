"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 filtration is not GR (``verify``),
3 unsupported support class, 4 oracle disagreement (a bug).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Iterable, Sequence
from fractions import Fraction
from pathlib import Path

from .chain_core import all_filtrations, chain_values, oracle_l_star
from .errors import GRError, UnsupportedSupportError
from .quiver_poset import (
    QuiverFile,
    canonical,
    full_support,
    parse_quiver_file,
    parse_weight_lines,
    weight_lengths,
)
from .random_quivers import random_corpus
from .thin_rep import ThinRep, d4_limit_comparison, gr_filtrations, gr_measure
from .weight_synth import Uniqueness, parse_filtration, rep_poset, synthesize_for_rep, verify_filtration

EXIT_OK, EXIT_INVALID, EXIT_NOT_GR, EXIT_UNSUPPORTED, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def fmt_q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_measure(values: Iterable[Fraction]) -> str:
    return ", ".join(fmt_q(v) for v in values)


def fmt_set(x: Iterable[str]) -> str:
    return "{" + ",".join(canonical(x)) + "}"


def fmt_filtration(stages: Iterable[Iterable[str]]) -> str:
    return " < ".join(fmt_set(s) for s in stages)


def _json_filtration(stages) -> list[list[str]]:
    return [list(canonical(s)) for s in stages]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grmeasure", description="GR measures and filtrations of thin quiver representations")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, quiver_required=True):
        p.add_argument("--quiver", type=Path, required=quiver_required, help="quiver file")
        p.add_argument("--rep", help="representation name (default: the only one, else the whole quiver)")
        p.add_argument("--weights", type=Path, help="file of 'w <vertex> <value>' overrides")
        p.add_argument("--json", action="store_true", help="JSON output")

    common(sub.add_parser("measure", help="GR measure and all GR filtrations"))
    p = sub.add_parser("synth", help="weights making a filtration the GR filtration")
    common(p)
    p.add_argument("--filtration", required=True, help="stages like '3 | 3,4,5 | 3,4,5,6'")
    p = sub.add_parser("verify", help="is a filtration GR under the given weights?")
    common(p)
    p.add_argument("--filtration", required=True)
    p = sub.add_parser("oracle", help="cross-check the greedy engine against exhaustive search")
    common(p, quiver_required=False)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--samples", type=int, default=50, help="random corpus size when --quiver is omitted")
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("d4check", help="sampled D4 comparison of N against N'")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    return parser


def _load(args) -> tuple[QuiverFile, ThinRep, dict[str, Fraction]]:
    qf = parse_quiver_file(args.quiver.read_text(encoding="utf-8"))
    weights = dict(qf.weights)
    if args.weights is not None:
        weights.update(parse_weight_lines(args.weights.read_text(encoding="utf-8"), qf.quiver))
    if args.rep is not None:
        if args.rep not in qf.reps:
            raise UsageError(f"no representation named {args.rep!r}")
        support = qf.reps[args.rep]
    elif len(qf.reps) == 1:
        support = next(iter(qf.reps.values()))
    elif not qf.reps:
        support = full_support(qf.quiver)
    else:
        raise UsageError("file declares several representations; pass --rep")
    return qf, ThinRep(qf.quiver, support), weights


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_measure(args) -> int:
    _, rep, weights = _load(args)
    measure = gr_measure(rep, weights)
    filtrations = gr_filtrations(rep, weights)
    lines = [f"measure: {fmt_measure(measure)}"] + [f"filtration: {fmt_filtration(f)}" for f in filtrations]
    _emit(args, lines, {
        "measure": [fmt_q(v) for v in measure],
        "filtrations": [_json_filtration(f) for f in filtrations],
    })
    return EXIT_OK


def cmd_synth(args) -> int:
    qf, rep, _ = _load(args)
    stages = parse_filtration(args.filtration)
    result = synthesize_for_rep(rep, stages)
    unique = result.unique is Uniqueness.UNIQUE
    vertices = sorted(qf.quiver.vertices)
    lines = [f"w {v} {fmt_q(result.weights[v])}" for v in vertices]
    lines += [f"l(S({v})) = {fmt_q(result.weights[v])}" for v in vertices]
    if not unique:
        lines += [f"max filtration: {fmt_filtration(f)}" for f in result.max_filtrations]
    lines.append(f"unique: {'yes' if unique else 'no'}")
    _emit(args, lines, {
        "weights": {v: fmt_q(result.weights[v]) for v in vertices},
        "stage_constants": [fmt_q(c) for c in result.stage_constants],
        "max_filtrations": [_json_filtration(f) for f in result.max_filtrations],
        "unique": unique,
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    _, rep, weights = _load(args)
    stages = parse_filtration(args.filtration)
    verdict = verify_filtration(rep_poset(rep), stages, weights)
    lines = [f"values: {fmt_measure(verdict.values)}", f"measure: {fmt_measure(verdict.measure)}"]
    lines.append(f"GR: {'yes' if verdict.is_gr else 'no'}")
    payload = {
        "values": [fmt_q(v) for v in verdict.values],
        "measure": [fmt_q(v) for v in verdict.measure],
        "gr": verdict.is_gr,
    }
    if not verdict.is_gr:
        lines.append(f"witness: {fmt_filtration(verdict.witness)}")
        payload["witness"] = _json_filtration(verdict.witness)
    _emit(args, lines, payload)
    return EXIT_OK if verdict.is_gr else EXIT_NOT_GR


def oracle_check(rep: ThinRep, weights) -> tuple[bool, tuple, tuple, int]:
    """Exhaustive measure and maximal filtrations versus the greedy engine."""
    poset = rep_poset(rep)
    lengths = weight_lengths(poset, weights)
    top = rep.vertices
    oracle = oracle_l_star(poset, lengths, top)
    greedy = gr_measure(rep, weights)
    expected = sorted(
        (f for f in all_filtrations(poset, top) if chain_values(lengths, f) == oracle),
        key=lambda f: tuple(canonical(x) for x in f),
    )
    found = gr_filtrations(rep, weights)
    return oracle == greedy and expected == found, oracle, greedy, len(found)


def cmd_oracle(args) -> int:
    if args.max_vertices < 1:
        raise UsageError("--max-vertices must be positive")
    if args.quiver is not None:
        _, rep, weights = _load(args)
        if len(rep.vertices) > args.max_vertices:
            raise UsageError(f"support has {len(rep.vertices)} vertices, bound is {args.max_vertices}")
        agree, oracle, greedy, count = oracle_check(rep, weights)
        lines = [
            f"oracle: {fmt_measure(oracle)}",
            f"greedy: {fmt_measure(greedy)}",
            f"filtrations: {count}",
            f"agree: {'yes' if agree else 'no'}",
        ]
        payload = {"oracle": [fmt_q(v) for v in oracle], "greedy": [fmt_q(v) for v in greedy],
                   "filtrations": count, "agree": agree}
    else:
        if args.samples < 1:
            raise UsageError("--samples must be at least 1")
        mismatches = 0
        for inst in random_corpus(args.seed, args.samples, min(args.max_vertices, 9)):
            mismatches += not oracle_check(inst.rep, inst.weights)[0]
        agree = mismatches == 0
        lines = [f"checked: {args.samples}", f"mismatches: {mismatches}"]
        payload = {"checked": args.samples, "mismatches": mismatches}
    _emit(args, lines, payload)
    return EXIT_OK if agree else EXIT_MISMATCH


def d4_sample_lengths(rng: random.Random) -> dict[str, Fraction]:
    return {v: Fraction(rng.randint(1, 1000), 100) for v in ("1", "2", "3", "4")}


def d4_violations(samples: int, seed: int) -> int:
    rng = random.Random(seed)
    return sum(not d4_limit_comparison(d4_sample_lengths(rng)).ok for _ in range(samples))


def cmd_d4check(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    violations = d4_violations(args.samples, args.seed)
    _emit(args, [f"samples: {args.samples}", f"violations: {violations}"],
          {"samples": args.samples, "violations": violations})
    return EXIT_OK if violations == 0 else EXIT_MISMATCH


COMMANDS = {
    "measure": cmd_measure,
    "synth": cmd_synth,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "d4check": cmd_d4check,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UnsupportedSupportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (GRError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
