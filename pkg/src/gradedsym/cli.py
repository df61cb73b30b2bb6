"""Command-line front end.

    gradedsym relations   --flux 3 2
    gradedsym partitions  --flux 3 1 --admissible-only
    gradedsym normal-form --flux 3 1 "T2 T1"
    gradedsym verify      --model model.json --suite all --json

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import defaultdict

from .algebra import (
    EnumerationLimitError,
    Generator,
    GradedAlgebra,
    format_word,
    new_flux_algebra,
    new_graded_algebra,
)
from .bicharacter import (
    Bicharacter,
    CommutationTable,
    flux_bicharacter,
    single_particle_basis,
    verify_bicharacter,
    verify_normalized,
    verify_ybe,
)
from .phase import CycInt, Phase

SUITES = ("bicharacter", "normalized", "ybe", "graded-comm")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class WordParseError(UsageError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


# -- model loading --------------------------------------------------------------


class Model:
    """A parsed model spec: the commutation factor plus (lazily) its algebra."""

    def __init__(self, eps, *, flux=None, nilpotent=None):
        self.eps = eps
        self.flux = flux  # (N, n) for the flux model
        self.nilpotent = nilpotent
        self._algebra = None

    @property
    def algebra(self) -> GradedAlgebra:
        if self._algebra is None:
            if self.flux is not None:
                self._algebra = new_flux_algebra(*self.flux)
            else:
                self._algebra = new_graded_algebra(self.eps, nilpotent=self.nilpotent)
        return self._algebra

    def to_json(self) -> dict:
        if self.flux is not None:
            return {"kind": "flux", "N": self.flux[0], "n": self.flux[1]}
        data = {"kind": "custom", **self.eps.to_json()}
        if self.nilpotent is not None:
            data["nilpotent"] = self.nilpotent
        return data


def model_from_json(data: dict) -> Model:
    kind = data.get("kind", "custom")
    if kind == "flux":
        N, n = int(data["N"]), int(data.get("n", 1))
        if N < 1 or n < 1:
            raise ValueError(f"need N >= 1 and n >= 1, got N={N}, n={n}")
        return Model(flux_bicharacter(N), flux=(N, n))
    if kind != "custom":
        raise ValueError(f"unknown model kind {kind!r}")
    eps = Bicharacter.from_json(data)
    if data.get("overrides"):
        eps = CommutationTable(
            eps,
            {
                (tuple(o["a"]), tuple(o["b"])): Phase.parse(o["value"])
                for o in data["overrides"]
            },
        )
    return Model(eps, nilpotent=data.get("nilpotent"))


def load_model(args) -> Model:
    if args.flux is not None:
        return model_from_json({"kind": "flux", "N": args.flux[0], "n": args.flux[1]})
    with open(args.model) as fh:
        return model_from_json(json.load(fh))


# -- word parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"T(\d+)(?:\^(\d+))?")


def parse_word(text: str, ctx: GradedAlgebra) -> list[Generator]:
    """Parse ``"T2 T1"`` / ``"T2^1 T1^2"``; columns in errors are 1-based."""
    word = []
    for m in re.finditer(r"\S+", text):
        tok, col = m.group(), m.start() + 1
        parsed = _TOKEN.fullmatch(tok)
        if parsed is None:
            raise WordParseError(f"cannot parse token {tok!r}", col)
        flux = int(parsed.group(1))
        particle = int(parsed.group(2)) if parsed.group(2) else 1
        try:
            word.append(ctx.gen(flux, particle))
        except KeyError:
            raise WordParseError(f"unknown generator {tok!r}", col) from None
    return word


# -- commands ------------------------------------------------------------------------


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def cmd_relations(args, model: Model) -> int:
    ctx = model.algebra
    n = ctx.n
    groups = defaultdict(list)
    for rel in ctx.relations():
        groups[rel.group].append(rel)
    lines = []
    if ctx.flux_model:
        lines.append(f"flux model N={ctx.N} n={n}, filling factor v={ctx.filling_factor()}")
    for group in ("i != j", "a = b, i != j", "a != b, i != j", "i = j, a != b"):
        if group not in groups:
            continue
        lines.append(f"[{group}]")
        for rel in groups[group]:
            x, y = rel.left.label(n), rel.right.label(n)
            verb = {"+1": "commute", "-1": "anticommute"}.get(rel.phase.pretty(), "braid")
            lines.append(f"  {x} {y} = {rel.phase.pretty()} {y} {x}    ({verb})")
    nil = [g for g in ctx.generators if ctx.is_nilpotent(g)]
    if nil:
        lines.append("[nilpotent]")
        lines.extend(f"  ({g.label(n)})^2 = 0" for g in nil)
    payload = {
        "model": model.to_json(),
        "relations": [
            {
                "left": r.left.label(n),
                "right": r.right.label(n),
                "phase": str(r.phase),
                "group": r.group,
            }
            for r in ctx.relations()
        ],
        "nilpotent": [g.label(n) for g in nil],
    }
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_partitions(args, model: Model) -> int:
    ctx = model.algebra
    parts = ctx.enumerate_partitions(
        admissible_only=args.admissible_only,
        degree=args.degree,
        max_degree=args.max_degree,
        force=args.force,
    )
    n = ctx.n
    admissible = sum(p.admissible for p in parts)
    lines = [f"{'word':<40} {'qp':>3} {'qh':>3}  admissible"]
    for p in parts:
        word = format_word(p.monomial.word, n)
        lines.append(
            f"{word:<40} {p.quasiparticles:>3} {p.quasiholes:>3}  {'yes' if p.admissible else 'no'}"
        )
    lines.append(f"{len(parts)} partitions, {admissible} admissible")
    payload = {
        "model": model.to_json(),
        "partitions": [p.to_json(n) for p in parts],
        "count": len(parts),
        "admissible": admissible,
    }
    _emit(args, payload, lines)
    return EXIT_OK


def _coeff_text(c) -> str:
    if isinstance(c, int):
        return f"{c:+d}"
    return f"({c})"


def cmd_normal_form(args, model: Model) -> int:
    ctx = model.algebra
    word = parse_word(args.word, ctx)
    m = ctx.normal_form(word)
    if m is None:
        text = "0"
        payload = {"input": args.word, "zero": True, "coeff": 0, "word": []}
    else:
        text = f"{_coeff_text(m.coeff)} · {format_word(m.word, ctx.n, 'token')}"
        payload = {
            "input": args.word,
            "zero": False,
            "coeff": m.coeff.to_json() if isinstance(m.coeff, CycInt) else m.coeff,
            "word": [g.token(ctx.n) for g in m.word],
        }
    _emit(args, payload, [text])
    return EXIT_OK


def run_suites(model: Model, suites, seed: int) -> dict:
    eps = model.eps
    reports = {}
    for suite in suites:
        if suite == "bicharacter":
            reports[suite] = verify_bicharacter(eps, seed=seed).to_json()
        elif suite == "normalized":
            reports[suite] = verify_normalized(eps, seed=seed).to_json()
        elif suite == "ybe":
            reports[suite] = verify_ybe(eps, single_particle_basis(eps.spec)).to_json()
        elif suite == "graded-comm":
            try:
                ctx = model.algebra
            except ValueError as exc:
                reports[suite] = {"pass": False, "checked": 0, "error": str(exc), "witnesses": []}
                continue
            if ctx.n != 1:
                reports[suite] = {
                    "pass": True,
                    "checked": 0,
                    "skipped": "relations depend on particle index when n > 1",
                    "witnesses": [],
                }
                continue
            reports[suite] = ctx.verify_graded_commutativity().to_json()
    return reports


def cmd_verify(args, model: Model) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = run_suites(model, suites, args.seed)
    passed = all(r["pass"] for r in reports.values())
    lines = []
    for name, r in reports.items():
        status = "PASS" if r["pass"] else "FAIL"
        note = f" (skipped: {r['skipped']})" if "skipped" in r else ""
        note += f" (error: {r['error']})" if "error" in r else ""
        lines.append(f"{name:<12} {status}  checked={r['checked']}{note}")
        for w in r["witnesses"]:
            lines.append(f"    witness: {json.dumps(w)}")
    lines.append("PASS" if passed else "FAIL")
    payload = {"model": model.to_json(), "seed": args.seed, "pass": passed, "suites": reports}
    _emit(args, payload, lines)
    return EXIT_OK if passed else EXIT_FAIL


# -- entry point -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--flux", nargs=2, type=int, metavar=("N", "n"), help="flux model, n particles per N fluxes")
    src.add_argument("--model", metavar="FILE", help="model spec JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="gradedsym", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("relations", parents=[common], help="print the generator relations")

    p = sub.add_parser("partitions", parents=[common], help="enumerate quasiparticle partitions")
    p.add_argument("--admissible-only", action="store_true")
    deg = p.add_mutually_exclusive_group()
    deg.add_argument("--degree", type=int, metavar="K", help="only partitions with exactly K generators")
    deg.add_argument("--max-degree", type=int, metavar="K", help="only partitions with at most K generators")
    p.add_argument("--force", action="store_true", help="allow more than 2^20 candidates")

    p = sub.add_parser("normal-form", parents=[common], help="reduce a word to normal form")
    p.add_argument("word", help='generator word such as "T2 T1" or "T2^1 T1^2"')

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {
    "relations": cmd_relations,
    "partitions": cmd_partitions,
    "normal-form": cmd_normal_form,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        model = load_model(args)
        return COMMANDS[args.command](args, model)
    except (UsageError, ValueError, KeyError, OSError, EnumerationLimitError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"gradedsym {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
