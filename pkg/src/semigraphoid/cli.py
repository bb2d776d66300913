"""Statement files and the ``semigraphoid`` command line.

File format, one declaration or statement per line, ``#`` starts a comment::

    vars A,B,C,D
    indep A ; B | C       # ordinary statement
    stable A ; B,D        # stable statement, empty conditioning set

Exit codes: 0 success, 1 parse or usage error, 2 guard or budget exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .complexity import DEFAULT_BUDGET, complexity_report
from .core import DEFAULT_MAX_VARS, Flavor, Relation, Triplet, Universe
from .dominance import O, maximal_elements
from .engine import ClosureReport, MixedRepresentation, expansion, hybrid_closure, pre_expand_stable, studeny_report
from .errors import InvalidTriplet, OverlappingSets, ParseError, SemigraphoidError, UniverseTooLarge
from .oracle import sem_closure_bruteforce, stab_closure_bruteforce, stable_part

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_VERIFY_FAIL = 3

_RESERVED = set(",;|#")


def _parse_set(text: str, universe: Universe, lineno: int, what: str) -> int:
    names = [tok.strip() for tok in text.split(",")]
    if any(not name for name in names):
        raise ParseError(lineno, f"empty identifier in {what} set {text.strip()!r}")
    mask = 0
    for name in names:
        try:
            bit = 1 << universe.index(name)
        except KeyError:
            raise ParseError(lineno, f"unknown identifier {name!r}") from None
        if mask & bit:
            raise ParseError(lineno, f"identifier {name!r} repeated in {what} set")
        mask |= bit
    return mask


def parse_statements(text: str) -> MixedRepresentation:
    """Parse a statement file into stable and ordinary generators."""
    universe = None
    entries: list[tuple[str, Triplet]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "vars":
            if universe is not None:
                raise ParseError(lineno, "duplicate 'vars' declaration")
            names = [tok.strip() for tok in rest.split(",")]
            if not rest or any(not name for name in names):
                raise ParseError(lineno, "'vars' needs a comma-separated list of identifiers")
            for name in names:
                if _RESERVED & set(name) or any(ch.isspace() for ch in name):
                    raise ParseError(lineno, f"invalid identifier {name!r}")
            try:
                universe = Universe(names)
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif keyword in ("indep", "stable"):
            if universe is None:
                raise ParseError(lineno, "statement before 'vars' declaration")
            sides, bar, cond = rest.partition("|")
            left, semi, right = sides.partition(";")
            if not semi:
                raise ParseError(lineno, "expected '<set> ; <set> [| <set>]'")
            if bar and not cond.strip():
                raise ParseError(lineno, "empty conditioning set after '|'")
            if not left.strip() or not right.strip():
                raise ParseError(lineno, "empty side: both independent sets must be non-empty")
            a = _parse_set(left, universe, lineno, "first")
            b = _parse_set(right, universe, lineno, "second")
            c = _parse_set(cond, universe, lineno, "conditioning") if bar else 0
            flavor = Flavor.STABLE if keyword == "stable" else Flavor.ORDINARY
            try:
                entries.append((keyword, Triplet(a, b, c, flavor)))
            except InvalidTriplet as exc:
                kind = "overlap" if isinstance(exc, OverlappingSets) else "empty side"
                raise ParseError(lineno, f"{kind}: {exc}") from None
        else:
            raise ParseError(lineno, f"unknown keyword {keyword!r}")
    if universe is None:
        raise ParseError(0, "missing 'vars' declaration")
    stable = [t for kind, t in entries if kind == "stable"]
    ordinary = [t for kind, t in entries if kind == "indep"]
    return MixedRepresentation.build(universe, stable, ordinary)


def format_triplet(universe: Universe, t: Triplet) -> str:
    keyword = "stable" if t.flavor is Flavor.STABLE else "indep"
    a, b, c = t.key
    body = f"{','.join(universe.names_of(a))} ; {','.join(universe.names_of(b))}"
    if c:
        body += f" | {','.join(universe.names_of(c))}"
    return f"{keyword} {body}"


def statement_lines(rep: MixedRepresentation) -> list[str]:
    """``stable`` lines then ``indep`` lines, each in canonical sorted order."""
    u = rep.universe
    return ([format_triplet(u, t.with_flavor(Flavor.STABLE)) for t in rep.ms.sorted()]
            + [format_triplet(u, t.with_flavor(Flavor.ORDINARY)) for t in rep.mu.sorted()])


def format_statements(rep: MixedRepresentation) -> str:
    """Serialize back to the statement-file format (including ``vars``)."""
    lines = ["vars " + ",".join(rep.universe.names), *statement_lines(rep)]
    return "\n".join(lines) + "\n"


def _json_statement(universe: Universe, t: Triplet) -> dict:
    a, b, c = t.key
    return {"a": universe.names_of(a), "b": universe.names_of(b), "c": universe.names_of(c)}


def to_json(rep: MixedRepresentation, report=None) -> str:
    u = rep.universe
    doc = {
        "universe": list(u.names),
        "stable": [_json_statement(u, t) for t in rep.ms.sorted()],
        "indep": [_json_statement(u, t) for t in rep.mu.sorted()],
    }
    if report is not None:
        doc["report"] = report.as_dict()
    return json.dumps(doc, indent=2, sort_keys=True)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semigraphoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    close = sub.add_parser("close", help="compute a compact representation of the closure")
    close.add_argument("file")
    close.add_argument("--algorithm", choices=("hybrid", "star", "brute"), default="hybrid")
    close.add_argument("--step4", action="store_true", help="enable stable-statement promotion")
    close.add_argument("--format", choices=("text", "json"), default="text")
    close.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)

    oracle = sub.add_parser("oracle", help="list the full brute-force closure")
    oracle.add_argument("file")
    oracle.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)

    part = sub.add_parser("stable-part", help="stable part of the brute-force closure")
    part.add_argument("file")
    part.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)

    comp = sub.add_parser("complexity", help="representation complexity report")
    comp.add_argument("file")
    comp.add_argument("--exact", action="store_true")
    comp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    comp.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)

    verify = sub.add_parser("verify", help="check the hybrid closure against the oracle")
    verify.add_argument("file")
    verify.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
    return parser


def brute_closure(rep: MixedRepresentation, max_vars: int | None = None) -> Relation:
    """sem(stab(ms) | mu), computed by fixpoint iteration."""
    seeds = pre_expand_stable(rep, max_vars=max_vars)
    return sem_closure_bruteforce(seeds, max_vars=max_vars)


def _read(path: str) -> MixedRepresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_statements(fh.read())


def _require_statements(rep: MixedRepresentation) -> None:
    if not len(rep.ms) and not len(rep.mu):
        raise _UsageError("the statement file contains no statements")


def _cmd_close(args, out) -> int:
    rep = _read(args.file)
    _require_statements(rep)
    u = rep.universe
    if args.algorithm == "hybrid":
        result, report = hybrid_closure(rep, step4=args.step4)
    elif args.algorithm == "star":
        u.check_guard(args.max_vars)
        d, report = studeny_report(pre_expand_stable(rep, max_vars=args.max_vars))
        result = MixedRepresentation(Relation(u), d, u)
    else:
        started = time.perf_counter()
        closed = brute_closure(rep, args.max_vars)
        d = maximal_elements(closed, O)
        result = MixedRepresentation(Relation(u), d, u)
        report = ClosureReport(1, 0, len(d), oracle_checked=True, elapsed=time.perf_counter() - started)
    if args.format == "json":
        print(to_json(result, report), file=out)
    else:
        for line in statement_lines(result):
            print(line, file=out)
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    rep = _read(args.file)
    closed = brute_closure(rep, args.max_vars)
    for t in closed.sorted():
        print(format_triplet(rep.universe, t.with_flavor(Flavor.ORDINARY)), file=out)
    return EXIT_OK


def _cmd_stable_part(args, out) -> int:
    rep = _read(args.file)
    closed = brute_closure(rep, args.max_vars)
    for t in stable_part(closed).sorted():
        print(format_triplet(rep.universe, t), file=out)
    return EXIT_OK


def _cmd_complexity(args, out) -> int:
    rep = _read(args.file)
    closed = brute_closure(rep, args.max_vars)
    report = complexity_report(closed, exact=args.exact, budget=args.budget, max_vars=args.max_vars)
    for key, value in report.as_dict().items():
        if value is None and not args.exact:
            continue
        print(f"{key}: {'none' if value is None else str(value).lower()}", file=out)
    return EXIT_GUARD if report.budget_exhausted else EXIT_OK


def _cmd_verify(args, out) -> int:
    rep = _read(args.file)
    _require_statements(rep)
    rep.universe.check_guard(args.max_vars)
    result, _ = hybrid_closure(rep)
    got = expansion(result, max_vars=args.max_vars)
    truth = brute_closure(rep, args.max_vars)
    u = rep.universe
    if got == truth:
        print(f"PASS ({len(result.ms)} stable + {len(result.mu)} indep generate {len(truth)} statements)",
              file=out)
        return EXIT_OK
    extra = (got - truth).sorted()
    missing = (truth - got).sorted()
    if missing:
        witness = f"missing {format_triplet(u, missing[0].with_flavor(Flavor.ORDINARY))}"
    else:
        witness = f"unsound {format_triplet(u, extra[0].with_flavor(Flavor.ORDINARY))}"
    print(f"FAIL {witness}", file=out)
    return EXIT_VERIFY_FAIL


_COMMANDS = {
    "close": _cmd_close,
    "oracle": _cmd_oracle,
    "stable-part": _cmd_stable_part,
    "complexity": _cmd_complexity,
    "verify": _cmd_verify,
}


def run_command(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(f"semigraphoid: error: {exc}", file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"semigraphoid: parse error: {exc}", file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"semigraphoid: {exc}", file=err)
        return EXIT_USAGE
    except UniverseTooLarge as exc:
        print(f"semigraphoid: {exc}", file=err)
        return EXIT_GUARD
    except SemigraphoidError as exc:
        print(f"semigraphoid: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run_command())
