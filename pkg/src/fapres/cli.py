"""Command-line front end.

Exit codes: 0 success, 1 negative answer (non-member, false sentence),
2 usage error, 3 invalid presentation or malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import automata as fa
from .corpus.turing import MachineError
from .growth import growth_table, linear_bound
from .logic import FormulaError, compile_formula, free_vars, holds, parse
from .presentation import Presentation, PresentationError, validate_presentation
from .serialize import FormatError, dfa_to_json, dumps, load_presentation, presentation_to_json, to_dot
from .subalgebra import closure_language, induced_presentation, is_member
from .unary import UNARY, UnaryPresentation, compute_pumping_constant, lengths, normalize_injective, render_grid

OK, NEGATIVE, USAGE, INVALID = 0, 1, 2, 3

_TOKEN = re.compile(r"(.)(?:\^(\d+))?")


class UsageError(Exception):
    pass


def parse_word(text: str) -> tuple[str, ...]:
    """Word shorthand: 'a^3b' is aaab; '', 'eps' and 'ε' are the empty word."""
    text = text.strip()
    if text in ("", "eps", "ε"):
        return ()
    out: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        out.extend(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    return tuple(out)


def parse_words(text: str | None) -> list[tuple[str, ...]]:
    if text is None:
        raise UsageError("--generators is required")
    return [parse_word(w) for w in text.split(",")]


def show(w: Sequence[str]) -> str:
    if all(len(c) == 1 for c in w):
        return "".join(w)
    return " ".join(w)


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj))


def _load(args) -> Presentation:
    path = args.presentation or getattr(args, "file", None)
    if not path:
        raise UsageError("--presentation is required")
    return load_presentation(path)


def _unary(p: Presentation) -> UnaryPresentation:
    return UnaryPresentation.of(p)


def _maybe_dot(args, d: fa.Dfa) -> None:
    if getattr(args, "dot", None):
        Path(args.dot).write_text(to_dot(d), encoding="utf-8")


def cmd_validate(args) -> int:
    p = _load(args)
    report = validate_presentation(p)
    _emit(
        {
            "ok": report.ok,
            "injective": p.injective,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "witness": None if c.witness is None else [show(w) for w in c.witness],
                    "detail": c.detail,
                }
                for c in report.checks
            ],
        }
    )
    return OK if report.ok else INVALID


def cmd_query(args) -> int:
    p = _load(args)
    if not args.formula:
        raise UsageError("--formula is required")
    phi = parse(args.formula)
    if not free_vars(phi):
        val = holds(p, phi)
        sys.stdout.write("true\n" if val else "false\n")
        return OK if val else NEGATIVE
    order = args.order.split(",") if args.order else None
    c = compile_formula(p, phi, order)
    _maybe_dot(args, c.automaton)
    sample = fa.enumerate_tuples(c.automaton, args.n if args.n is not None else 3)
    _emit(
        {
            "variables": list(c.variables),
            "automaton": dfa_to_json(c.automaton),
            "sample": [[show(w) for w in t] for t in sample],
        }
    )
    return OK


def _language_summary(d: fa.Dfa) -> dict:
    ls = lengths(d)
    return {
        "threshold": ls.threshold,
        "period": ls.period,
        "head": sorted(ls.head),
        "cycle": sorted(ls.cycle),
        "finite": ls.finite,
    }


def cmd_subalg_lang(args) -> int:
    up = _unary(_load(args))
    L, trace = closure_language(up, parse_words(args.generators))
    if args.trace:
        Path(args.trace).write_text(dumps(trace.to_json()), encoding="utf-8")
    _maybe_dot(args, L)
    _emit({"D": up.D, "iterations": len(trace.steps), "lengths": _language_summary(L), "language": dfa_to_json(L)})
    return OK


def cmd_member(args) -> int:
    if args.word is None:
        raise UsageError("--word is required")
    up = _unary(_load(args))
    ans = is_member(up, parse_words(args.generators), parse_word(args.word))
    _emit({"member": ans})
    return OK if ans else NEGATIVE


def cmd_induced(args) -> int:
    up = _unary(_load(args))
    q = induced_presentation(up, parse_words(args.generators))
    _emit(presentation_to_json(q))
    return OK


def cmd_growth(args) -> int:
    p = _load(args)
    n = args.n if args.n is not None else 10
    gens = parse_words(args.generators)
    if p.alphabet == UNARY:
        lb = linear_bound(_unary(p), gens, n)
        table, out = lb.table, {"x": lb.x, "a": lb.a, "b": lb.b, "holds": lb.holds}
    else:
        table, out = growth_table(p, gens, n), {}
    rows = table.rows()
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "g", "bound"])
            for i, g, b in rows:
                w.writerow([i, g, "" if b is None else b])
    out["g"] = [g for _, g, _ in rows]
    _emit(out)
    return OK if out.get("holds", True) else NEGATIVE


def cmd_pump_const(args) -> int:
    _emit({"D": compute_pumping_constant(_load(args))})
    return OK


def cmd_normalize(args) -> int:
    up = normalize_injective(_load(args))
    _emit({"D": up.D, "presentation": presentation_to_json(up.presentation)})
    return OK


def cmd_render_grid(args) -> int:
    if args.D is None:
        D = compute_pumping_constant(_load(args))
    else:
        D = args.D
    if D < 1:
        raise UsageError("--D must be positive")
    sys.stdout.write(render_grid(parse_words(args.words), D, args.width) + "\n")
    return OK


def _corpus_builders() -> dict[str, Callable[[], Presentation]]:
    from . import corpus

    unary = lambda f: (lambda: f().presentation)  # noqa: E731
    return {
        "nat-succ": unary(corpus.build_nat_succ),
        "plus-two": unary(corpus.build_plus_two),
        "identity": unary(corpus.build_identity),
        "max": unary(corpus.build_max),
        "bounce": unary(corpus.build_bounce),
        "even-succ": corpus.build_even_succ,
        "example-x": corpus.build_example_X,
        "example-x-prime": corpus.build_example_X_prime,
    }


def cmd_corpus(args) -> int:
    from .corpus import bfs_closure, build_example_X, build_example_X_prime, check_square_tm, tm_from_json

    builders = _corpus_builders()
    if args.action == "emit":
        if args.name not in builders:
            raise UsageError(f"unknown corpus entry {args.name!r}; choose from {sorted(builders)}")
        if args.tm:
            if args.name not in ("example-x", "example-x-prime"):
                raise UsageError("--tm applies to example-x and example-x-prime")
            tm = tm_from_json(json.loads(Path(args.tm).read_text(encoding="utf-8")))
            check_square_tm(tm)
            build = build_example_X if args.name == "example-x" else build_example_X_prime
            p = build(tm)
        else:
            p = builders[args.name]()
        text = dumps(presentation_to_json(p))
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return OK
    if args.presentation:
        p = load_presentation(args.presentation)
    elif args.name in builders:
        p = builders[args.name]()
    else:
        raise UsageError("oracle needs --presentation or a corpus name")
    if args.generators is None and args.name in ("example-x", "example-x-prime"):
        from .corpus import g0_word

        gens = [g0_word()]
    else:
        gens = parse_words(args.generators)
    ops = args.operations.split(",") if args.operations else None
    words = bfs_closure(p, gens, args.depth if args.depth is not None else 5, ops)
    key = fa.length_lex_key(p.alphabet)
    _emit({"count": len(words), "words": [show(w) for w in sorted(words, key=key)]})
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fapres", description="Automatic presentations of algebras.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def verb(name: str, fn, help: str, **flags) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        sp.add_argument("--presentation", help="presentation JSON file")
        if name != "corpus":
            sp.add_argument("file", nargs="?", help="presentation JSON file (same as --presentation)")
        for flag, kw in flags.items():
            sp.add_argument("--" + flag.replace("_", "-"), **kw)
        return sp

    gens = dict(help="comma-separated words; a^n shorthand allowed")
    verb("validate", cmd_validate, "check the presentation conditions")
    verb("query", cmd_query, "evaluate or compile a first-order formula",
         formula=dict(help="s-expression formula"), order=dict(help="free variable order, comma-separated"),
         n=dict(type=int, help="sample length"), dot=dict(help="write the automaton as DOT"))
    verb("subalg-lang", cmd_subalg_lang, "language of a generated subalgebra",
         generators=gens, trace=dict(help="write the iteration trace as JSON"), dot=dict(help="write DOT"))
    verb("member", cmd_member, "membership in a generated subalgebra", generators=gens, word=dict(help="word"))
    verb("induced", cmd_induced, "presentation of a generated subalgebra", generators=gens)
    verb("growth", cmd_growth, "growth levels g(0..n)", generators=gens,
         n=dict(type=int, help="last level"), csv=dict(help="write n,g,bound rows"))
    verb("pump-const", cmd_pump_const, "pumping constant D of a unary presentation")
    verb("normalize", cmd_normalize, "injective normal form of a unary presentation")
    verb("render-grid", cmd_render_grid, "draw a tuple of unary words in the grid",
         words=dict(required=True, help="comma-separated unary words"), D=dict(type=int, help="rows"),
         width=dict(type=int, help="columns drawn"))
    sp = verb("corpus", cmd_corpus, "built-in presentations and the BFS oracle",
              generators=gens, depth=dict(type=int, help="BFS rounds"), out=dict(help="output file"),
              operations=dict(help="restrict BFS to these operations"),
              tm=dict(help="Turing machine JSON for example-x"))
    sp.add_argument("action", choices=["emit", "oracle"])
    sp.add_argument("name", nargs="?", default=None)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.fn(args)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE
    except FormatError as e:
        sys.stderr.write(f"format error: {e}\n")
        return INVALID
    except FormulaError as e:
        sys.stderr.write(f"formula error: {e}\n")
        return USAGE
    except (PresentationError, fa.AutomatonError, MachineError) as e:
        sys.stderr.write(f"invalid: {e}\n")
        return INVALID
    except json.JSONDecodeError as e:
        sys.stderr.write(f"format error: line {e.lineno} column {e.colno}: {e.msg}\n")
        return INVALID
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
