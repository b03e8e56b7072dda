"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import csa
from .corpus import load_corpus, parse_word, run_corpus
from .deciders import classify, is_constant_space, is_z_limited
from .machine import MachineError, load_machine
from .measures import BudgetExceeded, ProfileOptions, asymptotic_report, compare_backends, profile, sigma_u
from .oracle import OracleBudget, explore

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(data, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _budget(args) -> OracleBudget:
    return OracleBudget(args.stack_cap, args.node_cap, args.input_cap)


def _load(args):
    try:
        return load_machine(args.machine)
    except OSError as exc:
        raise UsageError(f"cannot read {args.machine}: {exc.strerror}") from exc


def _want_json(args) -> bool:
    return args.json or getattr(args, "format", None) == "json"


def _nfa_json(nfa) -> dict:
    t = nfa.relabel()
    show = lambda a: None if a is None else (csa.render_store_word([a]))  # noqa: E731
    return {
        "alphabet": sorted(show(a) for a in t.alphabet),
        "initial": sorted(t.initial),
        "finals": sorted(t.finals),
        "edges": sorted(([s, show(a), d] for s, a, d in t.edges), key=lambda e: (e[0], e[1] or "", e[2])),
    }


def _render_words(nfa, max_length: int) -> list:
    return [csa.render_store_word(w) for w in nfa.words(max_length)]


# -- subcommands ------------------------------------------------------------------

def cmd_validate(args) -> int:
    m = _load(args)
    data = {
        "name": m.name,
        "class": m.declared_class,
        "states": len(m.states),
        "transitions": len(m.transitions),
        "valid": True,
    }
    _emit(data, _want_json(args), f"ok {m.name} {m.declared_class} states={len(m.states)} transitions={len(m.transitions)}")
    return EXIT_OK


def cmd_measure(args) -> int:
    m = _load(args)
    word = parse_word(args.word)
    use_oracle = args.oracle or not m.is_csa
    value = sigma_u(m, word, args.measure, _budget(args) if use_oracle else None)
    data = {
        "machine": m.name,
        "word": list(word),
        "measure": args.measure,
        "backend": "oracle" if use_oracle else "exact",
        "value": value.to_json(),
    }
    _emit(data, _want_json(args), value.text())
    return EXIT_OK


def _read_words(path: Optional[str]) -> Optional[list]:
    if path is None:
        return None
    words = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.append(() if line == "λ" else parse_word(line))
    return words


def cmd_profile(args) -> int:
    m = _load(args)
    options = ProfileOptions(enum_budget=args.enum_budget, oracle=_budget(args))
    words = _read_words(args.words_file)
    try:
        rows = profile(m, args.n_max, args.measure, options, words, n_min=args.n_min)
    except BudgetExceeded as exc:
        raise UsageError(f"{exc} (use --words-file)") from exc
    if _want_json(args):
        data = {"machine": m.name, "measure": args.measure, "rows": [r.to_json() for r in rows]}
        if args.fit:
            data["fit"] = asymptotic_report(rows).to_json()
        _emit(data, True, "")
        return EXIT_OK
    print("n,sigma,sigmaHat,witness")
    for r in rows:
        print(r.csv())
    if args.fit:
        rep = asymptotic_report(rows)
        lo, hi = rep.ratio_range
        print(f"# best fit {rep.best}, ratio range [{lo:.4f}, {hi:.4f}]", file=sys.stderr)
    return EXIT_OK


def cmd_store_lang(args) -> int:
    m = _load(args)
    nfa = csa.store_language(m, args.phases)
    return _emit_nfa(args, m, nfa)


def cmd_lwm(args) -> int:
    m = _load(args)
    nfa = csa.write_prefix_language(m)
    return _emit_nfa(args, m, nfa)


def _emit_nfa(args, m, nfa) -> int:
    finite = nfa.is_finite()
    if _want_json(args):
        data = {"machine": m.name, "finite": finite, "automaton": _nfa_json(nfa)}
        if args.list is not None:
            data["words"] = _render_words(nfa, args.list)
        _emit(data, True, "")
    elif args.format == "dot":
        print(nfa.to_dot(m.name), end="")
    elif args.list is not None:
        for w in _render_words(nfa, args.list):
            print(w if w else "λ")
    else:
        print(f"# {'finite' if finite else 'infinite'} language")
        print(nfa.to_text(), end="")
    return EXIT_OK


def cmd_decide_limited(args) -> int:
    m = _load(args)
    limited, ev = is_z_limited(m, args.measure)
    data = {"measure": args.measure, "limited": limited, "evidence": ev.to_json()}
    _emit(data, _want_json(args), "limited" if limited else "unlimited")
    return EXIT_OK


def cmd_decide_constant(args) -> int:
    m = _load(args)
    constant, ev = is_constant_space(m, args.measure)
    data = {"measure": args.measure, "constant": constant, "evidence": ev.to_json()}
    _emit(data, _want_json(args), "constant" if constant else "not-constant")
    return EXIT_OK


def cmd_classify(args) -> int:
    m = _load(args)
    verdict = classify(m, args.measure)
    _emit(verdict.to_json(), _want_json(args), verdict.verdict.lower())
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    m = _load(args)
    checked, bad = compare_backends(m, args.max_length, _budget(args))
    data = {
        "machine": m.name,
        "checked": checked,
        "discrepancies": [
            {"word": list(d.word), "measure": d.measure, "exact": d.analytic.to_json(), "oracle": d.oracle.to_json()}
            for d in bad
        ],
    }
    lines = [f"checked {checked} values, {len(bad)} discrepancies"]
    lines += [f"  {' '.join(d.word) or 'λ'} {d.measure}: exact {d.analytic.csv()} oracle {d.oracle.csv()}" for d in bad]
    _emit(data, _want_json(args), "\n".join(lines))
    return EXIT_FAILED if bad else EXIT_OK


def cmd_corpus_run(args) -> int:
    entries = load_corpus(args.dir)
    results = run_corpus(entries)
    failed = [r for r in results if not r.ok]
    data = {
        "checks": len(results),
        "failed": len(failed),
        "results": [{"entry": r.entry, "check": r.check, "ok": r.ok, "detail": r.detail} for r in results],
    }
    lines = [r.line() for r in results] + [f"{len(results) - len(failed)}/{len(results)} checks passed"]
    _emit(data, _want_json(args), "\n".join(lines))
    return EXIT_FAILED if failed else EXIT_OK


def cmd_oracle(args) -> int:
    m = _load(args)
    rep = explore(m, parse_word(args.word), _budget(args))
    data = {
        "accepted": rep.accepted,
        "weak": rep.weak.to_json(),
        "accept": rep.accept.to_json(),
        "strong": rep.strong.to_json(),
        "visited": rep.visited,
        "truncated": rep.truncated,
        "certificates": rep.certificates,
    }
    acc = {True: "accepted", False: "rejected", None: "unknown"}[rep.accepted]
    text = f"{acc} weak={rep.weak.csv()} accept={rep.accept.csv()} strong={rep.strong.csv()} visited={rep.visited}"
    _emit(data, _want_json(args), text)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stackspace", description="Space measures and deciders for stack automata.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, machine=True, measure=None, fmt=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        if machine:
            p.add_argument("machine", help="machine description file")
        if measure:
            p.add_argument("--measure", choices=measure, required=True)
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--stack-cap", type=_positive, default=12)
        p.add_argument("--node-cap", type=_positive, default=2_000_000)
        p.add_argument("--input-cap", type=_positive, default=6)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "parse and validate a machine")
    p = add("measure", cmd_measure, "space used on one word", measure=("weak", "accept", "strong"))
    p.add_argument("--word", required=True, help="input word (space-separated symbols or one symbol per character)")
    p.add_argument("--oracle", action="store_true", help="use the bounded search even for a CSA")
    p = add("profile", cmd_profile, "per-length maxima and envelope", measure=("weak", "accept", "strong"), fmt=("csv", "json"))
    p.add_argument("--n-max", type=_natural, required=True)
    p.add_argument("--n-min", type=_natural, default=0)
    p.add_argument("--enum-budget", type=_positive, default=50_000)
    p.add_argument("--words-file", help="evaluate only these words (one per line)")
    p.add_argument("--fit", action="store_true", help="add a shape fit of the envelope")
    p = add("store-lang", cmd_store_lang, "store language automaton", fmt=("text", "json", "dot"))
    p.add_argument("--phases", choices=("read", "all"), default="read")
    p.add_argument("--list", type=_natural, metavar="K", help="list member words up to length K")
    p = add("lwm", cmd_lwm, "input prefixes consumed by the write phase", fmt=("text", "json", "dot"))
    p.add_argument("--list", type=_natural, metavar="K", help="list member words up to length K")
    add("decide-limited", cmd_decide_limited, "is the machine z-limited", measure=("accept", "strong"))
    add("decide-constant", cmd_decide_constant, "does the machine use constant space", measure=("accept", "strong"))
    add("classify", cmd_classify, "unlimited / constant / linear", measure=("accept", "strong"))
    p = add("oracle-check", cmd_oracle_check, "compare exact analysis against the oracle")
    p.add_argument("--max-length", type=_natural, default=5)
    p = add("oracle", cmd_oracle, "run the bounded search on one word")
    p.add_argument("--word", required=True)
    p = add("corpus-run", cmd_corpus_run, "check all corpus expectations", machine=False)
    p.add_argument("--dir", help="corpus directory (default: bundled corpus)")
    return parser


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, MachineError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
