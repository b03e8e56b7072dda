"""Bundled example machines and their expected properties."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import csa
from .deciders import classify, is_constant_space, is_z_limited
from .machine import StackMachine, load_machine
from .measures import sigma_u
from .oracle import OracleBudget, explore
from .values import parse_value

CORPUS_DIR = Path(__file__).resolve().parent / "corpus"


class CorpusError(ValueError):
    pass


def parse_word(text: str) -> tuple:
    """Whitespace-separated symbols if there is whitespace, otherwise one symbol per character."""
    text = text.strip()
    if any(ch.isspace() for ch in text):
        return tuple(text.split())
    return tuple(text)


@dataclass
class CorpusEntry:
    name: str
    path: Path
    machine: StackMachine
    expected: dict
    note: str = ""

    @property
    def stack_cap(self) -> int:
        return int(self.expected.get("stack_cap", 12))


@dataclass
class CheckResult:
    entry: str
    check: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.entry}: {self.check}{extra}"


_KNOWN_KEYS = {"class", "note", "stack_cap", "classify", "limited", "constant", "measures", "language", "sqrt_window"}


def load_entry(path: Path) -> CorpusEntry:
    machine = load_machine(path)
    expect_path = path.with_suffix(".expect.json")
    expected = json.loads(expect_path.read_text(encoding="utf-8")) if expect_path.exists() else {}
    unknown = set(expected) - _KNOWN_KEYS
    if unknown:
        raise CorpusError(f"{expect_path.name}: unknown keys {sorted(unknown)}")
    declared = expected.get("class")
    if declared is not None and declared != machine.declared_class:
        raise CorpusError(f"{path.name}: expected class {declared}, file declares {machine.declared_class}")
    if not machine.is_csa and any(k in expected for k in ("classify", "limited", "constant")):
        raise CorpusError(f"{path.name}: decider expectations need a CSA")
    return CorpusEntry(path.stem, path, machine, expected, expected.get("note", ""))


def load_corpus(directory: Optional[Path] = None) -> list:
    directory = CORPUS_DIR if directory is None else Path(directory)
    return [load_entry(p) for p in sorted(directory.glob("*.sam"))]


def corpus_machine(name: str) -> StackMachine:
    return load_machine(CORPUS_DIR / f"{name}.sam")


def pref_window(n: int) -> tuple:
    """Bounds on the stack used for length-n members of the block-prefix language."""
    return max(0, math.ceil(math.sqrt(n / 2)) - 2), math.floor(2 * math.sqrt(n)) + 1


def pref_member(n: int) -> tuple:
    """The unique length-n prefix of a b a a b a a a b ..."""
    out = []
    k = 1
    while len(out) < n:
        out.extend(["a"] * k + ["b"])
        k += 1
    return tuple(out[:n])


def _accepts(entry: CorpusEntry, word: tuple) -> Optional[bool]:
    m = entry.machine
    if m.is_csa:
        return not csa.accepting_stack_set(m, word).nfa.is_empty()
    return explore(m, word, OracleBudget(stack_cap=entry.stack_cap)).accepted


def run_entry(entry: CorpusEntry) -> list:
    """Execute every expectation of one entry."""
    m = entry.machine
    exp = entry.expected
    results = []

    def record(check: str, ok: bool, detail: str = ""):
        results.append(CheckResult(entry.name, check, bool(ok), detail))

    if "class" in exp:
        record("class", exp["class"] == m.declared_class, m.declared_class)
    for z, want in sorted(exp.get("classify", {}).items()):
        got = classify(m, z).verdict
        record(f"classify {z}", got == want, f"got {got}, want {want}")
    for z, want in sorted(exp.get("limited", {}).items()):
        got, _ = is_z_limited(m, z)
        record(f"limited {z}", got == want, f"got {got}, want {want}")
    for z, want in sorted(exp.get("constant", {}).items()):
        got, _ = is_constant_space(m, z)
        record(f"constant {z}", got == want, f"got {got}, want {want}")
    budget = None if m.is_csa else OracleBudget(stack_cap=entry.stack_cap)
    for item in exp.get("measures", []):
        word = parse_word(item["word"])
        for z in ("weak", "accept", "strong"):
            if z in item:
                got = sigma_u(m, word, z, budget)
                want = parse_value(str(item[z]))
                record(f"{z} on {item['word'] or 'λ'}", got == want, f"got {got.csv()}, want {want.csv()}")
    lang = exp.get("language", {})
    for text in lang.get("members", []):
        record(f"accepts {text or 'λ'}", _accepts(entry, parse_word(text)) is True)
    for text in lang.get("nonmembers", []):
        record(f"rejects {text or 'λ'}", _accepts(entry, parse_word(text)) is False)
    if "sqrt_window" in exp:
        n_max = int(exp["sqrt_window"]["n_max"])
        bad = []
        for n in range(n_max + 1):
            word = pref_member(n)
            budget_n = OracleBudget(stack_cap=pref_window(n)[1] + 1)
            rep = explore(m, word, budget_n)
            lo, hi = pref_window(n)
            for z in ("weak", "accept", "strong"):
                v = rep.measure(z)
                if not v.is_finite or not lo <= v.k <= hi:
                    bad.append(f"n={n} {z}={v.csv()}")
        record(f"sqrt window n<={n_max}", not bad, "; ".join(bad[:3]))
    return results


def run_corpus(entries: Optional[list] = None) -> list:
    entries = load_corpus() if entries is None else entries
    out = []
    for entry in entries:
        out.extend(run_entry(entry))
    return out
