"""Stack automata: machine definition, text format, validation and step semantics.

A tape is stored as the pure stack content plus a head index ``h`` naming the
scanned cell of ``▷ γ ◁``: cell 0 is ``▷``, cells ``1..m`` hold ``γ`` and cell
``m + 1`` is ``◁``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

BOT = "▷"
TOP = "◁"
HEAD = "↰"
RESERVED = frozenset({BOT, TOP, HEAD, "_", "BOT", "TOP"})

WRITE_ACTIONS = frozenset({"wstay", "push", "pop"})
READ_ACTIONS = frozenset({"left", "rstay", "right"})
CLASSES = ("SA", "NESA", "CSA")


class MachineError(ValueError):
    pass


class MachineSyntaxError(MachineError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class MachineClassError(MachineError):
    """A machine violates the restrictions of its declared class."""


@dataclass(frozen=True, order=True)
class Transition:
    source: str
    symbol: Optional[str]  # None is λ
    top: str
    target: str
    action: str
    push: Optional[str] = None

    @property
    def is_write(self) -> bool:
        return self.action in WRITE_ACTIONS

    @property
    def is_lambda(self) -> bool:
        return self.symbol is None

    def sort_key(self):
        return (self.source, self.symbol or "", self.top, self.target, self.action, self.push or "")

    def __str__(self) -> str:
        sym = "_" if self.symbol is None else self.symbol
        top = {BOT: "BOT", TOP: "TOP"}.get(self.top, self.top)
        act = f"push {self.push}" if self.action == "push" else self.action
        return f"{self.source} , {sym} / {top} -> {self.target} {act}"


@dataclass(frozen=True)
class StackMachine:
    states: frozenset
    input_alphabet: frozenset
    stack_alphabet: frozenset
    transitions: tuple
    initial: str
    finals: frozenset
    declared_class: str = "SA"
    partition: Optional[dict] = field(default=None, compare=False, hash=False)
    name: str = "M"

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(sorted(set(self.transitions), key=Transition.sort_key)))

    @cached_property
    def by_state(self) -> dict:
        table: dict = {q: [] for q in self.states}
        for t in self.transitions:
            table[t.source].append(t)
        return table

    @cached_property
    def by_state_top(self) -> dict:
        table: dict = {}
        for t in self.transitions:
            table.setdefault((t.source, t.top), []).append(t)
        return table

    def moves(self, state: str, top: str) -> list:
        return self.by_state_top.get((state, top), [])

    @cached_property
    def write_states(self) -> frozenset:
        if self.partition is None:
            return frozenset()
        return frozenset(q for q, kind in self.partition.items() if kind == "w")

    @cached_property
    def read_states(self) -> frozenset:
        if self.partition is None:
            return frozenset()
        return frozenset(q for q, kind in self.partition.items() if kind == "r")

    @property
    def is_csa(self) -> bool:
        return self.declared_class == "CSA"

    @property
    def non_erasing(self) -> bool:
        return all(t.action != "pop" for t in self.transitions)

    def sorted_states(self) -> list:
        return sorted(self.states)

    def to_text(self) -> str:
        lines = [f"machine {self.declared_class} name={self.name}"]
        lines.append("input: " + " ".join(sorted(self.input_alphabet)))
        lines.append("stack: " + " ".join(sorted(self.stack_alphabet)))
        if self.partition:
            lines.append("states: " + " ".join(f"{q}/{self.partition[q]}" for q in self.sorted_states()))
        else:
            lines.append("states: " + " ".join(self.sorted_states()))
        lines.append(f"initial: {self.initial}")
        lines.append("final: " + " ".join(sorted(self.finals)))
        lines.extend(str(t) for t in self.transitions)
        return "\n".join(lines) + "\n"


def validate(m: StackMachine) -> StackMachine:
    if m.declared_class not in CLASSES:
        raise MachineClassError(f"unknown machine class {m.declared_class!r}")
    if m.initial not in m.states:
        raise MachineError(f"initial state {m.initial!r} is not a state")
    if not m.finals <= m.states:
        raise MachineError(f"final states {sorted(m.finals - m.states)} are not states")
    for sym in m.stack_alphabet | m.input_alphabet:
        if sym in RESERVED:
            raise MachineError(f"symbol {sym!r} is reserved")
    stack_syms = m.stack_alphabet | {BOT, TOP}
    for t in m.transitions:
        if t.source not in m.states or t.target not in m.states:
            raise MachineError(f"transition {t} references an unknown state")
        if t.symbol is not None and t.symbol not in m.input_alphabet:
            raise MachineError(f"transition {t} reads unknown input symbol {t.symbol!r}")
        if t.top not in stack_syms:
            raise MachineError(f"transition {t} scans unknown stack symbol {t.top!r}")
        if t.action not in WRITE_ACTIONS | READ_ACTIONS:
            raise MachineError(f"transition {t} has unknown action {t.action!r}")
        if t.action == "push" and t.push not in m.stack_alphabet:
            raise MachineError(f"transition {t} pushes unknown symbol {t.push!r}")
        if t.action == "pop" and t.top == BOT:
            raise MachineError(f"transition {t} pops the bottom marker")
    if m.declared_class in ("NESA", "CSA"):
        for t in m.transitions:
            if t.action == "pop":
                raise MachineClassError(f"{m.declared_class} may not pop: {t}")
    if m.partition is not None:
        if set(m.partition) != set(m.states) or not set(m.partition.values()) <= {"w", "r"}:
            raise MachineClassError("state partition must tag every state with /w or /r")
        for t in m.transitions:
            kind = m.partition[t.source]
            if kind == "w" and not t.is_write:
                raise MachineClassError(f"write state carries a read action: {t}")
            if kind == "r" and t.is_write:
                raise MachineClassError(f"read state carries a write action: {t}")
    if m.declared_class == "CSA":
        if m.partition is None:
            raise MachineClassError("CSA requires a state partition")
        if not m.finals <= m.read_states:
            raise MachineClassError(f"CSA final states must be read states: {sorted(m.finals - m.read_states)}")
        for t in m.transitions:
            if m.partition[t.source] == "r" and m.partition[t.target] == "w":
                raise MachineClassError(f"CSA transition from read to write state: {t}")
    return m


def make_machine(
    states: Iterable[str],
    input_alphabet: Iterable[str],
    stack_alphabet: Iterable[str],
    transitions: Iterable[Transition],
    initial: str,
    finals: Iterable[str],
    declared_class: str = "SA",
    partition: Optional[dict] = None,
    name: str = "M",
) -> StackMachine:
    return validate(
        StackMachine(
            frozenset(states),
            frozenset(input_alphabet),
            frozenset(stack_alphabet),
            tuple(transitions),
            initial,
            frozenset(finals),
            declared_class,
            dict(partition) if partition is not None else None,
            name,
        )
    )


# -- text format -------------------------------------------------------------

_HEADER = re.compile(r"^machine\s+(\S+)(?:\s+name=(\S+))?\s*$")
_FIELD = re.compile(r"^(input|stack|states|initial|final)\s*:\s*(.*)$")
_TRANS = re.compile(
    r"^(\S+)\s*,\s*(\S+)\s*/\s*(\S+)\s*->\s*(\S+)\s+(wstay|rstay|pop|left|right|push\s+(\S+))\s*$"
)


def parse_machine(text: str) -> StackMachine:
    """Parse and validate a machine description.

    Only whole lines starting with ``#`` are comments, so ``#`` remains usable
    as an alphabet symbol.
    """
    header = None
    fields: dict = {}
    transitions = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            match = _HEADER.match(line)
            if not match:
                raise MachineSyntaxError("expected 'machine <SA|NESA|CSA> name=<id>' header", lineno)
            if match.group(1) not in CLASSES:
                raise MachineSyntaxError(f"unknown machine class {match.group(1)!r}", lineno)
            header = (match.group(1), match.group(2) or "M")
            continue
        match = _FIELD.match(line)
        if match:
            key = match.group(1)
            if key in fields:
                raise MachineSyntaxError(f"duplicate field {key!r}", lineno)
            fields[key] = (match.group(2).split(), lineno)
            continue
        match = _TRANS.match(line)
        if not match:
            raise MachineSyntaxError(f"cannot parse line {line!r}", lineno)
        src, sym, top, dst, action, pushed = match.groups()
        if action.startswith("push"):
            action = "push"
        top = {"BOT": BOT, "TOP": TOP}.get(top, top)
        transitions.append(Transition(src, None if sym == "_" else sym, top, dst, action, pushed))
    if header is None:
        raise MachineSyntaxError("empty machine description")
    for key in ("input", "stack", "states", "initial"):
        if key not in fields:
            raise MachineSyntaxError(f"missing field {key!r}")
    states = []
    partition: dict = {}
    for tok in fields["states"][0]:
        name, _, kind = tok.partition("/")
        if kind and kind not in ("w", "r"):
            raise MachineSyntaxError(f"bad partition suffix in {tok!r}", fields["states"][1])
        states.append(name)
        if kind:
            partition[name] = kind
    if partition and len(partition) != len(states):
        raise MachineSyntaxError("either all states or none carry a /w or /r suffix", fields["states"][1])
    initial = fields["initial"][0]
    if len(initial) != 1:
        raise MachineSyntaxError("exactly one initial state expected", fields["initial"][1])
    return make_machine(
        states,
        fields["input"][0],
        fields["stack"][0],
        transitions,
        initial[0],
        fields.get("final", ([], 0))[0],
        header[0],
        partition or None,
        header[1],
    )


def load_machine(path) -> StackMachine:
    with open(path, encoding="utf-8") as fh:
        return parse_machine(fh.read())


# -- configurations ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TapeWord:
    stack: tuple
    head: int

    def __post_init__(self):
        if not 0 <= self.head <= len(self.stack) + 1:
            raise ValueError(f"head {self.head} outside tape of size {len(self.stack)}")

    @property
    def size(self) -> int:
        return len(self.stack)

    @property
    def at_top(self) -> bool:
        return self.head == len(self.stack)

    def scanned(self) -> str:
        if self.head == 0:
            return BOT
        if self.head == len(self.stack) + 1:
            return TOP
        return self.stack[self.head - 1]

    def cells(self) -> tuple:
        """The tape with markers and the head marker, e.g. ``▷ a ↰ b ◁``."""
        full = (BOT,) + self.stack + (TOP,)
        return full[: self.head + 1] + (HEAD,) + full[self.head + 1 :]

    def __str__(self) -> str:
        return "".join(self.cells())


EMPTY_TAPE = TapeWord((), 0)


@dataclass(frozen=True, order=True)
class Configuration:
    state: str
    index: int
    tape: TapeWord

    @property
    def stack_size(self) -> int:
        return self.tape.size


def initial_configuration(m: StackMachine) -> Configuration:
    return Configuration(m.initial, 0, EMPTY_TAPE)


def apply(t: Transition, c: Configuration, word: Sequence[str]) -> Optional[Configuration]:
    """Successor of ``c`` under ``t``, or None when the move is undefined."""
    tape = c.tape
    if tape.scanned() != t.top or t.source != c.state:
        return None
    index = c.index
    if t.symbol is not None:
        if index >= len(word) or word[index] != t.symbol:
            return None
        index += 1
    stack, head = tape.stack, tape.head
    if t.action in WRITE_ACTIONS:
        if not tape.at_top:
            return None
        if t.action == "push":
            return Configuration(t.target, index, TapeWord(stack + (t.push,), head + 1))
        if t.action == "pop":
            if head == 0:
                return None
            return Configuration(t.target, index, TapeWord(stack[:-1], head - 1))
        return Configuration(t.target, index, tape)
    if t.action == "left":
        if head == 0:
            return None
        return Configuration(t.target, index, TapeWord(stack, head - 1))
    if t.action == "right":
        if head == len(stack) + 1:
            return None
        return Configuration(t.target, index, TapeWord(stack, head + 1))
    return Configuration(t.target, index, tape)


def successors(m: StackMachine, c: Configuration, word: Sequence[str]) -> Iterator[tuple]:
    for t in m.moves(c.state, c.tape.scanned()):
        nxt = apply(t, c, word)
        if nxt is not None:
            yield t, nxt


def step(m: StackMachine, c: Configuration, word: Sequence[str]) -> set:
    return {nxt for _, nxt in successors(m, c, word)}


@dataclass(frozen=True)
class Computation:
    steps: tuple
    word: tuple
    finals: frozenset

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a computation has at least one configuration")

    @property
    def kind(self) -> str:
        last = self.steps[-1]
        if last.index < len(self.word):
            return "partial"
        return "accepting" if last.state in self.finals else "complete"

    @property
    def stack_size(self) -> int:
        return max(c.stack_size for c in self.steps)


# -- constructions -------------------------------------------------------------

def _fresh(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def partition_states(m: StackMachine) -> StackMachine:
    """Duplicate every state into a write copy and a read copy.

    Besides the two transition families, ``q0_w`` gets a λ ``wstay`` switch to
    ``q0_r`` so that the empty computation survives the split.
    """
    taken: set = set()
    wname = {q: _fresh(f"{q}_w", taken) for q in m.sorted_states()}
    rname = {q: _fresh(f"{q}_r", taken) for q in m.sorted_states()}
    trans = []
    for t in m.transitions:
        src = wname[t.source] if t.is_write else rname[t.source]
        for dst in (wname[t.target], rname[t.target]):
            trans.append(Transition(src, t.symbol, t.top, dst, t.action, t.push))
    for y in sorted(m.stack_alphabet) + [BOT]:
        trans.append(Transition(wname[m.initial], None, y, rname[m.initial], "wstay"))
    partition = {wname[q]: "w" for q in m.states} | {rname[q]: "r" for q in m.states}
    cls = "NESA" if m.declared_class == "CSA" else m.declared_class
    return make_machine(
        partition,
        m.input_alphabet,
        m.stack_alphabet,
        trans,
        wname[m.initial],
        {rname[q] for q in m.finals},
        cls,
        partition,
        m.name + "_part",
    )
