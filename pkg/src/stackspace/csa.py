"""Exact regular-language analyses for checking stack automata."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .machine import BOT, HEAD, TOP, MachineClassError, StackMachine
from .nfa import LEFT_END, RIGHT_END, Nfa, TwoWayNfa

_MOVE = {"left": "L", "rstay": "S", "right": "R"}
_CELL = {BOT: LEFT_END, TOP: RIGHT_END}


@dataclass(frozen=True, order=True)
class StateSym:
    """A state used as a letter of a store word."""

    state: str

    def __str__(self) -> str:
        return self.state


@dataclass(frozen=True)
class StackSet:
    nfa: Nfa
    tag: str  # accepting | reachable | final
    word: Optional[tuple] = None

    def contains(self, stack: Sequence[str]) -> bool:
        return self.nfa.accepts(tuple(stack))

    def members(self, max_length: int) -> list:
        return list(self.nfa.words(max_length))

    def min_size(self) -> Optional[int]:
        return self.nfa.min_word_length()

    def max_size(self):
        return self.nfa.max_word_length()


def require_csa(m: StackMachine) -> None:
    if not m.is_csa:
        raise MachineClassError(f"machine {m.name} is {m.declared_class}, this analysis needs a CSA")


def word_pattern(m: StackMachine, word: Sequence[str]) -> tuple:
    return tuple(frozenset([a]) for a in word)


def length_pattern(m: StackMachine, n: int) -> tuple:
    return tuple(m.input_alphabet for _ in range(n))


# -- the read phase as a two-way automaton over the stack --------------------------

def read_twoway(m: StackMachine, pattern: Optional[tuple]) -> TwoWayNfa:
    """Read phase over ``⊢ γ ⊣`` with states (read state, input consumed).

    ``pattern`` lists the admissible symbols per input position; ``None``
    erases the input, so every read transition becomes free.
    """
    n = 0 if pattern is None else len(pattern)
    edges = set()
    for t in m.transitions:
        if t.is_write:
            continue
        move = _MOVE[t.action]
        cell = _CELL.get(t.top, t.top)
        if (cell == LEFT_END and move == "L") or (cell == RIGHT_END and move == "R"):
            continue
        for i in range(n + 1):
            if t.symbol is None or pattern is None:
                edges.add(((t.source, i), cell, (t.target, i), move))
            elif i < n and t.symbol in pattern[i]:
                edges.add(((t.source, i), cell, (t.target, i + 1), move))
    states = [(q, i) for q in m.read_states for i in range(n + 1)]
    finals = [(f, n) for f in m.finals]
    return TwoWayNfa.build(m.stack_alphabet, edges, [], finals, states)


def _write_edges(m: StackMachine, pattern: Optional[tuple], node: tuple) -> list:
    """Write-phase moves from ``(state, top, consumed)`` as (label, next node)."""
    q, top, i = node
    out = []
    for t in m.moves(q, top):
        if not t.is_write:
            continue
        if t.symbol is None or pattern is None:
            j = i
        elif i < len(pattern) and t.symbol in pattern[i]:
            j = i + 1
        else:
            continue
        if t.action == "push":
            out.append((t.push, (t.target, t.push, j)))
        else:
            out.append((None, (t.target, top, j)))
    return out


def write_graph(m: StackMachine, pattern: Optional[tuple]) -> Nfa:
    """Write phase as an NFA over Γ₀ whose states are (state, top, consumed); all states final."""
    start = (m.initial, BOT, 0)
    seen = {start}
    todo = [start]
    edges = set()
    while todo:
        node = todo.pop()
        for label, nxt in _write_edges(m, pattern, node):
            edges.add((node, label, nxt))
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return Nfa(frozenset(seen), m.stack_alphabet, frozenset(edges), frozenset({start}), frozenset(seen))


def accepting_product(m: StackMachine, pattern: Optional[tuple]) -> Nfa:
    """Stacks at the end of the write phase from which the read phase accepts.

    States pair a write node with the behavior summary of ``⊢ γ`` so far.
    """
    reader = read_twoway(m, pattern)
    start = ((m.initial, BOT, 0), reader.summary_start())
    seen = {start}
    todo = [start]
    edges = set()
    finals = set()
    while todo:
        cur = todo.pop()
        node, summary = cur
        q, _, i = node
        if q in m.read_states:
            if reader.summary_accepts_from_last(summary, (q, i)):
                finals.add(cur)
            continue
        for label, nxt_node in _write_edges(m, pattern, node):
            nxt = (nxt_node, summary if label is None else reader.summary_extend(summary, label, False))
            edges.add((cur, label, nxt))
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return Nfa(frozenset(seen), m.stack_alphabet, frozenset(edges), frozenset({start}), frozenset(finals))


# -- per-input stack sets -----------------------------------------------------------

def accepting_stack_set(m: StackMachine, word: Sequence[str]) -> StackSet:
    """Pure stack contents at the end of accepting computations on ``word``."""
    require_csa(m)
    nfa = accepting_product(m, word_pattern(m, word)).trim()
    return StackSet(nfa, "accepting", tuple(word))


def reachable_stack_set(m: StackMachine, word: Sequence[str]) -> StackSet:
    """Pure stack contents of all partial computations on ``word``."""
    require_csa(m)
    return StackSet(write_graph(m, word_pattern(m, word)), "reachable", tuple(word))


def final_stack_language(m: StackMachine) -> StackSet:
    """Stacks left by the write phase of some accepting computation (input free)."""
    require_csa(m)
    return StackSet(accepting_product(m, None).trim(), "final")


# -- store language ----------------------------------------------------------------

def _mark(nfa: Nfa, letter) -> Nfa:
    """Words of ``nfa`` with exactly one position marked; ``letter(x, marked)`` builds symbols."""
    edges = set()
    alphabet = set()
    for s, a, d in nfa.edges:
        if a is None:
            edges.add(((s, 0), None, (d, 0)))
            edges.add(((s, 1), None, (d, 1)))
            continue
        plain, marked = letter(a, False), letter(a, True)
        alphabet |= {plain, marked}
        edges.add(((s, 0), plain, (d, 0)))
        edges.add(((s, 1), plain, (d, 1)))
        edges.add(((s, 0), marked, (d, 1)))
    return Nfa.build(
        alphabet,
        edges,
        [(q, 0) for q in nfa.initial],
        [(q, 1) for q in nfa.finals],
        [(q, f) for q in nfa.states for f in (0, 1)],
    )


def _tape_letter(x, marked: bool):
    """Letters of a marked tape word: (cell symbol, marked, read state entered at the top)."""
    if isinstance(x, tuple):
        return (x[0], marked, x[1])
    return (x, marked, None)


def _read_shapes(m: StackMachine) -> Nfa:
    """``▷ γ ◁`` over tape letters, one cell marked, where the write phase can leave γ
    and switch to read state p; the ◁ letter records p."""
    graph = write_graph(m, None)
    edges = set(graph.edges)
    start = ("start",)
    end = ("end",)
    edges |= {(start, BOT, q) for q in graph.initial}
    for node in graph.states:
        q = node[0]
        if q in m.read_states:
            edges.add((node, (TOP, q), end))
    labels = {a for _, a, _ in edges if a is not None}
    plain = Nfa.build(labels, edges, [start], [end], graph.states)
    return _mark(plain, _tape_letter)


def _read_checker(m: StackMachine, qm: str, alphabet) -> TwoWayNfa:
    """Accepts marked tape words whose marked cell is visited in ``qm`` by an accepting read phase."""
    edges = set()
    seek = ("seek",)
    for letter in alphabet:
        sym, marked, entry = letter
        if sym == TOP:
            edges.add((seek, letter, ("R", entry, 0), "L"))
        else:
            edges.add((seek, letter, seek, "R"))
        for t in m.transitions:
            if t.is_write or t.top != sym:
                continue
            move = _MOVE[t.action]
            if (sym == BOT and move == "L") or (sym == TOP and move == "R"):
                continue
            for flag in (0, 1):
                edges.add((("R", t.source, flag), letter, ("R", t.target, flag), move))
        if marked:
            edges.add((("R", qm, 0), letter, ("R", qm, 1), "S"))
    edges.add((seek, LEFT_END, seek, "R"))
    states = [seek] + [("R", q, f) for q in m.read_states for f in (0, 1)]
    finals = [("R", f, 1) for f in m.finals]
    return TwoWayNfa.build(alphabet, edges, [seek], finals, states)


def store_alphabet(m: StackMachine) -> frozenset:
    return frozenset({StateSym(q) for q in m.states} | set(m.stack_alphabet) | {BOT, TOP, HEAD})


def _read_store_language(m: StackMachine) -> Nfa:
    shapes = _read_shapes(m).trim()
    alphabet = store_alphabet(m)
    mapping = {}
    for letter in shapes.alphabet:
        sym, marked, _ = letter
        mapping[letter] = (sym, HEAD) if marked else (sym,)
    result = Nfa.empty(alphabet)
    for qm in sorted(m.read_states):
        checker = _read_checker(m, qm, shapes.alphabet)
        words = checker.to_nfa().product(shapes).trim()
        if words.is_empty():
            continue
        words = words.substitute(mapping, alphabet)
        result = result.union(_prepend(words, StateSym(qm)))
    return result.trim().relabel()


def _prepend(nfa: Nfa, letter) -> Nfa:
    start = ("pre",)
    edges = set(nfa.edges) | {(start, letter, q) for q in nfa.initial}
    return Nfa.build(nfa.alphabet | {letter}, edges, [start], nfa.finals, nfa.states)


def _write_store_language(m: StackMachine) -> Nfa:
    """Write-phase configurations (head on top) that lie on an accepting computation."""
    product = accepting_product(m, None).trim()
    alphabet = store_alphabet(m)
    result = Nfa.empty(alphabet)
    for q in sorted(m.write_states):
        ends = {node for node in product.states if node[0][0] == q}
        if not ends:
            continue
        start = ("pre",)
        end = ("end",)
        edges = set(product.edges)
        edges |= {(start, StateSym(q), ("bot",))}
        edges |= {(("bot",), BOT, s) for s in product.initial}
        edges |= {(node, HEAD, ("head",)) for node in ends}
        edges.add((("head",), TOP, end))
        result = result.union(Nfa.build(alphabet, edges, [start], [end], product.states))
    return result.trim().relabel()


def store_language(m: StackMachine, phases: str = "read") -> Nfa:
    """Store words ``q ▷ … ↰ … ◁`` of configurations on accepting computations.

    ``phases="read"`` keeps configurations in read states; ``"all"`` adds the
    write-phase configurations.
    """
    require_csa(m)
    if phases not in ("read", "all"):
        raise ValueError(f"phases must be 'read' or 'all', not {phases!r}")
    lang = _read_store_language(m)
    if phases == "all":
        lang = lang.union(_write_store_language(m)).trim().relabel()
    return lang


def store_word(state: str, stack: Sequence[str], head: int) -> tuple:
    full = (BOT,) + tuple(stack) + (TOP,)
    return (StateSym(state),) + full[: head + 1] + (HEAD,) + full[head + 1 :]


def render_store_word(word: Iterable) -> str:
    return "".join(str(x) if isinstance(x, StateSym) else x for x in word)


def final_stacks_from_store(m: StackMachine, store: Optional[Nfa] = None) -> StackSet:
    """Final stacks recovered from the store language: read state, head on top, markers erased."""
    require_csa(m)
    store = store_language(m) if store is None else store
    gamma = sorted(m.stack_alphabet)
    edges = {(0, StateSym(q), 1) for q in m.read_states}
    edges.add((1, BOT, 2))
    edges |= {(2, x, 2) for x in gamma}
    edges.add((2, HEAD, 3))
    edges.add((3, TOP, 4))
    shape = Nfa.build(store.alphabet, edges, [0], [4])
    keep = set(gamma)
    restricted = store.product(shape).erase_symbols(lambda a: a in keep, m.stack_alphabet)
    return StackSet(restricted.trim(), "final")


# -- input consumed by the write phase ---------------------------------------------

def write_prefix_language(m: StackMachine, store: Optional[Nfa] = None) -> Nfa:
    """Input prefixes read during the whole write phase of some accepting computation.

    States are ``(p, q, x, s)``: guessed read state ``p`` that ends the write
    phase, current state ``q``, top symbol ``x`` and a state ``s`` of the
    store-language automaton after ``p ▷`` and the pushed symbols. Final states
    have ``q = p`` and let ``s`` finish with ``↰ ◁``.
    """
    require_csa(m)
    store = (store_language(m) if store is None else store).remove_epsilon().trim()
    succ: dict = {}
    for s, a, d in store.edges:
        succ.setdefault((s, a), set()).add(d)

    def run(states, sym):
        return {d for s in states for d in succ.get((s, sym), ())}

    def closes(s) -> bool:
        return bool(run(run({s}, HEAD), TOP) & store.finals)

    starts = set()
    for p in m.read_states:
        for s in run(run(store.initial, StateSym(p)), BOT):
            starts.add((p, m.initial, BOT, s))
    seen = set(starts)
    todo = list(starts)
    edges = set()
    finals = set()
    while todo:
        node = todo.pop()
        p, q, x, s = node
        if q == p and closes(s):
            finals.add(node)
        for t in m.moves(q, x):
            if not t.is_write:
                continue
            if t.action == "push":
                targets = [(p, t.target, t.push, s2) for s2 in run({s}, t.push)]
            else:
                targets = [(p, t.target, x, s)]
            for nxt in targets:
                edges.add((node, t.symbol, nxt))
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    return Nfa(frozenset(seen), m.input_alphabet, frozenset(edges), frozenset(starts), frozenset(finals)).trim()


# -- critical-section automata -------------------------------------------------------

def _check_states(m: StackMachine, *states: str) -> None:
    for q in states:
        if q not in m.states:
            raise KeyError(f"unknown state {q!r}")


def n0_nfa(m: StackMachine, qi: str, qj: str) -> Nfa:
    """Words ``a v`` such that, with ``a`` on top in ``qi``, λ-writes push ``v`` and reach ``qj``."""
    _check_states(m, qi, qj)
    gamma = sorted(m.stack_alphabet)
    start = ("start",)
    edges = {(start, a, (qi, a)) for a in gamma}
    for t in m.transitions:
        if not t.is_write or t.symbol is not None or t.top not in m.stack_alphabet:
            continue
        if t.action == "push":
            edges.add(((t.source, t.top), t.push, (t.target, t.push)))
        elif t.action == "wstay":
            edges.add(((t.source, t.top), None, (t.target, t.top)))
    states = [start] + [(q, a) for q in m.states for a in gamma]
    finals = [(qj, a) for a in gamma]
    return Nfa.build(m.stack_alphabet, edges, [start], finals, states)


SIDES = ("left", "right")


def nk_twoway(m: StackMachine, qi: str, qj: str, entry: str, exit: str) -> TwoWayNfa:
    """λ-read traversal of a stack section entered in ``qi`` and left in ``qj``.

    The end markers stand for the neighbouring cells outside the section.
    """
    _check_states(m, qi, qj)
    if entry not in SIDES or exit not in SIDES:
        raise ValueError(f"sides must be among {SIDES}")
    start, seek, accept = ("start",), ("seek",), ("accept",)
    edges = set()
    for t in m.transitions:
        if t.is_write or t.symbol is not None or t.top not in m.stack_alphabet:
            continue
        edges.add((("M", t.source), t.top, ("M", t.target), _MOVE[t.action]))
    if entry == "left":
        edges.add((start, LEFT_END, ("M", qi), "R"))
    else:
        edges.add((start, LEFT_END, seek, "R"))
        edges |= {(seek, a, seek, "R") for a in m.stack_alphabet}
        edges.add((seek, RIGHT_END, ("M", qi), "L"))
    edges.add((("M", qj), LEFT_END if exit == "left" else RIGHT_END, accept, "S"))
    states = [start, seek, accept] + [("M", q) for q in m.states]
    return TwoWayNfa.build(m.stack_alphabet, edges, [start], [accept], states)


@dataclass(frozen=True)
class CriticalCase:
    qi: str
    qj: str
    entry: Optional[str] = None  # None selects the write-phase automaton
    exit: Optional[str] = None

    def automaton(self, m: StackMachine) -> Nfa:
        if self.entry is None:
            return n0_nfa(m, self.qi, self.qj)
        return nk_twoway(m, self.qi, self.qj, self.entry, self.exit).to_nfa()


def critical_language(m: StackMachine, cases: Sequence[CriticalCase]) -> Nfa:
    """Intersection of the write-phase and read-phase section languages."""
    if not cases:
        raise ValueError("critical_language needs at least one case")
    result = cases[0].automaton(m)
    for case in cases[1:]:
        result = result.product(case.automaton(m))
    return result.trim()
