"""Bounded brute-force exploration of configuration graphs.

Works for every machine class and serves as ground truth for the exact
analyses. Search order is fixed (transitions in sorted order, ties broken by
insertion sequence) so repeated runs give identical reports.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .machine import (
    BOT,
    TOP,
    Configuration,
    StackMachine,
    TapeWord,
    apply,
    initial_configuration,
)
from .values import INFINITE, AtLeast, Finite, MeasureValue


@dataclass(frozen=True)
class OracleBudget:
    stack_cap: int = 12
    node_cap: int = 2_000_000
    input_cap: int = 6

    def __post_init__(self):
        if self.stack_cap < 0 or self.node_cap <= 0 or self.input_cap < 0:
            raise ValueError("oracle caps must be positive")


@dataclass
class OracleReport:
    accepted: Optional[bool]
    weak: MeasureValue
    accept: MeasureValue
    strong: MeasureValue
    visited: int
    truncated: bool  # some successor exceeded the stack cap
    exhausted: bool  # the node cap stopped the search
    certificates: dict = field(default_factory=dict)
    graph: Optional[dict] = None

    def measure(self, kind: str) -> MeasureValue:
        return getattr(self, kind)


def _table(m: StackMachine) -> dict:
    table: dict = {}
    for t in m.transitions:
        table.setdefault((t.source, t.top), []).append((t.symbol, t.target, t.action, t.push))
    return table


def _raw_successors(table: dict, r: tuple, word: tuple):
    """Successors of a raw configuration ``(state, index, stack, head)``.

    Same step relation as :func:`machine.step`, on plain tuples for speed.
    """
    state, i, stack, head = r
    size = len(stack)
    top = BOT if head == 0 else (TOP if head == size + 1 else stack[head - 1])
    for sym, target, action, push in table.get((state, top), ()):
        j = i
        if sym is not None:
            if i >= len(word) or word[i] != sym:
                continue
            j = i + 1
        if action == "push":
            if head == size:
                yield (target, j, stack + (push,), head + 1)
        elif action == "wstay":
            if head == size:
                yield (target, j, stack, head)
        elif action == "pop":
            if head == size and head > 0:
                yield (target, j, stack[:-1], head - 1)
        elif action == "left":
            if head > 0:
                yield (target, j, stack, head - 1)
        elif action == "right":
            if head <= size:
                yield (target, j, stack, head + 1)
        else:
            yield (target, j, stack, head)


def _raw(c: Configuration) -> tuple:
    return (c.state, c.index, c.tape.stack, c.tape.head)


def _config(r: tuple) -> Configuration:
    return Configuration(r[0], r[1], TapeWord(r[2], r[3]))


def _search(m: StackMachine, word: tuple, start: tuple, budget: OracleBudget):
    """Bottleneck-ordered exploration: configurations are settled by the
    smallest possible maximum stack size along a path reaching them."""
    n = len(word)
    finals = m.finals
    table = _table(m)
    cap = budget.stack_cap
    best = {start: len(start[2])}
    order = itertools.count()
    heap = [(len(start[2]), next(order), start)]
    settled: dict = {}
    edges: dict = {}
    truncated = exhausted = False
    weak = None
    while heap:
        key, _, c = heapq.heappop(heap)
        if c in settled:
            continue
        if len(settled) >= budget.node_cap:
            exhausted = True
            break
        settled[c] = key
        if weak is None and c[1] == n and c[0] in finals:
            weak = key
        out = []
        for nxt in _raw_successors(table, c, word):
            size = len(nxt[2])
            if size > cap:
                truncated = True
                continue
            out.append(nxt)
            nkey = key if key >= size else size
            if nxt not in settled and nkey < best.get(nxt, nkey + 1):
                best[nxt] = nkey
                heapq.heappush(heap, (nkey, next(order), nxt))
        edges[c] = out
    return settled, edges, weak, truncated, exhausted


def _coreachable(m: StackMachine, edges: dict, n: int) -> set:
    back: dict = {}
    for c, outs in edges.items():
        for d in outs:
            back.setdefault(d, []).append(c)
    good = {c for c in edges if c[1] == n and c[0] in m.finals}
    todo = list(good)
    while todo:
        d = todo.pop()
        for c in back.get(d, ()):
            if c not in good:
                good.add(c)
                todo.append(c)
    return good


def _push_cycle_nodes(m: StackMachine) -> set:
    """(state, top) pairs from which λ push/wstay moves can grow the stack forever."""
    succ: dict = {}
    tops = sorted(m.stack_alphabet) + [BOT]
    nodes = {(q, x) for q in m.states for x in tops}
    for t in m.transitions:
        if t.symbol is not None or t.action not in ("push", "wstay") or t.top == TOP:
            continue
        dst = (t.target, t.push) if t.action == "push" else (t.target, t.top)
        succ.setdefault((t.source, t.top), []).append((dst, t.action == "push"))

    def reach(src):
        seen = {src}
        todo = [src]
        while todo:
            v = todo.pop()
            for w, _ in succ.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    closure = {v: reach(v) for v in nodes}
    growing = set()
    for v in nodes:
        for w, pushes in succ.get(v, ()):
            if pushes and v in closure[w]:
                growing.add(v)
    return {v for v in nodes if closure[v] & growing}


def _accepts_from(m: StackMachine, word: tuple, r: tuple, stack_cap: int, node_cap: int) -> bool:
    n = len(word)
    table = _table(m)
    seen = {r}
    todo = deque([r])
    while todo:
        cur = todo.popleft()
        if cur[1] == n and cur[0] in m.finals:
            return True
        if len(seen) > node_cap:
            return False
        for nxt in _raw_successors(table, cur, word):
            if len(nxt[2]) <= stack_cap and nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


def _accept_certificate(m: StackMachine, word: tuple, edges: dict, good: set, budget: OracleBudget):
    """Look for a λ-push cycle on an accepting path of a CSA that survives pumping.

    Two configurations with the same state, input position and top symbol,
    where the later stack extends the earlier one, let the write phase repeat
    the pushed block; the pumped configurations must still accept.
    """
    groups: dict = {}
    for c in sorted(good):
        state, index, stack, head = c
        if state in m.write_states and head == len(stack):
            top = stack[-1] if stack else BOT
            groups.setdefault((state, index, top), []).append(c)
    for key in sorted(groups):
        members = sorted(groups[key], key=lambda c: (len(c[2]), c))
        for i, low in enumerate(members):
            for high in members[i + 1 :]:
                lo_stack, hi_stack = low[2], high[2]
                if len(hi_stack) <= len(lo_stack) or hi_stack[: len(lo_stack)] != lo_stack:
                    continue
                if not _reaches(edges, low, high):
                    continue
                block = hi_stack[len(lo_stack) :]
                pumped = []
                for extra in (1, 2):
                    stack = hi_stack + block * extra
                    pumped.append((high[0], high[1], stack, len(stack)))
                cap = budget.stack_cap + 3 * len(block)
                if all(_accepts_from(m, word, p, cap, budget.node_cap) for p in pumped):
                    return {"state": high[0], "index": high[1], "prefix": "".join(lo_stack), "block": "".join(block)}
    return None


def _reaches(edges: dict, src: tuple, dst: tuple) -> bool:
    seen = {src}
    todo = [src]
    while todo:
        c = todo.pop()
        if c == dst:
            return True
        for d in edges.get(c, ()):
            if d not in seen and d[1] == src[1]:
                seen.add(d)
                todo.append(d)
    return False


def explore(
    m: StackMachine,
    word: Sequence[str],
    budget: OracleBudget = OracleBudget(),
    keep_graph: bool = False,
    start: Optional[Configuration] = None,
) -> OracleReport:
    word = tuple(word)
    n = len(word)
    start = _raw(initial_configuration(m) if start is None else start)
    settled, edges, weak, truncated, exhausted = _search(m, word, start, budget)
    good = _coreachable(m, edges, n)
    complete = not truncated and not exhausted
    certificates: dict = {}

    if weak is not None:
        accepted = True
        weak_v = Finite(weak)
    elif complete:
        accepted = False
        weak_v = Finite(0)
    else:
        accepted = None
        weak_v = AtLeast(0)

    top_accept = max((len(c[2]) for c in good), default=0)
    if complete:
        accept_v = Finite(top_accept)
    else:
        cert = None
        if m.is_csa and accepted:
            cert = _accept_certificate(m, word, edges, good, budget)
        if cert is not None:
            certificates["accept"] = cert
            accept_v = INFINITE
        else:
            accept_v = AtLeast(top_accept)

    top_strong = max(len(c[2]) for c in settled) if settled else 0
    if complete:
        strong_v = Finite(top_strong)
    else:
        strong_v = AtLeast(budget.stack_cap + 1 if truncated else top_strong)
        if m.declared_class != "SA":
            growing = _push_cycle_nodes(m)
            for c in settled:  # settlement order is deterministic
                state, index, stack, head = c
                if head == len(stack) and (state, stack[-1] if stack else BOT) in growing:
                    certificates["strong"] = {"state": state, "index": index, "stack": "".join(stack)}
                    strong_v = INFINITE
                    break

    graph = None
    if keep_graph:
        graph = {
            "settled": {_config(c): k for c, k in settled.items()},
            "edges": {_config(c): [_config(d) for d in outs] for c, outs in edges.items()},
            "coreachable": {_config(c) for c in good},
        }
    return OracleReport(accepted, weak_v, accept_v, strong_v, len(settled), truncated, exhausted, certificates, graph)


# -- language-level samples -----------------------------------------------------------

def language_sample(m: StackMachine, budget: OracleBudget = OracleBudget()) -> tuple:
    """Accepted words up to ``input_cap`` and whether any search was cut short."""
    symbols = sorted(m.input_alphabet)
    words = []
    cut = False
    for length in range(budget.input_cap + 1):
        for w in itertools.product(symbols, repeat=length):
            rep = explore(m, w, budget)
            if rep.accepted:
                words.append(w)
            elif rep.accepted is None:
                cut = True
    return words, cut


def _free_successors(m: StackMachine, c: Configuration, input_cap: int) -> Iterable[Configuration]:
    """Successors when the next input symbol may be anything; ``index`` counts consumed symbols."""
    for t in m.moves(c.state, c.tape.scanned()):
        if t.symbol is None:
            nxt = apply(t, c, ())
        elif c.index < input_cap:
            nxt = apply(t, Configuration(c.state, 0, c.tape), (t.symbol,))
            if nxt is not None:
                nxt = Configuration(nxt.state, c.index + 1, nxt.tape)
        else:
            nxt = None
        if nxt is not None:
            yield nxt


def store_sample(m: StackMachine, budget: OracleBudget = OracleBudget(), phases: str = "read") -> tuple:
    """Store words of configurations on accepting computations over inputs up to ``input_cap``.

    Returns ``(words, truncated)`` with words as ``(state, stack, head)`` triples.
    """
    start = initial_configuration(m)
    seen = {start}
    todo = deque([start])
    edges: dict = {}
    truncated = False
    while todo:
        c = todo.popleft()
        out = []
        for nxt in _free_successors(m, c, budget.input_cap):
            if nxt.stack_size > budget.stack_cap:
                truncated = True
                continue
            out.append(nxt)
            if nxt not in seen:
                if len(seen) >= budget.node_cap:
                    truncated = True
                    continue
                seen.add(nxt)
                todo.append(nxt)
        edges[c] = out
    back: dict = {}
    for c, outs in edges.items():
        for d in outs:
            back.setdefault(d, []).append(c)
    good = {c for c in seen if c.state in m.finals}
    stack = list(good)
    while stack:
        d = stack.pop()
        for c in back.get(d, ()):
            if c not in good:
                good.add(c)
                stack.append(c)
    words = set()
    for c in good:
        if phases == "read" and m.partition is not None and c.state not in m.read_states:
            continue
        words.add((c.state, c.tape.stack, c.tape.head))
    return words, truncated


def _read_phase_accepts(m: StackMachine, state: str, stack: tuple) -> bool:
    """Can the read phase started on top of ``stack`` accept for some remaining input?"""
    start = Configuration(state, 0, TapeWord(stack, len(stack)))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        if c.state in m.finals:
            return True
        for nxt in _free_successors(m, c, 1):
            nxt = Configuration(nxt.state, 0, nxt.tape)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


def write_prefixes(m: StackMachine, max_length: int, stack_cap: int = 12) -> set:
    """Input prefixes consumed by the write phase of some accepting computation (CSA)."""
    start = (initial_configuration(m), ())
    seen = {start}
    todo = [start]
    found = set()
    checked: dict = {}
    while todo:
        c, consumed = todo.pop()
        if c.state in m.read_states:
            key = (c.state, c.tape.stack)
            if key not in checked:
                checked[key] = _read_phase_accepts(m, c.state, c.tape.stack)
            if checked[key]:
                found.add(consumed)
            continue
        for t in m.moves(c.state, c.tape.scanned()):
            if t.symbol is not None and len(consumed) >= max_length:
                continue
            nxt = apply(t, Configuration(c.state, 0, c.tape), () if t.symbol is None else (t.symbol,))
            if nxt is None or nxt.stack_size > stack_cap:
                continue
            item = (Configuration(nxt.state, 0, nxt.tape), consumed + (() if t.symbol is None else (t.symbol,)))
            if item not in seen:
                seen.add(item)
                todo.append(item)
    return found


def lambda_write_states(m: StackMachine, qi: str, target: Sequence[str]) -> set:
    """States reachable from ``qi`` with ``target[0]`` on top by λ write moves pushing ``target[1:]``."""
    target = tuple(target)
    if not target:
        return set()
    start = Configuration(qi, 0, TapeWord(target[:1], 1))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for t in m.moves(c.state, c.tape.scanned()):
            if t.symbol is not None or not t.is_write or t.action == "pop":
                continue
            nxt = apply(t, c, ())
            if nxt is None or target[: nxt.stack_size] != nxt.tape.stack:
                continue
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return {c.state for c in seen if c.tape.stack == target}
