"""λ-NFAs, two-way NFAs and the behavior relations used to simulate the latter."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional, Sequence

LEFT_END = "⊢"
RIGHT_END = "⊣"


class AlphabetMismatch(ValueError):
    pass


def _skey(x):
    return repr(x)


@dataclass(frozen=True)
class Nfa:
    """A λ-NFA. Edge labels are alphabet symbols or None for λ."""

    states: frozenset
    alphabet: frozenset
    edges: frozenset
    initial: frozenset
    finals: frozenset

    def __post_init__(self):
        for src, sym, dst in self.edges:
            if src not in self.states or dst not in self.states:
                raise ValueError(f"edge {(src, sym, dst)!r} references an unknown state")
            if sym is not None and sym not in self.alphabet:
                raise ValueError(f"edge symbol {sym!r} not in alphabet")
        if not self.initial <= self.states or not self.finals <= self.states:
            raise ValueError("initial and final states must be states")

    @classmethod
    def build(cls, alphabet, edges=(), initial=(), finals=(), states=()) -> "Nfa":
        edges = frozenset(edges)
        initial, finals = frozenset(initial), frozenset(finals)
        allstates = set(states) | initial | finals
        for src, _, dst in edges:
            allstates.add(src)
            allstates.add(dst)
        return cls(frozenset(allstates), frozenset(alphabet), edges, initial, finals)

    @classmethod
    def empty(cls, alphabet) -> "Nfa":
        return cls.build(alphabet, states=[0], initial=[0])

    @classmethod
    def from_words(cls, alphabet, words) -> "Nfa":
        edges = set()
        finals = set()
        for w in words:
            for i, sym in enumerate(w):
                edges.add((tuple(w[:i]), sym, tuple(w[: i + 1])))
            finals.add(tuple(w))
        return cls.build(alphabet, edges, [()], finals)

    # -- adjacency -------------------------------------------------------------

    @cached_property
    def _out(self) -> dict:
        out: dict = {q: [] for q in self.states}
        for src, sym, dst in sorted(self.edges, key=_skey):
            out[src].append((sym, dst))
        return out

    @cached_property
    def _in(self) -> dict:
        inc: dict = {q: [] for q in self.states}
        for src, sym, dst in self.edges:
            inc[dst].append((sym, src))
        return inc

    def closure(self, states: Iterable) -> frozenset:
        seen = set(states)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for sym, dst in self._out[q]:
                if sym is None and dst not in seen:
                    seen.add(dst)
                    todo.append(dst)
        return frozenset(seen)

    def step(self, states: Iterable, sym) -> frozenset:
        nxt = {dst for q in states for s, dst in self._out[q] if s == sym}
        return self.closure(nxt)

    def accepts(self, word: Sequence) -> bool:
        current = self.closure(self.initial)
        for sym in word:
            if not current:
                return False
            current = self.step(current, sym)
        return bool(current & self.finals)

    # -- structure ---------------------------------------------------------------

    def reachable(self) -> frozenset:
        seen = set(self.initial)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for _, dst in self._out[q]:
                if dst not in seen:
                    seen.add(dst)
                    todo.append(dst)
        return frozenset(seen)

    def coreachable(self) -> frozenset:
        seen = set(self.finals)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for _, src in self._in[q]:
                if src not in seen:
                    seen.add(src)
                    todo.append(src)
        return frozenset(seen)

    def trim(self) -> "Nfa":
        useful = self.reachable() & self.coreachable()
        return Nfa(
            useful,
            self.alphabet,
            frozenset(e for e in self.edges if e[0] in useful and e[2] in useful),
            self.initial & useful,
            self.finals & useful,
        )

    def is_empty(self) -> bool:
        return not (self.reachable() & self.finals)

    def relabel(self) -> "Nfa":
        """Same automaton with integer states 0..n-1 (deterministic order)."""
        order = {q: i for i, q in enumerate(sorted(self.states, key=_skey))}
        return Nfa(
            frozenset(order.values()),
            self.alphabet,
            frozenset((order[s], a, order[d]) for s, a, d in self.edges),
            frozenset(order[q] for q in self.initial),
            frozenset(order[q] for q in self.finals),
        )

    def _sccs(self) -> dict:
        """Map state -> component id (Tarjan, iterative)."""
        index: dict = {}
        low: dict = {}
        comp: dict = {}
        stack: list = []
        on_stack: set = set()
        counter = 0
        for root in sorted(self.states, key=_skey):
            if root in index:
                continue
            work = [(root, iter(self._out[root]))]
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack.add(root)
            while work:
                node, it = work[-1]
                advanced = False
                for _, nxt in it:
                    if nxt not in index:
                        index[nxt] = low[nxt] = counter
                        counter += 1
                        stack.append(nxt)
                        on_stack.add(nxt)
                        work.append((nxt, iter(self._out[nxt])))
                        advanced = True
                        break
                    if nxt in on_stack:
                        low[node] = min(low[node], index[nxt])
                if advanced:
                    continue
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[node])
                if low[node] == index[node]:
                    while True:
                        member = stack.pop()
                        on_stack.discard(member)
                        comp[member] = index[node]
                        if member == node:
                            break
        return comp

    def is_finite(self) -> bool:
        t = self.trim()
        comp = t._sccs()
        return not any(sym is not None and comp[s] == comp[d] for s, sym, d in t.edges)

    def max_word_length(self):
        """Longest accepted word length; ``None`` if empty, ``math.inf`` if infinite."""
        t = self.trim()
        if not t.finals:
            return None
        comp = t._sccs()
        if any(sym is not None and comp[s] == comp[d] for s, sym, d in t.edges):
            return float("inf")
        # longest path on the condensation; λ-only components cost nothing
        succ: dict = {}
        indeg: dict = {c: 0 for c in set(comp.values())}
        for s, sym, d in t.edges:
            if comp[s] != comp[d]:
                succ.setdefault(comp[s], []).append((comp[d], 0 if sym is None else 1))
                indeg[comp[d]] += 1
        best = {c: None for c in indeg}
        for q in t.initial:
            best[comp[q]] = 0
        order = [c for c, k in indeg.items() if k == 0]
        result = None
        final_comps = {comp[q] for q in t.finals}
        while order:
            c = order.pop()
            if best[c] is not None and c in final_comps:
                result = best[c] if result is None else max(result, best[c])
            for d, w in succ.get(c, []):
                if best[c] is not None and (best[d] is None or best[c] + w > best[d]):
                    best[d] = best[c] + w
                indeg[d] -= 1
                if indeg[d] == 0:
                    order.append(d)
        return result

    def min_word_length(self) -> Optional[int]:
        """Shortest accepted word length, or None for the empty language."""
        word = self.shortest_word()
        return None if word is None else len(word)

    def shortest_word(self) -> Optional[tuple]:
        dist = {q: 0 for q in self.initial}
        parent: dict = {q: None for q in self.initial}
        queue = deque(sorted(self.initial, key=_skey))
        # 0-1 BFS: λ edges cost nothing
        while queue:
            q = queue.popleft()
            for sym, dst in self._out[q]:
                w = 0 if sym is None else 1
                if dst not in dist or dist[q] + w < dist[dst]:
                    dist[dst] = dist[q] + w
                    parent[dst] = (q, sym)
                    if w == 0:
                        queue.appendleft(dst)
                    else:
                        queue.append(dst)
        reached = [q for q in self.finals if q in dist]
        if not reached:
            return None
        q = min(reached, key=lambda s: (dist[s], _skey(s)))
        word = []
        while parent[q] is not None:
            q, sym = parent[q]
            if sym is not None:
                word.append(sym)
        return tuple(reversed(word))

    def words(self, max_length: int) -> Iterator[tuple]:
        """Accepted words of length <= max_length, shortlex over sorted symbols."""
        symbols = sorted(self.alphabet, key=_skey)
        t = self.trim()
        start = t.closure(t.initial)
        if not start:
            return
        level = [((), start)]
        for length in range(max_length + 1):
            nxt = []
            for word, current in level:
                if current & t.finals:
                    yield word
                if length < max_length:
                    for sym in symbols:
                        after = t.step(current, sym)
                        if after:
                            nxt.append((word + (sym,), after))
            level = nxt

    def witness_long(self, min_length: Optional[int] = None) -> Optional[tuple]:
        """Shortest accepted word of length >= ``min_length`` (default: the trimmed state count)."""
        t = self.trim()
        bound = len(t.states) if min_length is None else min_length
        start = t.closure(t.initial)
        seen = {(q, 0) for q in start}
        parent: dict = {(q, 0): None for q in start}
        queue = deque(sorted(seen, key=_skey))
        while queue:
            q, k = queue.popleft()
            if k >= bound and q in t.finals:
                node = (q, k)
                word = []
                while parent[node] is not None:
                    node, sym = parent[node]
                    if sym is not None:
                        word.append(sym)
                return tuple(reversed(word))
            for sym, dst in t._out[q]:
                nk = min(bound, k + (0 if sym is None else 1))
                key = (dst, nk)
                if key not in seen:
                    seen.add(key)
                    parent[key] = ((q, k), sym)
                    queue.append(key)
        return None

    # -- language operations -------------------------------------------------------

    def product(self, other: "Nfa") -> "Nfa":
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"alphabets differ: {sorted(self.alphabet ^ other.alphabet, key=_skey)}")
        start = {(p, q) for p in self.initial for q in other.initial}
        seen = set(start)
        todo = list(start)
        edges = set()
        while todo:
            p, q = todo.pop()
            for sym, p2 in self._out[p]:
                if sym is None:
                    targets = [((p2, q), None)]
                else:
                    targets = [((p2, q2), sym) for s2, q2 in other._out[q] if s2 == sym]
                for node, label in targets:
                    edges.add(((p, q), label, node))
                    if node not in seen:
                        seen.add(node)
                        todo.append(node)
            for sym, q2 in other._out[q]:
                if sym is None:
                    node = (p, q2)
                    edges.add(((p, q), None, node))
                    if node not in seen:
                        seen.add(node)
                        todo.append(node)
        finals = {(p, q) for p, q in seen if p in self.finals and q in other.finals}
        return Nfa(frozenset(seen), self.alphabet, frozenset(edges), frozenset(start), frozenset(finals))

    def union(self, other: "Nfa") -> "Nfa":
        alphabet = self.alphabet | other.alphabet
        tag = lambda k, q: (k, q)  # noqa: E731
        edges = {(tag(0, s), a, tag(0, d)) for s, a, d in self.edges}
        edges |= {(tag(1, s), a, tag(1, d)) for s, a, d in other.edges}
        return Nfa(
            frozenset({tag(0, q) for q in self.states} | {tag(1, q) for q in other.states}),
            alphabet,
            frozenset(edges),
            frozenset({tag(0, q) for q in self.initial} | {tag(1, q) for q in other.initial}),
            frozenset({tag(0, q) for q in self.finals} | {tag(1, q) for q in other.finals}),
        )

    def prefix_closure(self) -> "Nfa":
        t = self.trim()
        return Nfa(t.states, t.alphabet, t.edges, t.initial, t.states)

    def erase_symbols(self, keep: Callable[[object], bool], alphabet=None) -> "Nfa":
        kept = frozenset(a for a in self.alphabet if keep(a)) if alphabet is None else frozenset(alphabet)
        edges = frozenset((s, a if a is not None and keep(a) else None, d) for s, a, d in self.edges)
        return Nfa(self.states, kept, edges, self.initial, self.finals)

    def substitute(self, mapping: dict, alphabet) -> "Nfa":
        """Replace each edge label ``a`` by the word ``mapping.get(a, (a,))``."""
        edges = set()
        states = set(self.states)
        for k, (s, a, d) in enumerate(sorted(self.edges, key=_skey)):
            word = (a,) if a is None else tuple(mapping.get(a, (a,)))
            if len(word) <= 1:
                edges.add((s, word[0] if word else None, d))
                continue
            prev = s
            for i, sym in enumerate(word[:-1]):
                mid = ("sub", k, i)
                states.add(mid)
                edges.add((prev, sym, mid))
                prev = mid
            edges.add((prev, word[-1], d))
        return Nfa(frozenset(states), frozenset(alphabet), frozenset(edges), self.initial, self.finals)

    def with_alphabet(self, alphabet) -> "Nfa":
        return Nfa(self.states, frozenset(alphabet), self.edges, self.initial, self.finals)

    def remove_epsilon(self) -> "Nfa":
        closures = {q: self.closure([q]) for q in self.states}
        edges = set()
        for q in self.states:
            for r in closures[q]:
                for sym, dst in self._out[r]:
                    if sym is not None:
                        edges.add((q, sym, dst))
        finals = {q for q in self.states if closures[q] & self.finals}
        return Nfa(self.states, self.alphabet, frozenset(edges), self.initial, frozenset(finals))

    # -- export ----------------------------------------------------------------------

    def to_text(self) -> str:
        t = self.relabel()
        show = lambda a: "_" if a is None else str(a)  # noqa: E731
        lines = [
            "alphabet: " + " ".join(sorted(map(str, t.alphabet))),
            "initial: " + " ".join(map(str, sorted(t.initial))),
            "final: " + " ".join(map(str, sorted(t.finals))),
        ]
        for s, a, d in sorted(t.edges, key=lambda e: (e[0], show(e[1]), e[2])):
            lines.append(f"{s} {show(a)} {d}")
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "nfa") -> str:
        t = self.relabel()
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for q in sorted(t.states):
            shape = "doublecircle" if q in t.finals else "circle"
            lines.append(f'  {q} [shape={shape}];')
        for q in sorted(t.initial):
            lines.append(f"  start{q} [shape=point]; start{q} -> {q};")
        for s, a, d in sorted(t.edges, key=lambda e: (e[0], str(e[1]), e[2])):
            label = "λ" if a is None else str(a).replace('"', '\\"')
            lines.append(f'  {s} -> {d} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- two-way automata ------------------------------------------------------------------

MOVES = {"L": -1, "S": 0, "R": 1}


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BehaviorRelation:
    """How a two-way NFA can traverse a tape segment.

    ``from_left[s]`` / ``from_right[s]`` describe runs that start on the first /
    last cell of the segment in state ``s``. Each is a bitmask: bit ``t`` means
    the run can leave across the left border in state ``t``, bit ``k + t`` that it
    can leave across the right border in state ``t``, bit ``2k`` that it can reach
    a final state inside the segment.
    """

    size: int
    from_left: tuple
    from_right: tuple

    def compose(self, other: "BehaviorRelation") -> "BehaviorRelation":
        k = self.size
        low = (1 << k) - 1
        left = []
        for r in self.from_left:
            acc, out_l, out_r = _bounce(self, other, 0, (r >> k) & low, r & low, 0, r >> (2 * k))
            left.append(_pack(k, out_l, out_r, acc))
        right = []
        for r in other.from_right:
            acc, out_l, out_r = _bounce(self, other, r & low, 0, 0, (r >> k) & low, r >> (2 * k))
            right.append(_pack(k, out_l, out_r, acc))
        return BehaviorRelation(k, tuple(left), tuple(right))

    __matmul__ = compose

    def pairs(self, states: Sequence) -> frozenset:
        """Readable form: ((entry side, state), (exit side or 'accept', state))."""
        k = self.size
        out = set()
        for side, table in (("L", self.from_left), ("R", self.from_right)):
            for s, r in enumerate(table):
                for t in _bits(r & ((1 << k) - 1)):
                    out.add(((side, states[s]), ("L", states[t])))
                for t in _bits((r >> k) & ((1 << k) - 1)):
                    out.add(((side, states[s]), ("R", states[t])))
                if r >> (2 * k):
                    out.add(((side, states[s]), ("accept", None)))
        return frozenset(out)


def _pack(k: int, out_l: int, out_r: int, acc) -> int:
    return out_l | (out_r << k) | ((1 if acc else 0) << (2 * k))


def _bounce(u, v, ur: int, vl: int, out_l: int, out_r: int, acc) -> tuple:
    """Run across the border between segments ``u`` and ``v``.

    ``ur`` holds states entering ``u`` from its right end, ``vl`` states
    entering ``v`` from its left end. Only ``u.from_right`` and ``v.from_left``
    are consulted.
    """
    k = u.size
    low = (1 << k) - 1
    seen_ur = seen_vl = 0
    acc = bool(acc)
    while ur or vl:
        new_ur, new_vl = ur & ~seen_ur, vl & ~seen_vl
        seen_ur |= new_ur
        seen_vl |= new_vl
        ur = vl = 0
        for s in _bits(new_ur):
            r = u.from_right[s]
            out_l |= r & low
            vl |= (r >> k) & low
            if r >> (2 * k):
                acc = True
        for s in _bits(new_vl):
            r = v.from_left[s]
            ur |= r & low
            out_r |= (r >> k) & low
            if r >> (2 * k):
                acc = True
    return acc, out_l, out_r


@dataclass(frozen=True)
class PrefixSummary:
    """Behavior of a prefix ``⊢ w``: right-entry table plus the run from the start."""

    from_right: tuple
    start: int  # packed result of starting on ⊢ in the initial states


@dataclass(frozen=True)
class TwoWayNfa:
    states: tuple  # ordered; index = bit position
    alphabet: frozenset
    edges: frozenset  # (state, symbol, state, move) with move in L/S/R
    initial: frozenset
    finals: frozenset

    def __post_init__(self):
        known = set(self.states)
        for p, sym, q, move in self.edges:
            if p not in known or q not in known:
                raise ValueError(f"edge {(p, sym, q, move)!r} references an unknown state")
            if move not in MOVES:
                raise ValueError(f"bad move {move!r}")
            if sym not in self.alphabet and sym not in (LEFT_END, RIGHT_END):
                raise ValueError(f"edge symbol {sym!r} not in alphabet")
            if sym == LEFT_END and move == "L":
                raise ValueError("two-way NFA may not move left of ⊢")
            if sym == RIGHT_END and move == "R":
                raise ValueError("two-way NFA may not move right of ⊣")

    @classmethod
    def build(cls, alphabet, edges, initial, finals, states=()) -> "TwoWayNfa":
        edges = frozenset(edges)
        allstates = set(states) | set(initial) | set(finals)
        for p, _, q, _ in edges:
            allstates.add(p)
            allstates.add(q)
        return cls(tuple(sorted(allstates, key=_skey)), frozenset(alphabet), edges, frozenset(initial), frozenset(finals))

    @cached_property
    def index(self) -> dict:
        return {q: i for i, q in enumerate(self.states)}

    @cached_property
    def _table(self) -> dict:
        table: dict = {}
        for p, sym, q, move in sorted(self.edges, key=_skey):
            table.setdefault((p, sym), []).append((q, move))
        return table

    @cached_property
    def final_mask(self) -> int:
        return sum(1 << self.index[q] for q in self.finals)

    @cached_property
    def initial_mask(self) -> int:
        return sum(1 << self.index[q] for q in self.initial)

    @cached_property
    def _cells(self) -> dict:
        return {}

    def cell(self, sym) -> BehaviorRelation:
        """Behavior of the one-cell segment holding ``sym``."""
        cached = self._cells.get(sym)
        if cached is not None:
            return cached
        k = len(self.states)
        idx = self.index
        rows = []
        for s, state in enumerate(self.states):
            seen = {state}
            todo = [state]
            out_l = out_r = 0
            acc = False
            while todo:
                p = todo.pop()
                if p in self.finals:
                    acc = True
                for q, move in self._table.get((p, sym), ()):
                    if move == "S":
                        if q not in seen:
                            seen.add(q)
                            todo.append(q)
                    elif move == "L":
                        out_l |= 1 << idx[q]
                    else:
                        out_r |= 1 << idx[q]
            rows.append(_pack(k, out_l, out_r, acc))
        rel = BehaviorRelation(k, tuple(rows), tuple(rows))
        self._cells[sym] = rel
        return rel

    def behavior(self, word: Sequence) -> BehaviorRelation:
        if not word:
            raise ValueError("behavior of the empty segment is the identity; use a nonempty word")
        rel = self.cell(word[0])
        for sym in word[1:]:
            rel = rel @ self.cell(sym)
        return rel

    # -- acceptance ----------------------------------------------------------------

    def accepts(self, word: Sequence) -> bool:
        """Direct search over (state, head position) on ``⊢ word ⊣``."""
        tape = (LEFT_END,) + tuple(word) + (RIGHT_END,)
        todo = [(q, 0) for q in self.initial]
        seen = set(todo)
        while todo:
            q, pos = todo.pop()
            if q in self.finals:
                return True
            for r, move in self._table.get((q, tape[pos]), ()):
                npos = pos + MOVES[move]
                if 0 <= npos < len(tape) and (r, npos) not in seen:
                    seen.add((r, npos))
                    todo.append((r, npos))
        return False

    def accepts_by_behavior(self, word: Sequence) -> bool:
        rel = self.behavior((LEFT_END,) + tuple(word) + (RIGHT_END,))
        k = len(self.states)
        return any(rel.from_left[s] >> (2 * k) for s in _bits(self.initial_mask))

    # -- prefix summaries (the one-way simulation) ---------------------------------

    def summary_start(self) -> PrefixSummary:
        cell = self.cell(LEFT_END)
        k = len(self.states)
        low = (1 << k) - 1
        out_l = out_r = 0
        acc = False
        for s in _bits(self.initial_mask):
            r = cell.from_left[s]
            out_l |= r & low
            out_r |= (r >> k) & low
            acc = acc or bool(r >> (2 * k))
        return PrefixSummary(cell.from_right, _pack(k, out_l, out_r, acc))

    def summary_extend(self, summary: PrefixSummary, sym, track_start: bool = True) -> PrefixSummary:
        k = len(self.states)
        low = (1 << k) - 1
        u = _Seg(k, summary.from_right)
        v = self.cell(sym)
        right = []
        for r in v.from_right:
            acc, out_l, out_r = _bounce(u, v, r & low, 0, 0, (r >> k) & low, r >> (2 * k))
            right.append(_pack(k, out_l, out_r, acc))
        start = 0
        if track_start:
            r = summary.start
            acc, out_l, out_r = _bounce(u, v, 0, (r >> k) & low, r & low, 0, r >> (2 * k))
            start = _pack(k, out_l, out_r, acc)
        return PrefixSummary(tuple(right), start)

    def summary_accepts(self, summary: PrefixSummary) -> bool:
        """Does the run from the start accept once ``⊣`` closes the prefix?"""
        k = len(self.states)
        low = (1 << k) - 1
        r = summary.start
        acc, _, _ = _bounce(_Seg(k, summary.from_right), self.cell(RIGHT_END), 0, (r >> k) & low, 0, 0, r >> (2 * k))
        return acc

    def summary_accepts_from_last(self, summary: PrefixSummary, state) -> bool:
        """Starting on the last cell of the prefix in ``state``, can ``⊢ w ⊣`` be accepted?"""
        k = len(self.states)
        acc, _, _ = _bounce(_Seg(k, summary.from_right), self.cell(RIGHT_END), 1 << self.index[state], 0, 0, 0, False)
        return acc

    def to_nfa(self, max_states: int = 200_000) -> Nfa:
        """Equivalent one-way automaton (deterministic over prefix summaries)."""
        symbols = sorted(self.alphabet, key=_skey)
        start = self.summary_start()
        ids = {start: 0}
        todo = [start]
        edges = set()
        while todo:
            cur = todo.pop()
            for sym in symbols:
                nxt = self.summary_extend(cur, sym)
                if nxt not in ids:
                    if len(ids) >= max_states:
                        raise RuntimeError("two-way conversion exceeded its state budget")
                    ids[nxt] = len(ids)
                    todo.append(nxt)
                edges.add((ids[cur], sym, ids[nxt]))
        finals = {i for s, i in ids.items() if self.summary_accepts(s)}
        return Nfa(frozenset(ids.values()), self.alphabet, frozenset(edges), frozenset({0}), frozenset(finals))


@dataclass(frozen=True)
class _Seg:
    size: int
    from_right: tuple


def behavior_compose(t: TwoWayNfa, word: Sequence) -> BehaviorRelation:
    return t.behavior(word)


def twoway_accepts(t: TwoWayNfa, word: Sequence) -> bool:
    return t.accepts_by_behavior(word)
