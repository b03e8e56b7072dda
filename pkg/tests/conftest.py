from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from stackspace.corpus import corpus_machine
from stackspace.nfa import LEFT_END, RIGHT_END, Nfa, TwoWayNfa

AB = ("a", "b")


def all_words(alphabet, max_length):
    for n in range(max_length + 1):
        yield from itertools.product(alphabet, repeat=n)


def ref_accepts(nfa: Nfa, word) -> bool:
    """Recursive descent over (state, position), following λ edges with a visited set."""
    out = {}
    for s, a, d in nfa.edges:
        out.setdefault(s, []).append((a, d))

    seen = set()

    def go(q, i):
        if (q, i) in seen:
            return False
        seen.add((q, i))
        if i == len(word) and q in nfa.finals:
            return True
        for a, d in out.get(q, ()):
            if a is None and go(d, i):
                return True
            if i < len(word) and a == word[i] and go(d, i + 1):
                return True
        return False

    return any(go(q, 0) for q in nfa.initial)


def ref_twoway(t: TwoWayNfa, word) -> bool:
    """Breadth-first search of (state, position) pairs on the delimited tape."""
    tape = [LEFT_END, *word, RIGHT_END]
    delta = {-1: "L", 0: "S", 1: "R"}
    frontier = {(q, 0) for q in t.initial}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for q, pos in frontier:
            if q in t.finals:
                return True
            for d, move in delta.items():
                for p, sym, r, mv in t.edges:
                    if p == q and sym == tape[pos] and mv == move:
                        node = (r, pos + d)
                        if 0 <= node[1] < len(tape) and node not in seen:
                            seen.add(node)
                            nxt.add(node)
        frontier = nxt
    return False


def random_nfa(rng: random.Random, n_states=4, alphabet=AB, density=0.3, eps=0.1) -> Nfa:
    edges = []
    for s in range(n_states):
        for d in range(n_states):
            for a in alphabet:
                if rng.random() < density:
                    edges.append((s, a, d))
            if rng.random() < eps:
                edges.append((s, None, d))
    initial = [q for q in range(n_states) if rng.random() < 0.3] or [0]
    finals = [q for q in range(n_states) if rng.random() < 0.35]
    return Nfa.build(alphabet, edges, initial, finals, states=range(n_states))


def random_twoway(rng: random.Random, n_states=3, alphabet=AB, density=0.25) -> TwoWayNfa:
    edges = []
    for p in range(n_states):
        for q in range(n_states):
            for sym in (*alphabet, LEFT_END, RIGHT_END):
                for move in "LSR":
                    if sym == LEFT_END and move == "L" or sym == RIGHT_END and move == "R":
                        continue
                    if rng.random() < density:
                        edges.append((p, sym, q, move))
    finals = [q for q in range(n_states) if rng.random() < 0.3] or [n_states - 1]
    return TwoWayNfa.build(alphabet, edges, [0], finals, states=range(n_states))


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture(scope="session")
def machines():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = corpus_machine(name)
        return cache[name]

    return get
