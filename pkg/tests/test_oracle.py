from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import all_words, seeds
from stackspace.machine import BOT, TOP, Transition, initial_configuration, make_machine, step
from stackspace.oracle import OracleBudget, explore, language_sample, store_sample, write_prefixes
from stackspace.values import INFINITE, AtLeast, Finite


def bfs(m, word, cap):
    """All configurations reachable through configurations of stack size at most ``cap``."""
    start = initial_configuration(m)
    seen = {start}
    todo = [start]
    edges = {}
    cut = False
    while todo:
        c = todo.pop()
        edges[c] = []
        for d in step(m, c, word):
            if d.stack_size > cap:
                cut = True
                continue
            edges[c].append(d)
            if d not in seen:
                seen.add(d)
                todo.append(d)
    return seen, edges, cut


def reference(m, word, cap):
    """(weak, accept, strong, cut) by repeated capped searches; None weak when no acceptance within cap."""
    word = tuple(word)
    seen, edges, cut = bfs(m, word, cap)
    accepting = {c for c in seen if c.index == len(word) and c.state in m.finals}
    weak = None
    for k in range(cap + 1):
        small, _, _ = bfs(m, word, k)
        if any(c.index == len(word) and c.state in m.finals for c in small):
            weak = k
            break
    good = set(accepting)
    changed = True
    while changed:
        changed = False
        for c, outs in edges.items():
            if c not in good and any(d in good for d in outs):
                good.add(c)
                changed = True
    accept = max((c.stack_size for c in good), default=0)
    strong = max(c.stack_size for c in seen)
    return weak, accept, strong, cut


def random_sa(rng, n_states=2):
    states = [f"q{i}" for i in range(n_states)]
    actions = ["wstay", "push", "pop", "left", "rstay", "right"]
    rules = []
    for _ in range(rng.randint(6, 14)):
        act = rng.choice(actions)
        top = rng.choice(["a", BOT, BOT, TOP] if act in ("left", "rstay", "right") else ["a", "b", BOT, BOT])
        if act == "pop" and top == BOT:
            act = "push"
        rules.append(Transition(rng.choice(states), rng.choice(["0", "1", None, None]), top, rng.choice(states), act,
                                rng.choice("ab") if act == "push" else None))
    finals = [q for q in states if rng.random() < 0.5] or [states[-1]]
    return make_machine(states, ["0", "1"], ["a", "b"], rules, "q0", finals, "SA")


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_explore_matches_reference(seed):
    rng = random.Random(seed)
    m = random_sa(rng)
    cap = 4
    for w in all_words(["0", "1"], 3):
        rep = explore(m, w, OracleBudget(stack_cap=cap))
        weak, accept, strong, cut = reference(m, w, cap)
        assert rep.truncated == cut
        if weak is not None:
            assert rep.accepted is True and rep.weak == Finite(weak)
        if not cut:
            assert rep.accepted == (weak is not None)
            assert rep.accept == Finite(accept)
            assert rep.strong == Finite(strong)
        else:
            assert rep.accept.is_infinite or rep.accept.k >= accept
            assert rep.strong == AtLeast(cap + 1)


def test_pref_measures(machines):
    m = machines("pref")
    for word, k in [("", 0), ("abaab", 2), ("abaabaaab", 3)]:
        rep = explore(m, tuple(word), OracleBudget(stack_cap=10))
        assert rep.accepted
        assert (rep.weak, rep.accept, rep.strong) == (Finite(k), Finite(k), Finite(k))


def test_rejection_gives_zero(machines):
    rep = explore(machines("pref"), tuple("abab"), OracleBudget(stack_cap=10))
    assert rep.accepted is False
    assert rep.weak == Finite(0) and rep.accept == Finite(0)


def test_comp_strong_certificate(machines):
    rep = explore(machines("comp"), tuple("1111"), OracleBudget(stack_cap=6))
    assert rep.strong == INFINITE
    assert "strong" in rep.certificates
    assert rep.weak == Finite(2)
    # no accepting path grows beyond 2, so the accept value stays a lower bound
    assert rep.accept == AtLeast(2)


def test_copy_accept_lower_bound(machines):
    # the guess loop is cut at the cap, so accept is only bounded below
    rep = explore(machines("copy"), tuple("a$a#b$b"), OracleBudget(stack_cap=6))
    assert rep.accepted and rep.weak == Finite(3)
    assert rep.accept == AtLeast(3)
    assert rep.strong == INFINITE


def test_xpad_accept_certificate(machines):
    rep = explore(machines("xpad"), tuple("a#a"), OracleBudget(stack_cap=6))
    assert rep.accepted
    assert rep.accept == INFINITE
    assert "accept" in rep.certificates


def test_node_cap_reports_exhaustion(machines):
    rep = explore(machines("comp"), tuple("111111"), OracleBudget(stack_cap=12, node_cap=5))
    assert rep.exhausted and rep.visited == 5


def test_budget_validation():
    with pytest.raises(ValueError):
        OracleBudget(node_cap=0)


def test_language_sample(machines):
    words, cut = language_sample(machines("bounded"), OracleBudget(input_cap=3))
    assert not cut
    assert words == [(), ("a",), ("a", "a"), ("a", "a", "a")]


def test_store_sample_read_phase(machines):
    m = machines("copyinput")
    words, truncated = store_sample(m, OracleBudget(stack_cap=3, input_cap=2))
    assert ("f", ("a", "b"), 2) in words
    assert all(state in m.read_states for state, _, _ in words)
    full, _ = store_sample(m, OracleBudget(stack_cap=3, input_cap=2), phases="all")
    assert words < full


def test_write_prefixes_ww(machines):
    got = write_prefixes(machines("ww"), 3)
    assert got == set(all_words(["a", "b"], 3))
