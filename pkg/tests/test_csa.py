from __future__ import annotations

import pytest

from conftest import all_words
from stackspace import csa
from stackspace.csa import CriticalCase, StateSym, critical_language, n0_nfa, nk_twoway, store_word
from stackspace.machine import BOT, MachineClassError, Transition, make_machine
from stackspace.oracle import OracleBudget, explore, lambda_write_states, store_sample, write_prefixes

CSA_NAMES = ["comp", "ww", "copy", "kdistinct", "xpad", "copyinput", "nopush", "bounded", "empty"]


def oracle_stacks(m, word, cap, accepting=True):
    rep = explore(m, tuple(word), OracleBudget(stack_cap=cap), keep_graph=True)
    g = rep.graph
    if accepting:
        return {c.tape.stack for c in g["coreachable"] if c.index == len(word) and c.state in m.finals}
    return {c.tape.stack for c in g["settled"]}


def aa(k):
    return ("a",) * k


# -- stack sets -----------------------------------------------------------------

def test_comp_accepting_stacks(machines):
    # a single block of length n is not a proper divisor, so 1^4 only leaves aa
    m = machines("comp")
    s = csa.accepting_stack_set(m, "1111")
    assert set(s.members(10)) == oracle_stacks(m, "1111", 6) == {aa(2)}
    assert (s.min_size(), s.max_size()) == (2, 2)
    six = csa.accepting_stack_set(m, "111111")
    assert set(six.members(10)) == {aa(2), aa(3)}


def test_rejected_word_has_empty_stack_set(machines):
    for name, word in [("comp", "111"), ("ww", "ab#a"), ("empty", "a")]:
        assert csa.accepting_stack_set(machines(name), word).nfa.is_empty()


def test_copy_accepting_stacks(machines):
    m = machines("copy")
    word = tuple("a$a#b$b")
    got = set(csa.accepting_stack_set(m, word).members(6))
    assert got == oracle_stacks(m, word, 6) == {("a", "#", "b")}


def test_comp_reachable_is_infinite(machines):
    s = csa.reachable_stack_set(machines("comp"), "11")
    assert not s.nfa.is_finite()


def test_nopush_reachable_is_empty_stack(machines):
    assert csa.reachable_stack_set(machines("nopush"), "ab").members(5) == [()]


def test_ww_reachable(machines):
    m = machines("ww")
    got = set(csa.reachable_stack_set(m, tuple("ab#ab")).members(4))
    assert got == oracle_stacks(m, tuple("ab#ab"), 4, accepting=False) == {(), ("a",), ("a", "b")}


@pytest.mark.parametrize("name", CSA_NAMES)
def test_acceptance_matches_oracle(machines, name):
    m = machines(name)
    decided = 0
    for w in all_words(sorted(m.input_alphabet), 4):
        exact = not csa.accepting_stack_set(m, w).nfa.is_empty()
        seen = explore(m, w, OracleBudget(stack_cap=6)).accepted
        if exact:
            assert seen is True
        elif seen is not None:
            assert seen is False
        # a truncated search cannot prove rejection, so None is allowed there
        decided += seen is not None
    assert decided > 0


def test_requires_csa(machines):
    with pytest.raises(MachineClassError):
        csa.accepting_stack_set(machines("pref"), "ab")


# -- final stacks ------------------------------------------------------------------

def test_nopush_final_stacks(machines):
    assert csa.final_stack_language(machines("nopush")).members(4) == [()]


def test_comp_final_stacks(machines):
    m = machines("comp")
    seen = set()
    for n in range(13):
        seen |= oracle_stacks(m, "1" * n, 6)
    assert seen == {aa(k) for k in range(2, 7)}
    assert set(csa.final_stack_language(m).members(6)) == seen


def test_ww_final_stacks(machines):
    m = machines("ww")
    seen = set()
    for w in all_words(["a", "b", "#"], 7):
        seen |= oracle_stacks(m, w, 4)
    assert seen == set(all_words(["a", "b"], 3))
    assert set(csa.final_stack_language(m).members(3)) == seen


@pytest.mark.parametrize("name", CSA_NAMES)
def test_final_stacks_two_ways(machines, name):
    m = machines(name)
    direct = set(csa.final_stack_language(m).members(6))
    assert set(csa.final_stacks_from_store(m).members(6)) == direct


# -- store language ------------------------------------------------------------------

def test_store_of_empty_machine(machines):
    m = machines("empty")
    store = csa.store_language(m)
    assert [csa.render_store_word(w) for w in store.words(10)] == ["q▷↰◁"]
    assert store.accepts(store_word("q", (), 0))


def test_comp_store_is_infinite(machines):
    m = machines("comp")
    store = csa.store_language(m)
    assert not store.is_finite()
    assert store.accepts(store_word("s1", aa(4), 2))
    assert not store.accepts(store_word("s1", aa(1), 1))


def test_store_phases(machines):
    m = machines("copyinput")
    read = csa.store_language(m)
    full = csa.store_language(m, "all")
    assert not read.accepts(store_word("w0", ("a",), 1))
    assert full.accepts(store_word("w0", ("a",), 1))
    with pytest.raises(ValueError):
        csa.store_language(m, "write")


def test_state_symbols_render():
    assert str(StateSym("q")) == "q"
    assert csa.render_store_word(store_word("q", ("a", "b"), 1)) == "q▷a↰b◁"


# -- write-phase prefixes ------------------------------------------------------------

@pytest.mark.parametrize("name", ["copy", "ww", "nopush", "copyinput"])
def test_write_prefixes_match_oracle(machines, name):
    m = machines(name)
    lwm = csa.write_prefix_language(m)
    want = write_prefixes(m, 5, stack_cap=8)
    got = {w for w in all_words(sorted(m.input_alphabet), 5) if lwm.accepts(w)}
    assert got == want


def test_write_prefix_examples(machines):
    assert set(csa.write_prefix_language(machines("copy")).words(5)) == {()}
    assert set(csa.write_prefix_language(machines("nopush")).words(5)) == {()}
    assert set(csa.write_prefix_language(machines("ww")).words(4)) == set(all_words(["a", "b"], 4))


# -- critical sections ----------------------------------------------------------------

def pusher():
    rules = [Transition("q", None, "a", "q", "push", "a"), Transition("q", None, BOT, "q", "push", "a")]
    return make_machine(["q", "r"], ["1"], ["a"], rules, "q", ["r"], "CSA", {"q": "w", "r": "r"})


def left_walker():
    rules = [Transition("r", None, "a", "r", "left"), Transition("r", None, "b", "r", "left")]
    return make_machine(["w", "r"], ["1"], ["a", "b"], rules, "w", ["r"], "CSA", {"w": "w", "r": "r"})


def test_n0_single_push_loop():
    n0 = n0_nfa(pusher(), "q", "q")
    assert {w for w in all_words(["a"], 5) if n0.accepts(w)} == {aa(k) for k in range(1, 6)}


@pytest.mark.parametrize("name", ["comp", "copy", "kdistinct", "xpad"])
def test_n0_matches_write_search(machines, name):
    m = machines(name)
    gamma = sorted(m.stack_alphabet)
    for qi in sorted(m.write_states):
        for qj in sorted(m.states):
            n0 = n0_nfa(m, qi, qj)
            for v in all_words(gamma, 4):
                for a in gamma:
                    target = (a,) + v
                    assert n0.accepts(target) == (qj in lambda_write_states(m, qi, target)), (qi, qj, target)


def test_nk_direction_forcing():
    m = left_walker()
    words = list(all_words(["a", "b"], 4))
    to_left = nk_twoway(m, "r", "r", "right", "left")
    to_right = nk_twoway(m, "r", "r", "right", "right")
    assert all(to_left.accepts(w) for w in words)
    assert not any(to_right.accepts(w) for w in words)
    with pytest.raises(ValueError):
        nk_twoway(m, "r", "r", "up", "left")


def test_critical_single_case_is_n0(machines):
    m = machines("comp")
    single = critical_language(m, [CriticalCase("w2", "r0")])
    n0 = n0_nfa(m, "w2", "r0")
    for w in all_words(["a"], 6):
        assert single.accepts(w) == n0.accepts(w)


def test_critical_contradictory_cases_are_empty():
    m = left_walker()
    cases = [CriticalCase("r", "r", "right", "left"), CriticalCase("r", "r", "right", "right")]
    assert critical_language(m, cases).is_empty()
    with pytest.raises(ValueError):
        critical_language(m, [])


def test_critical_compatible_cases(machines):
    m = machines("comp")
    cases = [CriticalCase("w1", "r0"), CriticalCase("r0", "r0", "right", "left")]
    both = critical_language(m, cases)
    parts = [c.automaton(m) for c in cases]
    for w in all_words(["a"], 5):
        assert both.accepts(w) == all(p.accepts(w) for p in parts)
    assert not both.is_empty()


@pytest.mark.parametrize("name", CSA_NAMES)
def test_store_all_phases_sound(machines, name):
    m = machines(name)
    store = csa.store_language(m, "all")
    sample, _ = store_sample(m, OracleBudget(stack_cap=5, input_cap=4), phases="all")
    assert sample
    for state, stack, head in sorted(sample):
        assert store.accepts(store_word(state, stack, head))
