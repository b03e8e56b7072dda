from __future__ import annotations

import pytest

from conftest import all_words
from stackspace.measures import (
    BudgetExceeded,
    ProfileOptions,
    ProfileRow,
    asymptotic_report,
    compare_backends,
    profile,
    sigma_n,
    sigma_u,
)
from stackspace.oracle import OracleBudget
from stackspace.values import INFINITE, AtLeast, Finite

CSA_NAMES = ["comp", "ww", "copy", "kdistinct", "xpad", "copyinput", "nopush", "bounded", "empty"]


def test_comp_examples(machines):
    m = machines("comp")
    assert sigma_u(m, "111111", "accept") == Finite(3)
    assert sigma_u(m, "111111", "weak") == Finite(2)
    assert sigma_u(m, "1111111", "weak") == Finite(0)
    assert sigma_u(m, "", "strong") == INFINITE


def test_unknown_measure_and_symbol(machines):
    m = machines("comp")
    with pytest.raises(ValueError):
        sigma_u(m, "11", "medium")
    with pytest.raises(ValueError):
        sigma_u(m, "12", "weak")


def test_oracle_backend_for_nesa(machines):
    m = machines("pref")
    assert sigma_u(m, "abaab", "accept", OracleBudget(stack_cap=8)) == Finite(2)


@pytest.mark.parametrize("name", CSA_NAMES)
def test_measures_are_ordered(machines, name):
    m = machines(name)
    for w in all_words(sorted(m.input_alphabet), 3):
        weak, accept, strong = (sigma_u(m, w, z).as_float() for z in ("weak", "accept", "strong"))
        assert weak <= accept <= strong


def test_profile_envelope(machines):
    rows = profile(machines("comp"), 12, "accept")
    assert [r.n for r in rows] == list(range(13))
    for prev, row in zip(rows, rows[1:]):
        assert row.sigma_hat.as_float() >= prev.sigma_hat.as_float()
        assert row.sigma_hat.as_float() >= row.sigma.as_float()
    assert rows[12].sigma == Finite(6)
    assert rows[12].csv() == "12,6,6,1 1 1 1 1 1 1 1 1 1 1 1"


def test_profile_n_min_keeps_envelope(machines):
    rows = profile(machines("comp"), 9, "accept", n_min=7)
    assert [r.n for r in rows] == [7, 8, 9]
    assert rows[0].sigma == Finite(0) and rows[0].sigma_hat == Finite(3)


def test_weak_profile_multisymbol(machines):
    # branch and bound over Σⁿ agrees with per-word maxima
    m = machines("ww")
    for n in range(6):
        row = sigma_n(m, n, "weak")
        brute = max(sigma_u(m, w, "weak").k for w in all_words(sorted(m.input_alphabet), n) if len(w) == n)
        assert row.sigma == Finite(brute)
        if row.witness is not None:
            assert sigma_u(m, row.witness, "weak") == row.sigma


def test_accept_profile_multisymbol(machines):
    m = machines("copyinput")
    for n in range(5):
        brute = max(sigma_u(m, w, "accept").k for w in all_words(["a", "b"], n) if len(w) == n)
        assert sigma_n(m, n, "accept").sigma == Finite(brute)


def test_profile_from_word_list(machines):
    m = machines("pref")
    words = [tuple("abaab"), tuple("ab"), tuple("abab")]
    opts = ProfileOptions(oracle=OracleBudget(stack_cap=8))
    rows = profile(m, 5, "accept", opts, words=words)
    assert rows[5].sampled and rows[5].sigma == Finite(2)
    assert rows[4].sigma == Finite(0)
    assert rows[2].witness == ("a", "b")


def test_enumeration_budget(machines):
    opts = ProfileOptions(enum_budget=10)
    with pytest.raises(BudgetExceeded):
        profile(machines("pref"), 5, "weak", opts)


def test_row_json():
    row = ProfileRow(3, Finite(1), AtLeast(2), ("a",), True)
    assert row.to_json() == {
        "n": 3,
        "sigma": {"kind": "finite", "value": 1},
        "sigmaHat": {"kind": "atleast", "value": 2},
        "witness": ["a"],
        "sampled": True,
    }
    assert row.csv() == "3,1,>=2,a"


def test_asymptotic_shapes():
    def rows(f):
        return [ProfileRow(n, Finite(f(n)), Finite(f(n))) for n in range(1, 21)]

    assert asymptotic_report(rows(lambda n: 3)).best == "1"
    assert asymptotic_report(rows(lambda n: n // 2)).best == "n"
    assert asymptotic_report(rows(lambda n: round(2 * n ** 0.5))).best == "sqrt(n)"
    with pytest.raises(ValueError):
        asymptotic_report(rows(lambda n: 1)[:3])


@pytest.mark.parametrize("name", ["ww", "bounded", "nopush", "copyinput"])
def test_backends_agree_small(machines, name):
    checked, bad = compare_backends(machines(name), 3, OracleBudget(stack_cap=6))
    assert checked > 0 and bad == []
