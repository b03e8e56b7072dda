from __future__ import annotations

import json
import shutil

import pytest

from stackspace.corpus import (
    CORPUS_DIR,
    CorpusError,
    load_corpus,
    load_entry,
    parse_word,
    pref_member,
    pref_window,
    run_entry,
)

ENTRIES = {e.name: e for e in load_corpus()}


def test_corpus_contents():
    assert set(ENTRIES) == {"bounded", "comp", "copy", "copyinput", "empty", "kdistinct", "nopush", "pref", "ww", "xpad"}
    assert all(e.note for e in ENTRIES.values())


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_entry_expectations(name):
    results = run_entry(ENTRIES[name])
    assert results
    failed = [r.line() for r in results if not r.ok]
    assert failed == []


def test_parse_word():
    assert parse_word("ab#") == ("a", "b", "#")
    assert parse_word("x1 x2") == ("x1", "x2")
    assert parse_word("") == ()


def test_pref_helpers():
    assert pref_member(9) == tuple("abaabaaab")
    assert pref_window(0) == (0, 1)
    assert pref_window(50) == (3, 15)


def copy_entry(tmp_path, name, expect):
    shutil.copy(CORPUS_DIR / f"{name}.sam", tmp_path / f"{name}.sam")
    (tmp_path / f"{name}.expect.json").write_text(json.dumps(expect), encoding="utf-8")
    return tmp_path / f"{name}.sam"


def test_unknown_expectation_key(tmp_path):
    with pytest.raises(CorpusError, match="unknown keys"):
        load_entry(copy_entry(tmp_path, "empty", {"colour": 1}))


def test_class_mismatch(tmp_path):
    with pytest.raises(CorpusError, match="expected class"):
        load_entry(copy_entry(tmp_path, "empty", {"class": "SA"}))


def test_decider_expectation_needs_csa(tmp_path):
    with pytest.raises(CorpusError, match="CSA"):
        load_entry(copy_entry(tmp_path, "pref", {"limited": {"accept": True}}))


def test_failing_expectation_is_reported(tmp_path):
    entry = load_entry(copy_entry(tmp_path, "empty", {"measures": [{"word": "", "weak": 3}]}))
    (result,) = run_entry(entry)
    assert not result.ok
    assert result.line() == "FAIL empty: weak on λ (got 0, want 3)"
