"""Weak, accept and strong space measures per word and per length."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import csa
from .machine import StackMachine
from .oracle import OracleBudget, explore
from .values import MEASURES, Finite, MeasureValue, envelope, from_length


class BudgetExceeded(RuntimeError):
    """Exhaustive per-length evaluation is too large; supply a word list instead."""


def _check_kind(z: str) -> None:
    if z not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}, not {z!r}")


def _check_word(m: StackMachine, word: Sequence[str]) -> tuple:
    word = tuple(word)
    bad = sorted(set(word) - m.input_alphabet)
    if bad:
        raise ValueError(f"symbols {bad} are not in the input alphabet of {m.name}")
    return word


def _csa_value(m: StackMachine, pattern: tuple, z: str) -> MeasureValue:
    if z == "strong":
        return from_length(csa.write_graph(m, pattern).max_word_length())
    product = csa.accepting_product(m, pattern)
    if z == "accept":
        return from_length(product.max_word_length())
    return from_length(product.min_word_length())


def sigma_u(m: StackMachine, word: Sequence[str], z: str, budget: Optional[OracleBudget] = None) -> MeasureValue:
    """Space used on ``word``; 0 for weak/accept when the word is rejected."""
    _check_kind(z)
    word = _check_word(m, word)
    if m.is_csa and budget is None:
        return _csa_value(m, csa.word_pattern(m, word), z)
    return explore(m, word, budget or OracleBudget()).measure(z)


@dataclass(frozen=True)
class ProfileRow:
    n: int
    sigma: MeasureValue
    sigma_hat: MeasureValue
    witness: Optional[tuple] = None
    sampled: bool = False

    def csv(self) -> str:
        witness = "" if self.witness is None else " ".join(self.witness)
        return f"{self.n},{self.sigma.csv()},{self.sigma_hat.csv()},{witness}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": self.sigma.to_json(),
            "sigmaHat": self.sigma_hat.to_json(),
            "witness": None if self.witness is None else list(self.witness),
            "sampled": self.sampled,
        }


@dataclass(frozen=True)
class ProfileOptions:
    enum_budget: int = 50_000  # words per length for the oracle backend
    node_budget: int = 200_000  # search nodes for the exact weak maximum
    oracle: OracleBudget = OracleBudget()


def _better(value: MeasureValue, best: Optional[MeasureValue]) -> bool:
    if best is None:
        return True
    if best.is_infinite:
        return False
    if value.is_infinite:
        return True
    return value.k > best.k


def _weak_max(m: StackMachine, n: int, node_budget: int) -> tuple:
    """Exact max over Σⁿ of the weak measure, by branch and bound on input patterns.

    A partial pattern fixes a prefix and leaves later positions free; its
    accepting stack set contains that of every completion, so its longest
    member bounds the weak value of all completions.
    """
    symbols = sorted(m.input_alphabet)
    full = frozenset(symbols)
    best = [0, None]
    nodes = [0]

    def visit(prefix: tuple):
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise BudgetExceeded(f"weak maximum at n={n} needs more than {node_budget} search nodes")
        pattern = tuple(frozenset([a]) for a in prefix) + (full,) * (n - len(prefix))
        product = csa.accepting_product(m, pattern)
        if len(prefix) == n:
            low = product.min_word_length()
            if low is not None and (best[1] is None or low > best[0]):
                best[0], best[1] = low, prefix
            return
        high = product.max_word_length()
        if high is None:
            return
        if high != math.inf and best[1] is not None and high <= best[0]:
            return
        for a in symbols:
            visit(prefix + (a,))

    # with one symbol there is nothing to branch on
    visit(tuple(symbols) * n if len(symbols) == 1 else ())
    return Finite(best[0]), best[1]


def _csa_sigma_n(m: StackMachine, n: int, z: str, options: ProfileOptions) -> tuple:
    if z == "weak":
        return _weak_max(m, n, options.node_budget)
    value = _csa_value(m, csa.length_pattern(m, n), z)
    witness = (sorted(m.input_alphabet)[0],) * n if len(m.input_alphabet) == 1 else None
    return value, witness


def _max_over_words(m: StackMachine, words: Iterable[tuple], z: str, budget: OracleBudget) -> tuple:
    best, witness = None, None
    for w in words:
        value = explore(m, w, budget).measure(z)
        if _better(value, best):
            witness = w
        best = value if best is None else envelope(best, value)
    return (Finite(0) if best is None else best), witness


def _raw_sigma_n(m: StackMachine, n: int, z: str, options: ProfileOptions, words=None) -> tuple:
    if words is not None:
        chosen = sorted({_check_word(m, w) for w in words if len(w) == n})
        value, witness = _max_over_words(m, chosen, z, options.oracle)
        return value, witness, True
    if m.is_csa:
        value, witness = _csa_sigma_n(m, n, z, options)
        return value, witness, False
    size = len(m.input_alphabet) ** n
    if size > options.enum_budget:
        raise BudgetExceeded(f"{size} words of length {n} exceed the enumeration budget {options.enum_budget}; pass a word list")
    words_n = itertools.product(sorted(m.input_alphabet), repeat=n)
    value, witness = _max_over_words(m, words_n, z, options.oracle)
    return value, witness, False


def profile(
    m: StackMachine,
    n_max: int,
    z: str,
    options: ProfileOptions = ProfileOptions(),
    words: Optional[Iterable[Sequence[str]]] = None,
    n_min: int = 0,
) -> list:
    """Rows for n = n_min..n_max; the envelope always starts from n = 0."""
    _check_kind(z)
    word_list = None if words is None else [tuple(w) for w in words]
    rows = []
    hat = None
    for n in range(0, n_max + 1):
        value, witness, sampled = _raw_sigma_n(m, n, z, options, word_list)
        hat = value if hat is None else envelope(hat, value)
        if n >= n_min:
            rows.append(ProfileRow(n, value, hat, witness, sampled))
    return rows


def sigma_n(m: StackMachine, n: int, z: str, options: ProfileOptions = ProfileOptions(), words=None) -> ProfileRow:
    return profile(m, n, z, options, words, n_min=n)[0]


# -- shape fits -------------------------------------------------------------------

SHAPES = (("1", lambda n: 1.0), ("sqrt(n)", math.sqrt), ("n", float))


@dataclass(frozen=True)
class AsymptoticReport:
    best: str
    fits: dict  # shape -> (coefficient, residual)
    ratio_range: tuple  # min/max of sigmaHat(n)/f(n) for the best shape

    def to_json(self) -> dict:
        return {
            "best": self.best,
            "fits": {k: {"coefficient": c, "residual": r} for k, (c, r) in self.fits.items()},
            "ratioRange": list(self.ratio_range),
        }


def asymptotic_report(rows: Sequence[ProfileRow], min_rows: int = 8) -> AsymptoticReport:
    """Least-squares fits of the envelope against c·1, c·√n and c·n (descriptive only)."""
    points = [(r.n, r.sigma_hat.k) for r in rows if r.sigma_hat.is_finite and r.n > 0]
    if len(points) < min_rows:
        raise ValueError(f"need at least {min_rows} finite rows with n > 0, got {len(points)}")
    fits = {}
    for name, f in SHAPES:
        xs = [f(n) for n, _ in points]
        denom = sum(x * x for x in xs)
        c = sum(x * y for x, (_, y) in zip(xs, points)) / denom
        residual = sum((y - c * x) ** 2 for x, (_, y) in zip(xs, points))
        fits[name] = (c, residual)
    # ties within rounding go to the simpler shape (earlier in SHAPES)
    best = min(fits, key=lambda k: (round(fits[k][1], 9), [s for s, _ in SHAPES].index(k)))
    f = dict(SHAPES)[best]
    ratios = [y / f(n) for n, y in points]
    return AsymptoticReport(best, fits, (min(ratios), max(ratios)))


# -- backend agreement ---------------------------------------------------------------

@dataclass(frozen=True)
class Discrepancy:
    word: tuple
    measure: str
    analytic: MeasureValue
    oracle: MeasureValue


def _oracle_certifies(value: MeasureValue) -> bool:
    return value.kind != "atleast"


def compare_backends(m: StackMachine, max_length: int, budget: OracleBudget = OracleBudget()) -> tuple:
    """Compare the exact CSA analysis with the oracle on all words up to ``max_length``.

    Returns ``(checked, discrepancies)``. Uncertified oracle values count as a
    discrepancy only when the exact value is below the oracle's lower bound.
    """
    csa.require_csa(m)
    checked = 0
    found = []
    for length in range(max_length + 1):
        for word in itertools.product(sorted(m.input_alphabet), repeat=length):
            report = explore(m, word, budget)
            for z in MEASURES:
                exact = sigma_u(m, word, z)
                seen = report.measure(z)
                checked += 1
                if _oracle_certifies(seen):
                    ok = exact == seen
                else:
                    ok = exact.is_infinite or exact.k >= seen.k
                if not ok:
                    found.append(Discrepancy(word, z, exact, seen))
    return checked, found
