"""Decision procedures for checking stack automata: z-limitedness, constant space, trichotomy."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import csa
from .machine import BOT, StackMachine, Transition, _fresh, make_machine
from .nfa import Nfa

KINDS = ("accept", "strong")


def _check(m: StackMachine, z: str) -> None:
    csa.require_csa(m)
    if z not in KINDS:
        raise ValueError(f"decidable measures are {KINDS}, not {z!r}")


def all_final(m: StackMachine) -> StackMachine:
    """Variant accepting every partial computation.

    Read states all become final. A fresh final read state is reachable from
    every write state by a λ ``wstay``, so a computation may stop during the
    write phase while the machine stays a CSA.
    """
    csa.require_csa(m)
    taken = set(m.states)
    stop = _fresh("halt", taken)
    trans = list(m.transitions)
    for q in sorted(m.write_states):
        for y in sorted(m.stack_alphabet) + [BOT]:
            trans.append(Transition(q, None, y, stop, "wstay"))
    partition = dict(m.partition) | {stop: "r"}
    return make_machine(
        taken, m.input_alphabet, m.stack_alphabet, trans, m.initial,
        m.read_states | {stop}, "CSA", partition, m.name + "_all",
    )


@dataclass(frozen=True)
class PrimedMachine:
    machine: StackMachine
    primed: dict  # original stack symbol -> primed copy


def primed_machine(m: StackMachine) -> PrimedMachine:
    """Machine that, inside one guessed window of λ write moves, pushes primed copies.

    Write states come in three phases: before, inside and after the window.
    Read states may scan primed cells only with λ transitions.
    """
    csa.require_csa(m)
    gamma = sorted(m.stack_alphabet)
    taken = set(m.states) | set(gamma)
    primed = {x: _fresh(x + "'", taken) for x in gamma}
    phase = {(q, k): _fresh(f"{q}.{k}", taken) for q in sorted(m.write_states) for k in (0, 1, 2)}

    def target(q: str, k: int) -> str:
        return phase[(q, k)] if q in m.write_states else q

    plain_tops = gamma + [BOT]
    any_tops = plain_tops + [primed[x] for x in gamma]
    trans = []
    for t in m.transitions:
        if t.is_write:
            q = t.source
            tops_by_phase = {0: [t.top], 2: [t.top] + ([primed[t.top]] if t.top in primed else [])}
            if t.symbol is None:
                tops_by_phase[1] = tops_by_phase[2]
            for k, tops in tops_by_phase.items():
                push = t.push
                if t.action == "push" and k == 1:
                    push = primed[t.push]
                for top in tops:
                    trans.append(Transition(phase[(q, k)], t.symbol, top, target(t.target, k), t.action, push))
        else:
            trans.append(t)
            if t.symbol is None and t.top in primed:
                trans.append(Transition(t.source, None, primed[t.top], t.target, t.action, t.push))
    for q in sorted(m.write_states):
        for top in plain_tops:
            trans.append(Transition(phase[(q, 0)], None, top, phase[(q, 1)], "wstay"))
        for top in any_tops:
            trans.append(Transition(phase[(q, 1)], None, top, phase[(q, 2)], "wstay"))
    partition = {q: "r" for q in m.read_states} | {s: "w" for s in phase.values()}
    machine = make_machine(
        partition,
        m.input_alphabet,
        set(gamma) | set(primed.values()),
        trans,
        target(m.initial, 0),
        m.finals,
        "CSA",
        partition,
        m.name + "_primed",
    )
    return PrimedMachine(machine, primed)


@dataclass(frozen=True)
class Evidence:
    store_finite: Optional[bool] = None
    primed_image_finite: Optional[bool] = None
    witness: Optional[str] = None
    automaton: Optional[Nfa] = field(default=None, compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "storeFinite": self.store_finite,
            "primedImageFinite": self.primed_image_finite,
            "witness": self.witness,
        }


WITNESS_LENGTH = 6


def _long_witness(nfa: Nfa) -> Optional[str]:
    """A member longer than a small threshold, to show an infinite language is nontrivial."""
    word = nfa.witness_long(WITNESS_LENGTH)
    return None if word is None else csa.render_store_word(word)


def primed_image(m: StackMachine, z: str) -> Nfa:
    """Primed symbols of the store words of the primed machine, everything else erased."""
    _check(m, z)
    base = m if z == "accept" else all_final(m)
    pm = primed_machine(base)
    keep = set(pm.primed.values())
    store = csa.store_language(pm.machine)
    return store.erase_symbols(lambda a: a in keep, keep).trim()


def is_z_limited(m: StackMachine, z: str) -> tuple:
    """Return ``(limited, evidence)``: limited iff the primed image is finite."""
    image = primed_image(m, z)
    finite = image.is_finite()
    witness = None if finite else _long_witness(image)
    return finite, Evidence(primed_image_finite=finite, witness=witness, automaton=image)


def constant_store(m: StackMachine, z: str) -> Nfa:
    _check(m, z)
    return csa.store_language(m if z == "accept" else all_final(m))


def is_constant_space(m: StackMachine, z: str) -> tuple:
    """Return ``(constant, evidence)``: constant iff the store language is finite."""
    store = constant_store(m, z)
    finite = store.is_finite()
    witness = None if finite else _long_witness(store)
    return finite, Evidence(store_finite=finite, witness=witness, automaton=store)


@dataclass(frozen=True)
class Verdict:
    measure: str
    verdict: str  # Unlimited | Constant | Linear
    evidence: Evidence

    def to_json(self) -> dict:
        return {"measure": self.measure, "verdict": self.verdict, "evidence": self.evidence.to_json()}


def classify(m: StackMachine, z: str) -> Verdict:
    limited, lim = is_z_limited(m, z)
    if not limited:
        return Verdict(z, "Unlimited", lim)
    constant, const = is_constant_space(m, z)
    evidence = Evidence(const.store_finite, True, const.witness)
    return Verdict(z, "Constant" if constant else "Linear", evidence)
