"""Space complexity of stack automata: exact analyses for checking stack automata,
a bounded oracle for every class, deciders and a bundled corpus."""

from .machine import (
    BOT,
    HEAD,
    TOP,
    Configuration,
    MachineClassError,
    MachineError,
    MachineSyntaxError,
    StackMachine,
    TapeWord,
    Transition,
    load_machine,
    parse_machine,
    partition_states,
    step,
)
from .values import INFINITE, AtLeast, Finite, MeasureValue

__all__ = [
    "BOT",
    "HEAD",
    "TOP",
    "Configuration",
    "MachineClassError",
    "MachineError",
    "MachineSyntaxError",
    "StackMachine",
    "TapeWord",
    "Transition",
    "load_machine",
    "parse_machine",
    "partition_states",
    "step",
    "INFINITE",
    "AtLeast",
    "Finite",
    "MeasureValue",
]
