"""Space-measure values: a finite size, unbounded, or a lower bound from a cut-off search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

MEASURES = ("weak", "accept", "strong")


@dataclass(frozen=True)
class MeasureValue:
    kind: str  # finite | infinite | atleast
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("finite", "infinite", "atleast"):
            raise ValueError(f"bad measure kind {self.kind!r}")
        if self.kind != "infinite" and (self.k is None or self.k < 0):
            raise ValueError(f"{self.kind} needs a nonnegative bound")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def is_exact(self) -> bool:
        return self.kind != "atleast"

    def csv(self) -> str:
        if self.kind == "finite":
            return str(self.k)
        if self.kind == "infinite":
            return "inf"
        return f">={self.k}"

    def text(self) -> str:
        if self.kind == "finite":
            return f"finite {self.k}"
        if self.kind == "infinite":
            return "infinite"
        return f"at-least {self.k}"

    def to_json(self):
        if self.kind == "infinite":
            return {"kind": "infinite"}
        return {"kind": self.kind, "value": self.k}

    def as_float(self) -> float:
        return math.inf if self.kind == "infinite" else float(self.k)

    def __str__(self) -> str:
        return self.csv()


def Finite(k: int) -> MeasureValue:
    return MeasureValue("finite", int(k))


def AtLeast(k: int) -> MeasureValue:
    return MeasureValue("atleast", int(k))


INFINITE = MeasureValue("infinite")


def from_length(length) -> MeasureValue:
    """Convert an NFA word length (None = empty language, inf) to a measure value."""
    if length is None:
        return Finite(0)
    if length == math.inf:
        return INFINITE
    return Finite(length)


def envelope(a: MeasureValue, b: MeasureValue) -> MeasureValue:
    """Maximum of two values; lower bounds stay lower bounds."""
    if a.is_infinite or b.is_infinite:
        return INFINITE
    k = max(a.k, b.k)
    if a.kind == "atleast" or b.kind == "atleast":
        return AtLeast(k)
    return Finite(k)


def parse_value(text: str) -> MeasureValue:
    text = text.strip()
    if text in ("inf", "infinite"):
        return INFINITE
    if text.startswith(">="):
        return AtLeast(int(text[2:]))
    if text.startswith("at-least "):
        return AtLeast(int(text[9:]))
    if text.startswith("finite "):
        return Finite(int(text[7:]))
    return Finite(int(text))
