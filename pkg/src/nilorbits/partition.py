"""Partitions of n stored as ascending (part, multiplicity) pairs."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidInput, ParseError


@dataclass(frozen=True)
class Partition:
    parts: tuple  # ((d, t_d), ...) with d strictly increasing

    def __post_init__(self):
        parts = tuple((int(d), int(t)) for d, t in self.parts)
        prev = 0
        for d, t in parts:
            if d <= prev:
                raise InvalidInput("parts must be positive and strictly increasing")
            if t < 1:
                raise InvalidInput("multiplicities must be positive")
            prev = d
        if not parts:
            raise InvalidInput("empty partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_list(cls, sizes) -> "Partition":
        counts = {}
        for s in sizes:
            counts[s] = counts.get(s, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @property
    def n(self) -> int:
        return sum(d * t for d, t in self.parts)

    @property
    def sizes(self) -> tuple:
        """Part sizes ascending, with repetition."""
        return tuple(d for d, t in self.parts for _ in range(t))

    def mult(self, d: int) -> int:
        for e, t in self.parts:
            if e == d:
                return t
        return 0

    def __str__(self):
        return ",".join(f"{d}^{t}" for d, t in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``1^2,3^1``; a bare ``d`` means multiplicity one, repeats add up."""
        counts = {}
        for tok in (s.strip() for s in text.split(",")):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ParseError(f"bad partition token {tok!r}")
            d, t = int(m.group(1)), int(m.group(2) or 1)
            if d < 1 or t < 1:
                raise ParseError(f"zero part or multiplicity in {tok!r}")
            counts[d] = counts.get(d, 0) + t
        return cls(tuple(sorted(counts.items())))


@dataclass(frozen=True)
class PartClasses:
    N: frozenset
    E: frozenset
    O: frozenset
    O1: frozenset
    O3: frozenset


@dataclass(frozen=True)
class PartitionFlags:
    is_even: bool
    is_very_even: bool
    in_P1: bool
    in_P_minus1: bool


def _ascending(n: int, least: int) -> Iterator[list]:
    if n == 0:
        yield []
        return
    for k in range(least, n + 1):
        for rest in _ascending(n - k, k):
            yield [k] + rest


def enumerate_partitions(n: int) -> list:
    """All partitions of n, lexicographic on ascending part lists."""
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"n must be a positive integer, got {n!r}")
    return [Partition.from_list(s) for s in _ascending(n, 1)]


def classify(P: Partition) -> PartClasses:
    N = frozenset(d for d, _ in P.parts)
    E = frozenset(d for d in N if d % 2 == 0)
    O = N - E
    return PartClasses(N, E, O, frozenset(d for d in O if d % 4 == 1), frozenset(d for d in O if d % 4 == 3))


def predicates(P: Partition) -> PartitionFlags:
    even = all(d % 2 == 0 for d, _ in P.parts)
    return PartitionFlags(
        is_even=even,
        is_very_even=even and all(t % 2 == 0 for _, t in P.parts),
        in_P1=all(t % 2 == 0 for d, t in P.parts if d % 2 == 0),
        in_P_minus1=all(t % 2 == 0 for d, t in P.parts if d % 2 == 1),
    )
