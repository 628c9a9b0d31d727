"""Sign matrices, signed Young diagrams and the diagram sets Y, Y^even, ...

A row of length d starting with sign s alternates s, -s, s, ...; when
d = 3 mod 4 the final box is flipped to -s instead.  A part is therefore
fully described by (d, t_d, p_d): its first p_d rows start with +1.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum

from .errors import IndexOutOfRange, InvalidInput, ParseError, PreconditionViolated
from .partition import Partition, enumerate_partitions, predicates


@dataclass(frozen=True)
class SignMatrix:
    d: int
    t: int
    p: int

    def __post_init__(self):
        if self.d < 1 or self.t < 1 or not 0 <= self.p <= self.t:
            raise InvalidInput(f"bad sign matrix (d={self.d}, t={self.t}, p={self.p})")

    @property
    def q(self) -> int:
        return self.t - self.p

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.t and 1 <= j <= self.d):
            raise IndexOutOfRange(f"entry ({i},{j}) outside {self.t}x{self.d}")
        first = 1 if i <= self.p else -1
        if self.d % 4 == 3 and j == self.d:
            return -first
        return first if j % 2 == 1 else -first

    def row(self, i: int) -> tuple:
        return tuple(self.entry(i, j) for j in range(1, self.d + 1))

    def rows(self):
        return [self.row(i) for i in range(1, self.t + 1)]

    def sign_counts(self):
        d, p, q = self.d, self.p, self.q
        if d % 2 == 0:
            return (self.t * d // 2, self.t * d // 2)
        if d % 4 == 1:
            return (p * (d + 1) // 2 + q * (d - 1) // 2, p * (d - 1) // 2 + q * (d + 1) // 2)
        return (p * (d - 1) // 2 + q * (d + 1) // 2, p * (d + 1) // 2 + q * (d - 1) // 2)

    def literal_sign_counts(self):
        flat = [x for r in self.rows() for x in r]
        return (flat.count(1), flat.count(-1))

    def row_parities(self, i: int):
        if not 1 <= i <= self.t:
            raise IndexOutOfRange(f"row {i} outside 1..{self.t}")
        r = self.row(i)
        return (r.count(1), r.count(-1))


def sign_counts(M: SignMatrix):
    return M.sign_counts()


def row_parities(M: SignMatrix, i: int):
    return M.row_parities(i)


@dataclass(frozen=True)
class SignedDiagram:
    signs: tuple  # SignMatrix per part, ascending d

    def __post_init__(self):
        signs = tuple(self.signs)
        if not signs:
            raise InvalidInput("empty diagram")
        if any(b.d <= a.d for a, b in zip(signs, signs[1:])):
            raise InvalidInput("parts must be strictly increasing")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_triples(cls, triples) -> "SignedDiagram":
        return cls(tuple(SignMatrix(d, t, p) for d, t, p in sorted(triples)))

    @property
    def partition(self) -> Partition:
        return Partition(tuple((m.d, m.t) for m in self.signs))

    @property
    def n(self) -> int:
        return sum(m.d * m.t for m in self.signs)

    def part(self, d: int):
        for m in self.signs:
            if m.d == d:
                return m
        return None

    @property
    def signature(self):
        p = q = 0
        for m in self.signs:
            a, b = m.sign_counts()
            p += a
            q += b
        return (p, q)

    def triples(self):
        return tuple((m.d, m.t, m.p) for m in self.signs)

    def __str__(self):
        toks = []
        for m in self.signs:
            if m.p:
                toks.append(f"{m.d}+^{m.p}")
            if m.q:
                toks.append(f"{m.d}-^{m.q}")
        return ",".join(toks)

    def to_json(self):
        return {"parts": [{"d": m.d, "t": m.t, "p": m.p} for m in self.signs]}

    @classmethod
    def from_json(cls, obj) -> "SignedDiagram":
        return cls.from_triples((x["d"], x["t"], x["p"]) for x in obj["parts"])


_TOKEN = re.compile(r"(\d+)([+-])(?:\^(\d+))?")


def parse_diagram(text: str) -> SignedDiagram:
    """Parse the ``d(+|-)^count`` grammar, e.g. ``3+^1,1+^2,1-^1``."""
    plus, minus = {}, {}
    seen = set()
    if not text.strip():
        raise ParseError("empty diagram string")
    for tok in (s.strip() for s in text.split(",")):
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ParseError(f"bad diagram token {tok!r}; expected d+^count or d-^count")
        d, sign, count = int(m.group(1)), m.group(2), int(m.group(3) or 1)
        if d < 1:
            raise ParseError(f"part size must be positive in {tok!r}")
        if count < 1:
            raise ParseError(f"zero count in {tok!r}")
        if (d, sign) in seen:
            raise ParseError(f"repeated token for {d}{sign}")
        seen.add((d, sign))
        (plus if sign == "+" else minus)[d] = count
    ds = sorted(set(plus) | set(minus))
    return SignedDiagram.from_triples((d, plus.get(d, 0) + minus.get(d, 0), plus.get(d, 0)) for d in ds)


def in_S_even(D: SignedDiagram) -> bool:
    return all(m.p == m.t for m in D.signs if m.d % 2 == 0)


def in_S_odd(D: SignedDiagram) -> bool:
    return all(m.p == m.t for m in D.signs if m.d % 2 == 1)


def in_S_prime(D: SignedDiagram) -> bool:
    if not in_S_even(D):
        raise PreconditionViolated("in_S_prime needs every even part to start with +1")
    odd = [m.row_parities(i) for m in D.signs if m.d % 2 == 1 for i in range(1, m.t + 1)]
    return all(lp % 2 == 0 for lp, _ in odd) or all(lm % 2 == 0 for _, lm in odd)


class DiagramSet(Enum):
    Y = "Y"
    Y_EVEN = "Y_even"
    Y_EVEN1 = "Y_even1"
    Y_ODD = "Y_odd"
    Y_ODD_MINUS1 = "Y_odd_minus1"

    @property
    def by_signature(self) -> bool:
        return self in (DiagramSet.Y, DiagramSet.Y_EVEN, DiagramSet.Y_EVEN1)


def _choices(P: Partition, kind: DiagramSet):
    ranges = []
    for d, t in P.parts:
        fixed = (kind in (DiagramSet.Y_EVEN, DiagramSet.Y_EVEN1) and d % 2 == 0) or (
            kind in (DiagramSet.Y_ODD, DiagramSet.Y_ODD_MINUS1) and d % 2 == 1
        )
        ranges.append((t,) if fixed else range(t + 1))
    return itertools.product(*ranges)


def _partition_ok(P: Partition, kind: DiagramSet) -> bool:
    flags = predicates(P)
    if kind is DiagramSet.Y_EVEN1:
        return flags.in_P1
    if kind is DiagramSet.Y_ODD_MINUS1:
        return flags.in_P_minus1
    return True


def enumerate_set(kind, p=None, q=None, n=None) -> list:
    """Diagrams of the named set, ordered by partition then p_d tuple.

    Signature kinds (Y, Y_even, Y_even1) take (p, q); size kinds (Y_odd,
    Y_odd_minus1) take the total size n.
    """
    kind = DiagramSet(kind)
    if kind.by_signature:
        if p is None or q is None or p < 0 or q < 0:
            raise InvalidInput(f"{kind.value} needs p, q >= 0")
        total = p + q
        if total == 0:
            return []
    else:
        if n is None or n < 1:
            raise InvalidInput(f"{kind.value} needs n >= 1")
        total = n
    out = []
    for P in enumerate_partitions(total):
        if not _partition_ok(P, kind):
            continue
        for ps in _choices(P, kind):
            D = SignedDiagram(tuple(SignMatrix(d, t, pd) for (d, t), pd in zip(P.parts, ps)))
            if kind.by_signature and D.signature != (p, q):
                continue
            out.append(D)
    return out


def membership_violation(D: SignedDiagram, kind, p=None, q=None, n=None):
    """Reason D is outside the named set, or None when it belongs."""
    kind = DiagramSet(kind)
    if kind.by_signature:
        if D.signature != (p, q):
            return f"diagram signature {D.signature} differs from ({p},{q})"
    elif D.n != n:
        return f"diagram size {D.n} differs from {n}"
    if kind in (DiagramSet.Y_EVEN, DiagramSet.Y_EVEN1):
        bad = [m.d for m in D.signs if m.d % 2 == 0 and m.p != m.t]
        if bad:
            return f"even part {bad[0]} must start +1 in every row"
    if kind is DiagramSet.Y_EVEN1:
        bad = [m.d for m in D.signs if m.d % 2 == 0 and m.t % 2]
        if bad:
            return f"even part {bad[0]} must have even multiplicity"
    if kind in (DiagramSet.Y_ODD, DiagramSet.Y_ODD_MINUS1):
        bad = [m.d for m in D.signs if m.d % 2 == 1 and m.p != m.t]
        if bad:
            return f"odd part {bad[0]} must start +1 in every row"
    if kind is DiagramSet.Y_ODD_MINUS1:
        bad = [m.d for m in D.signs if m.d % 2 == 1 and m.t % 2]
        if bad:
            return f"odd part {bad[0]} must have even multiplicity"
    return None


def is_member(D: SignedDiagram, kind, p=None, q=None, n=None) -> bool:
    return membership_violation(D, kind, p=p, q=q, n=n) is None
