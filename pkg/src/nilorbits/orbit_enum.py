"""Real forms, their orbit parameter sets, and fiber expansion into orbit classes."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .errors import BadFiberIndex, InvalidForm, NotInParamSet, ParseError
from .exactlin import ScalarField
from .partition import Partition, enumerate_partitions, predicates
from .signed_diagram import (
    DiagramSet,
    SignedDiagram,
    enumerate_set,
    in_S_prime,
    membership_violation,
    parse_diagram,
)


class FormKind(Enum):
    SL_R = "sl_r"
    SL_H = "sl_h"
    SU = "su"
    SO = "so"
    SO_STAR = "so_star"
    SP_R = "sp_r"
    SP_PQ = "sp_pq"


_BY_SIZE = {FormKind.SL_R, FormKind.SL_H, FormKind.SO_STAR, FormKind.SP_R}
_FIELD = {
    FormKind.SL_R: ScalarField.R,
    FormKind.SL_H: ScalarField.H,
    FormKind.SU: ScalarField.C,
    FormKind.SO: ScalarField.R,
    FormKind.SO_STAR: ScalarField.H,
    FormKind.SP_R: ScalarField.R,
    FormKind.SP_PQ: ScalarField.H,
}


@dataclass(frozen=True)
class RealForm:
    kind: FormKind
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", FormKind(self.kind))

    @property
    def by_size(self) -> bool:
        return self.kind in _BY_SIZE

    @property
    def field(self) -> ScalarField:
        return _FIELD[self.kind]

    @property
    def has_form(self) -> bool:
        return self.kind not in (FormKind.SL_R, FormKind.SL_H)

    @property
    def matrix_size(self) -> int:
        if self.kind is FormKind.SP_R:
            return 2 * self.n
        return self.n if self.by_size else self.p + self.q

    @property
    def label(self) -> str:
        k = self.kind
        if k is FormKind.SL_R:
            return f"sl_{self.n}(R)"
        if k is FormKind.SL_H:
            return f"sl_{self.n}(H)"
        if k is FormKind.SO_STAR:
            return f"so*({2 * self.n})"
        if k is FormKind.SP_R:
            return f"sp({self.n},R)"
        name = {FormKind.SU: "su", FormKind.SO: "so", FormKind.SP_PQ: "sp"}[k]
        return f"{name}({self.p},{self.q})"

    def validate(self) -> "RealForm":
        k = self.kind
        if self.by_size:
            if self.n is None or self.p is not None or self.q is not None:
                raise InvalidForm(f"{k.value} takes n only")
            least = {FormKind.SL_R: 2, FormKind.SL_H: 2, FormKind.SO_STAR: 3, FormKind.SP_R: 1}[k]
            if self.n < least:
                why = {
                    FormKind.SO_STAR: f"so*(2n) needs n >= 3 to be simple, got n={self.n}",
                }.get(k, f"{k.value} needs n >= {least}, got n={self.n}")
                raise InvalidForm(why)
            return self
        if self.p is None or self.q is None or self.n is not None:
            raise InvalidForm(f"{k.value} takes p and q")
        if self.p < 1 or self.q < 1:
            raise InvalidForm(f"{self.label}: p and q must be >= 1 (compact forms are excluded)")
        if k is FormKind.SO and (self.p, self.q) in ((1, 1), (2, 2)):
            raise InvalidForm(f"so({self.p},{self.q}) is not simple")
        return self

    @property
    def diagram_set(self):
        """(DiagramSet, params) for signed forms; None for sl_n(R), sl_n(H)."""
        k = self.kind
        if k is FormKind.SU:
            return DiagramSet.Y, {"p": self.p, "q": self.q}
        if k is FormKind.SO:
            return DiagramSet.Y_EVEN1, {"p": self.p, "q": self.q}
        if k is FormKind.SP_PQ:
            return DiagramSet.Y_EVEN, {"p": self.p, "q": self.q}
        if k is FormKind.SO_STAR:
            return DiagramSet.Y_ODD, {"n": self.n}
        if k is FormKind.SP_R:
            return DiagramSet.Y_ODD_MINUS1, {"n": 2 * self.n}
        return None


def SlR(n):
    return RealForm(FormKind.SL_R, n=n)


def SlH(n):
    return RealForm(FormKind.SL_H, n=n)


def SU(p, q):
    return RealForm(FormKind.SU, p=p, q=q)


def SO(p, q):
    return RealForm(FormKind.SO, p=p, q=q)


def SOStar(n):
    return RealForm(FormKind.SO_STAR, n=n)


def SpR(n):
    return RealForm(FormKind.SP_R, n=n)


def SpPQ(p, q):
    return RealForm(FormKind.SP_PQ, p=p, q=q)


Diagram = Union[SignedDiagram, Partition]


@dataclass(frozen=True)
class OrbitClass:
    form: RealForm
    diagram: Diagram
    fiber_index: int = 1
    fiber_size: int = 1
    is_zero: bool = False

    @property
    def partition(self) -> Partition:
        return self.diagram if isinstance(self.diagram, Partition) else self.diagram.partition

    @property
    def signed(self) -> Optional[SignedDiagram]:
        return self.diagram if isinstance(self.diagram, SignedDiagram) else None


def fiber_size(form: RealForm, diagram: Diagram) -> int:
    k = form.kind
    if k is FormKind.SL_R:
        return 2 if predicates(diagram).is_even else 1
    if k is FormKind.SO:
        flags = predicates(diagram.partition)
        if flags.is_very_even:
            return 4
        if flags.in_P1 and in_S_prime(diagram):
            return 2
    return 1


def _diagrams(form: RealForm):
    dset = form.diagram_set
    if dset is None:
        return enumerate_partitions(form.n)
    kind, params = dset
    return enumerate_set(kind, **params)


def _is_zero(diagram: Diagram) -> bool:
    P = diagram if isinstance(diagram, Partition) else diagram.partition
    return P.parts[0][0] == 1 and len(P.parts) == 1


def enumerate_orbits(form: RealForm) -> list:
    form.validate()
    out = []
    for D in _diagrams(form):
        size = fiber_size(form, D)
        zero = _is_zero(D)
        for i in range(1, size + 1):
            out.append(OrbitClass(form, D, i, size, zero))
    return out


def diagram_violation(form: RealForm, diagram: Diagram):
    dset = form.diagram_set
    if dset is None:
        if diagram.n != form.n:
            return f"partition size {diagram.n} differs from n={form.n}"
        return None
    kind, params = dset
    why = membership_violation(diagram, kind, **params)
    return f"{why} for {form.label}" if why else None


def parse_orbit(form: RealForm, text: str, fiber_index: int = 1) -> OrbitClass:
    """Resolve diagram text (plus fiber index) to an orbit class of ``form``."""
    form.validate()
    if form.has_form:
        diagram = parse_diagram(text)
    else:
        if any(c in text for c in "+-"):
            raise NotInParamSet(f"{form.label} orbits are labelled by bare partitions, not signs")
        diagram = Partition.parse(text)
    why = diagram_violation(form, diagram)
    if why:
        raise NotInParamSet(why)
    size = fiber_size(form, diagram)
    if not isinstance(fiber_index, int) or not 1 <= fiber_index <= size:
        raise BadFiberIndex(f"fiber index {fiber_index} outside 1..{size}")
    return OrbitClass(form, diagram, fiber_index, size, _is_zero(diagram))


def split_fiber(text: str):
    """Split an optional ``:k`` fiber suffix off an orbit string."""
    if ":" not in text:
        return text, 1
    body, _, k = text.rpartition(":")
    if not k.strip().isdigit():
        raise ParseError(f"bad fiber suffix {k!r}")
    return body, int(k)
