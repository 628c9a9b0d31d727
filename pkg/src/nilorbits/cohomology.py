"""Closed-form dim H^1 and dim H^2 of nilpotent orbits.

Each rule returns the value together with a short text naming the case
that fired, which the CLI prints under ``--explain``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .orbit_enum import FormKind, OrbitClass
from .partition import classify
from .signed_diagram import SignedDiagram


class Status(Enum):
    DETERMINED = "Determined"
    PAPER_GAP = "PaperGap"


@dataclass(frozen=True)
class CohomologyPart:
    value: Optional[int]
    status: Status
    rule: str


@dataclass(frozen=True)
class CohomologyResult:
    h1: Optional[int]
    h2: Optional[int]
    status: Status
    rule_h1: str = ""
    rule_h2: str = ""

    def __post_init__(self):
        if self.status is Status.PAPER_GAP and (self.h1 is not None or self.h2 is not None):
            raise ValueError("a gap result carries no values")


@dataclass(frozen=True)
class SUInvariantL:
    l: int


@dataclass(frozen=True)
class DefiniteSets:
    O_plus: frozenset
    O_minus: frozenset


def _ok(value, rule):
    return CohomologyPart(value, Status.DETERMINED, rule)


def su_l(diagram: SignedDiagram) -> SUInvariantL:
    return SUInvariantL(sum(1 for m in diagram.signs if m.p) + sum(1 for m in diagram.signs if m.q))


def definite_sets(diagram: SignedDiagram) -> DefiniteSets:
    odd = [m for m in diagram.signs if m.d % 2 == 1]
    return DefiniteSets(
        O_plus=frozenset(m.d for m in odd if m.q == 0),
        O_minus=frozenset(m.d for m in odd if m.p == 0),
    )


# families of non-zero orbits of so(p,2), p > 2 (A) and so(2,q), q > 2 (B);
# each entry lists (d, t, p_d) triples, zero multiplicities dropped
def _family_diagrams(p: int, q: int) -> dict:
    def D(*triples):
        return SignedDiagram.from_triples(x for x in triples if x[1] > 0)

    if q == 2:
        return {
            "A1": D((1, p - 1, p - 1), (3, 1, 1)),
            "A2": D((1, p - 1, p - 2), (3, 1, 0)),
            "A3": D((1, p - 3, p - 3), (5, 1, 1)),
            "A4": D((1, p - 2, p - 2), (2, 2, 2)),
        }
    return {
        "B1": D((1, q - 1, 0), (3, 1, 0)),
        "B2": D((1, q - 1, 1), (3, 1, 1)),
        "B3": D((1, q - 3, 0), (5, 1, 0)),
        "B4": D((1, q - 2, 0), (2, 2, 2)),
    }


_FAMILY_TEXT = {
    "A1": "[1^(p-1) all +, 3 starting +]",
    "A2": "[1^(p-1) one -, 3 starting -]",
    "A3": "[1^(p-3) all +, 5 starting +]",
    "A4": "[1^(p-2) all +, 2^2]",
    "B1": "[1^(q-1) all -, 3 starting -]",
    "B2": "[1^(q-1) one +, 3 starting +]",
    "B3": "[1^(q-3) all -, 5 starting -]",
    "B4": "[1^(q-2) all -, 2^2]",
}


def so_family(p: int, q: int, diagram: SignedDiagram) -> Optional[str]:
    """Family name for so(p,2) / so(2,q) non-zero diagrams, None when none matches."""
    if not ((q == 2 and p > 2) or (p == 2 and q > 2)):
        return None
    for name, fam in _family_diagrams(p, q).items():
        if fam == diagram:
            return name
    return None


def _so_route(p: int, q: int) -> str:
    if (p, q) in ((2, 1), (1, 2)):
        return "rank_one"
    if q == 2 or p == 2:
        return "families"
    return "general"


def _gap(form_label, diagram):
    return CohomologyPart(None, Status.PAPER_GAP, f"{form_label}: {diagram} matches none of the four listed families")


def h2(orbit: OrbitClass) -> CohomologyPart:
    form, k = orbit.form, orbit.form.kind
    if orbit.is_zero:
        return _ok(0, "zero orbit is a point")
    cl = classify(orbit.partition)
    D = orbit.signed
    if k is FormKind.SL_R:
        if form.n == 2:
            return _ok(0, "sl_2(R): 0")
        (theta,) = cl.O if len(cl.O) == 1 else (None,)
        if theta is not None and orbit.partition.mult(theta) == 2:
            return _ok(1, f"sl_n(R), n>=3: exactly one odd part ({theta}) with multiplicity 2 -> 1")
        return _ok(0, "sl_n(R), n>=3: not (one odd part of multiplicity 2) -> 0")
    if k is FormKind.SL_H:
        return _ok(0, "sl_n(H): always 0")
    if k is FormKind.SU:
        l = su_l(D).l
        if cl.N == cl.E:
            return _ok(l - 1, f"su(p,q): all parts even, l={l} -> l-1")
        if l == 1 and cl.N == cl.O:
            return _ok(0, "su(p,q): l=1, all parts odd -> 0")
        return _ok(l - 2, f"su(p,q): l={l}>=2 with an odd part -> l-2")
    if k is FormKind.SO:
        p, q = form.p, form.q
        route = _so_route(p, q)
        if route == "rank_one":
            return _ok(0, f"{form.label}: rank one case -> 0")
        if route == "families":
            fam = so_family(p, q, D)
            if fam is None:
                return _gap(form.label, D)
            if fam in ("A2", "A4"):
                return _ok(1 if p == 4 else 0, f"{form.label}: family {_FAMILY_TEXT[fam]} -> 1 iff p=4")
            if fam in ("B2", "B4"):
                return _ok(1 if q == 4 else 0, f"{form.label}: family {_FAMILY_TEXT[fam]} -> 1 iff q=4")
            return _ok(0, f"{form.label}: family {_FAMILY_TEXT[fam]} -> 0")
        ds = definite_sets(D)
        not_neg = sorted(cl.O - ds.O_minus)
        not_pos = sorted(cl.O - ds.O_plus)
        cond_a = len(not_neg) == 1 and D.part(not_neg[0]).p == 2
        cond_b = len(not_pos) == 1 and D.part(not_pos[0]).q == 2
        e = len(cl.E)
        if cond_a and cond_b:
            return _ok(e + 2, f"so(p,q) general: both single-odd-part conditions hold -> #E+2 = {e + 2}")
        if cond_a or cond_b:
            which = "p_theta=2" if cond_a else "q_theta=2"
            return _ok(e + 1, f"so(p,q) general: exactly one condition ({which}) holds -> #E+1 = {e + 1}")
        return _ok(e, f"so(p,q) general: neither condition holds -> #E = {e}")
    if k in (FormKind.SO_STAR, FormKind.SP_R):
        o = len(cl.O)
        if o == 0:
            return _ok(0, f"{form.label}: no odd parts -> 0")
        return _ok(o - 1, f"{form.label}: #O={o} -> #O-1")
    if k is FormKind.SP_PQ:
        return _ok(len(cl.E), f"sp(p,q): #E = {len(cl.E)}")
    raise AssertionError(k)


def h1(orbit: OrbitClass) -> CohomologyPart:
    form, k = orbit.form, orbit.form.kind
    if orbit.is_zero:
        return _ok(0, "zero orbit is a point")
    cl = classify(orbit.partition)
    D = orbit.signed
    if k in (FormKind.SL_H, FormKind.SP_PQ):
        return _ok(0, f"{form.label}: maximal compact subgroup is simple -> 0")
    if k is FormKind.SL_R:
        return _ok(1, "sl_2(R) -> 1") if form.n == 2 else _ok(0, "sl_n(R), n>=3 -> 0")
    if k is FormKind.SU:
        l = su_l(D).l
        if cl.N == cl.E:
            return _ok(1, "su(p,q): all parts even -> 1")
        if l == 1 and cl.N == cl.O:
            return _ok(1, "su(p,q): l=1, all parts odd -> 1")
        return _ok(0, f"su(p,q): l={l}>=2 with an odd part -> 0")
    if k is FormKind.SO:
        p, q = form.p, form.q
        route = _so_route(p, q)
        if route == "rank_one":
            return _ok(1, f"{form.label}: rank one case -> 1")
        if route == "families":
            fam = so_family(p, q, D)
            if fam is None:
                return _gap(form.label, D)
            if fam in ("A4", "B4"):
                return _ok(0, f"{form.label}: family {_FAMILY_TEXT[fam]} -> 0")
            return _ok(1, f"{form.label}: family {_FAMILY_TEXT[fam]} -> 1")
        return _ok(0, "so(p,q) with p,q != 2 -> 0")
    if k in (FormKind.SO_STAR, FormKind.SP_R):
        if cl.O:
            return _ok(0, f"{form.label}: has an odd part -> 0")
        return _ok(1, f"{form.label}: no odd parts -> 1")
    raise AssertionError(k)


def cohomology(orbit: OrbitClass) -> CohomologyResult:
    a, b = h1(orbit), h2(orbit)
    if Status.PAPER_GAP in (a.status, b.status):
        return CohomologyResult(None, None, Status.PAPER_GAP, a.rule, b.rule)
    return CohomologyResult(a.value, b.value, Status.DETERMINED, a.rule, b.rule)
