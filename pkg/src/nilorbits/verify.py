"""Invariant and oracle suites shared by ``nilorbits verify`` and the tests."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import oracles
from .cohomology import Status, cohomology
from .errors import InvalidInput
from .exactlin import ScalarField, congruence_signature
from .orbit_enum import FormKind, RealForm, SO, SOStar, SU, SlH, SlR, SpPQ, SpR, enumerate_orbits
from .partition import classify, enumerate_partitions
from .realize import (
    build_gram,
    build_triple,
    centralizer_dim,
    corollary_signature,
    gram_block,
    realize,
    verify_realization,
)
from .signed_diagram import SignMatrix, SignedDiagram, enumerate_set
from .structure import centralizer_structure


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def forms_up_to(size: int, sp_r_size=None) -> Iterator[RealForm]:
    """Every admitted real form whose defining matrices are at most size x size."""
    sp_r_size = size if sp_r_size is None else sp_r_size
    for n in range(2, size + 1):
        yield SlR(n)
        yield SlH(n)
    for n in range(3, size + 1):
        yield SOStar(n)
    for n in range(1, sp_r_size // 2 + 1):
        yield SpR(n)
    for s in range(2, size + 1):
        for p in range(1, s):
            q = s - p
            yield SU(p, q)
            yield SpPQ(p, q)
            if (p, q) not in ((1, 1), (2, 2)):
                yield SO(p, q)


def suite_triples(max_n: int) -> SuiteResult:
    res = SuiteResult("triples")
    for n in range(1, max_n + 1):
        for P in enumerate_partitions(n):
            for fld in ScalarField:
                rep = verify_realization(build_triple(fld, P))
                res.record(rep.ok, f"{fld.value} {P}: {[c.name for c in rep.failures()]}")
    return res


def suite_forms(max_n: int) -> SuiteResult:
    res = SuiteResult("forms")
    for form in forms_up_to(max_n):
        if not form.has_form:
            continue
        for o in enumerate_orbits(form):
            if o.fiber_index != 1:
                continue
            rep = verify_realization(build_gram(o))
            res.record(rep.ok, f"{form.label} {o.diagram}: {[c.name for c in rep.failures()]}")
    return res


_SINGLE_PART_FORM = {
    FormKind.SU: lambda d, t: SU(1, 1),
    FormKind.SO: lambda d, t: SO(1, 2),
    FormKind.SP_PQ: lambda d, t: SpPQ(1, 1),
}


def suite_signature_law(max_d: int = 7, max_t: int = 2) -> SuiteResult:
    """Gram block signature on each isotypic component against the closed form."""
    from .orbit_enum import OrbitClass

    res = SuiteResult("signature_law")
    for kind in (FormKind.SU, FormKind.SO, FormKind.SP_PQ):
        for d in range(1, max_d + 1):
            for t in range(1, max_t + 1):
                if kind is FormKind.SO and d % 2 == 0 and t % 2:
                    continue
                ps = range(t + 1) if (d % 2 == 1 or kind is FormKind.SU) else (t,)
                for p in ps:
                    D = SignedDiagram((SignMatrix(d, t, p),))
                    # the block only depends on the part, so a placeholder form of the right kind suffices
                    form = RealForm(kind, p=D.signature[0] or 1, q=D.signature[1] or 1)
                    real = build_gram(OrbitClass(form, D))
                    got = congruence_signature(gram_block(real, d))
                    want = corollary_signature(d, t, p)
                    ok = got == want == SignMatrix(d, t, p).sign_counts()
                    res.record(ok, f"{kind.value} d={d} t={t} p={p}: got {got} want {want}")
    return res


def suite_centralizer(max_size: int, sp_r_size=None) -> SuiteResult:
    res = SuiteResult("centralizer")
    for form in forms_up_to(max_size, sp_r_size):
        for o in enumerate_orbits(form):
            if o.fiber_index != 1:
                continue
            a = centralizer_dim(realize(o), form)
            b = centralizer_structure(o).dim
            res.record(a == b, f"{form.label} {o.diagram}: nullspace {a} vs structure {b}")
    return res


def _bf_args(form: RealForm):
    return {"n": form.n} if form.by_size else {"p": form.p, "q": form.q}


def suite_enumeration(max_n: int) -> SuiteResult:
    res = SuiteResult("enumeration")
    for n in range(1, max_n + 1):
        res.record(len(enumerate_partitions(n)) == oracles.partition_count(n), f"p({n})")
    for kind in ("Y", "Y_even", "Y_even1"):
        for s in range(1, max_n + 1):
            for p in range(0, s + 1):
                got = {D.triples() for D in enumerate_set(kind, p=p, q=s - p)}
                res.record(got == oracles.bf_diagrams(kind, p=p, q=s - p), f"{kind}({p},{s - p})")
    for kind in ("Y_odd", "Y_odd_minus1"):
        for n in range(1, max_n + 1):
            got = {D.triples() for D in enumerate_set(kind, n=n)}
            res.record(got == oracles.bf_diagrams(kind, n=n), f"{kind}({n})")
    for form in forms_up_to(max_n, sp_r_size=2 * max_n):
        orbits = enumerate_orbits(form)
        want = oracles.bf_orbit_count(form.kind.value, **_bf_args(form))
        res.record(len(orbits) == want, f"{form.label}: {len(orbits)} orbits vs brute force {want}")
        for o in orbits:
            triples = o.signed.triples() if o.signed else tuple((d, t, 0) for d, t in o.partition.parts)
            res.record(o.fiber_size == oracles.bf_fiber(form.kind.value, triples), f"{form.label} {o.diagram} fiber")
        res.record(sum(o.is_zero for o in orbits) == 1, f"{form.label}: one zero orbit")
    return res


def suite_theorems(max_n: int) -> SuiteResult:
    res = SuiteResult("theorems")
    for n in range(2, max_n + 1):
        for o in enumerate_orbits(SlH(n)):
            r = cohomology(o)
            res.record((r.h1, r.h2) == (0, 0), f"sl_{n}(H) {o.diagram}")
    for s in range(2, max_n + 1):
        for p in range(1, s):
            for o in enumerate_orbits(SpPQ(p, s - p)):
                r = cohomology(o)
                res.record((r.h1, r.h2) == (0, len(classify(o.partition).E)), f"sp({p},{s - p}) {o.diagram}")
    for form in [SOStar(n) for n in range(3, max_n + 1)] + [SpR(n) for n in range(1, max_n + 1)]:
        for o in enumerate_orbits(form):
            odd = len(classify(o.partition).O)
            r = cohomology(o)
            res.record((r.h1, r.h2) == (int(odd == 0), max(odd - 1, 0)), f"{form.label} {o.diagram}")
    return res


ISOMORPHISM_CLASSES = [
    ([SO(3, 2), SpR(2)], 8, Counter({0: 8}), Counter({0: 3, 1: 5})),
    ([SO(4, 1), SpPQ(1, 1)], 2, Counter({0: 1, 1: 1}), Counter({0: 2})),
    ([SO(3, 3), SlR(4)], 7, Counter({0: 6, 1: 1}), Counter({0: 7})),
    ([SU(1, 1), SpR(1), SO(2, 1)], 3, Counter({0: 3}), Counter({0: 1, 1: 2})),
]


def suite_isomorphisms() -> SuiteResult:
    res = SuiteResult("isomorphisms")
    for forms, count, h2s, h1s in ISOMORPHISM_CLASSES:
        for form in forms:
            rs = [cohomology(o) for o in enumerate_orbits(form)]
            ok = (
                len(rs) == count
                and all(r.status is Status.DETERMINED for r in rs)
                and Counter(r.h2 for r in rs) == h2s
                and Counter(r.h1 for r in rs) == h1s
            )
            res.record(ok, f"{form.label}")
    return res


def run_all(max_n: int) -> list:
    if not isinstance(max_n, int) or max_n < 2:
        raise InvalidInput(f"--max-n must be >= 2, got {max_n}")
    suites: list[Callable[[], SuiteResult]] = [
        lambda: suite_triples(max_n),
        lambda: suite_forms(max_n),
        lambda: suite_signature_law(max_d=max(max_n, 2), max_t=2),
        lambda: suite_centralizer(max_n),
        lambda: suite_enumeration(max_n),
        lambda: suite_theorems(max_n),
        suite_isomorphisms,
    ]
    return [s() for s in suites]
