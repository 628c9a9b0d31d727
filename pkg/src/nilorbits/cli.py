"""Command line: orbit tables, cohomology queries, realizations, verification.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error, 3 a
diagram for which no closed-form value is available (status PaperGap).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from .cohomology import Status, cohomology
from .errors import NilOrbitError
from .orbit_enum import FormKind, OrbitClass, RealForm, enumerate_orbits, parse_orbit, split_fiber
from .realize import realization_to_json, realize, verify_realization
from .structure import centralizer_structure, maximal_compact_structure
from .verify import run_all

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GAP = 0, 1, 2, 3

CSV_HEADER = [
    "form", "partition", "signs", "sig_p", "sig_q", "fiber_index", "fiber_size", "is_zero",
    "h1", "h2", "status", "centralizer_factors", "centralizer_dim",
    "compact_factors", "compact_dim", "compact_dim_z",
]


def form_descriptor(form: RealForm) -> dict:
    params = {"n": form.n} if form.by_size else {"p": form.p, "q": form.q}
    return {"kind": form.kind.value, **params, "label": form.label}


@dataclass(frozen=True)
class OrbitRecord:
    form: dict
    partition: str
    signs: str
    diagram: dict
    signature: Optional[list]
    fiber_index: int
    fiber_size: int
    is_zero: bool
    h1: Optional[int]
    h2: Optional[int]
    status: str
    centralizer: dict
    compact: dict

    @classmethod
    def of(cls, orbit: OrbitClass) -> "OrbitRecord":
        res = cohomology(orbit)
        red = centralizer_structure(orbit)
        cpt = maximal_compact_structure(orbit)
        D = orbit.signed
        diagram = D.to_json() if D else {"parts": [{"d": d, "t": t} for d, t in orbit.partition.parts]}
        return cls(
            form=form_descriptor(orbit.form),
            partition=str(orbit.partition),
            signs=str(D) if D else "",
            diagram=diagram,
            signature=list(D.signature) if D else None,
            fiber_index=orbit.fiber_index,
            fiber_size=orbit.fiber_size,
            is_zero=orbit.is_zero,
            h1=res.h1,
            h2=res.h2,
            status=res.status.value,
            centralizer={"factors": [str(f) for f in red.factors], "det_cut": red.det_constraint_cuts_dim, "dim": red.dim},
            compact={"factors": [str(f) for f in cpt.factors], "dim": cpt.dim, "dim_z": cpt.dim_z},
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "OrbitRecord":
        return cls(**d)

    def csv_row(self) -> list:
        sig = self.signature or ["", ""]
        blank = lambda v: "" if v is None else v
        return [
            self.form["label"], self.partition, self.signs, sig[0], sig[1], self.fiber_index, self.fiber_size,
            str(self.is_zero).lower(), blank(self.h1), blank(self.h2), self.status,
            " x ".join(self.centralizer["factors"]), self.centralizer["dim"],
            " x ".join(self.compact["factors"]), self.compact["dim"], self.compact["dim_z"],
        ]


def _form_from_args(args) -> RealForm:
    kind = FormKind(args.form)
    if kind in (FormKind.SL_R, FormKind.SL_H, FormKind.SO_STAR, FormKind.SP_R):
        if args.n is None or args.p is not None or args.q is not None:
            raise NilOrbitError(f"--form {kind.value} takes --n only")
        form = RealForm(kind, n=args.n)
    else:
        if args.p is None or args.q is None or args.n is not None:
            raise NilOrbitError(f"--form {kind.value} takes --p and --q")
        form = RealForm(kind, p=args.p, q=args.q)
    return form.validate()


def _orbit_from_args(form, text) -> OrbitClass:
    body, k = split_fiber(text)
    return parse_orbit(form, body, k)


def _emit(text, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def records_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def records_json(records) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2)


def cmd_orbits(args, out) -> int:
    form = _form_from_args(args)
    records = [OrbitRecord.of(o) for o in enumerate_orbits(form)]
    _emit(records_json(records) if args.json else records_csv(records), out)
    return EXIT_OK


def cmd_cohomology(args, out) -> int:
    form = _form_from_args(args)
    orbit = _orbit_from_args(form, args.orbit)
    res = cohomology(orbit)
    if args.json:
        rec = {"form": form_descriptor(form), "orbit": str(orbit.diagram), "fiber_index": orbit.fiber_index,
               "status": res.status.value, "h1": res.h1, "h2": res.h2}
        if args.explain:
            rec["rule_h1"], rec["rule_h2"] = res.rule_h1, res.rule_h2
        _emit(json.dumps(rec, indent=2), out)
    else:
        if res.status is Status.PAPER_GAP:
            _emit(f"status=PaperGap form={form.label} orbit={orbit.diagram}", out)
        else:
            _emit(f"h1={res.h1} h2={res.h2} status={res.status.value}", out)
        if args.explain:
            _emit(f"h1 rule: {res.rule_h1}\nh2 rule: {res.rule_h2}", out)
    return EXIT_GAP if res.status is Status.PAPER_GAP else EXIT_OK


def cmd_realize(args, out) -> int:
    form = _form_from_args(args)
    orbit = _orbit_from_args(form, args.orbit)
    real = realize(orbit)
    code = EXIT_OK
    doc = realization_to_json(real)
    doc["fiber_index_represented"] = 1
    if args.check:
        rep = verify_realization(real)
        doc["checks"] = [{"name": c.name, "passed": c.passed} for c in rep.checks]
        if not rep.ok:
            code = EXIT_VERIFY
        sys.stderr.write(("check: pass" if rep.ok else "check: FAIL") + "\n")
    _emit(json.dumps(doc, indent=2), out)
    return code


def cmd_verify(args, out) -> int:
    results = run_all(args.max_n)
    for r in results:
        _emit(f"{r.name:14s} passed={r.passed} failed={r.failed}", out)
        for f in r.failures[:5]:
            _emit(f"    FAIL {f}", out)
    ok = all(r.ok for r in results)
    _emit("all suites pass" if ok else "verification FAILED", out)
    return EXIT_OK if ok else EXIT_VERIFY


def _add_form_flags(sp):
    sp.add_argument("--form", required=True, choices=[k.value for k in FormKind])
    sp.add_argument("--n", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nilorbits", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("orbits", help="table of orbit classes")
    _add_form_flags(sp)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--csv", action="store_true", help="CSV with a fixed header (default)")
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("cohomology", help="dim H^1 and dim H^2 of one orbit")
    _add_form_flags(sp)
    sp.add_argument("--orbit", required=True, help='diagram such as "3+^1,1+^2" with optional ":k" fiber suffix')
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--explain", action="store_true")
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("realize", help="exact sl2-triple and Gram matrix as JSON")
    _add_form_flags(sp)
    sp.add_argument("--orbit", required=True)
    sp.add_argument("--out", choices=["json"], default="json")
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("verify", help="run the invariant and oracle suites")
    sp.add_argument("--max-n", type=int, required=True)
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except NilOrbitError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
