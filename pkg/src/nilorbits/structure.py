"""Factor types and real dimensions of Z(X,H,Y) and of its maximal compact subgroup.

Dimensions only; component groups are not modelled, so ``dim_z`` counts
every continuous center direction (an O(2) factor contributes one even
though its non-identity component acts on it by -1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .orbit_enum import FormKind, OrbitClass


_KINDS = ("GL_R", "GL_H", "U_pq", "O_pq", "Sp_R", "Sp_pq", "SOstar", "U", "Sp_cpt", "O")


@dataclass(frozen=True)
class GroupFactor:
    kind: str
    params: tuple
    part: int = 0  # the part d whose isotypic block carries the factor (diagonally, d times)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown factor kind {self.kind}")
        if self.kind == "Sp_R" and self.params[0] % 2:
            raise AssertionError("symplectic multiplicity space must be even dimensional")

    @property
    def size(self) -> int:
        return sum(self.params)

    @property
    def dim(self) -> int:
        k, ps = self.kind, self.params
        m = sum(ps)
        if k == "GL_R":
            return m * m
        if k == "GL_H":
            return 4 * m * m
        if k in ("U_pq", "U"):
            return m * m
        if k in ("O_pq", "O"):
            return m * (m - 1) // 2
        if k == "Sp_R":
            return m * (m + 1) // 2
        if k in ("Sp_pq", "Sp_cpt"):
            return m * (2 * m + 1)
        if k == "SOstar":
            return m * (2 * m - 1)
        raise AssertionError(k)

    @property
    def center_dim(self) -> int:
        if self.kind == "U":
            return 1 if self.size >= 1 else 0
        if self.kind == "O":
            return 1 if self.size == 2 else 0
        return 0

    def __str__(self):
        k, ps = self.kind, self.params
        body = {
            "GL_R": lambda: f"GL({ps[0]},R)",
            "GL_H": lambda: f"GL({ps[0]},H)",
            "U_pq": lambda: f"U({ps[0]},{ps[1]})",
            "O_pq": lambda: f"O({ps[0]},{ps[1]})",
            "Sp_R": lambda: f"Sp({ps[0] // 2},R)",
            "Sp_pq": lambda: f"Sp({ps[0]},{ps[1]})",
            "SOstar": lambda: f"SO*({2 * ps[0]})",
            "U": lambda: f"U({ps[0]})",
            "Sp_cpt": lambda: f"Sp({ps[0]})",
            "O": lambda: f"O({ps[0]})",
        }[k]()
        return f"{body}^Δ{self.part}" if self.part > 1 else body


@dataclass(frozen=True)
class ReductiveStructure:
    factors: tuple
    det_constraint_cuts_dim: bool
    dim: int

    def __str__(self):
        inner = " x ".join(str(f) for f in self.factors)
        return f"S({inner})" if self.det_constraint_cuts_dim else inner


@dataclass(frozen=True)
class CompactStructure:
    factors: tuple
    dim: int
    dim_z: int
    s_cut: bool = False

    def __str__(self):
        inner = " x ".join(str(f) for f in self.factors) or "1"
        return f"S({inner})" if self.s_cut else inner


def _parts(orbit: OrbitClass):
    D = orbit.signed
    if D is None:
        return [(d, t, None, None) for d, t in orbit.partition.parts]
    return [(m.d, m.t, m.p, m.q) for m in D.signs]


def centralizer_structure(orbit: OrbitClass) -> ReductiveStructure:
    k = orbit.form.kind
    fs = []
    for d, t, p, q in _parts(orbit):
        odd = d % 2 == 1
        if k is FormKind.SL_R:
            fs.append(GroupFactor("GL_R", (t,), d))
        elif k is FormKind.SL_H:
            fs.append(GroupFactor("GL_H", (t,), d))
        elif k is FormKind.SU:
            fs.append(GroupFactor("U_pq", (p, q), d))
        elif k is FormKind.SO:
            fs.append(GroupFactor("O_pq", (p, q), d) if odd else GroupFactor("Sp_R", (t,), d))
        elif k is FormKind.SP_R:
            fs.append(GroupFactor("Sp_R", (t,), d) if odd else GroupFactor("O_pq", (p, q), d))
        elif k is FormKind.SP_PQ:
            fs.append(GroupFactor("Sp_pq", (p, q), d) if odd else GroupFactor("SOstar", (t,), d))
        elif k is FormKind.SO_STAR:
            fs.append(GroupFactor("SOstar", (t,), d) if odd else GroupFactor("Sp_pq", (p, q), d))
    cut = k in (FormKind.SL_R, FormKind.SL_H, FormKind.SU)
    return ReductiveStructure(tuple(fs), cut, sum(f.dim for f in fs) - (1 if cut else 0))


def maximal_compact_structure(orbit: OrbitClass) -> CompactStructure:
    k = orbit.form.kind
    fs = []
    for d, t, p, q in _parts(orbit):
        odd = d % 2 == 1
        if k is FormKind.SL_R:
            fs.append(GroupFactor("O", (t,), d))
        elif k is FormKind.SL_H:
            fs.append(GroupFactor("Sp_cpt", (t,), d))
        elif k is FormKind.SU:
            fs += [GroupFactor("U", (p,), d), GroupFactor("U", (q,), d)]
        elif k is FormKind.SO:
            if odd:
                fs += [GroupFactor("O", (p,), d), GroupFactor("O", (q,), d)]
            else:
                fs.append(GroupFactor("U", (t // 2,), d))
        elif k is FormKind.SP_R:
            if odd:
                fs.append(GroupFactor("U", (t // 2,), d))
            else:
                fs += [GroupFactor("O", (p,), d), GroupFactor("O", (q,), d)]
        elif k is FormKind.SP_PQ:
            if odd:
                fs += [GroupFactor("Sp_cpt", (p,), d), GroupFactor("Sp_cpt", (q,), d)]
            else:
                fs.append(GroupFactor("U", (t,), d))
        elif k is FormKind.SO_STAR:
            if odd:
                fs.append(GroupFactor("U", (t,), d))
            else:
                fs += [GroupFactor("Sp_cpt", (p,), d), GroupFactor("Sp_cpt", (q,), d)]
    fs = tuple(f for f in fs if f.size > 0)
    s_cut = k in (FormKind.SL_R, FormKind.SU)
    # a determinant condition removes a continuous center direction only through U factors
    continuous_cut = k is FormKind.SU and any(f.kind == "U" for f in fs)
    dim_z = sum(f.center_dim for f in fs) - (1 if continuous_cut else 0)
    dim = sum(f.dim for f in fs) - (1 if continuous_cut else 0)
    return CompactStructure(fs, dim, dim_z, s_cut)
