"""Exact sl2-triples, Gram matrices of invariant forms, and the centralizer oracle.

Basis labels are (d, j, l): part d, copy j (1-based), level l = 0..d-1, with
e(d,j,l) = X^l v_j.  Order: d ascending, then j, then l.

Gram convention: G[a][b] = <e_a, e_b>, so <v, u> = sigma(x)^t G y for
coordinate columns x, y.  On a part the only nonzero pairings are
<X^l v_j, X^(d-1-l) v_j'> = (-1)^l <v_j, X^(d-1) v_j'>.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

from .errors import NoFormForThisAlgebra, ShapeMismatch
from .exactlin import (
    ONE,
    QI,
    QJ,
    ZERO,
    ExactMatrix,
    Quaternion,
    ScalarField,
    congruence_signature,
    rank,
    sparse_real_rank,
)
from .orbit_enum import FormKind, OrbitClass, RealForm
from .partition import Partition
from .signed_diagram import SignMatrix

FORM_KINDS = {
    FormKind.SU: ("hermitian", 1),
    FormKind.SO: ("symmetric", 1),
    FormKind.SP_R: ("symplectic", -1),
    FormKind.SP_PQ: ("hermitian", 1),
    FormKind.SO_STAR: ("skew_hermitian", -1),
}


@dataclass(frozen=True)
class MatrixRealization:
    field: ScalarField
    n: int
    X: ExactMatrix
    H: ExactMatrix
    Y: ExactMatrix
    partition: Partition
    basis_index: tuple
    G: Optional[ExactMatrix] = None
    form_kind: Optional[str] = None
    epsilon: Optional[int] = None
    signature: Optional[tuple] = None  # expected (p, q) for symmetric/Hermitian forms


def basis_labels(P: Partition):
    return tuple((d, j, l) for d, t in P.parts for j in range(1, t + 1) for l in range(d))


def build_triple(field: ScalarField, P: Partition) -> MatrixRealization:
    labels = basis_labels(P)
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    X, H, Y = {}, {}, {}
    for (d, j, l), i in pos.items():
        H[i, i] = 2 * l + 1 - d
        if l + 1 < d:
            X[pos[d, j, l + 1], i] = 1
        if l > 0:
            Y[pos[d, j, l - 1], i] = l * (d - l)
    mk = lambda items: ExactMatrix.from_sparse(field, n, items)
    return MatrixRealization(field, n, mk(X), mk(H), mk(Y), P, labels)


def _base_pairing(kind: FormKind, m: SignMatrix) -> dict:
    """<v_j, X^(d-1) v_j'> for one part, keyed by 1-based (j, j')."""
    d, t, p = m.d, m.t, m.p
    odd = d % 2 == 1
    sgn = lambda j: ONE if j <= p else -ONE
    if kind is FormKind.SU:
        if odd:
            return {(j, j): sgn(j) for j in range(1, t + 1)}
        return {(j, j): -QI if j <= p else QI for j in range(1, t + 1)}
    if kind is FormKind.SO:
        if odd:
            return {(j, j): sgn(j) for j in range(1, t + 1)}
        out = {}
        for j in range(1, t + 1, 2):
            out[j, j + 1] = ONE
            out[j + 1, j] = -ONE
        return out
    if kind is FormKind.SP_R:
        if not odd:
            return {(j, j): sgn(j) for j in range(1, t + 1)}
        h = t // 2
        out = {}
        for j in range(1, h + 1):
            out[j, h + j] = ONE
            out[h + j, j] = -ONE
        return out
    if kind is FormKind.SP_PQ:
        return {(j, j): sgn(j) for j in range(1, t + 1)} if odd else {(j, j): QJ for j in range(1, t + 1)}
    if kind is FormKind.SO_STAR:
        return {(j, j): QJ for j in range(1, t + 1)} if odd else {(j, j): sgn(j) for j in range(1, t + 1)}
    raise NoFormForThisAlgebra(kind.value)


def build_gram(orbit: OrbitClass) -> MatrixRealization:
    form = orbit.form
    if not form.has_form:
        raise NoFormForThisAlgebra(f"{form.label} preserves no form")
    kind, eps = FORM_KINDS[form.kind]
    base = build_triple(form.field, orbit.partition)
    pos = {lab: i for i, lab in enumerate(base.basis_index)}
    G = {}
    for m in orbit.signed.signs:
        d = m.d
        for (j, jj), v in _base_pairing(form.kind, m).items():
            for l in range(d):
                G[pos[d, j, l], pos[d, jj, d - 1 - l]] = v if l % 2 == 0 else -v
    sig = orbit.signed.signature if kind in ("hermitian", "symmetric") else None
    return MatrixRealization(
        base.field, base.n, base.X, base.H, base.Y, base.partition, base.basis_index,
        ExactMatrix.from_sparse(form.field, base.n, G), kind, eps, sig,
    )


def part_indices(real: MatrixRealization, d: int):
    return [i for i, lab in enumerate(real.basis_index) if lab[0] == d]


def gram_block(real: MatrixRealization, d: int) -> ExactMatrix:
    """Restriction of G to the isotypic component of the part d."""
    return real.G.submatrix(part_indices(real, d))


def corollary_signature(d: int, t: int, p: int):
    """Signature of the form on the isotypic block of a part with t rows, p starting +."""
    q = t - p
    dim = d * t
    if d % 2 == 0:
        return (dim // 2, dim // 2)
    if d % 4 == 1:
        return ((dim + p - q) // 2, (dim + q - p) // 2)
    return ((dim + q - p) // 2, (dim + p - q) // 2)


# ------------------------------------------------------------ realified systems

def _components(x: Quaternion, k: int):
    return x.components()[:k]


_UNITS = (ONE, QI, QJ, Quaternion(0, 0, 0, 1))


def _left_matrix(g: Quaternion, k: int):
    """Real k x k matrix of z -> g z."""
    cols = [_components(g * _UNITS[c], k) for c in range(k)]
    return [[cols[c][r] for c in range(k)] for r in range(k)]


def _right_conj_matrix(g: Quaternion, k: int):
    """Real k x k matrix of z -> sigma(z) g."""
    cols = [_components(_UNITS[c].conj() * g, k) for c in range(k)]
    return [[cols[c][r] for c in range(k)] for r in range(k)]


def centralizer_rows(real: MatrixRealization, form: RealForm):
    """Real linear constraints on Z defining the triple's centralizer in the Lie algebra."""
    n, k = real.n, real.field.dim
    var = lambda i, j, c: (i * n + j) * k + c
    rows = []
    for A in (real.X, real.H, real.Y):
        a = [[x.a for x in r] for r in A.entries]
        nz_cols = [[m for m in range(n) if a[m][j]] for j in range(n)]
        nz_rows = [[m for m in range(n) if a[i][m]] for i in range(n)]
        for i in range(n):
            for j in range(n):
                for c in range(k):
                    r = {}
                    for m in nz_cols[j]:
                        key = var(i, m, c)
                        r[key] = r.get(key, 0) + a[m][j]
                    for m in nz_rows[i]:
                        key = var(m, j, c)
                        r[key] = r.get(key, 0) - a[i][m]
                    rows.append(r)
    if form.has_form:
        G = real.G.entries
        nz = [(i, j, G[i][j]) for i in range(n) for j in range(n) if G[i][j]]
        by_row, by_col = {}, {}
        for i, j, g in nz:
            by_row.setdefault(i, []).append((j, g))
            by_col.setdefault(j, []).append((i, g))
        right = {g: _right_conj_matrix(g, k) for _, _, g in nz}
        left = {g: _left_matrix(g, k) for _, _, g in nz}
        # entry (a, b) of sigma(Z)^t G + G Z
        for a_ in range(n):
            for b in range(n):
                acc = [dict() for _ in range(k)]
                for i, g in by_col.get(b, ()):
                    M = right[g]
                    for c in range(k):
                        for c2 in range(k):
                            if M[c][c2]:
                                key = var(i, a_, c2)
                                acc[c][key] = acc[c].get(key, 0) + M[c][c2]
                for i, g in by_row.get(a_, ()):
                    M = left[g]
                    for c in range(k):
                        for c2 in range(k):
                            if M[c][c2]:
                                key = var(i, b, c2)
                                acc[c][key] = acc[c].get(key, 0) + M[c][c2]
                rows.extend(acc)
    if form.kind in (FormKind.SL_R, FormKind.SL_H):
        rows.append({var(i, i, 0): 1 for i in range(n)})
    elif form.kind is FormKind.SU:
        rows.append({var(i, i, 0): 1 for i in range(n)})
        rows.append({var(i, i, 1): 1 for i in range(n)})
    return rows, n * n * k


def centralizer_dim(real: MatrixRealization, form: RealForm, backend=None) -> int:
    if real.n != form.matrix_size or real.field is not form.field:
        raise ShapeMismatch(f"realization ({real.field.value}, n={real.n}) does not fit {form.label}")
    if form.has_form and real.G is None:
        raise ShapeMismatch(f"{form.label} needs a Gram matrix")
    rows, unknowns = centralizer_rows(real, form)
    return unknowns - sparse_real_rank(rows, unknowns, backend)


def realize(orbit: OrbitClass) -> MatrixRealization:
    """Representative realization of an orbit class (the first member of its fiber)."""
    if orbit.form.has_form:
        return build_gram(orbit)
    return build_triple(orbit.form.field, orbit.partition)


# ------------------------------------------------------------ verification

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    checks: tuple = dc_field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def jordan_profile(P: Partition, k: int) -> int:
    return sum(max(d - k, 0) * t for d, t in P.parts)


def verify_realization(real: MatrixRealization) -> Report:
    X, H, Y = real.X, real.H, real.Y
    out = [
        Check("[H,X]=2X", (H @ X - X @ H) == X.scale(2)),
        Check("[H,Y]=-2Y", (H @ Y - Y @ H) == Y.scale(-2)),
        Check("[X,Y]=H", (X @ Y - Y @ X) == H),
    ]
    top = max(d for d, _ in real.partition.parts)
    Xk = ExactMatrix.identity(real.field, real.n)
    profile_ok = True
    for k in range(top + 1):
        if rank(Xk) != jordan_profile(real.partition, k):
            profile_ok = False
            break
        Xk = Xk @ X
    out.append(Check("rank(X^k) profile", profile_ok and Xk.is_zero(), f"partition {real.partition}"))
    if real.G is not None:
        G = real.G
        out.append(Check("sigma(G)^t = eps G", G.adjoint() == G.scale(real.epsilon)))
        for name, Z in (("X", X), ("H", H), ("Y", Y)):
            out.append(Check(f"form invariance of {name}", (Z.adjoint() @ G + G @ Z).is_zero()))
        if real.signature is not None:
            got = congruence_signature(G)
            out.append(Check("signature", got == tuple(real.signature), f"got {got}, want {tuple(real.signature)}"))
    return Report(tuple(out))


# ------------------------------------------------------------ JSON

def _entry_json(x: Quaternion, field: ScalarField):
    comps = [c if isinstance(c, int) else str(Fraction(c)) for c in x.components()[: field.dim]]
    return comps[0] if field is ScalarField.R else comps


def realization_to_json(real: MatrixRealization) -> dict:
    mat = lambda M: [[_entry_json(x, real.field) for x in r] for r in M.entries]
    out = {
        "field": real.field.value,
        "n": real.n,
        "partition": str(real.partition),
        "basis": [list(lab) for lab in real.basis_index],
        "X": mat(real.X),
        "H": mat(real.H),
        "Y": mat(real.Y),
    }
    if real.G is not None:
        out["form_kind"] = real.form_kind
        out["epsilon"] = real.epsilon
        out["G"] = mat(real.G)
    return out
