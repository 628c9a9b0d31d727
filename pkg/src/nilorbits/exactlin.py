"""Exact scalars and exact linear algebra over R, C and H.

Scalars are rational quaternions; a real scalar has b = c = d = 0 and a
complex scalar has c = d = 0.  Rationals are ``fractions.Fraction`` (always
reduced, positive denominator), collapsed to ``int`` when integral so the
common integer case stays fast.

Matrices act on column vectors of a right vector space, so a matrix is
D-linear for left multiplication.  ``rank`` uses left row operations, i.e.
it computes the dimension of the row space as a left module.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from .errors import InvalidInput, NotSelfAdjoint, ShapeMismatch

try:
    from ._kernels import int_rank as _int_rank_compiled
    KERNEL_BACKEND = "cython"
except ImportError:  # pragma: no cover - exercised when the extension is absent
    _int_rank_compiled = None
    KERNEL_BACKEND = "python"

from ._kernels_py import int_rank as _int_rank_python

HAVE_CYTHON = _int_rank_compiled is not None

Rational = Fraction


def _rat(x):
    if isinstance(x, bool):
        raise InvalidInput("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, (_RationalABC, str)):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    raise InvalidInput(f"not an exact rational: {x!r}")


class Quaternion:
    """Rational quaternion a + b*i + c*j + d*k with i^2 = j^2 = k^2 = ijk = -1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _rat(a)
        self.b = _rat(b)
        self.c = _rat(c)
        self.d = _rat(d)

    @classmethod
    def coerce(cls, x) -> "Quaternion":
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, complex):
            raise InvalidInput("floating complex numbers are not exact")
        return cls(x)

    def components(self):
        return (self.a, self.b, self.c, self.d)

    def __add__(self, o):
        o = Quaternion.coerce(o)
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, o):
        o = Quaternion.coerce(o)
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, o):
        return Quaternion.coerce(o) - self

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        o = Quaternion.coerce(o)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, o):
        return Quaternion.coerce(o) * self

    def conj(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm2(self):
        return _rat(self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d)

    def inverse(self) -> "Quaternion":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("quaternion zero has no inverse")
        n = Fraction(n)
        return Quaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_real(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_complex(self) -> bool:
        return not (self.c or self.d)

    def __eq__(self, o):
        if not isinstance(o, Quaternion):
            try:
                o = Quaternion.coerce(o)
            except InvalidInput:
                return NotImplemented
        return self.components() == o.components()

    def __hash__(self):
        return hash(self.components())

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Quaternion({self})"

    def __str__(self):
        out = []
        for coef, unit in zip(self.components(), ("", "i", "j", "k")):
            if not coef:
                continue
            s = str(coef)
            if unit:
                if coef == 1:
                    s = ""
                elif coef == -1:
                    s = "-"
                elif isinstance(coef, Fraction):
                    s = f"({coef})"
            s += unit
            if out and not s.startswith("-"):
                s = "+" + s
            out.append(s)
        return "".join(out) or "0"


ZERO = Quaternion(0)
ONE = Quaternion(1)
QI = Quaternion(0, 1)
QJ = Quaternion(0, 0, 1)
QK = Quaternion(0, 0, 0, 1)


class ScalarField(Enum):
    R = "R"
    C = "C"
    H = "H"

    @property
    def dim(self) -> int:
        return {"R": 1, "C": 2, "H": 4}[self.value]

    def contains(self, x: Quaternion) -> bool:
        if self is ScalarField.R:
            return x.is_real()
        if self is ScalarField.C:
            return x.is_complex()
        return True


class ExactMatrix:
    """Dense immutable matrix of rational quaternions tagged with a field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: ScalarField, entries):
        grid = tuple(tuple(Quaternion.coerce(x) for x in row) for row in entries)
        cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise InvalidInput("ragged matrix rows")
        for row in grid:
            for x in row:
                if not field.contains(x):
                    raise InvalidInput(f"entry {x} is not in {field.value}")
        self.field = field
        self.rows = len(grid)
        self.cols = cols
        self.entries = grid

    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(field, tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, field, n):
        return cls._raw(field, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def _raw(cls, field, grid, rows, cols):
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m.entries = grid
        return m

    @classmethod
    def from_sparse(cls, field, n, items):
        grid = [[ZERO] * n for _ in range(n)]
        for (i, j), v in items.items():
            grid[i][j] = Quaternion.coerce(v)
        return cls(field, grid)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def _same_shape(self, o):
        if self.shape != o.shape:
            raise ShapeMismatch(f"{self.shape} vs {o.shape}")

    def _join_field(self, o):
        order = "RCH"
        return self.field if order.index(self.field.value) >= order.index(o.field.value) else o.field

    def __add__(self, o):
        self._same_shape(o)
        g = tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, o.entries))
        return ExactMatrix._raw(self._join_field(o), g, self.rows, self.cols)

    def __sub__(self, o):
        self._same_shape(o)
        g = tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, o.entries))
        return ExactMatrix._raw(self._join_field(o), g, self.rows, self.cols)

    def __neg__(self):
        return ExactMatrix._raw(self.field, tuple(tuple(-x for x in r) for r in self.entries), self.rows, self.cols)

    def scale(self, c) -> "ExactMatrix":
        """Left scalar multiple c*M."""
        c = Quaternion.coerce(c)
        g = tuple(tuple(c * x for x in r) for r in self.entries)
        field = self.field if self.field.contains(c) else ScalarField.H if not c.is_complex() else ScalarField.C
        return ExactMatrix._raw(field, g, self.rows, self.cols)

    def __matmul__(self, o):
        if self.cols != o.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {o.shape}")
        ocols = list(zip(*o.entries)) if o.rows else [() for _ in range(o.cols)]
        out = []
        for r in self.entries:
            nz = [(k, x) for k, x in enumerate(r) if x]
            row = []
            for c in ocols:
                acc = ZERO
                for k, x in nz:
                    y = c[k]
                    if y:
                        acc = acc + x * y
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix._raw(self._join_field(o), tuple(out), self.rows, o.cols)

    def __pow__(self, k: int):
        if self.rows != self.cols:
            raise ShapeMismatch("power of a non-square matrix")
        out = ExactMatrix.identity(self.field, self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self):
        g = tuple(zip(*self.entries)) if self.rows else ()
        return ExactMatrix._raw(self.field, tuple(tuple(r) for r in g), self.cols, self.rows)

    def conj(self):
        return ExactMatrix._raw(self.field, tuple(tuple(x.conj() for x in r) for r in self.entries), self.rows, self.cols)

    def adjoint(self):
        """sigma(M)^t with sigma the standard conjugation (identity on R)."""
        return self.conj().transpose()

    def submatrix(self, rows, cols=None):
        cols = rows if cols is None else cols
        g = tuple(tuple(self.entries[i][j] for j in cols) for i in rows)
        return ExactMatrix._raw(self.field, g, len(rows), len(cols))

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def __eq__(self, o):
        if not isinstance(o, ExactMatrix):
            return NotImplemented
        return self.shape == o.shape and self.entries == o.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.entries)
        return f"ExactMatrix({self.field.value}, [{body}])"


def as_matrix(field: ScalarField, rows) -> ExactMatrix:
    return rows if isinstance(rows, ExactMatrix) else ExactMatrix(field, rows)


# ---------------------------------------------------------------- real rank

def _integer_row(values):
    """Scale a rational row to a primitive integer row with a positive leading entry."""
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for v in ints:
        if v:
            g = gcd(g, v)
    if g == 0:
        return None
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return [v // g for v in ints]


def int_rank(rows, ncols, backend=None) -> int:
    """Rank of an integer matrix; uses the compiled kernel when available."""
    if backend is None:
        backend = KERNEL_BACKEND
    if backend == "cython" and _int_rank_compiled is not None:
        try:
            return _int_rank_compiled(rows, ncols)
        except OverflowError:
            pass
    return _int_rank_python(rows, ncols)


def sparse_real_rank(rows, ncols: int, backend=None) -> int:
    """Rank of a real system given as dicts {column: rational}.

    Rows with a single nonzero entry pin that unknown to zero; they are peeled
    off first (each adds exactly one to the rank), then the rest goes to the
    dense fraction-free kernel.
    """
    live = []
    seen = set()
    for r in rows:
        items = sorted((c, v) for c, v in r.items() if v)
        if not items:
            continue
        cols, vals = zip(*items)
        ints = _integer_row(vals)
        key = (cols, tuple(ints))
        if key in seen:
            continue
        seen.add(key)
        live.append(dict(zip(cols, ints)))
    rank = 0
    dead = set()
    while True:
        singles = set()
        rest = []
        for r in live:
            keys = [c for c in r if c not in dead]
            if len(keys) == 1:
                singles.add(keys[0])
            elif keys:
                rest.append(r)
        if not singles:
            break
        rank += len(singles)
        dead |= singles
        live = rest
    if not live:
        return rank
    cols = sorted({c for r in live for c in r if c not in dead})
    pos = {c: i for i, c in enumerate(cols)}
    dense = []
    for r in live:
        row = [0] * len(cols)
        for c, v in r.items():
            if c not in dead:
                row[pos[c]] = v
        dense.append(row)
    return rank + int_rank(dense, len(cols), backend)


def nullspace_dim_real(system, ncols=None, backend=None) -> int:
    """Dimension of the solution space of a homogeneous real system.

    ``system`` is an ExactMatrix over R, or a list of equal-length rows of
    rationals (pass ``ncols`` when the list is empty).  Elimination is exact
    and fraction-free.
    """
    if isinstance(system, ExactMatrix):
        if system.field is not ScalarField.R:
            raise InvalidInput("nullspace_dim_real expects a real system")
        ncols = system.cols
        rows = [[x.a for x in r] for r in system.entries]
    else:
        rows = [list(r) for r in system]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InvalidInput("ragged system")
    sparse = [{j: _rat(v) for j, v in enumerate(r) if v} for r in rows]
    return ncols - sparse_real_rank(sparse, ncols, backend)


# ---------------------------------------------------------------- general rank

def rank(M: ExactMatrix) -> int:
    """Exact rank over the matrix's field (left row operations over H)."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if all(x.is_real() for r in M.entries for x in r):
        rows = [_integer_row([x.a for x in r]) for r in M.entries]
        return int_rank([r for r in rows if r is not None], M.cols)
    m = [list(r) for r in M.entries]
    nrows, ncols = M.rows, M.cols
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[piv], m[rk] = m[rk], m[piv]
        inv = m[rk][col].inverse()
        for i in range(rk + 1, nrows):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


# ---------------------------------------------------------------- signature

def is_self_adjoint(G: ExactMatrix) -> bool:
    return G.rows == G.cols and G.adjoint() == G


def congruence_signature(G: ExactMatrix):
    """(p, q) of a symmetric / Hermitian / quaternionic Hermitian matrix.

    Diagonalizes by congruence G -> sigma(P)^t G P: pivot on the first nonzero
    diagonal entry; when the remaining diagonal vanishes, the first nonzero
    off-diagonal pair is folded into a nonzero diagonal entry (a hyperbolic
    plane contributes one + and one -).
    """
    if not is_self_adjoint(G):
        raise NotSelfAdjoint("matrix is not self-adjoint for its conjugation")
    m = [list(r) for r in G.entries]
    n = G.rows
    alive = list(range(n))
    p = q = 0
    while alive:
        k = next((i for i in alive if m[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in alive for j in alive if i < j and m[i][j]), None)
            if pair is None:
                break
            i, j = pair
            c = m[j][i].conj()
            # R_i += c R_j, C_i += C_j sigma(c): new G_ii = 2|G_ji|^2 > 0
            m[i] = [x + c * y for x, y in zip(m[i], m[j])]
            cc = c.conj()
            for r in range(n):
                m[r][i] = m[r][i] + m[r][j] * cc
            k = i
        piv = m[k][k]
        if piv.a > 0:
            p += 1
        else:
            q += 1
        inv = piv.inverse()
        alive.remove(k)
        for i in alive:
            if not m[i][k]:
                continue
            f = m[i][k] * inv
            fc = f.conj()
            m[i] = [x - f * y for x, y in zip(m[i], m[k])]
            for r in range(n):
                m[r][i] = m[r][i] - m[r][k] * fc
    return (p, q)
