"""Exact linear algebra over the rationals.

Matrices are small and dense; entries are :class:`fractions.Fraction`.
Every rank decision is exact, so nothing here takes a tolerance.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


class Mat:
    """Dense rational matrix with value semantics.

    ``0 x n`` and ``n x 0`` shapes are legal and carry their shape.
    """

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[ZERO] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError(f"entry grid does not match shape {rows}x{cols}")
            self.data = [[as_scalar(x) for x in r] for r in data]
        self._hash = None

    @classmethod
    def _raw(cls, rows: int, cols: int, data: list[list[Fraction]]) -> "Mat":
        m = cls.__new__(cls)
        m.rows, m.cols, m.data, m._hash = rows, cols, data, None
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        rows = list(rows)
        if not rows:
            return cls(0, cols or 0)
        return cls(len(rows), len(rows[0]), rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Mat":
        cols = list(columns)
        return cls._raw(rows, len(cols), [[as_scalar(c[i]) for c in cols] for i in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls._raw(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        d = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            d[i][i] = ONE
        return cls._raw(n, n, d)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    def copy(self) -> "Mat":
        return Mat._raw(self.rows, self.cols, [list(r) for r in self.data])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def __add__(self, other: "Mat") -> "Mat":
        _check_same(self, other)
        return Mat._raw(self.rows, self.cols,
                        [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        _check_same(self, other)
        return Mat._raw(self.rows, self.cols,
                        [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        return Mat._raw(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c) -> "Mat":
        c = as_scalar(c)
        return Mat._raw(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.cols
        odata = other.data
        out = []
        for r in self.data:
            acc = [ZERO] * ocols
            for k, a in enumerate(r):
                if a:
                    ok = odata[k]
                    for j in range(ocols):
                        b = ok[j]
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return Mat._raw(self.rows, ocols, out)

    def apply(self, v: Sequence[Fraction]) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self.data]

    def T(self) -> "Mat":
        return Mat._raw(self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows else
                        [[] for _ in range(self.cols)])

    transpose = T

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.data]

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Mat":
        rows, cols = list(rows), list(cols)
        return Mat._raw(len(rows), len(cols), [[self.data[i][j] for j in cols] for i in rows])

    def flatten(self) -> list[Fraction]:
        return [x for r in self.data for x in r]

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def rank(self) -> int:
        return len(rref(self)[1])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        m = [list(r) for r in self.data]
        n = self.rows
        d = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            piv = m[c][c]
            d *= piv
            for i in range(c + 1, n):
                f = m[i][c]
                if f:
                    f = f / piv
                    mi, mc = m[i], m[c]
                    for j in range(c, n):
                        if mc[j]:
                            mi[j] -= f * mc[j]
        return d

    def inverse(self) -> "Mat":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of non-square matrix")
        x = solve(self, Mat.identity(n))
        if x is None or self.rank() != n:
            raise ZeroDivisionError("matrix is singular")
        return x


def _check_same(a: Mat, b: Mat) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def hstack(mats: Sequence[Mat], rows: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return Mat.zeros(rows or 0, 0)
    r = mats[0].rows
    if any(m.rows != r for m in mats):
        raise ValueError("hstack row mismatch")
    return Mat._raw(r, sum(m.cols for m in mats),
                    [[x for m in mats for x in m.data[i]] for i in range(r)])


def vstack(mats: Sequence[Mat], cols: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return Mat.zeros(0, cols or 0)
    c = mats[0].cols
    if any(m.cols != c for m in mats):
        raise ValueError("vstack column mismatch")
    return Mat._raw(sum(m.rows for m in mats), c, [list(r) for m in mats for r in m.data])


def block_diag(mats: Sequence[Mat]) -> Mat:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Mat.zeros(rows, cols)
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            out.data[r0 + i][c0:c0 + m.cols] = m.data[i]
        r0 += m.rows
        c0 += m.cols
    return out


def kron(a: Mat, b: Mat) -> Mat:
    out = Mat.zeros(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.data[i][j]
            if not x:
                continue
            for k in range(b.rows):
                row = out.data[i * b.rows + k]
                bk = b.data[k]
                for l in range(b.cols):
                    if bk[l]:
                        row[j * b.cols + l] = x * bk[l]
    return out


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = [list(r) for r in m.data]
    pivots = _rref_inplace(a, m.cols)
    return Mat._raw(m.rows, m.cols, a), pivots


def _rref_inplace(a: list[list[Fraction]], ncols: int) -> list[int]:
    nrows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        row = a[r]
        inv = 1 / row[c]
        if inv != 1:
            for j in range(c, ncols):
                if row[j]:
                    row[j] *= inv
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    ai = a[i]
                    for j in nz:
                        ai[j] -= f * row[j]
        pivots.append(c)
        r += 1
    return pivots


def rank(m: Mat) -> int:
    return m.rank()


def kernel_basis(m: Mat) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column."""
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red.data[r][free]
        basis.append(v)
    return basis


def kernel_matrix(m: Mat) -> Mat:
    return Mat.from_columns(kernel_basis(m), m.cols)


def solve(a: Mat, b: Mat) -> Mat | None:
    """Some ``x`` with ``a @ x == b``, or ``None`` if inconsistent."""
    if a.rows != b.rows:
        raise ValueError(f"row count mismatch {a.rows} vs {b.rows}")
    aug = [list(ra) + list(rb) for ra, rb in zip(a.data, b.data)]
    pivots = _rref_inplace(aug, a.cols + b.cols)
    x = Mat.zeros(a.cols, b.cols)
    for r, pc in enumerate(pivots):
        if pc >= a.cols:
            return None
        x.data[pc] = aug[r][a.cols:]
    return x


def column_space(m: Mat) -> Mat:
    """Columns of ``m`` at pivot positions: a basis of its image."""
    _, piv = rref(m)
    return m.submatrix(range(m.rows), piv)


def row_space_basis(vectors: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Nonzero rows of the rref of the given vectors."""
    if not vectors:
        return []
    red, piv = rref(Mat.from_rows(vectors))
    return [list(red.data[i]) for i in range(len(piv))]


def complement_basis(sub: Mat, dim: int) -> list[int]:
    """Standard unit vectors (by index) completing the columns of ``sub`` to a basis."""
    if sub.cols == 0:
        return list(range(dim))
    _, piv = rref(hstack([sub, Mat.identity(dim)]))
    return [p - sub.cols for p in piv if p >= sub.cols]


def in_span(basis: Mat, v: Sequence[Fraction]) -> bool:
    col = Mat.from_columns([v], basis.rows)
    return solve(basis, col) is not None


def unit(n: int, i: int) -> list[Fraction]:
    v = [ZERO] * n
    v[i] = ONE
    return v
