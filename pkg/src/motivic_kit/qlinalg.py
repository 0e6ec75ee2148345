"""Exact rational linear algebra: dense matrices, Kronecker products,
kernels, and bounded chain complexes with their homology.

All entries are `fractions.Fraction`, so every result is exact and fully
reduced; there is no floating point anywhere.  Storage is dense row-major,
elimination uses the first nonzero pivot, and all outputs are reproducible.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(q: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(q)


def parse_rational(s) -> Fraction:
    return _frac(s)


class QMatrix:
    """An exact rational matrix, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(_frac(x) for x in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @staticmethod
    def from_rows(rows) -> "QMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return QMatrix(n, m, [x for r in rows for x in r])

    @staticmethod
    def zeros(rows: int, cols: int) -> "QMatrix":
        return QMatrix(rows, cols, [0] * (rows * cols))

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(n, n, [1 if i == j else 0
                              for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __eq__(self, other):
        return (isinstance(other, QMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i))
                         for i in range(self.rows))
        return f"QMatrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return QMatrix(self.rows, self.cols,
                       (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-other)

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, (-a for a in self.entries))

    def scale(self, c) -> "QMatrix":
        c = _frac(c)
        return QMatrix(self.rows, self.cols, (c * a for a in self.entries))

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       (self.entries[i * self.cols + j]
                        for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [format_rational(x) for x in self.entries]}

    @staticmethod
    def from_json(data) -> "QMatrix":
        return QMatrix(data["rows"], data["cols"],
                       [parse_rational(x) for x in data["entries"]])


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Exact matrix product; requires a.cols = b.rows."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = []
    bt = b.transpose()
    for i in range(a.rows):
        ra = a.row(i)
        for j in range(b.cols):
            rb = bt.row(j)
            out.append(sum((x * y for x, y in zip(ra, rb) if x and y),
                           Fraction(0)))
    return QMatrix(a.rows, b.cols, out)


def kron(a: QMatrix, b: QMatrix) -> QMatrix:
    """Kronecker (tensor) product of matrices.

    Index convention: row (s', t') of the result is flattened as
    s'*b.rows + t', and likewise for columns, so the left factor owns the
    most significant digit.
    """
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [Fraction(0)] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.entries[i * a.cols + j]
            if x == 0:
                continue
            for p in range(b.rows):
                base = (i * b.rows + p) * cols + j * b.cols
                brow = p * b.cols
                for q in range(b.cols):
                    out[base + q] = x * b.entries[brow + q]
    return QMatrix(rows, cols, out)


def kron_power(a: QMatrix, n: int) -> QMatrix:
    """n-fold Kronecker power; the zeroth power is the 1x1 identity."""
    result = QMatrix.identity(1)
    for _ in range(n):
        result = kron(result, a)
    return result


def _row_echelon(a: QMatrix):
    """Row echelon form (first-nonzero pivoting); returns (rows, pivot columns)."""
    m = [list(a.row(i)) for i in range(a.rows)]
    pivots = []
    r = 0
    for c in range(a.cols):
        pivot_row = None
        for i in range(r, a.rows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return m, pivots


def rank(a: QMatrix) -> int:
    return len(_row_echelon(a)[1])


def kernel_basis(a: QMatrix) -> QMatrix:
    """Columns form an exact basis of ker(a); rank + nullity = cols.

    The basis is the standard one read off the reduced echelon form (one
    column per free variable, with a 1 in the free position), so it is
    deterministic.
    """
    m, pivots = _row_echelon(a)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    basis_cols = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis_cols.append(v)
    out = QMatrix(a.cols, len(free),
                  (basis_cols[j][i] for i in range(a.cols)
                   for j in range(len(free))))
    return out


def nullity(a: QMatrix) -> int:
    return a.cols - rank(a)


class ChainComplex:
    """A bounded chain complex of Q-vector spaces.

    `dims[n]` is the dimension in degree n for lo <= n <= hi, and
    `differentials[n]` is the matrix of d_n : degree n -> degree n-1 for
    lo < n <= hi.  The identity d o d = 0 is enforced exactly at
    construction.
    """

    __slots__ = ("lo", "hi", "dims", "differentials")

    def __init__(self, lo: int, hi: int, dims, differentials):
        if lo > hi:
            raise ValueError("empty degree range")
        dims = {int(n): int(d) for n, d in dims.items()}
        differentials = dict(differentials)
        for n in range(lo, hi + 1):
            if n not in dims or dims[n] < 0:
                raise ValueError(f"missing or negative dimension in degree {n}")
        for n in range(lo + 1, hi + 1):
            d = differentials.get(n)
            if d is None:
                d = QMatrix.zeros(dims[n - 1], dims[n])
                differentials[n] = d
            if d.rows != dims[n - 1] or d.cols != dims[n]:
                raise ValueError(f"differential {n} has wrong shape")
        for n in list(differentials):
            if not (lo < n <= hi):
                raise ValueError(f"differential {n} outside degree range")
        for n in range(lo + 2, hi + 1):
            if not matmul(differentials[n - 1], differentials[n]).is_zero():
                raise ValueError(f"d_{n-1} o d_{n} != 0")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "differentials", differentials)

    def __setattr__(self, name, value):
        raise AttributeError("ChainComplex is immutable")

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def differential(self, n: int) -> QMatrix:
        """d_n as a matrix, the zero map outside the stored range."""
        if self.lo < n <= self.hi:
            return self.differentials[n]
        return QMatrix.zeros(self.dim(n - 1), self.dim(n))

    def __eq__(self, other):
        return (isinstance(other, ChainComplex) and self.lo == other.lo
                and self.hi == other.hi and self.dims == other.dims
                and self.differentials == other.differentials)

    def __repr__(self):
        dims = " ".join(f"{n}:{self.dims[n]}" for n in range(self.lo, self.hi + 1))
        return f"ChainComplex([{self.lo},{self.hi}], dims {dims})"

    def euler_characteristic(self) -> Fraction:
        return sum(((-1) ** n) * self.dims[n] for n in range(self.lo, self.hi + 1))

    def homology_dims(self) -> dict:
        """dim H_n = nullity(d_n) - rank(d_{n+1}), per degree in range."""
        out = {}
        for n in range(self.lo, self.hi + 1):
            if n == self.lo:
                null_n = self.dims[n]
            else:
                null_n = nullity(self.differentials[n])
            if n == self.hi:
                rank_next = 0
            else:
                rank_next = rank(self.differentials[n + 1])
            out[n] = null_n - rank_next
        return out

    def to_json(self):
        return {"lo": self.lo, "hi": self.hi,
                "dims": {str(n): self.dims[n]
                         for n in range(self.lo, self.hi + 1)},
                "differentials": {str(n): self.differentials[n].to_json()
                                  for n in range(self.lo + 1, self.hi + 1)}}

    @staticmethod
    def from_json(data) -> "ChainComplex":
        dims = {int(n): d for n, d in data["dims"].items()}
        diffs = {int(n): QMatrix.from_json(m)
                 for n, m in data["differentials"].items()}
        return ChainComplex(data["lo"], data["hi"], dims, diffs)


def single_degree_complex(dim: int, degree: int = 0) -> ChainComplex:
    """The complex with one space in one degree and no differentials."""
    return ChainComplex(degree, degree, {degree: dim}, {})


def homology_dims(c: ChainComplex) -> dict:
    return c.homology_dims()
