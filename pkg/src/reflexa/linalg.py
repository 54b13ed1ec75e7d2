"""Exact dense linear algebra over F_p and Q.

All canonical forms (RREF, kernel bases, particular solutions) follow one
deterministic pivot rule — scan columns left to right, take the first
nonzero entry from the current row down — so identical inputs produce
bit-identical outputs everywhere in the library.

Elimination over small prime fields is routed through int64 numpy
arithmetic (exact: entries stay reduced mod p, products fit in 62 bits);
rationals and large primes use the arbitrary-precision Python path.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .fields import FieldSpec

# numpy fast path: p small enough that an outer-product update cannot
# overflow int64, and the matrix is big enough to amortize conversion.
_NP_MAX_P = 1 << 15
_NP_MIN_CELLS = 128


class Matrix:
    """Immutable dense matrix with canonical field entries, row-major."""

    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, field: FieldSpec, entries, *, cols: int | None = None, _canon=True):
        if _canon:
            entries = tuple(tuple(field.canon(x) for x in row) for row in entries)
        else:
            entries = tuple(tuple(row) for row in entries)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(entries))
        if entries:
            cols = len(entries[0])
        elif cols is None:
            cols = 0
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, tuple((z,) * cols for _ in range(rows)), cols=cols, _canon=False)

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(
            field,
            tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)),
            _canon=False,
        )

    @staticmethod
    def from_rows(field: FieldSpec, rows) -> "Matrix":
        return Matrix(field, rows)

    @staticmethod
    def row_vector(field: FieldSpec, values) -> "Matrix":
        return Matrix(field, (tuple(values),))

    # -- basic structure ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.entries == other.entries
            and self.cols == other.cols
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.cols, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def row(self, i) -> tuple:
        return self.entries[i]

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for row in self.entries for x in row)

    def transpose(self) -> "Matrix":
        if self.rows == 0 or self.cols == 0:
            return Matrix(self.field, tuple(() for _ in range(self.cols)), cols=self.rows, _canon=False)
        return Matrix(self.field, tuple(zip(*self.entries)), _canon=False)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        col_idx = tuple(col_idx)
        return Matrix(
            self.field,
            tuple(tuple(self.entries[r][c] for c in col_idx) for r in row_idx),
            cols=len(col_idx),
            _canon=False,
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        assert self.rows == other.rows and self.field == other.field
        return Matrix(
            self.field,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
            cols=self.cols + other.cols,
            _canon=False,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        assert self.cols == other.cols and self.field == other.field
        return Matrix(self.field, self.entries + other.entries, cols=self.cols, _canon=False)

    def flatten(self) -> tuple:
        return tuple(x for row in self.entries for x in row)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        f = self.field
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(
            f,
            tuple(
                tuple(f.add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            cols=self.cols,
            _canon=False,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        f = self.field
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(
            f,
            tuple(
                tuple(f.sub(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            cols=self.cols,
            _canon=False,
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.canon(c)
        return Matrix(
            f,
            tuple(tuple(f.mul(c, x) for x in row) for row in self.entries),
            cols=self.cols,
            _canon=False,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.mul(other)

    def mul(self, other: "Matrix") -> "Matrix":
        f = self.field
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        if (
            f.is_prime_field
            and f.p < _NP_MAX_P
            and self.rows * other.cols >= _NP_MIN_CELLS
        ):
            a = np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)
            b = np.array(other.entries, dtype=np.int64).reshape(other.rows, other.cols)
            c = (a @ b) % f.p
            return Matrix(
                f, tuple(tuple(int(x) for x in row) for row in c), cols=other.cols, _canon=False
            )
        z = f.zero()
        bt = other.transpose().entries
        out = []
        for ra in self.entries:
            row = []
            for cb in bt:
                s = z
                for x, y in zip(ra, cb):
                    if x and y:
                        s = f.add(s, f.mul(x, y))
                row.append(s)
            out.append(tuple(row))
        return Matrix(f, tuple(out), cols=other.cols, _canon=False)


@dataclass(frozen=True)
class RrefResult:
    reduced: Matrix
    rank: int
    pivot_cols: tuple


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form with deterministic pivoting."""
    f = m.field
    if f.is_prime_field and f.p < _NP_MAX_P and m.rows * m.cols >= _NP_MIN_CELLS:
        return _rref_np(m)
    return _rref_py(m)


def _rref_py(m: Matrix) -> RrefResult:
    f = m.field
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    piv_cols = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        inv = f.inv(rows[r][c])
        if inv != f.one():
            rows[r] = [f.mul(inv, x) for x in rows[r]]
        rr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                ri = rows[i]
                rows[i] = [f.sub(a, f.mul(fac, b)) for a, b in zip(ri, rr)]
        piv_cols.append(c)
        r += 1
    red = Matrix(f, tuple(tuple(row) for row in rows), cols=ncols, _canon=False)
    return RrefResult(red, r, tuple(piv_cols))


def _rref_np(m: Matrix) -> RrefResult:
    f = m.field
    p = f.p
    a = np.array(m.entries, dtype=np.int64).reshape(m.rows, m.cols)
    nrows, ncols = a.shape
    piv_cols = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        piv_cols.append(c)
        r += 1
    red = Matrix(f, tuple(tuple(int(x) for x in row) for row in a), cols=ncols, _canon=False)
    return RrefResult(red, r, tuple(piv_cols))


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> Matrix:
    """Canonical RREF-derived basis of ``{v : m . v^T = 0}``, one row per vector."""
    f = m.field
    res = rref(m)
    piv = res.pivot_cols
    piv_set = set(piv)
    free = [c for c in range(m.cols) if c not in piv_set]
    z, o = f.zero(), f.one()
    out = []
    for fc in free:
        v = [z] * m.cols
        v[fc] = o
        for i, pc in enumerate(piv):
            v[pc] = f.neg(res.reduced.entries[i][fc])
        out.append(tuple(v))
    return Matrix(f, tuple(out), cols=m.cols, _canon=False)


def solve(a: Matrix, b: Matrix):
    """A canonical particular solution x of ``a . x = b`` (free vars zero), or None."""
    if a.rows != b.rows:
        raise ValueError(f"solve: a has {a.rows} rows, b has {b.rows}")
    f = a.field
    aug = a.hstack(b)
    res = rref(aug)
    for pc in res.pivot_cols:
        if pc >= a.cols:
            return None
    z = f.zero()
    x = [[z] * b.cols for _ in range(a.cols)]
    for i, pc in enumerate(res.pivot_cols):
        row = res.reduced.entries[i]
        for j in range(b.cols):
            x[pc][j] = row[a.cols + j]
    return Matrix(f, tuple(tuple(r) for r in x), cols=b.cols, _canon=False)


def solve_left(b: Matrix, a: Matrix):
    """A canonical w with ``w . b = a`` (rows of a expressed in the row space of b), or None."""
    wt = solve(b.transpose(), a.transpose())
    return None if wt is None else wt.transpose()


def row_space(m: Matrix) -> Matrix:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    res = rref(m)
    return Matrix(m.field, res.reduced.entries[: res.rank], cols=m.cols, _canon=False)


def row_space_contains(space: Matrix, vectors: Matrix) -> bool:
    """True iff every row of ``vectors`` lies in the row space of ``space``."""
    if vectors.rows == 0:
        return True
    return solve_left(space, vectors) is not None


def invert(m: Matrix):
    """Inverse matrix, or None if singular (square input required)."""
    if m.rows != m.cols:
        raise ValueError("invert: matrix not square")
    # solve(m, I) is consistent iff m has full rank
    return solve(m, Matrix.identity(m.field, m.rows))
