"""Arbitrary-precision integer matrices and their normal forms.

Everything here is exact: entries are Python ints, transforms are kept
unimodular, and no modular shortcuts are taken. The Smith form drives
all kernel/cokernel computations in the package. Matrices are immutable
(tuple-of-row-tuples) so they can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import FinAbGroup, from_elementary_divisors
from .errors import ShapeMismatch


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative dimension")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ShapeMismatch(f"data does not fill {self.rows}x{self.cols}")

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("add shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("sub shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(-a for a in r) for r in self.data))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(self.rows, self.cols,
                             tuple(tuple(a * other for a in r) for r in self.data))
        return self @ other

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"matmul {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.data)) if other.data else [()] * other.cols
        out = tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
            for r in self.data)
        if self.rows and other.cols == 0:
            out = tuple(() for _ in range(self.rows))
        return IntMatrix(self.rows, other.cols, out)

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ShapeMismatch("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.data
                         else tuple(() for _ in range(self.cols)))

    def mod(self, n: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a % n for a in r) for r in self.data))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.data for a in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == (1 if i == j else 0)
            for i in range(self.rows) for j in range(self.cols))

    def is_permutation(self) -> bool:
        """True iff this is a permutation matrix (0/1, one 1 per row and column)."""
        if self.rows != self.cols:
            return False
        seen_cols = set()
        for r in self.data:
            ones = [j for j, a in enumerate(r) if a == 1]
            if len(ones) != 1 or any(a not in (0, 1) for a in r):
                return False
            seen_cols.add(ones[0])
        return len(seen_cols) == self.rows

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(a) for a in r) for r in self.data) + "]"


def from_rows(rows: list[list[int]] | list[tuple[int, ...]], cols: int | None = None) -> IntMatrix:
    nrows = len(rows)
    if nrows == 0:
        if cols is None:
            cols = 0
        return IntMatrix(0, cols, ())
    ncols = len(rows[0]) if cols is None else cols
    return IntMatrix(nrows, ncols, tuple(tuple(int(a) for a in r) for r in rows))


def identity(n: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def zeros(rows: int, cols: int) -> IntMatrix:
    return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))


def diag(entries: list[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
    n = len(entries)
    rows = n if rows is None else rows
    cols = n if cols is None else cols
    return IntMatrix(rows, cols, tuple(
        tuple(entries[i] if i == j and i < n else 0 for j in range(cols))
        for i in range(rows)))


def vstack(mats: list[IntMatrix]) -> IntMatrix:
    mats = [m for m in mats]
    if not mats:
        return IntMatrix(0, 0, ())
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ShapeMismatch("vstack column mismatch")
    data = tuple(r for m in mats for r in m.data)
    return IntMatrix(sum(m.rows for m in mats), cols, data)


def hstack(mats: list[IntMatrix]) -> IntMatrix:
    mats = [m for m in mats]
    if not mats:
        return IntMatrix(0, 0, ())
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ShapeMismatch("hstack row mismatch")
    data = tuple(tuple(a for m in mats for a in m.data[i]) for i in range(rows))
    return IntMatrix(rows, sum(m.cols for m in mats), data)


def block_diag(mats: list[IntMatrix]) -> IntMatrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = [[0] * cols for _ in range(rows)]
    i0 = j0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                out[i0 + i][j0 + j] = m.data[i][j]
        i0 += m.rows
        j0 += m.cols
    return from_rows(out, cols)


def columns(mat: IntMatrix) -> list[tuple[int, ...]]:
    return [mat.col(j) for j in range(mat.cols)]


def from_columns(cols: list[tuple[int, ...]], rows: int) -> IntMatrix:
    return IntMatrix(rows, len(cols),
                     tuple(tuple(c[i] for c in cols) for i in range(rows)))


def det(mat: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if mat.rows != mat.cols:
        raise ShapeMismatch("determinant of non-square matrix")
    n = mat.rows
    if n == 0:
        return 1
    a = [list(r) for r in mat.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(mat: IntMatrix) -> bool:
    return mat.rows == mat.cols and det(mat) in (1, -1)


def _snf_inplace(a: list[list[int]], rows: int, cols: int):
    """Reduce a to Smith form in place; return the row and column transforms.

    Pivot choice is the minimal nonzero absolute value in the remaining
    block, which keeps intermediate entries small at the scales this
    package works at.
    """
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i1, i2):
        a[i1], a[i2] = a[i2], a[i1]
        u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1, j2):
        for r in a:
            r[j1], r[j2] = r[j2], r[j1]
        for r in v:
            r[j1], r[j2] = r[j2], r[j1]

    def addmul_row(dst, src, q):
        ad, asrc = a[dst], a[src]
        for j in range(cols):
            ad[j] += q * asrc[j]
        ud, usrc = u[dst], u[src]
        for j in range(rows):
            ud[j] += q * usrc[j]

    def addmul_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # Locate the smallest nonzero entry in the trailing block.
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)

        while True:
            # Clear the pivot column.
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # Clear the pivot row.
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # Enforce divisibility of the trailing block by the pivot.
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    return u, v


def smith_normal_form(mat: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U @ mat @ V = D, U and V unimodular.

    D is diagonal with nonnegative entries d_1 | d_2 | ...
    """
    a = [list(r) for r in mat.data]
    u, v = _snf_inplace(a, mat.rows, mat.cols)
    return (from_rows(u, mat.rows),
            from_rows(a, mat.cols),
            from_rows(v, mat.cols))


def snf_diagonal(mat: IntMatrix) -> list[int]:
    a = [list(r) for r in mat.data]
    _snf_inplace(a, mat.rows, mat.cols)
    return [a[i][i] for i in range(min(mat.rows, mat.cols))]


def rank(mat: IntMatrix) -> int:
    return sum(1 for d in snf_diagonal(mat) if d != 0)


def cokernel_structure(mat: IntMatrix) -> FinAbGroup:
    """Isomorphism type of Z^rows / column-image(mat)."""
    ds = snf_diagonal(mat)
    r = sum(1 for d in ds if d != 0)
    return from_elementary_divisors([d for d in ds if d > 1], mat.rows - r)


def hnf_columns(mat: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form of the column lattice of mat.

    Zero columns are dropped; pivots (first nonzero entry of each column,
    scanning top-down) are positive and strictly lower with each later
    column; earlier columns' entries in a pivot row are reduced into
    [0, pivot). The result is the canonical basis of the column span.
    """
    # Work on the transpose with row operations; transpose back at the end.
    m = [list(c) for c in zip(*mat.data)] if mat.data else []
    nrows = len(m)              # original columns
    ncols = mat.rows
    pivot_row = 0
    for j in range(ncols):
        if pivot_row >= nrows:
            break
        # gcd-reduce all entries of column j below pivot_row into one row
        nz = [i for i in range(pivot_row, nrows) if m[i][j] != 0]
        if not nz:
            continue
        i0 = nz[0]
        m[pivot_row], m[i0] = m[i0], m[pivot_row]
        for i in range(pivot_row + 1, nrows):
            while m[i][j] != 0:
                q = m[pivot_row][j] // m[i][j]
                m[pivot_row] = [x - q * y for x, y in zip(m[pivot_row], m[i])]
                if m[pivot_row][j] == 0:
                    m[pivot_row], m[i] = m[i], m[pivot_row]
                    break
                m[pivot_row], m[i] = m[i], m[pivot_row]
        if m[pivot_row][j] < 0:
            m[pivot_row] = [-x for x in m[pivot_row]]
        # Reduce rows above the pivot.
        p = m[pivot_row][j]
        for i in range(pivot_row):
            q = m[i][j] // p
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[pivot_row])]
        pivot_row += 1
    kept = [r for r in m[:pivot_row]]
    return from_columns([tuple(r) for r in kept], mat.rows)


def kernel_basis(mat: IntMatrix) -> IntMatrix:
    """Canonical (HNF-reduced) basis of {x : mat @ x = 0}, as columns.

    The kernel of an integer matrix is a saturated sublattice, so this
    basis generates every integer solution.
    """
    _, d, v = smith_normal_form(mat)
    free = []
    limit = min(mat.rows, mat.cols)
    for j in range(mat.cols):
        if j >= limit or d.data[j][j] == 0:
            free.append(v.col(j))
    return hnf_columns(from_columns(free, mat.cols))


def solve_exact(mat: IntMatrix, rhs: IntMatrix) -> IntMatrix | None:
    """Solve mat @ X = rhs over the integers; None when no solution exists."""
    if rhs.rows != mat.rows:
        raise ShapeMismatch("solve_exact shape mismatch")
    u, d, v = smith_normal_form(mat)
    w = u @ rhs
    limit = min(mat.rows, mat.cols)
    zcols = []
    for j in range(rhs.cols):
        z = [0] * mat.cols
        for i in range(mat.rows):
            di = d.data[i][i] if i < limit else 0
            wi = w.data[i][j]
            if di == 0:
                if wi != 0:
                    return None
            else:
                if wi % di != 0:
                    return None
                if i < mat.cols:
                    z[i] = wi // di
        zcols.append(tuple(z))
    return v @ from_columns(zcols, mat.cols)


def in_column_span(mat: IntMatrix, vec: tuple[int, ...]) -> bool:
    """Is vec an integer combination of the columns of mat?"""
    return solve_exact(mat, from_columns([vec], mat.rows)) is not None


def lattice_quotient(basis: IntMatrix, sub_gens: IntMatrix) -> FinAbGroup:
    """Structure of (lattice with given basis columns) / (span of sub_gens columns).

    Requires every sub_gens column to be an integer combination of the
    basis columns (true whenever basis is saturated and the columns lie
    in its rational span, the situation for all cohomology quotients here).
    """
    if basis.cols == 0:
        if not sub_gens.is_zero():
            raise ShapeMismatch("sublattice not contained in zero lattice")
        return FinAbGroup()
    y = solve_exact(basis, sub_gens)
    if y is None:
        raise ShapeMismatch("sublattice generators outside the lattice")
    return cokernel_structure(y)
