"""Exact dense linear algebra over the integers and rationals.

Scalars are plain Python ``int`` and ``fractions.Fraction``, so every
operation is arbitrary precision and nothing ever rounds.  The module
provides an immutable dense matrix type, Smith normal form with unimodular
transform matrices, gcds of k x k minors (brute force, oracle grade),
integer linear system solving, and exact matrix powers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """A matrix or vector has the wrong shape for the requested operation."""


class SingularMatrixError(ValueError):
    """Exact inversion was requested for a matrix with determinant zero."""


Scalar = int | Fraction


def exact_scalar(value) -> Scalar:
    """Canonical exact scalar: int when integral, else Fraction in lowest
    terms.  Floats are rejected, never silently converted."""
    if isinstance(value, bool):
        raise TypeError("exact scalars must be int or Fraction, not bool")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"exact scalars must be int or Fraction, got {type(value).__name__}")


def scalar_to_str(value: Scalar) -> str:
    """Render a scalar as a decimal string, ``p/q`` for non-integers."""
    return str(value)


def scalar_from_str(text) -> Scalar:
    """Parse ``"5"``, ``"-3"`` or ``"p/q"`` back into an exact scalar."""
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    if not isinstance(text, str):
        raise TypeError(f"expected a decimal string, got {type(text).__name__}")
    return exact_scalar(Fraction(text))


class Matrix:
    """An immutable dense matrix of exact scalars.

    Entries are ``int`` or ``Fraction``; a matrix whose entries are all
    ``int`` is an *integer* matrix and is accepted by :func:`snf`,
    :func:`minor_gcds` and :func:`solve_integer_system`.  Instances are
    hashable and safe to share between threads.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(tuple(exact_scalar(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("rows have inconsistent lengths")
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self._data)

    def rows_as_tuples(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._data

    @property
    def is_integer(self) -> bool:
        return all(isinstance(x, int) for row in self._data for x in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = ", ".join(repr(list(row)) for row in self._data)
        return f"Matrix([{body}])"

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self._data])

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix addition needs equal shapes")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._data, other._data)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            cols = list(zip(*other._data))
            return Matrix(
                [[_dot(row, col) for col in cols] for row in self._data]
            )
        if isinstance(other, (int, Fraction)):
            return Matrix([[x * other for x in row] for row in self._data])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._data)))

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        return Matrix(
            [[self._data[i][j] for j in col_indices] for i in row_indices]
        )

    def det(self) -> Scalar:
        """Exact determinant (Bareiss for integer matrices)."""
        if not self.is_square:
            raise DimensionError("determinant needs a square matrix")
        if self.is_integer:
            return _det_bareiss(self._data)
        return exact_scalar(_det_fraction(self._data))

    def inverse(self) -> "Matrix":
        """Exact inverse via Gauss-Jordan elimination over the rationals."""
        if not self.is_square:
            raise DimensionError("inverse needs a square matrix")
        n = self.rows
        work = [
            [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self._data)
        ]
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            work[col], work[pivot_row] = work[pivot_row], work[col]
            pivot = work[col][col]
            work[col] = [x / pivot for x in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return Matrix([row[n:] for row in work])


def _dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum(a * b for a, b in zip(u, v))


def _det_bareiss(data) -> int:
    # Fraction-free elimination: every division below is exact.
    n = len(data)
    a = [list(row) for row in data]
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
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _det_fraction(data) -> Fraction:
    n = len(data)
    a = [[Fraction(x) for x in row] for row in data]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                factor = a[i][k] / a[k][k]
                a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
    return det


def row_times_matrix(vector: Sequence[Scalar], matrix: Matrix) -> tuple[Scalar, ...]:
    """Row vector times matrix, returned as a tuple of exact scalars."""
    if len(vector) != matrix.rows:
        raise DimensionError("vector length must equal matrix row count")
    return tuple(
        exact_scalar(Fraction(_dot(vector, matrix.column(j)))) for j in range(matrix.cols)
    )


def matrix_times_column(matrix: Matrix, vector: Sequence[Scalar]) -> tuple[Scalar, ...]:
    if len(vector) != matrix.cols:
        raise DimensionError("vector length must equal matrix column count")
    return tuple(_dot(row, vector) for row in matrix.rows_as_tuples())


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form ``left * original * right = smith``.

    ``left`` and ``right`` are unimodular, ``smith`` is zero off the
    diagonal, and the diagonal is ``invariant_factors`` (nonnegative, each
    dividing the next) padded with zeros.
    """

    smith: Matrix
    left: Matrix
    right: Matrix
    invariant_factors: tuple[int, ...]


def snf(matrix: Matrix) -> SNFResult:
    """Smith normal form of an integer matrix, with transforms.

    The reduction repeatedly moves the entry of smallest nonzero absolute
    value into pivot position and clears its row and column by exact
    division steps; whenever some remaining entry is not divisible by the
    pivot, the offending row is folded in and the reduction restarted, so
    the divisibility chain holds by construction.
    """
    if not matrix.is_integer:
        raise ValueError("snf is defined for integer matrices only")
    rows, cols = matrix.rows, matrix.cols
    a = [list(row) for row in matrix.rows_as_tuples()]
    left = [[int(i == j) for j in range(rows)] for i in range(rows)]
    right = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    def add_row_multiple(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col_multiple(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    def select_pivot(k) -> bool:
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return False
        if best[0] != k:
            swap_rows(k, best[0])
        if best[1] != k:
            swap_cols(k, best[1])
        if a[k][k] < 0:
            negate_row(k)
        return True

    for k in range(min(rows, cols)):
        if not select_pivot(k):
            break
        while True:
            # One reduction sweep: quotient steps against the current pivot
            # leave remainders in place; they are strictly smaller than the
            # pivot, so re-selecting keeps the pivot shrinking and the
            # entries tame.
            for i in range(k + 1, rows):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    if q:
                        add_row_multiple(i, k, -q)
            for j in range(k + 1, cols):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    if q:
                        add_col_multiple(j, k, -q)
            if any(a[i][k] for i in range(k + 1, rows)) or any(
                a[k][j] for j in range(k + 1, cols)
            ):
                select_pivot(k)
                continue
            offender = next(
                (
                    i
                    for i in range(k + 1, rows)
                    if any(x % a[k][k] for x in a[i][k + 1 :])
                ),
                None,
            )
            if offender is None:
                break
            add_row_multiple(k, offender, 1)

    diagonal = [a[i][i] for i in range(min(rows, cols))]
    factors = tuple(itertools.takewhile(lambda d: d != 0, diagonal))
    smith = Matrix(a)
    left_m = Matrix(left)
    right_m = Matrix(right)
    assert left_m * matrix * right_m == smith
    return SNFResult(smith=smith, left=left_m, right=right_m, invariant_factors=factors)


def minor_gcds(matrix: Matrix) -> tuple[int, ...]:
    """gcds of all i x i minors, for i = 1 .. min(rows, cols).

    Enumerates every minor combinatorially, so the cost is exponential in
    the smaller dimension; this is an oracle for testing, not a production
    path.  Entry i is zero exactly when all (i+1) x (i+1) minors vanish.
    """
    if not matrix.is_integer:
        raise ValueError("minor_gcds is defined for integer matrices only")
    out = []
    k = min(matrix.rows, matrix.cols)
    for size in range(1, k + 1):
        g = 0
        for row_sel in itertools.combinations(range(matrix.rows), size):
            for col_sel in itertools.combinations(range(matrix.cols), size):
                g = math.gcd(g, matrix.submatrix(row_sel, col_sel).det())
        out.append(g)
    return tuple(out)


def solve_integer_system(matrix: Matrix, rhs: Sequence[int]) -> list[int] | None:
    """Solve ``matrix @ x = rhs`` over the integers via Smith normal form.

    Returns one integer solution (free coordinates set to zero) or ``None``
    when no integer solution exists: in that case some invariant factor
    fails to divide the transformed right-hand side, or a zero row meets a
    nonzero target.  Any returned solution is re-verified by substitution.
    """
    if len(rhs) != matrix.rows:
        raise DimensionError("right-hand side length must equal the row count")
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in rhs):
        raise TypeError("right-hand side must be a vector of integers")
    result = snf(matrix)
    transformed = matrix_times_column(result.left, list(rhs))
    factors = result.invariant_factors
    rank = len(factors)
    y = [0] * matrix.cols
    for i in range(matrix.rows):
        if i < rank:
            quotient, remainder = divmod(transformed[i], factors[i])
            if remainder:
                return None
            y[i] = quotient
        elif transformed[i] != 0:
            return None
    x = list(matrix_times_column(result.right, y))
    assert list(matrix_times_column(matrix, x)) == list(rhs)
    return x


def mat_pow(matrix: Matrix, exponent: int) -> Matrix:
    """Exact n-th power of a square matrix; negative n inverts first."""
    if not matrix.is_square:
        raise DimensionError("matrix power needs a square matrix")
    base = matrix.inverse() if exponent < 0 else matrix
    n = abs(exponent)
    result = Matrix.identity(matrix.rows)
    while n:
        if n & 1:
            result = result * base
        base = base * base if n > 1 else base
        n >>= 1
    return result


def matrix_to_json(matrix: Matrix) -> dict:
    """Matrix as a JSON-ready dict with entries as decimal strings."""
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [[scalar_to_str(x) for x in row] for row in matrix.rows_as_tuples()],
    }


def matrix_from_json(obj: dict) -> Matrix:
    """Inverse of :func:`matrix_to_json`; validates the declared shape."""
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (TypeError, KeyError) as exc:
        raise ValueError("matrix JSON needs 'rows', 'cols' and 'entries'") from exc
    matrix = Matrix([[scalar_from_str(x) for x in row] for row in entries])
    if (matrix.rows, matrix.cols) != (rows, cols):
        raise ValueError(
            f"declared shape {rows}x{cols} does not match entries "
            f"{matrix.rows}x{matrix.cols}"
        )
    return matrix
