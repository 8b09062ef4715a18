"""Exact dense linear algebra over the package's scalar domains.

Matrices are immutable row-tuples.  Subspaces are kept in reduced
row-echelon form with no zero rows, which makes the representative unique:
two subspaces are equal iff their stored bases are identical.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .fields import Field, PrimeField, Scalar

Vector = tuple  # length-n tuple of scalars


def _rref(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


class Matrix:
    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable[Scalar]]):
        self.field = field
        self.rows = tuple(tuple(row) for row in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(row) != width for row in self.rows):
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence[Scalar]]) -> "Matrix":
        return cls(field, zip(*cols)) if cols else cls(field, [])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows)) if self.rows else self

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in r] for r in self.rows])

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(self.field, [[c * a for a in r] for r in self.rows])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"dimension mismatch {self.ncols} vs {other.nrows}")
        cols = other.transpose().rows
        z = self.field.zero
        out = []
        for row in self.rows:
            out.append([sum((a * b for a, b in zip(row, col) if a and b), z) for col in cols])
        return Matrix(self.field, out)

    def apply(self, vec: Sequence[Scalar]) -> Vector:
        if len(vec) != self.ncols:
            raise ValueError(f"dimension mismatch {self.ncols} vs {len(vec)}")
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, vec) if a and b), z) for row in self.rows)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        rows, pivots = _rref(self.field, [list(r) for r in self.rows])
        return Matrix(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        rows = [list(r) for r in self.rows]
        det = self.field.one
        for c in range(n):
            pivot = next((i for i in range(c, n) if rows[i][c]), None)
            if pivot is None:
                return self.field.zero
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = self.field.one / rows[c][c]
            for i in range(c + 1, n):
                if rows[i][c]:
                    f = rows[i][c] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and bool(self.det())

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        ident = Matrix.identity(self.field, n)
        aug = [list(r) + list(i) for r, i in zip(self.rows, ident.rows)]
        rows, pivots = _rref(self.field, aug)
        if len(pivots) != n or pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in rows])

    def sort_key(self):
        return self.rows

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and other.rows == self.rows and other.field == self.field

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return format_matrix(self)


def format_matrix(m: Matrix) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in m.rows) + "]"


def format_vector(v: Sequence[Scalar]) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


class Subspace:
    """Subspace of k^n held as a canonical RREF basis (rows, no zero rows)."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: Field, ambient: int, basis: tuple[Vector, ...]):
        self.field = field
        self.ambient = ambient
        self.basis = basis

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"ambient dimension mismatch: {len(v)} vs {ambient}")
        if not vecs:
            return cls(field, ambient, ())
        rows, pivots = _rref(field, vecs)
        return cls(field, ambient, tuple(tuple(r) for r in rows[: len(pivots)]))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls.from_vectors(field, ambient, Matrix.identity(field, ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def _require_same_ambient(self, other: "Subspace") -> None:
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("subspaces live in different ambient spaces")

    def sum(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: rref of [U|U; W|0], rows with zero left block carry the
        # intersection in the right block.
        self._require_same_ambient(other)
        n = self.ambient
        z = self.field.zero
        block = [list(v) + list(v) for v in self.basis]
        block += [list(w) + [z] * n for w in other.basis]
        if not block:
            return Subspace.zero(self.field, n)
        rows, _ = _rref(self.field, block)
        out = [row[n:] for row in rows if not any(row[:n]) and any(row[n:])]
        return Subspace.from_vectors(self.field, n, out)

    def contains(self, vec: Sequence[Scalar]) -> bool:
        if len(vec) != self.ambient:
            raise ValueError("ambient dimension mismatch")
        v = list(vec)
        for row in self.basis:
            pivot = next(j for j, x in enumerate(row) if x)
            if v[pivot]:
                f = v[pivot]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._require_same_ambient(other)
        return all(self.contains(v) for v in other.basis)

    def image_under(self, m: Matrix) -> "Subspace":
        return Subspace.from_vectors(self.field, m.nrows, [m.apply(v) for v in self.basis])

    def sort_key(self):
        return (self.dim, self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and other.ambient == self.ambient
            and other.field == self.field
            and other.basis == self.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return format_subspace(self)


def format_subspace(s: Subspace) -> str:
    if s.is_zero():
        return "span[]"
    return "span[" + ",".join(format_vector(v) for v in s.basis) + "]"


def column_space(m: Matrix) -> Subspace:
    return Subspace.from_vectors(m.field, m.nrows, m.transpose().rows)


def enumerate_subspaces(field: PrimeField, n: int) -> Iterator[Subspace]:
    """All subspaces of GF(p)^n, by dimension then canonical basis.

    Walks RREF shapes directly: pick pivot columns, then fill the free
    entries (right of each pivot, outside other pivot columns).
    """
    if not isinstance(field, PrimeField):
        raise ValueError("subspace enumeration requires a finite field")
    elems = list(field.elements())
    z, o = field.zero, field.one
    yield Subspace.zero(field, n)
    for r in range(1, n + 1):
        for pivots in itertools.combinations(range(n), r):
            free_cells = [
                (i, j)
                for i in range(r)
                for j in range(n)
                if j > pivots[i] and j not in pivots
            ]
            for values in itertools.product(elems, repeat=len(free_cells)):
                rows = [[z] * n for _ in range(r)]
                for i, c in enumerate(pivots):
                    rows[i][c] = o
                for (i, j), v in zip(free_cells, values):
                    rows[i][j] = v
                yield Subspace(field, n, tuple(tuple(row) for row in rows))


def count_subspaces(p: int, n: int) -> int:
    """Number of subspaces of GF(p)^n (sum of Gaussian binomials)."""
    total = 0
    for r in range(n + 1):
        num = den = 1
        for i in range(r):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total
