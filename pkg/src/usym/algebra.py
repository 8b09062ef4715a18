"""Finite-dimensional unital associative algebras given by structure constants.

Basis index 0 is always the unit.  The constant table is sparse: only the
nonzero tau[i, j, s] with e_i e_j = sum_s tau[i,j,s] e_s are stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .fields import Field, Scalar
from .linalg import Matrix, Vector


class FinAlgebra:
    __slots__ = ("field", "n", "labels", "tau", "_by_result")

    def __init__(
        self,
        field: Field,
        n: int,
        tau: Mapping[tuple[int, int, int], Scalar],
        labels: tuple[str, ...] | None = None,
    ):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.field = field
        self.n = n
        self.labels = labels if labels is not None else tuple(f"e{i+1}" for i in range(n))
        if len(self.labels) != n:
            raise ValueError("label count does not match dimension")
        clean: dict[tuple[int, int, int], Scalar] = {}
        for (i, j, s), c in tau.items():
            if not (0 <= i < n and 0 <= j < n and 0 <= s < n):
                raise ValueError(f"structure constant index out of range: {(i, j, s)}")
            c = field(c)
            if c:
                clean[(i, j, s)] = c
        self.tau = clean
        by_result: dict[int, list[tuple[int, int, Scalar]]] = {a: [] for a in range(n)}
        for (i, j, s), c in sorted(clean.items()):
            by_result[s].append((i, j, c))
        self._by_result = by_result

    def tau_get(self, i: int, j: int, s: int) -> Scalar:
        return self.tau.get((i, j, s), self.field.zero)

    def pairs_with_result(self, a: int) -> list[tuple[int, int, Scalar]]:
        """All (i, j, c) with tau[i,j,a] = c nonzero."""
        return self._by_result[a]

    def basis_product(self, i: int, j: int) -> dict[int, Scalar]:
        """Sparse coordinates of e_i e_j."""
        return {s: c for (ii, jj, s), c in self.tau.items() if ii == i and jj == j}

    def basis_vector(self, i: int) -> Vector:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.n))

    @property
    def unit(self) -> Vector:
        return self.basis_vector(0)

    def multiply(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.n or len(y) != self.n:
            raise ValueError("element length does not match algebra dimension")
        out = [self.field.zero] * self.n
        for (i, j, s), c in self.tau.items():
            if x[i] and y[j]:
                out[s] = out[s] + x[i] * y[j] * c
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinAlgebra)
            and other.field == self.field
            and other.n == self.n
            and other.tau == self.tau
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.tau.items()))))

    def __repr__(self) -> str:
        return f"FinAlgebra(n={self.n}, field={self.field!r})"


@dataclass(frozen=True)
class Violation:
    kind: str  # "unit" or "associativity"
    where: tuple[int, ...]  # 1-based indices of the first failing instance
    detail: str


def validate_algebra(a: FinAlgebra) -> Violation | None:
    """Check the unit axiom and associativity; None means valid."""
    n = a.n
    one, zero = a.field.one, a.field.zero
    for j in range(n):
        for s in range(n):
            want = one if j == s else zero
            if a.tau_get(0, j, s) != want:
                return Violation("unit", (1, j + 1, s + 1), "left unit axiom fails")
            if a.tau_get(j, 0, s) != want:
                return Violation("unit", (j + 1, 1, s + 1), "right unit axiom fails")
    for i in range(n):
        for j in range(n):
            for l in range(n):
                for s in range(n):
                    left = sum(
                        (a.tau_get(i, j, u) * a.tau_get(u, l, s) for u in range(n)),
                        zero,
                    )
                    right = sum(
                        (a.tau_get(j, l, u) * a.tau_get(i, u, s) for u in range(n)),
                        zero,
                    )
                    if left != right:
                        return Violation(
                            "associativity",
                            (i + 1, j + 1, l + 1, s + 1),
                            "(e_i e_j) e_l != e_i (e_j e_l)",
                        )
    return None


def is_algebra_map(b: FinAlgebra, a: FinAlgebra, f: Matrix) -> bool:
    """Is f (columns = images of B's basis in A) a unit-preserving algebra map B -> A?"""
    if f.nrows != a.n or f.ncols != b.n:
        raise ValueError(f"map shape {f.nrows}x{f.ncols} does not match dim A={a.n}, dim B={b.n}")
    if a.field != b.field or f.field != a.field:
        raise ValueError("algebra map endpoints must share one field")
    if f.column(0) != a.unit:
        return False
    images = [f.column(j) for j in range(b.n)]
    for i in range(b.n):
        for j in range(b.n):
            lhs = f.apply(b.multiply(b.basis_vector(i), b.basis_vector(j)))
            rhs = a.multiply(images[i], images[j])
            if lhs != rhs:
                return False
    return True
