"""Finite groups as explicit Cayley tables, and exact group-algebra arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import Field, Scalar


@dataclass(frozen=True)
class GroupViolation:
    kind: str  # "shape" | "identity" | "inverses" | "associativity"
    where: tuple[int, ...]
    detail: str


class FiniteGroup:
    __slots__ = ("labels", "table", "_identity", "_inverses")

    def __init__(self, labels: Sequence[str], table: Sequence[Sequence[int]]):
        self.labels = tuple(labels)
        self.table = tuple(tuple(row) for row in table)
        self._identity: int | None = None
        self._inverses: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @property
    def identity(self) -> int:
        if self._identity is None:
            m = self.order
            for e in range(m):
                if all(self.table[e][j] == j and self.table[j][e] == j for j in range(m)):
                    self._identity = e
                    break
            else:
                raise ValueError("group table has no identity element")
        return self._identity

    @property
    def inverses(self) -> tuple[int, ...]:
        if self._inverses is None:
            e = self.identity
            inv = []
            for i in range(self.order):
                j = next(
                    (j for j in range(self.order) if self.table[i][j] == e and self.table[j][i] == e),
                    None,
                )
                if j is None:
                    raise ValueError(f"element {self.labels[i]} has no inverse")
                inv.append(j)
            self._inverses = tuple(inv)
        return self._inverses

    def inverse(self, i: int) -> int:
        return self.inverses[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteGroup)
            and other.labels == self.labels
            and other.table == self.table
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.table))

    def __repr__(self) -> str:
        return f"FiniteGroup({list(self.labels)})"


def validate_group(g: FiniteGroup) -> GroupViolation | None:
    m = g.order
    if m == 0:
        return GroupViolation("shape", (), "empty element list")
    if len(g.table) != m or any(len(row) != m for row in g.table):
        return GroupViolation("shape", (), "Cayley table is not m x m")
    for i in range(m):
        for j in range(m):
            if not (0 <= g.table[i][j] < m):
                return GroupViolation("shape", (i + 1, j + 1), "table entry out of range")
    try:
        e = g.identity
    except ValueError:
        return GroupViolation("identity", (), "no two-sided identity")
    try:
        g.inverses
    except ValueError as exc:
        return GroupViolation("inverses", (), str(exc))
    for i in range(m):
        for j in range(m):
            for k in range(m):
                if g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]]:
                    return GroupViolation(
                        "associativity", (i + 1, j + 1, k + 1), "(ij)k != i(jk)"
                    )
    del e
    return None


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("cyclic group order must be >= 1")
    labels = ["e"] + ["g" if k == 1 else f"g^{k}" for k in range(1, m)]
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    return FiniteGroup(labels, table)


class GroupAlgebra:
    """k[G] with elements as coefficient tuples indexed like G's labels."""

    def __init__(self, field: Field, group: FiniteGroup):
        self.field = field
        self.group = group

    def zero(self) -> tuple[Scalar, ...]:
        return (self.field.zero,) * self.group.order

    def basis(self, i: int) -> tuple[Scalar, ...]:
        return tuple(
            self.field.one if k == i else self.field.zero for k in range(self.group.order)
        )

    def one(self) -> tuple[Scalar, ...]:
        return self.basis(self.group.identity)

    def add(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        return tuple(a + b for a, b in zip(u, v))

    def mul(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out = [self.field.zero] * self.group.order
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    k = self.group.mul(i, j)
                    out[k] = out[k] + a * b
        return tuple(out)

    def scale(self, c: Scalar, u: Sequence[Scalar]) -> tuple[Scalar, ...]:
        return tuple(c * a for a in u)
