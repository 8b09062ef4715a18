"""Union-find over integer indices, for orbit partitions of group actions."""

from __future__ import annotations

from typing import Callable, Iterable


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Partition as tuples of indices, each sorted, ordered by minimum."""
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def orbit_partition(
    size: int, actions: Iterable[Callable[[int], int]]
) -> tuple[tuple[int, ...], ...]:
    """Orbits of indices 0..size-1 under a family of index maps."""
    uf = UnionFind(size)
    for act in actions:
        for x in range(size):
            uf.union(x, act(x))
    return uf.classes()
