"""Static data for the Dynkin tree classes A_n, D_n, E_6, E_7, E_8.

Node labelling conventions used throughout the package:

* A_n: nodes 1..n on a linear chain, oriented 1 -> 2 -> ... -> n.
* D_n: chain 1 -> 2 -> ... -> n-2 which forks into the exceptional pair,
  written (n-1)^- and (n-1)^+ and stored as the integers n-1 and n.
* E_n: long chain 1 -> 2 -> ... -> n-1 with the branch node n attached
  below the third node from the right end, i.e. edge (n-3) -> n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class Family(str, Enum):
    A = "A"
    D = "D"
    E = "E"


@dataclass(frozen=True, order=True)
class DynkinType:
    family: Family
    rank: int

    def __post_init__(self):
        if self.family == Family.A and self.rank < 1:
            raise ValueError("type A needs rank >= 1")
        if self.family == Family.D and self.rank < 4:
            raise ValueError("type D needs rank >= 4")
        if self.family == Family.E and self.rank not in (6, 7, 8):
            raise ValueError("type E needs rank in {6,7,8}")

    def __str__(self):
        return f"{self.family.value}{self.rank}"

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def node_name(self, node: int) -> str:
        """Human readable node label; D-type exceptional pair gets +/- tags."""
        n = self.rank
        if self.family == Family.D:
            if node == n - 1:
                return f"{n - 1}-"
            if node == n:
                return f"{n - 1}+"
        return str(node)

    @property
    def exceptional_nodes(self) -> tuple[int, ...]:
        if self.family == Family.D:
            return (self.rank - 1, self.rank)
        return ()


def A(n: int) -> DynkinType:
    return DynkinType(Family.A, n)


def D(n: int) -> DynkinType:
    return DynkinType(Family.D, n)


def E(n: int) -> DynkinType:
    return DynkinType(Family.E, n)


@dataclass(frozen=True)
class CoxeterData:
    h: int
    m_delta: int
    h_star: int | None = None


@lru_cache(maxsize=None)
def coxeter_data(d: DynkinType) -> CoxeterData:
    """Coxeter number h, m = h - 1, and the halved variant h* where defined.

    h* exists exactly where the "even" Calabi-Yau congruence can apply:
    D_n with n even (h* = n-1), D_n with n odd (h* = 2n-2), E_7 (9),
    E_8 (15).  It is absent for types A and E_6.
    """
    n = d.rank
    if d.family == Family.A:
        return CoxeterData(h=n + 1, m_delta=n)
    if d.family == Family.D:
        h = 2 * n - 2
        h_star = n - 1 if n % 2 == 0 else 2 * n - 2
        return CoxeterData(h=h, m_delta=h - 1, h_star=h_star)
    h = {6: 12, 7: 18, 8: 30}[n]
    h_star = {6: None, 7: 9, 8: 15}[n]
    return CoxeterData(h=h, m_delta=h - 1, h_star=h_star)


@lru_cache(maxsize=None)
def tree_edges(d: DynkinType) -> tuple[tuple[int, int], ...]:
    """Oriented edges of the chosen Dynkin quiver; always n-1 edges."""
    n = d.rank
    if d.family == Family.A:
        return tuple((i, i + 1) for i in range(1, n))
    if d.family == Family.D:
        chain = tuple((i, i + 1) for i in range(1, n - 2))
        return chain + ((n - 2, n - 1), (n - 2, n))
    chain = tuple((i, i + 1) for i in range(1, n - 1))
    return chain + ((n - 3, n),)


@lru_cache(maxsize=None)
def successors(d: DynkinType) -> dict[int, tuple[int, ...]]:
    out: dict[int, list[int]] = {v: [] for v in d.nodes}
    for a, b in tree_edges(d):
        out[a].append(b)
    return {v: tuple(ws) for v, ws in out.items()}


@lru_cache(maxsize=None)
def predecessors(d: DynkinType) -> dict[int, tuple[int, ...]]:
    pre: dict[int, list[int]] = {v: [] for v in d.nodes}
    for a, b in tree_edges(d):
        pre[b].append(a)
    return {v: tuple(us) for v, us in pre.items()}


# The natural integer order 1..n is a topological order for every chosen
# orientation (all edges go from a smaller to a larger label).
def topological_nodes(d: DynkinType) -> tuple[int, ...]:
    return d.nodes
