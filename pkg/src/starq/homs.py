"""Hom dimensions in mesh categories of ZDelta and of its quotients.

The oracle is the clipped mesh recursion ("hammock sweep"): starting from
dim Hom(x, x) = 1 the mesh ending at tau^(-1)z forces

    dim(tau^(-1)z) = max(0, sum of dims over the middle terms - dim(z)),

swept column by column to the right until a whole column vanishes.  Hom
dimensions in a quotient are the covering sums over group translates of
the target.

Closed-form descriptions of the support ("forbidden region" H+ of the
source) are provided for types A and D; for type E the sweep itself is
the authority.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dynkin import DynkinType, Family, coxeter_data, predecessors, successors
from .quotient import StableQuiver
from .zquiver import OutOfChart, ZVertex, from_chart_a, from_chart_d


@lru_cache(maxsize=None)
def _base_hammock(d: DynkinType, node: int) -> dict[ZVertex, int]:
    """dim Hom((0, node), -); translation covariance handles other sources."""
    succ, pred = successors(d), predecessors(d)
    cap = 4 * (coxeter_data(d).h + 2)
    dims: dict[ZVertex, int] = {}
    prev = {v: 0 for v in d.nodes}
    for t in range(cap):
        col: dict[int, int] = {}
        for v in d.nodes:  # natural order is topological
            val = sum(prev[w] for w in succ[v]) + sum(col[u] for u in pred[v]) - prev[v]
            col[v] = max(0, val)
        if t == 0:
            col[node] = 1
            for v in d.nodes:
                if v > node:
                    val = sum(col[u] for u in pred[v])
                    col[v] = max(0, val)
        if all(x == 0 for x in col.values()):
            break
        for v, x in col.items():
            if x:
                dims[ZVertex(t, v)] = x
        prev = col
    else:  # pragma: no cover - would indicate a broken recursion
        raise RuntimeError(f"hammock of {d} node {node} did not terminate")
    return dims


@dataclass(frozen=True)
class Hammock:
    source: ZVertex
    dims: dict[ZVertex, int]

    def __getitem__(self, v: ZVertex) -> int:
        return self.dims.get(v, 0)

    def support(self) -> set[ZVertex]:
        return set(self.dims)


def hammock(d: DynkinType, x: ZVertex) -> Hammock:
    base = _base_hammock(d, x.node)
    return Hammock(x, {ZVertex(v.t + x.t, v.node): m for v, m in base.items()})


def hom_dim_z(d: DynkinType, x: ZVertex, y: ZVertex) -> int:
    return _base_hammock(d, x.node).get(ZVertex(y.t - x.t, y.node), 0)


def _lift_range(q: StableQuiver) -> range:
    h = coxeter_data(q.dynkin).h
    k = -(-(h + 2) // q.circumference) + 1
    return range(-k, k + 1)


def hom_dim_quotient(q: StableQuiver, x: ZVertex, y: ZVertex) -> int:
    """Covering sum over lifts of y; independent of chosen representatives."""
    g = q.generator
    total = 0
    for k in _lift_range(q):
        total += hom_dim_z(q.dynkin, x, g.power(k).apply(y))
    return total


def quotient_support(q: StableQuiver, x: ZVertex) -> dict[ZVertex, int]:
    """Hom(x, -) over the quotient, as a sparse dict on canonical vertices."""
    out: dict[ZVertex, int] = {}
    for v, m in hammock(q.dynkin, x).dims.items():
        w = q.canon(v)
        out[w] = out.get(w, 0) + m
    return out


def slice_hom_support(q: StableQuiver, xs: list[ZVertex]) -> set[ZVertex]:
    """Orbit vertices receiving a nonzero Hom from at least one of xs."""
    if not xs:
        raise ValueError("empty vertex set")
    out: set[ZVertex] = set()
    for x in xs:
        out |= set(quotient_support(q, x))
    return out


# ---------------------------------------------------------------------------
# closed-form forbidden regions


@dataclass(frozen=True)
class RegionA:
    """Hom support of anchor (i,j) in type A: the rectangle with corners
    (i,j), (i,i+n+1), (j-2,i+n+1), (j-2,j)."""

    n: int
    i: int
    j: int

    def contains(self, a: int, b: int) -> bool:
        return self.i <= a <= self.j - 2 and self.j <= b <= self.i + self.n + 1

    def corners(self) -> tuple[tuple[int, int], ...]:
        i, j, n = self.i, self.j, self.n
        return ((i, j), (i, i + n + 1), (j - 2, i + n + 1), (j - 2, j))

    def vertices(self) -> set[ZVertex]:
        from .dynkin import A as _A

        d = _A(self.n)
        return {
            from_chart_a(d, a, b)
            for a in range(self.i, self.j - 1)
            for b in range(self.j, self.i + self.n + 2)
        }


def region_A(n: int, anchor: tuple[int, int]) -> RegionA:
    i, j = anchor
    if not (i + 2 <= j <= i + n + 1):
        raise OutOfChart(f"({i},{j}) is not an A{n} coordinate")
    return RegionA(n, i, j)


@dataclass(frozen=True)
class RegionD:
    """Hom support of an anchor in type D.

    For a non-exceptional anchor (i,j) the support is the union of the two
    rectangles [i, j-2] x [j, j+n-2] and [j-2, i+n-2] x [i+n, j+n-2] in
    chart coordinates (clipped to the chart), together with both
    exceptional vertices (a, a+n)^+- for i <= a <= j-2.

    For an exceptional anchor (i, i+n)^s the top line only carries every
    other exceptional vertex, with signs alternating away from the anchor,
    and the body of the region degenerates accordingly (the same formulas
    with j = i+n).
    """

    n: int
    i: int
    j: int
    sign: str | None = None  # anchor sign when the anchor is exceptional

    def _body(self, a: int, b: int) -> bool:
        i, j, n = self.i, self.j, self.n
        r1 = i <= a <= j - 2 and j <= b <= j + n - 2
        r2 = j - 2 <= a <= i + n - 2 and i + n <= b <= j + n - 2
        return r1 or r2

    def contains(self, a: int, b: int, sign: str | None = None) -> bool:
        if sign is None:
            if not (a + 2 <= b <= a + self.n - 1):
                return False
            return self._body(a, b)
        if b != a + self.n:
            return False
        if not (self.i <= a <= self.j - 2):
            return False
        if self.sign is None:
            return True
        want = self.sign if (a - self.i) % 2 == 0 else ("-" if self.sign == "+" else "+")
        return sign == want

    def vertices(self) -> set[ZVertex]:
        from .dynkin import D as _D

        d = _D(self.n)
        out = set()
        for a in range(self.i, self.i + self.n - 1):
            for b in range(a + 2, a + self.n):
                if self.contains(a, b):
                    out.add(from_chart_d(d, a, b))
            for sg in ("+", "-"):
                if self.contains(a, a + self.n, sg):
                    out.add(from_chart_d(d, a, a + self.n, sg))
        return out


def region_D(n: int, anchor: tuple[int, int] | tuple[int, int, str]) -> RegionD:
    if len(anchor) == 3:
        i, j, sign = anchor  # type: ignore[misc]
        if j != i + n or sign not in "+-":
            raise OutOfChart(f"({i},{j})^{sign} is not a D{n} coordinate")
        return RegionD(n, i, j, sign)
    i, j = anchor  # type: ignore[misc]
    if not (i + 2 <= j <= i + n - 1):
        raise OutOfChart(f"({i},{j}) is not a D{n} coordinate")
    return RegionD(n, i, j)


def region_of(d: DynkinType, x: ZVertex) -> "RegionA | RegionD":
    """Forbidden region of a source vertex, in the matching chart."""
    if d.family == Family.A:
        from .zquiver import to_chart_a

        return region_A(d.rank, to_chart_a(d, x))
    if d.family == Family.D:
        from .zquiver import to_chart_d

        i, j, sign = to_chart_d(d, x)
        return region_D(d.rank, (i, j, sign) if sign else (i, j))
    raise ValueError("no closed-form region for type E")


def region_contains(d: DynkinType, x: ZVertex, y: ZVertex) -> bool:
    reg = region_of(d, x)
    if d.family == Family.A:
        from .zquiver import to_chart_a

        a, b = to_chart_a(d, y)
        return reg.contains(a, b)
    from .zquiver import to_chart_d

    a, b, sign = to_chart_d(d, y)
    return reg.contains(a, b, sign)
