"""The repetitive translation quiver ZDelta and its automorphism group.

Vertices are canonical pairs (t, node) with t in Z and node a tree node of
the Dynkin type.  Arrows are generated from the tree orientation: for each
tree edge v -> w there are arrows (t,v) -> (t,w) and (t,w) -> (t+1,v).
The translation tau shifts one column to the left.

Automorphisms are stored in a normal form (half_shift, flip): the group
relevant here is generated by tau, the suspension sigma, and (where the
tree has an involution) the flip theta; it is abelian.  Shifts are kept in
half-column units so that the suspension of type A with even rank, whose
reflection moves vertices half a unit, still has an exact normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dynkin import DynkinType, Family, coxeter_data, predecessors, successors, tree_edges


class IllFormedWord(ValueError):
    """An automorphism word is not valid for the given Dynkin type."""


@dataclass(frozen=True, order=True)
class ZVertex:
    t: int
    node: int

    def __str__(self):
        return f"({self.t},{self.node})"


# ---------------------------------------------------------------------------
# flip data


@lru_cache(maxsize=None)
def flip_permutation(d: DynkinType) -> dict[int, int]:
    """The node involution underlying theta (and the A-type reflection)."""
    n = d.rank
    if d.family == Family.A:
        return {v: n + 1 - v for v in d.nodes}
    if d.family == Family.D:
        perm = {v: v for v in d.nodes}
        perm[n - 1], perm[n] = n, n - 1
        return perm
    if d.family == Family.E and n == 6:
        # swap the two long arms of the E6 diagram, fix branch point and branch
        return {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}
    raise IllFormedWord(f"{d} has no diagram involution")


@lru_cache(maxsize=None)
def flip_offsets2(d: DynkinType) -> dict[int, int]:
    """Column offsets (in half units) making the flip a quiver automorphism.

    The offset is forced along each tree edge: it is constant across an
    edge whose orientation the involution preserves and jumps by one full
    unit across a reversed edge.  The normalisation is the unique one for
    which the flip is an involution.
    """
    perm = flip_permutation(d)
    edges = set(tree_edges(d))
    delta2 = {next(iter(d.nodes)): 0}
    pending = list(tree_edges(d))
    while pending:
        progressed = False
        for a, b in pending[:]:
            if a in delta2 or b in delta2:
                step = 0 if (perm[a], perm[b]) in edges else 2
                if a in delta2:
                    delta2[b] = delta2[a] + step
                else:
                    delta2[a] = delta2[b] - step
                pending.remove((a, b))
                progressed = True
        assert progressed
    # shift so that delta2(v) + delta2(perm(v)) = 0 (involutivity)
    c = delta2[1] + delta2[perm[1]]
    assert c % 2 == 0
    return {v: delta2[v] - c // 2 for v in d.nodes}


def supports_flip(d: DynkinType) -> bool:
    """Whether a pure (column-preserving up to offsets, involutive) flip exists."""
    if d.family == Family.D:
        return True
    if d.family == Family.A:
        return d.rank % 2 == 1
    return d.rank == 6


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class Automorphism:
    """Normal form (half_shift, flip) of a quiver automorphism of ZDelta.

    Acts by (t, v) |-> (t + (half_shift + offset)/2, perm(v)) where offset
    and perm are trivial for flip=False.  Composition adds half shifts and
    XORs flips; the group is abelian.
    """

    dynkin: DynkinType
    half_shift: int
    flip: bool = False

    def __post_init__(self):
        if self.flip:
            offs = flip_offsets2(self.dynkin)  # raises for E7/E8
            parities = {(self.half_shift + o) % 2 for o in offs.values()}
            if parities != {0}:
                raise IllFormedWord(
                    f"half shift {self.half_shift} with flip is not a vertex map of {self.dynkin}"
                )
        elif self.half_shift % 2 != 0:
            raise IllFormedWord("pure shifts must move a whole number of units")

    def apply(self, v: ZVertex) -> ZVertex:
        if not self.flip:
            return ZVertex(v.t + self.half_shift // 2, v.node)
        off = flip_offsets2(self.dynkin)[v.node]
        return ZVertex(v.t + (self.half_shift + off) // 2, flip_permutation(self.dynkin)[v.node])

    def __call__(self, v: ZVertex) -> ZVertex:
        return self.apply(v)

    def compose(self, other: "Automorphism") -> "Automorphism":
        if self.dynkin != other.dynkin:
            raise IllFormedWord("cannot compose automorphisms of different types")
        return Automorphism(self.dynkin, self.half_shift + other.half_shift, self.flip ^ other.flip)

    __matmul__ = compose

    def inverse(self) -> "Automorphism":
        return Automorphism(self.dynkin, -self.half_shift, self.flip)

    def power(self, k: int) -> "Automorphism":
        return Automorphism(self.dynkin, k * self.half_shift, self.flip and k % 2 == 1)

    __pow__ = power

    @property
    def is_identity(self) -> bool:
        return self.half_shift == 0 and not self.flip


def identity_auto(d: DynkinType) -> Automorphism:
    return Automorphism(d, 0, False)


def tau_auto(d: DynkinType) -> Automorphism:
    return Automorphism(d, -2, False)


def theta_auto(d: DynkinType) -> Automorphism:
    if not supports_flip(d):
        raise IllFormedWord(f"{d} has no pure reflection")
    return Automorphism(d, 0, True)


def sigma_has_flip(d: DynkinType) -> bool:
    if d.family == Family.A:
        return True
    if d.family == Family.D:
        return d.rank % 2 == 1
    return d.rank == 6


def sigma_auto(d: DynkinType) -> Automorphism:
    """Suspension: shift h/2 units right, composed with the flip per type."""
    return Automorphism(d, coxeter_data(d).h, sigma_has_flip(d))


def omega_auto(d: DynkinType) -> Automorphism:
    return sigma_auto(d).inverse()


def serre_auto(d: DynkinType) -> Automorphism:
    """The Serre functor tau o sigma at quiver level."""
    return tau_auto(d) @ sigma_auto(d)


# convenience vertex-level operations


def tau(v: ZVertex) -> ZVertex:
    return ZVertex(v.t - 1, v.node)


def tau_inv(v: ZVertex) -> ZVertex:
    return ZVertex(v.t + 1, v.node)


def theta(d: DynkinType, v: ZVertex) -> ZVertex:
    return theta_auto(d).apply(v)


def sigma(d: DynkinType, v: ZVertex) -> ZVertex:
    return sigma_auto(d).apply(v)


def omega(d: DynkinType, v: ZVertex) -> ZVertex:
    return omega_auto(d).apply(v)


# ---------------------------------------------------------------------------
# arrows and windows


def arrows_from(d: DynkinType, v: ZVertex) -> list[ZVertex]:
    out = [ZVertex(v.t, w) for w in successors(d)[v.node]]
    out += [ZVertex(v.t + 1, u) for u in predecessors(d)[v.node]]
    return out


def mesh_middles(d: DynkinType, end: ZVertex) -> list[ZVertex]:
    """Middle terms of the mesh from tau(end) to end."""
    t, v = end.t, end.node
    return [ZVertex(t - 1, w) for w in successors(d)[v]] + [
        ZVertex(t, u) for u in predecessors(d)[v]
    ]


def materialize_window(
    d: DynkinType, t_min: int, t_max: int
) -> tuple[list[ZVertex], list[tuple[ZVertex, ZVertex]]]:
    """All vertices with t in [t_min, t_max] and all arrows among them."""
    if t_min > t_max:
        raise ValueError("t_min must be <= t_max")
    verts = [ZVertex(t, v) for t in range(t_min, t_max + 1) for v in d.nodes]
    inside = set(verts)
    arrows = [(v, w) for v in verts for w in arrows_from(d, v) if w in inside]
    return verts, arrows


# ---------------------------------------------------------------------------
# paper-style coordinate charts


class OutOfChart(ValueError):
    pass


def to_chart_a(d: DynkinType, v: ZVertex) -> tuple[int, int]:
    """(t, node) -> (i, j) with the bottom row at (i, i+2)."""
    assert d.family == Family.A
    return (v.t, v.t + v.node + 1)


def from_chart_a(d: DynkinType, i: int, j: int) -> ZVertex:
    if not (i + 2 <= j <= i + d.rank + 1):
        raise OutOfChart(f"({i},{j}) is not an A{d.rank} coordinate")
    return ZVertex(i, j - i - 1)


def to_chart_d(d: DynkinType, v: ZVertex) -> tuple[int, int, str | None]:
    """(t, node) -> (i, j, sign); sign is None off the exceptional line."""
    assert d.family == Family.D
    n = d.rank
    if v.node == n - 1:
        return (v.t, v.t + n, "-")
    if v.node == n:
        return (v.t, v.t + n, "+")
    return (v.t, v.t + v.node + 1, None)


def from_chart_d(d: DynkinType, i: int, j: int, sign: str | None = None) -> ZVertex:
    n = d.rank
    if sign is not None:
        if j != i + n or sign not in "+-":
            raise OutOfChart(f"({i},{j})^{sign} is not a D{n} coordinate")
        return ZVertex(i, n if sign == "+" else n - 1)
    if not (i + 2 <= j <= i + n - 1):
        raise OutOfChart(f"({i},{j}) is not a D{n} coordinate")
    return ZVertex(i, j - i - 1)
