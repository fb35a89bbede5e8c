"""Finite quotients of ZDelta by an admissible cyclic group.

A quotient is determined by a circumference L and a flip flag: the group
generator is flip^e o tau^(-L).  These model both the stable AR quivers of
the selfinjective algebras in Asashiba's families (Nakayama, Mobius, the
three D families, the E families) and the AR quivers of u-cluster
categories.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .dynkin import DynkinType, Family, A, D, E, coxeter_data
from .zquiver import (
    Automorphism,
    ZVertex,
    arrows_from,
    sigma_has_flip,
    supports_flip,
    tau_auto,
)


class QuotientError(ValueError):
    pass


class UnsupportedFlip(QuotientError):
    pass


class DegenerateQuotient(QuotientError):
    pass


class MalformedLabel(ValueError):
    pass


@dataclass(frozen=True)
class AdmissibleGroup:
    circumference: int
    flip: bool = False


class StableQuiver:
    """ZDelta / <flip^e tau^(-L)>: a cylinder (e=0) or Mobius band (e=1)."""

    def __init__(self, dynkin: DynkinType, group: AdmissibleGroup):
        L = group.circumference
        if group.flip and not supports_flip(dynkin):
            raise UnsupportedFlip(f"{dynkin} does not admit a flip quotient")
        if L < 1 or (L < 2 and not group.flip):
            raise DegenerateQuotient(f"circumference {L} is too small")
        self.dynkin = dynkin
        self.group = group
        self.generator = Automorphism(dynkin, 2 * L, group.flip)

    @property
    def circumference(self) -> int:
        return self.group.circumference

    @property
    def flip(self) -> bool:
        return self.group.flip

    def canon(self, v: ZVertex) -> ZVertex:
        """Canonical representative of the orbit of v."""
        L = self.circumference
        if not self.flip:
            return ZVertex(v.t % L, v.node)
        a = ZVertex(v.t % (2 * L), v.node)
        b = self.generator.apply(a)
        b = ZVertex(b.t % (2 * L), b.node)
        return min(a, b)

    @cached_property
    def vertices(self) -> list[ZVertex]:
        span = 2 * self.circumference if self.flip else self.circumference
        reps = {self.canon(ZVertex(t, v)) for t in range(span) for v in self.dynkin.nodes}
        out = sorted(reps)
        assert len(out) == self.dynkin.rank * self.circumference
        return out

    def act(self, auto: Automorphism, v: ZVertex) -> ZVertex:
        """Apply an automorphism word to an orbit vertex (well defined since
        the whole group is abelian, so every word commutes with the generator)."""
        if auto.dynkin != self.dynkin:
            raise QuotientError("automorphism belongs to a different type")
        return self.canon(auto.apply(v))

    def acts_as_identity(self, auto: Automorphism) -> bool:
        return all(self.act(auto, v) == v for v in self.vertices)

    def arrows(self) -> list[tuple[ZVertex, ZVertex]]:
        out = []
        for v in self.vertices:
            for w in arrows_from(self.dynkin, v):
                out.append((v, self.canon(w)))
        return sorted(out)

    def tau_orbits(self, nodes: tuple[int, ...] | None = None) -> list[set[ZVertex]]:
        """Orbits of the translation acting on the quotient vertices."""
        pool = {v for v in self.vertices if nodes is None or v.node in nodes}
        tau = tau_auto(self.dynkin)
        orbits = []
        while pool:
            v = pool.pop()
            orbit = {v}
            w = self.act(tau, v)
            while w != v:
                orbit.add(w)
                pool.discard(w)
                w = self.act(tau, w)
            orbits.append(orbit)
        return orbits

    def exceptional_tau_orbit_count(self) -> int:
        ex = self.dynkin.exceptional_nodes
        if not ex:
            return 0
        return len(self.tau_orbits(ex))

    def __repr__(self):
        kind = "mobius" if self.flip else "cylinder"
        return f"StableQuiver({self.dynkin}, L={self.circumference}, {kind})"


def quotient(d: DynkinType, g: AdmissibleGroup) -> StableQuiver:
    return StableQuiver(d, g)


def cluster_quiver_of(d: DynkinType, u: int) -> StableQuiver:
    """AR quiver of the u-cluster category: ZDelta modulo tau^(-1) sigma^u."""
    if u < 1:
        raise ValueError("u must be >= 1")
    h = coxeter_data(d).h
    half = u * h + 2
    flip = u % 2 == 1 and sigma_has_flip(d)
    if flip and half % 2 != 0:
        # A with even rank and u odd: the generator moves vertices half a
        # unit, which no integer-circumference quotient represents.
        raise UnsupportedFlip(f"{d} with u={u} has a half-unit Mobius identification")
    return StableQuiver(d, AdmissibleGroup(half // 2, flip))


# ---------------------------------------------------------------------------
# algebra labels


@dataclass(frozen=True)
class AlgebraLabel:
    """One entry of the classification list of selfinjective algebras of
    finite type, with the data needed to build its stable AR quiver."""

    kind: str  # "B", "M", "D1", "D2", "D3", "E1", "E2"
    dynkin: DynkinType
    circumference: int
    flip: bool
    frequency: Fraction
    params: tuple[int, ...]

    def __post_init__(self):
        assert self.frequency * coxeter_data(self.dynkin).m_delta == self.circumference

    def __str__(self):
        p = self.params
        if self.kind == "B":
            return f"B({p[0]},{p[1]})"
        if self.kind == "M":
            return f"M({p[0]},{p[1]})"
        if self.kind == "D3":
            return f"(D,{self.dynkin.rank},{p[0]}/3,1)"
        fam = self.dynkin.family.value
        typ = "2" if self.kind in ("D2", "E2") else "1"
        return f"({fam},{self.dynkin.rank},{p[0]},{typ})"


def nakayama_label(N: int, nplus1: int) -> AlgebraLabel:
    n = nplus1 - 1
    if n < 1 or N < 2:
        raise MalformedLabel(f"B({N},{nplus1}) needs N >= 2, n >= 1")
    return AlgebraLabel("B", A(n), N, False, Fraction(N, n), (N, nplus1))


def mobius_label(p: int, s: int) -> AlgebraLabel:
    if p < 1 or s < 1:
        raise MalformedLabel(f"M({p},{s}) needs p, s >= 1")
    return AlgebraLabel("M", A(2 * p + 1), s * (2 * p + 1), True, Fraction(s), (p, s))


def d_label(n: int, s: int, typ: int) -> AlgebraLabel:
    if n < 4 or s < 1 or typ not in (1, 2):
        raise MalformedLabel(f"(D,{n},{s},{typ}) is malformed")
    return AlgebraLabel("D2" if typ == 2 else "D1", D(n), s * (2 * n - 3), typ == 2, Fraction(s), (s,))


def d3_label(n: int, s: int) -> AlgebraLabel:
    if n < 6 or n % 3 != 0 or s < 1 or s % 3 == 0:
        raise MalformedLabel(f"(D,{n},{s}/3,1) needs 3 | n, 3 does not divide s")
    m = n // 3
    return AlgebraLabel("D3", D(n), s * (2 * m - 1), False, Fraction(s, 3), (s,))


def e_label(n: int, s: int, typ: int) -> AlgebraLabel:
    if n not in (6, 7, 8) or s < 1 or typ not in (1, 2) or (typ == 2 and n != 6):
        raise MalformedLabel(f"(E,{n},{s},{typ}) is malformed")
    m = coxeter_data(E(n)).m_delta
    return AlgebraLabel("E2" if typ == 2 else "E1", E(n), s * m, typ == 2, Fraction(s), (s,))


_LABEL_RES = [
    (re.compile(r"^B\((\d+),(\d+)\)$"), lambda m: nakayama_label(int(m[1]), int(m[2]))),
    (re.compile(r"^M\((\d+),(\d+)\)$"), lambda m: mobius_label(int(m[1]), int(m[2]))),
    (
        re.compile(r"^\(D,(\d+),(\d+)/3,1\)$"),
        lambda m: d3_label(int(m[1]), int(m[2])),
    ),
    (
        re.compile(r"^\(D,(\d+),(\d+),([12])\)$"),
        lambda m: d_label(int(m[1]), int(m[2]), int(m[3])),
    ),
    (
        re.compile(r"^\(E,(\d+),(\d+),([12])\)$"),
        lambda m: e_label(int(m[1]), int(m[2]), int(m[3])),
    ),
]


def parse_label(text: str) -> AlgebraLabel:
    text = text.replace(" ", "")
    for rx, build in _LABEL_RES:
        m = rx.match(text)
        if m:
            return build(m)
    raise MalformedLabel(f"cannot parse algebra label {text!r}")


def stable_quiver_of(label: AlgebraLabel) -> StableQuiver:
    return StableQuiver(label.dynkin, AdmissibleGroup(label.circumference, label.flip))
