"""Finite groups given by multiplication tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from ..errors import StructureError


def sort_key(x) -> tuple:
    """Deterministic total order on mixed hashable labels."""
    if isinstance(x, tuple):
        return (1, tuple(sort_key(y) for y in x))
    if isinstance(x, int):
        return (0, x)
    return (2, repr(x))


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    elements: tuple
    table: dict  # (x, y) -> x*y
    identity: Hashable
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "_inv", {x: next(y for y in self.elements
                                                if self.table[x, y] == self.identity)
                                          for x in self.elements})

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_function(cls, elements: Iterable, mul: Callable, name: str = "") -> "FiniteGroup":
        elements = tuple(elements)
        table = {(x, y): mul(x, y) for x in elements for y in elements}
        ident = next((e for e in elements
                      if all(table[e, x] == x and table[x, e] == x for x in elements)), None)
        if ident is None:
            raise StructureError("multiplication table has no identity", group=name)
        G = cls.__new__(cls)
        object.__setattr__(G, "elements", elements)
        object.__setattr__(G, "table", table)
        object.__setattr__(G, "identity", ident)
        object.__setattr__(G, "name", name)
        G._check_axioms()
        G.__post_init__()
        return G

    @classmethod
    def from_table(cls, rows: list[list[int]], name: str = "") -> "FiniteGroup":
        n = len(rows)
        if any(len(r) != n for r in rows) or any(not 0 <= v < n for r in rows for v in r):
            raise StructureError("malformed multiplication table", group=name)
        return cls.from_function(range(n), lambda x, y: rows[x][y], name)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls.from_function(range(n), lambda x, y: (x + y) % n, f"Z/{n}")

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls.cyclic(1)

    @classmethod
    def product(cls, G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        elems = [(g, h) for g in G.elements for h in H.elements]
        return cls.from_function(elems, lambda x, y: (G.mul(x[0], y[0]), H.mul(x[1], y[1])),
                                 f"{G.name}x{H.name}")

    def _check_axioms(self) -> None:
        E = self.elements
        S = set(E)
        for x in E:
            for y in E:
                if self.table.get((x, y)) not in S:
                    raise StructureError("multiplication not closed", group=self.name, pair=[x, y])
        for x in E:
            if not any(self.table[x, y] == self.identity for y in E):
                raise StructureError("element without inverse", group=self.name, element=x)
        for x, y, z in itertools.product(E, repeat=3):
            if self.table[self.table[x, y], z] != self.table[x, self.table[y, z]]:
                raise StructureError("multiplication not associative", group=self.name,
                                     triple=[x, y, z])

    # -- operations ---------------------------------------------------------
    def mul(self, x, y):
        return self.table[x, y]

    def inv(self, x):
        return self._inv[x]

    def prod(self, *xs):
        out = self.identity
        for x in xs:
            out = self.table[out, x]
        return out

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._inv

    def is_abelian(self) -> bool:
        return all(self.table[x, y] == self.table[y, x] for x in self.elements for y in self.elements)

    def order_of(self, x) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def generated(self, gens: Iterable) -> frozenset:
        S = {self.identity}
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            if x in S:
                continue
            S.add(x)
            frontier.extend(self.mul(x, y) for y in list(S))
            frontier.extend(self.mul(y, x) for y in list(S))
        return frozenset(S)

    def is_subgroup(self, S: Iterable) -> bool:
        S = set(S)
        return (self.identity in S
                and all(self.mul(x, y) in S for x in S for y in S)
                and all(self.inv(x) in S for x in S))

    def is_normal(self, S: Iterable) -> bool:
        S = set(S)
        return all(self.prod(g, n, self.inv(g)) in S for g in self.elements for n in S)

    def subgroup(self, S: Iterable, name: str = "") -> "FiniteGroup":
        S = sorted(set(S), key=sort_key)
        if not self.is_subgroup(S):
            raise StructureError("not a subgroup", group=self.name)
        return FiniteGroup.from_function(S, self.mul, name or f"sub({self.name})")

    def quotient(self, N: Iterable, name: str = "") -> tuple["FiniteGroup", dict]:
        """``G/N`` with cosets labelled by their least element; returns (group, projection)."""
        N = set(N)
        if not (self.is_subgroup(N) and self.is_normal(N)):
            raise StructureError("quotient by a non-normal subgroup", group=self.name)
        proj = {}
        for g in sorted(self.elements, key=sort_key):
            if g in proj:
                continue
            for n in N:
                proj[self.mul(g, n)] = g
        reps = sorted(set(proj.values()), key=sort_key)
        Q = FiniteGroup.from_function(reps, lambda x, y: proj[self.mul(x, y)],
                                      name or f"{self.name}/N")
        return Q, proj

    def element_orders(self) -> tuple:
        return tuple(sorted(self.order_of(x) for x in self.elements))


def is_homomorphism(f: dict, G: FiniteGroup, H: FiniteGroup) -> bool:
    return all(f[G.mul(x, y)] == H.mul(f[x], f[y]) for x in G for y in G)
