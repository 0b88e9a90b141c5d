"""Finite groups by Cayley table and permutation-group machinery.

Elements are always the integers 0..n-1; the table entry at row i, column j
is the product i*j. Permutations are index tuples p with p[x] the image of x,
composed so that ``compose(p, q)`` applies q first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .errors import NotAGroup, NotAnAutomorphism, NotAPermutation, ResourceLimit
from .radix import decode_mixed, encode_mixed

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation primitives


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def is_permutation(mapping: Sequence[int], degree: int) -> bool:
    return len(mapping) == degree and sorted(mapping) == list(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """Composite permutation applying q first, then p."""
    return tuple(p[x] for x in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_order(p: Perm) -> int:
    """Order of a permutation: lcm of its cycle lengths."""
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        order = math.lcm(order, length)
    return order


# ---------------------------------------------------------------------------
# Cayley-table groups


@dataclass(frozen=True)
class FiniteGroup:
    """Group on {0..n-1} given by its full multiplication table.

    Construction validates every axiom eagerly (rows and columns are
    permutations, the identity behaves, associativity holds for all triples).
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise NotAGroup("empty carrier")
        for i, row in enumerate(table):
            if len(row) != n:
                raise NotAGroup("table is not square", (i,))
            for j, v in enumerate(row):
                if not (0 <= v < n):
                    raise NotAGroup("entry out of range", (i, j))
        for i, row in enumerate(table):
            if sorted(row) != list(range(n)):
                raise NotAGroup(f"row {i} is not a permutation", (i,))
        for j in range(n):
            if sorted(table[i][j] for i in range(n)) != list(range(n)):
                raise NotAGroup(f"column {j} is not a permutation", (j,))
        e = self.identity
        if not (0 <= e < n):
            raise NotAGroup("identity index out of range", (e,))
        for x in range(n):
            if table[e][x] != x or table[x][e] != x:
                raise NotAGroup("identity fails", (e, x))
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise NotAGroup("associativity fails", (a, b, c))

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.size
        for a in range(self.size):
            inv[a] = self.table[a].index(self.identity)
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def is_abelian(self) -> bool:
        t = self.table
        n = self.size
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(n))

    def element_order(self, a: int) -> int:
        x = a
        k = 1
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k


def group_from_table(table: Sequence[Sequence[int]], identity: int, name: str | None = None) -> FiniteGroup:
    """Validate a raw table as a group; raises NotAGroup naming the first failure."""
    return FiniteGroup(tuple(tuple(row) for row in table), identity, name)


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with addition mod n and identity 0."""
    if n < 1:
        raise NotAGroup("carrier must be nonempty")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(table, 0, name=f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """Sym(n) as a Cayley table over the lexicographically sorted permutations."""
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(tuple(index[compose(p, q)] for q in elems) for p in elems)
    return FiniteGroup(table, index[identity_perm(n)], name=f"S{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product; the pair (a, b) is the element a*|h| + b."""
    sizes = (g.size, h.size)
    n = g.size * h.size
    table = []
    for x in range(n):
        a1, b1 = decode_mixed(x, sizes)
        row = []
        for y in range(n):
            a2, b2 = decode_mixed(y, sizes)
            row.append(encode_mixed((g.mul(a1, a2), h.mul(b1, b2)), sizes))
        table.append(tuple(row))
    e = encode_mixed((g.identity, h.identity), sizes)
    name = None
    if g.name and h.name:
        name = f"{g.name}x{h.name}"
    return FiniteGroup(tuple(table), e, name=name)


@dataclass(frozen=True)
class GroupAutomorphism:
    """A bijection of the carrier preserving the group operation."""

    group: FiniteGroup
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        n = self.group.size
        if not is_permutation(self.map, n):
            raise NotAnAutomorphism("map is not a bijection")
        m = self.map
        for x in range(n):
            for y in range(n):
                if m[self.group.mul(x, y)] != self.group.mul(m[x], m[y]):
                    raise NotAnAutomorphism("map does not preserve products", (x, y))

    def __call__(self, x: int) -> int:
        return self.map[x]


def scaling_automorphism(g: FiniteGroup, alpha: int) -> GroupAutomorphism:
    """The map x -> x^alpha; multiplication by alpha on Z_n.

    Validated on construction, so a non-unit alpha raises NotAnAutomorphism.
    """
    mapping = []
    for x in range(g.size):
        acc = g.identity
        for _ in range(alpha % g.element_order(x)):
            acc = g.mul(acc, x)
        mapping.append(acc)
    return GroupAutomorphism(g, tuple(mapping))


# ---------------------------------------------------------------------------
# permutation groups


@dataclass(frozen=True)
class PermutationGroup:
    """A set of permutations of {0..degree-1} closed under the group operations."""

    degree: int
    elements: frozenset[Perm]

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(tuple(p) for p in self.elements))
        for p in self.elements:
            if not is_permutation(p, self.degree):
                raise NotAPermutation(p)
        if identity_perm(self.degree) not in self.elements:
            raise NotAPermutation(identity_perm(self.degree))

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)


def closure(generators: Iterable[Perm], degree: int, max_size: int | None = 10000) -> PermutationGroup:
    """Smallest permutation group containing the generators.

    Breadth-first products from the identity; generators are inverted up
    front, so inverse-closure comes for free once the set stabilizes.
    """
    gens = []
    for g in generators:
        g = tuple(g)
        if not is_permutation(g, degree):
            raise NotAPermutation(g)
        gens.append(g)
    gens.extend([invert(g) for g in list(gens)])
    ident = identity_perm(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    if max_size is not None and len(seen) > max_size:
                        raise ResourceLimit("permutation closure", len(seen), max_size)
                    nxt.append(q)
        frontier = nxt
    return PermutationGroup(degree, frozenset(seen))


def is_cyclic(g: PermutationGroup) -> bool:
    """True iff a single element generates the whole group."""
    return any(perm_order(p) == g.order for p in g.elements)


def orbits(g: PermutationGroup) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of the points, each orbit sorted, ordered by minimum."""
    remaining = set(range(g.degree))
    out = []
    while remaining:
        start = min(remaining)
        orbit = {p[start] for p in g.elements}
        out.append(tuple(sorted(orbit)))
        remaining -= orbit
    return tuple(out)


def is_semiregular(g: PermutationGroup) -> bool:
    """True iff every orbit has size exactly |g|."""
    return all(len(orbit) == g.order for orbit in orbits(g))


def fixed_point_witness(g: PermutationGroup) -> tuple[Perm, int] | None:
    """A non-identity element with a fixed point, or None when the action is free."""
    ident = identity_perm(g.degree)
    for p in g.sorted_elements():
        if p == ident:
            continue
        for x in range(g.degree):
            if p[x] == x:
                return p, x
    return None
