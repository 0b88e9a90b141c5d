"""Finite quandles as validated Cayley tables.

The table is row-major with rows holding the left argument: entry (i, j) is
i*j. Right translations are therefore column read-offs and left translations
are row read-offs. Construction always runs the full axiom check, so no
constructor can hand out an invalid table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal, Sequence

from .errors import NotAQuandle, NotInvertible
from .groups import (
    FiniteGroup,
    GroupAutomorphism,
    PermutationGroup,
    closure,
    compose,
    identity_perm,
    invert,
)
from .groups import orbits as group_orbits
from .radix import decode_mixed, encode_mixed


@dataclass(frozen=True)
class FiniteQuandle:
    """Quandle on {0..n-1} with table entry (i, j) = i*j."""

    table: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise NotAQuandle("nonempty carrier", ())
        for i, row in enumerate(table):
            if len(row) != n:
                raise NotAQuandle("square table", (i,))
            for j, v in enumerate(row):
                if not (0 <= v < n):
                    raise NotAQuandle("entry in range", (i, j))
        for i in range(n):
            if table[i][i] != i:
                raise NotAQuandle("idempotency", (i, i))
        for j in range(n):
            seen = [False] * n
            for i in range(n):
                v = table[i][j]
                if seen[v]:
                    raise NotAQuandle("right-bijectivity", (j,))
                seen[v] = True
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[table[a][c]][table[b][c]]:
                        raise NotAQuandle("right-distributivity", (a, b, c))

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Right-translation maps: columns[s][t] = t*s."""
        n = self.size
        return tuple(tuple(self.table[t][s] for t in range(n)) for s in range(n))

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Left-translation maps: rows[s][t] = s*t (not bijective in general)."""
        return self.table


def quandle_from_table(table: Sequence[Sequence[int]], name: str | None = None) -> FiniteQuandle:
    """Validate a raw table; raises NotAQuandle naming the first violated axiom."""
    return FiniteQuandle(tuple(tuple(row) for row in table), name)


# ---------------------------------------------------------------------------
# built-in families


def trivial_quandle(n: int) -> FiniteQuandle:
    """x*y = x."""
    table = tuple(tuple(i for _ in range(n)) for i in range(n))
    return FiniteQuandle(table, name=f"trivial:{n}")


def dihedral_quandle(n: int) -> FiniteQuandle:
    """Carrier Z_n with i*j = 2j - i mod n."""
    table = tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n))
    return FiniteQuandle(table, name=f"dihedral:{n}")


def affine_quandle(n: int, alpha: int) -> FiniteQuandle:
    """Carrier Z_n with i*j = alpha*i + (1-alpha)*j mod n; alpha must be a unit."""
    if math.gcd(alpha, n) != 1:
        raise NotInvertible(alpha, n)
    table = tuple(
        tuple((alpha * i + (1 - alpha) * j) % n for j in range(n)) for i in range(n)
    )
    return FiniteQuandle(table, name=f"affine:{n}:{alpha}")


def conj_quandle(g: FiniteGroup) -> FiniteQuandle:
    """Conjugation quandle on the carrier of g: i*j = j^-1 i j."""
    n = g.size
    table = tuple(
        tuple(g.mul(g.mul(g.inv(j), i), j) for j in range(n)) for i in range(n)
    )
    return FiniteQuandle(table, name=f"conj:{g.name}" if g.name else None)


def core_quandle(g: FiniteGroup) -> FiniteQuandle:
    """Core quandle on the carrier of g: i*j = j i^-1 j."""
    n = g.size
    table = tuple(
        tuple(g.mul(g.mul(j, g.inv(i)), j) for j in range(n)) for i in range(n)
    )
    return FiniteQuandle(table, name=f"core:{g.name}" if g.name else None)


def generalized_alexander_quandle(g: FiniteGroup, phi: GroupAutomorphism) -> FiniteQuandle:
    """i*j = phi(i j^-1) j for an automorphism phi of g."""
    if phi.group != g:
        raise ValueError("automorphism does not belong to the given group")
    n = g.size
    table = tuple(
        tuple(g.mul(phi(g.mul(i, g.inv(j))), j) for j in range(n)) for i in range(n)
    )
    return FiniteQuandle(table)


def product_quandle(qs: Sequence[FiniteQuandle]) -> FiniteQuandle:
    """Componentwise operation on the mixed-radix packed product carrier."""
    if not qs:
        raise ValueError("product of an empty family")
    sizes = [q.size for q in qs]
    n = 1
    for s in sizes:
        n *= s
    table = []
    for x in range(n):
        xs = decode_mixed(x, sizes)
        row = []
        for y in range(n):
            ys = decode_mixed(y, sizes)
            row.append(encode_mixed([q.op(a, b) for q, a, b in zip(qs, xs, ys)], sizes))
        table.append(tuple(row))
    return FiniteQuandle(tuple(table))


def dual_quandle(q: FiniteQuandle) -> FiniteQuandle:
    """The quandle of the dual operation: column j becomes the inverse of R_j."""
    n = q.size
    cols = [invert(col) for col in q.columns]
    table = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return FiniteQuandle(table)


# ---------------------------------------------------------------------------
# translations and the inner group


@dataclass(frozen=True)
class Translation:
    """One translation map of a quandle, as an explicit index array."""

    quandle: FiniteQuandle
    kind: Literal["right", "left"]
    base: int
    map: tuple[int, ...]

    def __call__(self, t: int) -> int:
        return self.map[t]


def right_translation(q: FiniteQuandle, s: int) -> Translation:
    """R_s: t -> t*s; always a permutation by the second axiom."""
    return Translation(q, "right", s, q.columns[s])


def left_translation(q: FiniteQuandle, s: int) -> Translation:
    """L_s: t -> s*t; need not be injective."""
    return Translation(q, "left", s, q.rows[s])


def inner_group(q: FiniteQuandle) -> PermutationGroup:
    """Permutation group generated by all right translations."""
    return closure(q.columns, q.size)


# ---------------------------------------------------------------------------
# structural predicates


def is_latin(q: FiniteQuandle) -> bool:
    """Every left translation is a bijection."""
    n = q.size
    return all(sorted(row) == list(range(n)) for row in q.rows)


def is_semi_latin(q: FiniteQuandle) -> bool:
    """Every left translation is injective."""
    n = q.size
    return all(len(set(row)) == n for row in q.rows)


def is_involutory(q: FiniteQuandle) -> bool:
    """Every right translation squares to the identity."""
    ident = identity_perm(q.size)
    return all(compose(col, col) == ident for col in q.columns)


def stabilizer_elements(q: FiniteQuandle) -> tuple[int, ...]:
    """Elements e with s*e = s for all s, i.e. columns equal to the identity."""
    ident = identity_perm(q.size)
    return tuple(e for e in range(q.size) if q.columns[e] == ident)


def is_trivial_quandle(q: FiniteQuandle) -> bool:
    return len(stabilizer_elements(q)) == q.size


def orbits(q: FiniteQuandle) -> tuple[tuple[int, ...], ...]:
    """Orbit decomposition of the carrier under the inner group."""
    return group_orbits(inner_group(q))


def is_subquandle(q: FiniteQuandle, subset: Iterable[int]) -> bool:
    """True iff subset is closed under the operation."""
    sub = set(subset)
    if not all(0 <= x < q.size for x in sub):
        raise ValueError("subset out of range")
    return all(q.op(a, b) in sub for a in sub for b in sub)
