"""Decision procedures and exhaustive enumeration for quandle order spaces.

Two tiers answer every orderability question. The structural fast path works
on the translation maps themselves: a set of permutations of an n-point
carrier (n >= 3) preserves some cyclic arrangement exactly when the group it
generates is cyclic and acts without nontrivial fixed points, in which case
an invariant arrangement interleaves the orbits of a generator. The brute
tier filters the full finite space of arrangements or rankings. The two are
diffed against each other whenever the carrier is small enough.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .corders import (
    CyclicOrder,
    LinearOrder,
    circular_from_linear,
    is_left_invariant,
    is_left_order,
    is_right_invariant,
    is_right_order,
)
from .errors import DegenerateTriple, DiagonalPair, NotAPermutation, ResourceLimit
from .groups import (
    Perm,
    PermutationGroup,
    closure,
    compose,
    fixed_point_witness,
    identity_perm,
    invert,
    is_cyclic,
    is_permutation,
    is_semiregular,
    orbits,
    perm_order,
)
from .quandles import FiniteQuandle, is_involutory, is_latin, is_trivial_quandle
from .quandles import orbits as quandle_orbits


@dataclass(frozen=True)
class SearchCaps:
    """Explicit resource limits; exceeding one raises ResourceLimit."""

    max_circular_n: int = 10  # (n-1)! arrangements enumerated up to this n
    max_linear_n: int = 8  # n! rankings enumerated up to this n
    max_closure_size: int = 10000
    oracle_max_n: int = 6  # auto decisions cross-check against brute force up to this n
    max_generate_n: int = 5


DEFAULT_CAPS = SearchCaps()

# certificate kinds
NON_CYCLIC = "non-cyclic-action"
NON_SEMIREGULAR = "non-semiregular-action"
NON_INJECTIVE_LEFT = "non-injective-left-translation"
NON_IDENTITY_RIGHT = "non-identity-right-translation"
NON_IDENTITY_LEFT = "non-identity-left-translation"
EXHAUSTED = "exhaustive-search"


@dataclass(frozen=True)
class Certificate:
    """Structural reason backing a negative verdict, with checkable data."""

    kind: str
    data: dict
    detail: str


@dataclass(frozen=True)
class Verdict:
    """Decision result: a witness when yes, a certificate when no."""

    answer: bool
    witness: CyclicOrder | LinearOrder | None = None
    certificate: Certificate | None = None

    def __post_init__(self):
        if self.answer and self.witness is None:
            raise ValueError("positive verdict requires a witness")
        if not self.answer and self.certificate is None:
            raise ValueError("negative verdict requires a certificate")


@dataclass(frozen=True)
class OrderSpace:
    """A fully enumerated, canonically sorted order space of a quandle."""

    kind: str  # RCO | LCO | RO | LO | BO | BCO
    quandle: FiniteQuandle
    members: tuple

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item) -> bool:
        return item in self.members


def _partitioned_filter(items: Sequence, predicate: Callable, threads: int) -> list:
    """Filter preserving order; contiguous chunks may be checked in parallel."""
    if threads <= 1 or len(items) < 2:
        return [x for x in items if predicate(x)]
    chunk = (len(items) + threads - 1) // threads
    parts = [items[i : i + chunk] for i in range(0, len(items), chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda part: [x for x in part if predicate(x)], parts))
    return [x for part in results for x in part]


# ---------------------------------------------------------------------------
# ground sets


def enumerate_circular_orderings(n: int, caps: SearchCaps = DEFAULT_CAPS) -> tuple[CyclicOrder, ...]:
    """All circular orderings of an n-element carrier, as canonical arrangements.

    One zero ordering for n <= 2, else the (n-1)! arrangements starting at 0,
    in lexicographic order.
    """
    if n < 1:
        raise ValueError("carrier must be nonempty")
    if n > caps.max_circular_n:
        raise ResourceLimit("circular-ordering enumeration", n, caps.max_circular_n)
    if n <= 2:
        return (CyclicOrder(tuple(range(n))),)
    return tuple(CyclicOrder((0, *rest)) for rest in permutations(range(1, n)))


def enumerate_rankings(n: int, caps: SearchCaps = DEFAULT_CAPS) -> tuple[LinearOrder, ...]:
    """All n! rankings of the carrier in lexicographic order."""
    if n < 1:
        raise ValueError("carrier must be nonempty")
    if n > caps.max_linear_n:
        raise ResourceLimit("ranking enumeration", n, caps.max_linear_n)
    return tuple(LinearOrder(p) for p in permutations(range(n)))


# ---------------------------------------------------------------------------
# enumerated order spaces


def enumerate_rco(q: FiniteQuandle, caps: SearchCaps = DEFAULT_CAPS, threads: int = 1) -> OrderSpace:
    ground = enumerate_circular_orderings(q.size, caps)
    members = _partitioned_filter(ground, lambda c: is_right_invariant(c, q), threads)
    return OrderSpace("RCO", q, tuple(members))


def enumerate_lco(q: FiniteQuandle, caps: SearchCaps = DEFAULT_CAPS, threads: int = 1) -> OrderSpace:
    ground = enumerate_circular_orderings(q.size, caps)
    members = _partitioned_filter(ground, lambda c: is_left_invariant(c, q), threads)
    return OrderSpace("LCO", q, tuple(members))


def enumerate_bicircular(q: FiniteQuandle, caps: SearchCaps = DEFAULT_CAPS, threads: int = 1) -> OrderSpace:
    ground = enumerate_circular_orderings(q.size, caps)
    members = _partitioned_filter(
        ground, lambda c: is_right_invariant(c, q) and is_left_invariant(c, q), threads
    )
    return OrderSpace("BCO", q, tuple(members))


def enumerate_right_orderings(q: FiniteQuandle, caps: SearchCaps = DEFAULT_CAPS, threads: int = 1) -> OrderSpace:
    ground = enumerate_rankings(q.size, caps)
    members = _partitioned_filter(ground, lambda o: is_right_order(o, q), threads)
    return OrderSpace("RO", q, tuple(members))


def enumerate_left_orderings(q: FiniteQuandle, caps: SearchCaps = DEFAULT_CAPS, threads: int = 1) -> OrderSpace:
    ground = enumerate_rankings(q.size, caps)
    members = _partitioned_filter(ground, lambda o: is_left_order(o, q), threads)
    return OrderSpace("LO", q, tuple(members))


def enumerate_bi_orderings(q: FiniteQuandle, caps: SearchCaps = DEFAULT_CAPS, threads: int = 1) -> OrderSpace:
    ground = enumerate_rankings(q.size, caps)
    members = _partitioned_filter(
        ground, lambda o: is_right_order(o, q) and is_left_order(o, q), threads
    )
    return OrderSpace("BO", q, tuple(members))


# ---------------------------------------------------------------------------
# the structural fast path


def cyclic_witness_for_permutations(
    maps: Iterable[Perm], degree: int, max_closure: int = DEFAULT_CAPS.max_closure_size
) -> CyclicOrder | None:
    """A cyclic arrangement preserved by every given permutation, or None.

    The arrangement exists exactly when the generated group is cyclic and
    semiregular; see _invariant_arrangement for the construction.
    """
    if degree < 3:
        raise ValueError("needs at least three points; smaller carriers are vacuous")
    maps = [tuple(m) for m in maps]
    for m in maps:
        if not is_permutation(m, degree):
            raise NotAPermutation(m)
    witness, _ = _analyze_action(maps, degree, "maps", max_closure)
    return witness


def _analyze_action(
    maps: Sequence[Perm], degree: int, acting: str, max_closure: int
) -> tuple[CyclicOrder | None, Certificate | None]:
    g = closure(maps, degree, max_size=max_closure)
    if not is_cyclic(g):
        cert = Certificate(
            NON_CYCLIC,
            {"acting": acting, "group_order": g.order},
            f"the group generated by the {acting} has order {g.order} and is not cyclic",
        )
        return None, cert
    if not is_semiregular(g):
        perm, point = fixed_point_witness(g)
        cert = Certificate(
            NON_SEMIREGULAR,
            {
                "acting": acting,
                "group_order": g.order,
                "permutation": list(perm),
                "fixed_point": point,
            },
            f"a non-identity element of the group generated by the {acting} fixes point {point}",
        )
        return None, cert
    return _invariant_arrangement(g), None


def _invariant_arrangement(g: PermutationGroup) -> CyclicOrder:
    """Invariant arrangement of a cyclic semiregular group: interleaved orbits.

    With d = |g| and orbit representatives r_0 < r_1 < ... the arrangement
    places gen^i(r_j) at position i*m + j, so every group element acts as a
    rotation by a multiple of m. The generator is the least permutation (in
    tuple order) of full order, making the witness reproducible.
    """
    degree = g.degree
    d = g.order
    reps = [orbit[0] for orbit in orbits(g)]
    if d == 1:
        gen = identity_perm(degree)
    else:
        gen = min(p for p in g.elements if perm_order(p) == d)
    arr: list[int] = []
    power = identity_perm(degree)
    for _ in range(d):
        arr.extend(power[r] for r in reps)
        power = compose(gen, power)
    return CyclicOrder.from_cycle(arr)


def _first_non_injective_left(q: FiniteQuandle) -> Certificate | None:
    n = q.size
    for s in range(n):
        row = q.rows[s]
        seen: dict[int, int] = {}
        for t in range(n):
            if row[t] in seen:
                return Certificate(
                    NON_INJECTIVE_LEFT,
                    {"base": s, "pair": [seen[row[t]], t], "image": row[t]},
                    f"left translation by {s} sends both {seen[row[t]]} and {t} to {row[t]}",
                )
            seen[row[t]] = t
    return None


def _fast_circular(q: FiniteQuandle, side: str, caps: SearchCaps) -> Verdict:
    n = q.size
    if n <= 2:
        return Verdict(True, witness=CyclicOrder(tuple(range(n))))
    if side == "right":
        maps, acting = list(q.columns), "right translations"
    else:
        cert = _first_non_injective_left(q)
        if cert is not None:
            return Verdict(False, certificate=cert)
        if side == "left":
            maps, acting = list(q.rows), "left translations"
        else:
            maps, acting = list(q.columns) + list(q.rows), "left and right translations"
    witness, cert = _analyze_action(maps, n, acting, caps.max_closure_size)
    if witness is not None:
        return Verdict(True, witness=witness)
    return Verdict(False, certificate=cert)


def _brute_circular(q: FiniteQuandle, side: str, caps: SearchCaps) -> Verdict:
    ground = enumerate_circular_orderings(q.size, caps)
    checks = {
        "right": lambda c: is_right_invariant(c, q),
        "left": lambda c: is_left_invariant(c, q),
        "both": lambda c: is_right_invariant(c, q) and is_left_invariant(c, q),
    }
    check = checks[side]
    for c in ground:
        if check(c):
            return Verdict(True, witness=c)
    return Verdict(
        False,
        certificate=Certificate(
            EXHAUSTED,
            {"checked": len(ground)},
            f"none of the {len(ground)} circular orderings is {side}-invariant",
        ),
    )


def _two_tier(
    q: FiniteQuandle,
    strategy: str,
    caps: SearchCaps,
    fast: Callable[[], Verdict],
    brute: Callable[[], Verdict],
    label: str,
) -> Verdict:
    """Run the requested tiers; 'auto' diffs them on small carriers."""
    if strategy not in ("auto", "fast", "brute"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "fast":
        return fast()
    if strategy == "brute":
        return brute()
    verdict = fast()
    if q.size <= caps.oracle_max_n:
        oracle = brute()
        if oracle.answer != verdict.answer:
            raise AssertionError(
                f"fast path and exhaustive search disagree on {label}: "
                f"{verdict.answer} vs {oracle.answer}"
            )
    return verdict


def decide_right_circular(
    q: FiniteQuandle, strategy: str = "auto", caps: SearchCaps = DEFAULT_CAPS
) -> Verdict:
    return _two_tier(
        q,
        strategy,
        caps,
        lambda: _fast_circular(q, "right", caps),
        lambda: _brute_circular(q, "right", caps),
        "right-circular orderability",
    )


def decide_left_circular(
    q: FiniteQuandle, strategy: str = "auto", caps: SearchCaps = DEFAULT_CAPS
) -> Verdict:
    return _two_tier(
        q,
        strategy,
        caps,
        lambda: _fast_circular(q, "left", caps),
        lambda: _brute_circular(q, "left", caps),
        "left-circular orderability",
    )


def decide_bicircular(
    q: FiniteQuandle, strategy: str = "auto", caps: SearchCaps = DEFAULT_CAPS
) -> Verdict:
    return _two_tier(
        q,
        strategy,
        caps,
        lambda: _fast_circular(q, "both", caps),
        lambda: _brute_circular(q, "both", caps),
        "bi-circular orderability",
    )


def _fast_right_orderable(q: FiniteQuandle) -> Verdict:
    """A right translation strictly increasing for a finite ranking must be the
    identity, so only trivial quandles are right orderable."""
    n = q.size
    for s in range(n):
        col = q.columns[s]
        for t in range(n):
            if col[t] != t:
                return Verdict(
                    False,
                    certificate=Certificate(
                        NON_IDENTITY_RIGHT,
                        {"base": s, "point": t, "image": col[t]},
                        f"right translation by {s} moves {t} to {col[t]}; a strictly "
                        "increasing bijection of a finite chain is the identity",
                    ),
                )
    return Verdict(True, witness=LinearOrder(tuple(range(n))))


def _fast_left_orderable(q: FiniteQuandle) -> Verdict:
    n = q.size
    if n == 1:
        return Verdict(True, witness=LinearOrder((0,)))
    cert = _first_non_injective_left(q)
    if cert is None:
        # in a quandle s*t = t forces s = t, so row 0 moves the point 1
        s, t = 0, 1
        cert = Certificate(
            NON_IDENTITY_LEFT,
            {"base": s, "point": t, "image": q.op(s, t)},
            f"left translation by {s} moves {t} to {q.op(s, t)}; a strictly "
            "increasing self-map of a finite chain is the identity",
        )
    return Verdict(False, certificate=cert)


def _brute_linear(q: FiniteQuandle, side: str, caps: SearchCaps) -> Verdict:
    ground = enumerate_rankings(q.size, caps)
    check = (lambda o: is_right_order(o, q)) if side == "right" else (lambda o: is_left_order(o, q))
    for o in ground:
        if check(o):
            return Verdict(True, witness=o)
    return Verdict(
        False,
        certificate=Certificate(
            EXHAUSTED,
            {"checked": len(ground)},
            f"none of the {len(ground)} rankings is a {side} ordering",
        ),
    )


def decide_right_orderable(
    q: FiniteQuandle, strategy: str = "auto", caps: SearchCaps = DEFAULT_CAPS
) -> Verdict:
    return _two_tier(
        q,
        strategy,
        caps,
        lambda: _fast_right_orderable(q),
        lambda: _brute_linear(q, "right", caps),
        "right orderability",
    )


def decide_left_orderable(
    q: FiniteQuandle, strategy: str = "auto", caps: SearchCaps = DEFAULT_CAPS
) -> Verdict:
    return _two_tier(
        q,
        strategy,
        caps,
        lambda: _fast_left_orderable(q),
        lambda: _brute_linear(q, "left", caps),
        "left orderability",
    )


def recheck_certificate(q: FiniteQuandle, cert: Certificate) -> bool:
    """Re-validate a refutation certificate directly against the quandle.

    Group-theoretic reasons are recomputed from the closure of the named
    translation maps; pointwise reasons are checked against the table.
    """
    data = cert.data
    if cert.kind in (NON_CYCLIC, NON_SEMIREGULAR):
        acting = data["acting"]
        maps = {
            "right translations": list(q.columns),
            "left translations": list(q.rows),
            "left and right translations": list(q.columns) + list(q.rows),
        }.get(acting)
        if maps is None:
            return False
        g = closure(maps, q.size)
        if g.order != data["group_order"]:
            return False
        if cert.kind == NON_CYCLIC:
            return not is_cyclic(g)
        perm = tuple(data["permutation"])
        point = data["fixed_point"]
        return (
            perm in g.elements
            and perm != identity_perm(q.size)
            and perm[point] == point
            and not is_semiregular(g)
        )
    if cert.kind == NON_INJECTIVE_LEFT:
        s = data["base"]
        t1, t2 = data["pair"]
        return t1 != t2 and q.op(s, t1) == q.op(s, t2) == data["image"]
    if cert.kind == NON_IDENTITY_RIGHT:
        return q.op(data["point"], data["base"]) == data["image"] != data["point"]
    if cert.kind == NON_IDENTITY_LEFT:
        return q.op(data["base"], data["point"]) == data["image"] != data["point"]
    if cert.kind == EXHAUSTED:
        return data["checked"] >= 1
    return False


# ---------------------------------------------------------------------------
# subbasis sets


def _require_nondegenerate(s: tuple[int, int, int]) -> None:
    x, y, z = s
    if x == y or y == z or x == z:
        raise DegenerateTriple(f"triple {s} has a repeated entry")


def subbasic_right(
    q: FiniteQuandle, s: tuple[int, int, int], caps: SearchCaps = DEFAULT_CAPS
) -> tuple[CyclicOrder, ...]:
    """Members of RCO taking the value +1 on the given nondegenerate triple."""
    _require_nondegenerate(s)
    return tuple(c for c in enumerate_rco(q, caps) if c.evaluate(*s) == 1)


def subbasic_left(
    q: FiniteQuandle, s: tuple[int, int, int], caps: SearchCaps = DEFAULT_CAPS
) -> tuple[CyclicOrder, ...]:
    """Members of LCO taking the value +1 on the given nondegenerate triple."""
    _require_nondegenerate(s)
    return tuple(c for c in enumerate_lco(q, caps) if c.evaluate(*s) == 1)


def subbasic_linear(
    q: FiniteQuandle, side: str, pair: tuple[int, int], caps: SearchCaps = DEFAULT_CAPS
) -> tuple[LinearOrder, ...]:
    """Members of RO (side='right') or LO placing a strictly before b."""
    a, b = pair
    if a == b:
        raise DiagonalPair(f"pair {pair} lies on the diagonal")
    space = enumerate_right_orderings(q, caps) if side == "right" else enumerate_left_orderings(q, caps)
    return tuple(o for o in space if o.before(a, b))


# ---------------------------------------------------------------------------
# the ranking -> circular ordering map with fibers


@dataclass(frozen=True)
class EmbeddingReport:
    """Image and fiber partition of closing every ranking into a cycle."""

    side: str
    domain: tuple[LinearOrder, ...]
    image: tuple[CyclicOrder, ...]
    fibers: tuple[tuple[CyclicOrder, tuple[LinearOrder, ...]], ...]

    @property
    def domain_size(self) -> int:
        return len(self.domain)

    @property
    def image_size(self) -> int:
        return len(self.image)

    def fiber_sizes(self) -> tuple[int, ...]:
        return tuple(len(members) for _, members in self.fibers)


def embedding_image(
    q: FiniteQuandle, side: str, caps: SearchCaps = DEFAULT_CAPS
) -> EmbeddingReport:
    """Close every right (or left) ordering into a cycle and report the fibers.

    Each image member is re-verified against the matching invariance check;
    rankings that are cyclic rotations of one another share an image point, so
    fibers of size greater than one are expected and reported as-is.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    space = enumerate_right_orderings(q, caps) if side == "right" else enumerate_left_orderings(q, caps)
    invariant = is_right_invariant if side == "right" else is_left_invariant
    buckets: dict[CyclicOrder, list[LinearOrder]] = {}
    for o in space:
        c = circular_from_linear(o)
        buckets.setdefault(c, []).append(o)
    for c in buckets:
        if not invariant(c, q):
            raise AssertionError(
                f"image of a {side} ordering failed the {side}-invariance re-check: {c}"
            )
    image = tuple(sorted(buckets, key=lambda c: c.arrangement))
    fibers = tuple((c, tuple(buckets[c])) for c in image)
    return EmbeddingReport(side, tuple(space.members), image, fibers)


# ---------------------------------------------------------------------------
# quandle catalog


def are_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle) -> bool:
    """True iff some relabeling permutation carries one table to the other."""
    n = q1.size
    if n != q2.size:
        return False
    t1, t2 = q1.table, q2.table
    for p in permutations(range(n)):
        if all(t2[p[i]][p[j]] == p[t1[i][j]] for i in range(n) for j in range(n)):
            return True
    return False


def canonical_form(q: FiniteQuandle) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabeling of the table; equal across a class."""
    n = q.size
    t = q.table
    best = None
    for p in permutations(range(n)):
        inv = invert(p)
        cand = tuple(tuple(p[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best


def generate_all_quandles(
    n: int, up_to_iso: bool = False, caps: SearchCaps = DEFAULT_CAPS
) -> tuple[FiniteQuandle, ...]:
    """Every quandle of order n, by column-wise backtracking.

    Columns are the right-translation permutations; column j must fix j, and
    self-distributivity pins column sk(j) to the conjugate sk . sj . sk^-1,
    which is checked as soon as all three columns are assigned. Output order
    follows the lexicographic candidate order, so it is deterministic.
    """
    if n > caps.max_generate_n:
        raise ResourceLimit("quandle generation", n, caps.max_generate_n)
    if n < 1:
        raise ValueError("carrier must be nonempty")
    candidates = {
        j: [p for p in permutations(range(n)) if p[j] == j] for j in range(n)
    }
    cols: list[Perm | None] = [None] * n
    inverses: list[Perm | None] = [None] * n
    found: list[tuple[Perm, ...]] = []

    def consistent(f: int) -> bool:
        for k in range(f + 1):
            ck = cols[k]
            cki = inverses[k]
            for j in range(f + 1):
                m = ck[j]
                if m <= f and cols[m] != compose(ck, compose(cols[j], cki)):
                    return False
        return True

    def descend(f: int) -> None:
        if f == n:
            found.append(tuple(cols))
            return
        for p in candidates[f]:
            cols[f] = p
            inverses[f] = invert(p)
            if consistent(f):
                descend(f + 1)
        cols[f] = None
        inverses[f] = None

    descend(0)
    quandles = [
        FiniteQuandle(tuple(tuple(cs[j][i] for j in range(n)) for i in range(n)))
        for cs in found
    ]
    if not up_to_iso:
        return tuple(quandles)
    reps: list[FiniteQuandle] = []
    for q in quandles:
        if not any(are_isomorphic(q, r) for r in reps):
            reps.append(q)
    return tuple(reps)


def census(max_n: int, caps: SearchCaps = DEFAULT_CAPS) -> list[dict]:
    """Orderability flags, order-space sizes, and structure for every
    isomorphism class up to max_n.

    Classes are keyed by their canonical (lexicographically least) table and
    numbered in that order, so reports are stable under relabeling. The
    space sizes record how large the finite RCO/LCO/RO/LO spaces actually
    come out, not just whether they are empty.
    """
    records = []
    for n in range(1, max_n + 1):
        reps = generate_all_quandles(n, up_to_iso=True, caps=caps)
        canon = sorted(canonical_form(q) for q in reps)
        for class_id, table in enumerate(canon):
            q = FiniteQuandle(table)
            sizes = {
                "rco_size": len(enumerate_rco(q, caps)),
                "lco_size": len(enumerate_lco(q, caps)),
                "bco_size": len(enumerate_bicircular(q, caps)),
                "ro_size": len(enumerate_right_orderings(q, caps)),
                "lo_size": len(enumerate_left_orderings(q, caps)),
            }
            records.append(
                {
                    "order": n,
                    "class_id": class_id,
                    "representative_table": [list(row) for row in table],
                    "right_circularly_orderable": decide_right_circular(q, caps=caps).answer,
                    "left_circularly_orderable": decide_left_circular(q, caps=caps).answer,
                    "bi_circularly_orderable": decide_bicircular(q, caps=caps).answer,
                    "right_orderable": decide_right_orderable(q, caps=caps).answer,
                    "left_orderable": decide_left_orderable(q, caps=caps).answer,
                    **sizes,
                    "latin": is_latin(q),
                    "involutory": is_involutory(q),
                    "trivial": is_trivial_quandle(q),
                    "orbits": [list(orbit) for orbit in quandle_orbits(q)],
                }
            )
    return records
