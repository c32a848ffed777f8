"""Exact orders of shuffle groups, with closed forms and oracles.

The shuffle group of a family is the permutation group generated by its
in and out shuffles: faro and horseshoe act on the 2n deck positions,
flip acts on 4n points through the oriented embedding so that the
face-up bookkeeping stays inside the permutation.

Orders are computed with a deterministic Schreier-Sims stabilizer
chain: pick a base point, build the orbit with a transversal, make
every Schreier generator sift to the identity through the rest of the
chain, and multiply the orbit sizes.  All arithmetic is exact Python
integers; the orders here overflow 64 bits already at twenty cards.

A brute-force breadth-first enumeration over deck arrangements doubles
as an independent oracle for groups of modest order, and the closed
forms of the order theorems are tabulated for verification runs.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple, Optional, Sequence

from .deck import Permutation, ShuffleLabError
from .shuffles import Family, element, family_in_out

#: Deck-size cap for chain computations, overridable via SHUFFLELAB_SIZE_CAP.
DEFAULT_SIZE_CAP = 40
#: Orders at or below this are cross-checked by brute-force enumeration.
BRUTE_FORCE_LIMIT = 10**6
#: Node cap for orbit breadth-first searches.
ORBIT_NODE_CAP = 10**6


class CapExceededError(ShuffleLabError):
    """A configured size or node cap refused the computation."""


class NoClosedFormError(ShuffleLabError):
    """No closed-form case of the order theorems covers this size."""


def size_cap() -> int:
    return int(os.environ.get("SHUFFLELAB_SIZE_CAP", DEFAULT_SIZE_CAP))


def family_generators(family: Family, size: int) -> list[Permutation]:
    """The generator pair of a family at the given deck size.

    Faro and horseshoe generators act on the deck positions; flip
    generators are the oriented elements embedded on twice as many
    points.
    """
    in_kind, out_kind = family_in_out(family)
    if family is Family.FLIP:
        return [
            element(in_kind, size).to_point_permutation(),
            element(out_kind, size).to_point_permutation(),
        ]
    return [element(in_kind, size).perm, element(out_kind, size).perm]


# -- stabilizer chain ---------------------------------------------------------


def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p, then q
    return tuple(q[x] for x in p)


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


class _Level:
    __slots__ = (
        "beta",
        "intro_gens",
        "orbit_gens",
        "transversal",
        "inv_transversal",
        "tree_edges",
        "pending",
    )

    def __init__(self, beta: int, identity: tuple[int, ...]):
        self.beta = beta
        self.intro_gens: list[tuple[int, ...]] = []
        self.orbit_gens: list[tuple[int, ...]] = []
        self.transversal = {beta: identity}
        self.inv_transversal = {beta: identity}
        self.tree_edges: set[tuple[int, int]] = set()
        self.pending: deque[tuple[int, int]] = deque()


class StabilizerChain:
    """Base, transversals, and strong generators of a permutation group.

    Built deterministically: base points are chosen in ascending point
    order (the smallest point moved), transversals are stored as
    elements, and every Schreier generator is sifted until the whole
    chain closes.  The group order is the product of orbit sizes, and
    an element belongs to the group iff it sifts to the identity.

    A generator introduced at level j fixes the first j base points, so
    it also takes part in the orbits of every level above it; orbits
    grow monotonically and transversal entries are never relabeled,
    which lets each Schreier pair be processed exactly once.
    """

    def __init__(self, generators: Iterable[Permutation], degree: Optional[int] = None):
        gens = list(generators)
        if degree is None:
            degree = gens[0].degree if gens else 0
        if any(g.degree != degree for g in gens):
            raise ShuffleLabError("generators must act on the same points")
        self.degree = degree
        self._identity = tuple(range(degree))
        self._levels: list[_Level] = []
        for g in gens:
            residue, depth = self._sift_tuple(g.images, 0)
            if residue is not None:
                self._register(residue, depth)
                self._drain()

    # construction

    def _register(self, g: tuple[int, ...], j: int) -> None:
        """Introduce g at level j and attach it to levels 0..j."""
        if j == len(self._levels):
            beta = min(p for p in range(self.degree) if g[p] != p)
            self._levels.append(_Level(beta, self._identity))
        self._levels[j].intro_gens.append(g)
        for i in range(j + 1):
            self._attach(i, g)

    def _attach(self, i: int, g: tuple[int, ...]) -> None:
        level = self._levels[i]
        index = len(level.orbit_gens)
        level.orbit_gens.append(g)
        level.pending.extend((a, index) for a in level.transversal)
        # close the orbit under the enlarged generator list
        queue = deque(level.transversal)
        while queue:
            a = queue.popleft()
            u_a = level.transversal[a]
            for j, h in enumerate(level.orbit_gens):
                b = h[a]
                if b not in level.transversal:
                    u_b = _mul(u_a, h)
                    level.transversal[b] = u_b
                    level.inv_transversal[b] = _inv(u_b)
                    level.tree_edges.add((a, j))
                    level.pending.extend((b, jj) for jj in range(len(level.orbit_gens)))
                    queue.append(b)

    def _drain(self) -> None:
        """Process Schreier pairs everywhere until the chain closes."""
        while True:
            dirty = False
            for i in range(len(self._levels)):
                level = self._levels[i]
                while level.pending:
                    dirty = True
                    a, j = level.pending.popleft()
                    if (a, j) in level.tree_edges:
                        continue
                    h = level.orbit_gens[j]
                    schreier = _mul(
                        _mul(level.transversal[a], h), level.inv_transversal[h[a]]
                    )
                    residue, depth = self._sift_tuple(schreier, i + 1)
                    if residue is not None:
                        self._register(residue, depth)
            if not dirty:
                return

    def _sift_tuple(
        self, g: tuple[int, ...], start: int
    ) -> tuple[Optional[tuple[int, ...]], int]:
        """Strip transversal factors; (None, -1) means membership."""
        for idx in range(start, len(self._levels)):
            level = self._levels[idx]
            u_inv = level.inv_transversal.get(g[level.beta])
            if u_inv is None:
                return g, idx
            g = _mul(g, u_inv)
        if g == self._identity:
            return None, -1
        return g, len(self._levels)

    # queries

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.beta for level in self._levels)

    @property
    def order(self) -> int:
        return math.prod(len(level.transversal) for level in self._levels)

    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(level.transversal) for level in self._levels)

    def strong_generators(self) -> list[Permutation]:
        return [Permutation(g) for level in self._levels for g in level.intro_gens]

    def sift(self, p: Permutation) -> Permutation:
        """The residue after stripping transversal factors level by level."""
        if p.degree != self.degree:
            raise ShuffleLabError("degree mismatch")
        residue, _ = self._sift_tuple(p.images, 0)
        return Permutation(self._identity if residue is None else residue)

    def __contains__(self, p: Permutation) -> bool:
        return p.degree == self.degree and self._sift_tuple(p.images, 0)[0] is None

    def verify(self) -> None:
        """Recheck that every Schreier generator sifts to the identity."""
        for i, level in enumerate(self._levels):
            for a, u_a in level.transversal.items():
                for h in level.orbit_gens:
                    schreier = _mul(_mul(u_a, h), level.inv_transversal[h[a]])
                    residue, _ = self._sift_tuple(schreier, i + 1)
                    if residue is not None:
                        raise ShuffleLabError("stabilizer chain failed verification")


def schreier_sims(
    generators: Iterable[Permutation], degree: Optional[int] = None
) -> StabilizerChain:
    """Build the stabilizer chain of the group the generators generate."""
    return StabilizerChain(generators, degree)


# -- brute-force oracles ------------------------------------------------------


def brute_force_order(
    generators: Sequence[Permutation], limit: int = BRUTE_FORCE_LIMIT
) -> int:
    """Group order by breadth-first enumeration of deck arrangements.

    The group acts freely on the arrangements reachable from the sorted
    deck, so the orbit size is the group order.  Exceeding ``limit``
    states raises instead of returning a partial count.
    """
    if not generators:
        return 1
    m = generators[0].degree
    # arr' = arr after the shuffle: arr'[q] = arr[g^-1(q)]
    inverses = [_inv(g.images) for g in generators]
    start = tuple(range(m))
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for arr in frontier:
            for g_inv in inverses:
                nxt = tuple(arr[i] for i in g_inv)
                if nxt not in seen:
                    seen.add(nxt)
                    fresh.append(nxt)
                    if len(seen) > limit:
                        raise CapExceededError(
                            f"orbit exceeded {limit} states during enumeration"
                        )
        frontier = fresh
    return len(seen)


def tuple_transitivity_order(
    generators: Sequence[Permutation], t: int, node_cap: int = ORBIT_NODE_CAP
) -> int:
    """Size of the orbit of (0, 1, ..., t-1) under the generated group.

    Equal to the group order exactly when the action is sharply
    t-transitive.
    """
    if not generators:
        return 1
    m = generators[0].degree
    if not 0 <= t <= m:
        raise ShuffleLabError(f"tuple length {t} out of range for degree {m}")
    gens = [g.images for g in generators]
    start = tuple(range(t))
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for tup in frontier:
            for g in gens:
                nxt = tuple(g[x] for x in tup)
                if nxt not in seen:
                    seen.add(nxt)
                    fresh.append(nxt)
                    if len(seen) > node_cap:
                        raise CapExceededError(
                            f"orbit exceeded {node_cap} nodes during enumeration"
                        )
        frontier = fresh
    return len(seen)


def permutation_parity(p: Permutation) -> Literal["even", "odd"]:
    """Parity of a permutation, from its cycle structure."""
    transpositions = sum(len(c) - 1 for c in p.cycles())
    return "even" if transpositions % 2 == 0 else "odd"


# -- order computations and theorem verification ------------------------------


def group_order(family: Family, size: int) -> int:
    """Exact order of the family's shuffle group at the given deck size.

    Orders small enough for brute force are cross-checked against the
    enumeration oracle.
    """
    cap = size_cap()
    if size > cap:
        raise CapExceededError(
            f"deck size {size} exceeds size cap {cap}"
            " (set SHUFFLELAB_SIZE_CAP to raise it)"
        )
    if size < 2 or size % 2:
        raise ShuffleLabError(f"deck size must be even and >= 2, got {size}")
    generators = family_generators(family, size)
    order = StabilizerChain(generators).order
    if order <= BRUTE_FORCE_LIMIT:
        enumerated = brute_force_order(generators, BRUTE_FORCE_LIMIT)
        if enumerated != order:
            raise ShuffleLabError(
                f"stabilizer chain order {order} disagrees with"
                f" enumeration {enumerated} for {family}({size})"
            )
    return order


class ClosedForm(NamedTuple):
    value: int
    case: str
    factored: str


def closed_form_order(family: Family, size: int) -> ClosedForm:
    """The tabulated closed-form order, with its case label.

    Flip defers to faro at twice the size.  Sizes below 4 are refused:
    the case tables contradict each other there.
    """
    if size % 2:
        raise ShuffleLabError(f"deck size must be even, got {size}")
    if family is Family.FARO:
        return _closed_form_faro(size)
    if family is Family.HORSESHOE:
        return _closed_form_horseshoe(size)
    inner = _closed_form_faro(2 * size)
    return ClosedForm(inner.value, f"Flip(2n) = Faro(4n); {inner.case}", inner.factored)


def _closed_form_faro(size: int) -> ClosedForm:
    if size < 4:
        raise NoClosedFormError(f"no closed-form faro case for size {size}")
    n = size // 2
    if size == 12:
        return ClosedForm(2**9 * 3 * 5, "2n = 12", "2^9 * 3 * 5")
    if size == 24:
        return ClosedForm(2**17 * 3**3 * 5 * 11, "2n = 24", "2^17 * 3^3 * 5 * 11")
    k = size.bit_length() - 1
    if size == 1 << k:
        return ClosedForm(k * 2**k, "2n = 2^k", f"{k} * 2^{k}")
    if n % 4 == 2:
        return ClosedForm(
            math.factorial(n) * 2**n, "n = 2 (mod 4)", f"{n}! * 2^{n}"
        )
    if n % 2 == 1:
        return ClosedForm(
            math.factorial(n) * 2 ** (n - 1), "n odd", f"{n}! * 2^{n - 1}"
        )
    return ClosedForm(
        math.factorial(n) * 2 ** (n - 2), "n = 0 (mod 4)", f"{n}! * 2^{n - 2}"
    )


def _closed_form_horseshoe(size: int) -> ClosedForm:
    if size < 4:
        raise NoClosedFormError(f"no closed-form horseshoe case for size {size}")
    n = size // 2
    if size == 6:
        return ClosedForm(120, "2n = 6", "4 * 5 * 6")
    if size == 12:
        return ClosedForm(95040, "2n = 12", "8 * 9 * 10 * 11 * 12")
    k = size.bit_length() - 1
    if size == 1 << k:
        return ClosedForm((k + 1) * 2**k, "2n = 2^k", f"{k + 1} * 2^{k}")
    if n % 2 == 1:
        return ClosedForm(math.factorial(size), "n odd", f"{size}!")
    return ClosedForm(math.factorial(size) // 2, "n even", f"{size}!/2")


def factored(n: int) -> str:
    """Prime factorization as display text, e.g. ``2^6 * 3^3 * 5 * 11``."""
    if n < 1:
        raise ShuffleLabError(f"cannot factor {n}")
    if n == 1:
        return "1"
    parts = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            parts.append(f"{p}^{e}" if e > 1 else str(p))
        p += 1 if p == 2 else 2
    if rest > 1:
        parts.append(str(rest))
    return " * ".join(parts)


@dataclass(frozen=True)
class GroupOrderReport:
    """One verification row: computed order vs the closed form."""

    family: Family
    size: int
    computed: Optional[int]
    closed_form: Optional[int]
    case: Optional[str]
    factored: Optional[str]
    match: bool
    error: Optional[str] = None

    def line(self) -> str:
        if self.error is not None:
            return f"{self.family.value}({self.size}): error: {self.error}"
        return (
            f"{self.family.value}({self.size}):"
            f" computed={self.computed}"
            f" closed={self.closed_form} [{self.factored}]"
            f' case="{self.case}"'
            f" match={'yes' if self.match else 'no'}"
        )

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "size": self.size,
            "computed": self.computed,
            "closed_form": self.closed_form,
            "case": self.case,
            "factored": self.factored,
            "match": self.match,
            "error": self.error,
        }


def verify_theorem(family: Family, sizes: Iterable[int]) -> list[GroupOrderReport]:
    """Compare computed group orders against the closed forms, per size.

    Refusals (size caps, sizes with no closed-form case) become error
    rows rather than aborting the run.
    """
    reports = []
    for size in sizes:
        try:
            closed = closed_form_order(family, size)
            computed = group_order(family, size)
        except ShuffleLabError as exc:
            reports.append(
                GroupOrderReport(family, size, None, None, None, None, False, str(exc))
            )
            continue
        reports.append(
            GroupOrderReport(
                family,
                size,
                computed,
                closed.value,
                closed.case,
                closed.factored,
                computed == closed.value,
            )
        )
    return reports
