"""Decks of oriented cards and the permutations acting on them.

A deck is a sequence of distinctly labeled cards, top card first, each
face-down or face-up.  Shuffles act on decks through *oriented
permutations*: a bijection on positions together with a per-position
flag saying whether the card leaving that position gets turned over.
An oriented permutation on m positions embeds into an ordinary
permutation on 2m points by tracking (position, face) pairs, which is
what the group computations run on.

The stay-stack expansion links decks of two sizes.  An oriented deck of
2n cards corresponds to a plain face-down deck of 4n cards in which
positions j and 4n-1-j always hold the two faces of one card: card
(label, face) becomes point label + 2n*face, and point x pairs with
(x + 2n) mod 4n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

#: Hard upper bound on deck sizes; everything in scope is desk scale.
MAX_DECK_SIZE = 1 << 16


class ShuffleLabError(ValueError):
    """Invalid sizes, malformed text, or broken preconditions."""


class NotStayStackError(ShuffleLabError):
    """Deck does not satisfy the stay-stack pairing."""


class Card(NamedTuple):
    """A labeled card that is face-down (default) or face-up."""

    label: int
    face_up: bool = False

    def turned(self) -> "Card":
        """The same card turned over."""
        return Card(self.label, not self.face_up)

    def __str__(self) -> str:
        return f"~{self.label}" if self.face_up else str(self.label)


def parse_card(token: str) -> Card:
    """Parse a single card token: a decimal label, `~`-prefixed if face-up."""
    face_up = token.startswith("~")
    body = token[1:] if face_up else token
    if not body.isdigit():
        raise ShuffleLabError(f"bad card token {token!r}")
    return Card(int(body), face_up)


@dataclass(frozen=True)
class Deck:
    """An even-sized deck of cards, index 0 on top.

    Labels must form a permutation of 0..size-1.
    """

    cards: tuple[Card, ...]

    def __post_init__(self) -> None:
        cards = tuple(c if isinstance(c, Card) else Card(*c) for c in self.cards)
        object.__setattr__(self, "cards", cards)
        size = len(cards)
        if size < 2 or size % 2:
            raise ShuffleLabError(f"deck size must be even and >= 2, got {size}")
        if size > MAX_DECK_SIZE:
            raise ShuffleLabError(f"deck size {size} exceeds cap {MAX_DECK_SIZE}")
        if sorted(c.label for c in cards) != list(range(size)):
            raise ShuffleLabError("labels must be a permutation of 0..size-1")

    @classmethod
    def identity(cls, size: int) -> "Deck":
        """The face-down deck 0, 1, ..., size-1."""
        if size < 2 or size % 2:
            raise ShuffleLabError(f"deck size must be even and >= 2, got {size}")
        return cls(tuple(Card(i) for i in range(size)))

    @classmethod
    def parse(cls, text: str) -> "Deck":
        """Parse the single-space-separated text form, e.g. ``~9 0 ~8 1``.

        Trailing whitespace is tolerated; anything else must match the
        grammar exactly.
        """
        body = text.rstrip()
        if not body:
            raise ShuffleLabError("empty deck text")
        tokens = body.split(" ")
        if any(not t for t in tokens):
            raise ShuffleLabError(f"malformed deck text {text!r}")
        return cls(tuple(parse_card(t) for t in tokens))

    @property
    def size(self) -> int:
        return len(self.cards)

    def labels(self) -> tuple[int, ...]:
        return tuple(c.label for c in self.cards)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.cards)

    def __len__(self) -> int:
        return len(self.cards)

    def __iter__(self) -> Iterator[Card]:
        return iter(self.cards)

    def __getitem__(self, i: int) -> Card:
        return self.cards[i]


@dataclass(frozen=True)
class Permutation:
    """A bijection on 0..m-1; ``images[p]`` is where position p's card goes."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ShuffleLabError("images must be a bijection on 0..m-1")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(m)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p]

    def then(self, other: "Permutation") -> "Permutation":
        """Composition: apply self first, then other."""
        if other.degree != self.degree:
            raise ShuffleLabError("degree mismatch in composition")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for p, x in enumerate(self.images):
            inv[x] = p
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(p == x for p, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points included as 1-cycles."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                seen[p] = True
                cycle.append(p)
                p = self.images[p]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.degree else 1


@dataclass(frozen=True)
class OrientedPermutation:
    """A permutation of positions plus per-position turn-over flags.

    ``flips[p]`` says whether the card leaving position p is turned
    over.  Flags compose by exclusive-or along trajectories.
    """

    perm: Permutation
    flips: tuple[bool, ...]

    def __post_init__(self) -> None:
        flips = tuple(bool(f) for f in self.flips)
        object.__setattr__(self, "flips", flips)
        if len(flips) != self.perm.degree:
            raise ShuffleLabError("flips length must match permutation degree")

    @classmethod
    def identity(cls, m: int) -> "OrientedPermutation":
        return cls(Permutation.identity(m), (False,) * m)

    @property
    def degree(self) -> int:
        return self.perm.degree

    def then(self, other: "OrientedPermutation") -> "OrientedPermutation":
        """Composition: apply self first, then other."""
        perm = self.perm.then(other.perm)
        flips = tuple(
            self.flips[p] ^ other.flips[self.perm.images[p]]
            for p in range(self.degree)
        )
        return OrientedPermutation(perm, flips)

    def inverse(self) -> "OrientedPermutation":
        inv = self.perm.inverse()
        flips = tuple(self.flips[inv.images[x]] for x in range(self.degree))
        return OrientedPermutation(inv, flips)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.flips)

    def order(self) -> int:
        """Least m >= 1 whose m-fold composition restores order and faces.

        A cycle whose flip flags xor to true needs two full turns, so it
        contributes twice its length.
        """
        lengths = []
        for cycle in self.perm.cycles():
            turned = False
            for p in cycle:
                turned ^= self.flips[p]
            lengths.append(2 * len(cycle) if turned else len(cycle))
        return math.lcm(*lengths)

    def to_point_permutation(self) -> Permutation:
        """Embed into a plain permutation on 2m points.

        Point p + m*face tracks the card at position p shown with the
        given face; the embedding is an injective homomorphism.
        """
        m = self.degree
        images = [0] * (2 * m)
        for p in range(m):
            dest = self.perm.images[p]
            flip = self.flips[p]
            images[p] = dest + m * flip
            images[p + m] = dest + m * (not flip)
        return Permutation(tuple(images))


def apply_oriented(op: OrientedPermutation, deck: Deck) -> Deck:
    """Move every card to its image position, turning the flagged ones."""
    if op.degree != deck.size:
        raise ShuffleLabError(
            f"size mismatch: permutation on {op.degree}, deck of {deck.size}"
        )
    cards: list[Card] = [Card(0)] * deck.size
    for p, card in enumerate(deck.cards):
        cards[op.perm.images[p]] = card.turned() if op.flips[p] else card
    return Deck(tuple(cards))


def expand_staystack(deck: Deck) -> Deck:
    """Encode an oriented 2n-deck as a face-down 4n-deck in stay stack.

    The first 2n positions carry the points label + 2n*face; positions j
    and 4n-1-j hold complementary points (same card, opposite face).
    """
    half = deck.size
    full = 2 * half
    labels = [0] * full
    for j, card in enumerate(deck.cards):
        point = card.label + half * card.face_up
        labels[j] = point
        labels[full - 1 - j] = (point + half) % full
    return Deck(tuple(Card(x) for x in labels))


def contract_staystack(deck: Deck) -> Deck:
    """Recover the oriented 2n-deck whose expansion is the given 4n-deck."""
    if deck.size % 4:
        raise NotStayStackError(f"deck size {deck.size} is not a multiple of 4")
    half = deck.size // 2
    try:
        candidate = Deck(
            tuple(
                Card(c.label % half, c.label >= half)
                for c in deck.cards[:half]
            )
        )
    except ShuffleLabError as exc:
        raise NotStayStackError(f"first half does not encode a deck: {exc}") from exc
    if any(c.face_up for c in deck.cards) or expand_staystack(candidate) != deck:
        raise NotStayStackError("deck is not a stay-stack expansion")
    return candidate
