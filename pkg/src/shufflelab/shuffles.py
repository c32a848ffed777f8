"""The perfect-shuffle families as oriented permutations.

Every shuffle here cuts a 2n-card deck into equal halves and perfectly
interlaces them; the families differ in what happens to the bottom half
first and in which half contributes the new top card:

* faro: interlace as-is.  ``out`` keeps the old top card on top,
  ``in`` buries it in position 1.
* flip: turn the bottom half over (reverse its order and flip every
  card) before interlacing, then interlace out or in.
* horseshoe: reverse the bottom half's order only, faces untouched.

Beyond the interlacing families there are table shuffles:

* milk: repeatedly slide the current top and bottom cards off together
  onto a pile.  Equal to a horseshoe shuffle conjugated by turning the
  whole deck over; the two milk variants differ in which card of each
  pair lands on top.
* Monge: feed cards one at a time alternately over and under a growing
  pile; the two variants are the inverses of the two milk shuffles.
* reverse / turnover: reverse the deck; turnover also flips every card.

All of them are pure values: ``element`` returns the oriented
permutation of a shuffle at a given size, and words of shuffles fold
left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence, Union

from .deck import (
    Deck,
    OrientedPermutation,
    Permutation,
    ShuffleLabError,
    apply_oriented,
)


class Shuffle(Enum):
    """The shuffle alphabet; values double as text tokens."""

    FARO_OUT = "faro-out"
    FARO_IN = "faro-in"
    FLIP_OUT = "flip-out"
    FLIP_IN = "flip-in"
    HORSE_OUT = "horse-out"
    HORSE_IN = "horse-in"
    MILK = "milk"
    MILK_SWAP = "milk-swap"
    MONGE_UNDER = "monge-under"
    MONGE_OVER = "monge-over"
    REVERSE = "reverse"
    TURN_OVER = "turnover"

    def __str__(self) -> str:
        return self.value


_BY_TOKEN = {kind.value: kind for kind in Shuffle}

_IN_KINDS = frozenset({Shuffle.FARO_IN, Shuffle.FLIP_IN, Shuffle.HORSE_IN})
_OUT_KINDS = frozenset({Shuffle.FARO_OUT, Shuffle.FLIP_OUT, Shuffle.HORSE_OUT})


@dataclass(frozen=True)
class Step:
    """One shuffle in a word, possibly inverted (the dealt-out undo)."""

    shuffle: Shuffle
    inverted: bool = False

    @classmethod
    def parse(cls, token: str) -> "Step":
        """Parse a word token such as ``flip-in`` or ``inv:milk``."""
        text = token.strip().lower()
        inverted = text.startswith("inv:")
        if inverted:
            text = text[4:]
        kind = _BY_TOKEN.get(text)
        if kind is None:
            raise ShuffleLabError(f"unknown shuffle token {token!r}")
        return cls(kind, inverted)

    def __str__(self) -> str:
        return f"inv:{self.shuffle.value}" if self.inverted else self.shuffle.value


#: A shuffle word: steps applied left to right; the empty word is the identity.
Word = tuple[Step, ...]

StepLike = Union[Shuffle, Step]
WordLike = Union[StepLike, Sequence[StepLike]]


def as_step(value: StepLike) -> Step:
    return value if isinstance(value, Step) else Step(value)


def as_word(value: WordLike) -> Word:
    """Normalize a shuffle, step, or sequence of either into a word."""
    if isinstance(value, (Shuffle, Step)):
        return (as_step(value),)
    return tuple(as_step(v) for v in value)


def parse_word(text: str) -> Word:
    """Parse comma- or whitespace-separated shuffle tokens, case-insensitive."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    return tuple(Step.parse(t) for t in tokens)


def format_word(word: WordLike) -> str:
    return ", ".join(str(step) for step in as_word(word))


class Family(Enum):
    """A generator family: which pair of shuffles (or their kin) we use."""

    FARO = "faro"
    FLIP = "flip"
    HORSESHOE = "horse"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, token: str) -> "Family":
        for fam in cls:
            if fam.value == token.strip().lower():
                return fam
        raise ShuffleLabError(f"unknown family {token!r}")


_FAMILY_IN_OUT = {
    Family.FARO: (Shuffle.FARO_IN, Shuffle.FARO_OUT),
    Family.FLIP: (Shuffle.FLIP_IN, Shuffle.FLIP_OUT),
    Family.HORSESHOE: (Shuffle.HORSE_IN, Shuffle.HORSE_OUT),
}


def family_in_out(family: Family) -> tuple[Shuffle, Shuffle]:
    """The (in, out) shuffle kinds of a family."""
    return _FAMILY_IN_OUT[family]


def _check_size(size: int) -> None:
    if size < 2 or size % 2:
        raise ShuffleLabError(f"deck size must be even and >= 2, got {size}")


@lru_cache(maxsize=None)
def _base_element(kind: Shuffle, size: int) -> OrientedPermutation:
    _check_size(size)
    n = size // 2
    if kind is Shuffle.FARO_OUT:
        # position i goes to 2i mod (size-1); the bottom card stays put
        images = tuple(
            2 * i % (size - 1) if i < size - 1 else i for i in range(size)
        )
        return OrientedPermutation(Permutation(images), (False,) * size)
    if kind is Shuffle.FARO_IN:
        # add a phantom top and bottom card, out-shuffle, strip them
        padded = _base_element(Shuffle.FARO_OUT, size + 2)
        images = tuple(padded.perm.images[i + 1] - 1 for i in range(size))
        return OrientedPermutation(Permutation(images), (False,) * size)
    if kind in (Shuffle.FLIP_OUT, Shuffle.FLIP_IN, Shuffle.HORSE_OUT, Shuffle.HORSE_IN):
        flip_bottom = kind in (Shuffle.FLIP_OUT, Shuffle.FLIP_IN)
        inward = kind in (Shuffle.FLIP_IN, Shuffle.HORSE_IN)
        images = [0] * size
        flips = [False] * size
        for j in range(n):
            top_src = j
            bottom_src = size - 1 - j  # bottom half comes out reversed
            first, second = (bottom_src, top_src) if inward else (top_src, bottom_src)
            images[first] = 2 * j
            images[second] = 2 * j + 1
            if flip_bottom:
                flips[bottom_src] = True
        return OrientedPermutation(Permutation(tuple(images)), tuple(flips))
    if kind is Shuffle.MILK:
        turn = _base_element(Shuffle.TURN_OVER, size)
        return turn.then(_base_element(Shuffle.HORSE_IN, size)).then(turn)
    if kind is Shuffle.MILK_SWAP:
        turn = _base_element(Shuffle.TURN_OVER, size)
        return turn.then(_base_element(Shuffle.HORSE_OUT, size)).then(turn)
    if kind is Shuffle.MONGE_UNDER:
        return _base_element(Shuffle.MILK, size).inverse()
    if kind is Shuffle.MONGE_OVER:
        return _base_element(Shuffle.MILK_SWAP, size).inverse()
    if kind is Shuffle.REVERSE:
        images = tuple(size - 1 - i for i in range(size))
        return OrientedPermutation(Permutation(images), (False,) * size)
    if kind is Shuffle.TURN_OVER:
        images = tuple(size - 1 - i for i in range(size))
        return OrientedPermutation(Permutation(images), (True,) * size)
    raise ShuffleLabError(f"unknown shuffle kind {kind!r}")


@lru_cache(maxsize=None)
def _element(kind: Shuffle, size: int, inverted: bool) -> OrientedPermutation:
    base = _base_element(kind, size)
    return base.inverse() if inverted else base


def element(step: StepLike, size: int) -> OrientedPermutation:
    """The oriented permutation of one shuffle at the given deck size."""
    step = as_step(step)
    return _element(step.shuffle, size, step.inverted)


def word_element(word: WordLike, size: int) -> OrientedPermutation:
    """Fold a word into a single oriented permutation, left to right."""
    result = OrientedPermutation.identity(size)
    for step in as_word(word):
        result = result.then(element(step, size))
    return result


def apply_word(word: WordLike, deck: Deck) -> Deck:
    """Apply a word of shuffles to a deck, left to right."""
    for step in as_word(word):
        deck = apply_oriented(element(step, deck.size), deck)
    return deck


def element_order(word: WordLike, size: int) -> int:
    """Least number of repetitions restoring order and orientation."""
    return word_element(word, size).order()


def inout_text(word: WordLike) -> str:
    """Render an in/out word generically, e.g. ``in, out, out``."""
    parts = []
    for step in as_word(word):
        if step.inverted or step.shuffle not in _IN_KINDS | _OUT_KINDS:
            raise ShuffleLabError(f"not an in/out shuffle: {step}")
        parts.append("in" if step.shuffle in _IN_KINDS else "out")
    return ", ".join(parts)


def route_top_to(target: int, size: int, family: Family) -> Word:
    """A word of in/out shuffles moving the top card to ``target``.

    Write the target in binary and read it left to right, 1 for in and
    0 for out.  The card rides the top half the whole way, where faro
    and horseshoe shuffles move cards identically, so the same pattern
    works for both families.
    """
    _check_size(size)
    if family not in (Family.FARO, Family.HORSESHOE):
        raise ShuffleLabError(f"routing is defined for faro/horseshoe, not {family}")
    if not 0 <= target < size:
        raise ShuffleLabError(f"target {target} out of range for size {size}")
    in_kind, out_kind = family_in_out(family)
    if target == 0:
        return ()
    word = tuple(
        Step(in_kind if bit == "1" else out_kind) for bit in bin(target)[2:]
    )
    pos = 0
    for step in word:
        pos = element(step, size).perm.images[pos]
    if pos != target:  # pragma: no cover - guards the binary-routing argument
        raise ShuffleLabError(f"routing failed: reached {pos}, wanted {target}")
    return word


def horseshoe_position_step(k: int, pos: str, kind: Shuffle) -> str:
    """Where one horseshoe shuffle sends a card of a 2^k deck, in bits.

    The position is a k-bit string, leading bit 1 meaning the bottom
    half.  Both shuffles rotate the bits left; a card from the bottom
    half additionally has the first k-1 bits of the result complemented,
    and an in shuffle complements the final bit.
    """
    if kind not in (Shuffle.HORSE_IN, Shuffle.HORSE_OUT):
        raise ShuffleLabError(f"expected a horseshoe shuffle, got {kind}")
    if k < 1:
        raise ShuffleLabError(f"k must be >= 1, got {k}")
    if len(pos) != k or any(c not in "01" for c in pos):
        raise ShuffleLabError(f"position must be a {k}-bit string, got {pos!r}")
    x = int(pos, 2)
    mask = (1 << k) - 1
    bottom = bool(x >> (k - 1))
    rotated = ((x << 1) & mask) | (x >> (k - 1))
    if bottom:
        rotated ^= mask ^ 1
    if kind is Shuffle.HORSE_IN:
        rotated ^= 1
    return format(rotated, f"0{k}b")


def is_staystack(deck: Deck) -> bool:
    """Whether mirrored positions hold complementary cards.

    Cards are read as points modulo the pairing: a face-up card stands
    for the complement of its label.  Positions j and size-1-j must then
    hold points that differ by half the size.
    """
    size = deck.size
    half = size // 2
    points = [(c.label + half * c.face_up) % size for c in deck.cards]
    return all(
        points[size - 1 - j] == (points[j] + half) % size for j in range(half)
    )
