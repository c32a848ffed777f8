"""Special orderings of 2^k decks and the outside-in trick.

Label the cards of a 2^k deck with their binary values.  A *special
ordering* grows from a single starting card by repeated doubling: at
every stage the existing block is copied and the copy is rewritten by
one operation from the cycle

    flip bit 0 -> flip bit 1 -> ... -> flip bit k-1 -> complement ->

using k consecutive operations of those k+1 (one is skipped).  The
skipped operation is recoverable from the two end cards: the whole
run of k operations xors to it, so the ends differ in exactly one bit
or are full complements.

These orderings are exactly the arrangements reachable from the sorted
deck by horseshoe shuffles, and the family is also closed under milk
and Monge shuffles and deck reversal.  That closure powers the trick:
let an audience shuffle a 2^k packet with any mix of those moves, deal
it in a row, reveal the two end cards, and everything in between is
forced, working from the outside in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .deck import Deck, ShuffleLabError
from .shuffles import Shuffle, Word, WordLike, apply_word, as_word

MAX_K = 16

#: Shuffles the audience may use without breaking specialness.
TRICK_ALPHABET = frozenset(
    {
        Shuffle.HORSE_IN,
        Shuffle.HORSE_OUT,
        Shuffle.MILK,
        Shuffle.MILK_SWAP,
        Shuffle.MONGE_UNDER,
        Shuffle.MONGE_OVER,
        Shuffle.REVERSE,
    }
)


class InvalidEndsError(ShuffleLabError):
    """End cards differ by neither one bit nor a full complement."""


class ClosureViolationError(ShuffleLabError):
    """A trick-alphabet word left the special orderings (engine bug)."""


@dataclass(frozen=True)
class DiagramOp:
    """One doubling operation: flip a single bit, or complement all bits.

    ``bit`` is None for the complement.  Both are involutions.
    """

    bit: Optional[int]

    @classmethod
    def flip_bit(cls, j: int) -> "DiagramOp":
        if j < 0:
            raise ShuffleLabError(f"bit index must be >= 0, got {j}")
        return cls(j)

    @classmethod
    def complement(cls) -> "DiagramOp":
        return cls(None)

    def mask(self, k: int) -> int:
        return (1 << k) - 1 if self.bit is None else 1 << self.bit

    def apply(self, value: int, k: int) -> int:
        return value ^ self.mask(k)

    @classmethod
    def parse(cls, token: str) -> "DiagramOp":
        text = token.strip().lower()
        if text == "complement":
            return cls.complement()
        if text.startswith("bit") and text[3:].isdigit():
            return cls.flip_bit(int(text[3:]))
        raise ShuffleLabError(f"unknown diagram operation {token!r}")

    def __str__(self) -> str:
        return "complement" if self.bit is None else f"bit{self.bit}"


def diagram_cycle(k: int) -> tuple[DiagramOp, ...]:
    """The k+1 operations in cycle order: bits 0..k-1, then complement."""
    return tuple(DiagramOp.flip_bit(j) for j in range(k)) + (DiagramOp.complement(),)


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise ShuffleLabError(f"k must be in 1..{MAX_K}, got {k}")


def _check_value(value: int, k: int, what: str) -> None:
    if not 0 <= value < 1 << k:
        raise ShuffleLabError(f"{what} {value} out of range for k={k}")


@dataclass(frozen=True)
class SpecialOrdering:
    """A doubling-generated ordering of all 2^k values."""

    k: int
    first: int
    start: DiagramOp
    values: tuple[int, ...]

    def skipped(self) -> DiagramOp:
        """The one cycle operation the generation never used."""
        cycle = diagram_cycle(self.k)
        return cycle[(cycle.index(self.start) - 1) % len(cycle)]

    def display(self) -> str:
        return " ".join(card_name(v, self.k) for v in self.values)


def generate(k: int, first: int, start: DiagramOp) -> SpecialOrdering:
    """Grow the ordering from ``first`` using k cycle ops from ``start``."""
    _check_k(k)
    _check_value(first, k, "first card")
    cycle = diagram_cycle(k)
    if start not in cycle:
        raise ShuffleLabError(f"operation {start} is not valid for k={k}")
    index = cycle.index(start)
    values = [first]
    for stage in range(k):
        op = cycle[(index + stage) % len(cycle)]
        values.extend(op.apply(v, k) for v in values[:])
    return SpecialOrdering(k, first, start, tuple(values))


def recognize(values: Sequence[int]) -> Optional[SpecialOrdering]:
    """The unique (first, start) generating ``values``, or None.

    The first value is forced, and the second value pins the starting
    operation, so a single regeneration settles it.
    """
    count = len(values)
    if count < 2 or count & (count - 1):
        raise ShuffleLabError(f"length must be a power of two >= 2, got {count}")
    k = count.bit_length() - 1
    if sorted(values) != list(range(count)):
        raise ShuffleLabError("values must be the distinct k-bit values")
    start = _op_from_mask(values[0] ^ values[1], k)
    if start is None:
        return None
    candidate = generate(k, values[0], start)
    return candidate if candidate.values == tuple(values) else None


def _op_from_mask(mask: int, k: int) -> Optional[DiagramOp]:
    if mask == (1 << k) - 1 and k > 1:
        return DiagramOp.complement()
    if mask and mask & (mask - 1) == 0:
        return DiagramOp.flip_bit(mask.bit_length() - 1)
    return None


def predict_from_ends(k: int, left: int, right: int) -> SpecialOrdering:
    """Reconstruct a special ordering from its two end cards.

    The ends differ by the skipped operation, so the generation starts
    with the operation after it in the cycle.  Swapping the ends yields
    the same ordering read backwards.
    """
    _check_k(k)
    _check_value(left, k, "left end")
    _check_value(right, k, "right end")
    if left == right:
        raise InvalidEndsError("end cards must differ")
    skipped = _op_from_mask(left ^ right, k)
    if skipped is None:
        raise InvalidEndsError(
            f"ends {left} and {right} differ by neither one bit nor a complement"
        )
    cycle = diagram_cycle(k)
    start = cycle[(cycle.index(skipped) + 1) % len(cycle)]
    return generate(k, left, start)


def card_name(value: int, k: int) -> str:
    """Trick display: card 0 shows as the deck-size card, card 1 as the ace."""
    if value == 0:
        return str(1 << k)
    if value == 1:
        return "A"
    return str(value)


@dataclass(frozen=True)
class TrickTranscript:
    """Record of one outside-in performance: reveals, then the ordering."""

    k: int
    word: Word
    values: tuple[int, ...]
    ordering: SpecialOrdering
    lines: tuple[str, ...]

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "word": [str(step) for step in self.word],
            "first": self.ordering.first,
            "start": str(self.ordering.start),
            "skipped": str(self.ordering.skipped()),
            "values": list(self.values),
            "display": self.ordering.display(),
        }


def trick_session(
    k: int, word: WordLike, initial: Optional[Sequence[int]] = None
) -> TrickTranscript:
    """Shuffle a 2^k packet with trick-legal moves and predict the layout.

    Applies the word to the sorted packet (or ``initial``, which must
    itself be special), checks the result is still special, and checks
    the outside-in prediction from the two end cards reproduces it.
    """
    _check_k(k)
    size = 1 << k
    steps = as_word(word)
    for step in steps:
        if step.shuffle not in TRICK_ALPHABET:
            raise ShuffleLabError(f"{step.shuffle} is not a trick-legal shuffle")
    if initial is None:
        deck = Deck.identity(size)
    else:
        deck = Deck(tuple((v, False) for v in initial))
        if recognize(deck.labels()) is None:
            raise ShuffleLabError("initial arrangement is not special")
    final = apply_word(steps, deck).labels()
    ordering = recognize(final)
    if ordering is None:
        raise ClosureViolationError(
            f"word {[str(s) for s in steps]} left the special orderings"
        )
    predicted = predict_from_ends(k, final[0], final[-1])
    if predicted.values != final:
        raise ClosureViolationError("outside-in prediction failed to match")
    lines = []
    for step in range(size):
        pos = step // 2 if step % 2 == 0 else size - 1 - step // 2
        lines.append(f"position {pos}: {card_name(final[pos], k)}")
    lines.append(f"ordering: {ordering.display()}")
    return TrickTranscript(k, steps, final, ordering, tuple(lines))
