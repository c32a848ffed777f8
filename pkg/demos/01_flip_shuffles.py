"""Flip shuffling a ten-card deck, step by step.

A flip shuffle cuts the deck in half, turns the bottom half face-up,
and riffles the halves together perfectly.  This script walks the
worked ten-card example: the in flip shuffle round by round, the
eighteen-step period of the out flip shuffle, and the easy-to-perform
inverse dealing procedure.
"""

from shufflelab import Deck, Shuffle, Step, apply_word, element_order

deck = Deck.identity(10)
print("start:          ", deck)

state = deck
for round_number in range(1, 5):
    state = apply_word(Shuffle.FLIP_IN, state)
    print(f"in flip x{round_number}:      ", state)

print()
period = element_order(Shuffle.FLIP_OUT, 10)
print(f"the out flip shuffle on 10 cards has period {period}:")
state = deck
for round_number in range(1, period + 1):
    state = apply_word(Shuffle.FLIP_OUT, state)
print(f"after {period} out flips the deck reads:", state)
assert state == deck

print()
print("inverse out flip (deal two piles, turning each card; turn pile one")
print("onto pile two) undoes the shuffle:")
shuffled = apply_word(Shuffle.FLIP_OUT, deck)
undone = apply_word(Step(Shuffle.FLIP_OUT, inverted=True), shuffled)
print("shuffled:       ", shuffled)
print("dealt back:     ", undone)
assert undone == deck
