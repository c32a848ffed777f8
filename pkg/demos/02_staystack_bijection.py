"""Why flip shuffling 2n cards is faro shuffling 4n cards.

An oriented deck of 2n cards expands to a 4n-card deck in "stay stack":
mirrored positions always hold the two faces of one card.  Faro
shuffles preserve stay stack, and the expansion turns every flip
shuffle into the faro shuffle of the doubled deck.  The script shows
the correspondence commuting, round after round.
"""

from shufflelab import (
    Deck,
    Shuffle,
    apply_word,
    contract_staystack,
    expand_staystack,
    is_staystack,
)

small = Deck.identity(10)
big = expand_staystack(small)
print("oriented deck:  ", small)
print("expanded (4n):  ", big)
print("stay stack?     ", is_staystack(big))
print()

for round_number in range(1, 5):
    small = apply_word(Shuffle.FLIP_IN, small)
    big = apply_word(Shuffle.FARO_IN, big)
    assert is_staystack(big)
    assert contract_staystack(big) == small
    print(f"round {round_number}:")
    print("  flip side:  ", small)
    print("  faro side:  ", big)

print()
print("contracting the faro side always recovers the flip side, so the")
print("two shuffle groups are the same group in disguise.")
