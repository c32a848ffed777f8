"""Shortest shuffle sequences: routing down and solving the way back up.

Moving the *top* card to position i is easy: write i in binary, read 1
as in and 0 as out.  Moving the card at position i back to the top has
no known general formula; a breadth-first search over the position
graph finds every minimal sequence.  For ten cards it lists
every answer, and for power-of-two decks k shuffles always suffice.
"""

from shufflelab import Deck, Family, apply_word, inout_text, route_top_to, shortest_words
from shufflelab.elmsley import second_position_cycle

print("routing the top card of a 52-card deck to position 20 (binary 10100):")
word = route_top_to(20, 52, Family.FARO)
print("  ", inout_text(word))
deck = apply_word(word, Deck.identity(52))
print("   card 0 lands at position", deck.labels().index(0))
print()

print("all shortest horseshoe sequences moving card i to the top (10 cards):")
for position in range(1, 10):
    solutions = shortest_words(10, Family.HORSESHOE, position, 0)
    print(f"  {position}: " + "  or  ".join(inout_text(w) for w in solutions.words))
print()

print("for a 16-card deck every trip needs at most 4 shuffles:")
worst = max(
    shortest_words(16, Family.HORSESHOE, a, b).length
    for a in range(16)
    for b in range(16)
)
print("  worst case:", worst)
print()

print("why no fewer arrangements: with the top card parked by out shuffles,")
print("position 1 cycles through", second_position_cycle(16), "and back.")
