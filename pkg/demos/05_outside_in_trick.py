"""The outside-in trick on an eight-card packet.

Stack eight cards as 8 A 2 3 4 5 6 7 (the eight plays the part of
zero, so the packet is really 0..7 in order).  Let the audience
horseshoe, milk, and Monge shuffle it and deal the pile out as often
as they like: every one of those moves preserves the doubling
structure of the ordering.  Once the packet is dealt in a row, the two
end cards betray the skipped doubling operation, and the performer
names everything in between, working from the outside in.
"""

import random

from shufflelab import Shuffle, Step, trick_session
from shufflelab.special import TRICK_ALPHABET, card_name

rng = random.Random(2026)
moves = [Step(kind, inv) for kind in sorted(TRICK_ALPHABET, key=lambda s: s.value) for inv in (False, True)]

word = [rng.choice(moves) for _ in range(12)]
print("audience shuffles:", ", ".join(str(step) for step in word))
print()

transcript = trick_session(3, word)
left, right = transcript.values[0], transcript.values[-1]
print(f"cards dealt in a row; the ends come up {card_name(left, 3)} and {card_name(right, 3)}.")
print(f"their values differ by the skipped operation ({transcript.ordering.skipped()}),")
print(f"so the run of operations starts at {transcript.ordering.start}:")
print()
print(transcript.render())
