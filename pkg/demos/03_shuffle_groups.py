"""How many arrangements can perfect shuffles reach?

For each family the in and out shuffles generate a permutation group;
its order counts the reachable deck arrangements.  Exact orders come
from a stabilizer chain and are checked against the closed-form case
tables, including the famous exceptional decks (12 and 24 for faro,
6 and 12 for horseshoe) and the tiny power-of-two horseshoe groups.
"""

from shufflelab import Family, group_order, tuple_transitivity_order, verify_theorem
from shufflelab.groups import family_generators

for family, sizes in (
    (Family.FARO, [8, 10, 12, 14, 16, 20, 24]),
    (Family.HORSESHOE, [4, 6, 8, 10, 12, 14, 16]),
    (Family.FLIP, [4, 6, 8, 10, 12]),
):
    print(f"{family.value} shuffle groups:")
    for line in (report.line() for report in verify_theorem(family, sizes)):
        print(" ", line)
    print()

print("horseshoe on 12 cards is sharply 5-transitive: the first five cards")
print("can be anything, and they force the rest:")
generators = family_generators(Family.HORSESHOE, 12)
orbit = tuple_transitivity_order(generators, 5)
print(f"  orbit of a 5-tuple: {orbit} = 12*11*10*9*8")
print(f"  group order:        {group_order(Family.HORSESHOE, 12)}")

print()
print("horseshoe on 6 cards: the first three cards are free:")
generators = family_generators(Family.HORSESHOE, 6)
print(f"  orbit of a 3-tuple: {tuple_transitivity_order(generators, 3)} = 6*5*4")
print(f"  group order:        {group_order(Family.HORSESHOE, 6)}")
