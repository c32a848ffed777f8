import random
from itertools import permutations

import pytest

from shufflelab.deck import (
    Card,
    Deck,
    NotStayStackError,
    OrientedPermutation,
    Permutation,
    ShuffleLabError,
    apply_oriented,
    contract_staystack,
    expand_staystack,
)
from shufflelab.shuffles import Shuffle, element


def random_deck(rng, size):
    labels = list(range(size))
    rng.shuffle(labels)
    return Deck(tuple(Card(x, rng.random() < 0.5) for x in labels))


def random_oriented(rng, m):
    images = list(range(m))
    rng.shuffle(images)
    flips = tuple(rng.random() < 0.5 for _ in range(m))
    return OrientedPermutation(Permutation(tuple(images)), flips)


def all_oriented_decks(size):
    for perm in permutations(range(size)):
        for mask in range(1 << size):
            yield Deck(tuple(Card(x, bool(mask >> i & 1)) for i, x in enumerate(perm)))


# -- identity_deck ------------------------------------------------------------


def test_identity_deck_small():
    assert Deck.identity(4).cards == (Card(0), Card(1), Card(2), Card(3))
    assert Deck.identity(10).labels() == tuple(range(10))
    assert not any(c.face_up for c in Deck.identity(10))


def test_identity_deck_rejects_bad_sizes():
    for size in (3, 0, -2, 7):
        with pytest.raises(ShuffleLabError):
            Deck.identity(size)


def test_deck_validates_labels():
    with pytest.raises(ShuffleLabError):
        Deck((Card(0), Card(0)))
    with pytest.raises(ShuffleLabError):
        Deck((Card(0), Card(2)))


def test_deck_size_cap():
    with pytest.raises(ShuffleLabError):
        Deck.identity((1 << 16) + 2)


# -- apply_oriented -----------------------------------------------------------


def test_apply_identity_is_noop():
    rng = random.Random(1)
    for size in (2, 6, 10):
        d = random_deck(rng, size)
        assert apply_oriented(OrientedPermutation.identity(size), d) == d


def test_apply_in_flip_shuffle_matches_worked_row():
    d = Deck.identity(10)
    out = apply_oriented(element(Shuffle.FLIP_IN, 10), d)
    assert str(out) == "~9 0 ~8 1 ~7 2 ~6 3 ~5 4"


def test_apply_then_inverse_restores():
    rng = random.Random(2)
    for size in (2, 4, 10, 14):
        for _ in range(25):
            op = random_oriented(rng, size)
            d = random_deck(rng, size)
            assert apply_oriented(op.inverse(), apply_oriented(op, d)) == d


def test_apply_size_mismatch():
    with pytest.raises(ShuffleLabError):
        apply_oriented(OrientedPermutation.identity(4), Deck.identity(6))


# -- permutation algebra ------------------------------------------------------


def test_permutation_rejects_non_bijection():
    with pytest.raises(ShuffleLabError):
        Permutation((0, 0, 1))


def test_inverses_exhaustive_small():
    # every oriented permutation on sizes 2 and 4
    for m in (2, 4):
        for images in permutations(range(m)):
            for mask in range(1 << m):
                op = OrientedPermutation(
                    Permutation(images), tuple(bool(mask >> i & 1) for i in range(m))
                )
                assert op.then(op.inverse()).is_identity()
                assert op.inverse().then(op).is_identity()


def test_inverses_randomized():
    rng = random.Random(3)
    for m in (6, 12, 20):
        for _ in range(50):
            op = random_oriented(rng, m)
            assert op.then(op.inverse()).is_identity()


def test_associativity_randomized():
    rng = random.Random(4)
    for m in (2, 4, 6, 12):
        for _ in range(200):
            a, b, c = (random_oriented(rng, m) for _ in range(3))
            assert a.then(b).then(c) == a.then(b.then(c))


def test_point_embedding_is_homomorphism():
    rng = random.Random(5)
    for m in (4, 6, 10):
        seen = set()
        for _ in range(100):
            a = random_oriented(rng, m)
            b = random_oriented(rng, m)
            assert a.then(b).to_point_permutation() == a.to_point_permutation().then(
                b.to_point_permutation()
            )
            seen.add((a, a.to_point_permutation()))
        # injective on the sample: distinct ops, distinct images
        assert len({img for _, img in seen}) == len({op for op, _ in seen})


def test_oriented_order_counts_flipped_cycles():
    swap_flip = OrientedPermutation(Permutation((1, 0)), (False, True))
    assert swap_flip.order() == 4
    assert OrientedPermutation.identity(6).order() == 1


# -- stay-stack expansion -----------------------------------------------------


def test_expand_identity_deck_matches_worked_example():
    got = expand_staystack(Deck.identity(10))
    assert got.labels() == (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10)
    assert not any(c.face_up for c in got)


def test_expand_smallest_case():
    got = expand_staystack(Deck.identity(2))
    assert got.labels() == (0, 1, 3, 2)


def test_contract_worked_row():
    # the 20-card arrangement after one in faro of the expanded sorted deck
    expanded = expand_staystack(Deck.identity(10))
    shuffled = apply_oriented(element(Shuffle.FARO_IN, 20), expanded)
    assert shuffled.labels() == (19, 0, 18, 1, 17, 2, 16, 3, 15, 4, 14, 5, 13, 6, 12, 7, 11, 8, 10, 9)
    assert str(contract_staystack(shuffled)) == "~9 0 ~8 1 ~7 2 ~6 3 ~5 4"


def test_roundtrip_exhaustive_small_sizes():
    for size in (2, 4, 6):
        for deck in all_oriented_decks(size):
            assert contract_staystack(expand_staystack(deck)) == deck


def test_roundtrip_randomized():
    rng = random.Random(6)
    for size, trials in ((8, 2000), (12, 1000)):
        for _ in range(trials):
            deck = random_deck(rng, size)
            assert contract_staystack(expand_staystack(deck)) == deck


def test_contract_rejects_broken_pairing():
    expanded = expand_staystack(Deck.identity(6))
    cards = list(expanded.cards)
    # swap one mirrored pair's partner with an unrelated slot
    cards[0], cards[1] = cards[1], cards[0]
    with pytest.raises(NotStayStackError):
        contract_staystack(Deck(tuple(cards)))


def test_contract_rejects_bad_sizes_and_faces():
    with pytest.raises(NotStayStackError):
        contract_staystack(Deck.identity(6))  # size not a multiple of 4
    expanded = expand_staystack(Deck.identity(4))
    flipped = Deck(tuple(c.turned() if i == 0 else c for i, c in enumerate(expanded)))
    with pytest.raises(ShuffleLabError):
        contract_staystack(flipped)


# -- text format --------------------------------------------------------------


def test_deck_text_roundtrip():
    rng = random.Random(7)
    for size in (2, 10, 16):
        for _ in range(50):
            deck = random_deck(rng, size)
            assert Deck.parse(str(deck)) == deck


def test_deck_parse_exact_grammar():
    assert Deck.parse("~9 0 ~8 1 ~7 2 ~6 3 ~5 4").size == 10
    assert Deck.parse("0 1 2 3\n") == Deck.identity(4)  # trailing whitespace ok
    for bad in ("", "0  1 2 3", "0,1,2,3", "0 1 2 x", "~~0 1"):
        with pytest.raises(ShuffleLabError):
            Deck.parse(bad)
