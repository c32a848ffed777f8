import math
import random
import re

import pytest

from shufflelab.deck import Permutation, ShuffleLabError
from shufflelab.groups import (
    CapExceededError,
    NoClosedFormError,
    StabilizerChain,
    brute_force_order,
    closed_form_order,
    factored,
    family_generators,
    group_order,
    permutation_parity,
    schreier_sims,
    tuple_transitivity_order,
    verify_theorem,
)
from shufflelab.shuffles import Family, Shuffle, Step, element, word_element


def eval_factored(text):
    """Evaluate display factorizations like ``2^17 * 3^3 * 5 * 11`` or ``14!``."""
    expr = re.sub(r"(\d+)!", lambda m: str(math.factorial(int(m.group(1)))), text)
    expr = expr.replace("^", "**").replace("/", "//")
    return eval(expr, {"__builtins__": {}})


# -- stabilizer chain ---------------------------------------------------------


def test_empty_generators_give_trivial_group():
    chain = schreier_sims([], degree=5)
    assert chain.order == 1
    assert Permutation.identity(5) in chain


def test_single_cycle_gives_cyclic_group():
    for m in (3, 8, 12):
        cycle = Permutation(tuple((i + 1) % m for i in range(m)))
        assert schreier_sims([cycle]).order == m


def test_faro_generators_on_twelve_points():
    chain = schreier_sims(family_generators(Family.FARO, 12))
    assert chain.order == 2**9 * 3 * 5 == 7680


def test_chain_internal_consistency():
    for family, size in ((Family.FARO, 12), (Family.HORSESHOE, 10), (Family.FLIP, 6)):
        chain = schreier_sims(family_generators(family, size))
        chain.verify()
        assert chain.order == math.prod(chain.orbit_sizes())
        for gen in chain.strong_generators():
            assert chain.sift(gen).is_identity()
            assert gen in chain


def test_membership_accepts_products_and_rejects_odd():
    rng = random.Random(21)
    for size in (8, 12):
        gens = family_generators(Family.HORSESHOE, size)
        chain = schreier_sims(gens)
        for _ in range(20):
            product = Permutation.identity(size)
            for _ in range(rng.randint(0, 5)):
                product = product.then(rng.choice(gens))
            assert product in chain
        transposition = Permutation(tuple([1, 0] + list(range(2, size))))
        assert permutation_parity(transposition) == "odd"
        assert transposition not in chain


def test_mismatched_generator_degrees_rejected():
    with pytest.raises(ShuffleLabError):
        schreier_sims([Permutation((1, 0)), Permutation((0, 1, 2))])


# -- brute-force oracle equivalence -------------------------------------------


def test_chain_matches_enumeration():
    cases = [(Family.FARO, 12), (Family.HORSESHOE, 12), (Family.FLIP, 4), (Family.FLIP, 6)]
    cases += [(Family.HORSESHOE, 1 << k) for k in range(2, 7)]
    for family, size in cases:
        gens = family_generators(family, size)
        assert schreier_sims(gens).order == brute_force_order(gens)


def test_brute_force_respects_limit():
    gens = family_generators(Family.HORSESHOE, 10)  # order 10!
    with pytest.raises(CapExceededError):
        brute_force_order(gens, limit=1000)


# -- group orders -------------------------------------------------------------


def test_group_order_values():
    assert group_order(Family.HORSESHOE, 12) == 95040
    assert group_order(Family.HORSESHOE, 6) == 120
    assert group_order(Family.HORSESHOE, 8) == 32
    assert group_order(Family.HORSESHOE, 4) == 12
    assert group_order(Family.FARO, 10) == 1920


def test_group_order_respects_size_cap(monkeypatch):
    with pytest.raises(CapExceededError):
        group_order(Family.HORSESHOE, 42)
    monkeypatch.setenv("SHUFFLELAB_SIZE_CAP", "10")
    with pytest.raises(CapExceededError):
        group_order(Family.HORSESHOE, 12)
    monkeypatch.setenv("SHUFFLELAB_SIZE_CAP", "12")
    assert group_order(Family.HORSESHOE, 12) == 95040


# -- closed forms -------------------------------------------------------------


def test_closed_form_faro():
    assert closed_form_order(Family.FARO, 24).value == 194641920
    assert closed_form_order(Family.FARO, 24).factored == "2^17 * 3^3 * 5 * 11"
    assert closed_form_order(Family.FARO, 12).value == 7680
    assert closed_form_order(Family.FARO, 16) == (64, "2n = 2^k", "4 * 2^4")
    assert closed_form_order(Family.FARO, 20).value == math.factorial(10) * 2**10
    assert closed_form_order(Family.FARO, 10).value == 1920
    # smallest size reaching the n = 0 (mod 4) formula: 16, 24, 32 are all
    # powers of two or exceptional
    assert closed_form_order(Family.FARO, 40).value == math.factorial(20) * 2**18


def test_closed_form_horseshoe():
    assert closed_form_order(Family.HORSESHOE, 10).value == 3628800
    assert closed_form_order(Family.HORSESHOE, 16).value == 80
    assert closed_form_order(Family.HORSESHOE, 6).value == 120
    assert closed_form_order(Family.HORSESHOE, 14).value == math.factorial(14)
    assert closed_form_order(Family.HORSESHOE, 20).value == math.factorial(20) // 2


def test_closed_form_flip_defers_to_faro():
    flip = closed_form_order(Family.FLIP, 10)
    assert flip.value == closed_form_order(Family.FARO, 20).value == math.factorial(10) * 2**10
    assert "Faro(4n)" in flip.case


def test_closed_form_refuses_tiny_sizes():
    with pytest.raises(NoClosedFormError):
        closed_form_order(Family.FARO, 2)
    with pytest.raises(NoClosedFormError):
        closed_form_order(Family.HORSESHOE, 2)


def test_closed_form_factored_strings_remultiply():
    for family in Family:
        for size in (4, 6, 8, 10, 12, 14, 16, 20, 24):
            form = closed_form_order(family, size)
            assert eval_factored(form.factored) == form.value


def test_factored_display():
    assert factored(95040) == "2^6 * 3^3 * 5 * 11"
    assert factored(1) == "1"
    assert factored(7680) == "2^9 * 3 * 5"
    assert eval_factored(factored(3715891200)) == 3715891200


# -- theorem verification harness ---------------------------------------------


def test_verify_horseshoe_table():
    reports = verify_theorem(Family.HORSESHOE, [4, 6, 8, 10, 12, 14, 16])
    assert all(r.match for r in reports)
    assert [r.computed for r in reports] == [
        12, 120, 32, 3628800, 95040, math.factorial(14), 80,
    ]


def test_verify_faro_table():
    reports = verify_theorem(Family.FARO, [8, 10, 12, 14, 16, 20, 24])
    assert all(r.match for r in reports)
    by_size = {r.size: r for r in reports}
    assert by_size[12].computed == 2**9 * 3 * 5
    assert by_size[24].computed == 2**17 * 3**3 * 5 * 11
    assert by_size[24].factored == "2^17 * 3^3 * 5 * 11"


def test_verify_flip_matches_faro_at_double_size():
    reports = verify_theorem(Family.FLIP, [4, 6, 8, 10, 12])
    assert all(r.match for r in reports)
    for report in reports:
        assert report.computed == group_order(Family.FARO, 2 * report.size)


def test_verify_propagates_refusals_per_entry():
    reports = verify_theorem(Family.HORSESHOE, [2, 6, 99])
    assert [r.error is not None for r in reports] == [True, False, True]
    assert reports[1].match
    assert not reports[0].match


def test_report_rendering():
    report = verify_theorem(Family.HORSESHOE, [12])[0]
    line = report.line()
    assert "horse(12)" in line and "95040" in line and "match=yes" in line
    assert report.to_dict()["computed"] == 95040


# -- parity and transitivity --------------------------------------------------


def test_permutation_parity_basics():
    assert permutation_parity(Permutation.identity(6)) == "even"
    assert permutation_parity(Permutation((1, 0, 2))) == "odd"
    assert permutation_parity(element(Shuffle.HORSE_IN, 12).perm) == "even"


def test_horseshoe_words_stay_even_for_even_n():
    rng = random.Random(22)
    steps = [
        Step(kind, inv)
        for kind in (Shuffle.HORSE_IN, Shuffle.HORSE_OUT)
        for inv in (False, True)
    ]
    for _ in range(1000):
        word = [rng.choice(steps) for _ in range(rng.randint(0, 12))]
        assert permutation_parity(word_element(word, 20).perm) == "even"


def test_odd_horseshoe_element_exists_for_odd_n():
    # n = 5: one of the generators is itself odd
    parities = {
        permutation_parity(element(kind, 10).perm)
        for kind in (Shuffle.HORSE_IN, Shuffle.HORSE_OUT)
    }
    assert "odd" in parities


def test_tuple_transitivity_orders():
    gens12 = family_generators(Family.HORSESHOE, 12)
    assert tuple_transitivity_order(gens12, 5) == 12 * 11 * 10 * 9 * 8 == 95040
    assert tuple_transitivity_order(gens12, 5) == group_order(Family.HORSESHOE, 12)
    gens6 = family_generators(Family.HORSESHOE, 6)
    assert tuple_transitivity_order(gens6, 3) == 6 * 5 * 4 == 120
    assert tuple_transitivity_order(gens6, 0) == 1


def test_tuple_transitivity_node_cap():
    gens = family_generators(Family.HORSESHOE, 12)
    with pytest.raises(CapExceededError):
        tuple_transitivity_order(gens, 5, node_cap=100)
