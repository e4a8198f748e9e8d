from fractions import Fraction

import pytest

from incgen.counting import (
    CountReport,
    count_by_enumeration,
    count_gen,
    count_gen_simple,
    decimal_string,
    falling_factorial,
    probability_closed_form,
    radical_data,
)
from incgen.errors import InvalidShape, TooLarge
from incgen.incidence import IncMatrix, additive_span, all_elements, find_inverse
from incgen.poset import all_posets, parse_poset, standard_poset
from incgen.rings import parse_ring


def test_falling_factorial():
    assert falling_factorial(4, 2) == 12
    assert falling_factorial(4, 4) == 24
    assert falling_factorial(4, 5) == 0
    assert falling_factorial(7, 0) == 1


def test_count_gen_simple_examples():
    assert count_gen_simple(2, 3, 1, 1, 2, 2) == 24
    assert count_gen_simple(2, 3, 1, 1, 2, 1) == 0
    for k, q, m in [(1, 2, 1), (2, 3, 2), (1, 5, 3)]:
        assert count_gen_simple(1, 1, 0, k, q, m) == q ** (k * k * m)


def test_zero_to_the_zero_is_one():
    # k = m = 1, c = 0: the (Q - q)^c factor is 0^0
    assert count_gen_simple(2, 2, 0, 1, 2, 1) == 2
    assert count_gen_simple(3, 3, 0, 1, 3, 1) == 6


def test_count_gen_simple_rejects_bad_shape():
    with pytest.raises(InvalidShape):
        count_gen_simple(3, 3, 1, 1, 2, 1)
    with pytest.raises(InvalidShape):
        count_gen_simple(2, 3, 1, 1, 2, 0)


@pytest.mark.parametrize(
    "poset, ring, m, count, total, prob",
    [
        (standard_poset("antichain", 2), "Z/4", 1, 8, 16, Fraction(1, 2)),
        (standard_poset("chain", 2), "GF(2)", 2, 24, 64, Fraction(3, 8)),
        (standard_poset("antichain", 2), "GF(2)xGF(3)", 1, 12, 36, Fraction(1, 3)),
        (standard_poset("chain", 2), "M(2,GF(2))", 1, 3360, 4096, Fraction(105, 128)),
    ],
)
def test_count_gen_examples(poset, ring, m, count, total, prob):
    R = parse_ring(ring)
    rep = count_gen(poset, R, m)
    assert (rep.count, rep.total, rep.probability) == (count, total, prob)
    assert probability_closed_form(poset, R, m) == prob


def test_closed_form_chain2_gf2():
    assert probability_closed_form(standard_poset("chain", 2), parse_ring("GF(2)"), 2) == Fraction(3, 8)


@pytest.mark.parametrize("ring", ["GF(2)", "Z/9", "M(2,GF(3))", "GF(2)xGF(5)"])
def test_closed_form_n1(ring):
    p = standard_poset("chain", 1)
    for m in (1, 2, 3):
        assert probability_closed_form(p, parse_ring(ring), m) == 1


def test_enumeration_examples(chain2, antichain2, gf2):
    assert count_by_enumeration(chain2, gf2, 2) == 24
    assert count_by_enumeration(antichain2, gf2, 1) == 2
    assert count_by_enumeration(standard_poset("chain", 1), parse_ring("GF(3)"), 1) == 3


def test_enumeration_guard(chain2):
    with pytest.raises(TooLarge):
        count_by_enumeration(chain2, parse_ring("GF(9)"), 2)


def test_enumeration_with_workers(chain2, gf2):
    assert count_by_enumeration(chain2, gf2, 2, workers=2) == 24


FORMULA_GRID = [
    (p, ring, m)
    for n in (1, 2, 3)
    for p in all_posets(n)
    for ring in ("GF(3)", "Z/4", "GF(2)xGF(3)", "GF(4)", "Z/9")
    for m in (1, 2)
    if parse_ring(ring).size ** (p.rho * m) <= 2 ** 13
]


@pytest.mark.parametrize("p, ring, m", FORMULA_GRID, ids=str)
def test_formula_matches_enumeration(p, ring, m):
    R = parse_ring(ring)
    rep = count_gen(p, R, m)
    assert rep.count == count_by_enumeration(p, R, m)
    assert rep.probability == probability_closed_form(p, R, m)
    assert (rep.count > 0) == (m >= rep.mgen)


@pytest.mark.parametrize("poset", [standard_poset("chain", 2), standard_poset("antichain", 2),
                                   standard_poset("chain", 3), parse_poset("n 3\nrel 1 3\nrel 2 3")])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_probability_independent_of_radical(poset, p):
    for m in (1, 2, 3):
        base = count_gen(poset, parse_ring(f"GF({p})"), m).probability
        for e in (1, 2, 3):
            assert count_gen(poset, parse_ring(f"Z/{p ** e}"), m).probability == base


@pytest.mark.parametrize("poset", all_posets(3) + [standard_poset("chain", 5)])
@pytest.mark.parametrize("ring", ["GF(2)", "GF(3)", "M(2,GF(2))", "GF(2)xGF(3)", "Z/8"])
def test_probability_monotone_in_m(poset, ring):
    R = parse_ring(ring)
    probs = [count_gen(poset, R, m).probability for m in range(1, 5)]
    assert probs == sorted(probs)
    assert all(0 <= x <= 1 for x in probs)


def test_count_report_json():
    rep = count_gen(standard_poset("chain", 2), parse_ring("GF(2)"), 2)
    js = rep.to_json(precision=4)
    assert js["count"] == "24" and js["total"] == "64"
    assert js["probability"] == {"num": "3", "den": "8"}
    assert js["probability_decimal"] == "0.3750"
    assert isinstance(rep, CountReport)


def test_big_counts_are_exact():
    rep = count_gen(standard_poset("chain", 6), parse_ring("M(3,GF(97))"), 4)
    assert rep.count * rep.probability.denominator == rep.total * rep.probability.numerator
    assert str(rep.count) == rep.to_json()["count"]


def test_decimal_string():
    assert decimal_string(Fraction(1, 3), 3) == "0.333"
    assert decimal_string(Fraction(2, 3), 2) == "0.67"
    assert decimal_string(Fraction(1), 0) == "1"
    assert decimal_string(Fraction(1, 8), 2) == "0.13"


def test_radical_examples(chain2, gf2):
    rd = radical_data(chain2, gf2)
    assert rd.size == 2 and rd.basis == [IncMatrix.unit(chain2, gf2, 0, 1)]
    assert radical_data(chain2, parse_ring("Z/4")).size == 16
    for n in (1, 3, 4):
        assert radical_data(standard_poset("antichain", n), parse_ring("GF(5)")).size == 1


@pytest.mark.parametrize(
    "poset, ring",
    [
        (standard_poset("chain", 2), "Z/4"),
        (standard_poset("chain", 2), "GF(3)"),
        (parse_poset("n 3\nrel 1 3\nrel 2 3"), "GF(2)"),
        (standard_poset("chain", 3), "GF(2)"),
        (standard_poset("antichain", 2), "Z/8"),
        (standard_poset("chain", 2), "GF(2)xGF(3)"),
    ],
)
def test_radical_is_quasi_regular_ideal(poset, ring):
    R = parse_ring(ring)
    rd = radical_data(poset, R)
    span = additive_span(poset, R, rd.basis)
    assert span.size == rd.size
    A = list(all_elements(poset, R))
    J = [x for x in A if x in span]
    assert len(J) == rd.size
    one = IncMatrix.identity(poset, R)
    for x in J:
        assert find_inverse(one - x) is not None
        for a in A:
            assert a * x in span and x * a in span
    quotient = 1
    for k, q in R.components:
        quotient *= q ** (k * k * poset.n)
    assert len(A) // rd.size == quotient
