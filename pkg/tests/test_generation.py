import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from incgen.counting import count_by_enumeration
from incgen.errors import WrongRingKind
from incgen.generation import check_criterion_simple, check_generates, log_lower_bound, mgen
from incgen.incidence import IncMatrix, all_elements, generates_bruteforce
from incgen.poset import all_posets, parse_poset, standard_poset
from incgen.rings import parse_ring


def dense(p, R, rows):
    return IncMatrix.from_dense(p, R, rows)


def test_simple_examples(chain2, gf2):
    S = [dense(chain2, gf2, [[1, 1], [0, 0]]), dense(chain2, gf2, [[0, 1], [0, 0]])]
    rep = check_criterion_simple(S)
    assert rep.verdict and rep.delta == [[1, 0], [0, 0]]
    assert rep.cover_ranks == {(1, 2): 2}
    assert generates_bruteforce(S)

    rep = check_criterion_simple([dense(chain2, gf2, [[0, 1], [0, 0]])])
    assert not rep.verdict and rep.failed_row_pair == (1, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_single_matrix_never_generates_chain2(chain2, q):
    R = parse_ring(f"GF({q})")
    for a in all_elements(chain2, R):
        assert not check_criterion_simple([a]).verdict


def test_wrong_ring_kind(antichain2):
    Z4 = parse_ring("Z/4")
    with pytest.raises(WrongRingKind):
        check_criterion_simple([dense(antichain2, Z4, [[1, 0], [0, 0]])])


def test_localz_examples(antichain2):
    Z4 = parse_ring("Z/4")
    good = [dense(antichain2, Z4, [[1, 0], [0, 0]])]
    bad = [dense(antichain2, Z4, [[2, 0], [0, 0]])]
    rep = check_generates(good)
    assert rep.verdict and rep.per_component[0].ring.spec == "GF(2)"
    assert generates_bruteforce(good)
    rep = check_generates(bad)
    assert not rep.verdict and rep.per_component[0].failed_row_pair == (1, 2)
    assert not generates_bruteforce(bad)


def test_product_example(antichain2):
    R = parse_ring("GF(2)xGF(3)")
    a = dense(antichain2, R, [[(1, 0), R.zero], [R.zero, (0, 1)]])
    rep = check_generates([a])
    assert rep.verdict
    assert [r.delta for r in rep.per_component] == [[[1], [0]], [[0], [1]]]
    assert generates_bruteforce([a])


def test_report_json_shape(antichain2):
    R = parse_ring("GF(2)xGF(3)")
    a = dense(antichain2, R, [[(1, 2), R.zero], [R.zero, (1, 2)]])
    js = check_generates([a]).to_json()
    assert js["verdict"] is False
    assert js["delta"] == [[[1, 2]], [[1, 2]]]
    assert [c["failed_row_pair"] for c in js["per_component"]] == [[1, 2], [1, 2]]


GRID_SMALL = [
    (p, ring, m)
    for n in (1, 2)
    for p in all_posets(n)
    for ring in ("GF(2)", "GF(3)", "GF(4)", "Z/4", "Z/8", "Z/9", "GF(2)xGF(3)", "GF(2)xGF(2)")
    for m in (1, 2)
    if parse_ring(ring).size ** (p.rho * m) <= 2 ** 14
]


@pytest.mark.parametrize("p, ring, m", GRID_SMALL, ids=lambda x: str(x))
def test_criterion_matches_oracle_small(p, ring, m):
    R = parse_ring(ring)
    els = list(all_elements(p, R))
    for tup in itertools.product(els, repeat=m):
        assert check_generates(tup).verdict == generates_bruteforce(tup), tup


@pytest.mark.parametrize("ring", ["M(2,GF(2))", "GF(8)", "GF(5)", "Z/27", "GF(2)xM(2,GF(2))"])
def test_criterion_matches_oracle_sampled(ring, vposet):
    R = parse_ring(ring)
    rng = random.Random(ring)
    els = list(R.elements())
    for p in (standard_poset("chain", 2), vposet):
        if R.size ** p.rho > 2 ** 20:
            continue
        hits = 0
        for _ in range(150):
            m = rng.choice((1, 2))
            tup = [IncMatrix(p, R, [rng.choice(els) for _ in range(p.rho)]) for _ in range(m)]
            verdict = check_generates(tup).verdict
            hits += verdict
            assert verdict == generates_bruteforce(tup)
        assert hits > 0


def random_tuple(draw, p, R, m):
    els = list(R.elements())
    return [IncMatrix(p, R, [els[draw(st.integers(0, len(els) - 1))] for _ in range(p.rho)]) for _ in range(m)]


posets3 = all_posets(3)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_scalar_translation_and_permutation(data):
    p = data.draw(st.sampled_from(posets3))
    R = parse_ring(data.draw(st.sampled_from(["GF(2)", "GF(3)", "Z/4", "GF(2)xGF(3)", "M(2,GF(2))"])))
    m = data.draw(st.integers(1, 3))
    tup = random_tuple(data.draw, p, R, m)
    verdict = check_generates(tup).verdict
    els = list(R.elements())
    shifted = [a + IncMatrix.scalar(p, R, els[data.draw(st.integers(0, len(els) - 1))]) for a in tup]
    assert check_generates(shifted).verdict == verdict
    perm = data.draw(st.permutations(tup))
    assert check_generates(perm).verdict == verdict


def test_n1_always_generates(gf2):
    p = standard_poset("chain", 1)
    for ring in ("GF(2)", "Z/4", "M(2,GF(2))", "GF(2)xGF(3)"):
        R = parse_ring(ring)
        for a in all_elements(p, R):
            assert check_generates([a]).verdict


@pytest.mark.parametrize(
    "poset, ring, expected",
    [
        (standard_poset("chain", 2), "GF(2)", 2),
        (standard_poset("antichain", 2), "GF(2)", 1),
        (standard_poset("antichain", 5), "GF(2)", 3),
        (standard_poset("chain", 1), "GF(7)", 1),
        (standard_poset("chain", 2), "M(2,GF(2))", 1),
        (standard_poset("antichain", 3), "Z/4", 2),
    ],
)
def test_mgen(poset, ring, expected):
    R = parse_ring(ring)
    assert mgen(poset, R) == expected
    assert mgen(poset, R) >= log_lower_bound(poset.n, R.size)


@pytest.mark.parametrize(
    "poset, ring",
    [
        (standard_poset("chain", 2), "GF(2)"),
        (standard_poset("antichain", 2), "GF(2)"),
        (standard_poset("antichain", 3), "Z/4"),
        (parse_poset("n 3\nrel 1 3\nrel 2 3"), "GF(2)"),
    ],
)
def test_mgen_confirmed_by_enumeration(poset, ring):
    R = parse_ring(ring)
    g = mgen(poset, R)
    if g > 1:
        assert count_by_enumeration(poset, R, g - 1) == 0
    assert count_by_enumeration(poset, R, g) > 0


def test_log_lower_bound():
    assert log_lower_bound(1, 2) == 0
    assert log_lower_bound(5, 2) == 3
    assert log_lower_bound(4, 2) == 2
    assert log_lower_bound(3, 16) == 1
