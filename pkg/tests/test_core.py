import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_frobenius, naive_reachable, random_coprime
from frobkit.caps import Caps
from frobkit.core import (
    IntSet,
    bounds,
    erdos_graham_classic,
    frobenius,
    frobenius_binary_search,
    frobenius_bruteforce,
    frobenius_closed_form_2,
    frobenius_nijenhuis,
    gcd_set,
    is_representable,
    is_representable_dp,
    representability_decider,
    residue_table,
)
from frobkit.errors import DomainError, ResourceError

INF = math.inf


def test_intset_validation():
    assert IntSet.of([7, 4, 6, 4]).elements == (4, 6, 7)
    with pytest.raises(DomainError):
        IntSet((3, 2))
    with pytest.raises(DomainError):
        IntSet((0, 2))


@pytest.mark.parametrize(
    "a, expected",
    [((4, 6, 7), (0, 13, 6, 7)), ((2, 3), (0, 3)), ((3, 6, 9), (0, INF, INF))],
)
def test_residue_table(a, expected):
    t = residue_table(a)
    assert t.modulus == a[0]
    assert t.dist == expected


def test_residue_table_errors():
    with pytest.raises(DomainError):
        residue_table(())
    with pytest.raises(DomainError):
        residue_table((1, 5))
    with pytest.raises(ResourceError):
        residue_table((101, 103), Caps(residues=100))


@pytest.mark.parametrize("a, g", [((4, 6, 7), 9), ((3, 4), 5), ((6, 10, 15), 29), ((2, 3), 1)])
def test_solvers_known_values(a, g):
    assert frobenius_nijenhuis(a) == g
    assert frobenius_bruteforce(a) == g
    assert frobenius_binary_search(a) == g


@pytest.mark.parametrize("a", [(4, 6, 8), (5,), (1, 4), ()])
def test_solver_domain_errors(a):
    for solver in (frobenius_nijenhuis, frobenius_bruteforce, frobenius_binary_search):
        with pytest.raises(DomainError):
            solver(a)


def test_bruteforce_cap():
    with pytest.raises(ResourceError):
        frobenius_bruteforce((1000, 1001), Caps(dp_bits=10**5))


def test_closed_form():
    assert frobenius_closed_form_2(3, 4) == 5
    assert frobenius_closed_form_2(2, 3) == 1
    assert frobenius_closed_form_2(5, 7) == 23
    for bad in ((4, 6), (4, 3), (1, 5)):
        with pytest.raises(DomainError):
            frobenius_closed_form_2(*bad)


def test_binary_search_custom_decider():
    calls = []

    def decider(a, k):
        calls.append(k)
        return naive_frobenius(a.elements) >= k

    assert frobenius_binary_search((4, 6, 7), decider) == 9
    assert len(calls) <= math.ceil(math.log2(49)) + 1


def test_auto_falls_back_to_bisection():
    caps = Caps(residues=3)
    assert frobenius((4, 6, 7), "auto", caps) == 9
    with pytest.raises(DomainError):
        frobenius((4, 6, 7), "simplex")


def test_representability_examples():
    assert not is_representable((4, 6, 7), 9)
    assert is_representable((4, 6, 7), 0)
    assert is_representable((3, 4), 6)
    assert is_representable((4, 6, 7), 10)
    assert is_representable((), 0) and not is_representable((), 5)
    assert is_representable((1, 9), 17)


def test_decider_edges():
    d = representability_decider((3, 4))
    a = IntSet((3, 4))
    assert d(a, 5) and not d(a, 6) and not d(a, 10**6)
    with pytest.raises(DomainError):
        d(IntSet((3, 5)), 1)


def test_gcd_set():
    assert gcd_set((3, 6, 9)) == 3
    assert gcd_set((17,)) == 17
    assert gcd_set((4, 6, 7)) == 1
    with pytest.raises(DomainError):
        gcd_set(())


def test_bounds_examples():
    b = bounds((4, 6, 7))
    assert b.wilf_upper == 49
    assert b.erdos_graham_upper == 10
    assert b.davison_lower == pytest.approx(math.sqrt(504) - 17, abs=1e-12)
    assert b.aliev_gruber_lower == pytest.approx(math.sqrt(336) - 17, abs=1e-12)
    assert round(b.davison_lower, 4) == 5.4499
    assert round(b.aliev_gruber_lower, 4) == 1.3303
    assert b.davison_lower <= 9 <= b.erdos_graham_upper <= b.wilf_upper

    b = bounds((3, 4))
    assert (b.wilf_upper, b.erdos_graham_upper, b.davison_lower, b.aliev_gruber_lower) == (16, 5, None, 5.0)


def test_bounds_huge_inputs_stay_finite():
    b = bounds((10**30 + 1, 10**30 + 2, 10**30 + 3, 10**30 + 7))
    assert math.isfinite(b.aliev_gruber_lower)


def test_printed_erdos_graham_is_not_a_bound():
    # oracle-computed counterexample; the classic form still holds here
    a = (19, 53, 72)
    g = naive_frobenius(a)
    assert g == 935
    assert bounds(a).erdos_graham_upper == 845 < g
    assert g <= erdos_graham_classic(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 60), st.integers(2, 60))
def test_pairs_match_closed_form(x, y):
    if x == y or math.gcd(x, y) != 1:
        return
    a1, a2 = sorted((x, y))
    assert frobenius_nijenhuis((a1, a2)) == frobenius_closed_form_2(a1, a2)


def test_solver_agreement(rng):
    for _ in range(150):
        a = random_coprime(rng, 2, 5, 120)
        g = frobenius_nijenhuis(a)
        assert g == frobenius_bruteforce(a) == frobenius_binary_search(a)


def test_against_naive_oracle(rng):
    for _ in range(40):
        a = random_coprime(rng, 2, 4, 30)
        assert frobenius_nijenhuis(a) == naive_frobenius(a.elements)


def test_residue_table_properties(rng):
    for _ in range(60):
        a = IntSet.of(rng.sample(range(2, 40), rng.randint(1, 4)))
        t = residue_table(a)
        assert t.dist[0] == 0
        reach = naive_reachable(a.elements, a.max * a.min + a.min)
        for j, d in enumerate(t.dist):
            if d == INF:
                assert all(not reach[x] for x in range(j, len(reach), a.min))
                continue
            assert d % a.min == j
            assert is_representable(a, d)
            if d >= a.min:
                assert not is_representable(a, d - a.min)


def test_frobenius_defining_property(rng):
    for _ in range(60):
        a = random_coprime(rng, 2, 5, 80)
        g = frobenius_nijenhuis(a)
        assert not is_representable(a, g)
        assert all(is_representable(a, m) for m in range(g + 1, g + a.min + 1))


def test_two_representability_paths_agree(rng):
    for _ in range(50):
        a = IntSet.of(rng.sample(range(1, 50), rng.randint(1, 4)))
        for k in rng.sample(range(0, 400), 20):
            assert is_representable(a, k) == is_representable_dp(a, k)


def test_bounds_sandwich(rng):
    for _ in range(200):
        a = random_coprime(rng, 2, 5, 150)
        g = frobenius_nijenhuis(a)
        b = bounds(a)
        assert b.aliev_gruber_lower <= g <= b.wilf_upper
        assert g <= erdos_graham_classic(a)
        if len(a) == 3:
            assert b.davison_lower <= g


def test_superset_monotonicity(rng):
    for _ in range(80):
        a = random_coprime(rng, 2, 4, 60)
        x = rng.randint(2, 80)
        if x in a:
            continue
        assert frobenius_nijenhuis(IntSet.of(a.elements + (x,))) <= frobenius_nijenhuis(a)
