from collections import Counter

import pytest

from kdescent import fixtures
from kdescent.kcode import descent_code
from kdescent.perm import permutations
from kdescent.stats import MultiPoly, eulerian_poly, major_poly, specialize


@pytest.mark.parametrize("n", sorted(fixtures.EULERIAN_K3))
def test_eulerian_k3_matches_table(n):
    assert eulerian_poly(n, 3).terms == fixtures.EULERIAN_K3[n]


@pytest.mark.parametrize("n", sorted(fixtures.MAJOR_K3))
def test_major_k3_matches_table(n):
    assert major_poly(n, 3).terms == fixtures.MAJOR_K3[n]


def test_rendering():
    assert str(eulerian_poly(3, 3)) == "t1*t2 + t1*t3 + t2^2 + 2*t2*t3 + t3^2"
    assert str(eulerian_poly(0, 3)) == "1"
    assert eulerian_poly(0, 3) == 1
    assert str(MultiPoly(("x",), {})) == "0"


def brute_eulerian(n, k):
    terms = Counter()
    for p in permutations(n):
        exps = [0] * k
        for d in descent_code(p, k).digits[1:]:
            exps[d - 1] += 1
        terms[tuple(exps)] += 1
    return dict(terms)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_eulerian_matches_brute_force(k):
    for n in range(1, 7):
        assert eulerian_poly(n, k).terms == brute_eulerian(n, k)


def classical_eulerian(n):
    counts = Counter(sum(p[i] > p[i + 1] for i in range(n - 1)) for p in permutations(n))
    return {(d,): c for d, c in counts.items()}


@pytest.mark.parametrize("n", range(1, 9))
def test_two_eulerian_specializes_to_descent_count(n):
    special = specialize(eulerian_poly(n, 2), {"t1": "t", "t2": 1})
    assert special.variables == ("t",)
    assert special.terms == classical_eulerian(n)


def test_classical_eulerian_four():
    special = specialize(eulerian_poly(4, 2), {"t1": "t", "t2": 1})
    assert [special.terms.get((d,), 0) for d in range(4)] == [1, 11, 11, 1]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_invariants(k):
    for n in range(1, 7):
        e, m = eulerian_poly(n, k), major_poly(n, k)
        ones = {v: 1 for v in e.variables}
        assert e.evaluate(ones) == m.evaluate({v: 1 for v in m.variables}) == len(list(permutations(n)))
        assert e.degrees() == {n - 1}
        assert m.degrees() == {n * (n - 1) // 2}


def test_major_monomials_can_collide():
    # codes 4334 and 4443 both give q3^3*q4^3
    assert max(major_poly(4, 4).terms.values()) > 1


def test_specialize_partial_and_evaluate():
    e = eulerian_poly(3, 3)
    half = specialize(e, {"t1": 1, "t2": "x", "t3": "y"})
    assert half.variables == ("x", "y")
    assert half.evaluate({"x": 1, "y": 1}) == 6
    with pytest.raises(ValueError):
        specialize(e, {"t1": 1})
    with pytest.raises(ValueError):
        e.evaluate({"t1": 1})


def test_addition_and_json():
    a = eulerian_poly(2, 3)
    assert (a + a).terms == {exps: 2 for exps in a.terms}
    js = a.to_json()
    assert js["variables"] == ["t1", "t2", "t3"]
    assert {tuple(t["exponents"]): t["coeff"] for t in js["terms"]} == a.terms


def test_width_one():
    # k = 1 codes are all ones, and every permutation contributes t1^(n-1)
    for n in range(1, 6):
        assert eulerian_poly(n, 1).terms == {(n - 1,): len(list(permutations(n)))}
