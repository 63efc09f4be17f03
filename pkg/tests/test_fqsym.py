from collections import Counter
from itertools import product

import pytest

from kdescent import fixtures
from kdescent.fqsym import (
    HopfElement,
    TensorElement,
    e_elem,
    e_product_index,
    f_coproduct,
    g_coproduct,
    g_coproduct_by_duality,
    s_elem,
    s_product_index,
    shuffle,
)
from kdescent.perm import parse_perm, parse_word, permutations, standardize, weak_leq


def F(text):
    return HopfElement.basis_element("F", parse_word(text))


def G(text):
    return HopfElement.basis_element("G", parse_word(text))


def perms_up_to(d):
    return [p for n in range(d + 1) for p in permutations(n)]


def test_shuffle_counts():
    assert shuffle((1, 2), (3,)) == [(1, 2, 3), (1, 3, 2), (3, 1, 2)]
    assert len(shuffle((1, 1), (1, 1))) == 6
    assert shuffle((), ()) == [()]


@pytest.mark.parametrize("pair", sorted(fixtures.F_PRODUCTS))
def test_f_product_fixtures(pair):
    a, b = pair
    expected = HopfElement("F", {parse_perm(w): 1 for w in fixtures.F_PRODUCTS[pair]})
    assert F(a) * F(b) == expected


@pytest.mark.parametrize("perm", sorted(fixtures.F_COPRODUCTS))
def test_f_coproduct_fixtures(perm):
    expected = TensorElement("F", {(parse_word(l), parse_word(r)): 1 for l, r in fixtures.F_COPRODUCTS[perm]})
    assert F(perm).coproduct() == expected


def test_rendering():
    assert str(F("21") * F("1")) == "F[213] + F[231] + F[321]"
    assert str(F("21").coproduct()) == "F[21] ⊗ 1 + F[1] ⊗ F[1] + 1 ⊗ F[21]"
    assert str(HopfElement.one("F")) == "1"
    assert str(HopfElement("F", {})) == "0"
    assert str(2 * F("1") - F("12")) == "2*F[1] - F[12]"


def g_product_oracle(sigma, tau):
    """G_w appears iff w splits into a prefix standardizing to sigma and a suffix standardizing to tau."""
    a, n = len(sigma), len(sigma) + len(tau)
    hits = [w for w in permutations(n) if standardize(w[:a]) == sigma and standardize(w[a:]) == tau]
    return HopfElement("G", dict.fromkeys(hits, 1))


def test_g_product_matches_restriction_oracle():
    for sigma, tau in product(perms_up_to(3), repeat=2):
        got = HopfElement.basis_element("G", sigma) * HopfElement.basis_element("G", tau)
        assert got == g_product_oracle(sigma, tau)


def test_g_coproduct_routes_agree():
    for sigma in perms_up_to(5):
        g = HopfElement.basis_element("G", sigma)
        assert g_coproduct(g) == g_coproduct_by_duality(g)


def test_coproduct_is_dual_to_product_in_f():
    # <F_s F_t, G_w> = <F_s x F_t, Delta G_w> with F and G dual bases
    for w in permutations(4):
        delta = g_coproduct(HopfElement.basis_element("G", w)).terms
        for (s, t), c in delta.items():
            prod = HopfElement.basis_element("F", s) * HopfElement.basis_element("F", t)
            assert prod.terms.get(w, 0) == c


@pytest.mark.parametrize("basis", ["F", "G"])
def test_associativity(basis):
    elems = [HopfElement.basis_element(basis, p) for p in perms_up_to(3)]
    for a, b, c in product(elems, repeat=3):
        if sum(max(e.degrees()) for e in (a, b, c)) <= 5:
            assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("basis", ["F", "G"])
def test_coassociativity(basis):
    for p in perms_up_to(4):
        delta = HopfElement.basis_element(basis, p).coproduct()
        left, right = Counter(), Counter()
        for (x, y), c in delta.terms.items():
            for (x1, x2), d in HopfElement.basis_element(basis, x).coproduct().terms.items():
                left[(x1, x2, y)] += c * d
            for (y1, y2), d in HopfElement.basis_element(basis, y).coproduct().terms.items():
                right[(x, y1, y2)] += c * d
        assert +left == +right


def test_bialgebra_compatibility():
    for a, b in product(perms_up_to(2), perms_up_to(2)):
        x, y = F(",".join(map(str, a))) if a else HopfElement.one("F"), HopfElement.basis_element("F", b)
        assert (x * y).coproduct() == x.coproduct() * y.coproduct()


def test_unit_and_counit():
    one = HopfElement.one("F")
    for p in perms_up_to(3):
        x = HopfElement.basis_element("F", p)
        assert one * x == x == x * one
        assert x.counit() == (1 if not p else 0)


def test_s_and_e_elements():
    assert s_elem(parse_perm("231")) == G("123") + G("132") + G("231")
    assert e_elem(parse_perm("231")) == G("231") + G("321")
    for sigma in permutations(4):
        ideal = set(s_elem(sigma).terms)
        assert ideal == {t for t in permutations(4) if weak_leq(t, sigma, "left")}


def test_s_e_multiplicative():
    for a, b in product(perms_up_to(3), repeat=2):
        sa, sb = HopfElement.basis_element("Sperm", a), HopfElement.basis_element("Sperm", b)
        ea, eb = HopfElement.basis_element("Eperm", a), HopfElement.basis_element("Eperm", b)
        assert sa * sb == HopfElement.basis_element("Sperm", s_product_index(a, b))
        assert ea * eb == HopfElement.basis_element("Eperm", e_product_index(a, b))


@pytest.mark.parametrize("basis", ["F", "Sperm", "Eperm"])
def test_basis_round_trip(basis):
    for p in perms_up_to(4):
        x = HopfElement.basis_element(basis, p)
        assert x.to_basis("G").to_basis(basis) == x
    mixed = 3 * G("2413") - G("21") + G("")
    assert mixed.to_basis(basis).to_basis("G") == mixed


def test_s_basis_coproduct_stays_in_s_basis():
    delta = HopfElement.basis_element("Sperm", parse_perm("312")).coproduct()
    assert delta.basis == "Sperm"
    assert delta.to_basis("G") == g_coproduct(s_elem(parse_perm("312")))


def test_mixed_bases_rejected():
    with pytest.raises(ValueError):
        F("1") + G("1")
    with pytest.raises(ValueError):
        f_coproduct(G("1"))
    with pytest.raises(ValueError):
        HopfElement("H", {})


def test_json_round_trip_shape():
    js = (F("1") * F("1")).to_json()
    assert js["basis"] == "F"
    assert sorted((tuple(t["perm"]), t["coeff"]) for t in js["terms"]) == [((1, 2), 1), ((2, 1), 1)]
