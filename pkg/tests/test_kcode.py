import pytest

from kdescent.kcode import (
    KCode,
    class_of_code,
    classes_of_Sn,
    code_from_pattern,
    count_codes,
    descent_class,
    descent_code,
    enumerate_codes,
    is_max_element,
    is_min_element,
    is_valid_code,
    max_rep,
    min_rep,
    pattern_from_code,
    recoil_class,
    recoil_code,
    recoil_code_by_restriction,
    words_equivalent,
)
from kdescent.perm import (
    identity,
    inverse,
    parse_perm,
    permutations,
    standardize,
    weak_interval,
    weak_leq,
    window_patterns,
)


def P(text):
    return parse_perm(text)


def C(text, k=3):
    return KCode.parse(text, k)


def oracle_descent_code(perm, k):
    """Rank of sigma(i) in the sorted window sigma(i-k+1..i), sigma fixing integers outside 1..n."""
    n = len(perm)

    def value(i):
        return perm[i - 1] if 1 <= i <= n else i

    digits = []
    for i in range(1, n + 1):
        window = sorted(value(j) for j in range(i - k + 1, i + 1))
        digits.append(window.index(value(i)) + 1)
    return tuple(digits)


@pytest.mark.parametrize("perm,k,code", [
    ("85736124", 3, "32212123"),
    ("426135", 3, "323123"),
    ("426135", 4, "434133"),
])
def test_descent_code_examples(perm, k, code):
    assert str(descent_code(P(perm), k)) == code


@pytest.mark.parametrize("perm,k,code", [
    ("425163", 3, "323123"),
    ("2314", 3, "3223"),
    ("2341", 3, "3223"),
])
def test_recoil_code_examples(perm, k, code):
    assert str(recoil_code(P(perm), k)) == code
    assert str(recoil_code_by_restriction(P(perm), k)) == code


def test_identity_codes():
    for k in range(1, 6):
        assert descent_code(identity(7), k).digits == (k,) * 7
        assert recoil_code(identity(7), k).digits == (k,) * 7


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_descent_code_matches_oracle(k):
    for n in range(7):
        for p in permutations(n):
            assert descent_code(p, k).digits == oracle_descent_code(p, k)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_recoil_routes_agree(k):
    for n in range(8):
        for p in permutations(n):
            assert recoil_code(p, k) == recoil_code_by_restriction(p, k)


def test_width_must_be_positive():
    with pytest.raises(ValueError):
        descent_code(P("21"), 0)
    with pytest.raises(ValueError):
        recoil_code(P("21"), 0)


def test_kcode_validation():
    assert is_valid_code((3, 2, 1, 1), 3)
    assert not is_valid_code((2, 3), 3)
    assert not is_valid_code((3, 1), 3)
    assert is_valid_code((), 3)
    with pytest.raises(ValueError):
        KCode(3, (3, 1))
    with pytest.raises(ValueError):
        KCode(0, ())


def test_pattern_code_conversion():
    pattern = tuple(map(P, "312 231 312 231 312 123".split()))
    assert str(code_from_pattern(pattern)) == "32212123"
    assert pattern_from_code(C("32212123")) == pattern
    assert pattern_from_code(KCode(3, (3,) * 6)) == (identity(3),) * 4
    with pytest.raises(ValueError):
        pattern_from_code(C("32"))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pattern_round_trip(k):
    for n in range(k, 8):
        for p in permutations(n):
            assert pattern_from_code(descent_code(p, k)) == window_patterns(p, k)


def test_counting_examples():
    assert count_codes(3, 4) == 18
    assert count_codes(3, 3) == 6
    assert count_codes(5, 0) == 1
    assert {str(c) for c in enumerate_codes(3, 3)} == {"333", "332", "323", "322", "331", "321"}
    assert enumerate_codes(4, 0) == [KCode(4, ())]


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_count_matches_brute_force(k):
    for n in range(8):
        distinct = {recoil_code(p, k) for p in permutations(n)}
        codes = enumerate_codes(k, n)
        assert len(distinct) == count_codes(k, n) == len(codes)
        assert set(codes) == distinct
        assert codes == sorted(codes)


def test_count_is_exact_for_large_arguments():
    assert count_codes(5, 40) == 120 * 5 ** 35


def test_min_max_reps():
    assert min_rep(C("3223")) == P("2314")
    assert max_rep(C("3223")) == P("2341")
    assert min_rep(C("3331")) == P("1423")
    assert max_rep(C("3331")) == P("4123")
    assert min_rep(KCode(4, (4,) * 6)) == identity(6)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_reps_have_their_code(k):
    for n in range(9 if k > 1 else 7):
        for code in enumerate_codes(k, n):
            lo, hi = min_rep(code), max_rep(code)
            assert recoil_code(lo, k) == code == recoil_code(hi, k)
            assert is_min_element(lo, k) and is_max_element(hi, k)


def test_min_max_element_predicates():
    assert is_min_element(P("1423"), 3)
    assert not is_min_element(P("4123"), 3)
    assert is_max_element(P("2341"), 3)
    for k in range(2, 5):
        assert is_min_element(identity(5), k) and is_max_element(identity(5), k)
    # k = 1 merges all of S_n into one class, topped by n..1
    assert is_min_element(identity(5), 1) and not is_max_element(identity(5), 1)


def test_recoil_class_examples():
    assert recoil_class(P("2314"), 3).members == (P("2314"), P("2341"))
    assert recoil_class(P("3142"), 3).members == (P("3142"), P("3412"))
    assert len(recoil_class(P("4132"), 5)) == 1
    for p in permutations(3):
        assert len(recoil_class(p, 3)) == 1


def test_descent_class_is_inverse_image():
    cls = descent_class(P("1432"), 3)
    assert cls.members == (P("1432"), P("2431"))
    assert cls.min_rep == P("1432") and cls.max_rep == P("2431")
    assert all(descent_code(p, 3) == cls.code for p in cls.members)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_exchange_classes_are_code_classes(k):
    for n in range(8):
        groups = {}
        for p in permutations(n):
            groups.setdefault(recoil_code(p, k), []).append(p)
        for code, members in groups.items():
            assert list(recoil_class(members[-1], k).members) == members


@pytest.mark.parametrize("kind,side", [("recoil", "right"), ("descent", "left")])
def test_class_extremes_bound_the_class(kind, side):
    for n in range(6):
        for cls in classes_of_Sn(n, 3, kind):
            assert cls.min_rep == cls.members[0] and cls.max_rep == cls.members[-1]
            assert all(weak_leq(cls.min_rep, p, side) and weak_leq(p, cls.max_rep, side)
                       for p in cls.members)
            assert tuple(weak_interval(cls.min_rep, cls.max_rep, side)) == cls.members


def test_classes_of_s4():
    classes = classes_of_Sn(4, 3, "recoil")
    assert len(classes) == 18
    doubles = [tuple(c.members) for c in classes if len(c) == 2]
    assert len(doubles) == 6 and all(len(c) <= 2 for c in classes)
    assert [len(c) for c in classes_of_Sn(3, 3)] == [1] * 6
    (only,) = classes_of_Sn(0, 3, "descent")
    assert only.members == ((),)
    assert sum(len(c) for c in classes_of_Sn(6, 2)) == 720


def test_class_of_code_cache_consistent():
    for code in enumerate_codes(3, 5):
        cls = class_of_code(code, "descent")
        assert all(descent_code(p, 3) == code for p in cls.members)
        assert cls.members == tuple(sorted(inverse(p) for p in class_of_code(code, "recoil").members))


@pytest.mark.parametrize("k,l", [(2, 3), (3, 4), (2, 4)])
def test_refinement(k, l):
    for n in range(8):
        seen = {}
        for p in permutations(n):
            assert seen.setdefault(descent_code(p, l), descent_code(p, k)) == descent_code(p, k)


def test_two_descent_code_is_descent_set():
    for n in range(8):
        for p in permutations(n):
            d = descent_code(p, 2).digits
            assert all((d[i + 1] == 1) == (p[i] > p[i + 1]) for i in range(n - 1))


def test_words_equivalent():
    u, v = (2, 2, 1, 3), (2, 2, 3, 1)
    assert standardize(u) == P("2314") and standardize(v) == P("2341")
    assert words_equivalent(u, v, 3)
    assert words_equivalent(u, u, 3)
    # standardize to 1324 and 1342, which lie in different 3-classes
    assert not words_equivalent((1, 2, 1, 3), (1, 2, 3, 1), 3)
    assert not words_equivalent((1, 2), (1, 3), 3)
