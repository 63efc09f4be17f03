"""
Exhaustive verification of the structural properties at desk scale.

Every check returns ``None`` on success or a JSON-serializable witness
describing the first counterexample found.  Suites bundle checks with their
parameters; `run_suite` times each check and assembles a report.
"""

from __future__ import annotations

import time
from collections import Counter, defaultdict
from collections.abc import Callable, Iterable, Sequence
from dataclasses import asdict, dataclass, field
from itertools import product
from math import factorial

from . import fixtures
from .dsym import (
    CodeElement,
    NotInSubalgebra,
    class_top,
    count_free_generators,
    ecode_product_index,
    fq_coproduct,
    fq_product,
    generator_series,
    hilbert_series,
    project_tensor_to_classes,
    project_to_classes,
    ribbon_coproduct,
    ribbon_product,
    scode_product_index,
)
from .fqsym import (
    HopfElement,
    TensorElement,
    e_product_index,
    f_coproduct,
    g_coproduct,
    g_coproduct_by_duality,
    s_product_index,
)
from .kcode import (
    KCode,
    class_of_code,
    classes_of_Sn,
    code_from_pattern,
    count_codes,
    descent_code,
    enumerate_codes,
    is_max_element,
    is_min_element,
    max_rep,
    min_rep,
    pattern_from_code,
    recoil_class,
    recoil_code,
    recoil_code_by_restriction,
)
from .perm import (
    complement,
    is_compatible_pattern,
    parse_perm,
    parse_word,
    permutations,
    render_word,
    restrict_to_values,
    standardize,
    weak_filter,
    weak_ideal,
    weak_interval,
    window_patterns,
)
from .stats import MultiPoly, eulerian_poly, major_poly, specialize

__all__ = ["CheckRecord", "VerificationReport", "SUITES", "build_checks", "run_suite"]

Witness = dict | None


def _w(perm) -> str:
    return render_word(perm)


# -- codes ------------------------------------------------------------------

def check_code_fixtures() -> Witness:
    for perm, k, kind, expected in fixtures.CODE_EXAMPLES:
        coder = descent_code if kind == "descent" else recoil_code
        got = str(coder(parse_perm(perm), k))
        if got != expected:
            return {"perm": perm, "k": k, "kind": kind, "expected": expected, "got": got}
    word, expected = fixtures.STD_EXAMPLE
    if _w(standardize(parse_word(word))) != expected:
        return {"std": word, "expected": expected}
    return None


def check_code_listing() -> Witness:
    for n, expected in fixtures.RECOIL_CODES_K3.items():
        got = [str(recoil_code(p, 3)) for p in permutations(n)]
        if got != expected:
            return {"n": n, "expected": expected, "got": got}
    return None


def check_recoil_routes(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(max_n + 1):
            for p in permutations(n):
                a, b = recoil_code(p, k), recoil_code_by_restriction(p, k)
                if a != b:
                    return {"perm": _w(p), "k": k, "by_inverse": str(a), "by_restriction": str(b)}
    return None


def check_pattern_round_trip(ks: Iterable[int], max_n: int) -> Witness:
    perm, k, windows, code = fixtures.PATTERN_EXAMPLE
    windows = tuple(parse_perm(w) for w in windows)
    if str(code_from_pattern(windows)) != code or pattern_from_code(KCode.parse(code, k)) != windows:
        return {"fixture": perm}
    for k in ks:
        for n in range(k, max_n + 1):
            for p in permutations(n):
                pattern = window_patterns(p, k)
                if not is_compatible_pattern(pattern):
                    return {"perm": _w(p), "k": k, "incompatible": [_w(w) for w in pattern]}
                code = descent_code(p, k)
                if pattern_from_code(code) != pattern or code_from_pattern(pattern) != code:
                    return {"perm": _w(p), "k": k, "code": str(code)}
    return None


def check_code_counts(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(max_n + 1):
            seen = {recoil_code(p, k) for p in permutations(n)}
            listed = enumerate_codes(k, n)
            if len(seen) != count_codes(k, n) or set(listed) != seen or listed != sorted(listed):
                return {"k": k, "n": n, "distinct": len(seen), "formula": count_codes(k, n)}
    return None


def check_classical_descents(max_n: int) -> Witness:
    for n in range(max_n + 1):
        for p in permutations(n):
            d = descent_code(p, 2).digits
            for i in range(n - 1):
                if (d[i + 1] == 1) != (p[i] > p[i + 1]):
                    return {"perm": _w(p), "position": i + 1}
    return None


# -- classes ----------------------------------------------------------------

def _code_groups(n: int, k: int) -> dict[KCode, list]:
    groups: dict[KCode, list] = defaultdict(list)
    for p in permutations(n):
        groups[recoil_code(p, k)].append(p)
    return groups


def check_exchange_classes(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(max_n + 1):
            for code, members in _code_groups(n, k).items():
                closure = list(recoil_class(members[0], k).members)
                if closure != members:
                    return {"k": k, "code": str(code), "by_code": [_w(p) for p in members],
                            "by_exchange": [_w(p) for p in closure]}
    return None


def check_doubleton_classes() -> Witness:
    classes = classes_of_Sn(4, 3, "recoil")
    doubles = sorted(tuple(_w(p) for p in c.members) for c in classes if len(c) > 1)
    if len(classes) != 18 or doubles != sorted(fixtures.DOUBLETON_CLASSES_S4_K3):
        return {"classes": len(classes), "doubletons": doubles}
    if any(len(c) != 1 for c in classes_of_Sn(3, 3, "recoil")):
        return {"n": 3, "reason": "non-singleton class"}
    return None


def check_min_max(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(max_n + 1):
            mins, maxs = set(), set()
            for code, members in _code_groups(n, k).items():
                low = [p for p in members if is_min_element(p, k)]
                high = [p for p in members if is_max_element(p, k)]
                if low != [members[0]] or high != [members[-1]]:
                    return {"k": k, "code": str(code), "minimal": [_w(p) for p in low],
                            "maximal": [_w(p) for p in high]}
                if min_rep(code) != members[0] or max_rep(code) != members[-1]:
                    return {"k": k, "code": str(code), "min_rep": _w(min_rep(code)),
                            "max_rep": _w(max_rep(code))}
                mins.add(members[0])
                maxs.add(members[-1])
            if {complement(p) for p in mins} != maxs:
                return {"k": k, "n": n, "reason": "complement does not map minima onto maxima"}
    return None


def check_window_characterization(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(k, max_n + 1):
            by_code: dict = {}
            by_windows: dict = {}
            for p in permutations(n):
                code = recoil_code(p, k)
                sig = tuple(standardize(restrict_to_values(p, i, i + k - 1)) for i in range(1, n - k + 2))
                if by_code.setdefault(code, sig) != sig or by_windows.setdefault(sig, code) != code:
                    return {"k": k, "perm": _w(p), "code": str(code)}
    return None


def check_refinement(pairs: Iterable[tuple[int, int]], max_n: int) -> Witness:
    for k, l in pairs:
        for n in range(max_n + 1):
            coarse: dict = {}
            for p in permutations(n):
                fine = descent_code(p, l)
                c = descent_code(p, k)
                if coarse.setdefault(fine, c) != c:
                    return {"k": k, "l": l, "perm": _w(p), "code_l": str(fine)}
    return None


def check_intervals(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(max_n + 1):
            for kind, side in (("recoil", "right"), ("descent", "left")):
                for cls in classes_of_Sn(n, k, kind):
                    interval = weak_interval(cls.min_rep, cls.max_rep, side)
                    if tuple(interval) != cls.members:
                        return {"k": k, "kind": kind, "code": str(cls.code),
                                "class": [_w(p) for p in cls.members],
                                "interval": [_w(p) for p in interval]}
    return None


def check_ideals(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(max_n + 1):
            classes = classes_of_Sn(n, k, "recoil")
            code_of = {p: c.code for c in classes for p in c.members}
            size = {c.code: len(c) for c in classes}
            for cls in classes:
                for label, region in (("ideal", weak_ideal(cls.max_rep, "right")),
                                      ("filter", weak_filter(cls.min_rep, "right"))):
                    hits = Counter(code_of[p] for p in region)
                    broken = [str(c) for c, m in hits.items() if m != size[c]]
                    if broken:
                        return {"k": k, "code": str(cls.code), "region": label, "split_classes": broken}
    return None


# -- statistics -------------------------------------------------------------

def check_stat_fixtures() -> Witness:
    for name, build, table in (("eulerian", eulerian_poly, fixtures.EULERIAN_K3),
                               ("major", major_poly, fixtures.MAJOR_K3)):
        for n, terms in table.items():
            got = build(n, 3)
            if got.terms != terms:
                return {"poly": name, "n": n, "got": str(got)}
    return None


def check_classical_eulerian(max_n: int) -> Witness:
    for n in range(1, max_n + 1):
        counts = Counter(sum(p[i] > p[i + 1] for i in range(n - 1)) for p in permutations(n))
        expected = MultiPoly(("t",), {(d,): c for d, c in counts.items()})
        got = specialize(eulerian_poly(n, 2), {"t1": "t", "t2": 1})
        if got != expected:
            return {"n": n, "expected": str(expected), "got": str(got)}
    return None


def check_stat_invariants(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        for n in range(1, max_n + 1):
            e, m = eulerian_poly(n, k), major_poly(n, k)
            ones = dict.fromkeys(e.variables, 1)
            if e.evaluate(ones) != factorial(n) or m.evaluate(dict.fromkeys(m.variables, 1)) != factorial(n):
                return {"k": k, "n": n, "reason": "value at 1 is not n!"}
            if e.degrees() != {n - 1} or m.degrees() != {n * (n - 1) // 2}:
                return {"k": k, "n": n, "reason": "not homogeneous of the expected degree"}
            # commutative monomials merge codes, so compare code words instead
            if k >= n and len({recoil_code(p, k) for p in permutations(n)}) != factorial(n):
                return {"k": k, "n": n, "reason": "code words not distinct"}
            # class-by-class recount
            recount: Counter = Counter()
            for cls in classes_of_Sn(n, k, "recoil"):
                exps = [0] * k
                for d in cls.code.digits[1:]:
                    exps[d - 1] += 1
                recount[tuple(exps)] += len(cls)
            if MultiPoly(e.variables, recount) != e:
                return {"k": k, "n": n, "reason": "class recount disagrees"}
    return None


# -- FQSym ------------------------------------------------------------------

def _basis(basis: str, perm) -> HopfElement:
    return HopfElement.basis_element(basis, perm)


def _perms_up_to(d: int) -> list:
    return [p for n in range(d + 1) for p in permutations(n)]


def check_hopf_fixtures() -> Witness:
    for (a, b), expected in fixtures.F_PRODUCTS.items():
        got = _basis("F", parse_perm(a)) * _basis("F", parse_perm(b))
        if got.terms != {parse_perm(w): 1 for w in expected}:
            return {"product": [a, b], "got": str(got)}
    for a, expected in fixtures.F_COPRODUCTS.items():
        got = f_coproduct(_basis("F", parse_perm(a)))
        if got.terms != {(parse_perm(x), parse_perm(y)): 1 for x, y in expected}:
            return {"coproduct": a, "got": str(got)}
    return None


def check_associativity(max_degree: int) -> Witness:
    for basis in ("F", "G"):
        for n1 in range(max_degree + 1):
            for n2 in range(max_degree + 1 - n1):
                for n3 in range(max_degree + 1 - n1 - n2):
                    for a, b, c in product(permutations(n1), permutations(n2), permutations(n3)):
                        x, y, z = _basis(basis, a), _basis(basis, b), _basis(basis, c)
                        if (x * y) * z != x * (y * z):
                            return {"basis": basis, "triple": [_w(a), _w(b), _w(c)]}
    return None


def _tensor3(tensor: TensorElement, left: bool) -> Counter:
    out: Counter = Counter()
    for (a, b), c in tensor.terms.items():
        inner = coproduct_of(tensor.basis, a if left else b)
        for (x, y), d in inner.terms.items():
            out[(x, y, b) if left else (a, x, y)] += c * d
    return out


def coproduct_of(basis: str, perm) -> TensorElement:
    elem = _basis(basis, perm)
    return f_coproduct(elem) if basis == "F" else g_coproduct(elem)


def check_coassociativity(max_degree: int) -> Witness:
    for basis in ("F", "G"):
        for p in _perms_up_to(max_degree):
            delta = coproduct_of(basis, p)
            if _tensor3(delta, True) != _tensor3(delta, False):
                return {"basis": basis, "perm": _w(p)}
    return None


def check_bialgebra(max_degree: int) -> Witness:
    for basis in ("F", "G"):
        for n1 in range(max_degree + 1):
            for n2 in range(max_degree + 1 - n1):
                for a, b in product(permutations(n1), permutations(n2)):
                    lhs = (_basis(basis, a) * _basis(basis, b)).coproduct()
                    rhs = coproduct_of(basis, a) * coproduct_of(basis, b)
                    if lhs != rhs:
                        return {"basis": basis, "pair": [_w(a), _w(b)]}
    return None


def check_unit_counit(max_degree: int) -> Witness:
    for basis in ("F", "G"):
        one = HopfElement.one(basis)
        for p in _perms_up_to(max_degree):
            x = _basis(basis, p)
            if one * x != x or x * one != x:
                return {"basis": basis, "perm": _w(p), "axiom": "unit"}
            delta = coproduct_of(basis, p)
            left = {b: c for (a, b), c in delta.terms.items() if not a}
            right = {a: c for (a, b), c in delta.terms.items() if not b}
            if left != x.terms or right != x.terms:
                return {"basis": basis, "perm": _w(p), "axiom": "counit"}
    return None


def _convolution_table(max_degree: int) -> dict:
    table: dict = defaultdict(set)
    for n in range(max_degree + 1):
        for w in permutations(n):
            for m in range(n + 1):
                table[(standardize(w[:m]), standardize(w[m:]))].add(w)
    return table


def check_g_product_duality(max_degree: int) -> Witness:
    table = _convolution_table(max_degree)
    for n1 in range(max_degree + 1):
        for n2 in range(max_degree + 1 - n1):
            for a, b in product(permutations(n1), permutations(n2)):
                got = _basis("G", a) * _basis("G", b)
                if got.terms != dict.fromkeys(table[(a, b)], 1):
                    return {"pair": [_w(a), _w(b)], "got": str(got)}
    return None


def check_g_coproduct_routes(max_degree: int) -> Witness:
    for p in _perms_up_to(max_degree):
        x = _basis("G", p)
        if g_coproduct(x) != g_coproduct_by_duality(x):
            return {"perm": _w(p)}
    return None


def check_multiplicative_bases(max_degree: int) -> Witness:
    for n1 in range(max_degree + 1):
        for n2 in range(max_degree + 1 - n1):
            for a, b in product(permutations(n1), permutations(n2)):
                s = _basis("Sperm", a) * _basis("Sperm", b)
                if s.terms != {s_product_index(a, b): 1}:
                    return {"basis": "S", "pair": [_w(a), _w(b)], "got": str(s)}
                e = _basis("Eperm", a) * _basis("Eperm", b)
                if e.terms != {e_product_index(a, b): 1}:
                    return {"basis": "E", "pair": [_w(a), _w(b)], "got": str(e)}
    return None


# -- DSym -------------------------------------------------------------------

def _codes_up_to(k: int, d: int) -> list[KCode]:
    return [c for n in range(d + 1) for c in enumerate_codes(k, n)]


def check_ribbon_fixture() -> Witness:
    (a, b), expected = fixtures.RIBBON_PRODUCT_K3
    got = ribbon_product(KCode.parse(a, 3), KCode.parse(b, 3))
    if got.terms != {KCode.parse(c, 3): 1 for c in expected}:
        return {"got": str(got)}
    return None


def check_ribbon_closure(ks: Iterable[int], max_degree: int, max_coproduct_degree: int) -> Witness:
    for k in ks:
        for n1 in range(max_degree + 1):
            for n2 in range(max_degree + 1 - n1):
                for a, b in product(enumerate_codes(k, n1), enumerate_codes(k, n2)):
                    try:
                        ribbon_product(a, b)
                    except NotInSubalgebra as exc:
                        return {"k": k, "product": [str(a), str(b)], "class": str(exc.code)}
        for c in _codes_up_to(k, max_coproduct_degree):
            try:
                ribbon_coproduct(c)
            except NotInSubalgebra as exc:
                return {"k": k, "coproduct": str(c), "class": str(exc.code)}
    return None


def check_code_multiplicative(ks: Iterable[int], max_degree: int) -> Witness:
    for k in ks:
        for n1 in range(max_degree + 1):
            for n2 in range(max_degree + 1 - n1):
                for a, b in product(enumerate_codes(k, n1), enumerate_codes(k, n2)):
                    s = CodeElement.basis_element("Scode", a) * CodeElement.basis_element("Scode", b)
                    idx = scode_product_index(a, b)
                    if s.terms != {idx: 1} or class_top(idx) != s_product_index(class_top(a), class_top(b)):
                        return {"k": k, "basis": "S", "pair": [str(a), str(b)], "got": str(s)}
                    e = CodeElement.basis_element("Ecode", a) * CodeElement.basis_element("Ecode", b)
                    if e.terms != {ecode_product_index(a, b): 1}:
                        return {"k": k, "basis": "E", "pair": [str(a), str(b)], "got": str(e)}
    return None


def check_triangularity(ks: Iterable[int], max_degree: int) -> Witness:
    for k in ks:
        for c in _codes_up_to(k, max_degree):
            for basis in ("Scode", "Ecode"):
                elem = CodeElement.basis_element(basis, c)
                ribbons = elem.to_basis("R")
                if ribbons.terms.get(c) != 1 or set(ribbons.terms.values()) != {1}:
                    return {"k": k, "basis": basis, "code": str(c), "ribbons": str(ribbons)}
                if ribbons.to_basis(basis) != elem:
                    return {"k": k, "basis": basis, "code": str(c), "reason": "round trip"}
                back = CodeElement.basis_element("R", c).to_basis(basis).to_basis("R")
                if back != CodeElement.basis_element("R", c):
                    return {"k": k, "basis": basis, "code": str(c), "reason": "ribbon round trip"}
    return None


def check_classical_ribbons(max_degree: int) -> Witness:
    """For k = 2: complete functions are sums of ribbons with coarser descent sets."""
    for c in _codes_up_to(2, max_degree):
        choices = [(d,) if d == 2 else (1, 2) for d in c.digits]
        expected = {KCode(2, digits): 1 for digits in product(*choices)}
        got = CodeElement.basis_element("Scode", c).to_basis("R")
        if got.terms != expected:
            return {"code": str(c), "got": str(got)}
    for n1 in range(1, max_degree):
        for n2 in range(1, max_degree + 1 - n1):
            for a, b in product(enumerate_codes(2, n1), enumerate_codes(2, n2)):
                glued = KCode(2, a.digits + (1,) + b.digits[1:])
                if scode_product_index(a, b) != glued:
                    return {"pair": [str(a), str(b)], "index": str(scode_product_index(a, b))}
                if ribbon_product(a, b).terms != {a + b: 1, glued: 1}:
                    return {"pair": [str(a), str(b)], "ribbons": str(ribbon_product(a, b))}
    return None


def check_free_generators(ks: Iterable[int], max_n: int) -> Witness:
    for k in ks:
        series = generator_series(k, max_n)
        for n in range(1, max_n + 1):
            s, e = count_free_generators(n, k, "S"), count_free_generators(n, k, "E")
            if not s == e == series[n]:
                return {"k": k, "n": n, "S": s, "E": e, "series": series[n]}
    return None


# -- quotient ---------------------------------------------------------------

def check_quotient_well_defined(ks: Iterable[int], max_degree: int) -> Witness:
    for k in ks:
        for n1 in range(max_degree + 1):
            for sigma in permutations(n1):
                c = descent_code(sigma, k)
                x = _basis("F", sigma)
                if project_tensor_to_classes(f_coproduct(x), k) != fq_coproduct(c):
                    return {"k": k, "coproduct": _w(sigma)}
                for n2 in range(max_degree + 1 - n1):
                    for mu in permutations(n2):
                        d = descent_code(mu, k)
                        y = _basis("F", mu)
                        if project_to_classes(x * y, k) != fq_product(c, d):
                            return {"k": k, "product": [_w(sigma), _w(mu)]}
                        if project_to_classes(y * x, k) != fq_product(d, c):
                            return {"k": k, "product": [_w(mu), _w(sigma)]}
    return None


def check_quotient_fixture() -> Witness:
    a, b = parse_perm("42531"), parse_perm("21543")
    if descent_code(a, 3) != descent_code(b, 3):
        return {"reason": "representatives in different classes"}
    one = _basis("F", (1,))
    pa = project_to_classes(_basis("F", a) * one, 3)
    pb = project_to_classes(_basis("F", b) * one, 3)
    if pa != pb:
        return {"left": str(pa), "right": str(pb)}
    return None


def find_noncommuting_pair(k: int, max_degree: int) -> tuple[KCode, KCode] | None:
    for n in range(max_degree + 1):
        for n1 in range(n + 1):
            for a, b in product(enumerate_codes(k, n1), enumerate_codes(k, n - n1)):
                if fq_product(a, b) != fq_product(b, a):
                    return a, b
    return None


def check_noncommutativity(max_degree: int) -> Witness:
    if find_noncommuting_pair(3, max_degree) is None:
        return {"k": 3, "reason": f"commutative up to degree {max_degree}"}
    pair = find_noncommuting_pair(2, max_degree)
    if pair is not None:
        return {"k": 2, "noncommuting": [str(c) for c in pair]}
    return None


# -- series -----------------------------------------------------------------

def check_generator_prefixes(ks: Iterable[int], order: int) -> Witness:
    for k in ks:
        if k not in fixtures.GENERATOR_SERIES:
            continue
        expected = fixtures.GENERATOR_SERIES[k][:order]
        got = generator_series(k, order).coeffs[1:]
        if got != expected:
            return {"k": k, "expected": expected, "got": got}
    return None


def check_hilbert(ks: Iterable[int], max_n: int, order: int) -> Witness:
    for k in ks:
        h = hilbert_series(k, order)
        g = generator_series(k, order)
        one = [1] + [0] * order
        if (h * (type(h)(one) - g)).coeffs != one:
            return {"k": k, "reason": "H (1 - G) != 1"}
        for n in range(order + 1):
            if h[n] != count_codes(k, n):
                return {"k": k, "n": n, "hilbert": h[n], "codes": count_codes(k, n)}
        for n in range(min(max_n, order) + 1):
            if h[n] != len({descent_code(p, k) for p in permutations(n)}):
                return {"k": k, "n": n, "reason": "brute-force class count"}
    return None


# -- orchestration ----------------------------------------------------------

@dataclass
class CheckRecord:
    check_id: str
    params: dict
    status: str
    witness: dict | None = None
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.records)

    def to_json(self, timings: bool = False) -> dict:
        records = []
        for r in self.records:
            row = asdict(r)
            if not timings:
                del row["elapsed"]
            if row["witness"] is None:
                del row["witness"]
            records.append(row)
        return {"suite": self.suite, "status": "pass" if self.passed else "fail", "records": records}


Check = tuple[str, dict, Callable[[], Witness]]


def build_checks(suite: str, ks: Sequence[int], max_n: int, order: int = 13) -> list[Check]:
    """Checks of one suite; `max_n` bounds sizes and total degrees throughout."""
    ks = tuple(ks)
    m = max_n
    small = tuple(k for k in ks if k >= 2)
    if suite == "codes":
        return [
            ("code-fixtures", {}, check_code_fixtures),
            ("code-listing", {}, check_code_listing),
            ("recoil-two-routes", {"k": ks, "max_n": m}, lambda: check_recoil_routes(ks, m)),
            ("pattern-round-trip", {"k": ks, "max_n": m}, lambda: check_pattern_round_trip(ks, m)),
            ("code-count", {"k": ks, "max_n": m}, lambda: check_code_counts(ks, m)),
            ("classical-descents", {"k": 2, "max_n": m}, lambda: check_classical_descents(m)),
        ]
    if suite == "classes":
        pairs = tuple((a, b) for a in small for b in small if a < b)
        return [
            ("doubleton-classes", {"k": 3, "n": 4}, check_doubleton_classes),
            ("exchange-classes", {"k": ks, "max_n": m}, lambda: check_exchange_classes(ks, m)),
            ("min-max", {"k": ks, "max_n": m}, lambda: check_min_max(ks, m)),
            ("value-windows", {"k": small, "max_n": m}, lambda: check_window_characterization(small, m)),
            ("refinement", {"pairs": pairs, "max_n": m}, lambda: check_refinement(pairs, m)),
        ]
    if suite == "intervals":
        return [("classes-are-intervals", {"k": ks, "max_n": m}, lambda: check_intervals(ks, m))]
    if suite == "ideals":
        return [("ideals-are-unions", {"k": ks, "max_n": m}, lambda: check_ideals(ks, m))]
    if suite == "stats":
        return [
            ("stat-fixtures", {"k": 3}, check_stat_fixtures),
            ("classical-eulerian", {"k": 2, "max_n": m}, lambda: check_classical_eulerian(m)),
            ("stat-invariants", {"k": ks, "max_n": m}, lambda: check_stat_invariants(ks, m)),
        ]
    if suite == "hopf":
        return [
            ("hopf-fixtures", {}, check_hopf_fixtures),
            ("associativity", {"max_degree": m}, lambda: check_associativity(m)),
            ("coassociativity", {"max_degree": m}, lambda: check_coassociativity(m)),
            ("bialgebra", {"max_degree": m}, lambda: check_bialgebra(m)),
            ("unit-counit", {"max_degree": m}, lambda: check_unit_counit(m)),
            ("g-product-duality", {"max_degree": m}, lambda: check_g_product_duality(m)),
            ("g-coproduct-routes", {"max_degree": m}, lambda: check_g_coproduct_routes(m)),
            ("multiplicative-s-e", {"max_degree": m}, lambda: check_multiplicative_bases(m)),
        ]
    if suite == "dsym":
        return [
            ("ribbon-fixture", {"k": 3}, check_ribbon_fixture),
            ("closure", {"k": small, "max_degree": m}, lambda: check_ribbon_closure(small, m, m)),
            ("code-multiplicative", {"k": small, "max_degree": m}, lambda: check_code_multiplicative(small, m)),
            ("triangularity", {"k": small, "max_degree": m}, lambda: check_triangularity(small, m)),
            ("classical-ribbons", {"k": 2, "max_degree": m}, lambda: check_classical_ribbons(m)),
            ("free-generators", {"k": small, "max_n": m}, lambda: check_free_generators(small, m)),
        ]
    if suite == "quotient":
        return [
            ("quotient-fixture", {"k": 3}, check_quotient_fixture),
            ("well-defined", {"k": small, "max_degree": m}, lambda: check_quotient_well_defined(small, m)),
            ("noncommutativity", {"max_degree": min(m, 4)}, lambda: check_noncommutativity(min(m, 4))),
        ]
    if suite == "series":
        return [
            ("generator-prefixes", {"k": ks, "order": order}, lambda: check_generator_prefixes(ks, order)),
            ("hilbert", {"k": ks, "max_n": m, "order": order}, lambda: check_hilbert(ks, m, order)),
        ]
    raise ValueError(f"unknown suite {suite!r}")


SUITES = ("codes", "classes", "intervals", "ideals", "stats", "hopf", "dsym", "quotient", "series")


def run_checks(suite: str, checks: Iterable[Check]) -> VerificationReport:
    report = VerificationReport(suite)
    for check_id, params, fn in checks:
        start = time.perf_counter()
        try:
            witness = fn()
        except NotInSubalgebra as exc:
            witness = {"not_in_subalgebra": str(exc.code)}
        elapsed = time.perf_counter() - start
        params = {key: list(v) if isinstance(v, tuple) else v for key, v in params.items()}
        report.records.append(
            CheckRecord(check_id, params, "pass" if witness is None else "fail", witness, round(elapsed, 4))
        )
    return report


def run_suite(suite: str, ks: Sequence[int], max_n: int, order: int = 13) -> VerificationReport:
    if suite == "all":
        combined = VerificationReport("all")
        for name in SUITES:
            part = run_checks(name, build_checks(name, ks, max_n, order))
            for r in part.records:
                r.check_id = f"{name}/{r.check_id}"
            combined.records.extend(part.records)
        return combined
    return run_checks(suite, build_checks(suite, ks, max_n, order))
