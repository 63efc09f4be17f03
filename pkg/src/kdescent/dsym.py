"""
The subalgebra DSym(k) of FQSym spanned by sums over k-descent classes, and
its dual, the quotient DQSym(k) of FQSym by equality of k-descent codes.

Bases of DSym(k), indexed by k-codes C:

* ``R``: the ribbon R_C, sum of G_sigma over the permutations with descent code C;
* ``Scode``: S^C = S^{w_C}, w_C the top of that class in the left weak order;
* ``Ecode``: E^C = E^{a_C}, a_C the bottom of that class.

DQSym(k) has the basis ``Fclass``: F_C is the image of any F_sigma with
descent code C.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field

from .fqsym import (
    HopfElement,
    TensorElement,
    e_elem,
    f_coproduct,
    f_product,
    g_coproduct,
    g_product,
    s_elem,
)
from .kcode import KCode, class_of_code, descent_code, enumerate_codes
from .perm import (
    Perm,
    inverse,
    is_connected,
    mirror,
    shifted_concat_bottom,
    shifted_concat_top,
)
from .series import PowerSeries

__all__ = [
    "CODE_BASES", "NotInSubalgebra", "CodeElement", "CodeTensor",
    "ribbon_to_g", "scode_to_g", "ecode_to_g", "g_to_ribbons", "g_to_code_basis",
    "ribbon_product", "ribbon_coproduct",
    "scode_product_index", "ecode_product_index", "class_top", "class_bottom",
    "count_free_generators", "hilbert_series", "generator_series",
    "f_class", "class_representative", "project_to_classes", "project_tensor_to_classes",
    "fq_product", "fq_coproduct",
]

CODE_BASES = ("R", "Scode", "Ecode", "Fclass")
_LABELS = {"R": "R", "Scode": "S", "Ecode": "E", "Fclass": "F"}


class NotInSubalgebra(ValueError):
    """G-coefficients are not constant on a k-descent class."""

    def __init__(self, code, coeffs: Mapping):
        self.code = code
        self.coeffs = dict(coeffs)
        shown = ", ".join(f"{''.join(map(str, p)) or '()'}:{c}" for p, c in sorted(self.coeffs.items()))
        super().__init__(f"coefficients not constant on the class of {code}: {shown}")


def _render_code(label: str, code: KCode) -> str:
    return "1" if not code.digits else f"{label}[{code}]"


def _render_sum(pieces) -> str:
    out = []
    for text, c in pieces:
        out.append(text if c == 1 else ("-" + text if c == -1 else f"{c}*{text}"))
    return " + ".join(out).replace("+ -", "- ") if out else "0"


def _check_codes(k: int, codes) -> None:
    for code in codes:
        if code.k != k:
            raise ValueError(f"code {code} has width {code.k}, expected {k}")


@dataclass(frozen=True)
class CodeElement:
    k: int
    basis: str
    terms: Mapping[KCode, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in CODE_BASES:
            raise ValueError(f"unknown basis {self.basis!r}; expected one of {', '.join(CODE_BASES)}")
        _check_codes(self.k, self.terms)
        object.__setattr__(self, "terms", {c: int(v) for c, v in self.terms.items() if v})

    @classmethod
    def basis_element(cls, basis: str, code: KCode) -> CodeElement:
        return cls(code.k, basis, {code: 1})

    def __eq__(self, other):
        if not isinstance(other, CodeElement):
            return NotImplemented
        return (self.k, self.basis, self.terms) == (other.k, other.basis, other.terms)

    def __hash__(self):
        return hash((self.k, self.basis, frozenset(self.terms.items())))

    def _compatible(self, other: CodeElement) -> None:
        if (other.k, other.basis) != (self.k, self.basis):
            raise ValueError(f"cannot combine {self.basis}(k={self.k}) with {other.basis}(k={other.k})")

    def __add__(self, other: CodeElement) -> CodeElement:
        self._compatible(other)
        total = Counter(self.terms)
        total.update(other.terms)
        return CodeElement(self.k, self.basis, total)

    def __neg__(self) -> CodeElement:
        return CodeElement(self.k, self.basis, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other: CodeElement) -> CodeElement:
        return self + (-other)

    def __rmul__(self, scalar: int) -> CodeElement:
        return CodeElement(self.k, self.basis, {c: scalar * v for c, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._compatible(other)
        if self.basis == "Fclass":
            total: Counter = Counter()
            for a, c in self.terms.items():
                for b, d in other.terms.items():
                    for code, e in fq_product(a, b).terms.items():
                        total[code] += c * d * e
            return CodeElement(self.k, "Fclass", total)
        product = g_product(self.to_g(), other.to_g())
        return g_to_code_basis(product, self.k, self.basis)

    def to_g(self) -> HopfElement:
        if self.basis == "Fclass":
            raise ValueError("quotient elements have no image in FQSym")
        expand = {"R": ribbon_to_g, "Scode": scode_to_g, "Ecode": ecode_to_g}[self.basis]
        total: Counter = Counter()
        for code, c in self.terms.items():
            for perm, d in expand(code).terms.items():
                total[perm] += c * d
        return HopfElement("G", total)

    def to_basis(self, basis: str) -> CodeElement:
        if basis == self.basis:
            return self
        return g_to_code_basis(self.to_g(), self.k, basis)

    def coproduct(self) -> CodeTensor:
        if self.basis == "Fclass":
            total = CodeTensor(self.k, "Fclass")
            for code, c in self.terms.items():
                part = fq_coproduct(code)
                total = total + CodeTensor(self.k, "Fclass", {p: c * v for p, v in part.terms.items()})
            return total
        return _regroup_tensor(g_coproduct(self.to_g()), self.k).to_basis(self.basis)

    def ordered_terms(self) -> list[tuple[KCode, int]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].digits))

    def __str__(self) -> str:
        label = _LABELS[self.basis]
        return _render_sum((_render_code(label, code), c) for code, c in self.ordered_terms())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "basis": self.basis,
            "terms": [{"code": list(code.digits), "coeff": c} for code, c in self.ordered_terms()],
        }


@dataclass(frozen=True)
class CodeTensor:
    k: int
    basis: str
    terms: Mapping[tuple[KCode, KCode], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in CODE_BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "terms", {p: int(v) for p, v in self.terms.items() if v})

    def __eq__(self, other):
        if not isinstance(other, CodeTensor):
            return NotImplemented
        return (self.k, self.basis, self.terms) == (other.k, other.basis, other.terms)

    def __add__(self, other: CodeTensor) -> CodeTensor:
        if (other.k, other.basis) != (self.k, self.basis):
            raise ValueError("cannot add tensors over different bases")
        total = Counter(self.terms)
        total.update(other.terms)
        return CodeTensor(self.k, self.basis, total)

    def to_basis(self, basis: str) -> CodeTensor:
        if basis == self.basis:
            return self
        total: Counter = Counter()
        for (a, b), c in self.terms.items():
            left = CodeElement.basis_element(self.basis, a).to_basis(basis)
            right = CodeElement.basis_element(self.basis, b).to_basis(basis)
            for x, d in left.terms.items():
                for y, e in right.terms.items():
                    total[(x, y)] += c * d * e
        return CodeTensor(self.k, basis, total)

    def ordered_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-len(t[0][0]), t[0][0].digits, t[0][1].digits))

    def __str__(self) -> str:
        label = _LABELS[self.basis]
        return _render_sum(
            (f"{_render_code(label, a)} ⊗ {_render_code(label, b)}", c)
            for (a, b), c in self.ordered_terms()
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "basis": self.basis,
            "terms": [
                {"left": list(a.digits), "right": list(b.digits), "coeff": c}
                for (a, b), c in self.ordered_terms()
            ],
        }


def class_top(code: KCode) -> Perm:
    """Maximum of the descent class of `code` in the left weak order."""
    return class_of_code(code, "descent").max_rep


def class_bottom(code: KCode) -> Perm:
    return class_of_code(code, "descent").min_rep


def ribbon_to_g(code: KCode) -> HopfElement:
    return HopfElement("G", dict.fromkeys(class_of_code(code, "descent").members, 1))


def scode_to_g(code: KCode) -> HopfElement:
    return s_elem(class_top(code))


def ecode_to_g(code: KCode) -> HopfElement:
    return e_elem(class_bottom(code))


def g_to_ribbons(elem: HopfElement, k: int) -> CodeElement:
    """Rewrite a G-combination on ribbons, or raise NotInSubalgebra with a witness class."""
    if elem.basis != "G":
        raise ValueError(f"expected an element in the G basis, got {elem.basis}")
    seen: dict[KCode, int] = {}
    for perm, c in elem.terms.items():
        code = descent_code(perm, k)
        if code in seen:
            continue
        members = class_of_code(code, "descent").members
        coeffs = {p: elem.terms.get(p, 0) for p in members}
        if len(set(coeffs.values())) != 1:
            raise NotInSubalgebra(code, coeffs)
        seen[code] = c
    return CodeElement(k, "R", seen)


def g_to_code_basis(elem: HopfElement, k: int, basis: str) -> CodeElement:
    ribbons = g_to_ribbons(elem, k)
    if basis == "R":
        return ribbons
    if basis not in ("Scode", "Ecode"):
        raise ValueError(f"cannot express a G-element in the {basis} basis")
    perm_basis, extreme = ("Sperm", class_top) if basis == "Scode" else ("Eperm", class_bottom)
    terms = {}
    for perm, c in elem.to_basis(perm_basis).terms.items():
        code = descent_code(perm, k)
        if extreme(code) != perm:
            raise NotInSubalgebra(code, {perm: c})
        terms[code] = c
    return CodeElement(k, basis, terms)


def ribbon_product(a: KCode, b: KCode) -> CodeElement:
    """R_a R_b in ribbons; a NotInSubalgebra here contradicts closure of DSym(k)."""
    if a.k != b.k:
        raise ValueError("codes must share their window width")
    return g_to_ribbons(g_product(ribbon_to_g(a), ribbon_to_g(b)), a.k)


def _regroup_tensor(tensor: TensorElement, k: int) -> CodeTensor:
    seen: dict[tuple[KCode, KCode], int] = {}
    for (left, right), c in tensor.terms.items():
        key = (descent_code(left, k), descent_code(right, k))
        if key in seen:
            continue
        lefts = class_of_code(key[0], "descent").members
        rights = class_of_code(key[1], "descent").members
        coeffs = {(x, y): tensor.terms.get((x, y), 0) for x in lefts for y in rights}
        if len(set(coeffs.values())) != 1:
            raise NotInSubalgebra(key, coeffs)
        seen[key] = c
    return CodeTensor(k, "R", seen)


def ribbon_coproduct(code: KCode) -> CodeTensor:
    return _regroup_tensor(g_coproduct(ribbon_to_g(code)), code.k)


def scode_product_index(a: KCode, b: KCode) -> KCode:
    if a.k != b.k:
        raise ValueError("codes must share their window width")
    return descent_code(shifted_concat_top(class_top(a), class_top(b)), a.k)


def ecode_product_index(a: KCode, b: KCode) -> KCode:
    if a.k != b.k:
        raise ValueError("codes must share their window width")
    return descent_code(shifted_concat_bottom(class_bottom(a), class_bottom(b)), a.k)


def count_free_generators(n: int, k: int, side: str = "S") -> int:
    """
    Number of degree-n free generators of DSym(k).

    Side S counts class tops whose mirror image is connected; side E counts
    connected class bottoms.
    """
    if n < 1:
        raise ValueError("generators have degree at least 1")
    if side == "S":
        return sum(is_connected(mirror(class_top(c))) for c in enumerate_codes(k, n))
    if side == "E":
        return sum(is_connected(class_bottom(c)) for c in enumerate_codes(k, n))
    raise ValueError(f"side must be 'S' or 'E', got {side!r}")


def hilbert_series(k: int, order: int) -> PowerSeries:
    """Graded dimensions j! for j < k, then k! k^(j-k)."""
    if k < 1 or order < 0:
        raise ValueError("need k >= 1 and order >= 0")
    coeffs = []
    fact = 1
    for j in range(order + 1):
        if j >= 1:
            fact *= min(j, k)
        coeffs.append(fact)
    return PowerSeries(coeffs)


def generator_series(k: int, order: int) -> PowerSeries:
    """G_k = 1 - 1/H_k; coefficient 0 is 0."""
    one = PowerSeries([1] + [0] * order)
    return one - hilbert_series(k, order).inverse()


def f_class(perm: Perm, k: int) -> KCode:
    return descent_code(perm, k)


def class_representative(code: KCode) -> Perm:
    """Lexicographically smallest permutation with descent code `code`."""
    return inverse(class_of_code(code, "recoil").min_rep)


def project_to_classes(elem: HopfElement, k: int) -> CodeElement:
    """Image of an F-combination in the quotient DQSym(k)."""
    if elem.basis != "F":
        raise ValueError(f"expected an element in the F basis, got {elem.basis}")
    total: Counter = Counter()
    for perm, c in elem.terms.items():
        total[descent_code(perm, k)] += c
    return CodeElement(k, "Fclass", total)


def project_tensor_to_classes(tensor: TensorElement, k: int) -> CodeTensor:
    if tensor.basis != "F":
        raise ValueError(f"expected a tensor in the F basis, got {tensor.basis}")
    total: Counter = Counter()
    for (a, b), c in tensor.terms.items():
        total[(descent_code(a, k), descent_code(b, k))] += c
    return CodeTensor(k, "Fclass", total)


def fq_product(a: KCode, b: KCode) -> CodeElement:
    """F_a F_b in DQSym(k), computed on the lexicographically smallest representatives."""
    if a.k != b.k:
        raise ValueError("codes must share their window width")
    product = f_product(
        HopfElement.basis_element("F", class_representative(a)),
        HopfElement.basis_element("F", class_representative(b)),
    )
    return project_to_classes(product, a.k)


def fq_coproduct(code: KCode) -> CodeTensor:
    tensor = f_coproduct(HopfElement.basis_element("F", class_representative(code)))
    return project_tensor_to_classes(tensor, code.k)
