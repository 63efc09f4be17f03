"""
The Hopf algebra of permutations (free quasi-symmetric functions).

Elements are sparse integer combinations of basis elements indexed by
permutations of any size, the empty permutation being the unit.  Four bases
are available:

* ``F``: shifted shuffle product, deconcatenation coproduct;
* ``G``: G_sigma = F_{sigma^-1}, the working basis for everything else;
* ``Sperm``: S^sigma, the sum of G_tau over tau below sigma in the left weak order;
* ``Eperm``: E^sigma, the sum of G_tau over tau above sigma in the left weak order.

S and E are multiplicative: S^a S^b = S^{a[|b|].b} and E^a E^b = E^{a.b[|a|]}.
"""

from __future__ import annotations

import heapq
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .perm import (
    Perm,
    inverse,
    inversion_count,
    render_word,
    restrict_to_values,
    shift,
    shifted_concat_bottom,
    shifted_concat_top,
    standardize,
    weak_filter,
    weak_ideal,
)

__all__ = [
    "BASES", "HopfElement", "TensorElement",
    "shuffle", "f_product", "g_product", "f_coproduct", "g_coproduct",
    "g_coproduct_by_duality", "coproduct",
    "s_elem", "e_elem", "s_product_index", "e_product_index",
]

BASES = ("F", "G", "Sperm", "Eperm")
_LABELS = {"F": "F", "G": "G", "Sperm": "S", "Eperm": "E"}


def _clean(terms: Mapping) -> dict:
    return {key: c for key, c in terms.items() if c}


def _sort_key(perm: Perm):
    return (len(perm), perm)


def _render_term(label: str, perm: Perm) -> str:
    return "1" if not perm else f"{label}[{render_word(perm)}]"


def _render_sum(pieces: Iterable[tuple[str, int]]) -> str:
    out = []
    for text, c in pieces:
        if c == 1:
            piece = text
        elif c == -1:
            piece = "-" + text
        else:
            piece = f"{c}*{text}"
        out.append(piece)
    return " + ".join(out).replace("+ -", "- ") if out else "0"


def _check_basis(basis: str) -> None:
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {', '.join(BASES)}")


@dataclass(frozen=True)
class HopfElement:
    basis: str
    terms: Mapping[Perm, int] = field(default_factory=dict)

    def __post_init__(self):
        _check_basis(self.basis)
        object.__setattr__(self, "terms", _clean({tuple(p): int(c) for p, c in self.terms.items()}))

    @classmethod
    def basis_element(cls, basis: str, perm: Iterable[int]) -> HopfElement:
        return cls(basis, {tuple(perm): 1})

    @classmethod
    def one(cls, basis: str = "G") -> HopfElement:
        return cls(basis, {(): 1})

    def __eq__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def _same_basis(self, other: HopfElement) -> None:
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} and {other.basis}")

    def __add__(self, other: HopfElement) -> HopfElement:
        self._same_basis(other)
        total = Counter(self.terms)
        total.update(other.terms)
        return HopfElement(self.basis, total)

    def __neg__(self) -> HopfElement:
        return HopfElement(self.basis, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: HopfElement) -> HopfElement:
        return self + (-other)

    def __rmul__(self, scalar: int) -> HopfElement:
        return HopfElement(self.basis, {p: scalar * c for p, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._same_basis(other)
        if self.basis == "F":
            return f_product(self, other)
        if self.basis == "G":
            return g_product(self, other)
        return g_product(self.to_basis("G"), other.to_basis("G")).to_basis(self.basis)

    def counit(self) -> int:
        return self.terms.get((), 0)

    def degrees(self) -> set[int]:
        return {len(p) for p in self.terms}

    def homogeneous_part(self, n: int) -> HopfElement:
        return HopfElement(self.basis, {p: c for p, c in self.terms.items() if len(p) == n})

    def to_basis(self, basis: str) -> HopfElement:
        _check_basis(basis)
        if basis == self.basis:
            return self
        g = _to_g(self)
        return g if basis == "G" else _from_g(g, basis)

    def coproduct(self) -> TensorElement:
        return coproduct(self)

    def ordered_terms(self) -> list[tuple[Perm, int]]:
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    def __str__(self) -> str:
        label = _LABELS[self.basis]
        return _render_sum((_render_term(label, p), c) for p, c in self.ordered_terms())

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"perm": list(p), "coeff": c} for p, c in self.ordered_terms()],
        }


@dataclass(frozen=True)
class TensorElement:
    """Element of the tensor square, both legs in the same basis."""

    basis: str
    terms: Mapping[tuple[Perm, Perm], int] = field(default_factory=dict)

    def __post_init__(self):
        _check_basis(self.basis)
        object.__setattr__(
            self, "terms",
            _clean({(tuple(a), tuple(b)): int(c) for (a, b), c in self.terms.items()}),
        )

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __add__(self, other: TensorElement) -> TensorElement:
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} and {other.basis}")
        total = Counter(self.terms)
        total.update(other.terms)
        return TensorElement(self.basis, total)

    def __mul__(self, other: TensorElement) -> TensorElement:
        """Leg-wise product (a x b)(c x d) = ac x bd."""
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} and {other.basis}")
        total: Counter = Counter()
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                left = HopfElement.basis_element(self.basis, a) * HopfElement.basis_element(self.basis, x)
                right = HopfElement.basis_element(self.basis, b) * HopfElement.basis_element(self.basis, y)
                for p, e in left.terms.items():
                    for q, f in right.terms.items():
                        total[(p, q)] += c * d * e * f
        return TensorElement(self.basis, total)

    def to_basis(self, basis: str) -> TensorElement:
        if basis == self.basis:
            return self
        total: Counter = Counter()
        for (a, b), c in self.terms.items():
            left = HopfElement.basis_element(self.basis, a).to_basis(basis)
            right = HopfElement.basis_element(self.basis, b).to_basis(basis)
            for p, e in left.terms.items():
                for q, f in right.terms.items():
                    total[(p, q)] += c * e * f
        return TensorElement(basis, total)

    def ordered_terms(self) -> list[tuple[tuple[Perm, Perm], int]]:
        # decreasing degree of the left leg, matching the usual display of coproducts
        return sorted(self.terms.items(), key=lambda t: (-len(t[0][0]), t[0]))

    def __str__(self) -> str:
        label = _LABELS[self.basis]
        return _render_sum(
            (f"{_render_term(label, a)} ⊗ {_render_term(label, b)}", c)
            for (a, b), c in self.ordered_terms()
        )

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"left": list(a), "right": list(b), "coeff": c} for (a, b), c in self.ordered_terms()],
        }


def shuffle(u: tuple[int, ...], v: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All interleavings of u and v, with multiplicity."""
    n = len(u) + len(v)
    result = []
    for places in combinations(range(n), len(u)):
        word = [0] * n
        chosen = set(places)
        ui, vi = iter(u), iter(v)
        for i in range(n):
            word[i] = next(ui) if i in chosen else next(vi)
        result.append(tuple(word))
    return result


@lru_cache(maxsize=100_000)
def _f_product_basis(sigma: Perm, tau: Perm) -> tuple[Perm, ...]:
    return tuple(shuffle(sigma, shift(tau, len(sigma))))


def _require(elem: HopfElement, basis: str) -> None:
    if elem.basis != basis:
        raise ValueError(f"expected an element in the {basis} basis, got {elem.basis}")


def f_product(a: HopfElement, b: HopfElement) -> HopfElement:
    """F_sigma F_tau is the sum of F_w over shuffles of sigma with tau shifted by |sigma|."""
    _require(a, "F")
    _require(b, "F")
    total: Counter = Counter()
    for sigma, c in a.terms.items():
        for tau, d in b.terms.items():
            for w in _f_product_basis(sigma, tau):
                total[w] += c * d
    return HopfElement("F", total)


def g_product(a: HopfElement, b: HopfElement) -> HopfElement:
    """Computed on inverses in the F basis: [G_w] G_sigma G_tau = [F_{w^-1}] F_{sigma^-1} F_{tau^-1}."""
    _require(a, "G")
    _require(b, "G")
    total: Counter = Counter()
    for sigma, c in a.terms.items():
        si = inverse(sigma)
        for tau, d in b.terms.items():
            for w in _f_product_basis(si, inverse(tau)):
                total[inverse(w)] += c * d
    return HopfElement("G", total)


def _deconcatenations(sigma: Perm) -> list[tuple[Perm, Perm]]:
    return [(standardize(sigma[:i]), standardize(sigma[i:])) for i in range(len(sigma) + 1)]


def f_coproduct(a: HopfElement) -> TensorElement:
    _require(a, "F")
    total: Counter = Counter()
    for sigma, c in a.terms.items():
        for pair in _deconcatenations(sigma):
            total[pair] += c
    return TensorElement("F", total)


def g_coproduct(a: HopfElement) -> TensorElement:
    """Delta G_sigma = sum over i of G_{std(sigma|values<=i)} x G_{std(sigma|values>i)}."""
    _require(a, "G")
    total: Counter = Counter()
    for sigma, c in a.terms.items():
        n = len(sigma)
        for i in range(n + 1):
            low = standardize(restrict_to_values(sigma, 1, i))
            high = standardize(restrict_to_values(sigma, i + 1, n))
            total[(low, high)] += c
    return TensorElement("G", total)


def g_coproduct_by_duality(a: HopfElement) -> TensorElement:
    _require(a, "G")
    total: Counter = Counter()
    for sigma, c in a.terms.items():
        for left, right in _deconcatenations(inverse(sigma)):
            total[(inverse(left), inverse(right))] += c
    return TensorElement("G", total)


def coproduct(a: HopfElement) -> TensorElement:
    if a.basis == "F":
        return f_coproduct(a)
    if a.basis == "G":
        return g_coproduct(a)
    return g_coproduct(a.to_basis("G")).to_basis(a.basis)


@lru_cache(maxsize=100_000)
def _left_ideal(sigma: Perm) -> tuple[Perm, ...]:
    return tuple(weak_ideal(sigma, "left"))


@lru_cache(maxsize=100_000)
def _left_filter(sigma: Perm) -> tuple[Perm, ...]:
    return tuple(weak_filter(sigma, "left"))


def s_elem(sigma: Perm) -> HopfElement:
    """S^sigma expanded in G."""
    return HopfElement("G", dict.fromkeys(_left_ideal(tuple(sigma)), 1))


def e_elem(sigma: Perm) -> HopfElement:
    """E^sigma expanded in G."""
    return HopfElement("G", dict.fromkeys(_left_filter(tuple(sigma)), 1))


def s_product_index(sigma: Perm, tau: Perm) -> Perm:
    return shifted_concat_top(sigma, tau)


def e_product_index(sigma: Perm, tau: Perm) -> Perm:
    return shifted_concat_bottom(sigma, tau)


def _to_g(elem: HopfElement) -> HopfElement:
    if elem.basis == "G":
        return elem
    if elem.basis == "F":
        return HopfElement("G", {inverse(p): c for p, c in elem.terms.items()})
    expand = _left_ideal if elem.basis == "Sperm" else _left_filter
    total: Counter = Counter()
    for sigma, c in elem.terms.items():
        for tau in expand(sigma):
            total[tau] += c
    return HopfElement("G", total)


def _from_g(elem: HopfElement, basis: str) -> HopfElement:
    if basis == "F":
        return HopfElement("F", {inverse(p): c for p, c in elem.terms.items()})
    # unitriangular along the left weak order: peel off extreme terms first
    top_first = basis == "Sperm"
    expand = _left_ideal if top_first else _left_filter
    sign = -1 if top_first else 1

    def key(p):
        return (-len(p), sign * inversion_count(p), p)

    rest = Counter(elem.terms)
    heap = [key(p) for p in rest]
    heapq.heapify(heap)
    queued = set(rest)
    result: Counter = Counter()
    while heap:
        sigma = heapq.heappop(heap)[2]
        c = rest.pop(sigma, 0)
        if not c:
            continue
        result[sigma] += c
        for tau in expand(sigma):
            if tau == sigma:
                continue
            rest[tau] -= c
            if tau not in queued:
                queued.add(tau)
                heapq.heappush(heap, key(tau))
    return HopfElement(basis, result)
