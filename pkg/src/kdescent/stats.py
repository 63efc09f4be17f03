"""
k-Eulerian and k-major polynomials of the symmetric groups.

Both are sums over S_n of a monomial read off the k-recoil code c of each
permutation: the Eulerian monomial is t_{c_2} t_{c_3} ... t_{c_n}, the major
monomial is the product of q_{c_i}^(i-1).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field

from .kcode import recoil_code
from .perm import permutations

__all__ = ["MultiPoly", "eulerian_poly", "major_poly", "specialize"]


@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial with integer coefficients in named variables."""

    variables: tuple[str, ...]
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent vector {exps} does not match variables {self.variables}")
            if c:
                clean[exps] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, c: int, variables=()) -> MultiPoly:
        return cls(tuple(variables), {(0,) * len(variables): c})

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other: MultiPoly) -> MultiPoly:
        if other.variables != self.variables:
            raise ValueError("cannot add polynomials in different variables")
        total = Counter(self.terms)
        total.update(other.terms)
        return MultiPoly(self.variables, total)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def evaluate(self, values: Mapping[str, int]) -> int:
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise ValueError(f"no value for {', '.join(missing)}")
        total = 0
        for exps, c in self.terms.items():
            term = c
            for name, e in zip(self.variables, exps):
                term *= values[name] ** e
            total += term
        return total

    def ordered_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms by decreasing total degree, then decreasing exponents of the first variables."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.ordered_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps) if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [{"exponents": list(e), "coeff": c} for e, c in self.ordered_terms()],
        }


def _variables(prefix: str, k: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, k + 1))


def _code_statistic(n: int, k: int, prefix: str, exponents) -> MultiPoly:
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    terms: Counter = Counter()
    for perm in permutations(n):
        exps = [0] * k
        for i, d in enumerate(recoil_code(perm, k).digits, 1):
            exps[d - 1] += exponents(i)
        terms[tuple(exps)] += 1
    return MultiPoly(_variables(prefix, k), terms)


def eulerian_poly(n: int, k: int) -> MultiPoly:
    """
    Multivariate k-Eulerian polynomial in t1..tk; the first code digit is skipped.
    n = 0 gives the constant 1.

    >>> str(eulerian_poly(2, 3))
    't2 + t3'
    """
    return _code_statistic(n, k, "t", lambda i: 0 if i == 1 else 1)


def major_poly(n: int, k: int) -> MultiPoly:
    """Multivariate k-major polynomial in q1..qk; digit i carries exponent i-1."""
    return _code_statistic(n, k, "q", lambda i: i - 1)


def specialize(poly: MultiPoly, assignment: Mapping[str, int | str]) -> MultiPoly:
    """
    Substitute integers or (possibly renamed) single variables.

    Variables mapped to strings become the variables of the result, in order of
    first appearance among `poly.variables`.
    """
    missing = [v for v in poly.variables if v not in assignment]
    if missing:
        raise ValueError(f"assignment does not cover {', '.join(missing)}")
    targets: list[str] = []
    for v in poly.variables:
        a = assignment[v]
        if isinstance(a, str) and a not in targets:
            targets.append(a)
    terms: Counter = Counter()
    for exps, c in poly.terms.items():
        new = [0] * len(targets)
        for name, e in zip(poly.variables, exps):
            a = assignment[name]
            if isinstance(a, str):
                new[targets.index(a)] += e
            else:
                c *= a ** e
        terms[tuple(new)] += c
    return MultiPoly(tuple(targets), terms)
