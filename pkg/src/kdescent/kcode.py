"""
k-descent and k-recoil codes, and the classes of permutations sharing a code.

A permutation is viewed as a permutation of the integers fixing everything
outside 1..n.  Digit i of the k-descent code is the rank of sigma(i) among
sigma(i-k+1), ..., sigma(i); the k-recoil code is the descent code of the
inverse.  Permutations with equal k-recoil codes form a class, which is an
interval of the right weak order reachable by swapping adjacent letters whose
values differ by at least k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Literal, Sequence

from .perm import (
    Perm,
    inverse,
    parse_word,
    permutations,
    render_word,
    restrict_to_values,
    standardize,
)

__all__ = [
    "KCode", "EquivClass", "Kind",
    "descent_code", "recoil_code", "recoil_code_by_restriction",
    "code_from_pattern", "pattern_from_code",
    "is_valid_code", "enumerate_codes", "count_codes",
    "min_rep", "max_rep", "is_min_element", "is_max_element",
    "recoil_class", "descent_class", "class_of_code", "classes_of_Sn",
    "words_equivalent",
]

Kind = Literal["recoil", "descent"]


def is_valid_code(digits: Sequence[int], k: int) -> bool:
    """Digit l (1-based) must lie in [max(k-l+1, 1), k]."""
    if k < 1:
        return False
    return all(max(k - l, 1) <= d <= k for l, d in enumerate(digits))


@dataclass(frozen=True, order=True)
class KCode:
    """A valid k-descent (equivalently k-recoil) code."""

    k: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.k < 1:
            raise ValueError(f"window width must be at least 1, got {self.k}")
        if not is_valid_code(self.digits, self.k):
            raise ValueError(f"{render_word(self.digits)} is not a valid {self.k}-code")

    @classmethod
    def parse(cls, text: str, k: int) -> KCode:
        return cls(k, parse_word(text))

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return render_word(self.digits) if self.digits else "()"

    def __add__(self, other: KCode) -> KCode:
        if other.k != self.k:
            raise ValueError("cannot concatenate codes of different widths")
        return KCode(self.k, self.digits + other.digits)


def _check_width(k: int) -> None:
    if k < 1:
        raise ValueError(f"window width must be at least 1, got {k}")


def _descent_digits(perm: Sequence[int], k: int) -> tuple[int, ...]:
    n = len(perm)
    digits = []
    for i in range(1, n + 1):
        v = perm[i - 1]
        # predecessors at positions <= 0 carry values <= 0, all smaller than v
        rank = 1 + max(0, k - i)
        for j in range(max(1, i - k + 1), i):
            if perm[j - 1] < v:
                rank += 1
        digits.append(rank)
    return tuple(digits)


def descent_code(perm: Perm, k: int) -> KCode:
    """
    >>> str(descent_code((8, 5, 7, 3, 6, 1, 2, 4), 3))
    '32212123'
    """
    _check_width(k)
    return KCode(k, _descent_digits(perm, k))


def recoil_code(perm: Perm, k: int) -> KCode:
    _check_width(k)
    return KCode(k, _descent_digits(inverse(perm), k))


def recoil_code_by_restriction(perm: Perm, k: int) -> KCode:
    """Recoil code read off value restrictions, without inverting."""
    _check_width(k)
    digits = []
    for i in range(1, len(perm) + 1):
        below_one = max(0, k - i)
        restricted = restrict_to_values(perm, max(1, i - k + 1), i)
        digits.append(below_one + restricted.index(i) + 1)
    return KCode(k, tuple(digits))


def _perm_from_prefix_ranks(ranks: Sequence[int]) -> Perm:
    # ranks[i] is the rank of letter i among the first i+1 letters
    available = list(range(1, len(ranks) + 1))
    result = [0] * len(ranks)
    for i in range(len(ranks) - 1, -1, -1):
        result[i] = available.pop(ranks[i] - 1)
    return tuple(result)


def code_from_pattern(windows: Sequence[Perm]) -> KCode:
    """Descent code of the first window followed by the last-letter rank of every later window."""
    if not windows:
        raise ValueError("pattern must contain at least one window")
    k = len(windows[0])
    first = descent_code(windows[0], k)
    return KCode(k, first.digits + tuple(w[-1] for w in windows[1:]))


def pattern_from_code(code: KCode) -> tuple[Perm, ...]:
    k, digits = code.k, code.digits
    if len(digits) < k:
        raise ValueError(f"code of length {len(digits)} is shorter than the window width {k}")
    # inside the first window, digit i counts k-i values from the fixed points below 1
    window = _perm_from_prefix_ranks([d - (k - i) for i, d in enumerate(digits[:k], 1)])
    windows = [window]
    for d in digits[k:]:
        tail = standardize(window[1:])
        window = tuple(v + 1 if v >= d else v for v in tail) + (d,)
        windows.append(window)
    return tuple(windows)


def enumerate_codes(k: int, n: int) -> list[KCode]:
    """All valid k-codes of length n in lexicographic order."""
    _check_width(k)
    ranges = [range(max(k - l, 1), k + 1) for l in range(n)]
    return [KCode(k, digits) for digits in product(*ranges)]


def count_codes(k: int, n: int) -> int:
    _check_width(k)
    if n <= k:
        return factorial(n)
    return factorial(k) * k ** (n - k)


def _insertion_rep(code: KCode, rightmost: bool) -> Perm:
    k = code.k
    word: list[int] = []
    for r, digit in enumerate(code.digits, 1):
        # r must sit at position `digit` among the values r-k+1..r
        slot = digit - max(0, k - r)
        low = max(1, r - k + 1)
        marks = [j for j, v in enumerate(word) if low <= v]
        if rightmost:
            at = marks[slot - 1] if slot <= len(marks) else len(word)
        else:
            at = marks[slot - 2] + 1 if slot >= 2 else 0
        word.insert(at, r)
    return tuple(word)


def min_rep(code: KCode) -> Perm:
    """
    Lexicographically smallest permutation with the given recoil code.

    >>> min_rep(KCode(3, (3, 2, 2, 3)))
    (2, 3, 1, 4)
    """
    return _insertion_rep(code, rightmost=True)


def max_rep(code: KCode) -> Perm:
    return _insertion_rep(code, rightmost=False)


def is_min_element(perm: Perm, k: int) -> bool:
    return all(a - b < k for a, b in zip(perm, perm[1:]))


def is_max_element(perm: Perm, k: int) -> bool:
    return all(b - a < k for a, b in zip(perm, perm[1:]))


@dataclass(frozen=True)
class EquivClass:
    k: int
    kind: Kind
    code: KCode
    members: tuple[Perm, ...]
    min_rep: Perm
    max_rep: Perm = field(repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in self.members


def _exchange_closure(perm: Perm, k: int) -> list[Perm]:
    seen = {perm}
    queue = deque([perm])
    while queue:
        p = queue.popleft()
        for i in range(len(p) - 1):
            if abs(p[i] - p[i + 1]) >= k:
                q = p[:i] + (p[i + 1], p[i]) + p[i + 2:]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
    return sorted(seen)


def recoil_class(perm: Perm, k: int) -> EquivClass:
    """Class of `perm` under exchanges of adjacent values differing by at least k."""
    _check_width(k)
    perm = tuple(perm)
    members = _exchange_closure(perm, k)
    return EquivClass(k, "recoil", recoil_code(perm, k), tuple(members), members[0], members[-1])


def descent_class(perm: Perm, k: int) -> EquivClass:
    """Permutations sharing the k-descent code of `perm`; extremes are taken in the left weak order."""
    rc = recoil_class(inverse(perm), k)
    members = sorted(inverse(p) for p in rc.members)
    return EquivClass(k, "descent", rc.code, tuple(members), inverse(rc.min_rep), inverse(rc.max_rep))


@lru_cache(maxsize=None)
def class_of_code(code: KCode, kind: Kind = "descent") -> EquivClass:
    """The class indexed by `code`, built from its minimal representative."""
    rep = min_rep(code)
    if kind == "recoil":
        return recoil_class(rep, code.k)
    if kind == "descent":
        return descent_class(inverse(rep), code.k)
    raise ValueError(f"kind must be 'recoil' or 'descent', got {kind!r}")


def classes_of_Sn(n: int, k: int, kind: Kind = "recoil") -> list[EquivClass]:
    """Partition of S_n into classes, sorted by code."""
    _check_width(k)
    if kind not in ("recoil", "descent"):
        raise ValueError(f"kind must be 'recoil' or 'descent', got {kind!r}")
    coder = recoil_code if kind == "recoil" else descent_code
    groups: dict[KCode, list[Perm]] = {}
    for p in permutations(n):
        groups.setdefault(coder(p, k), []).append(p)
    result = []
    for code in sorted(groups):
        members = tuple(groups[code])
        if kind == "recoil":
            low, high = members[0], members[-1]
        else:
            low, high = inverse(min_rep(code)), inverse(max_rep(code))
        result.append(EquivClass(k, kind, code, members, low, high))
    return result


def words_equivalent(u: Sequence[int], v: Sequence[int], k: int) -> bool:
    """Rearrangements of each other whose standardizations share their k-recoil code."""
    if sorted(u) != sorted(v):
        return False
    return recoil_code(standardize(u), k) == recoil_code(standardize(v), k)
