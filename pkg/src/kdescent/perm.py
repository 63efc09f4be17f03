"""
Permutations and words in one-line notation.

A permutation of size n is a tuple containing each of 1..n exactly once; the
empty tuple is the permutation of size 0.  Words are tuples of positive
integers with repetitions allowed.

>>> standardize((2, 2, 1, 3, 1, 2))
(3, 4, 1, 6, 2, 5)
>>> inverse((4, 2, 5, 1, 6, 3))
(4, 2, 6, 1, 3, 5)
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from itertools import permutations as _itertools_permutations
from typing import Literal

__all__ = [
    "Perm", "Word", "Side",
    "is_permutation", "check_perm", "identity", "longest",
    "standardize", "inverse", "shift",
    "shifted_concat_top", "shifted_concat_bottom",
    "restrict_to_values", "window_patterns", "is_compatible_pattern",
    "inversion_set", "inversion_count", "weak_leq", "weak_ideal", "weak_filter",
    "weak_interval", "is_connected", "mirror", "complement", "permutations",
    "render_word", "parse_word", "parse_perm",
]

Perm = tuple[int, ...]
Word = tuple[int, ...]
Side = Literal["right", "left"]


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def check_perm(word: Sequence[int]) -> Perm:
    """Return `word` as a tuple, raising ValueError unless it is a permutation."""
    perm = tuple(word)
    if not is_permutation(perm):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {render_word(perm)}")
    return perm


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """The maximal permutation n..1 of the weak orders."""
    return tuple(range(n, 0, -1))


def standardize(word: Sequence[int]) -> Perm:
    """
    Relabel `word` by 1..n keeping relative order; equal letters are numbered
    left to right.

    >>> standardize((8, 5, 7))
    (3, 1, 2)
    """
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    result = [0] * len(word)
    for rank, i in enumerate(order, 1):
        result[i] = rank
    return tuple(result)


def inverse(perm: Sequence[int]) -> Perm:
    result = [0] * len(perm)
    for i, v in enumerate(perm, 1):
        result[v - 1] = i
    return tuple(result)


def shift(word: Sequence[int], i: int) -> Word:
    if i < 0:
        raise ValueError("shift must be non-negative")
    return tuple(v + i for v in word)


def shifted_concat_top(sigma: Perm, tau: Perm) -> Perm:
    """sigma shifted above tau, followed by tau: (21, 1) -> 321."""
    return shift(sigma, len(tau)) + tuple(tau)


def shifted_concat_bottom(sigma: Perm, tau: Perm) -> Perm:
    """sigma followed by tau shifted above sigma: (21, 1) -> 213."""
    return tuple(sigma) + shift(tau, len(sigma))


def restrict_to_values(perm: Sequence[int], a: int, b: int) -> Word:
    """Subword of the letters v with a <= v <= b, in their original order."""
    return tuple(v for v in perm if a <= v <= b)


def window_patterns(perm: Perm, k: int) -> tuple[Perm, ...]:
    """
    Standardized factors of length k read by a sliding window.

    >>> window_patterns((8, 5, 7, 3, 6, 1, 2, 4), 3)
    ((3, 1, 2), (2, 3, 1), (3, 1, 2), (2, 3, 1), (3, 1, 2), (1, 2, 3))
    """
    if k < 1:
        raise ValueError("window width must be at least 1")
    if len(perm) < k:
        raise ValueError(f"permutation of size {len(perm)} is shorter than the window width {k}")
    return tuple(standardize(perm[j:j + k]) for j in range(len(perm) - k + 1))


def is_compatible_pattern(windows: Sequence[Perm]) -> bool:
    """Consecutive windows must agree on their overlap of length k-1."""
    if any(len(w) != len(windows[0]) or not is_permutation(w) for w in windows):
        return False
    return all(
        standardize(a[1:]) == standardize(b[:-1])
        for a, b in zip(windows, windows[1:])
    )


def inversion_set(perm: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Value pairs (a, b), a < b, such that b occurs to the left of a."""
    pos = inverse(perm)
    n = len(perm)
    return frozenset(
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if pos[a - 1] > pos[b - 1]
    )


def inversion_count(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def _check_side(side: str) -> None:
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def weak_leq(sigma: Perm, tau: Perm, side: Side = "right") -> bool:
    """
    Weak order comparison.  Right order compares inversion sets of values;
    left order compares those of the inverses.
    """
    _check_side(side)
    if len(sigma) != len(tau):
        raise ValueError("weak order compares permutations of equal size")
    if side == "left":
        sigma, tau = inverse(sigma), inverse(tau)
    return inversion_set(sigma) <= inversion_set(tau)


def _covers(perm: Perm, side: Side, down: bool) -> Iterator[Perm]:
    # right order: swap adjacent positions; left order: swap adjacent values
    if side == "right":
        for i in range(len(perm) - 1):
            if (perm[i] > perm[i + 1]) == down:
                p = list(perm)
                p[i], p[i + 1] = p[i + 1], p[i]
                yield tuple(p)
    else:
        pos = inverse(perm)
        for v in range(1, len(perm)):
            if (pos[v] < pos[v - 1]) == down:
                p = list(perm)
                p[pos[v - 1] - 1], p[pos[v] - 1] = v + 1, v
                yield tuple(p)


def _closure(start: Perm, side: Side, down: bool, keep=None) -> list[Perm]:
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in _covers(queue.popleft(), side, down):
            if nxt not in seen and (keep is None or keep(nxt)):
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen)


def weak_ideal(omega: Perm, side: Side = "right") -> list[Perm]:
    """All permutations below `omega`, sorted lexicographically."""
    _check_side(side)
    return _closure(tuple(omega), side, down=True)


def weak_filter(alpha: Perm, side: Side = "right") -> list[Perm]:
    """All permutations above `alpha`, sorted lexicographically."""
    _check_side(side)
    return _closure(tuple(alpha), side, down=False)


def weak_interval(alpha: Perm, omega: Perm, side: Side = "right") -> list[Perm]:
    if not weak_leq(alpha, omega, side):
        raise ValueError(f"{render_word(alpha)} is not below {render_word(omega)} in the {side} weak order")
    if side == "left":
        bottom = inversion_set(inverse(alpha))
        keep = lambda p: bottom <= inversion_set(inverse(p))  # noqa: E731
    else:
        bottom = inversion_set(alpha)
        keep = lambda p: bottom <= inversion_set(p)  # noqa: E731
    return _closure(tuple(omega), side, down=True, keep=keep)


def is_connected(perm: Perm) -> bool:
    """True when no proper prefix of length j is a rearrangement of 1..j."""
    if not perm:
        raise ValueError("connectivity is defined for non-empty permutations")
    top = 0
    for j, v in enumerate(perm[:-1], 1):
        top = max(top, v)
        if top == j:
            return False
    return True


def mirror(perm: Sequence[int]) -> Perm:
    return tuple(reversed(perm))


def complement(perm: Sequence[int]) -> Perm:
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def permutations(n: int) -> Iterator[Perm]:
    """All permutations of size n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _itertools_permutations(range(1, n + 1))


def render_word(word: Iterable[int]) -> str:
    """Compact digit string when every letter is a single digit, else comma-separated."""
    word = tuple(word)
    if not word:
        return "()"
    if all(0 <= v <= 9 for v in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "()", "[]"):
        return ()
    text = text.strip("()[]")
    try:
        if "," in text:
            letters = tuple(int(part) for part in text.split(","))
        else:
            letters = tuple(int(ch) for ch in text)
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None
    if any(v < 0 for v in letters):
        raise ValueError(f"negative letter in {text!r}")
    return letters


def parse_perm(text: str) -> Perm:
    return check_perm(parse_word(text))
