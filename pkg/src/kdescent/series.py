"""Truncated power series with exact integer coefficients."""

from __future__ import annotations

from collections.abc import Sequence

__all__ = ["PowerSeries"]


class PowerSeries:
    """
    Coefficients c_0..c_N of a series known modulo t^(N+1).

    Binary operations truncate to the smaller order.

    >>> PowerSeries([1, -1, 0, 0]).inverse()
    PowerSeries([1, 1, 1, 1])
    """

    def __init__(self, coeffs: Sequence[int]):
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = [int(c) for c in coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries({self.coeffs})"

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self.coeffs[:order + 1])

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = min(len(self), len(other))
        return PowerSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __neg__(self) -> PowerSeries:
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return self + (-other)

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        n = min(len(self), len(other))
        a, b = self.coeffs, other.coeffs
        return PowerSeries([sum(a[i] * b[m - i] for i in range(m + 1)) for m in range(n)])

    def inverse(self) -> PowerSeries:
        # integer-closed only for constant term 1
        if self.coeffs[0] != 1:
            raise ValueError(f"series inverse needs constant term 1, got {self.coeffs[0]}")
        a = self.coeffs
        inv = [1]
        for m in range(1, len(a)):
            inv.append(-sum(a[i] * inv[m - i] for i in range(1, m + 1)))
        return PowerSeries(inv)
