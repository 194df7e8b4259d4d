"""Gilbert-Varshamov type existence test for EAQECCs, in exact arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation, RangeViolation
from .fields import prime_factors


@dataclass(frozen=True)
class GVQuery:
    q: int
    n: int
    k: int
    c: int
    delta: int

    def __post_init__(self):
        q, n, k, c, delta = self.q, self.n, self.k, self.c, self.delta
        if q < 2 or len(set(prime_factors(q))) != 1:
            raise InvariantViolation(f"q = {q} is not a prime power")
        if n < 1:
            raise InvariantViolation("n must be positive")
        if not 0 <= k <= n:
            raise InvariantViolation(f"k = {k} must lie in [0, n]")
        if c < 0 or 2 * c > n - k:
            raise InvariantViolation(f"c = {c} must satisfy 0 <= 2c <= n - k")
        if delta < 1:
            raise InvariantViolation("delta must be positive")


def gv_lhs_parts(q: int, n: int, k: int, c: int, delta: int) -> tuple[int, int]:
    """Numerator and denominator of the left-hand side, before reduction."""
    GVQuery(q, n, k, c, delta)
    ball = sum(math.comb(n, i) * (q * q - 1) ** i for i in range(1, delta))
    return (q ** (n + k) - q ** (n - k - 2 * c)) * ball, q ** (2 * n) - 1


def gv_lhs(q: int, n: int, k: int, c: int, delta: int) -> Fraction:
    num, den = gv_lhs_parts(q, n, k, c, delta)
    return Fraction(num, den)


def gv_feasible(q: int, n: int, k: int, c: int, delta: int) -> bool:
    num, den = gv_lhs_parts(q, n, k, c, delta)
    return num < den


def max_delta(q: int, n: int, k: int, c: int, cap: int | None = None) -> int:
    """Largest feasible delta up to ``cap`` (default n); delta = 1 is always feasible."""
    cap = n if cap is None else cap
    best = 1
    for delta in range(2, cap + 1):
        if not gv_feasible(q, n, k, c, delta):
            break
        best = delta
    return best


def gv_search(q: int, n_max: int, n_min: int = 1, k_max: int | None = None, c_max: int | None = None):
    """Rows (n, k, c, delta) with delta maximal for every admissible (n, k, c).

    Sorted by (n, k, c, delta).
    """
    rows = []
    for n in range(max(1, n_min), n_max + 1):
        for k in range(0, (n if k_max is None else min(n, k_max)) + 1):
            top = (n - k) // 2 if c_max is None else min((n - k) // 2, c_max)
            for c in range(0, top + 1):
                rows.append((n, k, c, max_delta(q, n, k, c)))
    rows.sort()
    return rows


def entropy(q: int, x: float) -> float:
    """q-ary entropy -x log_q x - (1-x) log_q (1-x), with h(0) = 0."""
    if x == 0:
        return 0.0
    return -x * math.log(x, q) - (1 - x) * math.log(1 - x, q)


def gv_asymptotic_lhs(q: int, R: float, eps: float, lam: float = 0.0) -> tuple[float, float]:
    if q < 2 or len(set(prime_factors(q))) != 1:
        raise RangeViolation(f"q = {q} is not a prime power")
    if not 0 <= R <= 1:
        raise RangeViolation("R must lie in [0, 1]")
    if not 0 <= eps < 0.5:
        raise RangeViolation("epsilon must lie in [0, 1/2)")
    if not 0 <= lam <= (1 - R) / 2:
        raise RangeViolation("lambda must lie in [0, (1 - R)/2]")
    return entropy(q, eps) + eps * math.log(q * q - 1, q), 1 - R


def gv_asymptotic(q: int, R: float, eps: float, lam: float = 0.0, margin: float = 0.0) -> bool:
    """Strict inequality h(eps) + eps log_q(q^2 - 1) < 1 - R (minus ``margin``).

    ``lam`` is range-checked only; it does not enter the inequality.
    """
    lhs, rhs = gv_asymptotic_lhs(q, R, eps, lam)
    return lhs < rhs - margin
