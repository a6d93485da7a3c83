"""Graded pieces of weighted polynomial rings.

The coordinate ring of weighted projective space P(a_0,...,a_n) is
S = k[x_0,...,x_n] with deg x_i = a_i.  The dimension s_d of the degree-d
piece equals the number of solutions e in N_0^{n+1} of

    a_0 e_0 + a_1 e_1 + ... + a_n e_n = d,

a coin-counting problem.  This module provides the universal counting
oracle (dynamic programming, exact integers), monomial enumeration in a
fixed deterministic order, and the closed forms that exist for one and
two variables and for weights (1,2,3).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass


class UnsupportedWeightsError(ValueError):
    """Weights outside the domain of the requested operation."""


class Weights:
    """Immutable weight vector (a_0,...,a_n), stored non-decreasing.

    The constructor sorts its input and records the sorting permutation in
    ``sort_order`` (``a[k] == input[sort_order[k]]``).  ``well_formed`` is
    True when dropping any single weight leaves a gcd of 1; ill-formed
    weights are accepted, the flag just reports it.
    """

    __slots__ = ("a", "sort_order", "_table")

    def __init__(self, entries):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise UnsupportedWeightsError("need at least one weight")
        if any(x < 1 for x in entries):
            raise UnsupportedWeightsError(f"weights must be positive: {entries}")
        order = sorted(range(len(entries)), key=lambda i: entries[i])
        object.__setattr__(self, "a", tuple(entries[i] for i in order))
        object.__setattr__(self, "sort_order", tuple(order))
        object.__setattr__(self, "_table", HilbertTable(self))

    def __setattr__(self, name, value):
        raise AttributeError("Weights is immutable")

    @property
    def n(self) -> int:
        """Projective dimension: number of weights minus one."""
        return len(self.a) - 1

    @property
    def well_formed(self) -> bool:
        if len(self.a) == 1:
            return self.a[0] == 1
        for i in range(len(self.a)):
            rest = self.a[:i] + self.a[i + 1:]
            if math.gcd(*rest) != 1:
                return False
        return True

    def drop(self, index: int) -> "Weights":
        """Weights of the hyperplane x_index = 0 (remove one variable)."""
        if not 0 <= index < len(self.a):
            raise IndexError(index)
        if len(self.a) == 1:
            raise UnsupportedWeightsError("cannot drop the only weight")
        return Weights(self.a[:index] + self.a[index + 1:])

    def table(self) -> "HilbertTable":
        return self._table

    def __len__(self):
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def __getitem__(self, i):
        return self.a[i]

    def __eq__(self, other):
        if isinstance(other, Weights):
            return self.a == other.a
        return NotImplemented

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return f"Weights{self.a}"


@dataclass(frozen=True)
class Monomial:
    """Exponent vector with its weighted degree."""

    exponents: tuple
    degree: int

    @staticmethod
    def of(exponents, weights: Weights) -> "Monomial":
        e = tuple(int(x) for x in exponents)
        return Monomial(e, sum(a * x for a, x in zip(weights, e)))

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)


class HilbertTable:
    """Memoized table d -> s_d for one weight vector.

    Backed by a coin-counting DP array that grows on demand.  Growth is
    serialized by a lock; filled prefixes are immutable, so concurrent
    readers are safe.
    """

    def __init__(self, weights: Weights):
        self.weights = weights
        self._values: list[int] = [1]
        self._lock = threading.Lock()

    def _grow(self, d: int) -> None:
        with self._lock:
            if d < len(self._values):
                return
            cap = max(d, 2 * len(self._values), 16)
            dp = [0] * (cap + 1)
            dp[0] = 1
            for a in self.weights:
                for t in range(a, cap + 1):
                    dp[t] += dp[t - a]
            self._values = dp

    def __getitem__(self, d: int) -> int:
        if d < 0:
            return 0
        if d >= len(self._values):
            self._grow(d)
        return self._values[d]


def count_monomials(w: Weights, d: int) -> int:
    """s_d: number of monomials of weighted degree d (0 for d < 0).

    Dynamic programming over the Diophantine equation; independent of any
    closed formula, so it serves as the oracle everywhere else.
    """
    return w.table()[d]


def enumerate_monomials(w: Weights, d: int) -> list[Monomial]:
    """All monomials of weighted degree d, graded-lex descending.

    With non-decreasing weights, descending lexicographic order on
    exponent vectors refines descending total degree, so this is the
    graded lexicographic order.  The order is the column order of every
    evaluation matrix and the coordinate order of every Veronese chart.
    """
    if d < 0:
        return []
    a = w.a
    n = len(a)
    out: list[Monomial] = []
    cur = [0] * n

    def descend(i: int, rem: int) -> None:
        if i == n - 1:
            if rem % a[i] == 0:
                cur[i] = rem // a[i]
                out.append(Monomial(tuple(cur), d))
            return
        for e in range(rem // a[i], -1, -1):
            cur[i] = e
            descend(i + 1, rem - e * a[i])

    descend(0, d)
    return out


def _two_variable_closed_form(a: int, b: int, d: int) -> int:
    # s_d = floor(qd/b) - floor(pd/a) with aq - bp = 1, plus 1 when a | d
    g, x, y = _ext_gcd(a, b)
    if g != 1:
        raise UnsupportedWeightsError(f"two-variable closed form needs gcd=1, got gcd({a},{b})={g}")
    q, p = x, -y  # a*q - b*p = 1
    if d % a == 0:
        return (q * d) // b - (p * d) // a + 1
    return (q * d) // b - (p * d) // a


def _ext_gcd(a: int, b: int):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def hilbert_closed_form(w: Weights, d: int):
    """Closed-form s_d where one exists, else None (caller falls back to DP).

    Supported: two variables (a,b) with gcd 1, the special case (1,b), and
    (1,2,3).  Everything else, including two variables with gcd > 1,
    returns None.
    """
    if d < 0:
        return 0
    a = w.a
    if len(a) == 2:
        if a[0] == 1:
            return d // a[1] + 1
        if math.gcd(a[0], a[1]) == 1:
            return _two_variable_closed_form(a[0], a[1], d)
        return None
    if a == (1, 2, 3):
        return (d * d + 6 * d + 12) // 12  # floor(d^2/12 + d/2 + 1)
    return None


def semigroup_member(w: Weights, d: int) -> bool:
    """True iff d lies in the numerical semigroup generated by the weights."""
    if d < 0:
        return False
    return count_monomials(w, d) > 0
