"""Exact linear algebra: ranks mod p, fraction-free ranks over Q, determinants.

Everything here is exact.  Matrices are lists of row lists.  Over a prime
field the entries are ints in [0, p); over Q they are ints or Fractions.
The mod-p path is the workhorse (ranks of evaluation matrices at random
points); the rational path is the fallback oracle and the determinant
route for the 6x6 identity checks.
"""

from __future__ import annotations

import math
from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin, deterministic for n < 3.3e24 with the fixed base set."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, lo: int, hi: int, avoid=frozenset()) -> int:
    """A random prime in [lo, hi] outside ``avoid``."""
    while True:
        cand = rng.randrange(lo | 1, hi, 2)
        if cand not in avoid and is_probable_prime(cand):
            return cand


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer matrix over F_p."""
    return group_ranks_mod_p(rows, p, [len(rows)])[-1] if rows else 0


def group_ranks_mod_p(rows, p: int, group_sizes) -> list[int]:
    """Online row echelon over F_p with rank checkpoints.

    Processes rows in order; after each group of ``group_sizes[k]`` rows the
    current rank is recorded.  One elimination pass therefore yields the
    ranks of all leading-row submatrices cut at the group boundaries, which
    is what incremental point-count scans need.
    """
    echelon = []  # (pivot column, normalized row)
    ranks = []
    idx = 0
    for size in group_sizes:
        for _ in range(size):
            row = [x % p for x in rows[idx]]
            idx += 1
            for pc, er in echelon:
                f = row[pc]
                if f:
                    row = [(x - f * y) % p for x, y in zip(row, er)]
            pc = next((j for j, x in enumerate(row) if x), None)
            if pc is not None:
                inv = pow(row[pc], -1, p)
                echelon.append((pc, [x * inv % p for x in row]))
        ranks.append(len(echelon))
    return ranks


def _primitive_integer_row(row):
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) if isinstance(x, Fraction) else x * den for x in row]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


def rank_exact(rows) -> int:
    """Rank over Q by fraction-free elimination.

    Rows are scaled to primitive integer vectors; elimination uses the
    cross-multiplication update (pivot*row - lead*pivot_row), re-dividing
    by the content after each step, so no Fraction arithmetic happens in
    the inner loop.
    """
    echelon = []
    for row in rows:
        row = _primitive_integer_row(row)
        for pc, er in echelon:
            f = row[pc]
            if f:
                lead = er[pc]
                row = [lead * x - f * y for x, y in zip(row, er)]
                row = _primitive_integer_row(row)
        pc = next((j for j, x in enumerate(row) if x), None)
        if pc is not None:
            echelon.append((pc, row))
    return len(echelon)


def det_exact(rows) -> Fraction:
    """Exact determinant of a square matrix over Q (Bareiss)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        scale *= den
        m.append([int(x * den) if isinstance(x, Fraction) else x * den for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], 1) / scale


def nullspace_exact(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel over Q (reduced row echelon back-substitution)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * ncols
        v[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][c]
        basis.append(v)
    return basis
