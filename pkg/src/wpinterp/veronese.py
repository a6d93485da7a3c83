"""Degree-d embeddings of weighted projective space and their secant varieties.

The chart sends a point to the tuple of all degree-d monomial values.  For
weights (1, a_1, ..., a_n) and d at least the largest weight this is an
embedding, tangent spaces are spanned by the rows of the monomial Jacobian,
and the dimension of the r-th secant variety is the rank of the r stacked
Jacobians at generic points, minus one.  Sampling trials reuse the streams
of the interpolation module, so the secant rank of a trial literally equals
the double-point rank of the same trial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .grading import UnsupportedWeightsError, Weights, count_monomials, enumerate_monomials
from .interpolation import _point_rows, conditions_of_multiplicity, sample_trial
from .linalg import group_ranks_mod_p, rank_exact


class OutsideDomainError(ValueError):
    """Raised when every basis monomial vanishes at the point."""


@dataclass(frozen=True)
class VeroneseChart:
    """The degree-d monomial embedding of P(1, a_1, ..., a_n)."""

    weights: Weights
    degree: int

    def __post_init__(self):
        w = self.weights if isinstance(self.weights, Weights) else Weights(self.weights)
        object.__setattr__(self, "weights", w)
        if w[0] != 1:
            raise UnsupportedWeightsError("the smallest weight must be 1")
        if self.degree < w[len(w) - 1]:
            raise UnsupportedWeightsError(
                f"degree {self.degree} is below the largest weight {w[len(w) - 1]}; "
                "the monomial map is not an embedding there"
            )

    @property
    def basis(self):
        return enumerate_monomials(self.weights, self.degree)

    @property
    def ambient_dim(self) -> int:
        return count_monomials(self.weights, self.degree) - 1


def veronese_image(chart: VeroneseChart, coords):
    """Coordinates of the image point, in basis order."""
    if len(coords) != len(chart.weights):
        raise ValueError("coordinate length does not match the weights")
    vals = []
    for mono in chart.basis:
        v = 1
        for c, e in zip(coords, mono.exponents):
            if e:
                v *= c**e
        vals.append(v)
    if not any(vals):
        raise OutsideDomainError("all basis monomials vanish at the point")
    return vals


def tangent_jacobian(chart: VeroneseChart, coords, prime=None):
    """Rows j = 0..n of first partials of the basis monomials at the point."""
    if len(coords) != len(chart.weights):
        raise ValueError("coordinate length does not match the weights")
    return _point_rows(chart.weights, chart.degree, chart.basis, coords, 2, prime)


@dataclass(frozen=True)
class SecantReport:
    weights: Weights
    degree: int
    r: int
    expected_dim: int
    actual_dim: int
    defect: int
    trials: int

    def to_json_dict(self) -> dict:
        return {
            "weights": list(self.weights),
            "d": self.degree,
            "r": self.r,
            "expected_dim": self.expected_dim,
            "actual_dim": self.actual_dim,
            "defect": self.defect,
            "trials": self.trials,
        }


def secant_dimension(chart: VeroneseChart, r: int, seed=0, trials: int = 3, field=None) -> SecantReport:
    """Projective dimension of the r-th secant variety of the chart's image.

    Stacks the Jacobians of r sampled points and takes rank - 1, maximized
    over trials with early exit at the expected dimension
    min{s_d, r*(n+1)} - 1.
    """
    if r < 1:
        raise ValueError("r must be positive")
    w = chart.weights
    d = chart.degree
    s_d = count_monomials(w, d)
    expected = min(s_d, r * (w.n + 1)) - 1
    best = -1
    used = 0
    for trial in range(trials):
        used += 1
        prime, pts = sample_trial(w, r, d, seed, trial, field)
        rows = []
        for coords in pts:
            rows.extend(_point_rows(w, d, chart.basis, coords, 2, prime))
        if prime is not None:
            rank = group_ranks_mod_p(rows, prime, [len(rows)])[-1]
        else:
            rank = rank_exact(rows)
        best = max(best, rank - 1)
        if best >= expected:
            break
    return SecantReport(
        weights=w,
        degree=d,
        r=r,
        expected_dim=expected,
        actual_dim=best,
        defect=expected - best,
        trials=used,
    )
