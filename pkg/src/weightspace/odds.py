"""Scalar conversions between probability, Weight (log10 odds), Certainty and z-scores.

All log-odds here are base 10. A natural-log logit is deliberately not offered.
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import DomainError
from .special import normal_cdf, normal_isf, normal_sf

Probability = float
Weight = float
Certainty = float
ZScore = float


def _check_finite(value: float, what: str) -> None:
    if not math.isfinite(value):
        raise DomainError(f"{what} must be finite (got {value!r})")


def _check_open_unit(p: float, what: str) -> None:
    if math.isnan(p) or not (0.0 < p < 1.0):
        raise DomainError(f"{what} must satisfy 0 < {what} < 1 (got {p!r})")


def weight_from_probability(p: Probability) -> Weight:
    """Weight of a probability: ``log10(p / (1 - p))``.

    >>> weight_from_probability(0.5)
    0.0
    """
    _check_open_unit(p, "probability")
    return math.log10(p) - math.log10(1.0 - p)


def probability_from_weight(w: Weight) -> Probability:
    """Inverse of :func:`weight_from_probability`: ``10**w / (1 + 10**w)``."""
    _check_finite(w, "weight")
    if w >= 0.0:
        return 1.0 / (1.0 + 10.0 ** -w)
    e = 10.0 ** w
    return e / (1.0 + e)


def odds_from_probability(p: Probability) -> float:
    _check_open_unit(p, "probability")
    return p / (1.0 - p)


def certainty_from_p(p: Probability) -> Certainty:
    """Certainty of a p-value: its log10 odds. More negative means more certain."""
    _check_open_unit(p, "p-value")
    return math.log10(p) - math.log10(1.0 - p)


def p_from_certainty(c: Certainty) -> Probability:
    _check_finite(c, "certainty")
    return probability_from_weight(c)


def impact(w2: Weight, w1: Weight) -> Weight:
    """Effect size in Weight space: ``w2 - w1``."""
    _check_finite(w2, "weight")
    _check_finite(w1, "weight")
    return w2 - w1


def bayes_posttest(w_pre: Weight, i: Weight) -> Weight:
    """Bayes' theorem in Weight space: posttest Weight is pretest Weight plus Impact."""
    _check_finite(w_pre, "pretest weight")
    _check_finite(i, "impact")
    return w_pre + i


def clamp_extremes(values: Iterable[float], n: int, scale: float = 100.0) -> list[float]:
    """Replace exact 0 and exact ``scale`` by ``0.5*scale/n`` and ``scale - 0.5*scale/n``.

    With the default ``scale=100`` the values are percentages (0% becomes
    50%/n). Use ``scale=1`` for probabilities. Interior values pass through
    untouched.
    """
    if n < 1:
        raise DomainError(f"number of measurements must be >= 1 (got {n})")
    low = 0.5 * scale / n
    high = scale - low
    out = []
    for v in values:
        if math.isnan(v) or not (0.0 <= v <= scale):
            raise DomainError(f"value must lie in [0, {scale:g}] (got {v!r})")
        if v == 0.0:
            out.append(low)
        elif v == scale:
            out.append(high)
        else:
            out.append(v)
    return out


def probability_from_sd(z: ZScore) -> Probability:
    """Standard normal CDF: ``(1 + erf(z / sqrt(2))) / 2``."""
    _check_finite(z, "z-score")
    return normal_cdf(z)


def sd_from_probability(p: Probability) -> ZScore:
    """Inverse of :func:`probability_from_sd`, ``sqrt(2) * erfinv(2p - 1)``."""
    _check_open_unit(p, "probability")
    if p < 0.5:
        return -normal_isf(p)
    if p == 0.5:
        return 0.0
    # 1 - p is exact for p >= 0.5
    return normal_isf(1.0 - p)


def weight_from_sd(z: ZScore) -> Weight:
    """Weight of the normal CDF at ``z``, computed from both tails.

    Equal to ``weight_from_probability(probability_from_sd(z))`` but without
    the rounding of ``1 - p`` for large positive ``z``; exactly odd in ``z``.
    """
    _check_finite(z, "z-score")
    if z == 0.0:
        return 0.0
    lower = normal_cdf(z)
    upper = normal_sf(z)
    return math.log10(lower) - math.log10(upper)


def sd_from_weight(w: Weight) -> ZScore:
    """Inverse of :func:`weight_from_sd`, avoiding the rounding of ``p`` near 1."""
    _check_finite(w, "weight")
    if w == 0.0:
        return 0.0
    if abs(w) > 300.0:
        raise DomainError(f"weight {w!r} is too extreme to invert")
    # smaller tail probability
    z = normal_isf(1.0 / (1.0 + 10.0 ** abs(w)))
    return z if w > 0.0 else -z
