"""Special functions: error function inverses, normal and Student-t distributions.

``erf``/``erfc`` come from the standard library (correctly rounded to within an
ulp or two on every platform CPython supports). Everything built on top of them
is computed here so the tails stay accurate: inverses are refined by Newton
iteration on ``log(erfc)`` and the t distribution goes through a continued-fraction
regularized incomplete beta.
"""

from __future__ import annotations

import math

from .errors import DomainError

erf = math.erf
erfc = math.erfc

_SQRT2 = math.sqrt(2.0)
_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)

_BETA_RTOL = 1e-15
_BETA_MAXITER = 10_000
_TINY = 1e-300


def _erfinv_guess(x: float, w: float) -> float:
    # Giles (2010) single-precision approximation; w = -log((1-x)(1+x)).
    if w < 5.0:
        w -= 2.5
        p = 2.81022636e-08
        for c in (3.43273939e-07, -3.5233877e-06, -4.39150654e-06, 0.00021858087,
                  -0.00125372503, -0.00417768164, 0.246640727, 1.50140941):
            p = c + p * w
    else:
        w = math.sqrt(w) - 3.0
        p = -0.000200214257
        for c in (0.000100950558, 0.00134934322, -0.00367342844, 0.00573950773,
                  -0.0076224613, 0.00943887047, 1.00167406, 2.83297682):
            p = c + p * w
    return p * x


def erfcinv(q: float) -> float:
    """Inverse complementary error function on the open interval (0, 2)."""
    if not (0.0 < q < 2.0):
        raise DomainError(f"erfcinv requires 0 < q < 2 (got {q!r})")
    if q > 1.0:
        # 2 - q is exact for q in [1, 2)
        return -erfcinv(2.0 - q)
    if q == 1.0:
        return 0.0
    w = -math.log(q * (2.0 - q))
    if w < 36.0:
        x = _erfinv_guess(1.0 - q, w)
    else:
        # erfc(x) ~ exp(-x^2) / (x sqrt(pi)) deep in the tail
        big = -math.log(q * math.sqrt(math.pi))
        x = math.sqrt(big - 0.5 * math.log(big))
    for _ in range(20):
        tail = erfc(x)
        slope = _TWO_OVER_SQRT_PI * math.exp(-x * x)
        if tail == 0.0 or slope == 0.0:
            break
        # Newton on log(erfc(x)) - log(q); log erfc is concave so this is stable
        step = (math.log(tail) - math.log(q)) * tail / slope
        x += step
        if abs(step) <= 4e-16 * abs(x):
            break
    return x


def erfinv(y: float) -> float:
    """Inverse error function on the open interval (-1, 1)."""
    if not (-1.0 < y < 1.0):
        raise DomainError(f"erfinv requires -1 < y < 1 (got {y!r})")
    if y < 0.0:
        return -erfcinv(1.0 + y)
    return erfcinv(1.0 - y)


def normal_cdf(z: float) -> float:
    """Standard normal CDF, accurate in both tails."""
    return 0.5 * erfc(-z / _SQRT2)


def normal_sf(z: float) -> float:
    """Standard normal upper tail ``1 - normal_cdf(z)`` without cancellation."""
    return 0.5 * erfc(z / _SQRT2)


def normal_ppf(p: float) -> float:
    """Quantile of the standard normal distribution for 0 < p < 1."""
    if not (0.0 < p < 1.0):
        raise DomainError(f"normal quantile requires 0 < p < 1 (got {p!r})")
    return -_SQRT2 * erfcinv(2.0 * p)


def normal_isf(q: float) -> float:
    """Upper-tail quantile: the z with ``normal_sf(z) == q``."""
    if not (0.0 < q < 1.0):
        raise DomainError(f"normal upper-tail quantile requires 0 < q < 1 (got {q!r})")
    return _SQRT2 * erfcinv(2.0 * q)


def _betacf(a: float, b: float, x: float) -> float:
    # Modified Lentz evaluation of the incomplete beta continued fraction.
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAXITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_RTOL:
            return h
    raise ArithmeticError(f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})")


def betainc_pair(a: float, b: float, x: float, y: float | None = None) -> tuple[float, float]:
    """Regularized incomplete beta ``I_x(a, b)`` together with its complement.

    ``y`` is ``1 - x``; pass it when it is known more precisely than the
    subtraction would give.
    """
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"incomplete beta requires a, b > 0 (got a={a}, b={b})")
    if y is None:
        y = 1.0 - x
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"incomplete beta requires 0 <= x <= 1 (got {x!r})")
    if x == 0.0:
        return 0.0, 1.0
    if y == 0.0:
        return 1.0, 0.0
    log_front = (a * math.log(x) + b * math.log(y)
                 + math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b))
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        value = front * _betacf(a, b, x) / a
        return value, 1.0 - value
    value = front * _betacf(b, a, y) / b
    return 1.0 - value, value


def betainc(a: float, b: float, x: float) -> float:
    return betainc_pair(a, b, x)[0]


def _check_df(df: float) -> None:
    if not (df > 0.0) or math.isinf(df):
        raise DomainError(f"degrees of freedom must be positive and finite (got {df!r})")


def t_sf(t: float, df: float) -> float:
    """Upper tail ``P(T > t)`` of Student's t with ``df`` degrees of freedom."""
    _check_df(df)
    if math.isnan(t):
        raise DomainError("t statistic is NaN")
    if t < 0.0:
        return t_cdf(-t, df)
    if math.isinf(t):
        return 0.0
    tt = t * t
    if math.isinf(tt):
        return 0.0
    x = df / (df + tt)
    y = tt / (df + tt)
    return 0.5 * betainc_pair(0.5 * df, 0.5, x, y)[0]


def t_cdf(t: float, df: float) -> float:
    """CDF of Student's t distribution."""
    _check_df(df)
    if math.isnan(t):
        raise DomainError("t statistic is NaN")
    if t < 0.0:
        return t_sf(-t, df)
    if t == 0.0:
        return 0.5
    if math.isinf(t):
        return 1.0
    tt = t * t
    if math.isinf(tt):
        return 1.0
    x = df / (df + tt)
    y = tt / (df + tt)
    tail, central = betainc_pair(0.5 * df, 0.5, x, y)
    return 0.5 + 0.5 * central


def t_two_tailed(t: float, df: float) -> float:
    """Two-tailed p-value ``2 * P(T > |t|)``."""
    return min(1.0, 2.0 * t_sf(abs(t), df))


def t_ppf(prob: float, df: float) -> float:
    """Quantile of Student's t, found by bisection on ``t_cdf``."""
    _check_df(df)
    if not (0.0 < prob < 1.0):
        raise DomainError(f"t quantile requires 0 < prob < 1 (got {prob!r})")
    if prob == 0.5:
        return 0.0
    if prob < 0.5:
        return -t_ppf(1.0 - prob, df)
    q = 1.0 - prob
    hi = 1.0
    while t_sf(hi, df) > q:
        hi *= 2.0
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if t_sf(mid, df) > q:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-14 * hi:
            break
    return 0.5 * (lo + hi)
