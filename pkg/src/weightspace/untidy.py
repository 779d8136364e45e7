"""Map non-probability two-group data into Weight space and test it there.

Each candidate transform is applied to both groups, the pooled data are
z-scored with the combined mean and SD, z-scores become probabilities through
the normal CDF and then Weights. The candidate whose pooled Weights have the
smallest absolute skewness is selected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .descriptive import Sample, skewness_adjusted, skewness_mean_median, summarize
from .errors import DomainError, PipelineError
from .odds import probability_from_sd, sd_from_weight, weight_from_sd
from .wtest import TestReport, WTestConfig, wtest_weights

# Beyond this the normal CDF is within an ulp of 0 or 1.
SATURATION_Z = 8.0
EXP_OVERFLOW_GUARD = 700.0


@dataclass(frozen=True)
class TransformKind:
    """A monotone increasing transform applied before pooled normalization.

    ``df_penalty`` is the number of degrees of freedom the transform costs;
    zero for the three built-ins, declared by the caller for custom ones.
    """

    name: str
    forward: Callable[[float], float] = field(compare=False, repr=False)
    inverse: Callable[[float], float] = field(compare=False, repr=False)
    df_penalty: int = 0
    builtin: bool = False

    def __call__(self, x: float) -> float:
        return self.forward(x)


def _ln(x: float) -> float:
    if not x > 0.0:
        raise DomainError(f"natural log requires strictly positive values (got {x!r})")
    return math.log(x)


def _exp(x: float) -> float:
    if x > EXP_OVERFLOW_GUARD:
        raise DomainError(f"exp overflow guard: values must be <= {EXP_OVERFLOW_GUARD:g} (got {x!r})")
    return math.exp(x)


IDENTITY = TransformKind("identity", lambda x: x, lambda x: x, builtin=True)
NATURAL_LOG = TransformKind("ln", _ln, _exp, builtin=True)
EXPONENTIAL = TransformKind("exp", _exp, _ln, builtin=True)
DEFAULT_CANDIDATES = (IDENTITY, NATURAL_LOG, EXPONENTIAL)

_BY_NAME = {
    "identity": IDENTITY, "none": IDENTITY,
    "ln": NATURAL_LOG, "log": NATURAL_LOG, "natural_log": NATURAL_LOG,
    "exp": EXPONENTIAL, "exponential": EXPONENTIAL,
}


def transform_by_name(name: str) -> TransformKind:
    try:
        return _BY_NAME[name.strip().lower()]
    except KeyError:
        raise DomainError(f"unknown transform {name!r}; choose from identity, ln, exp") from None


def custom_transform(tag: str, forward, inverse, df_penalty: int) -> TransformKind:
    """An investigator-chosen transform; one DF is lost per constant and operator."""
    if df_penalty < 0:
        raise DomainError(f"df penalty must be >= 0 (got {df_penalty})")
    return TransformKind(tag, forward, inverse, df_penalty=int(df_penalty))


SKEW_METHODS: dict[str, Callable] = {
    "adjusted": skewness_adjusted,
    "mean-median": skewness_mean_median,
}


def apply_transform(s, k: TransformKind):
    """Apply ``k`` element-wise. Returns a :class:`Sample` when given one."""
    if isinstance(s, Sample):
        return Sample(s.label, [k(x) for x in s.values])
    out = [k(x) for x in s]
    for y in out:
        if not math.isfinite(y):
            raise DomainError(f"transform {k.name} produced a non-finite value")
    return out


def pooled_normalize(a: Sequence[float], b: Sequence[float]):
    """z-score both groups with the mean and sample SD of their concatenation."""
    a, b = list(a), list(b)
    pooled = summarize(a + b)
    if pooled.n < 2:
        raise DomainError("pooled normalization needs at least 2 values in total")
    if pooled.sd == 0.0:
        raise DomainError("pooled sd is zero (all values identical); cannot normalize")
    m, s = pooled.mean, pooled.sd
    return [(x - m) / s for x in a], [(x - m) / s for x in b], m, s


def map_to_weight(z: float) -> tuple[float, bool]:
    """Weight of a z-score through the normal CDF, plus a saturation flag.

    z-scores beyond +/-8 are clamped there before conversion.
    """
    saturated = abs(z) > SATURATION_Z
    if saturated:
        z = math.copysign(SATURATION_Z, z)
    return weight_from_sd(z), saturated


def effective_df(n1: int, n2: int, k: TransformKind) -> int:
    df = n1 + n2 - 2 - k.df_penalty
    if df < 1:
        raise DomainError(f"effective degrees of freedom must be >= 1 (got {df})")
    return df


@dataclass(frozen=True)
class TransformTrace:
    kind: TransformKind
    transformed: tuple[Sample, Sample]
    pooled_mean: float
    pooled_sd: float
    z_values: tuple[Sample, Sample]
    probabilities: tuple[Sample, Sample]
    weights: tuple[Sample, Sample]
    skew: float
    report: TestReport
    saturated: bool = False


@dataclass(frozen=True)
class PipelineResult:
    traces: tuple[TransformTrace, ...]
    chosen: int
    inverse_mapped_means: tuple[float, float]
    raw_means: tuple[float, float]
    skipped: dict[str, str]
    skew_method: str
    warnings: tuple[str, ...] = ()

    @property
    def best(self) -> TransformTrace:
        return self.traces[self.chosen]


def inverse_map(w: float, trace: TransformTrace) -> float:
    """Map a Weight back to the original data units of ``trace``."""
    z = sd_from_weight(w)
    x = z * trace.pooled_sd + trace.pooled_mean
    return trace.kind.inverse(x)


def run_trace(a: Sample, b: Sample, kind: TransformKind, cfg: WTestConfig | None = None,
              skew_method: str = "adjusted") -> TransformTrace:
    """Evaluate one candidate transform end to end."""
    skew_fn = SKEW_METHODS[skew_method]
    ta = apply_transform(a, kind)
    tb = apply_transform(b, kind)
    za, zb, m, s = pooled_normalize(ta.values, tb.values)
    saturated = False
    weights = []
    for zs in (za, zb):
        ws = []
        for z in zs:
            w, sat = map_to_weight(z)
            saturated |= sat
            ws.append(w)
        weights.append(ws)
    probs = [[probability_from_sd(max(-SATURATION_Z, min(SATURATION_Z, z))) for z in zs]
             for zs in (za, zb)]
    skew = skew_fn(weights[0] + weights[1])
    notes = ()
    if saturated:
        notes = (f"{kind.name}: |z| > {SATURATION_Z:g} clamped before conversion to probability",)
    report = wtest_weights(weights[0], weights[1], cfg, df_penalty=kind.df_penalty, warnings=notes)
    return TransformTrace(
        kind=kind,
        transformed=(ta, tb),
        pooled_mean=m,
        pooled_sd=s,
        z_values=(Sample(a.label, za), Sample(b.label, zb)),
        probabilities=(Sample(a.label, probs[0]), Sample(b.label, probs[1])),
        weights=(Sample(a.label, weights[0]), Sample(b.label, weights[1])),
        skew=skew,
        report=report,
        saturated=saturated,
    )


def run_pipeline(a, b, candidates: Sequence[TransformKind] = DEFAULT_CANDIDATES,
                 cfg: WTestConfig | None = None, skew_method: str = "adjusted") -> PipelineResult:
    """Evaluate every candidate, pick the lowest |skew| (ties go to the earlier candidate)."""
    if skew_method not in SKEW_METHODS:
        raise DomainError(f"unknown skew method {skew_method!r}; choose from {', '.join(SKEW_METHODS)}")
    if not candidates:
        raise DomainError("at least one candidate transform is required")
    a = a if isinstance(a, Sample) else Sample("a", a)
    b = b if isinstance(b, Sample) else Sample("b", b)
    traces: list[TransformTrace] = []
    skipped: dict[str, str] = {}
    for kind in candidates:
        try:
            traces.append(run_trace(a, b, kind, cfg, skew_method))
        except DomainError as exc:
            skipped[kind.name] = str(exc)
    if not traces:
        raise PipelineError(skipped)
    chosen = 0
    for i, tr in enumerate(traces):
        if abs(tr.skew) < abs(traces[chosen].skew):
            chosen = i
    best = traces[chosen]
    means, notes = [], []
    for s in best.report.group_summaries:
        try:
            means.append(inverse_map(s.mean, best))
        except DomainError as exc:
            # a mean Weight can land outside the inverse's domain (e.g. <= 0 before ln)
            means.append(math.nan)
            notes.append(f"inverse-mapped mean unavailable: {exc}")
    raw = (summarize(a).mean, summarize(b).mean)
    return PipelineResult(traces=tuple(traces), chosen=chosen, inverse_mapped_means=tuple(means),
                          raw_means=raw, skipped=skipped, skew_method=skew_method, warnings=tuple(notes))


def forward_map(x: float, trace: TransformTrace) -> float:
    """Original-units value to Weight under the normalization recorded in ``trace``."""
    z = (trace.kind(x) - trace.pooled_mean) / trace.pooled_sd
    return map_to_weight(z)[0]
