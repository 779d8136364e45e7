import math
import os
import statistics
from pathlib import Path

import pytest
from hypothesis import settings
from scipy import integrate

settings.register_profile("default", max_examples=30, deadline=None)
settings.register_profile("thorough", max_examples=2000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"
PAX_CSV = DATA / "paxillin.csv"

PAX_A = [1.00, 1.00, 1.00, 1.00]
PAX_B = [1.29, 2.60, 2.54, 3.98]


def normal_cdf_quad(z):
    """Standard normal CDF by adaptive quadrature of the density."""
    pdf = lambda x: math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)
    if z <= 0:
        val, _ = integrate.quad(pdf, -math.inf, z, epsabs=1e-15, epsrel=1e-13)
        return val
    val, _ = integrate.quad(pdf, z, math.inf, epsabs=1e-15, epsrel=1e-13)
    return 1.0 - val


def t_cdf_quad(t, df):
    """Student-t CDF by adaptive quadrature of the density."""
    logc = math.lgamma((df + 1) / 2) - math.lgamma(df / 2) - 0.5 * math.log(df * math.pi)
    pdf = lambda x: math.exp(logc - (df + 1) / 2 * math.log1p(x * x / df))
    if t <= 0:
        val, _ = integrate.quad(pdf, -math.inf, t, epsabs=1e-14, epsrel=1e-12, limit=200)
        return val
    val, _ = integrate.quad(pdf, t, math.inf, epsabs=1e-14, epsrel=1e-12, limit=200)
    return 1.0 - val


@pytest.fixture
def pax_groups():
    return list(PAX_A), list(PAX_B)


# Published table cells for the z / probability / Weight columns, per section.
# rows: four data rows, then the group means and SDs; each row is
# (z_a, z_b, p_a, p_b, w_a, w_b). totals: pooled (mean, std) for z, p, W.
PAX_PRINTED = {
    "identity": {
        "rows": [(-0.72, -0.46, 0.24, 0.32, -0.51, -0.32),
                 (-0.72, 0.72, 0.24, 0.76, -0.51, 0.51),
                 (-0.72, 0.66, 0.24, 0.75, -0.51, 0.47),
                 (-0.72, 1.95, 0.24, 0.97, -0.51, 1.58)],
        "mean": (-0.72, 0.72, 0.24, 0.70, -0.51, 0.56),
        "sd": (0.00, 0.98, 0.00, 0.27, 0.00, 0.78),
        "total_mean": (0.00, 0.47, 0.02),
        "total_std": (1.00, 0.31, 0.76),
        "skew": 1.40,
    },
    "ln": {
        "rows": [(-0.78, -0.34, 0.22, 0.37, -0.56, -0.23),
                 (-0.78, 0.92, 0.22, 0.82, -0.56, 0.66),
                 (-0.78, 0.88, 0.22, 0.81, -0.56, 0.63),
                 (-0.78, 1.68, 0.22, 0.95, -0.56, 1.31)],
        "mean": (-0.78, 0.78, 0.22, 0.74, -0.56, 0.59),
        "sd": (0.00, 0.83, 0.00, 0.25, 0.00, 0.63),
        "total_mean": (0.00, 0.48, 0.02),
        "total_std": (1.00, 0.33, 0.74),
        "skew": 0.88,
    },
    "exp": {
        "rows": [(-0.52, -0.47, 0.30, 0.32, -0.36, -0.33),
                 (-0.52, 0.10, 0.30, 0.54, -0.36, 0.07),
                 (-0.52, 0.05, 0.30, 0.52, -0.36, 0.04),
                 (-0.52, 2.39, 0.30, 0.99, -0.36, 2.07)],
        "mean": (-0.52, 0.52, 0.30, 0.59, -0.36, 0.46),
        "sd": (0.00, 1.27, 0.00, 0.28, 0.00, 1.09),
        "total_mean": (0.00, 0.45, 0.05),
        "total_std": (1.00, 0.24, 0.84),
        "skew": 2.57,
    },
}


def pax_cells(trace):
    """Computed counterparts of :data:`PAX_PRINTED` for one pipeline trace."""
    cols = [trace.z_values, trace.probabilities, trace.weights]
    groups = [(c[0].values, c[1].values) for c in cols]
    rows = [tuple(v for a, b in groups for v in (a[i], b[i])) for i in range(4)]
    mean = tuple(v for a, b in groups for v in (statistics.fmean(a), statistics.fmean(b)))
    sd = tuple(v for a, b in groups for v in (statistics.stdev(a), statistics.stdev(b)))
    pooled = [list(a) + list(b) for a, b in groups]
    return {"rows": rows, "mean": mean, "sd": sd,
            "total_mean": tuple(statistics.fmean(p) for p in pooled),
            "total_std": tuple(statistics.stdev(p) for p in pooled),
            "skew": trace.skew}


def pax_mismatches(got, section, tol=0.01, skew_tol=0.02):
    """(cell, printed, computed) triples outside tolerance; ``got`` as from :func:`pax_cells`."""
    want = PAX_PRINTED[section]
    bad = []
    for i, (w_row, g_row) in enumerate(zip(want["rows"], got["rows"])):
        bad += [(f"{section} row {i} col {j}", w, g) for j, (w, g) in enumerate(zip(w_row, g_row))
                if abs(w - g) > tol]
    for key in ("mean", "sd", "total_mean", "total_std"):
        bad += [(f"{section} {key} col {j}", w, g) for j, (w, g) in enumerate(zip(want[key], got[key]))
                if abs(w - g) > tol]
    if abs(want["skew"] - got["skew"]) > skew_tol:
        bad.append((f"{section} skew", want["skew"], got["skew"]))
    return bad
