import math
import statistics

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weightspace.divergence import (BaseDataset, builtin_datasets, divergence_curve, divergence_point,
                                    log_scales, weight_space_summary)
from weightspace.errors import DomainError

BASES = {b.name: b for b in builtin_datasets()}
GRID = [1.0, 0.1, 0.01, 0.001, 0.0001]


def oracle_summary(percents, convention):
    w = [math.log10(v / (100 - v)) for v in percents]
    m, s = statistics.fmean(w), statistics.stdev(w)
    back = lambda x: 1 / (1 + 10 ** -x)
    if convention == "upper":
        return back(m), back(m + s) - back(m)
    return back(m), (back(m + s) - back(m - s)) / 2


class TestDatasets:
    def test_sd68_verbatim(self):
        assert BASES["SD 6.8"].percents == (38, 44, 48, 49, 50, 51, 52, 56, 62)

    @pytest.mark.parametrize("name,sd", [("SD 6.8", 6.80), ("SD 3.4", 3.39), ("SD 1.7", 1.70)])
    def test_printed_sd(self, name, sd):
        vals = BASES[name].percents
        assert statistics.fmean(vals) == 50
        assert statistics.stdev(vals) == pytest.approx(sd, abs=0.05)

    def test_rejects_bad_values(self):
        with pytest.raises(DomainError):
            BaseDataset("x", (10.0, 100.0))
        with pytest.raises(DomainError):
            BaseDataset("x", ())


class TestWeightSpaceSummary:
    def test_symmetric_mean_half(self):
        mean, sd = weight_space_summary(BASES["SD 6.8"].percents)
        assert mean == pytest.approx(0.5, abs=1e-15)
        assert sd != pytest.approx(0.068, abs=1e-4)

    def test_single_value(self):
        mean, sd = weight_space_summary([30.0])
        assert mean == pytest.approx(0.30, abs=1e-15) and sd == 0.0

    @pytest.mark.parametrize("conv", ["upper", "half-range"])
    @pytest.mark.parametrize("name", list(BASES))
    @pytest.mark.parametrize("scale", [1.0, 0.03, 1e-4])
    def test_against_oracle(self, conv, name, scale):
        vals = [v * scale for v in BASES[name].percents]
        got = weight_space_summary(vals, conv)
        assert got == pytest.approx(oracle_summary(vals, conv), rel=1e-10)

    def test_unknown_convention(self):
        with pytest.raises(DomainError):
            weight_space_summary([40, 60], "geometric")


class TestCurve:
    @pytest.mark.parametrize("name", list(BASES))
    def test_zero_mean_divergence_at_scale_one(self, name):
        (pt,) = divergence_curve(BASES[name], [1.0])
        assert abs(pt.mean_pct_diff) <= 1e-10
        assert pt.sd_pct_diff != 0.0

    def test_scale_ordering_sd68(self):
        d = {s: abs(divergence_point(BASES["SD 6.8"], s).mean_pct_diff) for s in (1.0, 0.1, 0.001)}
        assert d[0.001] > d[0.1] > d[1.0]

    @pytest.mark.parametrize("scale", [0.1, 0.01, 0.001, 0.0001])
    def test_base_ordering(self, scale):
        d = [abs(divergence_point(BASES[n], scale).mean_pct_diff) for n in ("SD 6.8", "SD 3.4", "SD 1.7")]
        assert d[0] > d[1] > d[2]

    @pytest.mark.parametrize("name", list(BASES))
    def test_monotone_on_default_grid(self, name):
        scales = log_scales()
        pts = divergence_curve(BASES[name], scales)
        diffs = [abs(p.mean_pct_diff) for p in pts]
        # scales descend, so divergence must not decrease along the list
        assert all(b >= a for a, b in zip(diffs, diffs[1:]))

    @pytest.mark.parametrize("name", list(BASES))
    def test_probabilities_in_unit_interval(self, name):
        for p in divergence_curve(BASES[name]):
            for v in (p.mean_prob_space, p.mean_weight_space):
                assert 0.0 < v < 1.0
            for v in (p.sd_prob_space, p.sd_weight_space, p.mean_pct_diff, p.sd_pct_diff):
                assert math.isfinite(v)

    @pytest.mark.parametrize("name", list(BASES))
    def test_sd_ratio_order_ten(self, name):
        # stated target: |sd diff| about tenfold |mean diff| over [1e-4, 0.5]
        pts = [p for p in divergence_curve(BASES[name]) if 1e-4 <= p.scale <= 0.5]
        ratios = [abs(p.sd_pct_diff) / abs(p.mean_pct_diff) for p in pts]
        assert all(3 <= r <= 30 for r in ratios), f"{name}: ratio range {min(ratios):.2f}-{max(ratios):.2f}"

    def test_order_follows_input(self):
        pts = divergence_curve(BASES["SD 3.4"], [0.2, 1.0, 0.01])
        assert [p.scale for p in pts] == [0.2, 1.0, 0.01]
        assert pts[1].mean_pct == pytest.approx(50.0)

    def test_pct_diff_definition(self):
        p = divergence_point(BASES["SD 6.8"], 0.01)
        assert p.mean_pct_diff == pytest.approx(
            100 * (p.mean_prob_space - p.mean_weight_space) / p.mean_weight_space, rel=1e-12)
        assert p.mean_prob_space == pytest.approx(0.005, rel=1e-12)

    @pytest.mark.parametrize("scale", [0.0, -0.1, 1.5, math.nan])
    def test_bad_scale(self, scale):
        with pytest.raises(DomainError):
            divergence_point(BASES["SD 6.8"], scale)

    def test_scale_pushes_out_of_range(self):
        with pytest.raises(DomainError):
            divergence_point(BaseDataset("tiny", (1e-320, 50.0)), 1e-10)

    @given(st.lists(st.floats(0.5, 49.5), min_size=1, max_size=6))
    def test_mirrored_data_zero_mean_divergence(self, half):
        data = half + [100 - v for v in half]
        pt = divergence_point(BaseDataset("m", tuple(data)), 1.0)
        assert abs(pt.mean_pct_diff) <= 1e-10


class TestLogScales:
    def test_default(self):
        s = log_scales()
        assert len(s) == 60 and s[0] == 1.0 and s[-1] == 5e-5
        assert all(a > b for a, b in zip(s, s[1:]))

    def test_errors(self):
        with pytest.raises(DomainError):
            log_scales(0)
        with pytest.raises(DomainError):
            log_scales(5, 0.0, 1.0)
        with pytest.raises(DomainError):
            log_scales(5, 0.1, 2.0)
