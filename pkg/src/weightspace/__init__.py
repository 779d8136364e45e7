"""Statistics in log10-odds ("Weight") space.

Probabilities are compared after conversion to Weights, where effects add:
Impact is a difference of mean Weights, Bayes' theorem becomes addition, and
Certainty is the log10 odds of the p-value.
"""

from .descriptive import (Sample, SummaryStats, TTestResult, pooled_t_test, skewness_adjusted,
                          skewness_mean_median, summarize, welch_t_test)
from .divergence import (BaseDataset, DivergencePoint, builtin_datasets, divergence_curve,
                         weight_space_summary)
from .errors import DomainError, PipelineError
from .odds import (bayes_posttest, certainty_from_p, clamp_extremes, impact, probability_from_sd,
                   probability_from_weight, sd_from_probability, weight_from_probability)
from .special import t_cdf
from .untidy import (DEFAULT_CANDIDATES, EXPONENTIAL, IDENTITY, NATURAL_LOG, PipelineResult,
                     TransformKind, TransformTrace, apply_transform, custom_transform, effective_df,
                     inverse_map, map_to_weight, pooled_normalize, run_pipeline)
from .wtest import (Category, CertaintyThresholds, TestReport, WTestConfig, categorize,
                    confidence_interval, wtest_probabilities, wtest_weights)

__version__ = "0.1.0"
