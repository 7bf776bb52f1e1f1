"""Goodness-of-fit tests for uniformity under progressive Type-I interval censoring.

The pipeline: a :class:`CensoringScheme` fixes inspection times and
withdrawal percentages; a :class:`CensoredSample` holds observed failure and
removal counts; :func:`reliability_estimates` turns counts into survival
estimates, :func:`deviations` compares them to a hypothesized model, and
:func:`compute_statistics` condenses the gap into six statistics whose null
distributions are simulated by :func:`critical_values` / :func:`p_value`.
Arbitrary continuous nulls reduce to the uniform case through
:func:`transform_scheme` / :func:`test_general`.
"""

from .distributions import (
    DEFAULT_PARAMETER_GRIDS,
    FAMILY_KINDS,
    UNIFORM,
    AlternativeFamily,
    TabulatedCdf,
    cdf_eval,
    parse_family,
    test_general,
    transform_scheme,
)
from .errors import (
    CensoringError,
    DegenerateRiskSet,
    EmptyDeviationVector,
    FirstTimeNotZero,
    FlatCdfAcrossInspections,
    InvalidN,
    InvalidSample,
    LastPercentageNotOne,
    LengthMismatch,
    NonIncreasingTimes,
    NonMonotoneCdf,
    ParameterOutOfDomain,
    PercentageOutOfRange,
    SchemeMismatch,
)
from .gof import STAT_NAMES, StatisticSet, compute_statistics, reject
from .montecarlo import (
    CriticalValueTable,
    PowerEstimate,
    critical_values,
    derive_stream,
    p_value,
    power,
    power_curve,
    power_estimates_to_csv,
    replicated_statistics,
)
from .reliability import (
    DeviationVector,
    ReliabilityEstimate,
    deviations,
    reliability_estimates,
    survival_values,
)
from .sampling import interval_failure_probs, simulate_sample, withdraw_count
from .schemes import (
    BUNDLED_SCHEME_NAMES,
    CensoredSample,
    CensoringScheme,
    RiskSetTrace,
    load_scheme,
    risk_trace,
    sample_from_csv,
    sample_from_json,
    sample_to_csv,
    sample_to_json,
    scheme_from_json,
    scheme_id,
    scheme_to_json,
    validate_scheme,
)

__version__ = "0.1.0"

__all__ = [
    "AlternativeFamily",
    "BUNDLED_SCHEME_NAMES",
    "CensoredSample",
    "CensoringError",
    "CensoringScheme",
    "CriticalValueTable",
    "DEFAULT_PARAMETER_GRIDS",
    "DegenerateRiskSet",
    "DeviationVector",
    "EmptyDeviationVector",
    "FAMILY_KINDS",
    "FirstTimeNotZero",
    "FlatCdfAcrossInspections",
    "InvalidN",
    "InvalidSample",
    "LastPercentageNotOne",
    "LengthMismatch",
    "NonIncreasingTimes",
    "NonMonotoneCdf",
    "ParameterOutOfDomain",
    "PercentageOutOfRange",
    "PowerEstimate",
    "ReliabilityEstimate",
    "RiskSetTrace",
    "STAT_NAMES",
    "SchemeMismatch",
    "StatisticSet",
    "TabulatedCdf",
    "UNIFORM",
    "cdf_eval",
    "compute_statistics",
    "critical_values",
    "derive_stream",
    "deviations",
    "interval_failure_probs",
    "load_scheme",
    "p_value",
    "parse_family",
    "power",
    "power_curve",
    "power_estimates_to_csv",
    "reject",
    "reliability_estimates",
    "replicated_statistics",
    "risk_trace",
    "sample_from_csv",
    "sample_from_json",
    "sample_to_csv",
    "sample_to_json",
    "scheme_from_json",
    "scheme_id",
    "scheme_to_json",
    "simulate_sample",
    "survival_values",
    "test_general",
    "transform_scheme",
    "validate_scheme",
    "withdraw_count",
]
