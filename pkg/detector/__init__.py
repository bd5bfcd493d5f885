"""
SCN Detector Package

CFAR detection with the squared condition number of the whitened sample
covariance:

1. ProbabilityEstimate, DetectorOperatingPoint, RobustnessScenario - domain types
2. false_alarm_rate, threshold_for_alpha, empirical_threshold - null side of the detector
3. detection_probability, roc_profile, roc_curve - detection performance
4. cfar_experiment, robustness_experiment, robustness_sweep - simulation studies
"""

from .types import (
    Statistic,
    ProbabilityEstimate,
    DetectorOperatingPoint,
    RobustnessScenario,
    CfarRow,
    CfarReport,
    RobustnessReport,
)
from .performance import (
    EXACT,
    MONTE_CARLO,
    false_alarm_rate,
    threshold_for_alpha,
    empirical_threshold,
    detection_probability,
    roc_profile,
    roc_curve,
)
from .experiments import (
    cfar_experiment,
    statistic_values,
    lambda_max_threshold,
    robustness_experiment,
    robustness_sweep,
)

__all__ = [
    'Statistic',
    'ProbabilityEstimate',
    'DetectorOperatingPoint',
    'RobustnessScenario',
    'CfarRow',
    'CfarReport',
    'RobustnessReport',
    'EXACT',
    'MONTE_CARLO',
    'false_alarm_rate',
    'threshold_for_alpha',
    'empirical_threshold',
    'detection_probability',
    'roc_profile',
    'roc_curve',
    'cfar_experiment',
    'statistic_values',
    'lambda_max_threshold',
    'robustness_experiment',
    'robustness_sweep',
]
