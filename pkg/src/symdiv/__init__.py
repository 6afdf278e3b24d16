"""Symmetric divergence measures and their tight bounds in terms of total variation."""

from .bounds import (
    ExtremalPair,
    LCurvePoint,
    PairKind,
    bernoulli_kl,
    bhattacharyya_bounds,
    binary_entropy,
    capacitory_min,
    chernoff_min,
    jeffreys_epsilon_solver,
    jeffreys_min,
    jeffreys_min_given_kl,
    l_curve,
    l_curve_inverse,
    make_extremal_pair,
    symmetric_fdiv_infimum,
    topsoe_series,
)
from .coding import (
    CodeReport,
    UdCode,
    analyze,
    induced_distribution,
    jeffreys_to_induced,
    kl_from_induced,
    kl_to_induced,
    l1_bounds,
    length_condition_holds,
    redundancy,
    shannon_code,
)
from .dist import Distribution, entropy, new_distribution, total_variation
from .fdiv import (
    CAPACITORY,
    HELLINGER_SQ,
    JEFFREYS,
    KL,
    KL_DUAL,
    TOTAL_VARIATION,
    ChernoffResult,
    FDivergenceSpec,
    bhattacharyya_coefficient,
    bhattacharyya_distance,
    capacitory,
    chernoff_information,
    f_divergence,
    hellinger_sq,
    is_symmetric,
    jeffreys,
    kl,
    kl_dual,
    renyi_divergence,
)
from .oracle import OracleReport, sweep_pairs

__version__ = "0.1.0"
