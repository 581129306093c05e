"""Arithmetic Fourier and Hartley transforms built on Moebius inversion.

The transforms need only additions, sign changes and one scale factor per
average; the fractional-index samples the Hartley variant asks for are
supplied by pluggable interpolators.
"""

from .aft import (REED_SHIH, REED_TUFTS, TUFTS_SADASIV, AftResult, AverageId, bruns_average,
                  distinct_sample_times, reed_shih, reed_tufts, required_sample_times,
                  rt_average, shih_matrices, ts_average, ts_harmonic)
from .aht import AhtPlan, AhtResult, aht_forward, aht_inverse, build_plan, combination, dht_average
from .errors import DegenerateWeightError, DomainError, XformError
from .interp import Resolver, WeightSpec, resolve, weight, weight_asymptotic, weights
from .moebius import factor_pow2, inversion_terms, moebius_invert, mu, mu_sieve
from .ops import OpCounter, StagedOps
from .oracle import compare, dht_definition, fourier_series_numeric, idht_definition
from .signal import (ExactEvaluator, FourierCoefficients, UniformGrid, eval_series,
                     mean_estimate, random_coefficients, sample_at)
from .spectrum import Spectrum

__version__ = "0.1.0"

__all__ = [
    "REED_SHIH", "REED_TUFTS", "TUFTS_SADASIV", "AftResult", "AverageId", "bruns_average",
    "distinct_sample_times", "reed_shih", "reed_tufts", "required_sample_times", "rt_average",
    "shih_matrices", "ts_average", "ts_harmonic",
    "AhtPlan", "AhtResult", "aht_forward", "aht_inverse", "build_plan", "combination",
    "dht_average",
    "DegenerateWeightError", "DomainError", "XformError",
    "Resolver", "WeightSpec", "resolve", "weight", "weight_asymptotic", "weights",
    "factor_pow2", "inversion_terms", "moebius_invert", "mu", "mu_sieve",
    "OpCounter", "StagedOps",
    "compare", "dht_definition", "fourier_series_numeric", "idht_definition",
    "ExactEvaluator", "FourierCoefficients", "UniformGrid", "eval_series", "mean_estimate",
    "random_coefficients", "sample_at",
    "Spectrum",
]
