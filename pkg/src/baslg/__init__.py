"""Balakrishnan alpha-skew-logistic distribution: exact forms, sampling, fitting.

The base object is :class:`StandardBaslg`, the one-parameter density

    f(z; alpha) = ((1 - alpha z)^2 + 1)^2 e^{-z} / (C2(alpha) (1 + e^{-z})^2),

together with its even part (:class:`SymmetricComponent`), its alpha -> inf
limit (the fourth-order bimodal logistic, ``blg4_*``), exact cdf/mgf/moment
machinery built on real-axis polylogarithms, two exact samplers, a
location-scale maximum-likelihood layer with reference families for model
comparison, and four extension densities.
"""

from .core import (
    ModeReport,
    MomentSet,
    StandardBaslg,
    SymmetricComponent,
    blg4_cdf,
    blg4_mgf,
    blg4_pdf,
    normalizing_constant,
)
from .data import Dataset, DatasetError, load_dataset
from .extensions import AlphaBetaModel, BivariateModel, LogBaslgModel, TwoParamModel
from .fit import (
    DegenerateDataError,
    FitResult,
    LrTestResult,
    OptimizerConfig,
    compare_models,
    fit_mle,
    information_criteria,
    lr_test,
)
from .models import (
    FAMILIES,
    CompetitorModel,
    FamilyInfo,
    LocScaleModel,
    ParamSpace,
    param_space,
    validate_data,
)
from .sampler import SamplerConfig, density_ratio, quantile, rejection_bound, sample
from .specfn import polylog, polylog_neg_exp, zeta

__version__ = "0.1.0"

__all__ = [
    "StandardBaslg",
    "SymmetricComponent",
    "MomentSet",
    "ModeReport",
    "normalizing_constant",
    "blg4_pdf",
    "blg4_cdf",
    "blg4_mgf",
    "polylog",
    "polylog_neg_exp",
    "zeta",
    "SamplerConfig",
    "rejection_bound",
    "density_ratio",
    "quantile",
    "sample",
    "LocScaleModel",
    "CompetitorModel",
    "FAMILIES",
    "FamilyInfo",
    "ParamSpace",
    "param_space",
    "validate_data",
    "OptimizerConfig",
    "FitResult",
    "LrTestResult",
    "DegenerateDataError",
    "information_criteria",
    "fit_mle",
    "lr_test",
    "compare_models",
    "TwoParamModel",
    "AlphaBetaModel",
    "LogBaslgModel",
    "BivariateModel",
    "Dataset",
    "DatasetError",
    "load_dataset",
    "__version__",
]
