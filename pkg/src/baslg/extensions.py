"""Extension densities built on the squared-polynomial skewing mechanism.

Four variants of the base construction:

* :class:`TwoParamModel`   two independent linear skew factors
* :class:`AlphaBetaModel`  cubic skewing polynomial 1 - alpha z - beta z^3
* :class:`LogBaslgModel`   exponentiated support, the log-scale analogue
* :class:`BivariateModel`  squared-polynomial skewing on a Gumbel bivariate
  logistic base

Closed forms for the normalizing constants are commonly quoted alongside
these densities, but they are easy to mistranscribe (the cubic model's
alpha*beta^3 coefficient in particular drops a digit in circulation).
Each model therefore evaluates its quoted form *and* a direct quadrature
of the unnormalized density.  When the two agree to 1e-6 relative the
cheap quoted form is used; otherwise the quadrature value wins and
``constant_erratum`` is set so callers can see the discrepancy.  The
bivariate constant always comes from quadrature, with the quoted form
demoted to a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import dblquad, quad

from .core import StandardBaslg, _as_array, _logistic_kernel, _restore

__all__ = [
    "TwoParamModel",
    "AlphaBetaModel",
    "LogBaslgModel",
    "BivariateModel",
]

_PI = math.pi
_REL_TOL = 1e-6


def _check_finite(**named):
    for name, value in named.items():
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}.")


def _quad_constant(weight) -> float:
    left = quad(weight, -300.0, 0.0, limit=600)[0]
    right = quad(weight, 0.0, 300.0, limit=600)[0]
    return left + right


def _guarded_constant(printed: float, reference: float) -> tuple[float, bool]:
    if abs(printed - reference) <= _REL_TOL * abs(reference):
        return printed, False
    return reference, True


@dataclass(frozen=True)
class TwoParamModel:
    """Density with two linear skew factors applied to the logistic kernel.

    f(z) = ((1 - a1 z)^2 + 1)^2 ((1 - a2 z)^2 + 1)^2 k(z) / C(a1, a2)
    """

    alpha1: float
    alpha2: float

    def __post_init__(self):
        _check_finite(alpha1=self.alpha1, alpha2=self.alpha2)

    @property
    def printed_constant(self) -> float:
        a1, a2 = self.alpha1, self.alpha2
        return (
            1680.0
            + _PI**2
            * (
                224.0 * a1 * a2 * (10.0 + 7.0 * _PI**2 * a2**2)
                + 28.0 * a2**2 * (40.0 + 7.0 * _PI**2 * a2**2)
                + 16.0 * _PI**2 * a1**3 * a2 * (98.0 + 155.0 * _PI**2 * a2**2)
                + 8.0 * a1**2 * (140.0 + 392.0 * _PI**2 * a2**2 + 155.0 * _PI**4 * a2**4)
                + _PI**2 * a1**4 * (196.0 + 1240.0 * _PI**2 * a2**2 + 889.0 * _PI**4 * a2**4)
            )
        ) / 105.0

    def _weight(self, z):
        w1 = (1.0 - self.alpha1 * z) ** 2 + 1.0
        w2 = (1.0 - self.alpha2 * z) ** 2 + 1.0
        return w1**2 * w2**2 * _logistic_kernel(z)

    @cached_property
    def _resolved(self) -> tuple[float, bool]:
        return _guarded_constant(self.printed_constant, _quad_constant(self._weight))

    @property
    def constant(self) -> float:
        return self._resolved[0]

    @property
    def constant_erratum(self) -> bool:
        return self._resolved[1]

    def pdf(self, z):
        arr, scalar = _as_array(z)
        return _restore(self._weight(arr) / self.constant, scalar)


@dataclass(frozen=True)
class AlphaBetaModel:
    """Density whose skewing polynomial is the cubic 1 - alpha z - beta z^3.

    f(z) = ((1 - alpha z - beta z^3)^2 + 1)^2 k(z) / C(alpha, beta)

    The quoted closed form for C is wrong whenever alpha * beta != 0 (its
    alpha*beta^3 coefficient reads 465010 where the derivation gives
    4650100), so for such parameters ``constant_erratum`` comes back True
    and the quadrature value is used.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        _check_finite(alpha=self.alpha, beta=self.beta)

    @property
    def printed_constant(self) -> float:
        a, b = self.alpha, self.beta
        return (
            60060.0
            + 40040.0 * _PI**2 * a**2
            + 7007.0 * _PI**4 * a**4
            + 112112.0 * _PI**4 * a * b
            + 88660.0 * _PI**6 * a**3 * b
            + 177320.0 * _PI**6 * b**2
            + 762762.0 * _PI**8 * a**2 * b**2
            + 465010.0 * _PI**10 * a * b**3
            + 15559247.0 * _PI**12 * b**4
        ) / 15015.0

    def _weight(self, z):
        w = (1.0 - self.alpha * z - self.beta * z**3) ** 2 + 1.0
        return w**2 * _logistic_kernel(z)

    @cached_property
    def _resolved(self) -> tuple[float, bool]:
        return _guarded_constant(self.printed_constant, _quad_constant(self._weight))

    @property
    def constant(self) -> float:
        return self._resolved[0]

    @property
    def constant_erratum(self) -> bool:
        return self._resolved[1]

    def pdf(self, z):
        arr, scalar = _as_array(z)
        return _restore(self._weight(arr) / self.constant, scalar)


@dataclass(frozen=True)
class LogBaslgModel:
    """Distribution of exp(Z) for Z with the base density; support is z > 0."""

    alpha: float

    def __post_init__(self):
        _check_finite(alpha=self.alpha)

    def _base(self) -> StandardBaslg:
        return StandardBaslg(self.alpha)

    def _positive(self, z) -> tuple[np.ndarray, bool]:
        arr, scalar = _as_array(z)
        if np.any(arr <= 0.0):
            raise ValueError("log-scale density is defined only for z > 0.")
        return arr, scalar

    def pdf(self, z):
        arr, scalar = self._positive(z)
        return _restore(self._base().pdf(np.log(arr)) / arr, scalar)

    def cdf(self, z):
        arr, scalar = self._positive(z)
        return _restore(self._base().cdf(np.log(arr)), scalar)


@dataclass(frozen=True)
class BivariateModel:
    """Squared-polynomial skewing of the Gumbel bivariate logistic density.

    Psi(z1, z2) = ((1 - a1 z1 - a2 z2)^2 + 1)^2 k(z1) k(z2)
                  (1 + alpha tanh(z1/2) tanh(z2/2)) / C

    ``alpha`` is the Gumbel dependence parameter and must satisfy
    |alpha| <= 1; a1, a2 control the skewing plane.
    """

    alpha: float
    alpha1: float
    alpha2: float

    def __post_init__(self):
        _check_finite(alpha=self.alpha, alpha1=self.alpha1, alpha2=self.alpha2)
        if abs(self.alpha) > 1.0:
            raise ValueError(f"dependence parameter needs |alpha| <= 1, got {self.alpha!r}.")

    def _weight(self, z1, z2):
        w = (1.0 - self.alpha1 * z1 - self.alpha2 * z2) ** 2 + 1.0
        dep = 1.0 + self.alpha * np.tanh(z1 / 2.0) * np.tanh(z2 / 2.0)
        return w**2 * _logistic_kernel(z1) * _logistic_kernel(z2) * dep

    @property
    def printed_constant(self) -> float:
        a, a1, a2 = self.alpha, self.alpha1, self.alpha2
        return (
            60.0
            + 7.0 * _PI**4 * a1**4
            + 60.0 * _PI**2 * a * a1**3 * a2
            + 40.0 * _PI**2 * a2**2
            + 7.0 * _PI**4 * a2**4
            + 10.0 * _PI**2 * a1**2 * (4.0 + _PI**2 * a2**2)
            + 60.0 * a * a1 * a2 * (4.0 + _PI**2 * a2**2)
        ) / 15.0

    @cached_property
    def _resolved(self) -> tuple[float, bool]:
        ref, _ = dblquad(
            lambda z2, z1: self._weight(z1, z2),
            -45.0,
            45.0,
            -45.0,
            45.0,
            epsabs=1e-10,
            epsrel=1e-10,
        )
        _, erratum = _guarded_constant(self.printed_constant, ref)
        return ref, erratum

    @property
    def constant(self) -> float:
        return self._resolved[0]

    @property
    def constant_erratum(self) -> bool:
        return self._resolved[1]

    def pdf(self, z1, z2):
        a1, s1 = _as_array(z1)
        a2, s2 = _as_array(z2)
        out = self._weight(a1, a2) / self.constant
        return _restore(out, s1 and s2)
