"""Benchmark quantities for honest (uncorrelated) preparation.

With independent preparations, a strategy with spectral gap nu rejects any
run of average infidelity eps with probability at least 1 - (1 - nu*eps)^N,
so planning reduces to a one-line log formula.  Passing statistics also pin
the fidelity inside a window set by the extreme eigenvalues, which collapses
to a point estimate for homogeneous strategies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ._util import ceil_int
from .errors import NumericalRange, OutOfRange
from .spectrum import Spectrum

#: Below this value of nu*eps the log formula is numerically meaningless.
MIN_NU_EPS = 1e-12


@dataclass(frozen=True)
class PrecisionTarget:
    """Infidelity threshold and significance level, both strictly in (0, 1)."""

    epsilon: float
    delta: float

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise OutOfRange(f"epsilon {self.epsilon!r} outside (0, 1)")
        if not 0.0 < self.delta < 1.0:
            raise OutOfRange(f"delta {self.delta!r} outside (0, 1)")

    @property
    def fidelity(self) -> float:
        return 1.0 - self.epsilon


def max_pass_prob(s: Spectrum, epsilon: float) -> float:
    """Largest single-test passing probability over states with infidelity >= epsilon."""
    if not 0.0 <= epsilon <= 1.0:
        raise OutOfRange(f"epsilon {epsilon!r} outside [0, 1]")
    return 1.0 - s.nu * epsilon


def num_tests_na(s: Spectrum, t: PrecisionTarget) -> int:
    """Minimum number of honest-scenario tests: ceil(ln delta / ln(1 - nu*eps))."""
    x = s.nu * t.epsilon
    if x < MIN_NU_EPS:
        raise NumericalRange(
            f"nu*epsilon = {x:.3e} too small for the exact count; "
            "the asymptotic value is ln(1/delta)/(nu*epsilon)"
        )
    return max(1, ceil_int(math.log(t.delta) / math.log1p(-x)))


def num_tests_na_upper(s: Spectrum, t: PrecisionTarget) -> int:
    """Simple upper bound ceil(ln(1/delta) / (nu*eps)) on :func:`num_tests_na`."""
    x = s.nu * t.epsilon
    if x < MIN_NU_EPS:
        raise NumericalRange(f"nu*epsilon = {x:.3e} too small")
    return max(1, ceil_int(-math.log(t.delta) / x))


def single_test_sufficient_na(s: Spectrum, t: PrecisionTarget) -> bool:
    """One test reaches the target iff nu*eps + delta >= 1."""
    return s.nu * t.epsilon + t.delta >= 1.0


def fidelity_window(s: Spectrum, pass_prob: float) -> tuple[float, float]:
    """Fidelity interval implied by an observed passing probability.

    The passing probability p of a fixed state sits between
    (1-tau)*F + tau and nu*F + beta, so F lies in
    [1 - (1-p)/nu, 1 - (1-p)/(1-tau)], clipped to [0, 1].  The two ends
    coincide for homogeneous spectra.
    """
    lo_p = max(0.0, s.tau)
    if pass_prob < lo_p - 1e-9 or pass_prob > 1.0 + 1e-9:
        raise OutOfRange(f"pass probability {pass_prob!r} outside [tau, 1]")
    p = min(max(pass_prob, lo_p), 1.0)
    f_low = 1.0 - (1.0 - p) / s.nu
    f_high = 1.0 - (1.0 - p) / (1.0 - s.tau)
    return (min(max(f_low, 0.0), 1.0), min(max(f_high, 0.0), 1.0))


def fidelity_estimate_homogeneous(
    lam: float, pass_rate: float, n_tests: int
) -> tuple[float, float]:
    """Point estimate F = (p - lam)/(1 - lam) and its standard deviation.

    For a homogeneous strategy the pass probability determines the fidelity
    exactly; with N tests the binomial fluctuation of the observed rate p
    propagates to dF = sqrt(p(1-p)) / ((1-lam) sqrt(N)) <= 1/(2(1-lam)sqrt(N)).
    """
    if not 0.0 <= lam < 1.0:
        raise OutOfRange(f"lambda {lam!r} outside [0, 1)")
    if n_tests < 1:
        raise OutOfRange("n_tests must be >= 1")
    if pass_rate < lam - 1e-9 or pass_rate > 1.0 + 1e-9:
        raise OutOfRange(f"pass rate {pass_rate!r} outside [lambda, 1]")
    p = min(max(pass_rate, lam), 1.0)
    nu = 1.0 - lam
    fid = (p - lam) / nu
    dfid = math.sqrt(p * (1.0 - p)) / (nu * math.sqrt(n_tests))
    assert dfid <= 0.5 / (nu * math.sqrt(n_tests)) + 1e-12
    return fid, dfid


def independent_pass_bound(s: Spectrum, infidelities: Sequence[float]) -> float:
    """Upper bound (1 - nu*mean_eps)^N on the all-pass probability.

    Holds whenever the runs are prepared independently; by the AM-GM
    inequality it dominates the product of per-run bounds prod(1 - nu*eps_j).
    """
    eps = [float(e) for e in infidelities]
    for e in eps:
        if not 0.0 <= e <= 1.0:
            raise OutOfRange(f"infidelity {e!r} outside [0, 1]")
    if not eps:
        return 1.0
    mean = sum(eps) / len(eps)
    return (1.0 - s.nu * mean) ** len(eps)
