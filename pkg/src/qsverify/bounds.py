"""Analytic fidelity and test-count bounds for arbitrary strategies.

Three regimes:

* universal: the conditional fidelity after N accepted tests is at least
  1 - (1-delta)/(N nu delta), tight for delta >= (1 + N beta)/(N+1);
* large gap / singular: with nu >= 1/2 the floor 1 - 1/((N+1) delta) also
  holds, and for singular strategies it is an upper bound too, which pins
  the exact test count to a min of two ceilings;
* positive definite: the prefactor h = 1/min(beta ln(1/beta), tau ln(1/tau))
  controls the count, N ~ h ln(1/delta)/eps in the high-precision limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._util import ceil_int, log_bracket, x_ln_inv
from .errors import OutOfRange, SingularSpectrum
from .nonadversarial import PrecisionTarget
from .spectrum import Spectrum


@dataclass(frozen=True)
class HConstants:
    """Overhead prefactor h and the eigenvalue realizing it.

    h = 1/min(beta ln(1/beta), tau ln(1/tau)) >= e, with beta_tilde whichever
    of the two extreme eigenvalues attains the minimum.
    """

    h: float
    beta_tilde: float


def h_of(s: Spectrum) -> HConstants:
    """Overhead prefactor of a positive-definite spectrum."""
    if s.tau <= 0.0:
        raise SingularSpectrum("h is defined only for tau > 0")
    g_beta = x_ln_inv(s.beta)
    g_tau = x_ln_inv(s.tau)
    beta_tilde = s.beta if g_beta <= g_tau else s.tau
    return HConstants(h=1.0 / min(g_beta, g_tau), beta_tilde=beta_tilde)


def delta_star(n: int, s: Spectrum) -> float:
    """Threshold (1 + N beta)/(N + 1) above which the universal bound is exact."""
    if n < 1:
        raise OutOfRange("n must be >= 1")
    return (1.0 + n * s.beta) / (n + 1)


def fidelity_lb_general(n: int, delta: float, nu: float) -> float:
    """Universal floor 1 - (1-delta)/(N nu delta); may be negative (trivial)."""
    if n < 1:
        raise OutOfRange("n must be >= 1")
    if not 0.0 < delta <= 1.0:
        raise OutOfRange(f"delta {delta!r} outside (0, 1]")
    if not 0.0 < nu <= 1.0:
        raise OutOfRange(f"nu {nu!r} outside (0, 1]")
    return 1.0 - (1.0 - delta) / (n * nu * delta)


def fidelity_lb_nu_half(n: int, delta: float) -> float:
    """Floor 1 - 1/((N+1) delta), valid whenever nu >= 1/2."""
    if n < 1:
        raise OutOfRange("n must be >= 1")
    if not 0.0 < delta <= 1.0:
        raise OutOfRange(f"delta {delta!r} outside (0, 1]")
    return 1.0 - 1.0 / ((n + 1) * delta)


@dataclass(frozen=True)
class GeneralTestBounds:
    """Counts implied by the universal and large-gap fidelity bounds.

    ``upper`` always holds; ``singular_lower`` holds when tau = 0,
    ``nu_half_upper`` when nu >= 1/2, and ``exact`` is set when both apply.
    Real-valued forms are kept next to the ceiled integers.
    """

    upper_real: float
    upper: int
    alt_real: float
    alt: int
    singular_lower: int | None
    nu_half_upper: int | None
    exact: int | None


def tests_bounds_general(s: Spectrum, t: PrecisionTarget) -> GeneralTestBounds:
    """Universal count bounds needing only nu and whether tau = 0."""
    eps, dlt = t.epsilon, t.delta
    upper_real = (1.0 - dlt) / (s.nu * dlt * eps)
    upper = max(1, ceil_int(upper_real))
    alt_real = 1.0 / (dlt * eps) - 1.0
    alt = max(1, ceil_int(alt_real))
    both = min(upper, alt)
    singular_lower = both if s.singular else None
    nu_half_upper = both if s.nu >= 0.5 else None
    exact = both if (s.singular and s.nu >= 0.5) else None
    return GeneralTestBounds(
        upper_real=upper_real,
        upper=upper,
        alt_real=alt_real,
        alt=alt,
        singular_lower=singular_lower,
        nu_half_upper=nu_half_upper,
        exact=exact,
    )


def fidelity_lb_nonsingular(n: int, value: float, s: Spectrum, mode: str) -> float:
    """Prefactor-based fidelity floor for positive-definite strategies.

    mode="by_delta": floor on the conditional fidelity at pass level delta,
    with argument tau*delta inside the logs.  mode="by_f": floor conditioned
    on joint weight f.  Both read

        (N+1 - ln(arg)/ln(beta)) / (N+1 - ln(arg)/ln(beta) - h ln(arg)).
    """
    if s.tau <= 0.0:
        raise SingularSpectrum("the prefactor bound needs tau > 0")
    if n < 1:
        raise OutOfRange("n must be >= 1")
    if not 0.0 < value <= 1.0:
        raise OutOfRange(f"argument {value!r} outside (0, 1]")
    if mode == "by_delta":
        arg = s.tau * value
    elif mode == "by_f":
        arg = value
    else:
        raise OutOfRange(f"mode {mode!r} not in {{'by_delta', 'by_f'}}")
    h = h_of(s).h
    la = math.log(arg)
    head = n + 1 - la / math.log(s.beta)
    return head / (head - h * la)


@dataclass(frozen=True)
class NonsingularTestBounds:
    """Prefactor-based bracket on the minimum adversarial test count.

    ``lower_by_eigenvalue`` lists the two-level lower bound induced by each
    non-unit distinct eigenvalue; ``lower`` is their maximum.  Two upper
    bounds differ in the log argument: F*delta (better when F > tau) or
    tau*delta; ``upper`` is the smaller ceiling and ``upper_loose`` the
    simplest strict bound h ln(1/(F delta))/eps.
    """

    lower_by_eigenvalue: tuple[tuple[float, int], ...]
    lower: int
    upper_fdelta_real: float
    upper_fdelta: int
    upper_taudelta_real: float
    upper_taudelta: int
    upper: int
    upper_loose: float


def tests_bounds_nonsingular(s: Spectrum, t: PrecisionTarget) -> NonsingularTestBounds:
    """Bracket the exact adversarial count for a positive-definite spectrum."""
    if s.tau <= 0.0:
        raise SingularSpectrum("bounds need tau > 0")
    eps, dlt = t.epsilon, t.delta
    fid = 1.0 - eps
    h = h_of(s).h

    lowers = []
    for lam in s.distinct[1:]:
        k_minus, _ = log_bracket(dlt, lam)
        lowers.append((lam, k_minus + ceil_int(k_minus * fid / (lam * eps))))
    lower = max(b for _, b in lowers)

    log_beta = math.log(s.beta)

    def upper_pair(arg: float) -> tuple[float, int]:
        la = math.log(arg)
        real = h * fid * (-la) / eps + la / log_beta - 1.0
        return real, max(1, ceil_int(real))

    f_real, f_int = upper_pair(fid * dlt)
    t_real, t_int = upper_pair(s.tau * dlt)
    return NonsingularTestBounds(
        lower_by_eigenvalue=tuple(lowers),
        lower=lower,
        upper_fdelta_real=f_real,
        upper_fdelta=f_int,
        upper_taudelta_real=t_real,
        upper_taudelta=t_int,
        upper=min(f_int, t_int),
        upper_loose=h * (-math.log(fid * dlt)) / eps,
    )
