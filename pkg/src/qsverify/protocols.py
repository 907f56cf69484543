"""Catalog of verification protocols for concrete state families.

Each family maps to the spectral data of its best known local-measurement
strategy (spectral gap, whether a two-level form is available, measurement
settings count), from which honest and adversarial test counts follow.
Hedging with the trivial test adapts every entry to the adversarial scenario
at a small constant-factor cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ._util import ceil_int, floor_int
from .errors import InvalidParams, NormalizationError
from .hedging import h_p, p_zero
from .homogeneous import min_tests_homo
from .nonadversarial import PrecisionTarget, num_tests_na
from .spectrum import homogeneous


class Family(str, Enum):
    MAX_ENTANGLED = "MaxEntangled"
    GHZ = "GHZ"
    BIPARTITE_PURE = "BipartitePure"
    STABILIZER_QUBIT = "StabilizerQubit"
    STABILIZER_QUDIT = "StabilizerQudit"
    HYPERGRAPH = "Hypergraph"
    WEIGHTED_GRAPH = "WeightedGraph"
    DICKE = "Dicke"


#: Families whose catalog strategy can be made two-level with the same gap.
_HOMOGENEOUS_FAMILIES = frozenset(
    {
        Family.MAX_ENTANGLED,
        Family.GHZ,
        Family.BIPARTITE_PURE,
        Family.STABILIZER_QUBIT,
        Family.STABILIZER_QUDIT,
    }
)


@dataclass(frozen=True)
class ProtocolDescriptor:
    """Spectral summary of a family's catalog strategy.

    ``tau`` equals 1 - nu for two-level strategies and is conservatively 0
    where only the gap is known.  ``adaptive_nu`` carries the alternative
    two-qubit adaptive gap for bipartite states when applicable.
    """

    family: Family
    params: dict
    nu: float
    tau: float
    homogeneous: bool
    settings: int
    adaptive_nu: float | None = None


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    i = 2
    while i * i <= d:
        if d % i == 0:
            return False
        i += 1
    return True


def describe(family: Family | str, params: dict | None = None) -> ProtocolDescriptor:
    """Resolve a family plus parameters into spectral data and settings count."""
    family = Family(family)
    params = dict(params or {})

    if family in (Family.MAX_ENTANGLED, Family.GHZ):
        d = int(params.get("d", 2))
        if d < 2:
            raise InvalidParams("local dimension d must be >= 2")
        if family is Family.GHZ:
            n = int(params.get("n", 3))
            if n < 3:
                raise InvalidParams("GHZ needs n >= 3 parties")
            params["n"] = n
        params["d"] = d
        nu = d / (d + 1)
        return ProtocolDescriptor(family, params, nu, 1.0 - nu, True, settings=2)

    if family is Family.BIPARTITE_PURE:
        schmidt = [float(x) for x in params.get("schmidt", ())]
        if len(schmidt) < 2:
            raise InvalidParams("need at least two Schmidt coefficients")
        if any(b > a + 1e-12 for a, b in zip(schmidt, schmidt[1:])):
            raise InvalidParams("Schmidt coefficients must be nonincreasing")
        if any(x < 0 for x in schmidt):
            raise InvalidParams("Schmidt coefficients must be nonnegative")
        if abs(sum(x * x for x in schmidt) - 1.0) > 1e-9:
            raise NormalizationError("squared Schmidt coefficients must sum to 1")
        params["schmidt"] = schmidt
        nu = 2.0 / (2.0 + schmidt[0] ** 2 + schmidt[1] ** 2)
        adaptive = 1.0 / (1.0 + schmidt[0] * schmidt[1]) if len(schmidt) == 2 else None
        return ProtocolDescriptor(
            family, params, nu, 1.0 - nu, True, settings=2, adaptive_nu=adaptive
        )

    if family is Family.STABILIZER_QUBIT:
        n = int(params.get("n", 0))
        if n < 2:
            raise InvalidParams("stabilizer protocol needs n >= 2 qubits")
        params["n"] = n
        beta = (2 ** (n - 1) - 1) / (2**n - 1)
        return ProtocolDescriptor(
            family, params, 1.0 - beta, beta, True, settings=2**n - 1
        )

    if family is Family.STABILIZER_QUDIT:
        d = int(params.get("d", 0))
        n = int(params.get("n", 0))
        if not _is_prime(d):
            raise InvalidParams(f"local dimension {d} must be prime")
        if n < 2:
            raise InvalidParams("stabilizer protocol needs n >= 2 qudits")
        params.update(d=d, n=n)
        beta = (d ** (n - 1) - 1) / (d**n - 1)
        settings = (d**n - 1) // (d - 1)
        return ProtocolDescriptor(
            family, params, 1.0 - beta, beta, True, settings=settings
        )

    if family in (Family.HYPERGRAPH, Family.WEIGHTED_GRAPH):
        chi = params.get("chi")
        if chi is None:
            max_degree = params.get("max_degree")
            if max_degree is None:
                raise InvalidParams("need chromatic number chi or max_degree")
            chi = int(max_degree) + 1
        chi = int(chi)
        if chi < 2:
            raise InvalidParams("chromatic number must be >= 2")
        params["chi"] = chi
        return ProtocolDescriptor(
            family, params, 1.0 / chi, 0.0, False, settings=chi
        )

    if family is Family.DICKE:
        n = int(params.get("n", 0))
        if n < 3:
            raise InvalidParams("Dicke protocol needs n >= 3 qubits")
        k = int(params.get("excitations", 1))
        if not 1 <= k <= n - 1:
            raise InvalidParams("excitations must lie in 1..n-1")
        params.update(n=n, excitations=k)
        nu = 1.0 / 3.0 if n == 3 else 1.0 / (n - 1)
        return ProtocolDescriptor(family, params, nu, 0.0, False, settings=2)

    raise InvalidParams(f"unknown family {family!r}")


@dataclass(frozen=True)
class Plan:
    """Planned test counts for one family at one precision target."""

    descriptor: ProtocolDescriptor
    adversarial: bool
    n_na: int
    n_adv: int | None
    hedge_p: float
    lambda_effective: float | None
    formula: str


def plan(desc: ProtocolDescriptor, t: PrecisionTarget, adversarial: bool) -> Plan:
    """Honest count always; adversarial count via hedging when requested.

    Two-level families are hedged up to the common eigenvalue max(beta, 1/e)
    and counted exactly; gap-only families are hedged with p = nu/e and
    counted by the tau-free prefactor bound.
    """
    base = homogeneous(1.0 - desc.nu)
    n_na = num_tests_na(base, t)
    if not adversarial:
        return Plan(desc, False, n_na, None, 0.0, None, "honest-exact")

    if desc.homogeneous:
        beta = 1.0 - desc.nu
        lam_eff = max(beta, 1.0 / math.e)
        p = 0.0 if lam_eff <= beta else (lam_eff - beta) / (1.0 - beta)
        n_adv = min_tests_homo(t.epsilon, t.delta, lam_eff)
        return Plan(desc, True, n_na, n_adv, p, lam_eff, "two-level-exact")

    p = p_zero(desc.nu)
    bound = h_p(p, desc.nu, 0.0) * (-math.log((1.0 - t.epsilon) * t.delta)) / t.epsilon
    return Plan(
        desc, True, n_na, max(1, ceil_int(bound)), p, None, "hedged-prefactor-bound"
    )


def gme_certification(d: int, delta: float, adversarial: bool) -> int:
    """Tests needed to certify genuine multipartite entanglement of a connected
    qudit graph state (prime local dimension d) at significance delta.

    Fidelity above 1/d certifies entanglement, so this is verification at
    epsilon = (d-1)/d.  Honest: one test as soon as delta >= (2d-1)/d^2.
    Adversarial: the two-level strategy with eigenvalue 2/(d+1) needs one
    test iff delta >= 4d/(d+1)^2.
    """
    if not _is_prime(d):
        raise InvalidParams(f"local dimension {d} must be prime")
    if not 0.0 < delta < 1.0:
        raise InvalidParams(f"delta {delta!r} outside (0, 1)")
    eps = (d - 1) / d
    if not adversarial:
        ratio = (2 * d - 1) / d**2
        if delta >= ratio - 1e-12:
            return 1
        return max(1, ceil_int(math.log(delta) / math.log(ratio)))
    if delta >= 4 * d / (d + 1) ** 2 - 1e-12:
        return 1
    return min_tests_homo(eps, delta, 2.0 / (d + 1))


@dataclass(frozen=True)
class TableRow:
    """One catalog row: gap, two-level availability, honest and adversarial counts."""

    family: str
    nu_label: str
    nu: float
    homogeneous: bool
    n_na: int
    n_adv: int
    na_formula: str
    adv_formula: str


def table1(
    t: PrecisionTarget,
    d: int = 2,
    qudit_d: int = 3,
    chi: int = 3,
    dicke_n: int = 4,
) -> list[TableRow]:
    """Evaluate the nine catalog display formulas at (epsilon, delta).

    These are the simplified catalog expressions (coefficient times
    ln(1/delta)/epsilon with explicit floor/ceiling), worst case over family
    members where the catalog states one; exact planning uses :func:`plan`.
    """
    if not _is_prime(qudit_d) or qudit_d < 3:
        raise InvalidParams("qudit stabilizer row needs an odd prime dimension")
    if dicke_n < 4:
        raise InvalidParams("the parametric Dicke row is for n >= 4")
    c = -math.log(t.delta) / t.epsilon
    e = math.e

    def up(coeff: float) -> int:
        return max(1, ceil_int(coeff * c))

    def down(coeff: float) -> int:
        return max(1, floor_int(coeff * c))

    rows = [
        TableRow(
            "MaxEntangled", "d/(d+1)", d / (d + 1), True,
            up((d + 1) / d), up(e), f"ceil({d+1}/{d} * ln(1/delta)/eps)",
            "ceil(e * ln(1/delta)/eps)",
        ),
        TableRow(
            "BipartitePure", "2/3 (worst case)", 2 / 3, True,
            up(1.5), up(e), "ceil(3/2 * ln(1/delta)/eps)",
            "ceil(e * ln(1/delta)/eps)",
        ),
        TableRow(
            "GHZ", "d/(d+1)", d / (d + 1), True,
            up((d + 1) / d), up(e), f"ceil({d+1}/{d} * ln(1/delta)/eps)",
            "ceil(e * ln(1/delta)/eps)",
        ),
        TableRow(
            "StabilizerQubit", "1/2 (worst case)", 0.5, True,
            up(2.0), up(2.0 / math.log(2.0)), "ceil(2 * ln(1/delta)/eps)",
            "ceil(2/ln2 * ln(1/delta)/eps)",
        ),
        TableRow(
            "StabilizerQudit", "(d-1)/d", (qudit_d - 1) / qudit_d, True,
            up(qudit_d / (qudit_d - 1)), up(e),
            f"ceil({qudit_d}/{qudit_d-1} * ln(1/delta)/eps)",
            "ceil(e * ln(1/delta)/eps)",
        ),
        TableRow(
            "Hypergraph", "1/chi", 1 / chi, False,
            up(float(chi)), down(chi + e - 1), f"ceil({chi} * ln(1/delta)/eps)",
            f"floor(({chi}+e-1) * ln(1/delta)/eps)",
        ),
        TableRow(
            "WeightedGraph", "1/chi", 1 / chi, False,
            up(float(chi)), down(chi + e - 1), f"ceil({chi} * ln(1/delta)/eps)",
            f"floor(({chi}+e-1) * ln(1/delta)/eps)",
        ),
        TableRow(
            "Dicke(n=3)", "1/3", 1 / 3, False,
            up(3.0), down(4.1), "ceil(3 * ln(1/delta)/eps)",
            "floor(4.1 * ln(1/delta)/eps)",
        ),
        TableRow(
            "Dicke(n>=4)", "1/(n-1)", 1 / (dicke_n - 1), False,
            up(float(dicke_n - 1)), down(dicke_n + e - 2),
            f"ceil({dicke_n-1} * ln(1/delta)/eps)",
            f"floor(({dicke_n}+e-2) * ln(1/delta)/eps)",
        ),
    ]
    return rows


def protocol_from_json(obj: dict) -> ProtocolDescriptor:
    """Parse the protocol wire format {"protocol": {"family": ..., ...params}}."""
    if not isinstance(obj, dict) or "protocol" not in obj:
        raise InvalidParams('protocol document needs a "protocol" object')
    inner = dict(obj["protocol"])
    family = inner.pop("family", None)
    if family is None:
        raise InvalidParams('protocol object needs a "family" field')
    return describe(family, inner)
