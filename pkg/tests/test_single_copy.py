import math
import random

import pytest
from hypothesis import given, strategies as st

from qsverify import adversarial as adv, errors, single_copy as sc, spectrum
from qsverify.nonadversarial import PrecisionTarget


def test_zeta_one_homo_values():
    # middle piece at lam=1/3, delta=5/9 coincides with the projective value
    assert sc.zeta_one_homo(5 / 9, 1 / 3) == pytest.approx(1 / 9, abs=1e-15)
    assert sc.zeta_one_homo(5 / 9, 0.0) == pytest.approx(1 / 9, abs=1e-15)
    assert sc.zeta_one_homo(0.3, 0.4) == 0.0
    for lam in (0.0, 0.2, 0.7):
        assert sc.zeta_one_homo(1.0, lam) == pytest.approx(1.0)


def test_zeta_one_homo_matches_hull():
    rng = random.Random(1)
    for _ in range(200):
        lam = rng.uniform(0.0, 0.95)
        dlt = rng.uniform(0.0, 1.0)
        expect = adv.zeta(1, dlt, spectrum.homogeneous(lam))
        assert sc.zeta_one_homo(dlt, lam) == pytest.approx(expect, abs=1e-12)


def test_zeta_one_homo_piece_continuity():
    for lam in (0.1, 0.35, 0.6):
        for junction in (lam, (1 + lam) / 2):
            below = sc.zeta_one_homo(junction - 1e-12, lam)
            above = sc.zeta_one_homo(junction + 1e-12, lam)
            assert below == pytest.approx(above, abs=1e-10)


@given(
    st.floats(min_value=0.0, max_value=1.0),
    st.floats(min_value=0.0, max_value=0.98),
    st.floats(min_value=0.0, max_value=1.0),
)
def test_one_test_weight_well_behaved(delta, beta, frac):
    tau = beta * frac
    val = sc.zeta_one_general(delta, beta, tau)
    assert 0.0 <= val <= delta + 1e-12
    # never better than the best two-level strategy at the same level
    best, _ = sc.max_zeta_one(delta)
    assert val <= best + 1e-12


def test_max_zeta_one():
    value, opts = sc.max_zeta_one(5 / 9)
    assert value == pytest.approx(1 / 9, abs=1e-12)
    assert sorted(opts) == pytest.approx([0.0, 1 / 3], abs=1e-9)
    value, opts = sc.max_zeta_one(0.0)
    assert value == 0.0 and opts == [0.0]
    value, opts = sc.max_zeta_one(1.0)
    assert value == pytest.approx(1.0) and opts == [0.0]


def test_max_zeta_one_by_dense_scan():
    rng = random.Random(2)
    for _ in range(25):
        dlt = rng.uniform(0.0, 1.0)
        value, _ = sc.max_zeta_one(dlt)
        scan = max(
            sc.zeta_one_homo(dlt, i / 4000.0 * 0.99975) for i in range(4000)
        )
        assert value == pytest.approx(scan, abs=1e-6)
        assert value >= scan - 1e-12


def test_feasibility_threshold():
    assert sc.feasibility_threshold(4 / 5) == pytest.approx(5 / 9, abs=1e-12)
    # both branches give 5/9 at the crossover infidelity 4/5
    eps = 4 / 5
    assert 4 * (1 - eps) / (2 - eps) ** 2 == pytest.approx(1 / (1 + eps))


def test_single_copy_feasible():
    assert sc.single_copy_feasible(PrecisionTarget(0.9, 0.99))
    assert not sc.single_copy_feasible(PrecisionTarget(0.1, 0.1))
    # significance 1/2 requires infidelity at least 2(sqrt(2)-1)
    edge = 2 * (math.sqrt(2) - 1)
    assert sc.feasibility_threshold(edge) == pytest.approx(0.5, abs=1e-12)
    assert sc.single_copy_feasible(PrecisionTarget(edge + 1e-9, 0.5))
    assert not sc.single_copy_feasible(PrecisionTarget(edge - 1e-6, 0.5))


def test_feasibility_consistent_with_best_joint_weight():
    rng = random.Random(3)
    for _ in range(300):
        eps = rng.uniform(0.01, 0.99)
        dlt = rng.uniform(0.01, 0.99)
        t = PrecisionTarget(eps, dlt)
        via_threshold = sc.single_copy_feasible(t)
        value, _ = sc.max_zeta_one(dlt)
        via_weight = value >= dlt * (1 - eps) - 1e-12
        assert via_threshold == via_weight


def test_lambda_window():
    t = PrecisionTarget(0.9, 0.45)
    window = sc.lambda_window(t)
    assert window is not None
    lam_minus, lam_plus = window
    assert (1 - 0.9) * 0.45 < lam_minus <= lam_plus < 0.45
    # edges of the window are exactly feasible
    for lam in window:
        assert sc.zeta_one_homo(0.45, lam) >= 0.45 * (1 - 0.9) - 1e-12
    # scan: eigenvalues outside the window fail
    for lam in (lam_minus - 0.02, lam_plus + 0.02):
        assert sc.zeta_one_homo(0.45, lam) < 0.45 * (1 - 0.9)
    assert sc.lambda_window(PrecisionTarget(0.1, 0.45)) is None


def test_lambda_window_repeated_root():
    eps = 0.9
    dlt = 4 * (1 - eps) / (2 - eps) ** 2
    lam_minus, lam_plus = sc.lambda_window(PrecisionTarget(eps, dlt))
    assert lam_minus == pytest.approx(lam_plus, abs=1e-9)
    assert lam_minus == pytest.approx((2 - eps) * dlt / 2, abs=1e-9)


def test_zeta_one_general_values():
    # frozen from the two-point enumeration oracle
    assert sc.zeta_one_general(0.6, 0.3, 0.1) == pytest.approx(0.1, abs=1e-12)
    assert sc.zeta_one_general(0.2, 0.3, 0.1) == 0.0
    assert sc.zeta_one_general(0.5, 0.3, 0.1) == pytest.approx(
        0.1 * 0.2 / 0.5, abs=1e-12
    )
    with pytest.raises(errors.OutOfRange):
        sc.zeta_one_general(0.5, 0.2, 0.3)


def test_zeta_one_general_homogeneous_degeneration():
    rng = random.Random(4)
    for _ in range(100):
        beta = rng.uniform(0.0, 0.95)
        dlt = rng.uniform(0.0, 1.0)
        assert sc.zeta_one_general(dlt, beta, beta) == pytest.approx(
            sc.zeta_one_homo(dlt, beta), abs=1e-12
        )


def test_zeta_one_general_matches_hull_grid():
    rng = random.Random(5)
    for _ in range(60):
        beta = rng.uniform(0.02, 0.95)
        tau = rng.uniform(0.0, beta)
        s = spectrum.from_eigenvalues([1.0, beta, tau])
        b = adv.boundary(1, s)
        for dlt in (0.15, 0.4, 0.62, 0.85, 0.97):
            assert sc.zeta_one_general(dlt, beta, tau) == pytest.approx(
                b.zeta(dlt), abs=1e-12
            )


def test_zeta_one_general_dominated_by_extremes():
    rng = random.Random(6)
    for _ in range(200):
        beta = rng.uniform(0.02, 0.95)
        tau = rng.uniform(0.0, beta)
        dlt = rng.uniform(0.0, 1.0)
        val = sc.zeta_one_general(dlt, beta, tau)
        assert val <= sc.zeta_one_homo(dlt, beta) + 1e-12
        assert val <= sc.zeta_one_homo(dlt, tau) + 1e-12


def test_zeta_one_general_junction_continuity():
    for beta, tau in [(0.3, 0.1), (0.45, 0.0), (0.48, 0.3), (0.7, 0.2)]:
        junctions = [beta, (1 + tau) / 2, (1 + beta) / 2]
        for j in junctions:
            if not 0 < j < 1:
                continue
            below = sc.zeta_one_general(j - 1e-12, beta, tau)
            above = sc.zeta_one_general(j + 1e-12, beta, tau)
            assert below == pytest.approx(above, abs=1e-10)


def test_single_copy_feasible_strategy():
    assert not sc.single_copy_feasible_strategy(0.0, 0.0, PrecisionTarget(0.9, 0.4))
    assert not sc.single_copy_feasible_strategy(0.6, 0.2, PrecisionTarget(0.9, 0.4))
    # a homogeneous eigenvalue inside the feasible window passes the criterion
    t = PrecisionTarget(0.9, 0.45)
    lam_minus, lam_plus = sc.lambda_window(t)
    mid = 0.5 * (lam_minus + lam_plus)
    assert sc.single_copy_feasible_strategy(mid, mid, t)
    assert not sc.single_copy_feasible_strategy(0.44, 0.44, t)
