"""Independent reference implementations used to pin expected values.

These deliberately avoid the production code paths: points are evaluated by
naive term-by-term products, the minimum joint weight by exhaustive
enumeration of two-point mixtures, and minimum counts by linear scan.
"""

from __future__ import annotations

import itertools
import math


def compositions_brute(total: int, parts: int):
    """All nonnegative integer tuples of the given length summing to total."""
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def point_brute(k, lams):
    """(p, f) of one label multiset by direct products, lam^0 := 1."""
    n_plus_1 = sum(k)
    f = k[0] / n_plus_1
    for lam, cnt in zip(lams, k):
        if cnt > 0:
            f *= lam**cnt
    p = 0.0
    for i, (lam_i, cnt_i) in enumerate(zip(lams, k)):
        if cnt_i == 0:
            continue
        term = cnt_i / n_plus_1
        term *= lam_i ** (cnt_i - 1) if cnt_i > 1 else 1.0
        for j, (lam_j, cnt_j) in enumerate(zip(lams, k)):
            if j != i and cnt_j > 0:
                term *= lam_j**cnt_j
        p += term
    return p, f


def zeta_two_point_lp(n, delta, lams):
    """Minimum joint weight at pass level delta by exhaustive two-point mixing.

    Any boundary value is achieved by a mixture supported on at most two
    label multisets; scan all pairs whose pass probabilities straddle delta.
    """
    pts = [point_brute(k, lams) for k in compositions_brute(n + 1, len(lams))]
    best = None
    for (p1, f1), (p2, f2) in itertools.combinations(pts, 2):
        lo, hi = (p1, p2) if p1 <= p2 else (p2, p1)
        flo, fhi = (f1, f2) if p1 <= p2 else (f2, f1)
        if lo <= delta <= hi and hi > lo:
            c = (delta - lo) / (hi - lo)
            val = (1 - c) * flo + c * fhi
            best = val if best is None else min(best, val)
    for p, f in pts:
        if abs(p - delta) < 1e-15:
            best = f if best is None else min(best, f)
    # Pass levels above delta are admissible too: mixing toward (1, 1) can
    # only raise f, so the straddling pairs plus exact hits cover the optimum
    # whenever delta >= min_k p_k; below that the constraint is infeasible
    # except through p >= delta points alone.
    if best is None:
        best = min(f for p, f in pts if p >= delta)
    return best


def min_tests_adv_scan(lams, epsilon, delta, n_max=100000):
    """Least N with zeta(N, delta) >= delta*(1-eps), by linear scan."""
    target = delta * (1.0 - epsilon)
    for n in range(1, n_max + 1):
        if zeta_two_point_lp(n, delta, lams) >= target - 1e-12:
            return n
    raise AssertionError("scan exhausted")


def num_tests_na_scan(nu, epsilon, delta, n_max=10**7):
    """Least N with (1 - nu*eps)^N <= delta, by direct multiplication."""
    q = 1.0 - nu * epsilon
    acc = 1.0
    for n in range(1, n_max + 1):
        acc *= q
        if acc <= delta:
            return n
    raise AssertionError("scan exhausted")


def zeta_homo_bisect_oracle(n, delta, lam):
    """Minimum joint weight for two-level spectra via the two-point scan."""
    return zeta_two_point_lp(n, delta, (1.0, lam))


def bisect_root(fn, lo, hi, iters=200):
    """Plain bisection for a monotone sign change; independent root oracle."""
    flo = fn(lo)
    assert flo * fn(hi) <= 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if fn(mid) * flo > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def hull_brute(points):
    """Lower hull by checking every point against every supporting pair."""
    pts = sorted(set(points))
    verts = []
    for i, a in enumerate(pts):
        on_hull = True
        for b, c in itertools.combinations(pts, 2):
            if b[0] < a[0] < c[0]:
                t = (a[0] - b[0]) / (c[0] - b[0])
                if (1 - t) * b[1] + t * c[1] < a[1] - 1e-13:
                    on_hull = False
                    break
        if on_hull:
            verts.append(a)
    return verts


def erf_free_mean_std(samples):
    n = len(samples)
    mean = sum(samples) / n
    var = sum((x - mean) ** 2 for x in samples) / (n - 1)
    return mean, math.sqrt(var)
