"""Mobius prefix sums, squarefree counts, and the partial zeta reciprocal."""

import math

import numpy as np
import pytest

from primelab import (
    inverse_zeta_partial,
    mertens,
    mertens_checkpoints,
    mertens_envelope,
    mertens_scan,
    mobius_range,
    squarefree_count,
)

SIX_OVER_PI_SQ = 6.0 / math.pi**2


def test_mertens_known_anchors():
    assert mertens(1) == 1
    assert mertens(2) == 0
    assert mertens(1000) == 2
    assert mertens(10**4) == -23
    assert mertens(10**6) == 212


def test_mertens_matches_direct_mobius_sum():
    mu = mobius_range(1, 5001)
    assert mertens(5000) == int(np.sum(mu))


def test_mertens_checkpoints_match_single_calls():
    xs = [10, 1000, 10**4, 10**5]
    vals = mertens_checkpoints(xs)
    assert [int(v) for v in vals] == [mertens(x) for x in xs]


def test_mertens_scan_holds_to_hundred_thousand():
    rep = mertens_scan(10**5)
    assert rep.satisfied
    assert rep.violations == []
    assert rep.final_value == -48
    assert rep.max_envelope_ratio <= 1.0


def test_mertens_envelope_grid():
    rep = mertens_envelope([100, 1000, 10**4])
    assert list(rep.values) == [1, 2, -23]
    assert rep.satisfied
    assert max(abs(r) for r in rep.envelope_ratios) < 1.0


def test_squarefree_count_brute_small():
    def squarefree(n):
        d = 2
        while d * d <= n:
            if n % (d * d) == 0:
                return False
            d += 1
        return True

    want = sum(1 for n in range(1, 1001) if squarefree(n))
    assert squarefree_count(1000) == want


def test_squarefree_count_frozen_value():
    assert squarefree_count(10**6) == 607926


def test_squarefree_density_tracks_zeta_reciprocal():
    for x in (10**4, 10**6, 10**7):
        assert abs(squarefree_count(x) - SIX_OVER_PI_SQ * x) <= 2.0 * math.sqrt(x), x


def test_inverse_zeta_partial_converges():
    assert inverse_zeta_partial(10**4) == pytest.approx(0.607927127285481, rel=1e-12)
    assert abs(inverse_zeta_partial(10**7, 2.0) - SIX_OVER_PI_SQ) < 1e-3


def test_inverse_zeta_partial_rejects_degenerate_exponent():
    with pytest.raises(ValueError):
        inverse_zeta_partial(100, 1.0)
    with pytest.raises(ValueError):
        inverse_zeta_partial(0, 2.0)


def test_mertens_rejects_nonpositive():
    with pytest.raises(ValueError):
        mertens(0)
