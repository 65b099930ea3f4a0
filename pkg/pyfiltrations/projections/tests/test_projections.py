"""Test optional projections, the Azéma bundle and the hloc check."""

from fractions import Fraction

import numpy as np
import pytest

from pyfiltrations.datasets import fix_a, fix_b, fix_c, fix_d
from pyfiltrations.lab import (
    GeneratorParams,
    gen_random_instance,
    random_increasing_process,
)
from pyfiltrations.projections import (
    azema_bundle,
    dual_optional_projection,
    hloc_check,
    optional_projection,
    projection_martingale,
)
from pyfiltrations.space import (
    Filtration,
    RandomTime,
    cond_expect,
    is_adapted,
    is_martingale,
)

F_a = fix_a().F
F_b = fix_b().F
half = Fraction(1, 2)


def _rows(X):
    return [list(row) for row in X]


def test_optional_projection():
    """Test the optional projection on adapted, constant and raw inputs."""
    adapted = [[0] * 4, [1, 1, 2, 2], [1, 1, 3, 3]]
    assert _rows(optional_projection(adapted, F_a)) == adapted
    assert _rows(optional_projection([[7] * 4] * 3, F_a)) == [[7] * 4] * 3
    A = azema_bundle(fix_c(), F_a).A
    oA = optional_projection(A, F_a)
    assert list(oA[1]) == [half] * 4
    assert is_adapted(oA, F_a)


def test_dual_optional_projection():
    """Test the dual optional projection on the reference instances."""
    adapted = [[0] * 4, [1, 1, 2, 2], [1, 1, 3, 3]]
    assert _rows(dual_optional_projection(adapted, F_a)) == adapted
    A_c = azema_bundle(fix_c(), F_a).A
    assert list(dual_optional_projection(A_c, F_a)[2]) == [1, 1, half, half]
    A_d = azema_bundle(fix_d(), F_b).A
    Ao = dual_optional_projection(A_d, F_b)
    assert list(Ao[2]) == [Fraction(3, 2), half, half, Fraction(3, 2)]
    with pytest.raises(ValueError, match="nondecreasing paths"):
        dual_optional_projection([[0] * 4, [1, 0, 0, 0], [0] * 4], F_a)


def test_expectation_identity():
    """Test that the dual projection preserves the terminal expectation."""
    V = [[0, 1, 0, 2], [1, 1, 3, 2], [4, 2, 3, 5]]
    Vo = dual_optional_projection(V, F_b)
    space = F_b.space
    assert space.expectation(Vo[2]) == space.expectation(V[2])


def test_projection_martingale():
    """Test the projection difference martingale."""
    adapted = [[0] * 4, [1, 1, 2, 2], [1, 1, 3, 3]]
    assert np.all(projection_martingale(adapted, F_a) == 0)
    A_c = azema_bundle(fix_c(), F_a).A
    assert np.all(projection_martingale(A_c, F_a) == 0)
    A_d = azema_bundle(fix_d(), F_b).A
    N = projection_martingale(A_d, F_b)
    assert list(N[2]) == [-half, half, half, -half]
    assert list(N[1]) == [0] * 4
    assert is_martingale(N, F_b)


def test_projection_martingale_lag_identity():
    """Test N_t = E[V_{t-1} | F_t] - Vo_{t-1} on a raw process."""
    V = [[0, 1, 0, 2], [1, 1, 3, 2], [4, 2, 3, 5]]
    N = projection_martingale(V, F_b)
    Vo = dual_optional_projection(V, F_b)
    assert np.all(N[0] == 0)
    assert is_martingale(N, F_b)
    for t in (1, 2):
        lagged = cond_expect(V[t - 1], F_b[t], F_b.space)
        assert list(N[t]) == list(lagged - Vo[t - 1])


def test_azema_bundle_fix_c():
    """Test the bundle of the pseudo-stopping time."""
    bundle = azema_bundle(fix_c(), F_a)
    assert np.all(bundle.m == 1)
    assert list(bundle.Z[1]) == [half] * 4
    assert list(bundle.Ao[1]) == [half] * 4
    assert list(bundle.Ao[2]) == [1, 1, half, half]


def test_azema_bundle_fix_d():
    """Test the bundle of the honest time which is not pseudo-stopping."""
    bundle = azema_bundle(fix_d(), F_b)
    assert list(bundle.m[2]) == [Fraction(3, 2), half, half, Fraction(3, 2)]
    # Z is pathwise non-increasing while m differs from 1
    assert np.all(bundle.Z[1:] <= bundle.Z[:-1])


def test_azema_bundle_stopping_time():
    """Test the bundle of a stopping time."""
    tau = RandomTime([1, 1, 2, 2])
    bundle = azema_bundle(tau, F_b)
    assert np.all(bundle.m == 1)
    assert _rows(bundle.Ao) == _rows(bundle.A)
    assert _rows(bundle.Z) == _rows(1 - bundle.A)


@pytest.mark.parametrize(
    "tau, F",
    [
        (fix_c(), F_a),
        (fix_d(), F_b),
        (RandomTime([0, "inf", 2, 1]), F_b),
        (RandomTime.constant("inf", 4), F_a),
    ],
)
def test_bundle_identities(tau, F):
    """Test the identities relating the processes of the bundle."""
    bundle = azema_bundle(tau, F)
    assert _rows(bundle.Z) == _rows(bundle.m - bundle.Ao)
    assert list(bundle.Ztilde[0]) == list(bundle.m[0])
    for t in range(1, F.horizon + 1):
        assert list(bundle.Ztilde[t]) == list(bundle.m[t] - bundle.Ao[t - 1])
    for t in range(F.horizon + 1):
        jump = cond_expect(tau.eq(t).astype(int), F[t], F.space)
        assert list(bundle.Ztilde[t] - bundle.Z[t]) == list(jump)
    assert np.all(bundle.m[0] == 1)
    assert is_martingale(bundle.m, F)
    assert np.all(bundle.Ao[1:] >= bundle.Ao[:-1])
    expected = F.space.prob([k for k in range(F.n) if tau[k] <= F.horizon])
    assert F.space.expectation(bundle.Ao[F.horizon]) == expected


def test_hloc_check():
    """Test the three-way equivalence on the reference instances."""
    adapted = [[0] * 4, [1, 1, 2, 2], [1, 1, 3, 3]]
    report = hloc_check(adapted, F_a)
    assert report.agree and report.holds
    assert report.witness is None

    report = hloc_check(azema_bundle(fix_c(), F_a).A, F_a)
    assert report.agree and report.holds

    report = hloc_check(azema_bundle(fix_d(), F_b).A, F_b)
    assert report.agree
    assert not any(value for _, value in report.conditions)
    assert report.witness.condition == "lagged-compensator"
    assert report.witness.t == 2


def test_hloc_check_raw_process():
    """Test the equivalence on a raw, non-adapted increasing process."""
    V = [[0, 1, 0, 2], [1, 1, 3, 2], [4, 2, 3, 5]]
    for F in (F_a, F_b, Filtration.trivial(F_a.space, 2)):
        assert hloc_check(V, F).agree
    with pytest.raises(ValueError, match="nondecreasing paths"):
        hloc_check([[1] * 4, [0] * 4, [0] * 4], F_a)


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("adapted", (True, False))
def test_projections_linear(seed, adapted):
    """Test that oV is linear and that Vo is additive and positively homogeneous."""
    pair, _ = gen_random_instance(GeneratorParams(6, 3, "free", seed))
    rng = np.random.default_rng(seed)
    for F in (pair.F, pair.G):
        V = random_increasing_process(F, rng, adapted=adapted)
        W = random_increasing_process(F, rng, adapted=adapted)
        a, b = Fraction(2, 3), Fraction(-5, 7)
        oV, oW = optional_projection(V, F), optional_projection(W, F)
        assert _rows(optional_projection(a * V + b * W, F)) == _rows(a * oV + b * oW)
        Vo, Wo = dual_optional_projection(V, F), dual_optional_projection(W, F)
        assert _rows(dual_optional_projection(V + W, F)) == _rows(Vo + Wo)
        assert _rows(dual_optional_projection(a * V, F)) == _rows(a * Vo)
