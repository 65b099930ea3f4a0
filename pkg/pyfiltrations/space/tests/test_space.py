"""Test the finite filtered probability spaces."""

from fractions import Fraction

import numpy as np
import pytest

from pyfiltrations.datasets import fix_a, fix_b, fix_c, fix_d
from pyfiltrations.space import (
    INF,
    FilteredPair,
    Filtration,
    Partition,
    RandomTime,
    SampleSpace,
    basis_martingales,
    cond_expect,
    instance_digest,
    is_adapted,
    is_honest,
    is_martingale,
    is_stopping_time,
    progressive_enlargement,
    refines,
)

pair_a = fix_a()
pair_b = fix_b()
space = pair_a.space
halves = Partition([[0, 1], [2, 3]])
discrete = Partition.discrete(4)


def test_partition():
    """Test partition construction and canonical order."""
    part = Partition([[3, 2], [1], [0]])
    assert part.blocks == ((0,), (1,), (2, 3))
    assert part == Partition([[0], [1], [3, 2]])
    assert part.block_of(3) == (2, 3)
    assert len(part) == 3
    assert Partition.from_labels(["a", "a", "b", "b"]) == halves
    assert halves.join(Partition([[0, 2], [1, 3]])) == discrete
    assert halves.restrict([1, 2, 3]) == ((1,), (2, 3))

    with pytest.raises(ValueError, match="pairwise disjoint"):
        Partition([[0, 1], [1, 2]])
    with pytest.raises(ValueError, match="union of the blocks"):
        Partition([[0, 1], [3]], n=4)
    with pytest.raises(ValueError, match="empty block"):
        Partition([[0, 1], []])
    with pytest.raises(TypeError, match="'outcome' must be an int"):
        Partition([[0, 1.5]])


def test_refines():
    """Test refinement of partitions."""
    assert refines(discrete, halves)
    assert refines(halves, halves)
    assert not refines(halves, discrete)
    assert refines(halves, Partition.trivial(4))
    with pytest.raises(ValueError, match="same number of outcomes"):
        refines(Partition.discrete(3), halves)
    with pytest.raises(TypeError, match="'coarse' must be an instance of Partition"):
        refines(halves, [[0, 1], [2, 3]])


def test_sample_space():
    """Test probabilities validation."""
    assert space.n == 4
    assert space.prob([0, 1]) == Fraction(1, 2)
    assert space.expectation([4, 0, 2, 2]) == 2
    assert SampleSpace(["1/2", "1/3", "1/6"]).probs[1] == Fraction(1, 3)
    with pytest.raises(ValueError, match="sum exactly to 1"):
        SampleSpace(["1/2", "1/2", "1"])
    with pytest.raises(ValueError, match="strictly positive"):
        SampleSpace(["1", "0"])
    with pytest.raises(ValueError, match="rational number"):
        SampleSpace(["one"])


def test_filtration():
    """Test filtration validation."""
    F = pair_a.F
    assert F.horizon == 2
    assert F[1] == halves
    assert F.children(0, F[0][0]) == ((0, 1), (2, 3))
    assert Filtration.trivial(space, 3).horizon == 3
    with pytest.raises(ValueError, match="does not refine"):
        Filtration([halves, Partition.trivial(4)], space)
    with pytest.raises(ValueError, match="defined on 3 outcomes"):
        Filtration([Partition.trivial(3)], space)
    with pytest.raises(ValueError, match="'G' at t=1 does not refine"):
        FilteredPair(space, pair_a.G, pair_a.F)
    with pytest.raises(ValueError, match="same horizon"):
        FilteredPair(space, pair_a.F, Filtration.discrete(space, 3))


def test_cond_expect():
    """Test exact conditional expectations."""
    y = cond_expect([1, 0, 0, 0], halves, space)
    assert list(y) == [Fraction(1, 2), Fraction(1, 2), 0, 0]
    assert all(isinstance(v, Fraction) for v in y)
    x = [Fraction(3, 7), 2, -1, Fraction(5, 2)]
    assert list(cond_expect(x, discrete, space)) == x
    assert list(cond_expect([4, 0, 2, 2], Partition.trivial(4), space)) == [2] * 4
    with pytest.raises(ValueError, match="one entry per outcome"):
        cond_expect([1, 0, 0], halves, space)
    with pytest.raises(ValueError, match="defined on 3 outcomes"):
        cond_expect([1, 0, 0, 0], Partition.discrete(3), space)


def test_cond_expect_weighted():
    """Test conditional expectations with non-uniform probabilities."""
    weighted = SampleSpace(["1/6", "1/3", "1/4", "1/4"])
    y = cond_expect([1, 0, 0, 0], halves, weighted)
    assert y[0] == Fraction(1, 3)
    assert y[2] == 0


def test_tower_property():
    """Test the tower property on a random integer vector."""
    rng = np.random.default_rng(3)
    weighted = SampleSpace(["1/6", "1/3", "1/4", "1/4"])
    x = [int(v) for v in rng.integers(-5, 6, size=4)]
    fine = cond_expect(x, halves, weighted)
    coarse = cond_expect(x, Partition.trivial(4), weighted)
    assert list(cond_expect(fine, Partition.trivial(4), weighted)) == list(coarse)


def test_is_adapted():
    """Test adaptedness."""
    F = pair_a.F
    X = [[0] * 4, [1, 0, 0, 0], [0] * 4]
    assert not is_adapted(X, F)
    assert is_adapted([[5] * 4] * 3, F)
    projected = [cond_expect([1, 2, 3, 4], part, space) for part in F]
    assert is_adapted(projected, F)
    with pytest.raises(ValueError, match="must be of shape"):
        is_adapted([[0] * 4] * 2, F)


def test_is_martingale():
    """Test the martingale predicate."""
    F = pair_a.F
    half = Fraction(1, 2)
    X = [[half] * 4, [1, 1, 0, 0], [1, 1, 0, 0]]
    assert is_martingale(X, F)
    assert not is_martingale([[0] * 4, [1] * 4, [2] * 4], F)
    with pytest.raises(ValueError, match="must be adapted"):
        is_martingale([[0] * 4, [1, 0, 0, 0], [0] * 4], F)


def test_basis_martingales():
    """Test the spanning family of martingales."""
    martingales = basis_martingales(pair_a.F)
    assert len(martingales) == 2
    assert list(martingales[0][1]) == [1, 1, 0, 0]
    for M in martingales:
        assert is_martingale(M, pair_a.F)
    total = sum(martingales[1:], martingales[0])
    assert np.all(total == 1)
    assert len(basis_martingales(pair_b.F, pair_b.space)) == 4
    trivial = basis_martingales(Filtration.trivial(space, 2))
    assert len(trivial) == 1 and np.all(trivial[0] == 1)
    with pytest.raises(ValueError, match="sample space 'F' is defined on"):
        basis_martingales(pair_a.F, SampleSpace.uniform(3))


def test_random_time():
    """Test random time values."""
    tau = RandomTime([1, "inf", INF, 0])
    assert tau.values == (1, INF, INF, 0)
    assert list(tau.codes(2)) == [1, 3, 3, 0]
    assert list(tau.finite) == [True, False, False, True]
    assert tau.minimum(1) == (1, 1, 1, 0)
    assert RandomTime.constant(2, 3) == RandomTime([2, 2, 2])
    with pytest.raises(ValueError, match="nonnegative integers"):
        RandomTime([-1, 0])
    with pytest.raises(ValueError, match="beyond the horizon"):
        is_stopping_time(RandomTime([3, 0, 0, 0]), pair_a.F)


def test_is_stopping_time():
    """Test the stopping time predicate on the reference instances."""
    assert is_stopping_time(RandomTime.constant(1, 4), pair_a.F)
    assert is_stopping_time(RandomTime.constant(INF, 4), pair_a.F)
    assert not is_stopping_time(fix_c(), pair_a.F)
    assert is_stopping_time(fix_c(), pair_a.G)
    assert not is_stopping_time(fix_d(), pair_b.F)


def test_progressive_enlargement():
    """Test the smallest filtration making a time a stopping time."""
    F_tau = progressive_enlargement(pair_a.F, fix_c())
    assert F_tau[1] == discrete
    assert is_stopping_time(fix_c(), F_tau)
    for t in range(3):
        assert refines(F_tau[t], pair_a.F[t])
    assert progressive_enlargement(pair_a.F, RandomTime.constant(INF, 4)) == pair_a.F


@pytest.mark.parametrize(
    "tau, F, expected",
    [
        (RandomTime([2, 1, 0, INF]), Filtration.discrete(space, 2), True),
        (fix_d(), pair_b.F, True),
        (fix_d(), pair_a.F, False),
        (fix_c(), pair_a.F, False),
        (RandomTime.constant(INF, 4), pair_a.F, True),
    ],
)
def test_is_honest(tau, F, expected):
    """Test honest times."""
    assert is_honest(tau, F) is expected


def test_is_honest_between_grid_times():
    """Test that honesty is decided at every level, not only one step later."""
    two = SampleSpace.uniform(2)
    F = Filtration([Partition.trivial(2)] * 2 + [Partition.discrete(2)], two)
    assert not is_honest(RandomTime([0, 1]), F)


def test_instance_digest():
    """Test that the digest identifies the instance content."""
    filtrations = {"F": pair_a.F, "G": pair_a.G}
    digest = instance_digest(space, filtrations, {"tau": fix_c()})
    assert len(digest) == 64
    assert digest == instance_digest(space, filtrations, {"tau": fix_c()})
    assert digest != instance_digest(space, filtrations, {"tau": fix_d()})
