import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_moments.partitions import (EMPTY, HookFrame, Partition, contains,
                                       gen_binomial, gen_pochhammer, hooks_alpha,
                                       hooks_up_to, partitions_of, partitions_up_to,
                                       schur_at_ones, schur_eval, subhooks)

hooks = st.builds(lambda a, b: Partition([a] + [1] * b),
                  st.integers(1, 5), st.integers(0, 4))


def test_trailing_zeros_are_dropped():
    assert Partition([2, 1, 0, 0]) == Partition([2, 1])
    assert Partition([0]) == EMPTY
    assert Partition([3, 1]).weight == 4 and Partition([3, 1]).length == 2


def test_rejects_increasing_or_negative_parts():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([1, -1])


def test_conjugate_and_hook_accessors():
    tau = Partition([3, 1, 1])
    assert tau.is_hook and tau.arm == 3 and tau.leg == 2
    assert tau.conjugate() == Partition([3, 1, 1])
    assert Partition([2, 2]).conjugate() == Partition([2, 2])
    assert not Partition([2, 2]).is_hook


def test_hook_frame_round_trip():
    frame = HookFrame.locate(Partition([2, 1]), 4, 2)
    assert (frame.delta, frame.g) == (0, 1)
    assert frame.partition == Partition([2, 1])
    assert HookFrame(3, 1, 0, 0).partition == Partition([2, 1])
    with pytest.raises(ValueError):
        HookFrame(3, 3, 0, 0)


def test_hooks_alpha():
    assert hooks_alpha(1) == [Partition([1])]
    assert hooks_alpha(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    with pytest.raises(ValueError):
        hooks_alpha(0)


def test_power_sum_two_is_signed_hook_sum_in_three_variables():
    rng = np.random.default_rng(0)
    for _ in range(5):
        x = [Fraction(int(v), 7) for v in rng.integers(-7, 8, size=3)]
        p2 = sum(v * v for v in x)
        assert schur_eval((2,), x) - schur_eval((1, 1), x) == p2


@pytest.mark.parametrize("n", range(1, 7))
def test_power_sums_from_hooks(n):
    rng = np.random.default_rng(n)
    for m in range(n, 7):
        lam = rng.random(m)
        hooks_sum = sum((-1) ** k * schur_eval(a, lam) for k, a in enumerate(hooks_alpha(n)))
        assert hooks_sum == pytest.approx(np.sum(lam ** n), rel=1e-12)


def test_subhooks_examples():
    assert subhooks((1,)) == [EMPTY, Partition([1])]
    assert subhooks((2, 1)) == [EMPTY, Partition([1]), Partition([2]), Partition([1, 1]),
                                Partition([2, 1])]
    assert subhooks((1, 1)) == [EMPTY, Partition([1]), Partition([1, 1])]
    with pytest.raises(ValueError):
        subhooks((2, 2))


def test_subhooks_match_containment_up_to_weight_8():
    for tau in hooks_up_to(8):
        expected = {mu for mu in partitions_up_to(tau.weight) if mu.is_hook and contains(mu, tau)}
        assert set(subhooks(tau)) == expected


def test_contains_examples():
    assert contains((1,), (2, 1))
    assert not contains((2, 2), (3, 1))
    assert all(contains(EMPTY, tau) for tau in partitions_up_to(4))


def test_partition_counts():
    assert [len(list(partitions_of(w))) for w in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions_of(4, max_length=2)) == [Partition([4]), Partition([3, 1]),
                                                    Partition([2, 2])]


def test_gen_pochhammer_examples():
    z = Fraction(7, 3)
    assert gen_pochhammer(z, (1,)) == z
    assert gen_pochhammer(z, (1, 1)) == z * (z - 1)
    assert gen_pochhammer(5, (2, 1)) == 120
    assert gen_pochhammer(5, ()) == 1


def test_gen_binomial_examples():
    assert gen_binomial((2, 1), (2, 1)) == 1
    assert gen_binomial((2, 1), (1,)) == 3
    assert gen_binomial((2, 1), (2,)) == Fraction(3, 2)
    assert gen_binomial((3, 1), EMPTY) == 1
    with pytest.raises(ValueError):
        gen_binomial((2,), (1, 1))


@given(hooks)
def test_gen_binomial_of_a_box_is_the_weight(tau):
    assert gen_binomial(tau, (1,)) == tau.weight


@given(hooks)
def test_gen_binomial_of_itself_is_one(tau):
    assert gen_binomial(tau, tau) == 1


def test_gen_binomial_matches_frame_formula():
    # the (n, k, delta, g) / (gamma, l) form, for every frame containing both hooks
    from math import comb
    for n in range(1, 7):
        for k in range(n):
            for delta in range(n - k):
                for g in range(k + 1):
                    tau = HookFrame(n, k, delta, g).partition
                    for gamma in range(delta, n - k):
                        for ell in range(g, k + 1):
                            mu = HookFrame(n, k, gamma, ell).partition
                            val = Fraction(
                                comb(n - k - delta - 1, gamma - delta) * comb(k - g, ell - g)
                                * ((n - delta - ell) * (n - g - gamma) - (gamma - delta) * (ell - g)),
                                (n - gamma - ell) ** 2)
                            assert gen_binomial(tau, mu) == val


def test_schur_at_ones_examples():
    assert schur_at_ones((1,), 5) == 5
    assert schur_at_ones((2, 1), 3) == 8
    assert schur_at_ones(EMPTY, 4) == 1
    assert schur_at_ones((1, 1, 1), 2) == 0


def test_schur_eval_examples():
    a, b = Fraction(2, 3), Fraction(5, 7)
    assert schur_eval((1,), (a, b)) == a + b
    assert schur_eval((2, 1), (1, 1, 1)) == 8
    x = Fraction(3, 5)
    assert schur_eval((2,), (x, 0)) == x * x


def test_schur_eval_at_ones_matches_weyl():
    for m in range(1, 7):
        for mu in partitions_up_to(6, m):
            assert schur_eval(mu, [1] * m) == schur_at_ones(mu, m)


def test_schur_eval_matches_bialternant_at_distinct_points():
    rng = np.random.default_rng(3)
    for mu in partitions_up_to(5, 3):
        x = rng.random(3)
        m = 3
        parts = mu.padded(m)
        num = np.linalg.det([[xj ** (parts[i] + m - 1 - i) for xj in x] for i in range(m)])
        den = np.linalg.det([[xj ** (m - 1 - i) for xj in x] for i in range(m)])
        assert schur_eval(mu, x) == pytest.approx(num / den, rel=1e-10)


def _binomial_theorem_residual(tau, m, x):
    lhs = schur_eval(tau, [1 + v for v in x]) / schur_at_ones(tau, m)
    rhs = sum(gen_binomial(tau, mu) * schur_eval(mu, x) / schur_at_ones(mu, m)
              for mu in subhooks(tau))
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def test_generalized_binomial_theorem_exactly():
    # exact rational points: the identity holds with no rounding at all
    for m in range(1, 5):
        for tau in hooks_up_to(4, m):
            x = [Fraction(i + 1, 2 * i + 3) for i in range(m)]
            assert _binomial_theorem_residual(tau, m, x) == 0


def test_generalized_binomial_theorem_at_random_points():
    rng = np.random.default_rng(11)
    for m in range(1, 6):
        for tau in hooks_up_to(4, m):
            for _ in range(5):
                assert _binomial_theorem_residual(tau, m, rng.uniform(-1, 1, m)) < 1e-12


def test_to_json():
    assert Partition([2, 1]).to_json() == [2, 1]
    assert HookFrame(3, 1, 0, 0).to_json()["parts"] == [2, 1]


def test_schur_is_symmetric():
    x = [0.1, 0.5, 0.9]
    ref = schur_eval((3, 1), x)
    for perm in itertools.permutations(x):
        assert schur_eval((3, 1), list(perm)) == pytest.approx(ref, rel=1e-13)
