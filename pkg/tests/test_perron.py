import math
import random

import pytest

from pentadgf.errors import DomainError
from pentadgf.perron import partial_sum, partial_sum_oracle, z_minus

PI = math.pi


def _pentagonals(limit):
    out = []
    m = 1
    while (3 * m * m - m) // 2 <= limit:
        out.append((3 * m * m - m) // 2)
        if (3 * m * m + m) // 2 <= limit:
            out.append((3 * m * m + m) // 2)
        m += 1
    return sorted(out)


def test_z_minus_values():
    assert z_minus(1.0) == pytest.approx(-PI / 3.0, abs=1e-12)
    assert z_minus(0.0) == pytest.approx(PI / 3.0, abs=1e-12)
    # closed form with sqrt(61)
    assert z_minus(2.5) == pytest.approx(PI / 2.0 - PI * math.sqrt(61.0) / 6.0, abs=1e-12)
    assert z_minus(2.5) == pytest.approx(-2.5186408406, abs=1e-9)
    with pytest.raises(DomainError):
        z_minus(-1.0)


def test_partial_sum_examples():
    assert partial_sum(1.5).value == -1
    assert partial_sum(2.5).value == -2
    assert partial_sum(6.5).value == -1


def test_oracle_examples():
    assert partial_sum_oracle(1.5) == -1
    assert partial_sum_oracle(100.5) == 0
    assert partial_sum_oracle(93) == -1


def test_domain_errors():
    with pytest.raises(DomainError):
        partial_sum(7.0)
    with pytest.raises(DomainError):
        partial_sum(-0.5)
    with pytest.raises(DomainError):
        partial_sum_oracle(10.0**6 + 1)


def test_oracle_equivalence_random():
    rng = random.Random(20240917)
    for _ in range(500):
        x = rng.uniform(1.0, 2000.0)
        if x == int(x):
            continue
        assert partial_sum(x).value == partial_sum_oracle(x)


def test_jump_sizes():
    for m in range(1, 13):
        for g in ((3 * m * m - m) // 2, (3 * m * m + m) // 2):
            jump = partial_sum(g + 0.25).value - partial_sum(g - 0.25).value
            assert jump == (-1) ** m


def test_bounded_on_sample():
    rng = random.Random(7)
    for _ in range(400):
        x = rng.uniform(1.0, 2000.0)
        if x == int(x):
            continue
        assert abs(partial_sum(x).value) <= 2


def test_step_function_between_pentagonals():
    pts = [p for p in _pentagonals(170) if p > 1]
    for lo, hi in zip(pts[:-1], pts[1:]):
        if hi > 160:
            break
        samples = [lo + (hi - lo) * frac for frac in (0.27, 0.52, 0.81)]
        values = {partial_sum(x).value for x in samples if x != int(x)}
        assert len(values) == 1


def test_result_witnesses():
    r = partial_sum(6.5)
    assert r.k_min == -4
    assert r.z_minus == pytest.approx(z_minus(6.5))
    assert r.x == 6.5
