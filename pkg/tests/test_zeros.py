import math

import pytest

from pentadgf import dgf
from pentadgf.errors import DomainError
from pentadgf.zeros import ZeroRecord, count_zeros, find_zeros

Z1 = 0.88271 + 3.91652j
Z2 = 0.56199 + 6.01547j
Z3 = 0.35935 + 7.89946j


def test_count_examples():
    assert count_zeros((0.0, 1.0), (3.4, 4.4)) == 1
    assert count_zeros((0.0, 1.0), (0.5, 3.0)) == 0
    assert count_zeros((0.0, 1.0), (5.5, 8.5)) == 2


def test_find_first_zero():
    records = find_zeros(5.0)
    assert len(records) == 1
    r = records[0]
    assert abs(r.location - Z1) < 2e-4
    assert r.residual <= 1e-7
    assert r.winding_verified
    assert r.converged
    assert r.in_strip
    assert r.method == dgf.MethodTag.MELLIN.value


def test_find_zeros_to_eight():
    records = find_zeros(8.0)
    assert len(records) == 3
    for record, want in zip(records, (Z1, Z2, Z3)):
        assert abs(record.location - want) < 2e-4


def test_residual_by_two_methods():
    records = find_zeros(5.0)
    loc = records[0].location
    assert abs(dgf.d_mellin(loc, 1e-13).value) <= 1e-7
    assert abs(dgf.d_series(loc, 1e-13).value) <= 1e-7


def test_conjugate_symmetry_residual():
    loc = find_zeros(5.0)[0].location
    assert abs(dgf.d_mellin(loc.conjugate(), 1e-13).value) <= 1e-7


def test_winding_consistency_below_eight():
    records = find_zeros(8.0)
    in_band = [r for r in records if r.in_strip and 3.0 < r.location.imag <= 8.0]
    assert count_zeros((0.0, 1.0), (3.0, 8.0)) == len(in_band)


def test_im_max_validation():
    with pytest.raises(DomainError):
        find_zeros(25.0)
    with pytest.raises(DomainError):
        find_zeros(0.0)


def test_record_shape():
    r = find_zeros(5.0)[0]
    assert isinstance(r, ZeroRecord)
    assert isinstance(r.location, complex)
    assert math.isfinite(r.residual)
