import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorscan.errors import DegenerateFitError, InsufficientDataError, InvalidParamsError, OutOfRangeError
from mirrorscan.reference_data import IDEAL_SCAN
from mirrorscan.scan import (
    ScanConfig,
    ScanSample,
    angles_to_plane,
    calibrate_separation,
    flatten,
    generate_scan,
    ideal_angles,
    samples_from_rows,
)


def _samples(d, n=40, R=200.0):
    cfg = ScanConfig(range_m=R, mirror_separation_m=d)
    t = np.arange(n) * 0.004
    lm, sm = ideal_angles(t, cfg)
    x, y = angles_to_plane(lm, sm, cfg)
    return [ScanSample(a, math.degrees(b), math.degrees(c), e, f) for a, b, c, e, f in zip(t, lm, sm, x, y)]


def test_tabulated_point():
    # angles printed to 0.01 deg move x and y by up to about 0.04 m
    x, y = angles_to_plane(math.radians(8.20), math.radians(-3.56))
    assert x == pytest.approx(58.88, abs=0.04) and y == pytest.approx(-26.10, abs=0.04)


def test_origin_and_symmetry():
    assert angles_to_plane(0.0, 0.0) == (0.0, 0.0)
    x1, y1 = angles_to_plane(0.1, 0.05)
    x2, y2 = angles_to_plane(-0.1, -0.05)
    assert x1 == -x2 and y1 == -y2


def test_out_of_range():
    with pytest.raises(OutOfRangeError):
        angles_to_plane(math.radians(45.0), 0.0)
    with pytest.raises(OutOfRangeError):
        angles_to_plane(0.0, np.radians([0.0, 50.0]))


def test_range_scaling():
    a = angles_to_plane(0.1, 0.05, ScanConfig(range_m=100.0, mirror_separation_m=0.0))
    b = angles_to_plane(0.1, 0.05, ScanConfig(range_m=300.0, mirror_separation_m=0.0))
    assert b[0] == pytest.approx(3 * a[0]) and b[1] == pytest.approx(3 * a[1])


@settings(max_examples=50, deadline=None)
@given(a=st.floats(-0.7, 0.7), b=st.floats(-0.7, 0.7), sm=st.floats(-0.7, 0.7))
def test_x_monotone_in_large_mirror_angle(a, b, sm):
    if a < b:
        assert angles_to_plane(a, sm)[0] <= angles_to_plane(b, sm)[0]


@settings(max_examples=25, deadline=None)
@given(d=st.floats(0.0, 2.0), R=st.floats(10.0, 1000.0))
def test_calibration_round_trip(d, R):
    est, rms = calibrate_separation(_samples(d, R=R), R)
    assert est == pytest.approx(d, abs=1e-9 * max(1.0, R)) and rms < 1e-9 * R


def test_calibration_recovers_exact_value():
    est, rms = calibrate_separation(_samples(0.3))
    assert abs(est - 0.3) <= 1e-9 and rms <= 1e-9


def test_calibration_on_published_rows():
    d, rms = calibrate_separation(samples_from_rows(IDEAL_SCAN))
    assert 0.2 < d < 0.45 and rms < 0.05


def test_calibration_errors():
    with pytest.raises(InsufficientDataError):
        calibrate_separation(_samples(0.3, n=9))
    flat = [ScanSample(k * 0.004, 1.0 + k, 0.0, 1.0, 0.0) for k in range(12)]
    with pytest.raises(DegenerateFitError):
        calibrate_separation(flat)


def test_generate_scan_passes():
    passes = generate_scan(duration=0.4)
    assert [p.index for p in passes] == [1, 2] and [p.parity for p in passes] == ["odd", "even"]
    assert passes[0].samples[-1] == passes[1].samples[0]
    flat = flatten(passes)
    assert len(flat) == 101 and [s.t for s in flat] == pytest.approx(np.arange(101) * 0.004)


def test_generate_scan_matches_published_rows():
    flat = flatten(generate_scan(duration=0.4))
    rows = {round(r[0], 3): r for r in IDEAL_SCAN}
    for s in flat:
        r = rows.get(round(s.t, 3))
        if r is not None:
            assert s.phi_lm == pytest.approx(r[1], abs=0.006) and s.phi_sm == pytest.approx(r[2], abs=0.006)


def test_zero_duration_and_errors():
    assert generate_scan(duration=0.0) == []
    with pytest.raises(InvalidParamsError):
        generate_scan(duration=-1.0)
    with pytest.raises(InvalidParamsError):
        generate_scan(source="random")
    with pytest.raises(InsufficientDataError):
        generate_scan(source="tracked")
    with pytest.raises(InvalidParamsError):
        ScanConfig(range_m=0.0)
    with pytest.raises(InvalidParamsError):
        ideal_angles(-1.0)


def test_ideal_angles_start_values():
    lm, sm = ideal_angles(0.0)
    assert lm == pytest.approx(math.radians(8.35)) and sm == 0.0
