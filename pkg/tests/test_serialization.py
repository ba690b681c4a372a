import io

import numpy as np
import pytest

from conal.measurement import GeneralizedMeasurement, Povm, effects_of
from conal.sampling import random_hermitian
from conal.serialization import (
    InputFormatError,
    load_json,
    matrix_from_obj,
    matrix_to_obj,
    measurement_from_obj,
    read_sweep_csv,
    vector_from_obj,
    vector_to_obj,
    write_sweep_csv,
)
from conal.tradeoff import closed_form_point


def test_matrix_round_trip(rng):
    for d in (2, 3, 5):
        for _ in range(20):
            A = random_hermitian(rng, d)
            B = matrix_from_obj(matrix_to_obj(A))
            assert np.max(np.abs(A - B)) <= 1e-11 * max(1.0, np.max(np.abs(A)))


def test_vector_round_trip(rng):
    v = rng.standard_normal(9) * 100
    w = vector_from_obj(vector_to_obj(v))
    assert np.max(np.abs(v - w)) <= 1e-9  # 12 significant digits at scale 100


def test_load_json_rejects_nan_tokens():
    with pytest.raises(InputFormatError):
        load_json('{"dim": 2, "components": [NaN, 0, 0, 0]}')
    with pytest.raises(InputFormatError):
        load_json('{"dim": 2, "components": [Infinity, 0, 0, 0]}')


def test_load_json_reports_position():
    with pytest.raises(InputFormatError, match="line 2"):
        load_json('{"dim": 2,\n "entries": }')


def test_matrix_from_obj_validates_shape():
    with pytest.raises(InputFormatError):
        matrix_from_obj({"dim": 2, "entries": [[[1, 0]]]})
    with pytest.raises(InputFormatError):
        matrix_from_obj({"dim": 2, "entries": [[[1, 0], [0]], [[0, 0], [1, 0]]]})
    with pytest.raises(InputFormatError):
        matrix_from_obj({"entries": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})
    with pytest.raises(InputFormatError):
        matrix_from_obj({"dim": 1, "entries": [[[1, 0]]]})


def test_matrix_from_obj_rejects_non_finite_values():
    bad = {"dim": 2, "entries": [[[1, 0], [0, 0]], [[0, 0], [float("inf"), 0]]]}
    with pytest.raises(InputFormatError, match="not finite"):
        matrix_from_obj(bad)


def test_vector_from_obj_validates():
    with pytest.raises(InputFormatError):
        vector_from_obj({"dim": 2, "components": [1, 0, 0]})
    with pytest.raises(InputFormatError):
        vector_from_obj({"dim": 2})


def test_measurement_from_obj_kraus_entries():
    obj = {
        "dim": 2,
        "kraus": [
            [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
            [[[0, 0], [0, 0]], [[0, 0], [1, 0]]],
        ],
    }
    meas = measurement_from_obj(obj)
    assert isinstance(meas, GeneralizedMeasurement)
    assert len(meas.kraus) == 2
    assert np.allclose(meas.kraus[0], [[1, 0], [0, 0]])


def test_measurement_from_obj_effects_full_objects():
    half = {"dim": 2, "entries": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]}
    meas = measurement_from_obj({"dim": 2, "effects": [half, half]})
    assert isinstance(meas, Povm)
    assert np.allclose(effects_of(meas)[0], np.eye(2) / 2)


def test_measurement_from_obj_requires_exactly_one_kind():
    with pytest.raises(InputFormatError):
        measurement_from_obj({"dim": 2})
    with pytest.raises(InputFormatError):
        measurement_from_obj({"dim": 2, "kraus": [], "effects": []})


def test_sweep_csv_round_trip():
    points = [closed_form_point(0.7, b) for b in np.linspace(0.0, 1.0, 7)]
    buf = io.StringIO()
    write_sweep_csv(points, buf)
    buf.seek(0)
    rows = read_sweep_csv(buf)
    assert [r["beta"] for r in rows] == pytest.approx(
        [pt.beta for pt in points], abs=1e-11
    )
    for row, pt in zip(rows, points):
        assert abs(row["I_bits"] - pt.info_bits) <= 1e-11 * max(1.0, abs(pt.info_bits))
        assert abs(row["D"] - pt.disturbance) <= 1e-11 * max(1.0, abs(pt.disturbance))
        assert row["c"] == pytest.approx(0.7, abs=1e-11)


def test_sweep_csv_extended_columns():
    points = [closed_form_point(0.6, 0.5)]
    buf = io.StringIO()
    write_sweep_csv(points, buf, extended=True)
    buf.seek(0)
    rows = read_sweep_csv(buf)
    row = rows[0]
    assert set(row) == {
        "c", "beta", "I_bits", "D",
        "p0", "q0", "omega0", "delta0",
        "p1", "q1", "omega1", "delta1",
    }
    pt = points[0]
    assert row["p0"] == pytest.approx(pt.outcomes[0].p, abs=1e-11)
    assert row["omega1"] == pytest.approx(pt.outcomes[1].angles.omega_m, abs=1e-11)
    assert row["delta0"] == pytest.approx(pt.outcomes[0].angles.delta_m, abs=1e-11)
