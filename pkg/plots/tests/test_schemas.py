"""Schema validation and round-trip against artifacts from the optimizer CLI."""

import numpy as np
import pytest

from sfcplots import schemas
from sfcplots.schemas import SchemaError


def test_reads_every_artifact(artifacts):
    chars = schemas.read_csv(
        artifacts["bench_dir"] / "class1" / "characteristics.csv",
        schemas.CHARACTERISTICS)
    assert set(chars["algo"]) == {"mgas", "direct"}
    runs = schemas.read_csv(artifacts["bench_dir"] / "class1" / "runs.csv",
                            schemas.RUNS)
    assert list(runs["func_index"]) == [1, 2, 1, 2]
    sel = schemas.read_csv(artifacts["hull"], schemas.SELECTION)
    assert sel["iter"].min() == 2  # first sweep happens after initialization
    diag = schemas.read_csv(artifacts["diagram"], schemas.DIAGRAM)
    assert np.all(diag["b"] > diag["a"])
    sweep = schemas.read_csv(artifacts["sweep"], schemas.SWEEP)
    assert len(sweep["eta"]) == 2


def test_trace_and_curve_readers(artifacts):
    trace = schemas.read_trace_csv(artifacts["trace"])
    assert trace["dim"] == 2
    assert trace["y"].shape == (len(trace["trial"]), 2)
    assert np.all(np.diff(trace["f_min"]) <= 0)
    curve = schemas.read_curve_csv(artifacts["curve"])
    assert curve["coords"].shape == (1024, 2)


def test_round_trip(artifacts, tmp_path):
    src = artifacts["bench_dir"] / "class2" / "characteristics.csv"
    data = schemas.read_csv(src, schemas.CHARACTERISTICS)
    copy = tmp_path / "copy.csv"
    schemas.write_csv(copy, schemas.CHARACTERISTICS, data)
    again = schemas.read_csv(copy, schemas.CHARACTERISTICS)
    for col in schemas.CHARACTERISTICS.columns:
        if isinstance(data[col], list):
            assert data[col] == again[col]
        else:
            assert np.array_equal(data[col], again[col])


def test_missing_column_named(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("budget,solved,algo,class\n10,0,mgas,1\n")
    with pytest.raises(SchemaError, match="solved_count"):
        schemas.read_csv(bad, schemas.CHARACTERISTICS)


def test_extra_column_named(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("budget,solved_count,algo,class,note\n10,0,mgas,1,x\n")
    with pytest.raises(SchemaError, match="note"):
        schemas.read_csv(bad, schemas.CHARACTERISTICS)


def test_ragged_row_rejected(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("budget,solved_count,algo,class\n10,0,mgas\n")
    with pytest.raises(SchemaError, match="cells"):
        schemas.read_csv(bad, schemas.CHARACTERISTICS)


def test_trace_header_validation(tmp_path):
    bad = tmp_path / "trace.csv"
    bad.write_text("trial,x,y_1,z_2,f,f_min\n")
    with pytest.raises(SchemaError, match="z_2"):
        schemas.read_trace_csv(bad)
