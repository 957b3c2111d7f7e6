"""Versioned CSV schemas shared with the optimizer package, plus strict readers.

Any header mismatch is a hard error naming the offending column; rendering
never guesses at malformed artifacts.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """Input file does not match the expected versioned schema."""


@dataclass(frozen=True)
class Schema:
    name: str
    columns: tuple[str, ...]
    int_columns: frozenset
    float_columns: frozenset


def _schema(name, columns, ints=(), floats=()):
    return Schema(name, tuple(columns), frozenset(ints), frozenset(floats))


RUNS = _schema(
    "runs",
    ["class", "func_index", "algo", "solved", "trials", "stop_reason"],
    ints=["class", "func_index", "solved", "trials"],
)
CHARACTERISTICS = _schema(
    "characteristics",
    ["budget", "solved_count", "algo", "class"],
    ints=["budget", "solved_count", "class"],
)
SWEEP = _schema(
    "sweep",
    ["eta", "average", "maximum", "unsolved"],
    ints=["maximum", "unsolved"],
    floats=["eta", "average"],
)
SELECTION = _schema(
    "selection",
    ["iter", "id", "h", "F", "H_lo", "H_hi", "passed_xi"],
    ints=["iter", "id", "passed_xi"],
    floats=["h", "F", "H_lo", "H_hi"],
)
DIAGRAM = _schema(
    "diagram",
    ["id", "a", "b", "f_mid", "h"],
    ints=["id"],
    floats=["a", "b", "f_mid", "h"],
)


def _check_header(header, expected, name):
    for col in expected:
        if col not in header:
            raise SchemaError(f"{name} schema: missing column {col!r}")
    for col in header:
        if col not in expected:
            raise SchemaError(f"{name} schema: unexpected column {col!r}")
    if list(header) != list(expected):
        raise SchemaError(
            f"{name} schema: column order {header} does not match {list(expected)}"
        )


def read_csv(path, schema: Schema) -> dict:
    """Parse a CSV into per-column arrays (ints/floats) or lists (strings)."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{schema.name} schema: {path} is empty, header expected")
        _check_header(header, schema.columns, schema.name)
        raw = {c: [] for c in schema.columns}
        for row in reader:
            if not row:
                continue
            if len(row) != len(schema.columns):
                raise SchemaError(
                    f"{schema.name} schema: row with {len(row)} cells, "
                    f"expected {len(schema.columns)}"
                )
            for c, cell in zip(schema.columns, row):
                raw[c].append(cell)
    out = {}
    for c in schema.columns:
        if c in schema.int_columns:
            out[c] = np.array([int(v) for v in raw[c]], dtype=int)
        elif c in schema.float_columns:
            out[c] = np.array([float(v) for v in raw[c]], dtype=float)
        else:
            out[c] = raw[c]
    return out


def write_csv(path, schema: Schema, columns: dict) -> None:
    """Serialize per-column data back out; inverse of read_csv."""
    n = len(next(iter(columns.values())))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(schema.columns)
        for i in range(n):
            row = []
            for c in schema.columns:
                v = columns[c][i]
                if c in schema.int_columns:
                    row.append(str(int(v)))
                elif c in schema.float_columns:
                    row.append(repr(float(v)))
                else:
                    row.append(v)
            writer.writerow(row)


def read_trace_csv(path) -> dict:
    """Trace files carry dim-dependent columns trial,x,y_1..y_N,f,f_min."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise SchemaError("trace schema: empty file, header expected")
        if len(header) < 5 or header[:2] != ["trial", "x"] or header[-2:] != ["f", "f_min"]:
            raise SchemaError(f"trace schema: unexpected header {header}")
        dim = len(header) - 4
        for k in range(dim):
            if header[2 + k] != f"y_{k + 1}":
                raise SchemaError(f"trace schema: unexpected column {header[2 + k]!r}")
        rows = [row for row in reader if row]
    trial = np.array([int(r[0]) for r in rows])
    coords = np.array([[float(v) for v in r[2:2 + dim]] for r in rows]) if rows else (
        np.zeros((0, dim)))
    return {
        "trial": trial,
        "y": coords,
        "f": np.array([float(r[-2]) for r in rows]),
        "f_min": np.array([float(r[-1]) for r in rows]),
        "dim": dim,
    }


def read_curve_csv(path) -> dict:
    """Curve dumps carry index,x,coord_1..coord_N."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise SchemaError("curve schema: empty file, header expected")
        if len(header) < 3 or header[:2] != ["index", "x"]:
            raise SchemaError(f"curve schema: unexpected header {header}")
        dim = len(header) - 2
        for k in range(dim):
            if header[2 + k] != f"coord_{k + 1}":
                raise SchemaError(f"curve schema: unexpected column {header[2 + k]!r}")
        rows = [row for row in reader if row]
    coords = np.array([[float(v) for v in r[2:]] for r in rows]) if rows else (
        np.zeros((0, dim)))
    return {"index": np.array([int(r[0]) for r in rows]), "coords": coords, "dim": dim}
