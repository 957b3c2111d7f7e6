"""Static-figure rendering for benchmark artifacts emitted by sfcopt."""

from .render import (
    render_characteristics,
    render_hull_diagram,
    render_sweep_table,
    render_trial_scatter,
)
from .schemas import SCHEMA_VERSION, Schema, SchemaError, read_csv, write_csv

__version__ = "0.1.0"

__all__ = [
    "SCHEMA_VERSION",
    "Schema",
    "SchemaError",
    "read_csv",
    "render_characteristics",
    "render_hull_diagram",
    "render_sweep_table",
    "render_trial_scatter",
    "write_csv",
]
