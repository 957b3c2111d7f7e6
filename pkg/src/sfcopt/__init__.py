"""Deterministic global optimization toolkit built on space-filling curves.

The main entry points are MgasConfig/run for the curve-based optimizer,
direct_run for the box baseline, the gkls generator for seeded test
functions, and the bench harness for class-level experiments.
"""

from .bench import ClassReport, eta_sweep, operating_characteristics, run_class
from .curve import CurveMap, MAX_INDEX_BITS
from .diagram import (
    DiagramPoint,
    IntervalRecord,
    characteristic,
    h_coordinate,
    holder_constant_from_lipschitz,
)
from .direct import BoxRecord, direct_run
from .gkls import GklsClassSpec, GklsFunction, GklsGenerationError, class_spec, generate
from .hull import HullSelection, filter_improving, nondominated
from .mgas import MgasConfig, OptimizerState, global_lower_bound, initialize, iterate, run
from .results import RunResult, StoppingRule, TrialRecord

__version__ = "0.1.0"

__all__ = [
    "BoxRecord",
    "ClassReport",
    "CurveMap",
    "DiagramPoint",
    "GklsClassSpec",
    "GklsFunction",
    "GklsGenerationError",
    "HullSelection",
    "IntervalRecord",
    "MAX_INDEX_BITS",
    "MgasConfig",
    "OptimizerState",
    "RunResult",
    "StoppingRule",
    "TrialRecord",
    "characteristic",
    "class_spec",
    "direct_run",
    "eta_sweep",
    "filter_improving",
    "generate",
    "global_lower_bound",
    "h_coordinate",
    "holder_constant_from_lipschitz",
    "initialize",
    "iterate",
    "nondominated",
    "operating_characteristics",
    "run",
    "run_class",
]
