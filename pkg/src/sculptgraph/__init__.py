"""Heralded sculpting schemes for caterpillar graph states.

Compile a caterpillar description into a sculpting digraph, simulate the
resulting annihilation-operator chain exactly, and check the output against
an independently built graph state.
"""

from .caterpillar import CaterpillarSpec
from .compiler import CompiledScheme, compile_spec, ghz_bigraph, ghz_scheme, operator_of
from .fock import (
    LOGICAL0,
    LOGICAL1,
    MINUS,
    PLUS,
    AnnihilationOp,
    FockState,
    InternalState,
    ModeId,
    SculptingOperator,
    apply_annihilation,
    apply_sculpting,
    apply_single,
    check_no_bunching,
    initial_state,
    to_qubit_state,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .oracle import QubitState, caterpillar_target, equal_up_to_scalar, graph_state
from .scalar import RATIONAL_BACKEND, ExactScalar
from .verifier import pm_expansion_state, run_ghz, run_pipeline

__version__ = "0.1.0"
