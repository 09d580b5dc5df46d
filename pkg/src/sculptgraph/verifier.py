"""End-to-end checks: compile, simulate, project to qubits, compare with the oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .caterpillar import CaterpillarSpec
from .compiler import CompiledScheme, compile_spec, ghz_scheme
from .fock import (
    AnnihilationOp,
    FockState,
    SculptingOperator,
    apply_sculpting,
    check_no_bunching,
    initial_state,
    to_qubit_state,
)
from .graphs import (
    GenuineReport,
    check_genuine_conditions,
    count_directed_pms,
    digraph_to_operator,
    enumerate_directed_pms,
)
from .oracle import QubitState, caterpillar_target, equal_up_to_scalar
from .scalar import ExactScalar


@dataclass
class SimulationResult:
    fock_final: FockState
    no_bunching: bool
    qubit_state: Optional[QubitState]


def simulate(scheme: CompiledScheme) -> SimulationResult:
    """Apply the scheme's operator to its initial state and project to qubits.

    The factors commute, so they are applied in ``simulation_order``.
    """
    op = digraph_to_operator(scheme.digraph, scheme.simulation_order)
    final = apply_sculpting(op, initial_state(scheme.modes))
    ok = check_no_bunching(final, scheme.qubit_order, scheme.ancilla_order)
    qubits = to_qubit_state(final, scheme.qubit_order) if ok else None
    return SimulationResult(final, ok, qubits)


@dataclass
class PipelineReport:
    spec: CaterpillarSpec
    scheme: CompiledScheme
    fock_final: FockState
    qubit_state: Optional[QubitState]
    no_bunching: bool
    target: QubitState
    oracle_match: Optional[ExactScalar]
    pm_count: int

    @property
    def passed(self) -> bool:
        return self.no_bunching and self.oracle_match is not None


def run_pipeline(spec: Union[CaterpillarSpec, list, tuple]) -> PipelineReport:
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    scheme = compile_spec(spec)
    sim = simulate(scheme)
    target = caterpillar_target(spec, "hadamard")
    match = None
    if sim.qubit_state is not None:
        match = equal_up_to_scalar(sim.qubit_state, target)
    return PipelineReport(
        spec=spec,
        scheme=scheme,
        fock_final=sim.fock_final,
        qubit_state=sim.qubit_state,
        no_bunching=sim.no_bunching,
        target=target,
        oracle_match=match,
        pm_count=count_directed_pms(scheme.digraph),
    )


def pm_expansion_state(scheme: CompiledScheme) -> FockState:
    """Sum over directed PMs of the operator restricted to the matched edges.

    Each dot keeps only the summands coming from its matched source, the
    restricted product is applied to the initial state, and the results are
    added up.
    """
    g = scheme.digraph
    start = initial_state(scheme.modes)
    total = FockState()
    for pm in enumerate_directed_pms(g, scheme.factor_order):
        factors = []
        for source, target in pm.pairs():
            chosen = [e for e in g.incoming(target) if e.source == source]
            chosen.sort(key=lambda e: e.state.sort_key())
            factors.append(AnnihilationOp(tuple((e.source, e.state, e.amplitude) for e in chosen)))
        total = total + apply_sculpting(SculptingOperator(tuple(factors)), start)
    return total


@dataclass
class GHZReport:
    n: int
    qubit_state: Optional[QubitState]
    no_bunching: bool
    pm_count: int
    relative_sign: Optional[ExactScalar]
    genuine: GenuineReport

    @property
    def two_term(self) -> bool:
        if self.qubit_state is None:
            return False
        return set(self.qubit_state.terms) == {"0" * self.n, "1" * self.n}

    @property
    def passed(self) -> bool:
        return self.no_bunching and self.two_term and self.pm_count == 2


def run_ghz(n: int, normalized: bool = False) -> GHZReport:
    """Simulate the GHZ bigraph; the relative sign of ``|1..1>`` is reported, not assumed."""
    if n < 2:
        raise ValueError(f"GHZ needs n >= 2, got {n}")
    scheme = ghz_scheme(n, normalized)
    sim = simulate(scheme)
    sign = None
    if sim.qubit_state is not None:
        zeros, ones = sim.qubit_state["0" * n], sim.qubit_state["1" * n]
        if not zeros.is_zero() and not ones.is_zero():
            sign = ones / zeros
    return GHZReport(
        n=n,
        qubit_state=sim.qubit_state,
        no_bunching=sim.no_bunching,
        pm_count=count_directed_pms(scheme.digraph),
        relative_sign=sign,
        genuine=check_genuine_conditions(scheme.digraph),
    )
