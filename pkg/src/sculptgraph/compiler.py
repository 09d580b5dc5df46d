"""Caterpillar spec -> sculpting digraph -> sculpting operator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .caterpillar import CaterpillarSpec
from .central_path import replace_loop_with_star, seed_digraph
from .fock import LOGICAL0, LOGICAL1, ModeId, SculptingOperator, label_key
from .graphs import (
    BigraphEdge,
    SculptingBigraph,
    SculptingDigraph,
    bigraph_to_digraph,
    digraph_to_bigraph,
    digraph_to_operator,
    dot_id,
)
from .scalar import INV_SQRT2, ONE


@dataclass(frozen=True)
class CompiledScheme:
    digraph: SculptingDigraph
    qubit_order: tuple
    ancilla_order: tuple
    source_spec: Optional[CaterpillarSpec] = None

    @property
    def modes(self) -> list[ModeId]:
        return [self.digraph.vertex(lab) for lab in self.qubit_order + self.ancilla_order]

    @property
    def n_qubits(self) -> int:
        return len(self.qubit_order)

    @property
    def n_modes(self) -> int:
        return len(self.digraph.vertices)

    @property
    def initial_bosons(self) -> int:
        return 2 * len(self.qubit_order) + len(self.ancilla_order)

    @property
    def factor_order(self) -> list[str]:
        """Qubit dots in label order, then ``A1..Am``, then ``C``."""
        ancillas = [a for a in self.ancilla_order if a != "C"]
        tail = ["C"] if "C" in self.ancilla_order else []
        return list(self.qubit_order) + ancillas + tail

    @property
    def simulation_order(self) -> list[str]:
        """Same factors, ancilla dots first: keeps intermediate states far smaller."""
        return list(self.ancilla_order) + list(self.qubit_order)

    @property
    def bigraph(self) -> SculptingBigraph:
        return digraph_to_bigraph(self.digraph)

    @classmethod
    def from_digraph(cls, g: SculptingDigraph, source_spec: Optional[CaterpillarSpec] = None) -> CompiledScheme:
        """Wrap an arbitrary digraph; ancillas are ordered ``C`` first, then by label."""
        qubits = tuple(g.qubit_labels())
        ancillas = sorted(g.ancilla_labels(), key=lambda s: (s != "C", label_key(s)))
        return cls(g, qubits, tuple(ancillas), source_spec)


def compile_spec(spec: Union[CaterpillarSpec, list, tuple]) -> CompiledScheme:
    """Build the sculpting digraph for a caterpillar.

    ``m`` path vertices use the central path digraph of length ``m - 1``; the
    loop of ``A_j`` is swapped for a star gadget with ``leaves_j + 1`` qubits.
    Qubits are numbered 1..N star by star, center last within each star.
    """
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    m = spec.path_vertices
    g = seed_digraph(m - 1)
    next_label = 1
    qubit_order = []
    for j, k in enumerate(spec.star_sizes, start=1):
        labels = [str(q) for q in range(next_label, next_label + k)]
        modes = [ModeId(lab, "qubit", int(lab) - 1) for lab in labels]
        g = replace_loop_with_star(g, f"A{j}", k, modes)
        qubit_order.extend(labels)
        next_label += k
    ancillas = ("C",) + tuple(f"A{j}" for j in range(1, m + 1))
    return CompiledScheme(g, tuple(qubit_order), ancillas, spec)


def operator_of(scheme: CompiledScheme) -> SculptingOperator:
    return digraph_to_operator(scheme.digraph, scheme.factor_order)


def ghz_bigraph(n: int, normalized: bool = False) -> SculptingBigraph:
    """Dot ``l`` holds ``w a_{l,0} - w a_{l+1,1}`` (indices mod n)."""
    if n < 2:
        raise ValueError(f"GHZ bigraph needs n >= 2, got {n}")
    w = INV_SQRT2 if normalized else ONE
    circles = [ModeId(str(j), "qubit", j - 1) for j in range(1, n + 1)]
    dots = [dot_id(str(j)) for j in range(1, n + 1)]
    edges = []
    for j in range(1, n + 1):
        nxt = j % n + 1
        edges.append(BigraphEdge(str(j), dot_id(str(j)), w, LOGICAL0))
        edges.append(BigraphEdge(str(nxt), dot_id(str(j)), -w, LOGICAL1))
    return SculptingBigraph(circles, dots, edges)


def ghz_scheme(n: int, normalized: bool = False) -> CompiledScheme:
    return CompiledScheme.from_digraph(bigraph_to_digraph(ghz_bigraph(n, normalized)))
