"""Sculpting bigraphs and digraphs.

Convention used everywhere: a digraph edge ``Y -> X`` with amplitude ``w``
and internal state ``s`` contributes ``w * a_{Y,s}`` to the annihilation
operator ("dot") owned by vertex ``X``. In matrix form that is the entry at
row ``X``, column ``Y``. A bigraph edge ``(circle Y, dot X')`` carries the
same information before the circle/dot pairs are fused.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import kernels
from .errors import StructuralError
from .fock import (
    AnnihilationOp,
    InternalState,
    ModeId,
    SculptingOperator,
    apply_sculpting,
    check_no_bunching,
    initial_state,
    label_key,
)
from .scalar import ONE, ZERO, ExactScalar

COLOR_STYLE = {
    "+": ("black", "solid"),
    "-": ("black", "dashed"),
    "0": ("red", "solid"),
    "1": ("blue", "solid"),
}


@dataclass(frozen=True)
class Edge:
    """Directed edge ``source -> target`` of a sculpting digraph."""

    source: str
    target: str
    amplitude: ExactScalar
    state: InternalState

    def sort_key(self):
        return (label_key(self.target), label_key(self.source), self.state.sort_key())

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class BigraphEdge:
    circle: str
    dot: str
    amplitude: ExactScalar
    state: InternalState

    def sort_key(self):
        return (label_key(self.dot), label_key(self.circle), self.state.sort_key())


def _coerce_amp(a) -> ExactScalar:
    a = ExactScalar.coerce(a)
    if a.is_zero():
        raise StructuralError("edge amplitudes must be nonzero")
    return a


class SculptingDigraph:
    """Weighted, colored digraph; loops allowed, one edge per (source, target, state)."""

    def __init__(self, vertices: Sequence[ModeId], edges: Iterable[Edge] = ()):
        self.vertices = tuple(vertices)
        labels = [v.label for v in self.vertices]
        if len(set(labels)) != len(labels):
            raise StructuralError(f"duplicate vertex labels in {labels}")
        self._by_label = {v.label: v for v in self.vertices}
        seen = set()
        clean = []
        for e in edges:
            e = Edge(e.source, e.target, _coerce_amp(e.amplitude), e.state)
            if e.source not in self._by_label or e.target not in self._by_label:
                raise StructuralError(f"edge {e.source}->{e.target} uses an unknown vertex")
            key = (e.source, e.target, e.state)
            if key in seen:
                raise StructuralError(f"duplicate edge {e.source}->{e.target} in state {e.state}")
            seen.add(key)
            clean.append(e)
        clean.sort(key=Edge.sort_key)
        self.edges = tuple(clean)

    @property
    def labels(self) -> list[str]:
        return [v.label for v in self.vertices]

    def vertex(self, label: str) -> ModeId:
        return self._by_label[label]

    def incoming(self, label: str) -> list[Edge]:
        return [e for e in self.edges if e.target == label]

    def outgoing(self, label: str) -> list[Edge]:
        return [e for e in self.edges if e.source == label]

    def has_loop(self, label: str) -> bool:
        return any(e.is_loop and e.source == label for e in self.edges)

    def qubit_labels(self) -> list[str]:
        return sorted((v.label for v in self.vertices if v.kind == "qubit"), key=label_key)

    def ancilla_labels(self) -> list[str]:
        return [v.label for v in self.vertices if v.kind == "ancilla"]

    def with_edges(self, edges: Iterable[Edge], vertices: Optional[Sequence[ModeId]] = None) -> SculptingDigraph:
        return SculptingDigraph(self.vertices if vertices is None else vertices, edges)

    def canonical(self):
        verts = tuple(sorted(self.vertices, key=lambda v: label_key(v.label)))
        return verts, self.edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, SculptingDigraph):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __repr__(self) -> str:
        return f"SculptingDigraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


class SculptingBigraph:
    """Circles (modes) ``U``, dots (annihilation operators) ``V``, edges between them."""

    def __init__(self, circles: Sequence[ModeId], dots: Sequence[str], edges: Iterable[BigraphEdge] = ()):
        self.circles = tuple(circles)
        self.dots = tuple(dots)
        circle_labels = {c.label for c in self.circles}
        dot_set = set(self.dots)
        if len(circle_labels) != len(self.circles) or len(dot_set) != len(self.dots):
            raise StructuralError("duplicate circle or dot identifiers")
        clean = []
        for e in edges:
            if e.circle not in circle_labels or e.dot not in dot_set:
                raise StructuralError(f"edge ({e.circle}, {e.dot}) must join a circle to a dot")
            clean.append(BigraphEdge(e.circle, e.dot, _coerce_amp(e.amplitude), e.state))
        clean.sort(key=BigraphEdge.sort_key)
        self.edges = tuple(clean)

    @property
    def balanced(self) -> bool:
        return len(self.circles) == len(self.dots)

    def circle_edges(self, label: str) -> list[BigraphEdge]:
        return [e for e in self.edges if e.circle == label]

    def dot_edges(self, dot: str) -> list[BigraphEdge]:
        return [e for e in self.edges if e.dot == dot]

    def canonical(self):
        circles = tuple(sorted(self.circles, key=lambda v: label_key(v.label)))
        dots = tuple(sorted(self.dots, key=label_key))
        return circles, dots, self.edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, SculptingBigraph):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __repr__(self) -> str:
        return f"SculptingBigraph({len(self.circles)} circles, {len(self.dots)} dots, {len(self.edges)} edges)"


def dot_id(label: str) -> str:
    return label + "'"


# -- conversions -------------------------------------------------------------


def bigraph_to_digraph(g: SculptingBigraph, dot_owner: Optional[Mapping[str, str]] = None) -> SculptingDigraph:
    """Fuse each circle with the dot it owns.

    Without ``dot_owner`` a dot named ``"x'"`` belongs to circle ``"x"``.
    """
    if not g.balanced:
        raise StructuralError(f"bigraph is unbalanced: {len(g.circles)} circles, {len(g.dots)} dots")
    if dot_owner is None:
        dot_owner = {d: d[:-1] if d.endswith("'") else d for d in g.dots}
    circle_labels = {c.label for c in g.circles}
    owners = [dot_owner.get(d) for d in g.dots]
    if set(dot_owner) != set(g.dots) or set(owners) != circle_labels or len(set(owners)) != len(owners):
        raise StructuralError("dot ownership is not a bijection between dots and circles")
    edges = [Edge(e.circle, dot_owner[e.dot], e.amplitude, e.state) for e in g.edges]
    return SculptingDigraph(g.circles, edges)


def digraph_to_bigraph(g: SculptingDigraph) -> SculptingBigraph:
    dots = [dot_id(v.label) for v in g.vertices]
    edges = [BigraphEdge(e.source, dot_id(e.target), e.amplitude, e.state) for e in g.edges]
    return SculptingBigraph(g.vertices, dots, edges)


def dot_operator(g: SculptingDigraph, label: str) -> AnnihilationOp:
    incoming = g.incoming(label)
    if not incoming:
        raise StructuralError(f"vertex {label} has no incoming edge; its dot would be zero")
    incoming.sort(key=lambda e: (label_key(e.source), e.state.sort_key()))
    return AnnihilationOp(tuple((e.source, e.state, e.amplitude) for e in incoming))


def digraph_to_operator(g: SculptingDigraph, order: Optional[Sequence[str]] = None) -> SculptingOperator:
    """One annihilation factor per vertex, built from its incoming edges."""
    order = g.labels if order is None else list(order)
    return SculptingOperator(tuple(dot_operator(g, lab) for lab in order))


def operator_to_bigraph(op: SculptingOperator, circles: Sequence[ModeId], dot_ids: Optional[Sequence[str]] = None) -> SculptingBigraph:
    """Read an operator back into bigraph form (one dot per factor)."""
    if dot_ids is None:
        dot_ids = [f"d{i + 1}" for i in range(len(op.factors))]
    edges = []
    for d, factor in zip(dot_ids, op.factors):
        for mode, state, amp in factor.summands:
            edges.append(BigraphEdge(mode, d, amp, state))
    return SculptingBigraph(circles, dot_ids, edges)


# -- matrices, permanents, perfect matchings --------------------------------


def adjacency_matrix(g: SculptingDigraph, order: Optional[Sequence[str]] = None) -> list[list[ExactScalar]]:
    """Row X, column Y holds the summed amplitude of edges ``Y -> X``."""
    order = g.labels if order is None else list(order)
    index = {lab: i for i, lab in enumerate(order)}
    m = [[ZERO] * len(order) for _ in order]
    for e in g.edges:
        m[index[e.target]][index[e.source]] = m[index[e.target]][index[e.source]] + e.amplitude
    return m


def support_matrix(g: SculptingDigraph, order: Optional[Sequence[str]] = None) -> list[list[int]]:
    order = g.labels if order is None else list(order)
    index = {lab: i for i, lab in enumerate(order)}
    m = [[0] * len(order) for _ in order]
    for e in g.edges:
        m[index[e.target]][index[e.source]] = 1
    return m


def ryser_permanent(m: Sequence[Sequence[ExactScalar]]) -> ExactScalar:
    """Ryser inclusion-exclusion over exact scalars (plain subset loop)."""
    n = len(m)
    total = ZERO
    for subset in range(1, 1 << n):
        cols = [j for j in range(n) if subset >> j & 1]
        prod = ONE
        for row in m:
            s = ZERO
            for j in cols:
                s = s + row[j]
            if s.is_zero():
                prod = ZERO
                break
            prod = prod * s
        if prod.is_zero():
            continue
        total = total - prod if (n - len(cols)) & 1 else total + prod
    return total


def permanent(m: Sequence[Sequence]) -> ExactScalar:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("permanent needs a square matrix")
    entries = [[ExactScalar.coerce(x) for x in row] for row in m]
    if all(x.is_integer() for row in entries for x in row):
        return ExactScalar(kernels.permanent_int([[int(x) for x in row] for row in entries]))
    return ryser_permanent(entries)


@dataclass(frozen=True)
class DirectedPM:
    """``sources[X]`` is the vertex whose edge into ``X`` is selected."""

    order: tuple
    sources: tuple

    def source_of(self, label: str) -> str:
        return self.sources[self.order.index(label)]

    def pairs(self) -> list[tuple[str, str]]:
        return list(zip(self.sources, self.order))

    def cycles(self) -> list[list[str]]:
        """Disjoint cycles (loops are length-1 cycles) following target -> source."""
        src = dict(zip(self.order, self.sources))
        seen, out = set(), []
        for start in self.order:
            if start in seen:
                continue
            cyc, v = [], start
            while v not in seen:
                seen.add(v)
                cyc.append(v)
                v = src[v]
            out.append(cyc)
        return out


def _candidates(g: SculptingDigraph, order: Sequence[str]) -> list[list[int]]:
    index = {lab: i for i, lab in enumerate(order)}
    cand = [set() for _ in order]
    for e in g.edges:
        cand[index[e.target]].add(index[e.source])
    return [sorted(c) for c in cand]


def enumerate_directed_pms(g: SculptingDigraph, order: Optional[Sequence[str]] = None) -> list[DirectedPM]:
    order = tuple(g.labels if order is None else order)
    found = kernels.directed_pms(_candidates(g, order))
    return [DirectedPM(order, tuple(order[i] for i in sigma)) for sigma in found]


def count_directed_pms(g: SculptingDigraph) -> int:
    return kernels.count_directed_pms(_candidates(g, g.labels))


# -- structural checks -------------------------------------------------------


def _reach(start: str, nbrs: Mapping[str, set]) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_strongly_connected(g: SculptingDigraph) -> bool:
    labels = g.labels
    if len(labels) <= 1:
        return True
    fwd, back = defaultdict(set), defaultdict(set)
    for e in g.edges:
        if not e.is_loop:
            fwd[e.source].add(e.target)
            back[e.target].add(e.source)
    everything = set(labels)
    return _reach(labels[0], fwd) == everything and _reach(labels[0], back) == everything


@dataclass
class GenuineReport:
    per_vertex_color_ok: dict
    strongly_connected: bool
    exempt: frozenset = field(default_factory=frozenset)

    @property
    def passed(self) -> bool:
        colors_ok = all(ok for lab, ok in self.per_vertex_color_ok.items() if lab not in self.exempt)
        return colors_ok and self.strongly_connected


def check_genuine_conditions(g: SculptingDigraph, parties: Optional[Iterable[str]] = None) -> GenuineReport:
    """Necessary digraph conditions for genuine multipartite entanglement.

    A vertex passes the color test when at least two of its incoming edges
    (loops included) carry different internal states. Only the party
    vertices are held to it; by default those are the qubit-kind vertices,
    or every vertex if the graph has none. A pass is not a certificate.
    """
    per_vertex = {}
    for lab in g.labels:
        states = {e.state for e in g.incoming(lab)}
        per_vertex[lab] = len(states) >= 2
    if parties is None:
        parties = [v.label for v in g.vertices if v.kind == "qubit"] or g.labels
    exempt = frozenset(set(g.labels) - set(parties))
    return GenuineReport(per_vertex, is_strongly_connected(g), exempt)


FORM_A = "FORM-A"
FORM_B = "FORM-B"
NONCONFORMING = "NONCONFORMING"


@dataclass
class EPMReport:
    forms: dict
    semantic_no_bunching: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return all(f != NONCONFORMING for f in self.forms.values())


def classify_circle(edges: Sequence[BigraphEdge]) -> str:
    if len(edges) == 2 and edges[0].state.orthogonal_to(edges[1].state):
        return FORM_A
    if edges and len({e.state for e in edges}) == 1:
        return FORM_B
    return NONCONFORMING


def bigraph_operator(g: SculptingBigraph) -> SculptingOperator:
    factors = []
    for d in g.dots:
        es = g.dot_edges(d)
        if not es:
            raise StructuralError(f"dot {d} has no edges")
        factors.append(AnnihilationOp(tuple((e.circle, e.state, e.amplitude) for e in es)))
    return SculptingOperator(tuple(factors))


def check_epm(g: SculptingBigraph, semantic: bool = False) -> EPMReport:
    forms = {c.label: classify_circle(g.circle_edges(c.label)) for c in g.circles}
    report = EPMReport(forms)
    if semantic:
        final = apply_sculpting(bigraph_operator(g), initial_state(g.circles))
        qubits = [c.label for c in g.circles if c.kind == "qubit"]
        ancillas = [c.label for c in g.circles if c.kind == "ancilla"]
        report.semantic_no_bunching = check_no_bunching(final, qubits, ancillas)
    return report


# -- DOT export --------------------------------------------------------------


def _edge_attrs(amplitude: ExactScalar, state: InternalState) -> str:
    color, style = COLOR_STYLE.get(state.symbol, ("gray", "dotted"))
    attrs = [f"color={color}", f"style={style}"]
    label = []
    if state.symbol is None:
        label.append(f"ψ={state}")
    if amplitude != ONE:
        label.append(str(amplitude))
    if label:
        attrs.append('label="' + " ".join(label) + '"')
    return ", ".join(attrs)


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def export_dot(g: Union[SculptingDigraph, SculptingBigraph], name: str = "sculpting") -> str:
    lines = []
    if isinstance(g, SculptingDigraph):
        lines.append(f"digraph {_quote(name)} {{")
        for v in sorted(g.vertices, key=lambda v: label_key(v.label)):
            shape = "circle" if v.kind == "qubit" else "doublecircle"
            lines.append(f"  {_quote(v.label)} [shape={shape}];")
        for e in g.edges:
            lines.append(f"  {_quote(e.source)} -> {_quote(e.target)} [{_edge_attrs(e.amplitude, e.state)}];")
    else:
        lines.append(f"graph {_quote(name)} {{")
        for c in sorted(g.circles, key=lambda v: label_key(v.label)):
            lines.append(f"  {_quote(c.label)} [shape=circle];")
        for d in sorted(g.dots, key=label_key):
            lines.append(f'  {_quote(d)} [shape=point, width=0.12, xlabel=""];')
        for e in g.edges:
            lines.append(f"  {_quote(e.circle)} -- {_quote(e.dot)} [{_edge_attrs(e.amplitude, e.state)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
