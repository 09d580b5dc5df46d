"""Central path digraphs and the star gadgets grafted onto their loops."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import StructuralError
from .fock import LOGICAL0, LOGICAL1, PLUS, ModeId
from .graphs import Edge, SculptingDigraph
from .scalar import ONE, ZERO, ExactScalar


@dataclass(frozen=True)
class CentralPathMatrix:
    l: int
    entries: tuple

    @property
    def labels(self) -> list[str]:
        return path_labels(self.l)

    @property
    def size(self) -> int:
        return self.l + 2

    def as_ints(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]


def path_labels(l: int) -> list[str]:
    """Vertex order ``C, A1, ..., A(l+1)``."""
    return ["C"] + [f"A{i}" for i in range(1, l + 2)]


def _path_matrix(l: int) -> CentralPathMatrix:
    # l = 0 is the 2x2 all-ones seed used for single-star caterpillars
    rows = [[ONE, ONE], [ONE, ONE]]
    for step in range(1, l + 1):
        size = step + 2
        rows = [row + [ONE if i == 0 else ZERO] for i, row in enumerate(rows)]
        bottom = [ONE] * size
        bottom[size - 2] = -ONE
        rows.append(bottom)
    return CentralPathMatrix(l, tuple(tuple(r) for r in rows))


def build_path_matrix(l: int) -> CentralPathMatrix:
    if l < 1:
        raise ValueError(f"central path matrix needs l >= 1, got {l}")
    return _path_matrix(l)


def _matrix_digraph(m: CentralPathMatrix) -> SculptingDigraph:
    labels = m.labels
    vertices = [ModeId(lab, "ancilla") for lab in labels]
    edges = []
    for i, row in enumerate(m.entries):
        for j, w in enumerate(row):
            if not w.is_zero():
                edges.append(Edge(labels[j], labels[i], w, PLUS))
    return SculptingDigraph(vertices, edges)


def path_digraph(l: int) -> SculptingDigraph:
    """Digraph of the central path matrix; every edge carries the ``+`` state."""
    return _matrix_digraph(build_path_matrix(l))


def seed_digraph(l: int) -> SculptingDigraph:
    """Like :func:`path_digraph` but also accepts the degenerate ``l = 0``."""
    if l < 0:
        raise ValueError(f"path length must be nonnegative, got {l}")
    return _matrix_digraph(_path_matrix(l))


def _as_mode(q: Union[ModeId, str]) -> ModeId:
    if isinstance(q, ModeId):
        return q
    return ModeId(q, "qubit", int(q) - 1 if q.isdigit() else None)


def replace_loop_with_star(
    g: SculptingDigraph, vertex: str, k: int, qubit_labels: Sequence[Union[ModeId, str]]
) -> SculptingDigraph:
    """Swap the loop on ``vertex`` for a chain of ``k`` qubit vertices.

    With ``q_1..q_k`` the new qubits (``q_k`` is the star center):

    * ``q_i`` gets ``-a_{q_i,1}`` plus ``a_{q_{i+1},0}`` (or ``a_{vertex,+}`` for ``q_k``)
    * ``vertex`` trades its loop term for ``a_{q_1,0}``

    ``k = 1`` is the Bell gadget.
    """
    qubits = [_as_mode(q) for q in qubit_labels]
    if k < 1 or len(qubits) != k:
        raise ValueError(f"need k >= 1 qubit labels, got k={k} and {len(qubits)} labels")
    loops = [e for e in g.edges if e.is_loop and e.source == vertex]
    if not loops:
        raise StructuralError(f"vertex {vertex} has no loop to replace")
    if len(loops) > 1:
        raise StructuralError(f"vertex {vertex} has several loops")
    loop = loops[0]
    clash = {q.label for q in qubits} & set(g.labels)
    if clash:
        raise StructuralError(f"qubit labels already in use: {sorted(clash)}")

    edges = [e for e in g.edges if e is not loop]
    labels = [q.label for q in qubits]
    edges.append(Edge(labels[0], vertex, loop.amplitude, LOGICAL0))
    for i, q in enumerate(labels):
        edges.append(Edge(q, q, -ONE, LOGICAL1))
        if i + 1 < k:
            edges.append(Edge(labels[i + 1], q, ONE, LOGICAL0))
        else:
            edges.append(Edge(vertex, q, ONE, PLUS))
    return SculptingDigraph(list(g.vertices) + qubits, edges)


def linear_graph_digraph(n: int) -> SculptingDigraph:
    """Every loop of ``A1..An`` swapped for a Bell gadget: an ``n``-qubit linear chain."""
    if n < 2:
        raise ValueError(f"linear graph needs n >= 2, got {n}")
    g = path_digraph(n - 1)
    for j in range(1, n + 1):
        g = replace_loop_with_star(g, f"A{j}", 1, [str(j)])
    return g
