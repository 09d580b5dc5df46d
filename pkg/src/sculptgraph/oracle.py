"""Qubit states and independent graph-state constructions.

These are the reference targets the sculpted outputs are checked against.
Nothing here knows about bosons or digraphs: graph states are built as CZ
products on ``|+...+>`` and the star/path closed forms are expanded directly.
Qubit positions are 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .caterpillar import CaterpillarSpec
from .scalar import INV_SQRT2, ONE, ZERO, ExactScalar

# single-qubit amplitudes (c0, c1) in the computational basis
KET0 = (ONE, ZERO)
KET1 = (ZERO, ONE)
KET_PLUS = (INV_SQRT2, INV_SQRT2)
KET_MINUS = (INV_SQRT2, -INV_SQRT2)


class QubitState:
    """Sparse superposition of computational-basis bitstrings.

    ``terms`` maps strings such as ``"0110"`` to their coefficients; zero
    coefficients are dropped on construction.
    """

    __slots__ = ("labels", "terms")

    def __init__(self, labels: Sequence[str] | int, terms: Mapping[str, ExactScalar] = ()):
        if isinstance(labels, int):
            labels = tuple(str(i + 1) for i in range(labels))
        self.labels = tuple(labels)
        n = len(self.labels)
        clean = {}
        for bits, c in dict(terms).items():
            if len(bits) != n or set(bits) - {"0", "1"}:
                raise ValueError(f"bad basis string {bits!r} for {n} qubits")
            c = ExactScalar.coerce(c)
            if not c.is_zero():
                clean[bits] = c
        self.terms = dict(sorted(clean.items()))

    @property
    def n(self) -> int:
        return len(self.labels)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, bits: str) -> ExactScalar:
        return self.terms.get(bits, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QubitState):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: QubitState) -> QubitState:
        if other.n != self.n:
            raise ValueError("qubit count mismatch")
        out = dict(self.terms)
        for bits, c in other.terms.items():
            out[bits] = out.get(bits, ZERO) + c
        return QubitState(self.labels, out)

    def __sub__(self, other: QubitState) -> QubitState:
        return self + other.scale(-ONE)

    def scale(self, factor) -> QubitState:
        factor = ExactScalar.coerce(factor)
        return QubitState(self.labels, {b: c * factor for b, c in self.terms.items()})

    def relabel(self, labels: Sequence[str]) -> QubitState:
        return QubitState(labels, self.terms)

    def __repr__(self) -> str:
        return f"QubitState({self.n}, {len(self.terms)} terms)"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})|{b}>" for b, c in self.terms.items())


def basis_state(bits: str) -> QubitState:
    return QubitState(len(bits), {bits: ONE})


def product_state(factors: Sequence[tuple[ExactScalar, ExactScalar]]) -> QubitState:
    """Tensor product of single-qubit states given as ``(c0, c1)`` pairs."""
    terms: dict[str, ExactScalar] = {"": ONE}
    for c0, c1 in factors:
        nxt = {}
        for bits, c in terms.items():
            if not c0.is_zero():
                nxt[bits + "0"] = c * c0
            if not c1.is_zero():
                nxt[bits + "1"] = c * c1
        terms = nxt
    return QubitState(len(factors), terms)


def _check_index(state: QubitState, j: int) -> None:
    if not 0 <= j < state.n:
        raise IndexError(f"qubit index {j} out of range for {state.n} qubits")


def cz_apply(state: QubitState, j: int, k: int) -> QubitState:
    """Controlled-Z between qubits ``j`` and ``k``."""
    _check_index(state, j)
    _check_index(state, k)
    if j == k:
        raise ValueError("CZ needs two distinct qubits")
    out = {}
    for bits, c in state.terms.items():
        out[bits] = -c if bits[j] == "1" and bits[k] == "1" else c
    return QubitState(state.labels, out)


def hadamard_apply(state: QubitState, j: int) -> QubitState:
    _check_index(state, j)
    out: dict[str, ExactScalar] = {}
    for bits, c in state.terms.items():
        amp = c * INV_SQRT2
        b0 = bits[:j] + "0" + bits[j + 1 :]
        b1 = bits[:j] + "1" + bits[j + 1 :]
        out[b0] = out.get(b0, ZERO) + amp
        out[b1] = out.get(b1, ZERO) + (-amp if bits[j] == "1" else amp)
    return QubitState(state.labels, out)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        canon = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop on vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a}, {b}) out of range")
            canon.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(edges))


def plus_state(n: int) -> QubitState:
    return product_state([KET_PLUS] * n)


def graph_state(g: SimpleGraph) -> QubitState:
    state = plus_state(g.n)
    for a, b in sorted(g.edges):
        state = cz_apply(state, a, b)
    return state


def star_graph(k: int) -> SimpleGraph:
    """Star on ``k`` vertices with the last vertex as center."""
    return SimpleGraph.from_edges(k, [(i, k - 1) for i in range(k - 1)])


def path_graph(length: int) -> SimpleGraph:
    return SimpleGraph.from_edges(length, [(i, i + 1) for i in range(length - 1)])


def star_state(k: int) -> QubitState:
    """``|++...+0> + |--...-1>`` with the center as the last qubit (unnormalized)."""
    if k < 2:
        raise ValueError("star state needs at least 2 qubits")
    return product_state([KET_PLUS] * (k - 1) + [KET0]) + product_state(
        [KET_MINUS] * (k - 1) + [KET1]
    )


def path_state(length: int) -> QubitState:
    """Signed sum over all bitstrings with sign ``(-1)^(sum i_k i_{k+1})``."""
    if length < 2:
        raise ValueError("path state needs at least 2 qubits")
    terms = {}
    for bits in itertools.product((0, 1), repeat=length):
        parity = sum(bits[i] * bits[i + 1] for i in range(length - 1)) % 2
        terms["".join(map(str, bits))] = -ONE if parity else ONE
    return QubitState(length, terms)


def caterpillar_layout(spec: CaterpillarSpec) -> tuple[list[list[int]], list[int]]:
    """Qubit positions per star and the star centers.

    Stars are numbered left to right along the path; inside each star the
    leaves come first and the center is the last qubit.
    """
    stars, centers = [], []
    pos = 0
    for k in spec.star_sizes:
        stars.append(list(range(pos, pos + k)))
        centers.append(pos + k - 1)
        pos += k
    return stars, centers


def caterpillar_graph(spec: CaterpillarSpec) -> SimpleGraph:
    stars, centers = caterpillar_layout(spec)
    edges = [(a, b) for a, b in zip(centers, centers[1:])]
    for star in stars:
        edges.extend((leaf, star[-1]) for leaf in star[:-1])
    return SimpleGraph.from_edges(spec.n_qubits, edges)


def caterpillar_target(spec: CaterpillarSpec, leaf_basis: str = "computational") -> QubitState:
    """Graph state of the caterpillar.

    With ``leaf_basis="hadamard"`` every leaf qubit is additionally rotated by
    a Hadamard, which is the local frame the sculpted outputs come out in.
    """
    if leaf_basis not in ("computational", "hadamard"):
        raise ValueError(f"unknown leaf basis {leaf_basis!r}")
    state = graph_state(caterpillar_graph(spec))
    if leaf_basis == "hadamard":
        stars, _ = caterpillar_layout(spec)
        for star in stars:
            for leaf in star[:-1]:
                state = hadamard_apply(state, leaf)
    return state


def equal_up_to_scalar(a: QubitState, b: QubitState) -> Optional[ExactScalar]:
    """Return ``lam`` with ``a == lam * b`` or ``None`` if no nonzero ``lam`` exists."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    if a.is_zero() or b.is_zero() or a.terms.keys() != b.terms.keys():
        return None
    first = next(iter(b.terms))
    lam = a.terms[first] / b.terms[first]
    for bits, c in b.terms.items():
        if a.terms[bits] != lam * c:
            return None
    return lam
