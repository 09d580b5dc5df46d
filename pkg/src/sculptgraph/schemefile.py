"""JSON scheme files.

Layout::

    {"version": 1,
     "modes": [{"label": "1", "kind": "qubit"}, ...],
     "edges": [{"source": "A1", "target": "1", "state": "+",
                "amplitude": {"p": "1/1", "q": "0/1", "r": "0/1", "s": "0/1"}}, ...]}

``amplitude`` encodes ``(p + q sqrt2) + i (r + s sqrt2)``. Modes are sorted
by label and edges by (target, source, state), so writing is canonical and
write -> read -> write is byte-identical.
"""

from __future__ import annotations

import json

from .errors import SchemaError
from .fock import InternalState, ModeId, label_key
from .graphs import Edge, SculptingDigraph
from .scalar import ExactScalar

VERSION = 1


def _rat_text(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def amplitude_to_dict(a: ExactScalar) -> dict:
    return {k: _rat_text(v) for k, v in zip("pqrs", a.components)}


def amplitude_from_dict(d) -> ExactScalar:
    if not isinstance(d, dict) or set(d) != set("pqrs"):
        raise SchemaError(f"amplitude must have exactly the keys p, q, r, s: {d!r}")
    try:
        return ExactScalar(*(str(d[k]) for k in "pqrs"))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational in amplitude {d!r}: {exc}") from None


def digraph_to_dict(g: SculptingDigraph) -> dict:
    modes = sorted(g.vertices, key=lambda v: label_key(v.label))
    edges = []
    for e in g.edges:
        if e.state.symbol is None:
            raise SchemaError(f"edge {e.source}->{e.target} has a state outside {{+,-,0,1}}")
        edges.append(
            {
                "source": e.source,
                "target": e.target,
                "state": e.state.symbol,
                "amplitude": amplitude_to_dict(e.amplitude),
            }
        )
    return {
        "version": VERSION,
        "modes": [{"label": m.label, "kind": m.kind} for m in modes],
        "edges": edges,
    }


def digraph_from_dict(data) -> SculptingDigraph:
    if not isinstance(data, dict):
        raise SchemaError("scheme file must hold a JSON object")
    if data.get("version") != VERSION:
        raise SchemaError(f"unsupported scheme version {data.get('version')!r}")
    try:
        raw_modes = data["modes"]
        raw_edges = data["edges"]
    except KeyError as exc:
        raise SchemaError(f"scheme file is missing {exc.args[0]!r}") from None
    modes = []
    try:
        qubit_labels = sorted(
            (m["label"] for m in raw_modes if m.get("kind") == "qubit"), key=label_key
        )
        positions = {lab: i for i, lab in enumerate(qubit_labels)}
        for m in raw_modes:
            label, kind = str(m["label"]), m["kind"]
            modes.append(ModeId(label, kind, positions.get(label)))
        edges = [
            Edge(
                str(e["source"]),
                str(e["target"]),
                amplitude_from_dict(e["amplitude"]),
                InternalState.from_symbol(e["state"]),
            )
            for e in raw_edges
        ]
    except (KeyError, TypeError, AttributeError) as exc:
        raise SchemaError(f"malformed mode or edge entry: {exc}") from None
    try:
        return SculptingDigraph(modes, edges)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def dumps(g: SculptingDigraph) -> str:
    return json.dumps(digraph_to_dict(g), indent=2) + "\n"


def loads(text: str) -> SculptingDigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    return digraph_from_dict(data)


def read(path) -> SculptingDigraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def write(g: SculptingDigraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))
