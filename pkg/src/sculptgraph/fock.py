"""Symbolic bosonic algebra on modes with a two-level internal degree of freedom.

A :class:`FockState` is a finite sum of unnormalized monomials
``c * prod_j (a+_{j,+})^n (a+_{j,-})^m |vac>``. With that convention the
ladder rule is ``a (a+)^n |vac> = n (a+)^(n-1) |vac>`` and all coefficients
stay inside Q(sqrt2, i).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import BunchingError, SchemaError
from .oracle import QubitState
from .scalar import INV_SQRT2, ONE, ZERO, ExactScalar

LEVELS = ("+", "-")


def label_key(label: str):
    """Natural sort key: numeric labels first in numeric order, then the rest."""
    if label.isdigit():
        return (0, int(label), "")
    parts = re.split(r"(\d+)", label)
    return (1, 0, tuple((int(p), "") if p.isdigit() else (0, p) for p in parts if p))


@dataclass(frozen=True)
class InternalState:
    """Two-level internal state ``c_plus |+> + c_minus |->``."""

    c_plus: ExactScalar
    c_minus: ExactScalar
    symbol: Optional[str] = None

    @classmethod
    def from_components(cls, c_plus, c_minus) -> InternalState:
        """Build a user-supplied state, insisting it is normalized."""
        cp, cm = ExactScalar.coerce(c_plus), ExactScalar.coerce(c_minus)
        if cp.abs2() + cm.abs2() != ONE:
            raise SchemaError(f"internal state ({cp}, {cm}) is not normalized")
        for candidate in (PLUS, MINUS, LOGICAL0, LOGICAL1):
            if candidate.c_plus == cp and candidate.c_minus == cm:
                return candidate
        return cls(cp, cm)

    @classmethod
    def from_symbol(cls, symbol: str) -> InternalState:
        try:
            return _BY_SYMBOL[symbol]
        except KeyError:
            raise SchemaError(f"unknown internal state {symbol!r}") from None

    def inner(self, other: InternalState) -> ExactScalar:
        return (
            self.c_plus.conjugate() * other.c_plus
            + self.c_minus.conjugate() * other.c_minus
        )

    def orthogonal_to(self, other: InternalState) -> bool:
        return self.inner(other).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, InternalState):
            return NotImplemented
        return self.c_plus == other.c_plus and self.c_minus == other.c_minus

    def __hash__(self) -> int:
        return hash((self.c_plus, self.c_minus))

    def sort_key(self):
        if self.symbol is not None:
            return (0, "+-01".index(self.symbol), ())
        return (1, 0, self.c_plus.components + self.c_minus.components)

    def __str__(self) -> str:
        return self.symbol or f"[{self.c_plus}, {self.c_minus}]"


PLUS = InternalState(ONE, ZERO, "+")
MINUS = InternalState(ZERO, ONE, "-")
LOGICAL0 = InternalState(INV_SQRT2, INV_SQRT2, "0")
LOGICAL1 = InternalState(INV_SQRT2, -INV_SQRT2, "1")
_BY_SYMBOL = {"+": PLUS, "-": MINUS, "0": LOGICAL0, "1": LOGICAL1}


@dataclass(frozen=True)
class ModeId:
    label: str
    kind: str = "qubit"
    position: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("qubit", "ancilla"):
            raise SchemaError(f"mode kind must be 'qubit' or 'ancilla', got {self.kind!r}")
        if not self.label:
            raise SchemaError("mode label must be nonempty")


ModeLike = Union[ModeId, str]


def _label(mode: ModeLike) -> str:
    return mode.label if isinstance(mode, ModeId) else mode


# An occupancy is a tuple of (label, n_plus, n_minus), sorted by label_key,
# with empty modes left out.
Occupancy = tuple


def make_occupancy(mapping: Mapping[str, tuple[int, int]]) -> Occupancy:
    items = [(lab, n[0], n[1]) for lab, n in mapping.items() if n[0] or n[1]]
    if any(n < 0 for _, *ns in items for n in ns):
        raise ValueError("negative occupancy")
    items.sort(key=lambda t: label_key(t[0]))
    return tuple(items)


class FockState:
    """Canonical sparse sum of Fock monomials, keyed by occupancy."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Occupancy, ExactScalar] = ()):
        self.terms = {occ: c for occ, c in dict(terms).items() if not c.is_zero()}

    @classmethod
    def from_occupations(cls, pairs: Iterable[tuple[Mapping[str, tuple[int, int]], object]]) -> FockState:
        out: dict[Occupancy, ExactScalar] = {}
        for mapping, coeff in pairs:
            occ = make_occupancy(mapping)
            out[occ] = out.get(occ, ZERO) + ExactScalar.coerce(coeff)
        return cls(out)

    @classmethod
    def vacuum(cls) -> FockState:
        return cls({(): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockState):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: FockState) -> FockState:
        out = dict(self.terms)
        for occ, c in other.terms.items():
            out[occ] = out.get(occ, ZERO) + c
        return FockState(out)

    def scale(self, factor) -> FockState:
        factor = ExactScalar.coerce(factor)
        return FockState({occ: c * factor for occ, c in self.terms.items()})

    def boson_counts(self) -> set[int]:
        return {sum(a + b for _, a, b in occ) for occ in self.terms}

    def __repr__(self) -> str:
        return f"FockState({len(self.terms)} terms)"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}){format_occupancy(occ)}" for occ, c in sorted(
            self.terms.items(), key=lambda kv: kv[0]))


def format_occupancy(occ: Occupancy) -> str:
    bits = []
    for lab, np_, nm in occ:
        for lvl, n in (("+", np_), ("-", nm)):
            if n:
                bits.append(f"a†[{lab},{lvl}]" + (f"^{n}" if n > 1 else ""))
    return "".join(bits) + "|vac>"


def initial_state(modes: Sequence[ModeId]) -> FockState:
    """Two opposite-level bosons per qubit mode, one ``+`` boson per ancilla."""
    labels = [m.label for m in modes]
    if len(set(labels)) != len(labels):
        raise SchemaError(f"duplicate mode labels in {labels}")
    mapping = {m.label: (1, 1) if m.kind == "qubit" else (1, 0) for m in modes}
    return FockState({make_occupancy(mapping): ONE})


def _lower(occ: Occupancy, label: str, level: int):
    """Return (multiplicity, new occupancy) or None when the level is empty."""
    for i, (lab, np_, nm) in enumerate(occ):
        if lab == label:
            n = np_ if level == 0 else nm
            if n == 0:
                return None
            if level == 0:
                np_ -= 1
            else:
                nm -= 1
            if np_ or nm:
                return n, occ[:i] + ((lab, np_, nm),) + occ[i + 1 :]
            return n, occ[:i] + occ[i + 1 :]
    return None


def _accumulate_single(out: dict, state: FockState, label: str, level: int, factor: ExactScalar) -> None:
    for occ, c in state.terms.items():
        hit = _lower(occ, label, level)
        if hit is None:
            continue
        n, new = hit
        contrib = c * factor if n == 1 else c * factor * n
        prev = out.get(new)
        out[new] = contrib if prev is None else prev + contrib


def apply_single(mode: ModeLike, basis_level: str, state: FockState) -> FockState:
    """Apply ``a_{mode, level}`` for ``level`` in ``{"+", "-"}``."""
    level = LEVELS.index(basis_level)
    out: dict = {}
    _accumulate_single(out, state, _label(mode), level, ONE)
    return FockState(out)


@dataclass(frozen=True)
class AnnihilationOp:
    """``sum_k amplitude_k * a_{mode_k, state_k}``."""

    summands: tuple

    def __post_init__(self):
        items = tuple(
            (_label(m), s, ExactScalar.coerce(a)) for m, s, a in self.summands
        )
        if not items:
            raise ValueError("an annihilation operator needs at least one summand")
        if any(a.is_zero() for _, _, a in items):
            raise ValueError("summand amplitudes must be nonzero")
        object.__setattr__(self, "summands", items)

    def modes(self) -> set[str]:
        return {m for m, _, _ in self.summands}

    def __str__(self) -> str:
        parts = []
        for m, s, a in self.summands:
            coeff = "" if a == ONE else ("-" if a == -ONE else f"({a})")
            parts.append(f"{coeff}a[{m},{s}]")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"


@dataclass(frozen=True)
class SculptingOperator:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "".join(str(f) for f in self.factors) or "1"


def apply_annihilation(op: AnnihilationOp, state: FockState) -> FockState:
    out: dict = {}
    for label, istate, amp in op.summands:
        for level, comp in enumerate((istate.c_plus, istate.c_minus)):
            if comp.is_zero():
                continue
            _accumulate_single(out, state, label, level, amp * comp.conjugate())
    return FockState(out)


def apply_sculpting(op: SculptingOperator, state: FockState) -> FockState:
    for factor in op.factors:
        state = apply_annihilation(factor, state)
        if state.is_zero():
            break
    return state


def check_no_bunching(state: FockState, qubit_modes: Iterable[ModeLike], ancilla_modes: Iterable[ModeLike] = ()) -> bool:
    """Every term has exactly one boson per qubit mode and none in the ancillas."""
    qubits = {_label(m) for m in qubit_modes}
    ancillas = {_label(m) for m in ancilla_modes}
    for occ in state.terms:
        seen = set()
        for lab, np_, nm in occ:
            if lab in ancillas:
                return False
            if lab in qubits:
                if np_ + nm != 1:
                    return False
                seen.add(lab)
        if seen != qubits:
            return False
    return True


def to_qubit_state(state: FockState, ordered_qubit_modes: Sequence[ModeLike]) -> QubitState:
    """Rewrite single-boson-per-mode terms in the ``|0>, |1>`` basis.

    ``a+_{j,+} = (a+_{j,0} + a+_{j,1})/sqrt2`` and
    ``a+_{j,-} = (a+_{j,0} - a+_{j,1})/sqrt2``.
    """
    labels = [_label(m) for m in ordered_qubit_modes]
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    # first collect the terms as strings over {'+', '-'}
    current: dict[str, ExactScalar] = {}
    for occ, coeff in state.terms.items():
        levels = [None] * n
        for lab, np_, nm in occ:
            if lab not in index or np_ + nm != 1:
                raise BunchingError(f"term {format_occupancy(occ)} is not one boson per qubit mode")
            levels[index[lab]] = "+" if np_ else "-"
        if any(s is None for s in levels):
            raise BunchingError(f"term {format_occupancy(occ)} leaves a qubit mode empty")
        key = "".join(levels)
        current[key] = current.get(key, ZERO) + coeff
    # then change basis one position at a time
    for i in range(n):
        nxt: dict[str, ExactScalar] = {}
        for key, c in current.items():
            if c.is_zero():
                continue
            amp = c * INV_SQRT2
            head, tail = key[:i], key[i + 1 :]
            for bit, val in (("0", amp), ("1", amp if key[i] == "+" else -amp)):
                k = head + bit + tail
                prev = nxt.get(k)
                nxt[k] = val if prev is None else prev + val
        current = nxt
    return QubitState(labels, current)
