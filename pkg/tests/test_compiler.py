import itertools

import pytest

from sculptgraph.caterpillar import CaterpillarSpec
from sculptgraph.compiler import CompiledScheme, compile_spec, ghz_bigraph, ghz_scheme, operator_of
from sculptgraph.graphs import (
    FORM_A,
    FORM_B,
    check_epm,
    check_genuine_conditions,
    count_directed_pms,
    is_strongly_connected,
)
from sculptgraph.scalar import INV_SQRT2, ONE, ExactScalar

# ancillas as printed (A, B, C) versus the compiled names
PRINTED_ANCILLA = {"A": "A1", "B": "A2", "C": "C"}


def factor_set(factor):
    return frozenset((mode, state.symbol, amp) for mode, state, amp in factor.summands)


def printed(*summands):
    """Factor in printed notation: printed((-1, "1", "1"), (1, "A", "+"))."""
    return frozenset((PRINTED_ANCILLA.get(m, m), s, ExactScalar(a)) for a, m, s in summands)


def operator_sets(spec):
    return [factor_set(f) for f in operator_of(compile_spec(spec)).factors]


BELL_PRINTED = [
    printed((-1, "1", "1"), (1, "A", "+")),
    printed((-1, "2", "1"), (1, "B", "+")),
    printed((1, "1", "0"), (1, "C", "+")),
    printed((1, "2", "0"), (-1, "A", "+"), (1, "C", "+")),
    printed((1, "A", "+"), (1, "B", "+"), (1, "C", "+")),
]


def four_cluster_printed(a2_zero_mode):
    return [
        printed((-1, "1", "1"), (1, "2", "0")),
        printed((-1, "2", "1"), (1, "A", "+")),
        printed((-1, "3", "1"), (1, "4", "0")),
        printed((-1, "4", "1"), (1, "B", "+")),
        printed((1, "1", "0"), (1, "C", "+")),
        printed((1, a2_zero_mode, "0"), (-1, "A", "+"), (1, "C", "+")),
        printed((1, "A", "+"), (1, "B", "+"), (1, "C", "+")),
    ]


def test_bell_operator_matches_printed_factors():
    assert operator_sets([0, 0]) == BELL_PRINTED


def test_four_cluster_operator_with_corrected_factor():
    assert operator_sets([1, 1]) == four_cluster_printed("3")
    # the factor exactly as printed does not come out of the compiler
    assert operator_sets([1, 1]) != four_cluster_printed("2")


def test_six_cluster_operator_by_hand():
    # P^(1) with both A loops replaced by three-qubit stars
    expected = [
        printed((-1, "1", "1"), (1, "2", "0")),
        printed((-1, "2", "1"), (1, "3", "0")),
        printed((-1, "3", "1"), (1, "A", "+")),
        printed((-1, "4", "1"), (1, "5", "0")),
        printed((-1, "5", "1"), (1, "6", "0")),
        printed((-1, "6", "1"), (1, "B", "+")),
        printed((1, "1", "0"), (1, "C", "+")),
        printed((1, "4", "0"), (-1, "A", "+"), (1, "C", "+")),
        printed((1, "A", "+"), (1, "B", "+"), (1, "C", "+")),
    ]
    assert operator_sets([2, 2]) == expected


def test_factor_order():
    scheme = compile_spec([1, 0, 2])
    assert scheme.qubit_order == ("1", "2", "3", "4", "5", "6")
    assert scheme.ancilla_order == ("C", "A1", "A2", "A3")
    assert scheme.factor_order == ["1", "2", "3", "4", "5", "6", "A1", "A2", "A3", "C"]
    assert sorted(scheme.simulation_order) == sorted(scheme.factor_order)


def test_nine_qubit_example_layout():
    scheme = compile_spec(CaterpillarSpec.parse("2,0,4"))
    assert scheme.n_qubits == 9
    assert scheme.digraph.ancilla_labels() == ["C", "A1", "A2", "A3"]
    # star centers sit next to their path vertex
    centers = [e.target for e in scheme.digraph.edges if e.source.startswith("A") and e.target.isdigit()]
    assert centers == ["3", "4", "9"]


SPECS_M_LE_4 = [s for m in range(1, 5) for s in itertools.product(range(4), repeat=m)]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_pm_count_is_two_to_the_m(m):
    for spec in (s for s in SPECS_M_LE_4 if len(s) == m):
        assert count_directed_pms(compile_spec(spec).digraph) == 2 ** m, spec


@pytest.mark.parametrize("spec", [(0,), (3,), (0, 0), (2, 0, 4), (1, 3, 0, 2)])
def test_resource_ledger(spec):
    scheme = compile_spec(spec)
    n, m = scheme.n_qubits, len(spec)
    assert n == sum(spec) + m
    assert scheme.n_modes == n + m + 1
    assert scheme.initial_bosons == 2 * n + m + 1
    assert len(operator_of(scheme).factors) == n + m + 1


@pytest.mark.parametrize("spec", [(0, 0), (1, 1), (2, 0, 4), (3,), (0, 1, 0, 1)])
def test_structural_properties(spec):
    scheme = compile_spec(spec)
    assert is_strongly_connected(scheme.digraph)
    assert check_genuine_conditions(scheme.digraph).passed
    forms = check_epm(scheme.bigraph).forms
    assert all(forms[q] == FORM_A for q in scheme.qubit_order)
    assert all(forms[a] == FORM_B for a in scheme.ancilla_order)


def test_compile_is_deterministic():
    a, b = compile_spec([2, 1, 0]), compile_spec(CaterpillarSpec((2, 1, 0)))
    assert a.digraph == b.digraph
    assert a == b


def test_from_digraph_recovers_orders():
    scheme = compile_spec([1, 2])
    again = CompiledScheme.from_digraph(scheme.digraph)
    assert again.qubit_order == scheme.qubit_order
    assert again.ancilla_order == scheme.ancilla_order


@pytest.mark.parametrize("bad", [[], [-1], [1, "x"], (1.5,)])
def test_bad_specs(bad):
    with pytest.raises((ValueError, TypeError)):
        compile_spec(bad)


@pytest.mark.parametrize("text", ["", "1,,2", "a", "1,-2", "1;2"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        CaterpillarSpec.parse(text)


def test_parse_and_properties():
    spec = CaterpillarSpec.parse(" 2, 0,4 ")
    assert spec.leaf_counts == (2, 0, 4)
    assert spec.path_vertices == 3
    assert spec.path_length == 2
    assert spec.star_sizes == (3, 1, 5)
    assert spec.n_qubits == 9


@pytest.mark.parametrize("normalized,w", [(False, ONE), (True, INV_SQRT2)])
def test_ghz_bigraph(normalized, w):
    b = ghz_bigraph(3, normalized)
    assert b.balanced
    dot1 = {(e.circle, e.state.symbol, e.amplitude) for e in b.dot_edges("1'")}
    assert dot1 == {("1", "0", w), ("2", "1", -w)}
    dot3 = {(e.circle, e.state.symbol, e.amplitude) for e in b.dot_edges("3'")}
    assert dot3 == {("3", "0", w), ("1", "1", -w)}


def test_ghz_scheme_needs_two_qubits():
    with pytest.raises(ValueError):
        ghz_bigraph(1)
    assert ghz_scheme(2).ancilla_order == ()
