import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convlab.constructions import catalog, extremal_regular
from convlab.graph import (
    bit_count,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    vset,
)
from convlab.process import (
    characterization_check,
    contains_k_immune_set,
    is_conversion_set,
    is_k_immune,
    residual_core,
    run_process,
)


def test_layered_trace_on_catalog_4regular():
    g = catalog()["layered4reg"]
    trace = run_process(g, vset([0, 1, 2]), 3)
    assert trace.complete
    assert bit_count(trace.layers[1]) == 2
    assert bit_count(trace.layer_union(2)) == 3
    assert trace.time == 3


def test_bipartite_converts_in_one_step():
    for r in (1, 3, 5):
        g = complete_bipartite(3, r)
        trace = run_process(g, vset(range(3)), 3)
        assert trace.complete and trace.time == 1


def test_single_seed_stalls_on_cycle():
    trace = run_process(cycle_graph(5), vset([0]), 2)
    assert not trace.complete
    assert trace.converted == vset([0])


def test_empty_seed_incomplete():
    trace = run_process(cycle_graph(4), 0, 1)
    assert not trace.complete and trace.time == 0


def test_threshold_must_be_positive():
    with pytest.raises(ValueError):
        run_process(cycle_graph(4), 0, 0)


def test_layers_disjoint_and_supported():
    g = catalog()["petersen"]
    trace = run_process(g, vset([0, 1, 2, 3]), 2)
    seen = 0
    for t, layer in enumerate(trace.layers):
        assert layer & seen == 0
        if t >= 1:
            for v in range(g.n):
                if layer >> v & 1:
                    assert bit_count(g.adj[v] & seen) >= 2
        seen |= layer


def test_trace_text_form():
    trace = run_process(complete_graph(3), vset([0, 2]), 2)
    assert trace.to_text() == "0: 0 2\n1: 1\n"


def test_is_k_immune():
    g = catalog()["petersen"]
    assert is_k_immune(g, g.full_mask, 2)
    assert not is_k_immune(g, vset([0]), 2)
    assert is_k_immune(cycle_graph(5), vset(range(5)), 2)
    with pytest.raises(ValueError):
        is_k_immune(g, 0, 2)


def test_chordless_cycle_is_immune_in_cubic():
    g = catalog()["prism"]
    triangle = vset([0, 1, 2])
    assert is_k_immune(g, triangle, 2)
    assert residual_core(g, triangle, 2) == triangle


def test_residual_core_duality_named():
    g = catalog()["petersen"]
    s = vset([0, 2, 8])
    assert is_conversion_set(g, s, 2)
    assert residual_core(g, g.full_mask & ~s, 2) == 0
    bad = vset([0, 1])
    assert not is_conversion_set(g, bad, 2)
    assert contains_k_immune_set(g, g.full_mask & ~bad, 2)


@st.composite
def graph_and_sets(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(possible), max_size=len(possible))) if possible else []
    g = build_graph(n, edges)
    small = draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    extra = draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    k = draw(st.integers(min_value=1, max_value=3))
    return g, small, small | extra, k


@settings(max_examples=200, deadline=None)
@given(graph_and_sets())
def test_conversion_monotone_in_seed(data):
    g, small, big, k = data
    if is_conversion_set(g, small, k):
        assert is_conversion_set(g, big, k)


@settings(max_examples=200, deadline=None)
@given(graph_and_sets())
def test_immune_set_duality(data):
    g, small, _, k = data
    rest = g.full_mask & ~small
    converts = is_conversion_set(g, small, k)
    if rest:
        assert converts == (not contains_k_immune_set(g, rest, k))
    else:
        assert converts


def test_characterization_regular_cases():
    pet = catalog()["petersen"]
    rep = characterization_check(pet, vset([0, 2, 8]), 2)
    assert rep.degeneracy_order == 1
    assert rep.simulated is True and rep.complement_rule is True
    rep3 = characterization_check(pet, vset([0, 2, 8]), 3)
    assert rep3.degeneracy_order == 0
    assert rep3.simulated == rep3.complement_rule
    irregular = build_graph(3, [(0, 1)])
    assert characterization_check(irregular, 1, 1).complement_rule is None


def test_extremal_trace_satisfies_layer_caps():
    for k in range(2, 7):
        g, seed = extremal_regular(k)
        trace = run_process(g, seed, k)
        assert trace.complete
        late = bit_count(trace.layer_union(2))
        assert late <= k
        assert g.n - k < (k * (k + 1) - 1) / (k - 1)
