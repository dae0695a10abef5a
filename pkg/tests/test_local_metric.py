import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import apex_two_cliques, fan5, k4_plus
from locdim.generators import random_connected
from locdim.graph import (
    Disconnected,
    EmptySet,
    clique_number,
    complete,
    cycle,
    from_edge_list,
    is_bipartite,
    path,
)
from locdim.local_metric import (
    BIPARTITE_FAST_PATH,
    BRUTE_FORCE,
    CLIQUE_FAST_PATH,
    COMPLETE_FAST_PATH,
    SearchLimitExceeded,
    Trivial,
    alpha,
    enumerate_local_metric_bases,
    is_local_metric_generator,
    is_minimal_generator_always_minimum,
    local_metric_dimension,
    minimal_generators,
    representation,
    rho,
)


def small_connected(seed, n_max=10):
    rng = random.Random(seed)
    return random_connected(rng.randint(2, n_max), rng.uniform(0.2, 0.7), rng)


def test_representation():
    assert representation(cycle(5), 0, [1, 3]) == (1, 2)
    assert representation(path(4), 2, [2]) == (0,)
    assert representation(complete(4), 0, [1, 2, 3]) == (1, 1, 1)


def test_generator_predicate_examples():
    assert is_local_metric_generator(path(4), {0})
    assert not is_local_metric_generator(complete(3), {0})
    assert is_local_metric_generator(complete(3), {0, 1})


def test_generator_predicate_errors():
    with pytest.raises(EmptySet):
        is_local_metric_generator(complete(3), set())
    with pytest.raises(Disconnected):
        is_local_metric_generator(from_edge_list(3, [(0, 1)]), {0})


@pytest.mark.parametrize(
    "g, expected, method",
    [
        (complete(5), 4, COMPLETE_FAST_PATH),
        (cycle(6), 1, BIPARTITE_FAST_PATH),
        (cycle(5), 2, BRUTE_FORCE),
        (k4_plus(), 3, CLIQUE_FAST_PATH),
        (apex_two_cliques(), 2, BRUTE_FORCE),
    ],
)
def test_dimension_examples(g, expected, method):
    res = local_metric_dimension(g)
    assert res.dimension == expected
    assert res.method == method
    assert is_local_metric_generator(g, res.witness)


def test_dimension_errors():
    with pytest.raises(Trivial):
        local_metric_dimension(complete(1))
    with pytest.raises(Disconnected):
        local_metric_dimension(from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(SearchLimitExceeded):
        local_metric_dimension(cycle(27))
    # fast paths ignore the cap
    assert local_metric_dimension(cycle(40)).dimension == 1


def test_fast_paths_agree_with_search_witness():
    for g in (complete(6), cycle(8), k4_plus(), path(5)):
        fast = local_metric_dimension(g)
        slow = local_metric_dimension(g, fast_paths=False)
        assert (fast.dimension, fast.witness) == (slow.dimension, slow.witness)


def test_witness_is_lexicographically_first():
    for seed in range(40):
        g = small_connected(seed, 8)
        res = local_metric_dimension(g, fast_paths=False)
        first = next(
            frozenset(w)
            for w in itertools.combinations(range(g.n), res.dimension)
            if oracles.is_generator(g.n, g.edges(), w)
        )
        assert res.witness == first


def test_bases_examples():
    assert set(enumerate_local_metric_bases(complete(3))) == {
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({1, 2}),
    }
    # every singleton resolves a bipartite graph, including the middle of P_3
    assert set(enumerate_local_metric_bases(path(3))) == {frozenset({v}) for v in range(3)}
    family = enumerate_local_metric_bases(apex_two_cliques())
    assert not family.contains_vertex(0)
    assert set(family) == {frozenset(b) for b in ({1, 3}, {1, 4}, {2, 3}, {2, 4})}


@pytest.mark.parametrize("seed", range(25))
def test_bases_match_oracle(seed):
    g = small_connected(seed, 8)
    assert set(enumerate_local_metric_bases(g)) == set(oracles.bases(g.n, g.edges()))


def test_rho_examples():
    g = cycle(5)
    assert rho(g, range(5)) == (0, frozenset())
    assert rho(complete(4), {0, 1})[0] == 1
    assert rho(cycle(5), set())[0] == 2
    size, witness = rho(complete(3), {0})
    assert size == 1 and 0 not in witness
    assert rho(path(4), set())[0] == 1


def test_alpha_examples():
    assert alpha(complete(3), {0}) == 1
    assert alpha(cycle(5), set()) == 0
    assert alpha(apex_two_cliques(), {0}) == 0


def test_minimal_generator_checker():
    assert is_minimal_generator_always_minimum(complete(4))
    assert is_minimal_generator_always_minimum(path(4))
    assert is_minimal_generator_always_minimum(cycle(5))
    assert not is_minimal_generator_always_minimum(fan5())


@pytest.mark.parametrize("seed", range(20))
def test_minimal_generators_match_oracle(seed):
    g = small_connected(seed, 7)
    gens = set(oracles.generators(g.n, g.edges()))
    minimal = {w for w in gens if not any(w - {x} in gens for x in w)}
    assert set(minimal_generators(g)) == minimal
    assert is_minimal_generator_always_minimum(g) == oracles.minimal_always_minimum(g.n, g.edges())


@pytest.mark.parametrize("seed", range(60))
def test_dimension_matches_oracle(seed):
    g = small_connected(seed, 9)
    assert local_metric_dimension(g).dimension == oracles.dimension(g.n, g.edges())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.data())
def test_monotonicity(seed, data):
    g = small_connected(seed)
    w = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    extra = data.draw(st.sets(st.integers(0, g.n - 1)))
    if is_local_metric_generator(g, w):
        assert is_local_metric_generator(g, w | extra)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_bounds_and_full_vertex_set(seed):
    g = small_connected(seed)
    assert is_local_metric_generator(g, range(g.n))
    d = local_metric_dimension(g).dimension
    assert 1 <= d <= g.n - 1
    assert (d == 1) == bool(is_bipartite(g))
    assert (d == g.n - 1) == (g.m == g.n * (g.n - 1) // 2)
    if g.n >= 3:
        assert (d == g.n - 2) == (clique_number(g) == g.n - 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.data())
def test_rho_properties(seed, data):
    g = small_connected(seed)
    dim = local_metric_dimension(g).dimension
    assert rho(g, set())[0] == dim
    assert rho(g, range(g.n))[0] == 0
    c = data.draw(st.sets(st.integers(0, g.n - 1)))
    bigger = c | data.draw(st.sets(st.integers(0, g.n - 1)))
    size, witness = rho(g, c)
    assert rho(g, bigger)[0] <= size
    assert not witness & c
    assert is_local_metric_generator(g, witness | c) if witness | c else size == 0
    assert size == oracles.rho(g.n, g.edges(), c)


@pytest.mark.parametrize("seed", range(40))
def test_single_attachment_rho_alpha_identity(seed):
    g = next(
        h for h in (small_connected(seed * 1000 + i) for i in range(1000)) if not is_bipartite(h)
    )
    dim = local_metric_dimension(g).dimension
    for v in range(g.n):
        a = alpha(g, {v})
        assert a in (0, 1)
        assert rho(g, {v})[0] == dim - a


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.data())
def test_alpha_range(seed, data):
    g = small_connected(seed)
    c = data.draw(st.sets(st.integers(0, g.n - 1)))
    dim = local_metric_dimension(g).dimension
    assert 0 <= alpha(g, c) <= min(len(c), dim)


def test_rho_bipartite_empty_constraint_is_total():
    assert rho(cycle(6), set())[0] == 1
