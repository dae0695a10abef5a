import random
import time

import pytest

import oracles
from conftest import fan5
from locdim.constructions import ChainSpec, chain, point_attach
from locdim.decomposition import (
    articulation_points,
    block_rhos,
    blocks,
    classify,
    decompose,
    dim_via_decomposition,
    equality_certificate,
    hanging_part,
    upper_bound_via_alpha,
)
from locdim.generators import GeneratorConfig, generate
from locdim.graph import (
    Disconnected,
    complete,
    cycle,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    path,
)
from locdim.local_metric import (
    BRUTE_FORCE,
    COMPLETE_FAST_PATH,
    DECOMPOSITION,
    SearchLimitExceeded,
    is_local_metric_generator,
    local_metric_dimension,
)

MIXED = ("cactus", "block-graph", "attachments", "random-connected", "unicyclic")


def suite(count, n_max=12, seed0=0):
    """Seeded connected graphs with at least one cut vertex, n <= n_max."""
    out = []
    seed = seed0
    while len(out) < count:
        fam = MIXED[seed % len(MIXED)]
        rng = random.Random(seed)
        cfg = GeneratorConfig(fam, seed=seed, n=rng.randint(4, n_max), p=0.25, k=rng.randint(2, 4), max_order=4)
        g = generate(cfg)
        seed += 1
        if g.n <= n_max and articulation_points(g):
            out.append(g)
    return out


def triangle_with_tail():
    return from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])


def c6_with_triangle():
    return from_edge_list(8, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7), (0, 7)])


def test_articulation_points_examples(bowtie):
    assert articulation_points(bowtie) == {2}
    assert articulation_points(complete(5)) == set()
    assert articulation_points(path(4)) == {1, 2}
    with pytest.raises(Disconnected):
        articulation_points(from_edge_list(3, [(0, 1)]))


@pytest.mark.parametrize("g", suite(40, 10))
def test_articulation_points_oracle(g):
    assert articulation_points(g) == oracles.cut_vertices(g.n, g.edges())


def test_blocks_examples(bowtie):
    d = blocks(bowtie)
    assert d.blocks == (frozenset({0, 1, 2}), frozenset({2, 3, 4}))
    assert d.cut_vertices == {2}
    assert len(blocks(path(4)).blocks) == 3
    pendant_c5 = from_edge_list(6, [(i, (i + 1) % 5) for i in range(5)] + [(0, 5)])
    d = blocks(pendant_c5)
    assert sorted(len(b) for b in d.blocks) == [2, 5]
    assert d.cut_vertices == {0}


@pytest.mark.parametrize("g", suite(60))
def test_block_invariants(g):
    d = blocks(g)
    assert sum(induced_subgraph(g, b)[0].m for b in d.blocks) == g.m
    for i, a in enumerate(d.blocks):
        for b in d.blocks[i + 1 :]:
            shared = a & b
            assert len(shared) <= 1 and shared <= d.cut_vertices
    nodes = len(d.tree)
    tree_edges = sum(len(v) for v in d.tree.values()) // 2
    assert tree_edges == nodes - 1
    # connected: walk from the first block
    seen, todo = {("B", 0)}, [("B", 0)]
    while todo:
        for nxt in d.tree[todo.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    assert len(seen) == nodes


def test_classify_examples(bowtie, triangle_chain):
    d = decompose(bowtie)
    assert d.nonbipartite_flags == (True, True)
    assert d.attachment_sets == (frozenset({2}), frozenset({2}))

    d = decompose(triangle_with_tail())
    (tri,) = d.nonbipartite_blocks
    assert d.attachment_sets[tri] == frozenset()

    d = decompose(triangle_chain)
    middle = d.blocks.index(frozenset({2, 3, 4}))
    assert d.attachment_sets[middle] == {2, 4}


@pytest.mark.parametrize("g", suite(60, 15, seed0=500))
def test_classify_matches_materialized_hanging_parts(g):
    d = decompose(g)
    for j, b in enumerate(d.blocks):
        for x in b & d.cut_vertices:
            part = hanging_part(g, b, x)
            materialized = not is_bipartite(induced_subgraph(g, part)[0])
            assert (x in d.attachment_sets[j]) == materialized
        assert d.attachment_sets[j] <= d.cut_vertices & b


def test_dim_examples(bowtie, triangle_chain):
    res = dim_via_decomposition(bowtie)
    assert res.dimension == 2 and res.method == DECOMPOSITION
    assert dim_via_decomposition(triangle_chain).dimension == 2
    assert dim_via_decomposition(c6_with_triangle()).dimension == 2
    assert dim_via_decomposition(triangle_with_tail()).dimension == 2


def test_triangle_chain_rhos(triangle_chain):
    d = decompose(triangle_chain)
    rhos = block_rhos(triangle_chain, d)
    assert [rhos[j][0] for j in d.nonbipartite_blocks] == [1, 0, 1]


def test_two_connected_input_degrades_to_single_block():
    assert dim_via_decomposition(cycle(5)).method == BRUTE_FORCE
    assert dim_via_decomposition(complete(7)).method == COMPLETE_FAST_PATH
    assert dim_via_decomposition(complete(7)).dimension == 6


@pytest.mark.parametrize("g", suite(80, seed0=1000))
def test_oracle_equivalence(g):
    res = dim_via_decomposition(g)
    assert res.dimension == oracles.dimension(g.n, g.edges())
    assert is_local_metric_generator(g, res.witness)
    assert (res.dimension == 1) == (not decompose(g).nonbipartite_blocks)
    if not is_bipartite(g):
        assert res.dimension <= upper_bound_via_alpha(g)


def test_upper_bound_examples(bowtie, triangle_chain):
    assert upper_bound_via_alpha(bowtie) == 2
    assert upper_bound_via_alpha(cycle(5)) == 2
    assert upper_bound_via_alpha(triangle_chain) == 2


def test_upper_bound_rejects_bipartite():
    with pytest.raises(ValueError):
        upper_bound_via_alpha(path(4))


def test_equality_certificate_block_graph():
    k4_chain, _ = chain(ChainSpec((complete(4),) * 3, ((1, 0), (1, 0))))
    cert = equality_certificate(k4_chain)
    assert cert.hypothesis_holds and cert.equality
    assert cert.bound == cert.dimension == 5


def test_equality_certificate_bowtie(bowtie):
    cert = equality_certificate(bowtie)
    assert cert.equality and cert.dimension == 2


def test_equality_certificate_negative_path():
    g, _ = point_attach([fan5(), complete(3)], [((0, 1), (1, 0))])
    cert = equality_certificate(g)
    assert not cert.hypothesis_holds
    assert cert.equality is None


def test_threads_do_not_change_result():
    for g in suite(20, seed0=2000):
        one = dim_via_decomposition(g, threads=1)
        four = dim_via_decomposition(g, threads=4)
        assert one == four


def _k5_chain(b):
    return chain(ChainSpec((complete(5),) * b, ((1, 0),) * (b - 1)))[0]


def test_decomposition_scales_linearly_on_k5_chains():
    def timed(b):
        g = _k5_chain(b)
        start = time.perf_counter()
        res = dim_via_decomposition(g)
        return time.perf_counter() - start, res.dimension

    timed(4)  # warm up
    t10, d10 = timed(10)
    t40, d40 = timed(40)
    assert d10 == 2 * 3 + 8 * 2 and d40 == 2 * 3 + 38 * 2
    # 4x the blocks; allow generous slack for timer noise
    assert t40 < 12 * t10 + 0.05
    with pytest.raises(SearchLimitExceeded):
        local_metric_dimension(_k5_chain(10), fast_paths=False)
