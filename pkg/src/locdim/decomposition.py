"""Block decomposition and the per-block reduction of the local metric dimension.

The graph is split at its cut vertices into blocks. Only non-bipartite
blocks contribute; each one is solved in isolation with its set of
constrained cut vertices (those whose hanging part is non-bipartite) taken
as free landmarks, and the per-block minima add up to the answer.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .graph import (
    Graph,
    GraphError,
    components,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    require_connected,
)
from .local_metric import (
    BIPARTITE_FAST_PATH,
    DECOMPOSITION,
    DEFAULT_MAX_BASES,
    DEFAULT_MAX_EXACT,
    DEFAULT_MAX_MINIMALITY,
    DimResult,
    Trivial,
    alpha,
    is_local_metric_generator,
    is_minimal_generator_always_minimum,
    local_metric_dimension,
    rho,
)


class InconsistentDecomposition(GraphError):
    pass


class CertificateError(AssertionError):
    """Raised when the equality hypothesis holds but the values disagree."""


@dataclass(frozen=True)
class BlockView:
    block_index: int
    subgraph: Graph
    back_map: tuple[int, ...]

    def to_local(self, vertices) -> frozenset[int]:
        index = {old: new for new, old in enumerate(self.back_map)}
        return frozenset(index[v] for v in vertices)

    def to_global(self, vertices) -> frozenset[int]:
        return frozenset(self.back_map[v] for v in vertices)


@dataclass(frozen=True)
class Decomposition:
    """Blocks, cut vertices and the block-cut tree of a connected graph.

    Tree nodes are ``("B", j)`` for block j and ``("C", x)`` for cut vertex x.
    ``nonbipartite_flags`` and ``attachment_sets`` are empty until
    :func:`classify` fills them.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree: dict = field(compare=False)
    nonbipartite_flags: tuple[bool, ...] = ()
    attachment_sets: tuple[frozenset[int], ...] = ()

    @property
    def classified(self) -> bool:
        return len(self.nonbipartite_flags) == len(self.blocks)

    @property
    def nonbipartite_blocks(self) -> list[int]:
        return [j for j, flag in enumerate(self.nonbipartite_flags) if flag]

    def view(self, g: Graph, j: int) -> BlockView:
        sub, back = induced_subgraph(g, self.blocks[j])
        return BlockView(j, sub, tuple(back))

    def as_dict(self) -> dict:
        return {
            "blocks": [sorted(b) for b in self.blocks],
            "cut_vertices": sorted(self.cut_vertices),
            "nonbipartite": list(self.nonbipartite_flags),
            "attachment_sets": [sorted(c) for c in self.attachment_sets],
        }


def _biconnected(g: Graph) -> tuple[set[int], list[frozenset[int]]]:
    """Iterative Hopcroft-Tarjan: articulation points and block vertex sets."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    nbrs = [sorted(a) for a in g.adj]
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, 0)]
        while stack:
            u, parent, i = stack[-1]
            if i < len(nbrs[u]):
                stack[-1] = (u, parent, i + 1)
                v = nbrs[u][i]
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, 0))
                elif v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                verts: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.update((a, b))
                    if (a, b) == (parent, u):
                        break
                blocks.append(frozenset(verts))
        if root_children > 1:
            cuts.add(root)
    return cuts, blocks


def articulation_points(g: Graph) -> frozenset[int]:
    require_connected(g)
    return frozenset(_biconnected(g)[0])


def blocks(g: Graph) -> Decomposition:
    require_connected(g)
    cuts, found = _biconnected(g)
    if g.n == 1:
        found = [frozenset({0})]
    ordered = tuple(sorted(found, key=lambda b: sorted(b)))
    tree: dict = {}
    for j, b in enumerate(ordered):
        tree[("B", j)] = sorted(("C", x) for x in b if x in cuts)
        for x in b:
            if x in cuts:
                tree.setdefault(("C", x), []).append(("B", j))
    return Decomposition(ordered, frozenset(cuts), tree)


def classify(g: Graph, d: Decomposition) -> Decomposition:
    """Fill J_H flags and attachment sets with one pass over the block-cut tree.

    Blocks partition the edges and every cycle lives inside one block, so the
    part hanging off cut vertex x away from block j is non-bipartite exactly
    when it contains a non-bipartite block. Rooting the tree at block 0,
    that is a subtree count (x below j) or its complement (x above j).
    """
    flags = tuple(not is_bipartite(induced_subgraph(g, b)[0]) for b in d.blocks)
    _check_partition(g, d)
    total = sum(flags)
    root = ("B", 0)
    parent = {root: None}
    order = [root]
    for node in order:
        for nxt in d.tree.get(node, []):
            if nxt not in parent:
                parent[nxt] = node
                order.append(nxt)
    if len(order) != len(d.tree) and d.tree:
        raise InconsistentDecomposition("block-cut tree is not connected")
    below = {node: 0 for node in order}
    for node in reversed(order):
        if node[0] == "B" and flags[node[1]]:
            below[node] += 1
        if parent[node] is not None:
            below[parent[node]] += below[node]
    attachments = []
    for j, b in enumerate(d.blocks):
        node = ("B", j)
        cj = set()
        for x in b:
            if x not in d.cut_vertices:
                continue
            cnode = ("C", x)
            hanging = below[cnode] if parent.get(cnode) == node else total - below[node]
            if hanging > 0:
                cj.add(x)
        attachments.append(frozenset(cj))
    return replace(d, nonbipartite_flags=flags, attachment_sets=tuple(attachments))


def _check_partition(g: Graph, d: Decomposition) -> None:
    count = 0
    for b in d.blocks:
        sub, _ = induced_subgraph(g, b)
        count += sub.m
    if count != g.m:
        raise InconsistentDecomposition("blocks do not partition the edge set")


def decompose(g: Graph) -> Decomposition:
    return classify(g, blocks(g))


def hanging_part(g: Graph, block: frozenset[int], x: int) -> frozenset[int]:
    """Vertices of the component containing x once x's edges into ``block`` are removed."""
    edges = [(u, v) for u, v in g.edges() if not ({u, v} <= block and x in (u, v))]
    h = from_edge_list(g.n, edges)
    return next(frozenset(c) for c in components(h) if x in c)


def _threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("LOCDIM_THREADS", "1") or 1)
    return max(1, threads)


def dim_via_decomposition(
    g: Graph, max_exact: int = DEFAULT_MAX_EXACT, threads: int | None = None
) -> DimResult:
    if g.n < 2:
        raise Trivial(f"graph of order {g.n} has no local metric dimension")
    require_connected(g)
    if is_bipartite(g):
        return DimResult(1, frozenset({0}), BIPARTITE_FAST_PATH)
    d = decompose(g)
    if not d.cut_vertices:
        return local_metric_dimension(g, max_exact=max_exact)
    total, witness = 0, set()
    for size, part in _solve_blocks(g, d, max_exact, _threads(threads)):
        total += size
        witness |= part
    result = DimResult(total, frozenset(witness), DECOMPOSITION)
    assert is_local_metric_generator(g, result.witness), "decomposition witness fails to generate"
    return result


def block_rhos(
    g: Graph, d: Decomposition | None = None, max_exact: int = DEFAULT_MAX_EXACT, threads: int = 1
) -> dict[int, tuple[int, frozenset[int]]]:
    """Per non-bipartite block: (rho, witness in original vertex indices)."""
    d = d if d is not None and d.classified else decompose(g)
    return dict(zip(d.nonbipartite_blocks, _solve_blocks(g, d, max_exact, threads)))


def _solve_blocks(g: Graph, d: Decomposition, max_exact: int, threads: int):
    def solve(j: int) -> tuple[int, frozenset[int]]:
        view = d.view(g, j)
        size, local = rho(view.subgraph, view.to_local(d.attachment_sets[j]), max_exact)
        return size, view.to_global(local)

    jobs = d.nonbipartite_blocks
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(solve, jobs))
    return [solve(j) for j in jobs]


def upper_bound_via_alpha(
    g: Graph, max_exact: int = DEFAULT_MAX_EXACT, max_bases: int = DEFAULT_MAX_BASES
) -> int:
    d = decompose(g)
    if not d.nonbipartite_blocks:
        raise ValueError("alpha bound is defined for non-bipartite graphs only")
    bound = 0
    for j in d.nonbipartite_blocks:
        view = d.view(g, j)
        dim = local_metric_dimension(view.subgraph, max_exact=max_exact).dimension
        bound += dim - alpha(view.subgraph, view.to_local(d.attachment_sets[j]), max_bases)
    return bound


@dataclass(frozen=True)
class EqualityCertificate:
    per_block: tuple[bool, ...]
    bound: int
    dimension: int

    @property
    def hypothesis_holds(self) -> bool:
        return all(self.per_block)

    @property
    def equality(self) -> bool | None:
        """Whether dimension equals the alpha bound; None when the hypothesis fails."""
        if not self.hypothesis_holds:
            return None
        return self.bound == self.dimension


def equality_certificate(
    g: Graph, limit: int = DEFAULT_MAX_MINIMALITY, max_bases: int = DEFAULT_MAX_BASES
) -> EqualityCertificate:
    d = decompose(g)
    per_block = []
    for j, b in enumerate(d.blocks):
        if len(b) < 2:
            per_block.append(True)
            continue
        per_block.append(is_minimal_generator_always_minimum(d.view(g, j).subgraph, limit))
    cert = EqualityCertificate(
        tuple(per_block), upper_bound_via_alpha(g, max_bases=max_bases), dim_via_decomposition(g).dimension
    )
    if cert.equality is False:
        raise CertificateError(
            f"hypothesis holds on every block but bound {cert.bound} != dimension {cert.dimension}"
        )
    return cert
