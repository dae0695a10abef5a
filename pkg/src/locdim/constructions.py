"""Point-attaching builders and closed forms for their local metric dimension.

Builders return the constructed graph together with an :class:`AttachmentMeta`
that records where every vertex came from. Closed-form evaluators decide
their case split by enumerating local metric bases of the small parts, and
each one has a matching builder so tests can run the general engine on the
same instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, complete, from_edge_list, is_bipartite, is_complete, join
from .local_metric import (
    DEFAULT_MAX_BASES,
    enumerate_local_metric_bases,
    local_metric_dimension,
    rho,
)


class ConstructionError(GraphError):
    pass


class ArityMismatch(ConstructionError):
    pass


class BadIdentification(ConstructionError):
    pass


class DisconnectedResult(ConstructionError):
    pass


class BadSpec(ConstructionError):
    pass


class MissingBase(ConstructionError):
    pass


class BadBlockOrder(ConstructionError):
    pass


Ref = tuple[int, int]


@dataclass(frozen=True)
class AttachmentMeta:
    """Provenance of constructed vertices.

    ``origins[v]`` lists every ``(part, part_vertex)`` merged into vertex v,
    in part order.
    """

    origins: tuple[tuple[Ref, ...], ...]

    @property
    def attachment_vertices(self) -> list[int]:
        return [v for v, o in enumerate(self.origins) if len(o) > 1]

    def vertex(self, part: int, v: int) -> int:
        for new, refs in enumerate(self.origins):
            if (part, v) in refs:
                return new
        raise KeyError((part, v))

    def part_vertices(self, part: int) -> list[int]:
        return sorted(new for new, refs in enumerate(self.origins) if any(p == part for p, _ in refs))


def point_attach(parts: Sequence[Graph], identifications: Sequence[tuple[Ref, Ref]]) -> tuple[Graph, AttachmentMeta]:
    """Glue ``parts`` by identifying single vertices.

    Each identification must join two parts not already connected through
    earlier identifications, which keeps the result tree-like. The merged
    vertex takes the position of the earlier of its originals; numbering
    otherwise follows the parts left to right.
    """
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    if not parts:
        raise BadSpec("no parts to attach")
    rep = list(range(total))
    part_group = list(range(len(parts)))

    def find(xs: list[int], a: int) -> int:
        while xs[a] != a:
            xs[a] = xs[xs[a]]
            a = xs[a]
        return a

    for (pa, va), (pb, vb) in identifications:
        for p, v in ((pa, va), (pb, vb)):
            if not 0 <= p < len(parts) or not 0 <= v < parts[p].n:
                raise BadIdentification(f"no vertex {v} in part {p}")
        ga, gb = find(part_group, pa), find(part_group, pb)
        if ga == gb:
            raise BadIdentification(f"parts {pa} and {pb} are already attached")
        part_group[max(ga, gb)] = min(ga, gb)
        ra, rb = find(rep, offsets[pa] + va), find(rep, offsets[pb] + vb)
        rep[max(ra, rb)] = min(ra, rb)

    if len({find(part_group, i) for i in range(len(parts))}) > 1:
        raise DisconnectedResult("identifications leave the parts disconnected")

    roots = sorted({find(rep, a) for a in range(total)})
    new_index = {r: i for i, r in enumerate(roots)}
    origins: list[list[Ref]] = [[] for _ in roots]
    edges = []
    for i, p in enumerate(parts):
        for v in range(p.n):
            origins[new_index[find(rep, offsets[i] + v)]].append((i, v))
        for u, v in p.edges():
            edges.append(
                (new_index[find(rep, offsets[i] + u)], new_index[find(rep, offsets[i] + v)])
            )
    g = from_edge_list(len(roots), edges)
    return g, AttachmentMeta(tuple(tuple(o) for o in origins))


@dataclass(frozen=True)
class RootedSpec:
    base: Graph
    factors: tuple[Graph, ...]
    roots: tuple[int, ...]

    def __post_init__(self):
        if len(self.factors) != len(self.roots):
            raise ArityMismatch("one root per factor")
        for h, r in zip(self.factors, self.roots):
            if h.n < 1 or not 0 <= r < h.n:
                raise BadSpec(f"root {r} not in factor of order {h.n}")

    @classmethod
    def uniform(cls, base: Graph, h: Graph, root: int) -> RootedSpec:
        return cls(base, (h,) * base.n, (root,) * base.n)


def rooted_product(spec: RootedSpec) -> tuple[Graph, AttachmentMeta]:
    base = spec.base
    if len(spec.factors) != base.n:
        raise ArityMismatch(f"{len(spec.factors)} factors for a base of order {base.n}")
    ids = [((0, i), (i + 1, r)) for i, r in enumerate(spec.roots)]
    return point_attach([base, *spec.factors], ids)


def apex_join(h: Graph) -> Graph:
    """K_1 + h with the apex at index 0."""
    return join(complete(1), h)


def corona(base: Graph, factors: Sequence[Graph]) -> tuple[Graph, AttachmentMeta]:
    if len(factors) != base.n:
        raise ArityMismatch(f"{len(factors)} factors for a base of order {base.n}")
    parts = [base] + [apex_join(h) for h in factors]
    ids = [((0, i), (i + 1, 0)) for i in range(base.n)]
    return point_attach(parts, ids)


def bouquet(parts: Sequence[Graph], roots: Sequence[int]) -> tuple[Graph, AttachmentMeta]:
    if len(parts) != len(roots):
        raise ArityMismatch("one root per part")
    if len(parts) < 2:
        raise ArityMismatch("a bouquet needs at least two parts")
    ids = [((0, roots[0]), (i, roots[i])) for i in range(1, len(parts))]
    return point_attach(parts, ids)


@dataclass(frozen=True)
class ChainSpec:
    """Parts glued end to end.

    ``links[i] = (a, b)`` identifies vertex a of part i (its exit y_i) with
    vertex b of part i+1 (its entry x_{i+1}).
    """

    parts: tuple[Graph, ...]
    links: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise BadSpec("a chain needs at least two parts")
        if len(self.links) != len(self.parts) - 1:
            raise BadSpec(f"{len(self.parts)} parts need {len(self.parts) - 1} links")
        for i, (a, b) in enumerate(self.links):
            if not 0 <= a < self.parts[i].n or not 0 <= b < self.parts[i + 1].n:
                raise BadSpec(f"link {i} refers to a missing vertex")
        for j in range(1, len(self.parts) - 1):
            if self.entry(j) == self.exit(j) and self.parts[j].n > 1:
                raise BadSpec(f"part {j} enters and exits at the same vertex")

    def entry(self, j: int) -> int | None:
        return self.links[j - 1][1] if j > 0 else None

    def exit(self, j: int) -> int | None:
        return self.links[j][0] if j < len(self.parts) - 1 else None


def chain(spec: ChainSpec) -> tuple[Graph, AttachmentMeta]:
    ids = [((i, a), (i + 1, b)) for i, (a, b) in enumerate(spec.links)]
    return point_attach(spec.parts, ids)


def _dim(h: Graph, max_bases: int) -> int:
    return local_metric_dimension(h, max_exact=max(max_bases, 24)).dimension


def _root_in_basis(h: Graph, v: int, max_bases: int) -> bool:
    return enumerate_local_metric_bases(h, max_bases).contains_vertex(v)


def closed_form_rooted_uniform(
    n: int, h: Graph, v: int, base: Graph | None = None, max_bases: int = DEFAULT_MAX_BASES
) -> int:
    """Local metric dimension of the rooted product with n copies of (h, v)."""
    h.check_vertex(v)
    if is_bipartite(h):
        if base is None:
            raise MissingBase("bipartite factors reduce to the base graph, which was not given")
        return _dim(base, max_bases)
    d = _dim(h, max_bases)
    if n >= 2 and _root_in_basis(h, v, max_bases):
        return n * (d - 1)
    return n * d


def closed_form_rooted(spec: RootedSpec, max_bases: int = DEFAULT_MAX_BASES) -> int:
    """Per-factor sum for rooted products whose factors are all bipartite or all not."""
    n = spec.base.n
    flags = [not is_bipartite(h) for h in spec.factors]
    if not any(flags):
        return _dim(spec.base, max_bases)
    if not all(flags):
        raise BadSpec("mixed bipartite and non-bipartite factors need the general engine")
    if n == 1:
        return _dim(spec.factors[0], max_bases)
    return sum(
        _dim(h, max_bases) - _root_in_basis(h, r, max_bases)
        for h, r in zip(spec.factors, spec.roots)
    )


def rooted_bounds(n: int, h: Graph) -> tuple[int, int]:
    if is_complete(h):
        return n, n * (h.n - 2)
    return n, n * (h.n - 3)


def _corona_factor(h: Graph, max_bases: int) -> tuple[int, bool]:
    if h.m == 0:
        raise BadSpec("corona factors must have at least one edge")
    k1h = apex_join(h)
    return _dim(k1h, max_bases), _root_in_basis(k1h, 0, max_bases)


def closed_form_corona_uniform(n: int, h: Graph, max_bases: int = DEFAULT_MAX_BASES) -> int:
    d, apex_in_basis = _corona_factor(h, max_bases)
    if n >= 2 and apex_in_basis:
        return n * (d - 1)
    return n * d


def closed_form_corona(factors: Sequence[Graph], max_bases: int = DEFAULT_MAX_BASES) -> int:
    """Sum over factors of dim(K_1 + H_j) minus apex basis membership; base order >= 2."""
    if len(factors) < 2:
        raise BadSpec("the per-factor corona sum needs a base of order >= 2")
    total = 0
    for h in factors:
        d, apex_in_basis = _corona_factor(h, max_bases)
        total += d - apex_in_basis
    return total


def closed_form_block_graph(blocks: Sequence[tuple[int, int, bool]]) -> int:
    """Block graph with clique blocks of order >= 3.

    Each entry is ``(order, cut vertices in block, every vertex is a cut vertex)``.
    """
    total = 0
    for t, c, all_cut in blocks:
        if t < 3:
            raise BadBlockOrder(f"block of order {t}; use the general engine")
        if c > t or (all_cut and c != t):
            raise BadSpec(f"inconsistent block metadata {(t, c, all_cut)}")
        total += t - 1 - (t - 1 if all_cut else c)
    return total


def block_graph_profile(g: Graph) -> list[tuple[int, int, bool]]:
    """Closed-form metadata for a block graph, read off its block decomposition."""
    from .decomposition import blocks as block_split
    from .graph import induced_subgraph

    d = block_split(g)
    out = []
    for b in d.blocks:
        if not is_complete(induced_subgraph(g, b)[0]):
            raise BadSpec("not a block graph")
        c = len(b & d.cut_vertices)
        out.append((len(b), c, c == len(b)))
    return out


def closed_form_bouquet(
    parts: Sequence[Graph], roots: Sequence[int], max_bases: int = DEFAULT_MAX_BASES
) -> int:
    """Sum over non-bipartite parts of dim minus the root discount.

    A part's root counts as constrained only when some other part is
    non-bipartite; otherwise nothing hangs off the root that could stand in
    for it.
    """
    if len(parts) != len(roots) or len(parts) < 2:
        raise ArityMismatch("a bouquet needs at least two parts with one root each")
    flags = [not is_bipartite(p) for p in parts]
    if not any(flags):
        return 1
    total = 0
    for j, (p, r) in enumerate(zip(parts, roots)):
        if not flags[j]:
            continue
        constrained = sum(flags) > 1
        total += _dim(p, max_bases) - (constrained and _root_in_basis(p, r, max_bases))
    return total


def bouquet_reading_conflicts(
    parts: Sequence[Graph], roots: Sequence[int], max_bases: int = DEFAULT_MAX_BASES
) -> list[int]:
    """Parts where a discount for root basis membership alone would differ.

    This happens exactly when a part is the only non-bipartite one and its
    root lies in some local metric basis.
    """
    flags = [not is_bipartite(p) for p in parts]
    if sum(flags) != 1:
        return []
    j = flags.index(True)
    return [j] if _root_in_basis(parts[j], roots[j], max_bases) else []


# Rule tags for the per-part chain evaluation.
FIRST_REPLACEABLE = "first-replaceable"
FIRST_FIXED = "first-not-replaceable"
LAST_REPLACEABLE = "last-replaceable"
LAST_FIXED = "last-not-replaceable"
MIDDLE_NEITHER = "middle-neither"
MIDDLE_BOTH = "middle-simultaneous"
MIDDLE_ONE = "middle-one"
CHAIN_RULES = (
    FIRST_REPLACEABLE,
    FIRST_FIXED,
    LAST_REPLACEABLE,
    LAST_FIXED,
    MIDDLE_NEITHER,
    MIDDLE_BOTH,
    MIDDLE_ONE,
)


@dataclass(frozen=True)
class ChainPart:
    index: int
    rho: int
    rule: str


def chain_rhos(spec: ChainSpec, max_bases: int = DEFAULT_MAX_BASES) -> list[ChainPart]:
    """Per-part rho for every non-bipartite part of a chain, with the rule applied.

    An endpoint is replaceable when some basis of its part contains it and a
    non-bipartite part lies beyond it. Middle parts with neither endpoint
    replaceable are resolved by an exact rho computation.
    """
    parts = spec.parts
    k = len(parts)
    flags = [not is_bipartite(p) for p in parts]
    out = []
    for j, p in enumerate(parts):
        if not flags[j]:
            continue
        d = _dim(p, max_bases)
        family = enumerate_local_metric_bases(p, max_bases)
        x, y = spec.entry(j), spec.exit(j)
        x_live = x is not None and any(flags[:j])
        y_live = y is not None and any(flags[j + 1 :])
        x_rep = x_live and family.contains_vertex(x)
        y_rep = y_live and family.contains_vertex(y)
        if j == 0:
            out.append(ChainPart(j, d - 1, FIRST_REPLACEABLE) if y_rep else ChainPart(j, d, FIRST_FIXED))
        elif j == k - 1:
            out.append(ChainPart(j, d - 1, LAST_REPLACEABLE) if x_rep else ChainPart(j, d, LAST_FIXED))
        elif x_rep and y_rep and any(x in b and y in b for b in family):
            out.append(ChainPart(j, d - 2, MIDDLE_BOTH))
        elif x_rep or y_rep:
            out.append(ChainPart(j, d - 1, MIDDLE_ONE))
        else:
            constrained = {v for v, live in ((x, x_live), (y, y_live)) if live}
            out.append(ChainPart(j, rho(p, constrained)[0], MIDDLE_NEITHER))
    return out


def closed_form_chain(spec: ChainSpec, max_bases: int = DEFAULT_MAX_BASES) -> int:
    rhos = chain_rhos(spec, max_bases)
    if not rhos:
        return 1
    return sum(part.rho for part in rhos)
