"""Local metric generators, exact minimum search, bases, rho and alpha.

A set W is a local metric generator when every edge uv has some landmark
x in W with d(u, x) != d(v, x). Each landmark x therefore "covers" a fixed
set of edges, and the minimum generator problem is a minimum set cover
over those per-vertex edge sets. Everything here works on bitmasks over the
edge list of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import (
    DEFAULT_CLIQUE_LIMIT,
    Disconnected,
    EmptySet,
    Graph,
    TooLarge,
    all_distances,
    bfs_distances,
    clique_number,
    is_bipartite,
    is_complete,
    is_connected,
)

DEFAULT_MAX_EXACT = 24
DEFAULT_MAX_BASES = 16
DEFAULT_MAX_MINIMALITY = 12

BIPARTITE_FAST_PATH = "bipartite-fast-path"
COMPLETE_FAST_PATH = "complete-fast-path"
CLIQUE_FAST_PATH = "clique-fast-path"
BRUTE_FORCE = "brute-force"
DECOMPOSITION = "decomposition"
CLOSED_FORM = "closed-form"

METHODS = (
    BIPARTITE_FAST_PATH,
    COMPLETE_FAST_PATH,
    CLIQUE_FAST_PATH,
    BRUTE_FORCE,
    DECOMPOSITION,
    CLOSED_FORM,
)


class Trivial(ValueError):
    """Local metric dimension is undefined for graphs with fewer than 2 vertices."""


class SearchLimitExceeded(TooLarge):
    pass


class Infeasible(ValueError):
    pass


@dataclass(frozen=True)
class DimResult:
    dimension: int
    witness: frozenset[int]
    method: str

    def __post_init__(self):
        if len(self.witness) != self.dimension:
            raise ValueError("witness size does not match dimension")
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")

    def as_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "method": self.method,
            "witness": sorted(self.witness),
        }


@dataclass(frozen=True)
class BasisFamily:
    bases: tuple[frozenset[int], ...]

    @property
    def dimension(self) -> int:
        return len(self.bases[0])

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.bases)

    def __len__(self) -> int:
        return len(self.bases)

    def contains_vertex(self, v: int) -> bool:
        return any(v in b for b in self.bases)

    def max_overlap(self, c: Iterable[int]) -> int:
        c = frozenset(c)
        return max(len(c & b) for b in self.bases)


class CoverTable:
    """Per-vertex bitmask of the edges that vertex distinguishes."""

    def __init__(self, g: Graph):
        self.graph = g
        self.edges = g.edges()
        self.full = (1 << len(self.edges)) - 1
        dist = all_distances(g)
        masks = []
        for x in range(g.n):
            dx = dist[x]
            mask = 0
            for i, (u, v) in enumerate(self.edges):
                if dx[u] != dx[v]:
                    mask |= 1 << i
            masks.append(mask)
        self.masks = masks

    def cover(self, w: Iterable[int]) -> int:
        out = 0
        for x in w:
            out |= self.masks[x]
        return out

    def covers(self, w: Iterable[int]) -> bool:
        return self.cover(w) == self.full

    def search(
        self, k: int, candidates: Sequence[int], covered: int = 0, first_only: bool = True
    ) -> list[tuple[int, ...]]:
        """k-subsets of ``candidates`` completing ``covered`` to a full cover.

        Subsets come out in lexicographic order of ``candidates``; with
        ``first_only`` the search stops at the first one.
        """
        full = self.full
        masks = self.masks
        cands = list(candidates)
        suffix = [0] * (len(cands) + 1)
        for i in range(len(cands) - 1, -1, -1):
            suffix[i] = suffix[i + 1] | masks[cands[i]]
        found: list[tuple[int, ...]] = []
        chosen: list[int] = []

        def dfs(start: int, cov: int, left: int) -> bool:
            if left == 0:
                if cov == full:
                    found.append(tuple(chosen))
                    return first_only
                return False
            if cov | suffix[start] != full:
                return False
            for i in range(start, len(cands) - left + 1):
                if cov | suffix[i] != full:
                    return False
                chosen.append(cands[i])
                stop = dfs(i + 1, cov | masks[cands[i]], left - 1)
                chosen.pop()
                if stop:
                    return True
            return False

        dfs(0, covered, k)
        return found


def _check_solvable(g: Graph) -> None:
    if g.n < 2:
        raise Trivial(f"graph of order {g.n} has no local metric dimension")
    if not is_connected(g):
        raise Disconnected("local metric dimension needs a connected graph")


def representation(g: Graph, u: int, w: Sequence[int]) -> tuple[int, ...]:
    g.check_vertex(u)
    return tuple(bfs_distances(g, x)[u] for x in w)


def is_local_metric_generator(g: Graph, w: Iterable[int]) -> bool:
    w = frozenset(w)
    if not w:
        raise EmptySet("empty landmark set")
    for x in w:
        g.check_vertex(x)
    if not is_connected(g):
        raise Disconnected("generator check needs a connected graph")
    return CoverTable(g).covers(w)


def local_metric_dimension(
    g: Graph, max_exact: int = DEFAULT_MAX_EXACT, fast_paths: bool = True
) -> DimResult:
    """Minimum local metric generator, with the lexicographically first witness."""
    _check_solvable(g)
    if fast_paths:
        if is_bipartite(g):
            return DimResult(1, frozenset({0}), BIPARTITE_FAST_PATH)
        if is_complete(g):
            return DimResult(g.n - 1, frozenset(range(g.n - 1)), COMPLETE_FAST_PATH)
        if 3 <= g.n <= DEFAULT_CLIQUE_LIMIT and clique_number(g) == g.n - 1:
            table = CoverTable(g)
            (witness,) = table.search(g.n - 2, range(g.n))
            return DimResult(g.n - 2, frozenset(witness), CLIQUE_FAST_PATH)
    if g.n > max_exact:
        raise SearchLimitExceeded(f"exact search limited to n <= {max_exact}, got {g.n}")
    dim, witness = _minimum_cover(CoverTable(g), range(g.n), 0)
    return DimResult(dim, frozenset(witness), BRUTE_FORCE)


def _minimum_cover(
    table: CoverTable, candidates: Sequence[int], covered: int
) -> tuple[int, tuple[int, ...]]:
    candidates = list(candidates)
    for k in range(len(candidates) + 1):
        hit = table.search(k, candidates, covered)
        if hit:
            return k, hit[0]
    raise Infeasible("no completion to a local metric generator")


def enumerate_local_metric_bases(g: Graph, max_bases: int = DEFAULT_MAX_BASES) -> BasisFamily:
    _check_solvable(g)
    if g.n > max_bases:
        raise SearchLimitExceeded(f"basis enumeration limited to n <= {max_bases}, got {g.n}")
    table = CoverTable(g)
    dim = local_metric_dimension(g, max_exact=max(max_bases, g.n)).dimension
    found = table.search(dim, range(g.n), first_only=False)
    return BasisFamily(tuple(frozenset(b) for b in found))


def rho(
    g: Graph, c: Iterable[int], max_exact: int = DEFAULT_MAX_EXACT
) -> tuple[int, frozenset[int]]:
    """Fewest extra vertices S (disjoint from c) making S | c a generator."""
    c = frozenset(c)
    for x in c:
        g.check_vertex(x)
    _check_solvable(g)
    free = [x for x in range(g.n) if x not in c]
    if len(free) > max_exact:
        raise SearchLimitExceeded(f"exact search limited to {max_exact} free vertices")
    table = CoverTable(g)
    size, witness = _minimum_cover(table, free, table.cover(c))
    return size, frozenset(witness)


def alpha(g: Graph, c: Iterable[int], max_bases: int = DEFAULT_MAX_BASES) -> int:
    c = frozenset(c)
    if not c:
        _check_solvable(g)
        return 0
    return enumerate_local_metric_bases(g, max_bases).max_overlap(c)


def minimal_generators(g: Graph, limit: int = DEFAULT_MAX_MINIMALITY) -> list[frozenset[int]]:
    """All inclusion-minimal local metric generators, by exhaustive subset scan."""
    _check_solvable(g)
    if g.n > limit:
        raise TooLarge(f"minimality scan limited to n <= {limit}, got {g.n}")
    table = CoverTable(g)
    size = 1 << g.n
    cover = [0] * size
    for s in range(1, size):
        low = s & -s
        cover[s] = cover[s ^ low] | table.masks[low.bit_length() - 1]
    out = []
    for s in range(1, size):
        if cover[s] != table.full:
            continue
        t = s
        minimal = True
        while t:
            low = t & -t
            t ^= low
            if cover[s ^ low] == table.full:
                minimal = False
                break
        if minimal:
            out.append(frozenset(i for i in range(g.n) if s >> i & 1))
    return out


def is_minimal_generator_always_minimum(
    g: Graph, limit: int = DEFAULT_MAX_MINIMALITY
) -> bool:
    sizes = {len(w) for w in minimal_generators(g, limit)}
    return len(sizes) == 1
