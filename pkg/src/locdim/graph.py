"""Immutable simple undirected graphs on dense integer vertices."""

from __future__ import annotations

import re
import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

# Distance to an unreachable vertex. Large positive so distance vectors stay comparable.
UNREACHABLE = sys.maxsize

DEFAULT_CLIQUE_LIMIT = 32

VertexSet = frozenset


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoop(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class VertexOutOfRange(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} out of range 0..{n - 1}")
        self.u = u


class EmptySet(GraphError):
    pass


class BadOrder(GraphError):
    pass


class TooLarge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class EdgeListParseError(GraphError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise SelfLoop(u)
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise VertexOutOfRange(v, self.n)
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric adjacency {u}-{v}")

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def neighbors(self, u: int) -> list[int]:
        return sorted(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels else str(u)

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise VertexOutOfRange(u, self.n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Graph:
    if n < 0:
        raise BadOrder(f"negative order {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise SelfLoop(u)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), tuple(labels) if labels else None)


def bfs_distances(g: Graph, source: int) -> list[int]:
    g.check_vertex(source)
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_distances(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return UNREACHABLE not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class Bipartition:
    """Result of a bipartiteness test.

    On success ``coloring`` is a proper 2-coloring; otherwise ``odd_cycle``
    lists the vertices of an odd cycle in traversal order.
    """

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> Bipartition:
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in sorted(g.adj[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return Bipartition(False, odd_cycle=_tree_cycle(u, v, parent, depth))
    return Bipartition(True, coloring=tuple(color))


def _tree_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u, v are same-colored BFS-tree vertices joined by an edge.
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``s``, re-indexed in increasing vertex order.

    Returns the subgraph and ``back_map`` with ``back_map[new] == old``.
    """
    back_map = sorted(set(s))
    if not back_map:
        raise EmptySet("induced subgraph of an empty vertex set")
    for u in back_map:
        g.check_vertex(u)
    index = {old: new for new, old in enumerate(back_map)}
    adj = tuple(
        frozenset(index[v] for v in g.adj[old] if v in index) for old in back_map
    )
    labels = tuple(g.label(u) for u in back_map) if g.labels else None
    return Graph(len(back_map), adj, labels), back_map


def _shift(g: Graph, offset: int) -> list[frozenset[int]]:
    return [frozenset(v + offset for v in a) for a in g.adj]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, tuple(_shift(g, 0) + _shift(h, g.n)))


def join(g: Graph, h: Graph) -> Graph:
    left = frozenset(range(g.n))
    right = frozenset(range(g.n, g.n + h.n))
    adj = [a | right for a in _shift(g, 0)] + [a | left for a in _shift(h, g.n)]
    return Graph(g.n + h.n, tuple(adj))


def complete(n: int) -> Graph:
    if n < 1:
        raise BadOrder(f"K({n}) needs n >= 1")
    return Graph(n, tuple(frozenset(range(n)) - {u} for u in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise BadOrder(f"P({n}) needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadOrder(f"C({n}) needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def is_complete(g: Graph) -> bool:
    return all(len(a) == g.n - 1 for a in g.adj)


def clique_number(g: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> int:
    """Size of a maximum clique, by branch and bound with a coloring bound."""
    if g.n < 1:
        raise BadOrder("clique number of the empty graph")
    if g.n > limit:
        raise TooLarge(f"clique_number limited to n <= {limit}, got {g.n}")
    nbr = [sum(1 << v for v in a) for a in g.adj]
    best = 1

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # Greedy sequential coloring; returns (vertex, color) in ascending color order.
        order = []
        color = 0
        while cand:
            color += 1
            q = cand
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~low
                q &= ~nbr[v]
                cand &= ~low
                order.append((v, color))
        return order

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order = color_bound(cand)
        for v, c in reversed(order):
            if size + c <= best:
                return
            new_cand = cand & nbr[v]
            if new_cand:
                expand(size + 1, new_cand)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


_TOKEN = re.compile(r"\S+")


def parse_edge_list(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    An optional ``n <count>`` first line fixes the order. Each remaining
    line holds one ``u v`` pair; ``#`` starts a comment. Tokens that are not
    nonnegative integers are labels, indexed in order of first appearance.
    Integer tokens mixed with labels are treated as labels too.
    """
    declared: int | None = None
    pairs: list[tuple[str, str, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _TOKEN.findall(line)
        if not tokens:
            continue
        if not seen_content and tokens[0] == "n":
            seen_content = True
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise EdgeListParseError(lineno, "expected 'n <count>'")
            declared = int(tokens[1])
            continue
        seen_content = True
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, f"expected 'u v', got {line.strip()!r}")
        pairs.append((tokens[0], tokens[1], lineno))

    tokens_seen = [t for a, b, _ in pairs for t in (a, b)]
    numeric = all(t.isdigit() for t in tokens_seen)
    labels: list[str] | None = None
    if numeric:
        index = {t: int(t) for t in tokens_seen}
        n = declared if declared is not None else max(index.values(), default=-1) + 1
    else:
        index = {}
        for t in tokens_seen:
            index.setdefault(t, len(index))
        n = declared if declared is not None else len(index)
        if n < len(index):
            raise EdgeListParseError(1, f"declared n={n} but {len(index)} labels used")
        labels = list(index) + [str(i) for i in range(len(index), n)]
    edges = []
    for a, b, lineno in pairs:
        u, v = index[a], index[b]
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at {a}")
        if u >= n or v >= n:
            raise EdgeListParseError(lineno, f"vertex out of range for n={n}")
        edges.append((u, v))
    return from_edge_list(n, edges, labels)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
