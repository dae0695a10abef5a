"""Seeded random instance families. Every generator returns a connected simple graph."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .constructions import ChainSpec, chain, point_attach
from .graph import Graph, components, from_edge_list

FAMILIES = ("random-connected", "unicyclic", "block-graph", "chain-of", "cactus", "attachments")


class BadConfig(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    family: str
    seed: int = 0
    n: int = 8
    p: float = 0.3
    k: int = 3
    max_order: int = 4
    parts: tuple[str, ...] = field(default=())
    odd_cycle: bool | None = None


def _relabel(n: int, edges: list[tuple[int, int]], rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return from_edge_list(n, sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    if n < 1 or not 0 <= p <= 1:
        raise BadConfig(f"random-connected needs n >= 1 and 0 <= p <= 1, got n={n}, p={p}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    comps = components(from_edge_list(n, edges))
    seen = list(comps[0])
    for comp in comps[1:]:
        edges.append((rng.choice(seen), rng.choice(comp)))
        seen.extend(comp)
    return from_edge_list(n, edges)


def unicyclic(n: int, rng: random.Random, odd: bool | None = None) -> Graph:
    """One cycle of random length with random trees hanging off it."""
    if n < 3 or (odd is False and n < 4):
        raise BadConfig(f"unicyclic graph of order {n} impossible")
    lengths = [L for L in range(3, n + 1) if odd is None or (L % 2 == 1) == odd]
    L = rng.choice(lengths)
    edges = [(i, (i + 1) % L) for i in range(L)]
    for v in range(L, n):
        edges.append((rng.randrange(v), v))
    return _relabel(n, edges, rng)


def block_graph(k: int, max_order: int, rng: random.Random, min_order: int = 2) -> Graph:
    """k clique blocks glued one at a time at random existing vertices."""
    if k < 1 or not 2 <= min_order <= max_order:
        raise BadConfig("block-graph needs k >= 1 and 2 <= min_order <= max_order")
    n = 0
    edges: list[tuple[int, int]] = []
    for b in range(k):
        t = rng.randint(min_order, max_order)
        verts = [rng.randrange(n)] if b else []
        verts += list(range(n, n + t - len(verts)))
        n += t - (1 if b else 0)
        edges += [(u, v) for i, u in enumerate(verts) for v in verts[i + 1 :]]
    return _relabel(n, edges, rng)


def cactus(n: int, rng: random.Random, max_cycle: int = 6) -> Graph:
    """Pendant edges and cycles attached at random vertices until order n."""
    if n < 1:
        raise BadConfig("cactus needs n >= 1")
    count = 1
    edges: list[tuple[int, int]] = []
    while count < n:
        v = rng.randrange(count)
        L = rng.randint(2, min(max_cycle, n - count + 1))
        ring = [v] + list(range(count, count + L - 1))
        count += L - 1
        edges += [(ring[i], ring[i + 1]) for i in range(L - 1)]
        if L >= 3:
            edges.append((ring[-1], v))
    return _relabel(n, edges, rng)


def chain_of(parts: list[Graph], rng: random.Random) -> Graph:
    links = []
    for i in range(len(parts) - 1):
        entry = links[-1][1] if links else None
        exits = [v for v in range(parts[i].n) if v != entry] or [0]
        links.append((rng.choice(exits), rng.randrange(parts[i + 1].n)))
    return chain(ChainSpec(tuple(parts), tuple(links)))[0]


def attachments(k: int, max_order: int, rng: random.Random) -> Graph:
    """k random connected parts point-attached one after another."""
    if k < 1 or max_order < 2:
        raise BadConfig("attachments needs k >= 1 and max_order >= 2")
    parts = [random_connected(rng.randint(2, max_order), 0.5, rng) for _ in range(k)]
    ids = []
    for i in range(1, k):
        j = rng.randrange(i)
        ids.append(((j, rng.randrange(parts[j].n)), (i, rng.randrange(parts[i].n))))
    g, _ = point_attach(parts, ids)
    return _relabel(g.n, g.edges(), rng)


def generate(config: GeneratorConfig) -> Graph:
    rng = random.Random(config.seed)
    fam = config.family
    if fam == "random-connected":
        return random_connected(config.n, config.p, rng)
    if fam == "unicyclic":
        return unicyclic(config.n, rng, config.odd_cycle)
    if fam == "block-graph":
        return block_graph(config.k, config.max_order, rng)
    if fam == "cactus":
        return cactus(config.n, rng)
    if fam == "attachments":
        return attachments(config.k, config.max_order, rng)
    if fam == "chain-of":
        from .dsl import build

        if len(config.parts) < 2:
            raise BadConfig("chain-of needs at least two parts")
        return chain_of([build(p) for p in config.parts], rng)
    raise BadConfig(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")

