"""Random construction ASTs: syntactic ones for round trips, evaluable ones for building."""

import random

from hypothesis import strategies as st

from locdim import dsl

FAMILIES = ("K", "P", "C")


def _atom(rng):
    fam = rng.choice(FAMILIES)
    return dsl.Atom(fam, rng.randint(3 if fam == "C" else 1, 6))


def _leaf(rng):
    roll = rng.random()
    if roll < 0.7:
        return _atom(rng)
    if roll < 0.9:
        n = rng.randint(1, 6)
        edges = tuple((rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 5)))
        return dsl.Inline(n, edges)
    return dsl.FileRef(rng.choice(["a.edges", "dir/b.txt", "x y.el"]))


def random_ast(rng: random.Random, depth: int = 4):
    """Any syntactically valid AST of nesting depth at most ``depth``."""
    if depth <= 1 or rng.random() < 0.25:
        return _leaf(rng)

    def sub():
        return random_ast(rng, depth - 1)

    def some(lo=1, hi=3):
        return tuple(sub() for _ in range(rng.randint(lo, hi)))

    def ints(k):
        return tuple(rng.randint(0, 9) for _ in range(k))

    kind = rng.randrange(8)
    if kind == 0:
        return dsl.Join(sub(), sub())
    if kind == 1:
        return dsl.Union_(sub(), sub())
    if kind == 2:
        return dsl.RootedUniform(sub(), sub(), rng.randint(0, 9))
    if kind == 3:
        factors = some()
        return dsl.Rooted(sub(), factors, ints(len(factors)))
    if kind == 4:
        return dsl.Corona(sub(), some())
    if kind == 5:
        parts = some()
        return dsl.Bouquet(parts, ints(len(parts)))
    if kind == 6:
        parts = some()
        return dsl.Chain(parts, tuple(zip(ints(len(parts) - 1), ints(len(parts) - 1))))
    parts = some()
    ids = tuple(((rng.randint(0, 3), rng.randint(0, 9)), (rng.randint(0, 3), rng.randint(0, 9))) for _ in range(rng.randint(0, 3)))
    return dsl.Attach(parts, ids)


@st.composite
def asts(draw, depth: int = 4):
    return random_ast(random.Random(draw(st.integers(0, 2**32 - 1))), depth)


def _order(node) -> int:
    return dsl.evaluate(node)[0].n


def valid_ast(rng: random.Random, depth: int = 3, budget: int = 40):
    """An evaluable AST whose graph has at most about ``budget`` vertices."""
    if depth <= 1 or rng.random() < 0.3:
        fam = rng.choice(FAMILIES)
        return dsl.Atom(fam, rng.randint(3 if fam == "C" else 1, 5))
    kind = rng.randrange(7)
    small = budget // 3

    def sub(b=small):
        return valid_ast(rng, depth - 1, max(b, 4))

    if kind == 0:
        return dsl.Join(sub(), sub())
    if kind == 1:
        # keep the result connected: a union always goes under a join
        return dsl.Join(dsl.Atom("K", 1), dsl.Union_(sub(), sub()))
    if kind == 2:
        base = dsl.Atom("P", rng.randint(1, 3))
        factor = sub(budget // 4)
        return dsl.RootedUniform(base, factor, rng.randrange(_order(factor)))
    if kind == 3:
        base = dsl.Atom(rng.choice("KP"), rng.randint(1, 3))
        factors = tuple(sub(budget // 4) for _ in range(base.order))
        return dsl.Rooted(base, factors, tuple(rng.randrange(_order(h)) for h in factors))
    if kind == 4:
        base = dsl.Atom("P", rng.randint(1, 3))
        return dsl.Corona(base, tuple(sub(budget // 4) for _ in range(base.order)))
    parts = tuple(sub() for _ in range(rng.randint(2, 3)))
    orders = [_order(p) for p in parts]
    if kind == 5:
        return dsl.Bouquet(parts, tuple(rng.randrange(k) for k in orders))
    links = []
    for i in range(len(parts) - 1):
        entry = links[-1][1] if links else None
        exits = [v for v in range(orders[i]) if v != entry] or [0]
        links.append((rng.choice(exits), rng.randrange(orders[i + 1])))
    if orders[1:-1] and min(orders[1:-1]) < 2:
        return dsl.Bouquet(parts, tuple(0 for _ in parts))
    return dsl.Chain(parts, tuple(links))
