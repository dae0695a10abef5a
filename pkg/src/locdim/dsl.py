"""A small expression language for graphs and point-attaching constructions.

Examples::

    K(5)
    join(K(1), union(K(2), K(2)))
    rooted(P(3), C(5)@0)
    rooted(P(2), [K(3)@0, C(5)@2])
    corona(P(2), [K(2), K(2)])
    bouquet([K(3), K(3)], roots=[0, 0])
    chain([K(3), K(3), K(3)], links=[(1, 2), (1, 2)])
    attach([K(3), P(3)], ids=[((0, 0), (1, 0))])
    graph{n=4; 0-1 1-2 2-3 3-0}
    file("bowtie.edges")

``#`` starts a comment; whitespace is insignificant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from . import constructions as cons
from .graph import Graph, complete, cycle, disjoint_union, from_edge_list, join, parse_edge_list, path


class DslError(ValueError):
    pass


class DslSyntaxError(DslError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        msg = f"{line}:{col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.line, self.col, self.expected = line, col, expected


class ArityError(DslError):
    pass


class UnknownIdentifier(DslError):
    pass


@dataclass(frozen=True)
class Atom:
    family: str
    order: int


@dataclass(frozen=True)
class Inline:
    n: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FileRef:
    path: str


@dataclass(frozen=True)
class Join:
    left: Node
    right: Node


@dataclass(frozen=True)
class Union_:
    left: Node
    right: Node


@dataclass(frozen=True)
class RootedUniform:
    base: Node
    factor: Node
    root: int


@dataclass(frozen=True)
class Rooted:
    base: Node
    factors: tuple[Node, ...]
    roots: tuple[int, ...]


@dataclass(frozen=True)
class Corona:
    base: Node
    factors: tuple[Node, ...]


@dataclass(frozen=True)
class Bouquet:
    parts: tuple[Node, ...]
    roots: tuple[int, ...]


@dataclass(frozen=True)
class Chain:
    parts: tuple[Node, ...]
    links: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Attach:
    parts: tuple[Node, ...]
    ids: tuple[tuple[tuple[int, int], tuple[int, int]], ...]


Node = Union[Atom, Inline, FileRef, Join, Union_, RootedUniform, Rooted, Corona, Bouquet, Chain, Attach]

NAMES = ("join", "union", "rooted", "corona", "bouquet", "chain", "attach")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<str>"[^"\n]*")
  | (?P<punct>[()\[\]{},@=;\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise DslSyntaxError(line, pos - line_start + 1, "a token", text[pos])
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class _Arg:
    """A positional argument: an expression (maybe ``@root``) or a bracketed list."""

    expr: Node | None = None
    root: int | None = None
    items: list | None = None


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: str):
        t = self.tok
        raise DslSyntaxError(t.line, t.col, expected, t.text or "end of input")

    def accept(self, text: str) -> bool:
        if self.tok.kind == "punct" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self.fail(repr(text))

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.fail("an integer")
        value = int(self.tok.text)
        self.i += 1
        return value

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "eof":
            self.fail("end of input")
        return node

    def expr(self) -> Node:
        t = self.tok
        if t.kind != "name":
            self.fail("an expression")
        self.i += 1
        if t.text in ("K", "P", "C"):
            self.expect("(")
            order = self.integer()
            self.expect(")")
            return Atom(t.text, order)
        if t.text == "graph":
            return self.inline()
        if t.text == "file":
            self.expect("(")
            if self.tok.kind != "str":
                self.fail("a quoted path")
            p = self.tok.text[1:-1]
            self.i += 1
            self.expect(")")
            return FileRef(p)
        if t.text not in NAMES:
            raise UnknownIdentifier(f"{t.line}:{t.col}: unknown identifier {t.text!r}")
        self.expect("(")
        args, kwargs = self.arguments()
        self.expect(")")
        return _build(t, args, kwargs)

    def inline(self) -> Inline:
        self.expect("{")
        if not (self.tok.kind == "name" and self.tok.text == "n"):
            self.fail("'n='")
        self.i += 1
        self.expect("=")
        n = self.integer()
        self.expect(";")
        edges = []
        while self.tok.kind == "int":
            u = self.integer()
            self.expect("-")
            edges.append((u, self.integer()))
        self.expect("}")
        return Inline(n, tuple(edges))

    def arguments(self) -> tuple[list[_Arg], dict[str, list]]:
        args: list[_Arg] = []
        kwargs: dict[str, list] = {}
        if self.tok.kind == "punct" and self.tok.text == ")":
            return args, kwargs
        while True:
            t = self.tok
            nxt = self.tokens[self.i + 1]
            if t.kind == "name" and nxt.kind == "punct" and nxt.text == "=":
                self.i += 2
                if t.text in kwargs:
                    raise ArityError(f"{t.line}:{t.col}: repeated keyword {t.text!r}")
                self.expect("[")
                kwargs[t.text] = self.items()
            elif kwargs:
                self.fail("a keyword argument")
            elif self.accept("["):
                args.append(_Arg(items=self.items()))
            else:
                expr = self.expr()
                root = self.integer() if self.accept("@") else None
                args.append(_Arg(expr, root))
            if not self.accept(","):
                return args, kwargs

    def items(self) -> list:
        out: list = []
        if self.accept("]"):
            return out
        while True:
            out.append(self.item())
            if self.accept("]"):
                return out
            self.expect(",")

    def item(self):
        if self.tok.kind == "int":
            return self.integer()
        if self.accept("("):
            parts = [self.item()]
            while self.accept(","):
                parts.append(self.item())
            self.expect(")")
            return tuple(parts)
        expr = self.expr()
        return (expr, self.integer()) if self.accept("@") else expr


def _is_node(x) -> bool:
    return isinstance(x, (Atom, Inline, FileRef, Join, Union_, RootedUniform, Rooted, Corona, Bouquet, Chain, Attach))


def _build(t: Token, args: list[_Arg], kwargs: dict[str, list]) -> Node:
    where = f"{t.line}:{t.col}: {t.text}"

    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise ArityError(f"{where}: {msg}")

    def plain(a: _Arg) -> Node:
        need(a.expr is not None and a.root is None, "expected a plain graph expression")
        return a.expr

    def node_list(items: list) -> tuple[tuple[Node, ...], list[int | None]]:
        nodes, roots = [], []
        for it in items:
            if _is_node(it):
                nodes.append(it)
                roots.append(None)
            elif isinstance(it, tuple) and len(it) == 2 and _is_node(it[0]):
                nodes.append(it[0])
                roots.append(it[1])
            else:
                need(False, f"expected graph expressions in list, got {it!r}")
        return tuple(nodes), roots

    def int_list(items: list) -> tuple[int, ...]:
        need(all(isinstance(x, int) for x in items), "expected a list of integers")
        return tuple(items)

    def pair_list(items: list) -> tuple[tuple[int, int], ...]:
        ok = all(isinstance(p, tuple) and len(p) == 2 and all(isinstance(x, int) for x in p) for p in items)
        need(ok, "expected a list of (int, int) pairs")
        return tuple(items)

    def allow(*names: str) -> None:
        extra = sorted(set(kwargs) - set(names))
        need(not extra, f"unexpected keyword {extra[:1]}")

    name = t.text
    if name in ("join", "union"):
        allow()
        need(len(args) == 2, "takes two graphs")
        left, right = plain(args[0]), plain(args[1])
        return Join(left, right) if name == "join" else Union_(left, right)
    if name == "rooted":
        allow("roots")
        need(len(args) == 2, "takes a base and factors")
        base = plain(args[0])
        if args[1].items is None:
            need(args[1].root is not None and "roots" not in kwargs, "uniform factor needs @root")
            return RootedUniform(base, args[1].expr, args[1].root)
        factors, at = node_list(args[1].items)
        roots = _merge_roots(at, kwargs.get("roots"), need)
        return Rooted(base, factors, roots)
    if name == "corona":
        allow()
        need(len(args) == 2 and args[1].items is not None, "takes a base and a factor list")
        factors, at = node_list(args[1].items)
        need(all(r is None for r in at), "corona factors take no roots")
        return Corona(plain(args[0]), factors)
    if name == "bouquet":
        allow("roots")
        need(len(args) == 1 and args[0].items is not None, "takes one list of parts")
        parts, at = node_list(args[0].items)
        return Bouquet(parts, _merge_roots(at, kwargs.get("roots"), need))
    if name == "chain":
        allow("links")
        need(len(args) == 1 and args[0].items is not None, "takes one list of parts")
        parts, at = node_list(args[0].items)
        need(all(r is None for r in at), "chain parts take no roots")
        need("links" in kwargs, "needs links=[...]")
        links = pair_list(kwargs["links"])
        need(len(links) == len(parts) - 1, f"{len(parts)} parts need {len(parts) - 1} links")
        return Chain(parts, links)
    if name == "attach":
        allow("ids")
        need(len(args) == 1 and args[0].items is not None, "takes one list of parts")
        parts, at = node_list(args[0].items)
        need(all(r is None for r in at), "attach parts take no roots")
        need("ids" in kwargs, "needs ids=[...]")
        ids = kwargs["ids"]
        ok = all(
            isinstance(p, tuple) and len(p) == 2 and len(pair_list(list(p))) == 2 for p in ids
        )
        need(ok, "ids must be ((part, vertex), (part, vertex)) pairs")
        return Attach(parts, tuple(ids))
    raise UnknownIdentifier(where)


def _merge_roots(at: list[int | None], kw: list | None, need) -> tuple[int, ...]:
    if kw is None:
        need(all(r is not None for r in at), "every part needs a root (@index or roots=[...])")
        return tuple(at)
    need(all(r is None for r in at), "give roots either with @ or roots=[...], not both")
    need(all(isinstance(x, int) for x in kw), "roots must be integers")
    need(len(kw) == len(at), f"{len(at)} parts but {len(kw)} roots")
    return tuple(kw)


def parse(text: str) -> Node:
    return _Parser(text).parse()


def _ints(xs) -> str:
    return "[" + ", ".join(str(x) for x in xs) + "]"


def _pair(p) -> str:
    return "(" + ", ".join(_pair(x) if isinstance(x, tuple) else str(x) for x in p) + ")"


def format(ast: Node) -> str:  # noqa: A001 - mirrors parse
    """Canonical text for an AST; ``parse(format(a)) == a``."""
    f = format
    if isinstance(ast, Atom):
        return f"{ast.family}({ast.order})"
    if isinstance(ast, Inline):
        edges = "".join(f" {u}-{v}" for u, v in ast.edges)
        return f"graph{{n={ast.n};{edges}}}"
    if isinstance(ast, FileRef):
        return f'file("{ast.path}")'
    if isinstance(ast, Join):
        return f"join({f(ast.left)}, {f(ast.right)})"
    if isinstance(ast, Union_):
        return f"union({f(ast.left)}, {f(ast.right)})"
    if isinstance(ast, RootedUniform):
        return f"rooted({f(ast.base)}, {f(ast.factor)}@{ast.root})"
    if isinstance(ast, Rooted):
        factors = ", ".join(f"{f(h)}@{r}" for h, r in zip(ast.factors, ast.roots))
        return f"rooted({f(ast.base)}, [{factors}])"
    if isinstance(ast, Corona):
        return f"corona({f(ast.base)}, [{', '.join(f(h) for h in ast.factors)}])"
    if isinstance(ast, Bouquet):
        return f"bouquet([{', '.join(f(p) for p in ast.parts)}], roots={_ints(ast.roots)})"
    if isinstance(ast, Chain):
        links = ", ".join(_pair(p) for p in ast.links)
        return f"chain([{', '.join(f(p) for p in ast.parts)}], links=[{links}])"
    if isinstance(ast, Attach):
        ids = ", ".join(_pair(p) for p in ast.ids)
        return f"attach([{', '.join(f(p) for p in ast.parts)}], ids=[{ids}])"
    raise TypeError(f"not a construction node: {ast!r}")


def _trivial_meta(parts: list[Graph]) -> cons.AttachmentMeta:
    return cons.AttachmentMeta(tuple(((i, v),) for i, p in enumerate(parts) for v in range(p.n)))


def evaluate(ast: Node, base_dir: str | Path = ".") -> tuple[Graph, cons.AttachmentMeta]:
    """Build the graph an AST describes.

    Parts are numbered left to right; an identified vertex keeps the index
    of its earliest original.
    """

    def g(node: Node) -> Graph:
        return evaluate(node, base_dir)[0]

    if isinstance(ast, Atom):
        build = {"K": complete, "P": path, "C": cycle}[ast.family]
        h = build(ast.order)
        return h, _trivial_meta([h])
    if isinstance(ast, Inline):
        h = from_edge_list(ast.n, ast.edges)
        return h, _trivial_meta([h])
    if isinstance(ast, FileRef):
        h = parse_edge_list((Path(base_dir) / ast.path).read_text())
        return h, _trivial_meta([h])
    if isinstance(ast, (Join, Union_)):
        left, right = g(ast.left), g(ast.right)
        op = join if isinstance(ast, Join) else disjoint_union
        return op(left, right), _trivial_meta([left, right])
    if isinstance(ast, RootedUniform):
        base = g(ast.base)
        return cons.rooted_product(cons.RootedSpec.uniform(base, g(ast.factor), ast.root))
    if isinstance(ast, Rooted):
        spec = cons.RootedSpec(g(ast.base), tuple(g(h) for h in ast.factors), ast.roots)
        return cons.rooted_product(spec)
    if isinstance(ast, Corona):
        return cons.corona(g(ast.base), [g(h) for h in ast.factors])
    if isinstance(ast, Bouquet):
        return cons.bouquet([g(p) for p in ast.parts], list(ast.roots))
    if isinstance(ast, Chain):
        return cons.chain(cons.ChainSpec(tuple(g(p) for p in ast.parts), ast.links))
    if isinstance(ast, Attach):
        return cons.point_attach([g(p) for p in ast.parts], list(ast.ids))
    raise TypeError(f"not a construction node: {ast!r}")


def build(text: str, base_dir: str | Path = ".") -> Graph:
    return evaluate(parse(text), base_dir)[0]
