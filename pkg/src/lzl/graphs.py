"""Immutable simple undirected graphs with bitmask adjacency rows.

Vertices are 0-based internally and 1-based in the line-oriented file
format.  Adjacency rows never contain the vertex itself: reflexivity is a
game-semantics matter (the robber may stay put), not an adjacency fact.
Generators cover every family the solvers and strategies consume: paths,
cycles, complete graphs, square grids, k-ary trees, spiders, and edge
subdivisions.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Iterator, Mapping, Sequence

from .bitset import VertexSet, iter_bits
from .errors import GraphParseError, GraphValidationError, SizeCapError

#: Hard limit on graph order.  Python ints give arbitrary-width bitsets, so
#: this guards runaway constructions rather than a machine word size; the
#: exponential solvers enforce their own much smaller caps.  Large enough
#: for every verification target (ternary depth-8 trees have 9841 vertices).
DEFAULT_VERTEX_CAP = 16384

Labels = Mapping[int, Mapping[str, object]]


class Graph:
    """Connected (unless explicitly allowed otherwise) simple graph."""

    __slots__ = ("n", "adj_bits", "labels", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Labels | None = None,
        *,
        allow_disconnected: bool = False,
        vertex_cap: int = DEFAULT_VERTEX_CAP,
    ):
        if n <= 0:
            raise GraphValidationError("graph must have at least one vertex")
        if n > vertex_cap:
            raise SizeCapError("graph order", n, vertex_cap)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj_bits", tuple(rows))
        clean_labels = {
            v: dict(kv) for v, kv in (labels or {}).items() if kv
        }
        object.__setattr__(self, "labels", clean_labels)
        object.__setattr__(self, "_hash", None)
        if not allow_disconnected and not self.is_connected():
            raise GraphValidationError("graph is disconnected")

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries -------------------------------------------------

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj_bits[v])

    def degree(self, v: int) -> int:
        return self.adj_bits[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj_bits) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj_bits[u] >> (u + 1)):
                yield (u, v + u + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_bits[u] >> v) & 1 == 1

    def full_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.from_iterable(self.n, vertices)

    def label(self, v: int, key: str, default=None):
        return self.labels.get(v, {}).get(key, default)

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj_bits[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count() == self.n - 1

    def content_hash(self) -> str:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hashlib.sha256(serialize_graph(self).encode()).hexdigest()[:16]
            object.__setattr__(self, "_hash", h)
        return h

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return (
                self.n == other.n
                and self.adj_bits == other.adj_bits
                and self.labels == other.labels
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.adj_bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- file format --------------------------------------------------------


def parse_graph(
    text: str,
    *,
    allow_disconnected: bool = False,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Graph:
    """Parse the line-oriented graph format.

    ``# comment`` lines are skipped.  The header ``p <n> <m>`` precedes
    ``m`` edge lines ``e <u> <v>`` with ``1 <= u < v <= n`` and optional
    label lines ``l <v> <key>=<value>``.
    """
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    labels: dict[int, dict[str, object]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise GraphParseError("duplicate header", lineno)
            if len(parts) != 3:
                raise GraphParseError("header must be 'p <n> <m>'", lineno)
            try:
                n, declared_m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("non-integer header fields", lineno) from None
            if n <= 0 or declared_m < 0:
                raise GraphParseError("header values out of range", lineno)
            if n > vertex_cap:
                raise SizeCapError("graph order", n, vertex_cap)
        elif kind == "e":
            if n is None:
                raise GraphParseError("edge before header", lineno)
            if len(parts) != 3:
                raise GraphParseError("edge must be 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("non-integer edge endpoints", lineno) from None
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            if not (1 <= u < v <= n):
                raise GraphParseError(
                    f"edge endpoints must satisfy 1 <= u < v <= {n}", lineno
                )
            if (u, v) in seen_edges:
                raise GraphParseError(f"duplicate edge ({u}, {v})", lineno)
            seen_edges.add((u, v))
            edges.append((u - 1, v - 1))
        elif kind == "l":
            if n is None:
                raise GraphParseError("label before header", lineno)
            if len(parts) < 3 or "=" not in parts[2]:
                raise GraphParseError("label must be 'l <v> <key>=<value>'", lineno)
            try:
                v = int(parts[1])
            except ValueError:
                raise GraphParseError("non-integer label vertex", lineno) from None
            if not 1 <= v <= n:
                raise GraphParseError(f"label vertex {v} out of range", lineno)
            key, _, value = line.split(None, 2)[2].partition("=")
            labels.setdefault(v - 1, {})[key] = _parse_label_value(value)
        else:
            raise GraphParseError(f"unknown record '{kind}'", lineno)

    if n is None:
        raise GraphParseError("missing header")
    if len(edges) != declared_m:
        raise GraphParseError(
            f"header declares {declared_m} edges but {len(edges)} present"
        )
    return Graph(
        n,
        edges,
        labels,
        allow_disconnected=allow_disconnected,
        vertex_cap=vertex_cap,
    )


def _parse_label_value(value: str) -> object:
    try:
        return int(value)
    except ValueError:
        return value


def serialize_graph(g: Graph) -> str:
    """Byte-stable serialization: header, sorted edges, sorted labels."""
    lines = [f"p {g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    for v in sorted(g.labels):
        for key in sorted(g.labels[v]):
            lines.append(f"l {v + 1} {key}={g.labels[v][key]}")
    return "\n".join(lines) + "\n"


# -- generators ----------------------------------------------------------


def generate(family: str, **params) -> Graph:
    """Build a named graph family.

    Families: ``path n``, ``cycle n``, ``complete n``, ``grid n``,
    ``kary k d``, ``spider arms``.  Subdivision is the separate
    :func:`subdivide` since its base is itself a graph.
    """
    builders = {
        "path": _gen_path,
        "cycle": _gen_cycle,
        "complete": _gen_complete,
        "grid": _gen_grid,
        "kary": _gen_kary,
        "spider": _gen_spider,
    }
    if family not in builders:
        raise GraphValidationError(f"unknown family '{family}'")
    return builders[family](**params)


def _gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphValidationError("path needs n >= 1")
    labels = {i: {"pos": i + 1} for i in range(n)}
    return Graph(n, [(i, i + 1) for i in range(n - 1)], labels)


def _gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphValidationError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, edges, {i: {"pos": i + 1} for i in range(n)})


def _gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphValidationError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _gen_grid(n: int) -> Graph:
    """n-by-n grid; vertex (row, col) at index (row-1)*n + (col-1), 1-based labels."""
    if n < 1:
        raise GraphValidationError("grid needs n >= 1")
    edges = []
    labels = {}
    for r in range(n):
        for c in range(n):
            v = r * n + c
            labels[v] = {"row": r + 1, "col": c + 1}
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < n:
                edges.append((v, v + n))
    return Graph(n * n, edges, labels)


def _gen_kary(k: int, d: int) -> Graph:
    """Rooted k-ary tree of depth d: every non-leaf has exactly k children.

    Vertices are breadth-first: root 0, then each level in order.  Depth
    labels drive the level decomposition and subdivision relabeling.
    """
    if k < 1 or d < 0:
        raise GraphValidationError("kary needs k >= 1 and d >= 0")
    edges = []
    labels = {0: {"depth": 0}}
    level = [0]
    next_vertex = 1
    for depth in range(1, d + 1):
        new_level = []
        for parent in level:
            for _ in range(k):
                edges.append((parent, next_vertex))
                labels[next_vertex] = {"depth": depth}
                new_level.append(next_vertex)
                next_vertex += 1
        level = new_level
    return Graph(next_vertex, edges, labels)


def _gen_spider(arms: Sequence[int]) -> Graph:
    """Head vertex 0 with one path per arm length; head degree = #arms."""
    arms = list(arms)
    if len(arms) < 3:
        raise GraphValidationError("spider needs at least three arms")
    if any(a < 1 for a in arms):
        raise GraphValidationError("spider arm lengths must be positive")
    edges = []
    labels = {0: {"depth": 0}}
    next_vertex = 1
    for length in arms:
        prev = 0
        for step in range(1, length + 1):
            edges.append((prev, next_vertex))
            labels[next_vertex] = {"depth": step}
            prev = next_vertex
            next_vertex += 1
    return Graph(next_vertex, edges, labels)


def subdivide(base: Graph, i: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Insert exactly ``i`` new vertices on every edge of ``base``.

    When the base is fully depth-labeled with unit steps along edges (a
    rooted tree), depths are rescaled by ``i + 1`` and interpolated so the
    level structure of the result stays meaningful.
    """
    if i < 0:
        raise GraphValidationError("subdivision count must be >= 0")
    base_edges = sorted(base.edges())
    n = base.n + i * len(base_edges)
    if n > vertex_cap:
        raise SizeCapError("subdivided order", n, vertex_cap)

    depths = {v: base.label(v, "depth") for v in range(base.n)}
    tree_labeled = all(d is not None for d in depths.values()) and all(
        abs(depths[u] - depths[v]) == 1 for u, v in base_edges
    )

    edges: list[tuple[int, int]] = []
    labels: dict[int, dict[str, object]] = {}
    if tree_labeled:
        for v in range(base.n):
            labels[v] = {"depth": (i + 1) * depths[v]}
    next_vertex = base.n
    for u, v in base_edges:
        chain = [u] + list(range(next_vertex, next_vertex + i)) + [v]
        next_vertex += i
        for a, b in zip(chain, chain[1:]):
            edges.append((a, b))
        if tree_labeled:
            lo, hi = (u, v) if depths[u] < depths[v] else (v, u)
            # walk from the shallow endpoint so interpolated depths ascend
            ordered = chain if lo == u else chain[::-1]
            for step, w in enumerate(ordered[1:-1], start=1):
                labels[w] = {"depth": (i + 1) * depths[lo] + step}
    return Graph(n, edges, labels, vertex_cap=vertex_cap)


def cartesian_product(
    g: Graph, h: Graph, *, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> Graph:
    """Cartesian product: (a,x) ~ (b,y) iff (a=b and x~y) or (a~b and x=y).

    Vertex (a, x) sits at index a*h.n + x.  If both factors carry ``pos``
    labels the product is labeled with grid-style (row, col) coordinates.
    """
    n = g.n * h.n
    if n > vertex_cap:
        raise SizeCapError("product order", n, vertex_cap)
    edges = []
    for a in range(g.n):
        for x, y in h.edges():
            edges.append((a * h.n + x, a * h.n + y))
    for a, b in g.edges():
        for x in range(h.n):
            edges.append((a * h.n + x, b * h.n + x))
    labels = {}
    if all(g.label(a, "pos") for a in range(g.n)) and all(
        h.label(x, "pos") for x in range(h.n)
    ):
        for a in range(g.n):
            for x in range(h.n):
                labels[a * h.n + x] = {
                    "row": g.label(a, "pos"),
                    "col": h.label(x, "pos"),
                }
    return Graph(n, edges, labels, vertex_cap=vertex_cap)


# -- neighborhood and boundary primitives --------------------------------


def closed_nb_bits(g: Graph, bits: int) -> int:
    out = bits
    for v in iter_bits(bits):
        out |= g.adj_bits[v]
    return out


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """N[S]: S together with every vertex adjacent to S."""
    return VertexSet(g.n, closed_nb_bits(g, s.bits))


def vertex_boundary(g: Graph, s: VertexSet) -> VertexSet:
    """N[S] minus S: the vertices outside S touching it."""
    return VertexSet(g.n, closed_nb_bits(g, s.bits) & ~s.bits)


def edge_boundary_count(g: Graph, s: VertexSet) -> int:
    """Number of edges with exactly one endpoint in S."""
    return sum((g.adj_bits[v] & ~s.bits).bit_count() for v in iter_bits(s.bits))


def distances(g: Graph, v: int) -> list[int]:
    """BFS hop counts from ``v``; -1 for unreachable vertices."""
    if not 0 <= v < g.n:
        raise GraphValidationError(f"vertex {v} out of range")
    dist = [-1] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = 1 << v
    d = 0
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj_bits[u]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for u in iter_bits(frontier):
            dist[u] = d
    return dist


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.adj_bits)


def diameter(g: Graph) -> int:
    if not g.is_connected():
        raise GraphValidationError("diameter requires a connected graph")
    return max(max(distances(g, v)) for v in range(g.n))


def is_c4_free(g: Graph) -> bool:
    """True iff no two vertices share two or more common neighbors."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj_bits[u] & g.adj_bits[v]).bit_count() >= 2:
                return False
    return True


def components_bits(g: Graph, within: int) -> list[int]:
    """Connected components of the subgraph induced on mask ``within``."""
    comps = []
    remaining = within
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj_bits[v]
            frontier = nxt & within & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components_after_removal(g: Graph, v: int) -> list[VertexSet]:
    """Connected components of G - v, ordered by smallest member."""
    if not 0 <= v < g.n:
        raise GraphValidationError(f"vertex {v} out of range")
    within = ((1 << g.n) - 1) & ~(1 << v)
    return [VertexSet(g.n, c) for c in components_bits(g, within)]


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``s`` plus the old-index list (new -> old)."""
    old = s.to_list()
    index = {o: i for i, o in enumerate(old)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    labels = {index[o]: g.labels[o] for o in old if o in g.labels}
    return (
        Graph(len(old), edges, labels, allow_disconnected=True),
        old,
    )
