"""Simple graphs whose edges parameterize a toric set.

Vertices are numbered ``1..n``.  The edge order given at construction is
kept as is: edge ``k`` becomes coordinate ``t_k`` of the projective space.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        normalized = []
        for edge in self.edges:
            i, j = (int(v) for v in edge)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {{{i},{j}}} has a vertex outside 1..{self.n}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {{{i},{j}}}")
            seen.add(key)
            normalized.append(key)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def s(self) -> int:
        return len(self.edges)

    def neighbors(self) -> dict[int, list[int]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def isolated_vertices(self) -> list[int]:
        return [v for v, nb in self.neighbors().items() if not nb]

    def __str__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def graph_new(n: int, edges) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class ComponentProfile:
    """Connected components of a graph and which of them are bipartite.

    ``bipartitions[c]`` is the pair of color classes of component ``c``, or
    ``None`` when the component contains an odd cycle.
    """

    components: tuple[tuple[int, ...], ...]
    bipartitions: tuple[tuple[tuple[int, ...], tuple[int, ...]] | None, ...]

    @property
    def b0(self) -> int:
        return len(self.components)

    @property
    def gamma(self) -> int:
        return sum(1 for b in self.bipartitions if b is None)

    @property
    def bipartite(self) -> bool:
        return self.gamma == 0


def component_profile(g: Graph) -> ComponentProfile:
    """Breadth-first two-coloring of every component."""
    adj = g.neighbors()
    color: dict[int, int] = {}
    components, bipartitions = [], []
    for root in range(1, g.n + 1):
        if root in color:
            continue
        color[root] = 0
        members, ok = [root], True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    members.append(w)
                    queue.append(w)
                elif color[w] == color[u]:
                    ok = False
        members.sort()
        components.append(tuple(members))
        if ok:
            bipartitions.append((
                tuple(v for v in members if color[v] == 0),
                tuple(v for v in members if color[v] == 1),
            ))
        else:
            bipartitions.append(None)
    return ComponentProfile(tuple(components), tuple(bipartitions))


def cycle_graph(length: int) -> Graph:
    """C_n with edges {1,2}, {2,3}, ..., {n,1}."""
    if length < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {length}")
    return graph_new(length, [(i, i % length + 1) for i in range(1, length + 1)])


def path_graph(length: int) -> Graph:
    """P_n: ``length`` vertices, edges {1,2}, ..., {n-1,n}."""
    if length < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {length}")
    return graph_new(length, [(i, i + 1) for i in range(1, length)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} on classes {1..a} and {a+1..a+b}; edges ordered row by row."""
    if a < 1 or b < 1:
        raise ValueError(f"K_{{a,b}} needs a, b >= 1, got {a}, {b}")
    return graph_new(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return graph_new(g.n + h.n, list(g.edges) + [(i + g.n, j + g.n) for i, j in h.edges])


def edge_monomial_exponents(g: Graph) -> np.ndarray:
    """Row ``k`` is the 0/1 exponent vector of ``x_i x_j`` for edge ``k``."""
    out = np.zeros((g.s, g.n), dtype=np.int64)
    for k, (i, j) in enumerate(g.edges):
        out[k, i - 1] = out[k, j - 1] = 1
    return out


# -- text formats ------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n s"`` followed by ``s`` lines ``"i j"``."""
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a line 'n s'")
    n, s = (int(t) for t in rows[0])
    edges = [tuple(int(t) for t in r) for r in rows[1:]]
    if len(edges) != s or any(len(e) != 2 for e in edges):
        raise ValueError(f"edge list declares {s} edges but lists {len(edges)}")
    return graph_new(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.s}"] + [f"{i} {j}" for i, j in g.edges]) + "\n"


def parse_graph_spec(spec: str) -> Graph:
    """``cycle:N``, ``path:N``, ``kbip:A,B`` or ``@file.edges``.

    Specs joined with ``+`` give the disjoint union, e.g. ``cycle:3+cycle:4``;
    ``path:1`` is a single isolated vertex.
    """
    spec = spec.strip()
    if "+" in spec and not spec.startswith("@"):
        parts = [parse_graph_spec(p) for p in spec.split("+")]
        g = parts[0]
        for h in parts[1:]:
            g = disjoint_union(g, h)
        return g
    if spec.startswith("@"):
        return parse_edge_list(Path(spec[1:]).read_text())
    kind, _, arg = spec.partition(":")
    try:
        if kind == "cycle":
            return cycle_graph(int(arg))
        if kind == "path":
            return path_graph(int(arg))
        if kind == "kbip":
            a, b = (int(t) for t in arg.split(","))
            return complete_bipartite(a, b)
    except ValueError as exc:
        raise ValueError(f"bad graph spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown graph spec {spec!r}; use cycle:N, path:N, kbip:A,B or @file")
