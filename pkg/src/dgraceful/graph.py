"""Simple undirected graphs, the standard families, and 2-colouring.

Vertices are the integers ``0..n-1``. Where the usual notation numbers the
vertices of a path or cycle as ``x_1, x_2, ...``, vertex ``x_t`` is id ``t - 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional


class FamilyTag(str, Enum):
    PATH = "path"
    STAR = "star"
    CYCLE = "cycle"
    LADDER = "ladder"
    COMPLETE = "complete"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Family:
    tag: FamilyTag
    param: Optional[int] = None


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices ``0..n-1``.

    Edges are normalised to ``(a, b)`` with ``a < b`` and kept sorted, so two
    graphs with the same edge set compare equal regardless of input order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    family: Optional[Family] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        normalised = []
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside 0..{self.n - 1}")
            normalised.append((min(a, b), max(a, b)))
        normalised.sort()
        for prev, cur in zip(normalised, normalised[1:]):
            if prev == cur:
                raise ValueError(f"duplicate edge {cur}")
        object.__setattr__(self, "edges", tuple(normalised))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def size(self) -> int:
        """Number of edges, ``e``."""
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))

    def is_complete(self) -> bool:
        return self.size == self.n * (self.n - 1) // 2

    def to_dict(self) -> dict:
        fam = self.family or Family(FamilyTag.CUSTOM)
        return {
            "vertices": self.n,
            "edges": [list(e) for e in self.edges],
            "family": {"tag": fam.tag.value, "param": fam.param},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        fam = data.get("family")
        family = None
        if fam is not None:
            family = Family(FamilyTag(fam["tag"]), fam.get("param"))
        return cls(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]), family)


@dataclass(frozen=True)
class Bipartition:
    part_a: frozenset[int]
    part_b: frozenset[int]

    def side(self, v: int) -> int:
        return 0 if v in self.part_a else 1


def custom_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, tuple(edges), Family(FamilyTag.CUSTOM))


def build_path(e: int) -> Graph:
    """Path with ``e`` edges: ``x_1 ~ x_2 ~ ... ~ x_{e+1}`` as ids ``0..e``."""
    if e < 1:
        raise ValueError("a path needs at least one edge")
    return Graph(e + 1, tuple((t, t + 1) for t in range(e)), Family(FamilyTag.PATH, e))


def build_star(e: int) -> Graph:
    """Star with centre 0 and external vertices ``1..e``."""
    if e < 1:
        raise ValueError("a star needs at least one edge")
    return Graph(e + 1, tuple((0, t) for t in range(1, e + 1)), Family(FamilyTag.STAR, e))


def build_cycle(k: int) -> Graph:
    """Cycle ``x_1 ~ ... ~ x_k ~ x_1`` as ids ``0..k-1``."""
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(k, tuple((t, (t + 1) % k) for t in range(k)), Family(FamilyTag.CYCLE, k))


def ladder_id(i: int, j: int, k: int) -> int:
    """Flattened id of ladder vertex ``(i, j)``, ``i in {0, 1}``, ``0 <= j < k``."""
    return i * k + j


def build_ladder(k: int) -> Graph:
    """The ladder ``P_2 x P_k`` on ``2k`` vertices with ``3k - 2`` edges."""
    if k < 2:
        raise ValueError("a ladder needs k >= 2")
    rungs = [(ladder_id(0, j, k), ladder_id(1, j, k)) for j in range(k)]
    rails = [(ladder_id(i, j, k), ladder_id(i, j + 1, k)) for i in (0, 1) for j in range(k - 1)]
    return Graph(2 * k, tuple(rungs + rails), Family(FamilyTag.LADDER, k))


def build_complete(v: int) -> Graph:
    if v < 2:
        raise ValueError("a complete graph needs at least 2 vertices")
    return Graph(v, tuple(combinations(range(v), 2)), Family(FamilyTag.COMPLETE, v))


def is_connected(g: Graph) -> bool:
    adj = g.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-colour a connected graph, putting vertex 0 in ``part_a``.

    Returns ``None`` if the graph has an odd cycle. Raises ``ValueError`` for a
    disconnected graph.
    """
    if not is_connected(g):
        raise ValueError("bipartition is only defined here for connected graphs")
    adj = g.adjacency()
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if colour[w] < 0:
                colour[w] = 1 - colour[u]
                queue.append(w)
            elif colour[w] == colour[u]:
                return None
    return Bipartition(
        frozenset(v for v in g.vertices if colour[v] == 0),
        frozenset(v for v in g.vertices if colour[v] == 1),
    )
