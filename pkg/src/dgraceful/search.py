"""Exhaustive backtracking search for d-graceful labelings of small graphs.

Vertices are assigned in order of descending degree (ties by id) and labels
are tried in ascending order. Used labels and realized gaps are tracked as
integer bitsets; the forbidden gaps ``m+1, ..., (d-1)(m+1)`` start out set,
so a single bit test rejects a reused or forbidden gap.

The tree is split on the label of the first vertex. Branches are explored
independently (optionally in worker processes) and merged in branch order,
which reproduces the single-threaded traversal exactly, including where a
node budget or solution cap cuts it off.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .constructions import SweepBounds, construct, sweep_requests
from .errors import BudgetExceeded, NotAdmissible, NotBipartite
from .graph import Graph, bipartition
from .labeling import Labeling, forbidden_gaps, verify_alpha, verify_label_matrix

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class SearchConfig:
    graph: Graph
    d: int
    require_alpha: bool = False
    max_solutions: Optional[int] = None
    # keep a labeling only if it is lexicographically <= its complement
    symmetry_reduction: bool = False
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    @property
    def admissible(self) -> bool:
        return self.d >= 1 and self.graph.size % self.d == 0


@dataclass(frozen=True)
class SearchResult:
    solutions: list[Labeling]
    nodes_explored: int
    complete: bool

    def label_vectors(self) -> list[tuple[int, ...]]:
        return [s.labels for s in self.solutions]


@dataclass
class _Branch:
    solutions: list[tuple[int, tuple[int, ...]]]  # (node count when found, labels)
    nodes: int
    exhausted: bool


class _Stop(Exception):
    pass


def _plan(cfg: SearchConfig):
    g = cfg.graph
    e, d = g.size, cfg.d
    m = e // d
    top = d * (m + 1) - 1
    adj = g.adjacency()
    order = sorted(g.vertices, key=lambda v: (-len(adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    back = [tuple(u for u in adj[v] if pos[u] < pos[v]) for v in order]
    gaps0 = 1  # gap 0 never allowed
    for x in forbidden_gaps(d, m):
        gaps0 |= 1 << x
    parts = None
    if cfg.require_alpha:
        parts = bipartition(g)
        if parts is None:
            raise NotBipartite("alpha-labelings need a bipartite graph")
    return order, back, top, gaps0, parts


def _run_branch(cfg: SearchConfig, first_label: int) -> _Branch:
    order, back, top, gaps0, parts = _plan(cfg)
    n = cfg.graph.n
    budget = cfg.budget
    cap = cfg.max_solutions
    sym = cfg.symmetry_reduction
    lab = [-1] * n
    found: list[tuple[int, tuple[int, ...]]] = []
    nodes = 0
    side_a = None if parts is None else parts.part_a

    def accept() -> None:
        vec = tuple(lab)
        if sym and vec > tuple(top - x for x in vec):
            return
        if side_a is not None:
            a = [x for v, x in enumerate(vec) if v in side_a]
            b = [x for v, x in enumerate(vec) if v not in side_a]
            if b and not (max(a) < min(b) or max(b) < min(a)):
                return
        found.append((nodes, vec))
        if cap is not None and len(found) >= cap:
            raise _Stop

    def place(k: int, x: int, used: int, gaps: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Stop
        v = order[k]
        if sym and v == 0 and 2 * x > top:
            return
        for u in back[k]:
            gap = x - lab[u]
            if gap < 0:
                gap = -gap
            bit = 1 << gap
            if gaps & bit:
                return
            gaps |= bit
        lab[v] = x
        if k + 1 == n:
            accept()
        else:
            used |= 1 << x
            for y in range(top + 1):
                if not used >> y & 1:
                    place(k + 1, y, used, gaps)
        lab[v] = -1

    try:
        place(0, first_label, 0, gaps0)
        exhausted = True
    except _Stop:
        exhausted = False
    return _Branch(found, nodes, exhausted)


def _merge(cfg: SearchConfig, branches: list[_Branch]) -> SearchResult:
    """Replay the branches in order against a global node counter and solution cap."""
    vectors: list[tuple[int, ...]] = []
    offset = 0
    cap = cfg.max_solutions
    for br in branches:
        for stamp, vec in br.solutions:
            if offset + stamp > cfg.budget:
                return _finish(cfg, vectors, cfg.budget, False)
            vectors.append(vec)
            if cap is not None and len(vectors) >= cap:
                return _finish(cfg, vectors, offset + stamp, False)
        if offset + br.nodes > cfg.budget:
            return _finish(cfg, vectors, cfg.budget, False)
        # a branch cut short by its own budget or cap has already stopped the replay above
        assert br.exhausted
        offset += br.nodes
    return _finish(cfg, vectors, offset, True)


def _finish(cfg: SearchConfig, vectors, nodes: int, complete: bool) -> SearchResult:
    g, d = cfg.graph, cfg.d
    m = g.size // d
    vectors = sorted(vectors)
    if vectors:
        ok = verify_label_matrix(g, d, np.asarray(vectors))
        if not ok.all():
            bad = vectors[int(np.flatnonzero(~ok)[0])]
            raise AssertionError(f"search produced a labeling that fails verification: {bad}")
    sols = [Labeling(g, vec, d, m) for vec in vectors]
    if cfg.require_alpha:
        for s in sols:
            if not verify_alpha(s):
                raise AssertionError(f"search produced a non-alpha labeling: {s.labels}")
    return SearchResult(sols, nodes, complete)


def _branch_task(args):
    cfg, x = args
    return _run_branch(cfg, x)


def search_all(cfg: SearchConfig) -> SearchResult:
    """Enumerate every d-graceful labeling (alpha ones only, if requested) of ``cfg.graph``.

    ``complete`` is False when the node budget or the solution cap stopped the
    traversal before the tree was exhausted.
    """
    if not cfg.admissible:
        raise NotAdmissible(f"d={cfg.d} does not divide e={cfg.graph.size}")
    _, _, top, _, _ = _plan(cfg)
    labels = range(top + 1)
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            branches = list(pool.map(_branch_task, [(cfg, x) for x in labels]))
        return _merge(cfg, branches)
    branches = []
    spent = found = 0
    for x in labels:
        # later branches only get what is left, so a cut happens where the replay expects it
        cap = None if cfg.max_solutions is None else cfg.max_solutions - found
        br = _run_branch(replace(cfg, budget=cfg.budget - spent, max_solutions=cap), x)
        branches.append(br)
        spent += br.nodes
        found += len(br.solutions)
        if not br.exhausted:
            break
    return _merge(cfg, branches)


def exists(cfg: SearchConfig) -> bool:
    """True iff some solution exists; stops at the first one.

    A non-admissible ``d`` answers False without searching. Running out of
    budget before an answer raises :class:`BudgetExceeded`.
    """
    if not cfg.admissible:
        return False
    res = search_all(replace(cfg, max_solutions=1))
    if res.solutions:
        return True
    if not res.complete:
        raise BudgetExceeded(f"no answer within {cfg.budget} nodes")
    return False


@dataclass(frozen=True)
class CrossCheckRow:
    request: str
    solutions: int
    contains_construction: bool
    complement_closed: bool
    complete: bool

    @property
    def ok(self) -> bool:
        return self.contains_construction and self.complement_closed and self.complete


def cross_check(max_e: int = 8, bounds=None) -> list[CrossCheckRow]:
    """Search every sweep instance with at most ``max_e`` edges and compare with its construction."""
    bounds = bounds or SweepBounds(max_e=max_e, max_k_cycle4k=max_e, max_k_cycle2k_odd=max_e, max_k_ladder=max_e)
    rows = []
    for req in sweep_requests(bounds):
        g = req.graph()
        if g.size > max_e:
            continue
        lab = construct(req)
        res = search_all(SearchConfig(g, req.d))
        vecs = set(res.label_vectors())
        top = lab.max_label
        closed = all(tuple(top - x for x in vec) in vecs for vec in vecs)
        rows.append(CrossCheckRow(req.describe(), len(vecs), lab.labels in vecs, closed, res.complete))
    return rows
