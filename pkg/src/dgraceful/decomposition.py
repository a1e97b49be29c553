"""Cyclic decompositions of complete multipartite graphs from difference families.

The host ``K_{p x q}`` has vertex set ``Z_{pq}``; its parts are the cosets of
``p Z_{pq}``, so two vertices share a part iff their difference is a multiple
of ``p``. A block is stored as the image of each vertex of the base graph
(one row per block), and translation by ``g`` adds ``g`` to every entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .difference_family import DifferenceFamily, verify_df
from .graph import Graph

DEFAULT_MATERIALIZE_CAP = 512


@dataclass(frozen=True)
class MultipartiteSpec:
    parts: int
    part_size: int

    @property
    def modulus(self) -> int:
        return self.parts * self.part_size

    @property
    def edge_count(self) -> int:
        v = self.modulus
        return v * (v - self.part_size) // 2

    def part_of(self, x: int) -> int:
        return x % self.parts

    def label(self) -> str:
        return f"K_{{{self.parts}x{self.part_size}}}"


@dataclass(eq=False)
class Decomposition:
    spec: MultipartiteSpec
    graph: Graph
    base_blocks: tuple[tuple[int, ...], ...]
    blocks: np.ndarray

    @classmethod
    def from_base_blocks(cls, spec: MultipartiteSpec, graph: Graph, base_blocks) -> "Decomposition":
        base = np.asarray(base_blocks, dtype=np.int64).reshape(-1, graph.n)
        v = spec.modulus
        shifts = np.arange(v, dtype=np.int64)
        blocks = ((base[:, None, :] + shifts[None, :, None]) % v).reshape(-1, graph.n)
        return cls(spec, graph, tuple(tuple(int(x) for x in b) for b in base), blocks)

    def edge_keys(self, blocks: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
        """Per-block endpoint pairs ``(lo, hi)`` of every block edge, each of shape ``(B, e)``."""
        b = self.blocks if blocks is None else blocks
        ends = np.asarray(self.graph.edges, dtype=np.int64)
        x, y = b[:, ends[:, 0]], b[:, ends[:, 1]]
        return np.minimum(x, y), np.maximum(x, y)

    def to_dict(self) -> dict:
        return {
            "spec": {"parts": self.spec.parts, "part_size": self.spec.part_size},
            "graph": self.graph.to_dict(),
            "base_blocks": [list(b) for b in self.base_blocks],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Decomposition":
        spec = MultipartiteSpec(int(data["spec"]["parts"]), int(data["spec"]["part_size"]))
        return cls.from_base_blocks(spec, Graph.from_dict(data["graph"]), data["base_blocks"])


def expand(df: DifferenceFamily) -> Decomposition:
    """All translates of the family's maps: a cyclic decomposition of ``K_{(v/t) x t}``."""
    report = verify_df(df)
    if not report.ok:
        raise ValueError(f"not a difference family: {report.to_dict()}")
    spec = MultipartiteSpec(df.modulus // df.forbidden_order, df.forbidden_order)
    return Decomposition.from_base_blocks(spec, df.graph, df.maps)


@dataclass
class DecompositionReport:
    host_edges: int
    block_count: int
    block_edges: int
    mode: str
    uncovered: list[tuple[int, int]] = field(default_factory=list)
    over_covered: dict[tuple[int, int], int] = field(default_factory=dict)
    internal_edges: list[tuple[int, int]] = field(default_factory=list)
    non_injective_blocks: list[int] = field(default_factory=list)
    automorphism_ok: bool = True

    @property
    def duplicate_coverings(self) -> int:
        """Number of surplus coverings, summed over over-covered host edges."""
        return sum(c - 1 for c in self.over_covered.values())

    @property
    def ok(self) -> bool:
        return not (
            self.uncovered or self.over_covered or self.internal_edges or self.non_injective_blocks
        ) and self.automorphism_ok

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "host_edges": self.host_edges,
            "blocks": self.block_count,
            "block_edges": self.block_edges,
            "mode": self.mode,
            "uncovered": [list(p) for p in self.uncovered],
            "over_covered": [[a, b, c] for (a, b), c in self.over_covered.items()],
            "internal_edges": [list(p) for p in self.internal_edges],
            "non_injective_blocks": self.non_injective_blocks,
            "automorphism_ok": self.automorphism_ok,
        }


def _canonical_rows(dec: Decomposition, blocks: np.ndarray) -> np.ndarray:
    # a block is identified with its edge set; sorted edge keys give a canonical row
    lo, hi = dec.edge_keys(blocks)
    return np.sort(lo * dec.spec.modulus + hi, axis=1)


def _same_multiset(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    ua, ca = np.unique(a, axis=0, return_counts=True)
    ub, cb = np.unique(b, axis=0, return_counts=True)
    return ua.shape == ub.shape and bool(np.array_equal(ua, ub) and np.array_equal(ca, cb))


def _pairs(keys: np.ndarray, v: int) -> list[tuple[int, int]]:
    return [(int(k // v), int(k % v)) for k in keys]


def verify_decomposition(dec: Decomposition, materialize_cap: int = DEFAULT_MATERIALIZE_CAP) -> DecompositionReport:
    """Check that the blocks partition the host edge set and that ``x -> x+1`` permutes them.

    For ``v <= materialize_cap`` the host is held as a ``v x v`` count matrix;
    beyond that host edges are streamed one difference class at a time.
    """
    spec, v, p = dec.spec, dec.spec.modulus, dec.spec.parts
    blocks = dec.blocks
    report = DecompositionReport(spec.edge_count, len(blocks), len(blocks) * dec.graph.size, "explicit")

    srt = np.sort(blocks, axis=1)
    report.non_injective_blocks = [int(i) for i in np.flatnonzero((np.diff(srt, axis=1) == 0).any(axis=1))]

    lo, hi = dec.edge_keys()
    lo, hi = lo.ravel(), hi.ravel()
    proper = lo != hi
    internal = proper & ((hi - lo) % p == 0)
    report.internal_edges = sorted(set(zip(lo[internal].tolist(), hi[internal].tolist())))
    keys = (lo * v + hi)[proper & ~internal]

    if v <= materialize_cap:
        counts = np.bincount(keys, minlength=v * v).reshape(v, v)
        i, j = np.triu_indices(v, k=1)
        host = (j - i) % p != 0
        hi_, hj = i[host], j[host]
        c = counts[hi_, hj]
        report.uncovered = list(zip(hi_[c == 0].tolist(), hj[c == 0].tolist()))
        over = c > 1
        report.over_covered = {
            (int(a), int(b)): int(n) for a, b, n in zip(hi_[over], hj[over], c[over])
        }
    else:
        report.mode = "streamed"
        uniq, cnt = np.unique(keys, return_counts=True)
        report.over_covered = {pair: int(n) for pair, n in zip(_pairs(uniq[cnt > 1], v), cnt[cnt > 1])}
        uncovered: list[int] = []
        for delta in range(1, v // 2 + 1):
            if delta % p == 0:
                continue
            x = np.arange(v // 2 if 2 * delta == v else v, dtype=np.int64)
            y = (x + delta) % v
            host_keys = np.minimum(x, y) * v + np.maximum(x, y)
            pos = np.clip(np.searchsorted(uniq, host_keys), 0, max(len(uniq) - 1, 0))
            found = uniq[pos] == host_keys if len(uniq) else np.zeros(len(host_keys), dtype=bool)
            uncovered.extend(host_keys[~found].tolist())
        report.uncovered = _pairs(np.sort(np.asarray(uncovered, dtype=np.int64)), v)

    shifted = (blocks + 1) % v
    report.automorphism_ok = _same_multiset(_canonical_rows(dec, blocks), _canonical_rows(dec, shifted))
    return report


@dataclass(frozen=True)
class DecompositionSummary:
    parts: int
    part_size: int
    blocks: int
    edges_per_block: int
    orbit_lengths: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "p": self.parts,
            "q": self.part_size,
            "blocks": self.blocks,
            "edges_per_block": self.edges_per_block,
            "orbit_lengths": list(self.orbit_lengths),
        }


def block_orbits(dec: Decomposition) -> list[list[int]]:
    """Orbits of the block list under ``x -> x+1``, found by following the translation.

    A chain that leaves the block set (a damaged decomposition) ends where the
    next translate is missing.
    """
    v = dec.spec.modulus
    canon = _canonical_rows(dec, dec.blocks)
    index: dict[bytes, int] = {}
    for i, row in enumerate(canon):
        index.setdefault(row.tobytes(), i)
    nxt = _canonical_rows(dec, (dec.blocks + 1) % v)
    seen = [False] * len(canon)
    orbits = []
    for start in range(len(canon)):
        if seen[start] or index[canon[start].tobytes()] != start:
            continue
        orbit = []
        cur = start
        while cur is not None and not seen[cur]:
            seen[cur] = True
            orbit.append(cur)
            cur = index.get(nxt[cur].tobytes())
        orbits.append(orbit)
    return orbits


def decomposition_summary(dec: Decomposition) -> DecompositionSummary:
    lengths = sorted((len(o) for o in block_orbits(dec)), reverse=True)
    return DecompositionSummary(
        dec.spec.parts, dec.spec.part_size, len(dec.blocks), dec.graph.size, tuple(lengths)
    )
