"""Cyclic difference families of a graph.

A ``(v, t, G, 1)`` difference family is a list of injections ``V(G) -> Z_v``
such that the signed differences over both orientations of every edge cover
``Z_v`` minus the order-``t`` subgroup exactly once and miss the subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotBipartite
from .graph import Graph
from .labeling import Labeling, lower_part, subgroup, verify_alpha, verify_d_graceful


@dataclass(frozen=True)
class DifferenceFamily:
    modulus: int
    forbidden_order: int
    graph: Graph
    maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if self.forbidden_order < 1 or self.modulus % self.forbidden_order:
            raise ValueError(f"{self.forbidden_order} does not divide the modulus {self.modulus}")
        maps = tuple(tuple(int(x) for x in f) for f in self.maps)
        for f in maps:
            if len(f) != self.graph.n:
                raise ValueError(f"a map must have {self.graph.n} values, got {len(f)}")
            if any(not 0 <= x < self.modulus for x in f):
                raise ValueError(f"map values must lie in Z_{self.modulus}")
        object.__setattr__(self, "maps", maps)

    @property
    def forbidden_subgroup(self) -> np.ndarray:
        return subgroup(self.modulus, self.forbidden_order)

    def differences(self) -> np.ndarray:
        """Every ``f(x) - f(y)`` mod v, over all maps and both orientations of each edge."""
        if not self.maps:
            return np.zeros(0, dtype=np.int64)
        fm = np.asarray(self.maps, dtype=np.int64)
        ends = np.asarray(self.graph.edges, dtype=np.int64)
        fwd = fm[:, ends[:, 0]] - fm[:, ends[:, 1]]
        return np.concatenate([fwd.ravel(), -fwd.ravel()]) % self.modulus

    def to_dict(self) -> dict:
        return {
            "v": self.modulus,
            "forbidden_order": self.forbidden_order,
            "graph": self.graph.to_dict(),
            "maps": [list(f) for f in self.maps],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DifferenceFamily":
        return cls(
            int(data["v"]),
            int(data["forbidden_order"]),
            Graph.from_dict(data["graph"]),
            tuple(tuple(f) for f in data["maps"]),
        )


@dataclass(frozen=True)
class CoverageReport:
    under_covered: tuple[int, ...] = ()
    over_covered: dict[int, int] = field(default_factory=dict)
    subgroup_hits: dict[int, int] = field(default_factory=dict)
    non_injective_maps: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return not (self.under_covered or self.over_covered or self.subgroup_hits or self.non_injective_maps)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "under_covered": list(self.under_covered),
            "over_covered": {str(k): v for k, v in self.over_covered.items()},
            "subgroup_hits": {str(k): v for k, v in self.subgroup_hits.items()},
            "non_injective_maps": list(self.non_injective_maps),
        }


def verify_df(df: DifferenceFamily) -> CoverageReport:
    """Recompute the difference list and check the exact-cover condition residue by residue."""
    counts = np.bincount(df.differences(), minlength=df.modulus)
    in_sub = np.zeros(df.modulus, dtype=bool)
    in_sub[df.forbidden_subgroup] = True
    under = np.flatnonzero(~in_sub & (counts == 0))
    over = np.flatnonzero(~in_sub & (counts > 1))
    hits = np.flatnonzero(in_sub & (counts > 0))
    bad_maps = tuple(i for i, f in enumerate(df.maps) if len(set(f)) != len(f))
    return CoverageReport(
        tuple(int(x) for x in under),
        {int(x): int(counts[x]) for x in over},
        {int(x): int(counts[x]) for x in hits},
        bad_maps,
    )


def df_from_labeling(lab: Labeling) -> DifferenceFamily:
    """The single map ``x -> f(x)`` in ``Z_{2d(m+1)}``, relative to the subgroup of order ``2d``."""
    report = verify_d_graceful(lab)
    if not report.ok:
        raise ValueError(f"labeling is not d-graceful: {[v.kind.value for v in report.violations]}")
    return DifferenceFamily(2 * lab.d * (lab.m + 1), 2 * lab.d, lab.graph, (lab.labels,))


def df_from_alpha(lab: Labeling, n: int) -> DifferenceFamily:
    """n maps in ``Z_{2dn(m+1)}`` from an alpha-labeling.

    Map ``i`` (0-based) keeps the labels of the low colour class and shifts the
    high class by ``i * (d + e)``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    try:
        is_alpha = verify_alpha(lab)
    except NotBipartite:
        is_alpha = False
    if not is_alpha:
        raise ValueError("df_from_alpha needs a d-graceful alpha-labeling")
    low = lower_part(lab)
    shift = lab.d + lab.e
    maps = tuple(
        tuple(x if v in low else x + i * shift for v, x in enumerate(lab.labels)) for i in range(n)
    )
    return DifferenceFamily(2 * lab.d * n * (lab.m + 1), 2 * lab.d * n, lab.graph, maps)
