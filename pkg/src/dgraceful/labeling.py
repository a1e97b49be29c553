"""d-graceful labelings and their verification.

For a graph with ``e = d * m`` edges, a d-graceful labeling is an injective
map into ``[0, d(m+1) - 1]`` whose edge gaps ``|f(x) - f(y)|`` are exactly
``[1, d(m+1) - 1]`` with the multiples ``m+1, 2(m+1), ..., (d-1)(m+1)``
removed. ``d = 1`` is the classical graceful labeling and ``d = e`` the odd
graceful one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import NotBipartite
from .graph import Bipartition, Graph, bipartition


def admissible_divisors(g: Graph | int) -> list[int]:
    """All divisors of the edge count, ascending."""
    e = g if isinstance(g, int) else g.size
    if e < 1:
        raise ValueError("edge count must be positive")
    small = [q for q in range(1, int(e**0.5) + 1) if e % q == 0]
    return sorted(set(small) | {e // q for q in small})


def forbidden_gaps(d: int, m: int) -> list[int]:
    return [j * (m + 1) for j in range(1, d)]


def required_gaps(d: int, m: int) -> list[int]:
    """``[1, d(m+1)-1]`` minus the multiples of ``m+1``; always ``d*m`` values."""
    return [x for x in range(1, d * (m + 1)) if x % (m + 1) != 0]


@dataclass(frozen=True)
class Labeling:
    """Vertex labels (indexed by vertex id) together with the parameters d and m.

    Construction only checks shape; whether the labels are actually d-graceful
    is the verifier's job, so that bad labelings can still be reported on.
    """

    graph: Graph
    labels: tuple[int, ...]
    d: int
    m: int

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if len(labels) != self.graph.n:
            raise ValueError(f"expected {self.graph.n} labels, got {len(labels)}")
        if any(x < 0 for x in labels):
            raise ValueError("labels must be non-negative")
        if self.d < 1 or self.m < 1:
            raise ValueError("d and m must be positive")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, graph: Graph, labels: Iterable[int], d: int) -> "Labeling":
        """Build a labeling with ``m = e // d``; a non-divisor d is caught on verify."""
        return cls(graph, tuple(labels), d, max(graph.size // d, 1))

    @property
    def e(self) -> int:
        return self.graph.size

    @property
    def max_label(self) -> int:
        return self.d * (self.m + 1) - 1

    def gaps(self) -> list[int]:
        f = self.labels
        return [abs(f[a] - f[b]) for a, b in self.graph.edges]

    def complement(self) -> "Labeling":
        top = self.max_label
        return Labeling(self.graph, tuple(top - x for x in self.labels), self.d, self.m)

    def to_dict(self) -> dict:
        return {"graph": self.graph.to_dict(), "d": self.d, "m": self.m, "labels": list(self.labels)}

    @classmethod
    def from_dict(cls, data: dict) -> "Labeling":
        return cls(Graph.from_dict(data["graph"]), tuple(data["labels"]), int(data["d"]), int(data["m"]))


class ViolationKind(str, Enum):
    NOT_ADMISSIBLE = "not_admissible"
    LABEL_OUT_OF_RANGE = "label_out_of_range"
    NON_INJECTIVE = "non_injective"
    DUPLICATE_GAP = "duplicate_gap"
    FORBIDDEN_GAP = "forbidden_gap"
    MISSING_GAP = "missing_gap"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "detail": self.detail}


@dataclass(frozen=True)
class DifferenceSpectrum:
    realized: tuple[int, ...]  # sorted, with multiplicity
    required: tuple[int, ...]


@dataclass(frozen=True)
class GracefulReport:
    spectrum: Optional[DifferenceSpectrum]
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


def verify_d_graceful(lab: Labeling) -> GracefulReport:
    """Check every condition of a d-graceful labeling and report each failure."""
    d, m, e = lab.d, lab.m, lab.e
    if d * m != e:
        return GracefulReport(
            None,
            (Violation(ViolationKind.NOT_ADMISSIBLE, f"d={d}, m={m} but e={e}; need d*m == e"),),
        )
    top = lab.max_label
    out: list[Violation] = []

    bad = sorted({(v, x) for v, x in enumerate(lab.labels) if x > top})
    for v, x in bad:
        out.append(Violation(ViolationKind.LABEL_OUT_OF_RANGE, f"vertex {v} has label {x} > {top}"))
    for x, c in sorted(Counter(lab.labels).items()):
        if c > 1:
            owners = [v for v, y in enumerate(lab.labels) if y == x]
            out.append(Violation(ViolationKind.NON_INJECTIVE, f"label {x} used by vertices {owners}"))

    realized = sorted(lab.gaps())
    required = required_gaps(d, m)
    counts = Counter(realized)
    forbidden = set(forbidden_gaps(d, m))
    for g, c in sorted(counts.items()):
        if c > 1:
            out.append(Violation(ViolationKind.DUPLICATE_GAP, f"gap {g} realized {c} times"))
        if g in forbidden:
            out.append(Violation(ViolationKind.FORBIDDEN_GAP, f"gap {g} is a multiple of m+1={m + 1}"))
    missing = [g for g in required if g not in counts]
    if missing:
        out.append(Violation(ViolationKind.MISSING_GAP, f"gaps never realized: {missing}"))
    # a gap of 0 or above the range implies one of the label violations above
    return GracefulReport(DifferenceSpectrum(tuple(realized), tuple(required)), tuple(out))


def is_d_graceful(lab: Labeling) -> bool:
    return verify_d_graceful(lab).ok


def _separated(labels: Sequence[int], parts: Bipartition) -> bool:
    a = [labels[v] for v in parts.part_a]
    b = [labels[v] for v in parts.part_b]
    if not a or not b:
        return True
    return max(a) < min(b) or max(b) < min(a)


def verify_alpha(lab: Labeling, parts: Optional[Bipartition] = None) -> bool:
    """True iff ``lab`` is a d-graceful labeling whose two colour classes have disjoint label ranges."""
    if parts is None:
        parts = bipartition(lab.graph)
        if parts is None:
            raise NotBipartite("the graph has an odd cycle")
    if not verify_d_graceful(lab).ok:
        return False
    return _separated(lab.labels, parts)


def lower_part(lab: Labeling) -> frozenset[int]:
    """The colour class carrying the smaller labels of an alpha-labeling."""
    parts = bipartition(lab.graph)
    if parts is None:
        raise NotBipartite("the graph has an odd cycle")
    a = max(lab.labels[v] for v in parts.part_a)
    b = min((lab.labels[v] for v in parts.part_b), default=a + 1)
    return parts.part_a if a < b else parts.part_b


def difference_counts(subset: Iterable[int], modulus: int) -> np.ndarray:
    """Multiplicity of each residue among ``x - y`` over ordered pairs of distinct members."""
    s = np.asarray(list(subset), dtype=np.int64) % modulus
    diffs = (s[:, None] - s[None, :]) % modulus
    off = ~np.eye(len(s), dtype=bool)
    return np.bincount(diffs[off], minlength=modulus)


def subgroup(modulus: int, order: int) -> np.ndarray:
    """Elements of the order-``order`` subgroup ``(modulus/order) Z_modulus``."""
    if order < 1 or modulus % order:
        raise ValueError(f"Z_{modulus} has no subgroup of order {order}")
    return np.arange(order, dtype=np.int64) * (modulus // order)


def is_relative_difference_set(subset: Iterable[int], modulus: int, subgroup_order: int, lam: int = 1) -> bool:
    """Raw check in ``Z_modulus``: differences hit each non-subgroup element ``lam`` times, the subgroup never.

    No range restriction is put on the members; they are reduced mod ``modulus``.
    Repeated residues make the check fail.
    """
    members = [x % modulus for x in subset]
    if len(set(members)) != len(members):
        return False
    counts = difference_counts(members, modulus)
    want = np.full(modulus, lam)
    want[subgroup(modulus, subgroup_order)] = 0
    return bool(np.array_equal(counts, want))


def rds_parameters(v: int, d: int) -> tuple[int, int, int, int]:
    """Group order, subgroup order, set size and lambda for a d-graceful ``K_v``."""
    return (v * (v - 1) + 2 * d, 2 * d, v, 1)


def verify_rds_view(lab: Labeling) -> bool:
    """A d-graceful labeling of ``K_v`` read as a subset of ``Z_{v(v-1)+2d}``.

    Returns False when the labeling is not d-graceful; use
    :func:`is_relative_difference_set` to test a bare subset.
    """
    g = lab.graph
    if not g.is_complete():
        raise ValueError("the relative difference set view needs a complete graph")
    if not verify_d_graceful(lab).ok:
        return False
    group, order, _, lam = rds_parameters(g.n, lab.d)
    return is_relative_difference_set(lab.labels, group, order, lam)


def verify_label_matrix(graph: Graph, d: int, labels: np.ndarray) -> np.ndarray:
    """Vectorised d-graceful test for many labelings of one graph (one per row)."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.ndim != 2 or labels.shape[1] != graph.n:
        raise ValueError(f"expected an array of shape (k, {graph.n})")
    e = graph.size
    if e % d:
        return np.zeros(len(labels), dtype=bool)
    m = e // d
    top = d * (m + 1) - 1
    if len(labels) == 0:
        return np.zeros(0, dtype=bool)
    in_range = ((labels >= 0) & (labels <= top)).all(axis=1)
    srt = np.sort(labels, axis=1)
    injective = (np.diff(srt, axis=1) != 0).all(axis=1)
    ends = np.asarray(graph.edges, dtype=np.int64)
    gaps = np.sort(np.abs(labels[:, ends[:, 0]] - labels[:, ends[:, 1]]), axis=1)
    spectrum = (gaps == np.asarray(required_gaps(d, m), dtype=np.int64)).all(axis=1)
    return in_range & injective & spectrum
