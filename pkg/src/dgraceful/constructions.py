"""Explicit d-graceful (alpha-)labelings for paths, stars, even cycles and ladders.

The formulas are written against the 1-based vertex names ``x_1, x_2, ...``
and stored at id ``t - 1``. Every piecewise branch is an inclusive index
range that is allowed to be empty, which is how vacuous branches (such as the
third even-index branch of the ``C_{2k}`` labeling when ``t = 4``) disappear.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import NotAdmissible, VerificationError
from .graph import Graph, build_cycle, build_ladder, build_path, build_star, ladder_id
from .labeling import Labeling, admissible_divisors, required_gaps, verify_alpha, verify_d_graceful


def _span(lo: int, hi: int) -> range:
    """Inclusive integer interval ``[lo, hi]``; empty when ``hi < lo``."""
    return range(lo, hi + 1)


class _OneBased:
    """Collects ``f(x_t)`` assignments and turns them into an id-indexed tuple."""

    def __init__(self, n: int):
        self.n = n
        self.values: dict[int, int] = {}

    def __setitem__(self, t: int, value: int) -> None:
        if not 1 <= t <= self.n:
            raise IndexError(f"x_{t} is outside x_1..x_{self.n}")
        if t in self.values:
            raise VerificationError(f"x_{t} assigned twice")
        self.values[t] = value

    def labels(self) -> tuple[int, ...]:
        missing = [t for t in range(1, self.n + 1) if t not in self.values]
        if missing:
            raise VerificationError(f"no label assigned to x_{missing[0]}")
        return tuple(self.values[t] for t in range(1, self.n + 1))


def _checked(lab: Labeling, alpha: bool) -> Labeling:
    report = verify_d_graceful(lab)
    if not report.ok:
        raise VerificationError(f"construction failed verification: {report.violations}")
    if alpha and not verify_alpha(lab):
        raise VerificationError("construction is not an alpha-labeling")
    return lab


def _require_divisor(e: int, d: int) -> int:
    if d < 1 or e % d:
        raise NotAdmissible(f"d={d} does not divide e={e}")
    return e // d


def path_labels(e: int, d: int) -> tuple[int, ...]:
    m = _require_divisor(e, d)
    top = d * (m + 1)
    f = _OneBased(e + 1)
    if m % 2 == 0:
        half = m // 2
        for i in _span(0, d * half):
            f[2 * i + 1] = i
        for s in range(d):
            for i in _span(s * half + 1, (s + 1) * half):
                f[2 * i] = top - i - s
        return f.labels()

    # m odd: the odd-index blocks are [0,(m-1)/2] then [((2s-1)m+1)/2, ((2s+1)m-1)/2]
    # and the even-index blocks are [sm+1, (s+1)m], the last one cut short.
    last_odd = (d * m - 1) // 2 if d % 2 else d * m // 2
    last_even = (d * m + 1) // 2 if d % 2 else d * m // 2
    shifts = (d - 1) // 2 if d % 2 else d // 2
    for s in range(shifts + 1):
        lo = 0 if s == 0 else ((2 * s - 1) * m + 1) // 2
        hi = min(((2 * s + 1) * m - 1) // 2, last_odd)
        for i in _span(lo, hi):
            f[2 * i + 1] = i + s
    s = 0
    while s * m + 1 <= last_even:
        for i in _span(s * m + 1, min((s + 1) * m, last_even)):
            f[2 * i] = top - i - s
        s += 1
    return f.labels()


def label_path(e: int, d: int) -> Labeling:
    """d-graceful alpha-labeling of the path with ``e`` edges, for any divisor ``d`` of ``e``."""
    labels = path_labels(e, d)
    return _checked(Labeling(build_path(e), labels, d, e // d), alpha=True)


def label_star(e: int, d: int) -> Labeling:
    """Centre gets 0; the external vertices take the required gaps in increasing order."""
    m = _require_divisor(e, d)
    labels = (0, *required_gaps(d, m))
    return _checked(Labeling(build_star(e), labels, d, m), alpha=True)


def label_cycle_4k_d2(k: int) -> Labeling:
    """2-graceful alpha-labeling of ``C_{4k}``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    f = _OneBased(4 * k)
    for i in _span(0, 2 * k - 1):
        f[2 * i + 1] = i
    for i in _span(1, k):
        f[2 * i] = 4 * k + 2 - i
    for i in _span(k + 1, 2 * k):
        f[2 * i] = 4 * k - i
    return _checked(Labeling(build_cycle(4 * k), f.labels(), 2, 2 * k), alpha=True)


def label_cycle_4k_d4(k: int) -> Labeling:
    """4-graceful alpha-labeling of ``C_{4k}``; separate formulas for k even and k odd."""
    if k < 1:
        raise ValueError("k must be at least 1")
    f = _OneBased(4 * k)
    if k % 2 == 0:
        for i in _span(0, 3 * k // 2 - 1):
            f[2 * i + 1] = i
        for i in _span(3 * k // 2, 2 * k - 1):
            f[2 * i + 1] = i + 1
        for i in _span(1, k // 2):
            f[2 * i] = 4 * k + 4 - i
        for i in _span(k // 2 + 1, k):
            f[2 * i] = 4 * k + 3 - i
        for i in _span(k + 1, 2 * k):
            f[2 * i] = 4 * k + 1 - i
    else:
        for i in _span(0, (k - 1) // 2):
            f[2 * i + 1] = i
        for i in _span((k + 1) // 2, 2 * k - 1):
            f[2 * i + 1] = i + 1
        for i in _span(1, k):
            f[2 * i] = 4 * k + 4 - i
        for i in _span(k + 1, (3 * k - 1) // 2):
            f[2 * i] = 4 * k + 2 - i
        for i in _span((3 * k + 1) // 2, 2 * k):
            f[2 * i] = 4 * k + 1 - i
    return _checked(Labeling(build_cycle(4 * k), f.labels(), 4, k), alpha=True)


SMALL_ODD_CYCLES = {
    3: (0, 5, 2, 3, 1, 7),
    5: (0, 11, 1, 3, 7, 4, 5, 10, 2, 9),
    7: (0, 15, 1, 14, 11, 4, 10, 5, 7, 6, 2, 13, 3, 12),
}


def _cycle_2k_k1mod4(k: int) -> tuple[int, ...]:
    t = (k - 1) // 2  # even, >= 4
    h = t // 2
    f = _OneBased(2 * k)
    for i in _span(0, h):
        f[2 * i + 1] = i
    for i in _span(h + 1, t):
        f[2 * i + 1] = 7 * h + 3 - i
    for i in _span(t + 1, t + t // 4):
        f[2 * i + 1] = 3 * t + 2 - i
    for i in _span(t + t // 4 + 1, 3 * h):
        f[2 * i + 1] = t + 2 + i
    for i in _span(3 * h + 1, 2 * t):
        f[2 * i + 1] = i - t

    for i in _span(1, h):
        f[2 * i] = 4 * t + 4 - i
    for i in _span(h + 1, t + 1):
        f[2 * i] = h + i
    for i in _span(t + 2, t + (t + 2) // 4):
        f[2 * i] = t + 1 + i
    for i in _span(t + (t + 2) // 4 + 1, 3 * h):
        f[2 * i] = 3 * t + 2 - i
    for i in _span(3 * h + 1, 2 * t + 1):
        f[2 * i] = 5 * t + 4 - i
    return f.labels()


def _cycle_2k_k3mod4(k: int) -> tuple[int, ...]:
    t = (k - 1) // 2  # odd, >= 5
    f = _OneBased(2 * k)
    for i in _span(0, (t - 1) // 2):
        f[2 * i + 1] = i
    for i in _span((t + 1) // 2, t):
        f[2 * i + 1] = (7 * t + 5) // 2 - i
    for i in _span(t + 1, t + (t + 1) // 4):
        f[2 * i + 1] = 3 * t + 2 - i
    for i in _span(t + (t + 1) // 4 + 1, (3 * t - 1) // 2):
        f[2 * i + 1] = t + 2 + i
    for i in _span((3 * t + 1) // 2, 2 * t):
        f[2 * i + 1] = i - t

    for i in _span(1, (t + 1) // 2):
        f[2 * i] = 4 * t + 4 - i
    for i in _span((t + 3) // 2, t + 1):
        f[2 * i] = (t - 1) // 2 + i
    for i in _span(t + 2, t + (t + 3) // 4):
        f[2 * i] = t + 1 + i
    for i in _span(t + (t + 3) // 4 + 1, (3 * t + 1) // 2):
        f[2 * i] = 3 * t + 2 - i
    for i in _span((3 * t + 3) // 2, 2 * t + 1):
        f[2 * i] = 5 * t + 4 - i
    return f.labels()


def label_cycle_2k_odd_d2(k: int) -> Labeling:
    """2-graceful labeling of ``C_{2k}`` for odd ``k >= 3`` (not claimed to be alpha)."""
    if k % 2 == 0 or k <= 1:
        raise ValueError(f"k must be odd and at least 3, got {k}")
    if k in SMALL_ODD_CYCLES:
        labels = SMALL_ODD_CYCLES[k]
    elif k % 4 == 1:
        labels = _cycle_2k_k1mod4(k)
    else:
        labels = _cycle_2k_k3mod4(k)
    return _checked(Labeling(build_cycle(2 * k), labels, 2, k), alpha=False)


def label_ladder_d2(k: int) -> Labeling:
    """2-graceful alpha-labeling of the ladder ``P_2 x P_k``; exists only for even k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    e = 3 * k - 2
    if e % 2:
        raise NotAdmissible(f"2 does not divide e=3k-2={e} for odd k={k}")
    labels = [0] * (2 * k)
    for i in (0, 1):
        for j in range(k):
            if (i + j) % 2 == 0:
                value = j
            elif j < k // 2:
                value = 3 * k - 2 * j - 1
            else:
                value = 3 * k - 2 * j - 2
            labels[ladder_id(i, j, k)] = value
    return _checked(Labeling(build_ladder(k), tuple(labels), 2, e // 2), alpha=True)


class ConstructionFamily(str, Enum):
    PATH = "path"
    STAR = "star"
    CYCLE4K_D2 = "cycle4k-d2"
    CYCLE4K_D4 = "cycle4k-d4"
    CYCLE2K_ODD_D2 = "cycle2k-odd"
    LADDER_D2 = "ladder"

    @property
    def fixed_d(self) -> int | None:
        return _FIXED_D.get(self)

    @property
    def claims_alpha(self) -> bool:
        return self is not ConstructionFamily.CYCLE2K_ODD_D2


_FIXED_D = {
    ConstructionFamily.CYCLE4K_D2: 2,
    ConstructionFamily.CYCLE4K_D4: 4,
    ConstructionFamily.CYCLE2K_ODD_D2: 2,
    ConstructionFamily.LADDER_D2: 2,
}


@dataclass(frozen=True)
class ConstructionRequest:
    family: ConstructionFamily
    size_param: int  # e for paths and stars, k otherwise
    d: int

    def graph(self) -> Graph:
        fam, p = self.family, self.size_param
        if fam is ConstructionFamily.PATH:
            return build_path(p)
        if fam is ConstructionFamily.STAR:
            return build_star(p)
        if fam in (ConstructionFamily.CYCLE4K_D2, ConstructionFamily.CYCLE4K_D4):
            return build_cycle(4 * p)
        if fam is ConstructionFamily.CYCLE2K_ODD_D2:
            return build_cycle(2 * p)
        return build_ladder(p)

    def describe(self) -> str:
        key = "e" if self.family in (ConstructionFamily.PATH, ConstructionFamily.STAR) else "k"
        return f"{self.family.value}({key}={self.size_param}, d={self.d})"


def construct(req: ConstructionRequest) -> Labeling:
    """Dispatch a request to its construction. Every result is verified before it is returned."""
    fam = ConstructionFamily(req.family)
    fixed = fam.fixed_d
    if fixed is not None and req.d != fixed:
        raise NotAdmissible(f"{fam.value} is only constructed for d={fixed}, not d={req.d}")
    p = req.size_param
    if fam is ConstructionFamily.PATH:
        return label_path(p, req.d)
    if fam is ConstructionFamily.STAR:
        return label_star(p, req.d)
    if fam is ConstructionFamily.CYCLE4K_D2:
        return label_cycle_4k_d2(p)
    if fam is ConstructionFamily.CYCLE4K_D4:
        return label_cycle_4k_d4(p)
    if fam is ConstructionFamily.CYCLE2K_ODD_D2:
        return label_cycle_2k_odd_d2(p)
    return label_ladder_d2(p)


@dataclass(frozen=True)
class SweepBounds:
    max_e: int = 60  # paths and stars
    max_k_cycle4k: int = 25
    max_k_cycle2k_odd: int = 49
    max_k_ladder: int = 30


def sweep_requests(bounds: SweepBounds = SweepBounds()) -> Iterator[ConstructionRequest]:
    """Every admissible request within the bounds, in a fixed order."""
    for fam in (ConstructionFamily.PATH, ConstructionFamily.STAR):
        for e in range(1, bounds.max_e + 1):
            for d in admissible_divisors(e):
                yield ConstructionRequest(fam, e, d)
    for k in range(1, bounds.max_k_cycle4k + 1):
        yield ConstructionRequest(ConstructionFamily.CYCLE4K_D2, k, 2)
    for k in range(1, bounds.max_k_cycle4k + 1):
        yield ConstructionRequest(ConstructionFamily.CYCLE4K_D4, k, 4)
    for k in range(3, bounds.max_k_cycle2k_odd + 1, 2):
        yield ConstructionRequest(ConstructionFamily.CYCLE2K_ODD_D2, k, 2)
    for k in range(2, bounds.max_k_ladder + 1, 2):
        yield ConstructionRequest(ConstructionFamily.LADDER_D2, k, 2)
