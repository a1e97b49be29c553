"""Run every construction through the verifier, the difference family and the decomposition check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .constructions import ConstructionRequest, SweepBounds, construct, sweep_requests
from .decomposition import DEFAULT_MATERIALIZE_CAP, expand, verify_decomposition
from .difference_family import df_from_alpha, df_from_labeling, verify_df
from .labeling import verify_alpha, verify_d_graceful


@dataclass
class SweepRow:
    request: ConstructionRequest
    labels: Optional[tuple[int, ...]] = None
    graceful: bool = False
    alpha: Optional[bool] = None
    df: Optional[bool] = None
    # n -> decomposition verified; only filled when the base modulus is within max_v
    decompositions: dict[int, bool] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        if self.error or not self.graceful or self.df is False:
            return False
        if self.request.family.claims_alpha and not self.alpha:
            return False
        return all(self.decompositions.values())

    def to_dict(self) -> dict:
        return {
            "request": self.request.describe(),
            "graceful": self.graceful,
            "alpha": self.alpha,
            "df": self.df,
            "decompositions": {str(n): ok for n, ok in sorted(self.decompositions.items())},
            "ok": self.ok,
            "error": self.error,
        }


def check_request(
    req: ConstructionRequest,
    max_v: int = 200,
    ns: Iterable[int] = (1, 2),
    materialize_cap: int = DEFAULT_MATERIALIZE_CAP,
) -> SweepRow:
    row = SweepRow(req)
    try:
        lab = construct(req)
    except Exception as exc:  # a failing construction is a row, not a crash
        row.error = f"{type(exc).__name__}: {exc}"
        return row
    row.labels = lab.labels
    row.graceful = verify_d_graceful(lab).ok
    row.alpha = verify_alpha(lab) if req.family.claims_alpha else None
    df = df_from_labeling(lab)
    row.df = verify_df(df).ok
    if df.modulus <= max_v:
        for n in ns:
            if n > 1 and not row.alpha:
                continue
            fam = df if n == 1 else df_from_alpha(lab, n)
            row.decompositions[n] = verify_df(fam).ok and verify_decomposition(expand(fam), materialize_cap).ok
    return row


def run_sweep(
    bounds: SweepBounds = SweepBounds(),
    max_v: int = 200,
    ns: Iterable[int] = (1, 2),
    materialize_cap: int = DEFAULT_MATERIALIZE_CAP,
) -> list[SweepRow]:
    ns = tuple(ns)
    return [check_request(r, max_v, ns, materialize_cap) for r in sweep_requests(bounds)]
