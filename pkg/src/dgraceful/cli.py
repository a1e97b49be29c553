"""Command-line front end.

Machine output is JSON on stdout; ``--pretty`` switches to short human
summaries. Exit status is 0 on success, 1 when a verification fails (the
report goes to stderr as JSON) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .constructions import ConstructionFamily, ConstructionRequest, SweepBounds, construct
from .decomposition import DEFAULT_MATERIALIZE_CAP, Decomposition, expand, verify_decomposition
from .difference_family import DifferenceFamily, df_from_alpha, df_from_labeling, verify_df
from .dot import labeling_to_dot, orbit_to_dot
from .errors import NotAdmissible, NotBipartite
from .graph import Graph
from .labeling import Labeling, forbidden_gaps, verify_alpha, verify_d_graceful
from .search import DEFAULT_BUDGET, SearchConfig, search_all
from .sweep import run_sweep

CONFIG_KEYS = {
    "max_e": int,
    "max_k_cycle4k": int,
    "max_k_cycle2k_odd": int,
    "max_k_ladder": int,
    "max_v": int,
    "materialize_cap": int,
}

FAMILY_ALIASES = {
    "path": (ConstructionFamily.PATH, None),
    "star": (ConstructionFamily.STAR, None),
    "cycle4k": (None, None),  # picked by --d
    "cycle4k-d2": (ConstructionFamily.CYCLE4K_D2, 2),
    "cycle4k-d4": (ConstructionFamily.CYCLE4K_D4, 4),
    "cycle2k-odd": (ConstructionFamily.CYCLE2K_ODD_D2, 2),
    "ladder": (ConstructionFamily.LADDER_D2, 2),
}


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def read_config(path: Optional[str]) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    if not path:
        return {}
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = CONFIG_KEYS[key](value)
    return out


def _load(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _emit(args, payload, pretty_text: Optional[str] = None) -> None:
    text = json.dumps(payload) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    elif not args.pretty:
        sys.stdout.write(text)
    if args.pretty and pretty_text is not None:
        sys.stdout.write(pretty_text + "\n")


def _spectrum_text(d: int, m: int) -> str:
    removed = forbidden_gaps(d, m)
    text = f"[1,{d * (m + 1) - 1}]"
    if removed:
        text += " \\ {" + ",".join(map(str, removed)) + "}"
    return text


def cmd_construct(args, cfg) -> int:
    fam, fixed = FAMILY_ALIASES[args.family]
    if args.family == "cycle4k":
        if args.d not in (2, 4):
            raise NotAdmissible("cycle4k is constructed for d=2 and d=4 only")
        fam = ConstructionFamily.CYCLE4K_D2 if args.d == 2 else ConstructionFamily.CYCLE4K_D4
    by_e = fam in (ConstructionFamily.PATH, ConstructionFamily.STAR)
    size = args.e if by_e else args.k
    if size is None:
        raise UsageError(f"--family {args.family} needs {'--e' if by_e else '--k'}")
    d = args.d if args.d is not None else fixed
    if d is None:
        raise UsageError(f"--family {args.family} needs --d")
    lab = construct(ConstructionRequest(fam, size, d))
    _emit(args, lab.to_dict(), f"{fam.value}: labels {list(lab.labels)}")
    return 0


def cmd_verify(args, cfg) -> int:
    lab = Labeling.from_dict(_load(args.labeling))
    report = verify_d_graceful(lab)
    payload = {
        "valid": report.ok,
        "d": lab.d,
        "m": lab.m,
        "required": list(report.spectrum.required) if report.spectrum else None,
        "realized": list(report.spectrum.realized) if report.spectrum else None,
        "violations": [v.to_dict() for v in report.violations],
    }
    ok = report.ok
    if args.alpha:
        try:
            payload["alpha"] = verify_alpha(lab)
        except NotBipartite:
            payload["alpha"] = False
            payload["violations"].append({"kind": "not_bipartite", "detail": "the graph has an odd cycle"})
        ok = ok and payload["alpha"]
    text = f"{lab.d}-graceful: {'yes' if report.ok else 'no'}; spectrum {_spectrum_text(lab.d, lab.m)}"
    if args.alpha:
        text += f"; alpha: {'yes' if payload['alpha'] else 'no'}"
    _emit(args, payload, text)
    if not ok:
        raise VerificationFailed(payload["violations"] or [{"kind": "not_alpha", "detail": "part ranges interleave"}])
    return 0


def _family_from_labeling(path: str, n: int) -> DifferenceFamily:
    lab = Labeling.from_dict(_load(path))
    if not verify_d_graceful(lab).ok:
        raise VerificationFailed([v.to_dict() for v in verify_d_graceful(lab).violations])
    if n == 1:
        return df_from_labeling(lab)
    try:
        return df_from_alpha(lab, n)
    except (ValueError, NotBipartite) as exc:
        raise VerificationFailed([{"kind": "not_alpha", "detail": str(exc)}]) from exc


def cmd_df(args, cfg) -> int:
    df = _family_from_labeling(args.labeling, args.n)
    report = verify_df(df)
    _emit(args, df.to_dict(), f"({df.modulus},{df.forbidden_order},G,1)-DF with {len(df.maps)} map(s): "
          f"{'verified' if report.ok else 'FAILED'}")
    if not report.ok:
        raise VerificationFailed(report.to_dict())
    return 0


def cmd_expand(args, cfg) -> int:
    if args.df:
        if args.n != 1:
            raise UsageError("--n applies to --labeling input only")
        df = DifferenceFamily.from_dict(_load(args.df))
    else:
        df = _family_from_labeling(args.labeling, args.n)
    dfr = verify_df(df)
    if not dfr.ok:
        raise VerificationFailed(dfr.to_dict())
    dec = expand(df)
    payload = dec.to_dict()
    text = f"K_{{{dec.spec.parts}×{dec.spec.part_size}}}: {len(dec.blocks)} blocks, {dec.spec.edge_count} edges"
    report = None
    if args.verify:
        report = verify_decomposition(dec, cfg.get("materialize_cap", DEFAULT_MATERIALIZE_CAP))
        payload = {**payload, "verification": {"ok": report.ok, "blocks": report.block_count,
                                               "host_edges": report.host_edges, "mode": report.mode}}
        text += ", partition OK" if report.ok else ", partition FAILED"
    _emit(args, payload, text)
    if report is not None and not report.ok:
        raise VerificationFailed(report.to_dict())
    return 0


def cmd_search(args, cfg) -> int:
    graph = Graph.from_dict(_load(args.graph))
    if graph.size % args.d:
        raise NotAdmissible(f"d={args.d} does not divide e={graph.size}")
    cap = args.max_solutions if args.all else 1
    res = search_all(SearchConfig(graph, args.d, require_alpha=args.alpha, max_solutions=cap, budget=args.budget))
    for s in res.solutions:
        sys.stdout.write(json.dumps({"labels": list(s.labels)}) + "\n")
    summary = {"solutions": len(res.solutions), "nodes_explored": res.nodes_explored, "complete": res.complete}
    sys.stdout.write(json.dumps(summary) + "\n")
    return 0


def cmd_sweep(args, cfg) -> int:
    defaults = SweepBounds()
    k_cap = args.max_k

    def kb(key, default):
        value = cfg.get(key, default)
        return min(value, k_cap) if k_cap is not None else value

    bounds = SweepBounds(
        max_e=args.max_e if args.max_e is not None else cfg.get("max_e", defaults.max_e),
        max_k_cycle4k=kb("max_k_cycle4k", defaults.max_k_cycle4k),
        max_k_cycle2k_odd=kb("max_k_cycle2k_odd", defaults.max_k_cycle2k_odd),
        max_k_ladder=kb("max_k_ladder", defaults.max_k_ladder),
    )
    rows = run_sweep(bounds, cfg.get("max_v", 200), (1, 2), cfg.get("materialize_cap", DEFAULT_MATERIALIZE_CAP))
    failed = [r for r in rows if not r.ok]
    if args.pretty:
        for r in rows:
            decs = " ".join(f"n={n}:{'ok' if v else 'FAIL'}" for n, v in sorted(r.decompositions.items()))
            sys.stdout.write(f"{'PASS' if r.ok else 'FAIL'}  {r.request.describe():<32} {decs}\n")
        sys.stdout.write(f"{len(rows) - len(failed)}/{len(rows)} passed\n")
    else:
        for r in rows:
            sys.stdout.write(json.dumps(r.to_dict()) + "\n")
    if failed:
        raise VerificationFailed([r.to_dict() for r in failed])
    return 0


def cmd_export_dot(args, cfg) -> int:
    if args.labeling:
        text = labeling_to_dot(Labeling.from_dict(_load(args.labeling)))
    else:
        text = orbit_to_dot(Decomposition.from_dict(_load(args.decomposition)))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable summary instead of JSON")
    common.add_argument("--config", metavar="PATH", help="key = value file overriding sweep bounds and caps")

    parser = argparse.ArgumentParser(prog="dgraceful", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="store_true", help="print the version on stderr and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("construct", parents=[common], help="build a labeling from a known construction")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_ALIASES))
    size = p.add_mutually_exclusive_group()
    size.add_argument("--e", type=int, help="edge count (path, star)")
    size.add_argument("--k", type=int, help="size parameter (cycles, ladder)")
    p.add_argument("--d", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a labeling file")
    p.add_argument("--labeling", required=True)
    p.add_argument("--alpha", action="store_true", help="also require the alpha property")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("df", parents=[common], help="difference family from a labeling")
    p.add_argument("--labeling", required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_df)

    p = sub.add_parser("expand", parents=[common], help="expand into a cyclic decomposition")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--labeling")
    src.add_argument("--df")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("search", parents=[common], help="exhaustive labeling search")
    p.add_argument("--graph", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", action="store_true")
    p.add_argument("--all", action="store_true", help="enumerate all solutions, not just the first")
    p.add_argument("--max-solutions", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", parents=[common], help="run the full construction matrix")
    p.add_argument("--max-e", type=int)
    p.add_argument("--max-k", type=int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz output")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--labeling")
    src.add_argument("--decomposition")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def _usage_error(message: str) -> int:
    sys.stderr.write(json.dumps({"error": message}) + "\n")
    return 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.version:
        sys.stderr.write(f"dgraceful {__version__}\n")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        cfg = read_config(args.config)
        return args.func(args, cfg)
    except VerificationFailed as exc:
        sys.stderr.write(json.dumps(exc.report) + "\n")
        return 1
    except (UsageError, NotAdmissible, NotBipartite, ValueError, KeyError) as exc:
        return _usage_error(f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
