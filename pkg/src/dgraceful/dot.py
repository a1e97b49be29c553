"""Graphviz DOT text for labelings and decomposition orbits."""

from __future__ import annotations

from .decomposition import Decomposition
from .labeling import Labeling


def labeling_to_dot(lab: Labeling, name: str = "labeling") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v, x in enumerate(lab.labels):
        lines.append(f'  {v} [label="{x}"];')
    for a, b in lab.graph.edges:
        lines.append(f'  {a} -- {b} [label="{abs(lab.labels[a] - lab.labels[b])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_to_dot(dec: Decomposition, base_index: int = 0, name: str = "orbit") -> str:
    """All ``v`` translates of one base block drawn on ``Z_v``, vertices clustered by part."""
    v, p = dec.spec.modulus, dec.spec.parts
    base = dec.base_blocks[base_index]
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for r in range(p):
        members = " ".join(str(x) for x in range(r, v, p))
        lines.append(f'  subgraph cluster_part_{r} {{ label="part {r}"; {members}; }}')
    for g in range(v):
        for a, b in dec.graph.edges:
            x, y = (base[a] + g) % v, (base[b] + g) % v
            lines.append(f'  {x} -- {y} [label="+{g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
