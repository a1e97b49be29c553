"""From an alpha-labeling to a cyclic decomposition of a complete multipartite graph.

Run: python demos/02_designs.py
"""
import numpy as np

from dgraceful import Labeling, build_cycle
from dgraceful.decomposition import Decomposition, decomposition_summary, expand, verify_decomposition
from dgraceful.difference_family import df_from_alpha, verify_df

lab = Labeling.of(build_cycle(6), (0, 5, 2, 3, 1, 7), 2)

for n in (1, 2, 3):
    df = df_from_alpha(lab, n)
    print(f"n={n}: ({df.modulus},{df.forbidden_order},C_6,1)-DF, base blocks {[list(b) for b in df.maps]}")
    print(f"  covers Z_{df.modulus} minus its subgroup of order {df.forbidden_order}: {verify_df(df).ok}")
    dec = expand(df)
    rep = verify_decomposition(dec)
    s = decomposition_summary(dec)
    print(f"  K_{{{s.parts}x{s.part_size}}}: {s.blocks} blocks, {rep.host_edges} edges, "
          f"partition {'OK' if rep.ok else 'FAILED'}, orbits {list(s.orbit_lengths)}")

# one block gone: exactly six edges are left uncovered
dec = expand(df_from_alpha(lab, 1))
broken = Decomposition(dec.spec, dec.graph, dec.base_blocks, np.delete(dec.blocks, 0, axis=0))
rep = verify_decomposition(broken)
print(f"\nwithout block 0: ok={rep.ok}, uncovered {rep.uncovered}")
