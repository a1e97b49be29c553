"""Print a labeling and one block orbit as Graphviz DOT.

Run: python demos/04_orbits_dot.py > orbit.dot
"""
from dgraceful import Labeling, build_cycle
from dgraceful.decomposition import block_orbits, expand
from dgraceful.difference_family import df_from_alpha
from dgraceful.dot import labeling_to_dot, orbit_to_dot

lab = Labeling.of(build_cycle(6), (0, 5, 2, 3, 1, 7), 2)
print(labeling_to_dot(lab))

dec = expand(df_from_alpha(lab, 2))
print("// orbits:", [len(o) for o in block_orbits(dec)])
print(orbit_to_dot(dec, base_index=1))
