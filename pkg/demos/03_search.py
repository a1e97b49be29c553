"""Exhaustive search as an independent oracle for the constructions.

Run: python demos/03_search.py
"""
import time

from dgraceful import SearchConfig, build_complete, build_cycle, build_path, exists, search_all
from dgraceful.search import cross_check

res = search_all(SearchConfig(build_path(2), 1))
print("graceful labelings of P_3:", res.label_vectors())

res = search_all(SearchConfig(build_cycle(6), 2, require_alpha=True))
print(f"2-graceful alpha-labelings of C_6: {len(res.solutions)} ({res.nodes_explored} nodes)")

red = search_all(SearchConfig(build_cycle(8), 2, symmetry_reduction=True))
full = search_all(SearchConfig(build_cycle(8), 2))
print(f"C_8, d=2: {len(full.solutions)} labelings, {len(red.solutions)} up to complement")

for d in (1, 2):
    print(f"K_5 is {d}-graceful:", exists(SearchConfig(build_complete(5), d)))

t0 = time.perf_counter()
rows = cross_check(max_e=6)
bad = [r for r in rows if not r.ok]
print(f"\ncross-check up to 6 edges: {len(rows)} instances, {len(bad)} disagreements "
      f"({time.perf_counter() - t0:.1f}s)")
for r in rows[:8]:
    print(f"  {r.request:<24} {r.solutions:>5} solutions")
