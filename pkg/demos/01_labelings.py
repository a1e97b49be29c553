"""Walk through d-graceful labelings on a few small graphs.

Run: python demos/01_labelings.py
"""
from dgraceful import Labeling, build_complete, build_cycle, verify_alpha, verify_d_graceful
from dgraceful.constructions import label_cycle_2k_odd_d2, label_ladder_d2, label_path
from dgraceful.labeling import is_relative_difference_set, rds_parameters


def show(title, lab):
    rep = verify_d_graceful(lab)
    print(f"{title}: labels {list(lab.labels)}")
    print(f"  gaps realized {list(rep.spectrum.realized)}")
    print(f"  {lab.d}-graceful: {rep.ok}")


# C_6 with d = 2: the gap spectrum is [1,7] minus {4}
c6 = build_cycle(6)
interleaved = Labeling.of(c6, (0, 2, 3, 6, 1, 7), 2)
split = Labeling.of(c6, (0, 5, 2, 3, 1, 7), 2)
show("C_6, first labeling", interleaved)
print("  alpha:", verify_alpha(interleaved))
show("C_6, second labeling", split)
print("  alpha:", verify_alpha(split))

# a bad labeling reports each kind of failure
bad = Labeling.of(c6, (0, 4, 1, 6, 3, 7), 2)
print("\nC_6 with a forbidden gap:")
for v in verify_d_graceful(bad).violations:
    print(f"  {v.kind.value}: {v.detail}")

# constructions
print()
show("P_13, d=3", label_path(12, 3))
show("C_10, d=2", label_cycle_2k_odd_d2(5))
show("ladder P_2 x P_6, d=2", label_ladder_d2(6))

# K_5 and the relative difference set view
k5 = Labeling.of(build_complete(5), (0, 1, 4, 9, 11), 2)
v, order, _, _ = rds_parameters(5, 2)
print(f"\nK_5: 2-graceful {verify_d_graceful(k5).ok}; RDS in Z_{v} over a subgroup of order {order}: "
      f"{is_relative_difference_set(k5.labels, v, order)}")
