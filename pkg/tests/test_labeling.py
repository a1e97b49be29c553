from itertools import combinations

import numpy as np
import pytest

from dgraceful.errors import NotBipartite
from dgraceful.graph import build_complete, build_cycle, build_path, build_star
from dgraceful.labeling import (
    Labeling,
    ViolationKind,
    admissible_divisors,
    is_relative_difference_set,
    rds_parameters,
    required_gaps,
    verify_alpha,
    verify_d_graceful,
    verify_label_matrix,
    verify_rds_view,
)

C6_MIXED = (0, 2, 3, 6, 1, 7)
C6_ALPHA = (0, 5, 2, 3, 1, 7)
S_K5 = (0, 1, 4, 9, 11)
S_PRIME_K5 = (0, 1, 3, 11, 20)


def brute_rds(subset, modulus, order):
    """Independent oracle: list every ordered difference and compare with the coset structure."""
    diffs = [(x - y) % modulus for x, y in combinations(subset, 2)]
    diffs += [(y - x) % modulus for x, y in combinations(subset, 2)]
    step = modulus // order
    sub = {j * step for j in range(order)}
    return sorted(diffs) == sorted(set(range(modulus)) - sub)


def test_admissible_divisors():
    assert admissible_divisors(18) == [1, 2, 3, 6, 9, 18]
    assert admissible_divisors(build_path(18)) == [1, 2, 3, 6, 9, 18]
    assert admissible_divisors(1) == [1]
    assert admissible_divisors(10) == [1, 2, 5, 10]


def test_required_gap_set_sizes():
    for e in range(1, 40):
        for d in admissible_divisors(e):
            assert len(required_gaps(d, e // d)) == e


def test_c6_mixed_c6_is_2_graceful():
    rep = verify_d_graceful(Labeling.of(build_cycle(6), C6_MIXED, 2))
    assert rep.ok
    assert rep.spectrum.required == (1, 2, 3, 5, 6, 7)
    assert rep.spectrum.realized == (1, 2, 3, 5, 6, 7)


def test_k5_set_is_2_graceful():
    rep = verify_d_graceful(Labeling.of(build_complete(5), S_K5, 2))
    assert rep.ok
    assert set(rep.spectrum.realized) == set(range(1, 12)) - {6}


def test_k5_sprime_out_of_range():
    rep = verify_d_graceful(Labeling.of(build_complete(5), S_PRIME_K5, 2))
    assert not rep.ok
    assert ViolationKind.LABEL_OUT_OF_RANGE in rep.kinds()
    assert any("20 > 11" in v.detail for v in rep.violations)


def test_p3_graceful():
    rep = verify_d_graceful(Labeling.of(build_path(2), (1, 0, 2), 1))
    assert rep.ok and rep.spectrum.realized == (1, 2)


def test_violation_kinds_are_distinct():
    c6 = build_cycle(6)
    not_div = verify_d_graceful(Labeling.of(c6, C6_MIXED, 4))
    assert not_div.kinds() == {ViolationKind.NOT_ADMISSIBLE}
    dup = verify_d_graceful(Labeling.of(c6, (0, 2, 3, 6, 0, 7), 2))
    assert ViolationKind.NON_INJECTIVE in dup.kinds()
    # 0-1-2-3 path with labels 0,1,2,3: gap 1 three times
    rep = verify_d_graceful(Labeling.of(build_path(3), (0, 1, 2, 3), 1))
    assert ViolationKind.DUPLICATE_GAP in rep.kinds()
    assert ViolationKind.MISSING_GAP in rep.kinds()
    # C_6 with d=2, m=3 forbids gap 4
    rep = verify_d_graceful(Labeling.of(c6, (0, 4, 1, 6, 3, 7), 2))
    assert ViolationKind.FORBIDDEN_GAP in rep.kinds()


def test_alpha_examples():
    c6 = build_cycle(6)
    assert verify_alpha(Labeling.of(c6, C6_ALPHA, 2))
    # colour classes {0,2,4} -> {0,3,1} and {1,3,5} -> {2,6,7} interleave
    assert not verify_alpha(Labeling.of(c6, C6_MIXED, 2))
    for e in (1, 4, 9):
        star = build_star(e)
        assert verify_alpha(Labeling.of(star, range(e + 1), 1))


def test_alpha_needs_bipartite():
    with pytest.raises(NotBipartite):
        verify_alpha(Labeling.of(build_cycle(5), (0, 1, 2, 3, 4), 1))


def test_rds_parameters_for_k5():
    assert rds_parameters(5, 2) == (24, 4, 5, 1)


def test_rds_view_k5():
    k5 = build_complete(5)
    assert verify_rds_view(Labeling.of(k5, S_K5, 2))
    assert brute_rds(S_K5, 24, 4)
    # S' is not 2-graceful, but as a bare subset of Z_24 it is a relative difference set
    assert not verify_rds_view(Labeling.of(k5, S_PRIME_K5, 2))
    assert is_relative_difference_set(S_PRIME_K5, 24, 4)
    assert brute_rds(S_PRIME_K5, 24, 4)


def test_rds_group_order_20_does_not_work():
    # the group order is v(v-1) + 2d = 24; in Z_20 both sets fail
    for s in (S_K5, S_PRIME_K5):
        assert not is_relative_difference_set(s, 20, 4)
        assert not brute_rds(s, 20, 4)


def test_rds_k2():
    assert verify_rds_view(Labeling.of(build_complete(2), (0, 1), 1))
    assert is_relative_difference_set((0, 1), 4, 2)


def test_rds_view_rejects_non_complete():
    with pytest.raises(ValueError):
        verify_rds_view(Labeling.of(build_cycle(6), C6_MIXED, 2))


def test_d1_matches_classical_graceful():
    # classical: labels in [0, e], gaps exactly {1..e}
    g = build_path(3)
    for labels in [(0, 3, 1, 2), (1, 2, 0, 3), (0, 1, 2, 3), (3, 0, 2, 1)]:
        classical = sorted(abs(labels[a] - labels[b]) for a, b in g.edges) == [1, 2, 3]
        assert verify_d_graceful(Labeling.of(g, labels, 1)).ok == classical


def test_d_equals_e_matches_odd_graceful():
    g = build_star(3)
    assert required_gaps(3, 1) == [1, 3, 5]
    assert verify_d_graceful(Labeling.of(g, (0, 1, 3, 5), 3)).ok
    assert not verify_d_graceful(Labeling.of(g, (0, 1, 2, 5), 3)).ok


def test_batch_verifier_agrees():
    g = build_cycle(6)
    rows = np.array([C6_MIXED, C6_ALPHA, (0, 4, 1, 6, 3, 7), (0, 2, 3, 6, 0, 7), (0, 2, 3, 6, 1, 12)])
    expected = [verify_d_graceful(Labeling.of(g, r, 2)).ok for r in rows]
    assert verify_label_matrix(g, 2, rows).tolist() == expected == [True, True, False, False, False]


def test_labeling_json_roundtrip():
    lab = Labeling.of(build_cycle(6), C6_ALPHA, 2)
    assert Labeling.from_dict(lab.to_dict()) == lab
    assert lab.to_dict()["labels"] == list(C6_ALPHA)


def test_labeling_shape_checks():
    with pytest.raises(ValueError):
        Labeling.of(build_cycle(6), (0, 1, 2), 2)
    with pytest.raises(ValueError):
        Labeling.of(build_path(1), (-1, 0), 1)
