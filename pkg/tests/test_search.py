from itertools import permutations
from math import factorial

import pytest

from dgraceful.errors import BudgetExceeded, NotAdmissible
from dgraceful.graph import build_complete, build_cycle, build_ladder, build_path, build_star
from dgraceful.labeling import Labeling, required_gaps
from dgraceful.search import SearchConfig, cross_check, exists, search_all

C6_MIXED = (0, 2, 3, 6, 1, 7)
C6_ALPHA = (0, 5, 2, 3, 1, 7)


def brute(graph, d):
    """Oracle: try every injective assignment into [0, d(m+1)-1]."""
    m = graph.size // d
    top = d * (m + 1) - 1
    want = sorted(required_gaps(d, m))
    found = set()
    for vec in permutations(range(top + 1), graph.n):
        if sorted(abs(vec[a] - vec[b]) for a, b in graph.edges) == want:
            found.add(vec)
    return found


def test_p3_has_four():
    res = search_all(SearchConfig(build_path(2), 1))
    assert res.complete
    assert sorted(res.label_vectors()) == [(0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1)]


@pytest.mark.parametrize(
    "graph, d",
    [(build_path(3), 1), (build_path(4), 2), (build_star(4), 2), (build_cycle(4), 2), (build_cycle(3), 3),
     (build_path(4), 4), (build_ladder(2), 2)],
)
def test_matches_permutation_oracle(graph, d):
    assert set(search_all(SearchConfig(graph, d)).label_vectors()) == brute(graph, d)


def test_c6_contains_known_labelings():
    vecs = set(search_all(SearchConfig(build_cycle(6), 2)).label_vectors())
    assert C6_MIXED in vecs and C6_ALPHA in vecs
    alpha = set(search_all(SearchConfig(build_cycle(6), 2, require_alpha=True)).label_vectors())
    assert C6_ALPHA in alpha and C6_MIXED not in alpha
    assert alpha < vecs


def test_k5_existence():
    assert exists(SearchConfig(build_complete(5), 2))
    # K_5 is not graceful
    assert not exists(SearchConfig(build_complete(5), 1))


def test_inadmissible_d():
    assert not exists(SearchConfig(build_ladder(3), 2))
    with pytest.raises(NotAdmissible):
        search_all(SearchConfig(build_ladder(3), 2))


def test_complement_closure_and_symmetry_reduction():
    g, d = build_cycle(8), 2
    full = set(search_all(SearchConfig(g, d)).label_vectors())
    top = d * (g.size // d + 1) - 1
    assert all(tuple(top - x for x in v) in full for v in full)
    reduced = set(search_all(SearchConfig(g, d, symmetry_reduction=True)).label_vectors())
    assert reduced <= full
    assert {min(v, tuple(top - x for x in v)) for v in full} == reduced


def test_every_solution_verifies():
    g = build_star(6)
    for lab in search_all(SearchConfig(g, 3)).solutions:
        assert isinstance(lab, Labeling) and lab.d == 3


def test_deterministic_node_count():
    cfg = SearchConfig(build_cycle(8), 4)
    a, b = search_all(cfg), search_all(cfg)
    assert a.nodes_explored == b.nodes_explored
    assert a.label_vectors() == b.label_vectors()


@pytest.mark.parametrize("budget, cap", [(10**9, None), (50, None), (1000, None), (10**9, 3), (400, 7)])
def test_workers_match_sequential(budget, cap):
    base = SearchConfig(build_path(6), 2, budget=budget, max_solutions=cap)
    seq = search_all(base)
    par = search_all(SearchConfig(build_path(6), 2, budget=budget, max_solutions=cap, workers=2))
    assert (seq.label_vectors(), seq.nodes_explored, seq.complete) == (
        par.label_vectors(),
        par.nodes_explored,
        par.complete,
    )


def test_budget_and_cap():
    res = search_all(SearchConfig(build_path(6), 1, budget=10))
    assert not res.complete and res.nodes_explored <= 10
    res = search_all(SearchConfig(build_path(6), 1, max_solutions=2))
    assert len(res.solutions) == 2 and not res.complete
    with pytest.raises(BudgetExceeded):
        exists(SearchConfig(build_complete(5), 1, budget=5))


def test_cross_check_small():
    rows = cross_check(max_e=6)
    assert rows and all(r.ok for r in rows)
    # a graceful star puts the centre at 0 or e and the leaves anywhere: 2 * e!
    stars = {r.request: r.solutions for r in rows if r.request.startswith("star") and ", d=1)" in r.request}
    assert stars == {f"star(e={e}, d=1)": 2 * factorial(e) for e in range(1, 7)}
