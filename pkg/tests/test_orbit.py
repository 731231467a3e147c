from itertools import combinations

import networkx as nx
import pytest

from siltlab.derived import DerivedObject, a2_label, a2_object, hom_d
from siltlab.orbit import (
    OrbitError,
    OrbitFunctor,
    amiot_map_check,
    build_orbit,
    canonical_rep,
    cy_symmetry_failures,
    enumerate_ctilt,
    exchange_graph,
    exchange_graph_dot,
    folded_a2_report,
    fundamental_domain,
    hom_orbit,
    is_d_rigid,
    left_perp,
    maximal_cliques,
    mutation_projection_check,
    right_perp,
)
from siltlab.quiver import QuiverA

A2 = QuiverA(2)


def mod5(C, X):
    return a2_label(A2, X) % 5


def test_c2_a2_objects():
    C = build_orbit(A2, OrbitFunctor.nu(2))
    assert len(C.reps) == 5
    assert sorted(mod5(C, X) for X in C.reps) == [0, 1, 2, 3, 4]
    assert all(X.shift >= 0 for X in C.reps)


def test_c2_a2_hom_rule():
    C = build_orbit(A2, OrbitFunctor.nu(2))
    for x in C.reps:
        assert hom_orbit(C, x, x, 0) >= 1
        for y in C.reps:
            i, j = mod5(C, x), mod5(C, y)
            assert (hom_orbit(C, x, y, 1) != 0) == ((j - i) % 5 in (2, 3))


def test_c2_a2_direct_sum_oracle():
    # Hom_C(i, j) summed by hand over labels j - 5k
    C = build_orbit(A2, OrbitFunctor.nu(2))
    for x in C.reps:
        for y in C.reps:
            i, j = a2_label(A2, x), a2_label(A2, y)
            direct = sum(1 for k in range(-10, 11) if (j - 5 * k) - i in (0, 1))
            assert hom_orbit(C, x, y, 0) == direct


def test_c2_a2_ctilt():
    C = build_orbit(A2, OrbitFunctor.nu(2))
    ct = enumerate_ctilt(C, 2)
    assert sorted(tuple(sorted(mod5(C, X) for X in U)) for U in ct) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert len(exchange_graph(ct)) == 5
    assert exchange_graph_dot(A2, ct).count("--") == 5


def brute_ctilt(C, d):
    out = set()
    for k in range(1, len(C.reps) + 1):
        for U in combinations(C.reps, k):
            if is_d_rigid(C, U, d) and right_perp(C, U, d) == set(U):
                out.add(frozenset(U))
    return out


@pytest.mark.parametrize("spec,functor", [("a2", "nu2"), ("a2", "nu3"), ("a3", "nu2"), ("a3:FB", "nu2"),
                                          ("a1", "nu4"), ("a2", "fold1"), ("a2", "fold2")])
def test_ctilt_matches_subset_search(spec, functor):
    C = build_orbit(QuiverA.parse(spec), OrbitFunctor.parse(functor))
    assert set(enumerate_ctilt(C, C.cy_dim)) == brute_ctilt(C, C.cy_dim)


def test_maximal_cliques_against_networkx():
    G = nx.gnp_random_graph(14, 0.5, seed=3)
    adj = {v: set(G[v]) for v in G}
    ours = sorted(sorted(c) for c in maximal_cliques(adj))
    theirs = sorted(sorted(c) for c in nx.find_cliques(G))
    assert ours == theirs


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_point_orbit(d):
    C = build_orbit(QuiverA(1), OrbitFunctor.nu(d))
    assert [X.shift for X in C.reps] == list(range(d))
    ct = enumerate_ctilt(C, d)
    assert sorted(ct, key=lambda U: next(iter(U)).shift) == [frozenset({X}) for X in C.reps]


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_folded_a2(d):
    r = folded_a2_report(d)
    assert r["ind_count"] == 3 * d + 1
    assert len(r["ctilt"]) == 3 * d + 1 and r["all_singletons"]
    assert r["largest_rigid"] == 1
    assert r["cy_hypothesis_holds"] == (d % 2 == 1)


@pytest.mark.parametrize("d", [1, 3, 5])
def test_folded_self_orthogonal(d):
    C = build_orbit(A2, OrbitFunctor.a2_root(d))
    for x in C.reps:
        assert all(hom_orbit(C, x, x, j) == 0 for j in range(1, 2 * d + 1))


def test_folded_functor_on_labels():
    G = OrbitFunctor.a2_root(3)
    assert a2_label(A2, G.power(A2, a2_object(A2, 4), 1)) == 14
    assert a2_label(A2, G.power(A2, a2_object(A2, 4), -2)) == -16


@pytest.mark.parametrize("spec,functor", [("a2", "nu2"), ("a2", "nu3"), ("a3", "nu2"), ("a3:BF", "nu3"),
                                          ("a4", "nu2"), ("a2", "fold3")])
def test_cy_symmetry_and_perps(spec, functor):
    C = build_orbit(QuiverA.parse(spec), OrbitFunctor.parse(functor))
    assert cy_symmetry_failures(C) == []
    d = C.cy_dim
    sizes = set()
    for U in enumerate_ctilt(C, d):
        assert right_perp(C, U, d) == set(U) == left_perp(C, U, d)
        sizes.add(len(U))
    assert len(sizes) == 1


@pytest.mark.parametrize("spec,d,count", [("a2", 2, 5), ("a2", 3, 8), ("a3", 2, 9), ("a1", 3, 3)])
def test_fundamental_domain(spec, d, count):
    Q = QuiverA.parse(spec)
    F = fundamental_domain(Q, d)
    C = build_orbit(Q, OrbitFunctor.nu(d))
    assert len(F) == count == len(C.reps)
    assert sorted(C.project(X) for X in F) == sorted(C.reps)


@pytest.mark.parametrize("spec,d", [("a2", 2), ("a2", 3), ("a3", 2), ("a3:FB", 2), ("a1", 2), ("a1", 4)])
def test_amiot_bijection(spec, d):
    r = amiot_map_check(QuiverA.parse(spec), d)
    assert r["bijection"] and r["counterexamples"] == []
    assert len(r["silt_in_F"]) == len(r["ctilt"])
    assert set(r) >= {"category", "ind_count", "ctilt", "silt_in_F", "bijection"}


def test_a3_cluster_number():
    assert len(amiot_map_check(QuiverA(3), 2)["ctilt"]) == 14


def test_mutation_projection():
    assert mutation_projection_check(A2, 2)["pass"]
    assert mutation_projection_check(QuiverA(3), 2)["pass"]
    assert mutation_projection_check(QuiverA(1), 3)["degenerate"]


def test_canonical_rep_is_orbit_invariant():
    G = OrbitFunctor.nu(2)
    Q = QuiverA.parse("a3:FB")
    X = DerivedObject(1, 2, 3)
    rep = canonical_rep(Q, G, X)
    for k in range(-4, 5):
        assert canonical_rep(Q, G, G.power(Q, X, k)) == rep


def test_functor_preserves_hom():
    Q = QuiverA(3)
    G = OrbitFunctor.nu(2)
    objs = [DerivedObject(1, 1, 0), DerivedObject(1, 3, 0), DerivedObject(2, 3, 1), DerivedObject(3, 3, -1)]
    for X in objs:
        for Y in objs:
            assert hom_d(Q, G.power(Q, X, 1), G.power(Q, Y, 1)) == hom_d(Q, X, Y)


def test_rejected_functors():
    with pytest.raises(OrbitError):
        build_orbit(A2, OrbitFunctor.nu(1))
    with pytest.raises(OrbitError):
        build_orbit(QuiverA(3), OrbitFunctor.composite(2, 1))  # tau^2[1] on A_3 has no drift
    with pytest.raises(OrbitError):
        build_orbit(QuiverA(3), OrbitFunctor.a2_root(1))
    with pytest.raises(ValueError):
        OrbitFunctor.parse("sigma2")


def test_composite_functor():
    # tau^-1[1] on A_2: a genuine orbit category without a CY dimension
    C = build_orbit(A2, OrbitFunctor.composite(-1, 1))
    assert C.cy_dim is None
    assert len(C.reps) == 5
