"""Verification suites: each claim is a small exact computation with a witness.

Run one with ``run_suite("a2-classification")`` or ``silt-lab verify <suite>``.
Reports are canonical (sorted, no timings in the JSON unless asked for), so
the same seed gives byte-identical output.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

import numpy as np

from .braid import (
    BraidElement,
    braid_geq,
    braid_images,
    normal_form,
    section_algebra,
    section_to_silting,
)
from .derived import (
    AutoSpec,
    DerivedObject,
    a2_label,
    a2_objects,
    apply_auto,
    check_a2_anchor,
    hom_d,
    objects_in_window,
    serre,
)
from .modules import all_intervals, ext_dim, hom_dim
from .orbit import (
    OrbitFunctor,
    amiot_map_check,
    build_orbit,
    cy_symmetry_failures,
    enumerate_ctilt,
    folded_a2_report,
    is_d_rigid,
    left_perp,
    mutation_projection_check,
    right_perp,
)
from .quiver import QuiverA, euler_form
from .silting import (
    SiltingCandidate,
    enumerate_interval,
    geq_matrix,
    hasse,
    interval_pool,
    is_d_silting,
    is_presilting,
    mutate,
    new_summand,
    projective_silting,
    silting_from_pool,
    verify_mutation_bound,
)

A2 = QuiverA(2)
LABEL_WINDOW = (-12, 12)


class UnknownSuite(KeyError):
    pass


@dataclass
class Claim:
    claim_id: str
    anchor: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.claim_id, "anchor": self.anchor, "status": self.status, "witness": self.witness}


@dataclass
class VerifyReport:
    suite: str
    claims: list[Claim] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def to_json(self, timing: bool = False) -> dict:
        out = {"suite": self.suite, "pass": self.passed, "claims": [c.to_json() for c in self.claims]}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)

    def lines(self) -> list[str]:
        out = [f"{c.status.upper():7s} {self.suite}/{c.claim_id}: {c.anchor}" for c in self.claims]
        out.append(f"{'PASS' if self.passed else 'FAIL'} {self.suite} ({len(self.claims)} claims)")
        return out


def _labels(P) -> list[int]:
    return sorted(a2_label(A2, X) for X in P)


def _a2_window_silting() -> list[SiltingCandidate]:
    check_a2_anchor(A2)
    return silting_from_pool(A2, a2_objects(A2, range(LABEL_WINDOW[0], LABEL_WINDOW[1] + 1)))


def _pairs_diff(found: set, expected: set) -> dict:
    return {"missing": sorted(expected - found), "extra": sorted(found - expected)}


# -- claims (module-level so they can run in worker processes) --------------

def claim_a2_classification(seed: int = 0) -> tuple[bool, dict]:
    lo, hi = LABEL_WINDOW
    found = {tuple(_labels(P)) for P in _a2_window_silting()}
    expected = {(i, j) for i in range(lo, hi + 1) for j in range(i + 1, hi + 1) if (j - i) % 3 == 1}
    return found == expected, {"count": len(found), **_pairs_diff(found, expected)}


def claim_a2_presilting_examples(seed: int = 0) -> tuple[bool, dict]:
    cases = {(0, 1): True, (0, 4): True, (0, 3): False, (0, 2): False}
    got = {str(k): is_presilting(A2, a2_objects(A2, k)) for k in cases}
    return got == {str(k): v for k, v in cases.items()}, got


def claim_d_silting_rows(d: int) -> tuple[bool, dict]:
    found = {tuple(_labels(P)) for P in _a2_window_silting() if is_d_silting(A2, P, d)}
    lo, hi = LABEL_WINDOW
    expected = {(i, i + 3 * (r - 1) + 1) for r in range(1, d + 1) for i in range(lo, hi + 1)
                if i + 3 * (r - 1) + 1 <= hi}
    return found == expected, {"d": d, "count": len(found), **_pairs_diff(found, expected)}


def _seven_summand_top() -> SiltingCandidate:
    # The interval with exactly seven summands in its pool; see README.
    return SiltingCandidate.of(a2_objects(A2, [1, 5]))


def claim_a2_seven_summand_instance(seed: int = 0) -> tuple[bool, dict]:
    A = _seven_summand_top()
    pool = interval_pool(A2, A, 2)
    # X_1, ..., X_7 numbered along the zigzag
    X = sorted(pool, key=lambda Y: a2_label(A2, Y))
    U = [X[3]]
    hits, ok = verify_mutation_bound(A2, A, U, 2)
    got = sorted(tuple(_labels(P)) for P in hits)
    expected = sorted([tuple(_labels([X[2], X[3]])), tuple(_labels([X[3], X[4]]))])
    return (len(pool) == 7 and got == expected and ok,
            {"pool": _labels(pool), "U": _labels(U), "hits": got, "expected": expected})


def _corank_one(Q: QuiverA, interval) -> list[tuple]:
    summands = sorted({X for P in interval for X in P})
    return [U for U in combinations(summands, Q.n - 1) if is_presilting(Q, U)]


def claim_mutation_bound(spec: str, max_n: int = 3) -> tuple[bool, dict]:
    Q = QuiverA.parse(spec)
    A = projective_silting(Q)
    worst = {}
    ok = True
    for n in range(max_n + 1):
        interval = enumerate_interval(Q, A, n)
        sizes = []
        for U in _corank_one(Q, interval):
            hits, good = verify_mutation_bound(Q, A, U, n, interval)
            sizes.append(len(hits))
            ok &= good
        worst[str(n)] = {"interval": len(interval), "corank_one": len(sizes), "max_hits": max(sizes, default=0)}
    return ok, {"quiver": spec, "by_n": worst}


def _family(depth: int) -> dict[str, BraidElement]:
    """(b2 b1)^i and b1 (b2 b1)^i for |i| <= depth."""
    c = normal_form([(2, 1), (1, 1)], 3)
    b1 = BraidElement.generator(3, 1)
    out = {}
    for i in range(-depth, depth + 1):
        out[f"(b2b1)^{i}"] = c ** i
        out[f"b1(b2b1)^{i}"] = b1 * c ** i
    return out


def claim_braid_image(depth: int = 9) -> tuple[bool, dict]:
    images = braid_images(A2, depth)
    family = _family(depth)
    lookup = {v: k for k, v in family.items()}
    named = sorted(lookup.get(x, "?") for x in images.values())
    k = (depth - 1) // 2
    core = {f"(b2b1)^{i}" for i in range(-k, k + 1)} | {f"b1(b2b1)^{i}" for i in range(-k, k + 1)}
    inside = "?" not in named
    covers_core = core <= set(named)
    injective = len(set(images.values())) == len(images)
    alg = section_algebra(A2)
    pairs = sorted(tuple(sorted(a2_label(alg, X) for X in section_to_silting(A2, S))) for S in images)
    adjacent = all(j == i + 1 for i, j in pairs)
    return (inside and covers_core and injective and adjacent,
            {"sections": len(images), "images": named, "silting_labels": pairs})


def claim_braid_well_defined(spec: str, depth: int) -> tuple[bool, dict]:
    Q = QuiverA.parse(spec)
    images = braid_images(Q, depth)  # raises on two distinct normal forms
    injective = len(set(images.values())) == len(images)
    return injective, {"quiver": spec, "depth": depth, "sections": len(images), "injective": injective}


def claim_point_orbit(d: int) -> tuple[bool, dict]:
    C = build_orbit(QuiverA(1), OrbitFunctor.nu(d))
    ct = enumerate_ctilt(C, d)
    singletons = sorted(next(iter(U)).shift for U in ct if len(U) == 1)
    ok = len(C.reps) == d and len(ct) == d and singletons == list(range(d))
    return ok, {"d": d, "ind_count": len(C.reps), "ctilt_shifts": singletons}


def claim_folded(d: int) -> tuple[bool, dict]:
    r = folded_a2_report(d)
    ok = (r["ind_count"] == 3 * d + 1 and len(r["ctilt"]) == 3 * d + 1
          and r["all_singletons"] and r["largest_rigid"] == 1)
    return ok, {"d": d, "ind_count": r["ind_count"], "ctilt": len(r["ctilt"]),
                "largest_rigid": r["largest_rigid"], "cy_hypothesis_holds": r["cy_hypothesis_holds"]}


def brute_force_ctilt(C, d: int) -> list[frozenset]:
    """Cluster tilting subsets by checking every subset of the representatives."""
    out = []
    for k in range(1, len(C.reps) + 1):
        for U in combinations(C.reps, k):
            if is_d_rigid(C, U, d) and right_perp(C, U, d) == set(U):
                out.append(frozenset(U))
    return out


def claim_amiot(spec: str, d: int) -> tuple[bool, dict]:
    Q = QuiverA.parse(spec)
    r = amiot_map_check(Q, d)
    ok = r["bijection"] and r["fundamental_domain_bijective"] and len(r["silt_in_F"]) == len(r["ctilt"])
    witness = {"quiver": spec, "d": d, "silt_in_F": len(r["silt_in_F"]), "ctilt": len(r["ctilt"]),
               "ind_count": r["ind_count"], "counterexamples": r["counterexamples"]}
    if spec == "a2" and d == 2:
        brute = brute_force_ctilt(build_orbit(Q, OrbitFunctor.nu(2)), 2)
        witness["brute_force_ctilt"] = len(brute)
        ok = ok and len(brute) == 5 and len(r["ctilt"]) == 5
    return ok, witness


def claim_mutation_projection(seed: int = 0) -> tuple[bool, dict]:
    two_term = enumerate_interval(A2, projective_silting(A2), 1)
    covers = hasse(A2, two_term).covers()
    r = mutation_projection_check(A2, 2, covers)
    ok = r["pass"] and len(two_term) == 5 and r["covers_checked"] == len(covers) > 0
    return ok, {"two_term": len(two_term), "covers": r["covers_checked"], "failures": r["failures"]}


SERRE_QUIVERS = ["a1", "a2", "a2:B", "a3", "a3:FB", "a3:BF", "a3:BB", "a4", "a4:FBF", "a4:BFB"]


def claim_serre(spec: str, bound: int = 6) -> tuple[bool, dict]:
    Q = QuiverA.parse(spec)
    objs = objects_in_window(Q, -bound, bound)
    nu = {X: serre(Q, X) for X in objs}
    bad = [(str(X), str(Y)) for X in objs for Y in objs if hom_d(Q, X, Y) != hom_d(Q, Y, nu[X])]
    return not bad, {"quiver": spec, "objects": len(objs), "failures": bad[:5]}


def claim_nu_roundtrip(seed: int = 0, samples: int = 200) -> tuple[bool, dict]:
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        n = rng.randint(1, 4)
        Q = QuiverA(n, tuple(rng.choice("FB") for _ in range(n - 1)))
        M = rng.choice(all_intervals(Q))
        X = DerivedObject.of(M, rng.randint(-6, 6))
        if apply_auto(Q, serre(Q, X), AutoSpec.serre().inverse()) != X:
            bad.append((Q.spec(), str(X)))
    return not bad, {"samples": samples, "failures": bad[:5]}


def claim_euler(max_n: int = 5) -> tuple[bool, dict]:
    bad, checked = [], 0
    for n in range(1, max_n + 1):
        for letters in product("FB", repeat=n - 1):
            Q = QuiverA(n, letters)
            for M in all_intervals(Q):
                for N in all_intervals(Q):
                    checked += 1
                    lhs = hom_dim(Q, M, N) - ext_dim(Q, M, N)
                    if lhs != euler_form(Q, M.dim_vector(n), N.dim_vector(n)):
                        bad.append((Q.spec(), str(M), str(N)))
    return not bad, {"pairs": checked, "failures": bad[:5]}


ORBIT_MODELS = [("a1", "nu2"), ("a1", "nu3"), ("a1", "nu5"), ("a2", "nu2"), ("a2", "nu3"),
                ("a3", "nu2"), ("a3:FB", "nu2"), ("a4", "nu2"),
                ("a2", "fold1"), ("a2", "fold2"), ("a2", "fold3"), ("a2", "fold5")]


def claim_cy_symmetry(seed: int = 0) -> tuple[bool, dict]:
    out, ok = {}, True
    for spec, functor in ORBIT_MODELS:
        C = build_orbit(QuiverA.parse(spec), OrbitFunctor.parse(functor), check_cy=False)
        bad = cy_symmetry_failures(C)
        d = C.cy_dim
        ct = enumerate_ctilt(C, d)
        both_perps = all(right_perp(C, U, d) == set(U) == left_perp(C, U, d) for U in ct)
        constant = len({len(U) for U in ct}) <= 1
        out[f"{spec}/{functor}"] = {"reps": len(C.reps), "cy": d, "symmetry_failures": len(bad),
                                    "ctilt": len(ct), "both_perps": both_perps, "constant_size": constant}
        ok &= not bad and both_perps and constant
    return ok, out


def claim_mutation_involution(spec: str, n: int) -> tuple[bool, dict]:
    Q = QuiverA.parse(spec)
    nodes = enumerate_interval(Q, projective_silting(Q), n)
    H = hasse(Q, nodes)
    bad = []
    for T, R in H.covers():
        (X,) = [X for X in T if X not in R]
        Y = new_summand(T, R)
        if len(set(T) & set(R)) != Q.n - 1 or mutate(Q, T, X, "left") != R or mutate(Q, R, Y, "right") != T:
            bad.append((str(T), str(R)))
    return not bad, {"quiver": spec, "n": n, "covers": len(H.covers()), "failures": bad[:5]}


def claim_order_axioms(spec: str, n: int) -> tuple[bool, dict]:
    Q = QuiverA.parse(spec)
    nodes = enumerate_interval(Q, projective_silting(Q), n)
    G = geq_matrix(Q, nodes)
    reflexive = bool(G.diagonal().all())
    antisym = not (G & G.T & ~np.eye(len(nodes), dtype=bool)).any()
    transitive = not ((G.astype(int) @ G.astype(int) > 0) & ~G).any()
    rank = all(len(P) == Q.n for P in nodes)
    return reflexive and antisym and transitive and rank, {
        "quiver": spec, "nodes": len(nodes), "reflexive": reflexive,
        "antisymmetric": antisym, "transitive": transitive, "rank_constant": rank}


def claim_braid_relations(seed: int = 0, samples: int = 100) -> tuple[bool, dict]:
    bad = []
    for N in range(3, 7):
        for i in range(1, N):
            for j in range(1, N):
                if i == j:
                    continue
                if abs(i - j) == 1:
                    w = [(i, 1), (j, 1), (i, 1), (j, -1), (i, -1), (j, -1)]
                else:
                    w = [(i, 1), (j, 1), (i, -1), (j, -1)]
                if not normal_form(w, N).is_identity():
                    bad.append((N, i, j))
    rng = random.Random(seed)
    for _ in range(samples):
        N = rng.randint(2, 5)
        word = lambda: [(rng.randint(1, N - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))]
        a, b = normal_form(word(), N), normal_form(word(), N)
        if braid_geq(a, b) and braid_geq(b, a) and a != b:
            bad.append(("antisymmetry", str(a), str(b)))
    return not bad, {"failures": bad[:5]}


# -- suites -------------------------------------------------------------------

Task = tuple[str, str, Callable, tuple]

SUITES: dict[str, list[Task]] = {
    "a2-classification": [
        ("anchor-and-window", "A2 silting objects are {i, j} with j - i = 3n + 1", claim_a2_classification, ()),
        ("presilting-examples", "{0,1}, {0,4} presilting; {0,3}, {0,2} not", claim_a2_presilting_examples, ()),
    ],
    "d-silting-rows": [
        (f"rows-d{d}", f"{d}-silting objects of A2 are the first {d} rows", claim_d_silting_rows, (d,))
        for d in (1, 2, 3)
    ],
    "mutations-bound": [
        ("a2-seven-summand-instance", "silt_U in [A[2], A] for U = X4 is {X3+X4, X4+X5}",
         claim_a2_seven_summand_instance, ()),
        ("a2-bound", "#(silt_U cap [A[n], A]) <= n + 1 for A2, n <= 3", claim_mutation_bound, ("a2", 3)),
        ("a3-bound", "#(silt_U cap [A[n], A]) <= n + 1 for A3, n <= 3", claim_mutation_bound, ("a3", 3)),
        ("a3-fb-bound", "#(silt_U cap [A[n], A]) <= n + 1 for A3 zigzag, n <= 3",
         claim_mutation_bound, ("a3:FB", 3)),
    ],
    "braid-image": [
        ("a2-depth-9", "F(sections of A2) = {(b2b1)^i, b1(b2b1)^i}", claim_braid_image, (9,)),
    ],
    "braid-well-defined": [
        ("a2-depth-8", "F is path independent on A2", claim_braid_well_defined, ("a2", 8)),
    ] + [
        (f"{s}-depth-6", f"F is path independent on {s}", claim_braid_well_defined, (s, 6))
        for s in ("a3:FF", "a3:FB", "a3:BF", "a3:BB")
    ],
    "orbit-counts": [
        (f"point-d{d}", f"C_{d}(k) has {d} objects, each {d}-cluster tilting", claim_point_orbit, (d,))
        for d in (1, 2, 3, 4, 5)
    ] + [
        (f"folded-d{d}", f"folded A2 with d = {d}: {3 * d + 1} objects, each {2 * d + 1}-cluster tilting",
         claim_folded, (d,))
        for d in (1, 3, 5)
    ],
    "amiot": [
        (f"{s}-d{d}", f"silt in F <-> {d}-ctilt C_{d}(k{s})", claim_amiot, (s, d))
        for s, d in (("a2", 2), ("a2", 3), ("a3", 2))
    ],
    "mutation-projection": [
        ("a2-two-term", "covers of two-term A2 silting project to single exchanges",
         claim_mutation_projection, ()),
    ],
    "invariants": [
        *[(f"serre-{s}", f"Hom(X, Y) = Hom(Y, nu X) on {s}, |shift| <= 6", claim_serre, (s,))
          for s in SERRE_QUIVERS],
        ("euler", "hom - ext = Euler form, n <= 5, all orientations", claim_euler, ()),
        ("cy-symmetry", "Hom(x, y[i]) = Hom(y, x[d - i]) in every built orbit category", claim_cy_symmetry, ()),
        *[(f"involution-{s}-n{n}", f"left/right mutation inverse on covers of {s}, n = {n}",
           claim_mutation_involution, (s, n))
          for s, n in (("a2", 3), ("a3", 2), ("a3:FB", 2))],
    ],
    "serre-duality": [
        *[(f"serre-{s}", f"Hom(X, Y) = Hom(Y, nu X) on {s}, |shift| <= 6", claim_serre, (s,))
          for s in SERRE_QUIVERS],
        ("nu-roundtrip", "nu^-1 nu = id on random objects", claim_nu_roundtrip, ("SEED",)),
    ],
    "order-and-braids": [
        *[(f"order-{s}-n{n}", f"silting order axioms on [A[{n}], A] for {s}", claim_order_axioms, (s, n))
          for s, n in (("a2", 3), ("a3", 2))],
        ("braid-relations", "braid relations and antisymmetry of >=", claim_braid_relations, ("SEED",)),
    ],
}

# criterion number -> suite
ACCEPTANCE = {1: "a2-classification", 2: "d-silting-rows", 3: "mutations-bound", 4: "braid-image",
              5: "braid-well-defined", 6: "orbit-counts", 7: "amiot", 8: "mutation-projection",
              9: "invariants"}


def suite_names() -> list[str]:
    return sorted(SUITES) + ["folded-a2"]


def _run_task(task: Task, seed: int) -> Claim:
    claim_id, anchor, fn, args = task
    args = tuple(seed if a == "SEED" else a for a in args)
    try:
        ok, witness = fn(*args)
    except Exception as exc:  # a crash is a failed claim with the error as witness
        return Claim(claim_id, anchor, "fail", {"error": f"{type(exc).__name__}: {exc}"})
    return Claim(claim_id, anchor, "pass" if ok else "fail", witness)


def _parse_name(name: str, d: int | None) -> tuple[str, int | None]:
    parts = name.split()
    base = parts[0] if parts else ""
    rest = parts[1:]
    while rest:
        flag = rest.pop(0)
        if flag in ("--d", "-d") and rest:
            d = int(rest.pop(0))
        else:
            raise UnknownSuite(f"unexpected suite argument {flag!r}")
    return base, d


def run_suite(name: str, seed: int = 0, jobs: int = 1, d: int | None = None) -> VerifyReport:
    base, d = _parse_name(name, d)
    if base == "folded-a2":
        d = 3 if d is None else d
        tasks = [(f"folded-d{d}", f"folded A2 with d = {d}: {3 * d + 1} objects, each {2 * d + 1}-cluster tilting",
                  claim_folded, (d,))]
    elif base in SUITES:
        tasks = SUITES[base]
    else:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(suite_names())}")
    start = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            claims = list(pool.map(_run_task, tasks, [seed] * len(tasks)))
    else:
        claims = [_run_task(t, seed) for t in tasks]
    ids = [c.claim_id for c in claims]
    assert len(ids) == len(set(ids)), "claim ids must be unique"
    return VerifyReport(name, claims, time.perf_counter() - start)
