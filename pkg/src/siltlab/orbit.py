"""Finite orbit categories D^b(mod kQ)/G and their cluster tilting objects.

G is one of nu_d = tau o [1-d], a composite tau^p o [q], or the square root
tau^{-1/2} o [d] on the A_2 chart (label i -> i + 3d + 1). Morphisms in the
orbit category are Hom_C(x, y) = sum_i Hom_D(x, G^i y); only finitely many
terms are nonzero because G moves shifts at a nonzero average rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .derived import (
    AutoSpec,
    DerivedObject,
    a2_label,
    a2_object,
    apply_auto,
    hom_d,
    objects_in_window,
)
from .modules import all_intervals, projective
from .quiver import QuiverA
from .silting import SiltingCandidate, hasse, silting_from_pool

# |shift(G^k X) - shift(X) - k * rate| never exceeds this
_DRIFT = 3


@dataclass(frozen=True)
class OrbitFunctor:
    kind: str
    d: int = 0
    tau_power: int = 0
    shift: int = 0

    @classmethod
    def nu(cls, d: int) -> "OrbitFunctor":
        return cls("nu", d=d, tau_power=1, shift=1 - d)

    @classmethod
    def composite(cls, p: int, q: int) -> "OrbitFunctor":
        return cls("composite", tau_power=p, shift=q)

    @classmethod
    def a2_root(cls, d: int) -> "OrbitFunctor":
        return cls("a2root", d=d)

    @classmethod
    def parse(cls, text: str) -> "OrbitFunctor":
        """``nu2``, ``tau^1[-1]``-style composites written ``comp:p,q``, or ``fold3``."""
        t = text.strip().lower()
        if t.startswith("nu"):
            return cls.nu(int(t[2:]))
        if t.startswith("fold"):
            return cls.a2_root(int(t[4:]))
        if t.startswith("comp:"):
            p, q = t[5:].split(",")
            return cls.composite(int(p), int(q))
        raise ValueError(f"unknown functor {text!r}; use nu<d>, fold<d> or comp:<p>,<q>")

    def rate(self, Q: QuiverA) -> Fraction:
        """Average change of shift per application (tau^{n+1} = [-2] on A_n)."""
        if self.kind == "a2root":
            return Fraction(3 * self.d + 1, 3)
        return self.shift - Fraction(2 * self.tau_power, Q.n + 1)

    def power(self, Q: QuiverA, X: DerivedObject, k: int) -> DerivedObject:
        if self.kind == "a2root":
            return a2_object(Q, a2_label(Q, X) + k * (3 * self.d + 1))
        return apply_auto(Q, X, AutoSpec(k * self.tau_power, k * self.shift))

    def describe(self) -> str:
        if self.kind == "nu":
            return f"nu_{self.d}"
        if self.kind == "a2root":
            return f"tau^(-1/2)[{self.d}]"
        return f"tau^{self.tau_power}[{self.shift}]"


class OrbitError(ValueError):
    pass


@dataclass
class OrbitCategory:
    quiver: QuiverA
    functor: OrbitFunctor
    reps: list[DerivedObject] = field(default_factory=list)
    cy_dim: int | None = None
    hom_table: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self._index = {X: i for i, X in enumerate(self.reps)}

    @property
    def name(self) -> str:
        return f"D^b({self.quiver})/{self.functor.describe()}"

    def index(self, X: DerivedObject) -> int:
        return self._index[X]

    def project(self, X: DerivedObject) -> DerivedObject:
        return canonical_rep(self.quiver, self.functor, X)

    def shift_rep(self, X: DerivedObject, k: int) -> DerivedObject:
        return self.project(X[k])

    def hom(self, x: DerivedObject, y: DerivedObject, k: int = 0) -> int:
        key = (self._index[x], self._index[y], k)
        if key not in self.hom_table:
            self.hom_table[key] = _orbit_sum(self.quiver, self.functor, x, y[k])
        return self.hom_table[key]


def _power_range(rate: Fraction, start: int, lo: int, hi: int) -> range:
    """Powers k for which start + k*rate may land in [lo, hi] (allowing drift)."""
    a = Fraction(lo - _DRIFT - start) / rate
    b = Fraction(hi + _DRIFT - start) / rate
    a, b = min(a, b), max(a, b)
    return range(math.floor(a), math.ceil(b) + 1)


def canonical_rep(Q: QuiverA, G: OrbitFunctor, X: DerivedObject) -> DerivedObject:
    """The orbit element with minimal (shift, lo, hi) among those of shift >= 0."""
    r = G.rate(Q)
    window_top = math.ceil(abs(r)) + 2 * _DRIFT
    best = None
    for k in _power_range(r, X.shift, 0, window_top):
        Y = G.power(Q, X, k)
        if Y.shift >= 0 and (best is None or Y.sort_key() < best.sort_key()):
            best = Y
    if best is None:
        raise OrbitError(f"no orbit element of {X} with nonnegative shift found")
    return best


def _orbit_sum(Q: QuiverA, G: OrbitFunctor, x: DerivedObject, y: DerivedObject) -> int:
    total = 0
    for k in _power_range(G.rate(Q), y.shift, x.shift, x.shift + 1):
        total += hom_d(Q, x, G.power(Q, y, k))
    return total


def hom_orbit(C: OrbitCategory, x: DerivedObject, y: DerivedObject, k: int = 0) -> int:
    """dim Hom_C(x, y[k]) = sum_i dim Hom_D(x, G^i (y[k]))."""
    return C.hom(x, y, k)


def build_orbit(Q: QuiverA, G: OrbitFunctor, check_cy: bool = True) -> OrbitCategory:
    if G.kind == "nu" and G.d < 1:
        raise OrbitError("nu_d needs d >= 1")
    if G.kind == "nu" and G.d == 1 and Q.n > 1:
        raise OrbitError("nu_1 = tau does not give a translation-free orbit category; use d >= 2")
    if G.kind == "a2root" and (Q.n != 2 or G.d < 1):
        raise OrbitError("the folded functor needs A_2 and d >= 1")
    if G.rate(Q) == 0:
        raise OrbitError(f"{G.describe()} has zero net translation on {Q}")
    r = G.rate(Q)
    top = math.ceil(abs(r)) + 2 * _DRIFT
    reps = sorted({canonical_rep(Q, G, X) for X in objects_in_window(Q, 0, top)})
    cy = None
    if G.kind == "nu":
        cy = G.d
    elif G.kind == "a2root":
        cy = 2 * G.d + 1
    C = OrbitCategory(Q, G, reps, cy)
    if check_cy and cy is not None:
        bad = cy_symmetry_failures(C)
        if bad:
            raise OrbitError(f"{cy}-CY symmetry fails in {C.name}: {bad[:3]}")
    return C


def cy_symmetry_failures(C: OrbitCategory) -> list[tuple]:
    """Triples (x, y, i) with Hom(x, y[i]) != Hom(y, x[cy - i]), 0 < i < cy."""
    out = []
    for x in C.reps:
        for y in C.reps:
            for i in range(1, C.cy_dim):
                if C.hom(x, y, i) != C.hom(y, x, C.cy_dim - i):
                    out.append((x, y, i))
    return out


# -- cluster tilting ----------------------------------------------------------

def _rigid_pair(C: OrbitCategory, x, y, d: int) -> bool:
    return all(C.hom(x, y, i) == 0 and C.hom(y, x, i) == 0 for i in range(1, d))


def right_perp(C: OrbitCategory, U: Iterable[DerivedObject], d: int) -> set[DerivedObject]:
    """Reps x with Hom(U, x[i]) = 0 for 1 <= i <= d-1."""
    U = list(U)
    return {x for x in C.reps if all(C.hom(u, x, i) == 0 for u in U for i in range(1, d))}


def left_perp(C: OrbitCategory, U: Iterable[DerivedObject], d: int) -> set[DerivedObject]:
    """Reps x with Hom(x, U[i]) = 0 for 1 <= i <= d-1."""
    U = list(U)
    return {x for x in C.reps if all(C.hom(x, u, i) == 0 for u in U for i in range(1, d))}


def maximal_cliques(adj: dict[int, set[int]]) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting."""
    out: list[frozenset[int]] = []

    def expand(R: set[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            out.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: len(adj[u] & P))
        for v in sorted(P - adj[pivot]):
            expand(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(adj), set())
    return out


def enumerate_ctilt(C: OrbitCategory, d: int) -> list[frozenset[DerivedObject]]:
    """All d-cluster tilting subsets of the representatives.

    Every d-cluster tilting set is maximal d-rigid, so candidates are the
    maximal cliques of the d-rigidity graph; each is kept iff it equals its
    right perpendicular category.
    """
    if d < 1:
        raise ValueError("d must be positive")
    reps = C.reps
    rigid = [i for i, x in enumerate(reps) if _rigid_pair(C, x, x, d)]
    adj = {i: {j for j in rigid if j != i and _rigid_pair(C, reps[i], reps[j], d)} for i in rigid}
    found = []
    for clique in maximal_cliques(adj):
        U = frozenset(reps[i] for i in clique)
        if right_perp(C, U, d) == set(U):
            found.append(U)
    return sorted(found, key=lambda U: sorted(X.sort_key() for X in U))


def is_d_rigid(C: OrbitCategory, U: Iterable[DerivedObject], d: int) -> bool:
    U = list(U)
    return all(_rigid_pair(C, x, y, d) for x in U for y in U)


# -- fundamental domain and the silting-to-cluster-tilting map --------------

def fundamental_domain(Q: QuiverA, d: int) -> list[DerivedObject]:
    """Modules in shifts 0..d-2 together with the projectives shifted by d-1."""
    if d < 2:
        raise ValueError("the fundamental domain needs d >= 2")
    objs = [DerivedObject.of(M, s) for s in range(d - 1) for M in all_intervals(Q)]
    objs += [DerivedObject.of(projective(Q, v), d - 1) for v in Q.vertices]
    return sorted(objs)


def project(C: OrbitCategory, T: Iterable[DerivedObject]) -> frozenset[DerivedObject]:
    return frozenset(C.project(X) for X in T)


def amiot_map_check(Q: QuiverA, d: int) -> dict:
    """Silting objects inside the fundamental domain against cluster tilting objects of C_d(kQ)."""
    C = build_orbit(Q, OrbitFunctor.nu(d))
    F = fundamental_domain(Q, d)
    silt = silting_from_pool(Q, F)
    ctilt = enumerate_ctilt(C, d)
    images = [project(C, T) for T in silt]
    injective = len(set(images)) == len(images)
    onto = set(images) == set(ctilt)
    problems = []
    if not injective:
        seen: dict = {}
        for T, U in zip(silt, images):
            if U in seen:
                problems.append({"collision": [_obj_list(Q, seen[U]), _obj_list(Q, T)]})
            seen[U] = T
    for U in set(images) - set(ctilt):
        problems.append({"image_not_ctilt": _obj_list(Q, U)})
    for U in set(ctilt) - set(images):
        problems.append({"ctilt_not_hit": _obj_list(Q, U)})
    domain_is_skeleton = sorted(C.project(X) for X in F) == sorted(C.reps) and len(F) == len(C.reps)
    return {
        "category": C.name,
        "ind_count": len(C.reps),
        "fundamental_domain_size": len(F),
        "fundamental_domain_bijective": domain_is_skeleton,
        "ctilt": [_obj_list(Q, U) for U in ctilt],
        "silt_in_F": [_obj_list(Q, T) for T in silt],
        "bijection": injective and onto,
        "counterexamples": problems,
    }


def mutation_projection_check(Q: QuiverA, d: int,
                              samples: Sequence[tuple[SiltingCandidate, SiltingCandidate]] | None = None) -> dict:
    """Each cover T > T' of silting objects in F projects to a one-summand exchange."""
    C = build_orbit(Q, OrbitFunctor.nu(d))
    ctilt = set(enumerate_ctilt(C, d))
    if samples is None:
        silt = silting_from_pool(Q, fundamental_domain(Q, d))
        samples = hasse(Q, silt).covers()
    checked, failures = 0, []
    for T, T2 in samples:
        a, b = project(C, T), project(C, T2)
        checked += 1
        if a == b and T == T2:
            continue
        ok = len(a - b) == 1 and len(b - a) == 1 and a in ctilt and b in ctilt
        if not ok:
            failures.append({"cover": [_obj_list(Q, T), _obj_list(Q, T2)],
                             "images": [_obj_list(Q, a), _obj_list(Q, b)]})
    degenerate = Q.n == 1
    return {"category": C.name, "covers_checked": checked, "degenerate": degenerate,
            "failures": failures, "pass": not failures}


def exchange_graph(ctilt: Sequence[frozenset]) -> list[tuple[int, int]]:
    edges = []
    for i, j in combinations(range(len(ctilt)), 2):
        if len(ctilt[i] ^ ctilt[j]) == 2:
            edges.append((i, j))
    return edges


def exchange_graph_dot(Q: QuiverA, ctilt: Sequence[frozenset]) -> str:
    lines = ["graph exchange {"]
    for i, U in enumerate(ctilt):
        label = " + ".join(str(X) for X in sorted(U))
        lines.append(f'  c{i} [label="{label}"];')
    for i, j in exchange_graph(ctilt):
        lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines)


def _obj_list(Q: QuiverA, objs: Iterable[DerivedObject]) -> list[dict]:
    return [X.to_json(Q) for X in sorted(objs)]


def folded_a2_report(d: int, Q: QuiverA | None = None) -> dict:
    """Counts for D^b(kA_2)/tau^{-1/2}[d]: objects, (2d+1)-cluster tilting sets, rigid sets."""
    Q = Q or QuiverA(2)
    C = build_orbit(Q, OrbitFunctor.a2_root(d))
    m = 2 * d + 1
    ctilt = enumerate_ctilt(C, m)
    largest_rigid = max(len(U) for U in _all_rigid(C, m))
    return {
        "category": C.name,
        "ind_count": len(C.reps),
        "ctilt": [_obj_list(Q, U) for U in ctilt],
        "all_singletons": all(len(U) == 1 for U in ctilt) and len(ctilt) == len(C.reps),
        "largest_rigid": largest_rigid,
        "cy_hypothesis_holds": d % 2 == 1,
    }


def _all_rigid(C: OrbitCategory, d: int) -> list[tuple]:
    out = []
    for k in range(1, len(C.reps) + 1):
        found = [U for U in combinations(C.reps, k) if is_d_rigid(C, U, d)]
        if not found:
            break
        out += found
    return out
