"""Silting objects in per kQ: tests, partial order, intervals, Hasse quivers, mutation.

Hom-vanishing "for all i >= 1" is checked on a finite range: Hom(M[s], N[t])
can only be nonzero for t in {s, s+1}, so Hom(X, Y[i]) = 0 for every
i > shift(X) - shift(Y) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .derived import (
    AutoSpec,
    DerivedObject,
    apply_auto,
    a2_label,
    hom_d,
    nu_d,
    objects_in_window,
    serre,
)
from .linalg import det
from .modules import projective
from .quiver import QuiverA


class NotSiltingError(ValueError):
    pass


class MutationError(RuntimeError):
    pass


@dataclass(frozen=True)
class SiltingCandidate:
    """A basic object, stored as the canonically sorted tuple of its summands."""

    summands: tuple[DerivedObject, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.summands)))
        if len(ordered) != len(self.summands):
            raise ValueError("summands must be pairwise non-isomorphic")
        object.__setattr__(self, "summands", ordered)

    @classmethod
    def of(cls, objs: Iterable[DerivedObject]) -> "SiltingCandidate":
        return cls(tuple(objs))

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __contains__(self, X) -> bool:
        return X in self.summands

    def __getitem__(self, k: int) -> "SiltingCandidate":
        return SiltingCandidate(tuple(X[k] for X in self.summands))

    @property
    def min_shift(self) -> int:
        return min(X.shift for X in self.summands)

    @property
    def max_shift(self) -> int:
        return max(X.shift for X in self.summands)

    def without(self, X: DerivedObject) -> "SiltingCandidate":
        return SiltingCandidate(tuple(Y for Y in self.summands if Y != X))

    def with_(self, X: DerivedObject) -> "SiltingCandidate":
        return SiltingCandidate(self.summands + (X,))

    def to_json(self, Q: QuiverA | None = None) -> list[dict]:
        return [X.to_json(Q) for X in self.summands]

    def labels(self, Q: QuiverA) -> tuple[int, ...]:
        """A_2 integer labels, ascending."""
        return tuple(sorted(a2_label(Q, X) for X in self.summands))

    def __str__(self) -> str:
        return " + ".join(str(X) for X in self.summands)


def projective_silting(Q: QuiverA) -> SiltingCandidate:
    """The silting object A = kQ."""
    return SiltingCandidate.of(DerivedObject.of(projective(Q, v)) for v in Q.vertices)


# -- Hom vanishing -------------------------------------------------------

def _vanish_above(Q: QuiverA, X: DerivedObject, Y: DerivedObject, start: int) -> bool:
    """Hom(X, Y[i]) = 0 for every i >= start."""
    top = X.shift - Y.shift + 1
    return all(hom_d(Q, X, Y[i]) == 0 for i in range(start, top + 1))


def _compatible(Q: QuiverA, X: DerivedObject, Y: DerivedObject) -> bool:
    return _vanish_above(Q, X, Y, 1) and _vanish_above(Q, Y, X, 1)


def is_presilting(Q: QuiverA, P: Iterable[DerivedObject]) -> bool:
    objs = list(P)
    return all(_vanish_above(Q, X, Y, 1) for X in objs for Y in objs)


def k0_matrix(Q: QuiverA, P: Iterable[DerivedObject]) -> list[list[int]]:
    return [list(X.k0_class(Q.n)) for X in P]


def is_silting(Q: QuiverA, P: Iterable[DerivedObject]) -> bool:
    """Presilting, n summands, and K_0 classes forming a Z-basis.

    The last two conditions stand in for thick generation; they are
    equivalent to it for presilting objects over kQ.
    """
    objs = list(P)
    if len(set(objs)) != Q.n or len(objs) != Q.n:
        return False
    if not is_presilting(Q, objs):
        return False
    return abs(det(k0_matrix(Q, objs))) == 1


def _require_silting(Q: QuiverA, *objs: Iterable[DerivedObject]) -> None:
    for P in objs:
        if not is_silting(Q, P):
            raise NotSiltingError(f"not a silting object over {Q}: {SiltingCandidate.of(P)}")


def _geq(Q: QuiverA, P: Iterable[DerivedObject], R: Iterable[DerivedObject]) -> bool:
    R = list(R)
    return all(_vanish_above(Q, X, Y, 1) for X in P for Y in R)


def silting_geq(Q: QuiverA, P: SiltingCandidate, R: SiltingCandidate) -> bool:
    """P >= R iff Hom(P, R[i]) = 0 for all i >= 1."""
    _require_silting(Q, P, R)
    return _geq(Q, P, R)


def is_d_silting(Q: QuiverA, P: SiltingCandidate, d: int) -> bool:
    """Hom(nu X, Y[i]) = 0 for all summands X, Y and all i > d."""
    _require_silting(Q, P)
    return _is_d_silting(Q, P, d)


def _is_d_silting(Q: QuiverA, P: Iterable[DerivedObject], d: int) -> bool:
    objs = list(P)
    return all(_vanish_above(Q, serre(Q, X), Y, d + 1) for X in objs for Y in objs)


# -- intervals -------------------------------------------------------------

def interval_pool(Q: QuiverA, A: SiltingCandidate, n: int) -> list[DerivedObject]:
    """Indecomposables X with Hom(A, X[>0]) = 0 and Hom(X, A[n][>0]) = 0.

    Any such X has shift within one of [min A, max A + n] (a summand of A
    would otherwise map to a positive shift of X or the reverse), so the
    window below is exhaustive.
    """
    window = objects_in_window(Q, A.min_shift - 1, A.max_shift + n + 1)
    An = list(A[n])
    return [
        X for X in window
        if all(_vanish_above(Q, P, X, 1) for P in A) and all(_vanish_above(Q, X, P, 1) for P in An)
    ]


def silting_from_pool(Q: QuiverA, pool: Sequence[DerivedObject]) -> list[SiltingCandidate]:
    """Every silting object whose summands all lie in ``pool``.

    Backtracking over pairwise-compatible summands (cliques of size n in the
    compatibility graph), then the K_0 test on each complete clique.
    """
    pool = sorted(pool)
    N = len(pool)
    compat = [[_compatible(Q, pool[i], pool[j]) for j in range(N)] for i in range(N)]
    found: list[SiltingCandidate] = []

    def extend(chosen: list[int], candidates: list[int]) -> None:
        if len(chosen) == Q.n:
            objs = [pool[i] for i in chosen]
            if abs(det(k0_matrix(Q, objs))) == 1:
                found.append(SiltingCandidate.of(objs))
            return
        if len(chosen) + len(candidates) < Q.n:
            return
        for k, i in enumerate(candidates):
            extend(chosen + [i], [j for j in candidates[k + 1:] if compat[i][j]])

    extend([], [i for i in range(N) if compat[i][i]])
    return sorted(found, key=_candidate_key)


def _candidate_key(P: SiltingCandidate):
    return tuple(X.sort_key() for X in P.summands)


def enumerate_interval(Q: QuiverA, A: SiltingCandidate, n: int) -> list[SiltingCandidate]:
    """All silting P with A >= P >= A[n]."""
    _require_silting(Q, A)
    if n < 0:
        raise ValueError("interval length must be nonnegative")
    return silting_from_pool(Q, interval_pool(Q, A, n))


# -- Hasse quiver ------------------------------------------------------------

@dataclass
class HasseQuiver:
    nodes: list[SiltingCandidate]
    arrows: list[tuple[int, int]] = field(default_factory=list)

    def covers(self) -> list[tuple[SiltingCandidate, SiltingCandidate]]:
        return [(self.nodes[a], self.nodes[b]) for a, b in self.arrows]

    def to_json(self, Q: QuiverA | None = None) -> dict:
        return {
            "nodes": [P.to_json(Q) for P in self.nodes],
            "adjacency": {str(i): [b for a, b in self.arrows if a == i] for i in range(len(self.nodes))},
        }

    def to_dot(self, Q: QuiverA | None = None, top: SiltingCandidate | None = None) -> str:
        """Graphviz output; nodes are ranked by their distance from ``top``."""
        def name(P):
            if Q is not None and Q.n == 2:
                return "+".join(str(i) for i in P.labels(Q))
            return str(P)

        depth = self.depths(top) if top is not None else {}
        lines = ["digraph silt {", "  rankdir=LR;"]
        for i, P in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{name(P)}"];')
        rows: dict[int, list[int]] = {}
        for i, r in depth.items():
            rows.setdefault(r, []).append(i)
        for r in sorted(rows):
            lines.append("  { rank=same; " + " ".join(f"n{i};" for i in rows[r]) + " }")
        for a, b in self.arrows:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines)

    def depths(self, top: SiltingCandidate) -> dict[int, int]:
        """Length of the shortest arrow path from ``top`` to each node."""
        start = self.nodes.index(top)
        dist = {start: 0}
        frontier = [start]
        while frontier:
            nxt = []
            for a in frontier:
                for x, b in self.arrows:
                    if x == a and b not in dist:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        return dist


def geq_matrix(Q: QuiverA, nodes: Sequence[SiltingCandidate]) -> np.ndarray:
    N = len(nodes)
    out = np.zeros((N, N), dtype=bool)
    for i in range(N):
        for j in range(N):
            out[i, j] = i == j or _geq(Q, nodes[i], nodes[j])
    return out


def hasse(Q: QuiverA, nodes: Sequence[SiltingCandidate]) -> HasseQuiver:
    """Covering relations of >= restricted to ``nodes`` (arrows point downward)."""
    nodes = list(nodes)
    geq = geq_matrix(Q, nodes)
    strict = geq & ~np.eye(len(nodes), dtype=bool)
    through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    cover = strict & ~through
    arrows = [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]
    return HasseQuiver(nodes, sorted(arrows))


# -- mutation -----------------------------------------------------------------

LEFT = "left"
RIGHT = "right"


def mutate(Q: QuiverA, T: SiltingCandidate, X: DerivedObject, direction: str) -> SiltingCandidate:
    """Irreducible mutation of T at the summand X.

    Left mutation returns the silting object U + Y covered by T, right
    mutation the one covering T, where U is the complement of X.
    """
    if direction not in (LEFT, RIGHT):
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    _require_silting(Q, T)
    if X not in T:
        raise ValueError(f"{X} is not a summand of {T}")
    U = T.without(X)
    window = objects_in_window(Q, T.min_shift - 1, T.max_shift + 1)
    found = []
    for Y in window:
        if Y in T:
            continue
        R = U.with_(Y)
        if not is_silting(Q, R):
            continue
        if direction == LEFT and _geq(Q, T, R):
            found.append(R)
        elif direction == RIGHT and _geq(Q, R, T):
            found.append(R)
    if not found:
        raise MutationError(f"no {direction} mutation of {T} at {X} inside shifts "
                            f"[{T.min_shift - 1}, {T.max_shift + 1}]")
    # The candidates lie on the chain silt_U; the mutation is its end nearest T.
    if direction == LEFT:
        best = [R for R in found if all(_geq(Q, R, S) for S in found)]
    else:
        best = [R for R in found if all(_geq(Q, S, R) for S in found)]
    if len(best) != 1:
        raise MutationError(f"{len(found)} incomparable {direction} mutation candidates for {T} at {X}")
    return best[0]


def new_summand(T: SiltingCandidate, R: SiltingCandidate) -> DerivedObject:
    (Y,) = [Y for Y in R if Y not in T]
    return Y


# -- bound and cluster tilting verifiers----------------------------------------------

def verify_mutation_bound(Q: QuiverA, A: SiltingCandidate, U: Iterable[DerivedObject], n: int,
                          interval: Sequence[SiltingCandidate] | None = None):
    """silt_U intersected with [A[n], A], and whether it has at most n+1 elements."""
    U = list(U)
    if len(U) != Q.n - 1 or not is_presilting(Q, U):
        raise ValueError("U must be presilting with n_vertices - 1 summands")
    if interval is None:
        interval = enumerate_interval(Q, A, n)
    hits = [P for P in interval if all(X in P for X in U)]
    return hits, len(hits) <= n + 1


def ud_closure(Q: QuiverA, P: Iterable[DerivedObject], d: int, lo_shift: int, hi_shift: int) -> set[DerivedObject]:
    """The nu_d-translates of summands of P with shift in [lo_shift, hi_shift]."""
    if d < 2:
        raise ValueError("nu_d orbits need d >= 2")
    out = set()
    for X in P:
        for sign in (1, -1):
            Y = X
            # nu_d moves the shift by -(d-1) or -d, so each direction exits the window
            while lo_shift - d <= Y.shift <= hi_shift + d:
                if lo_shift <= Y.shift <= hi_shift:
                    out.add(Y)
                Y = nu_d(Q, Y, d) if sign == 1 else _nu_d_inv(Q, Y, d)
    return out


def _nu_d_inv(Q: QuiverA, X: DerivedObject, d: int) -> DerivedObject:
    return apply_auto(Q, X, AutoSpec.nu_d(d).inverse())


def verify_ud_cluster_tilting(Q: QuiverA, P: SiltingCandidate, d: int, window: tuple[int, int]) -> bool:
    """Weak d-cluster tilting of U_d(P) = add{nu_d^i P}, checked on a shift window.

    For X in the window: X in U_d(P) iff Hom(U, X[i]) = 0 for all U in U_d(P)
    and 1 <= i <= d-1.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    if not is_d_silting(Q, P, d):
        raise NotSiltingError(f"{P} is not {d}-silting")
    lo, hi = window
    members = ud_closure(Q, P, d, lo - d - 2, hi + d + 2)
    for X in objects_in_window(Q, lo, hi):
        perp = all(hom_d(Q, U, X[i]) == 0 for U in members for i in range(1, d))
        if perp != (X in members):
            return False
    return True
