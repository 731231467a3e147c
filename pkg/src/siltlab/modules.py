"""Representations of type-A quivers: interval modules, Hom/Ext and AR knitting.

Every indecomposable representation of a type-A quiver is thin and supported
on an interval [lo, hi], with identity maps along the arrows inside the
support. Morphism spaces are computed as kernels of the commutativity
equations, over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .linalg import nullity
from .quiver import QuiverA, euler_form


@dataclass(frozen=True, order=True)
class IntervalModule:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi or self.lo < 1:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    def support(self) -> range:
        return range(self.lo, self.hi + 1)

    def dim_vector(self, n: int) -> tuple[int, ...]:
        if self.hi > n:
            raise ValueError(f"{self} does not fit on {n} vertices")
        return tuple(1 if self.lo <= v <= self.hi else 0 for v in range(1, n + 1))

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}

    def __str__(self) -> str:
        return f"M[{self.lo},{self.hi}]"


def all_intervals(Q: QuiverA) -> list[IntervalModule]:
    return [IntervalModule(a, b) for a in Q.vertices for b in range(a, Q.n + 1)]


def _check(Q: QuiverA, *mods: IntervalModule) -> None:
    for M in mods:
        if M.hi > Q.n:
            raise ValueError(f"{M} is not a module over {Q}")


def _reach(Q: QuiverA, v: int, forward: bool) -> IntervalModule:
    arrows = set(Q.arrows())
    lo = hi = v
    step = (lambda a, b: (a, b) in arrows) if forward else (lambda a, b: (b, a) in arrows)
    while lo > 1 and step(lo, lo - 1):
        lo -= 1
    while hi < Q.n and step(hi, hi + 1):
        hi += 1
    return IntervalModule(lo, hi)


def projective(Q: QuiverA, v: int) -> IntervalModule:
    """P_v: supported on the vertices reachable from v along arrows."""
    if v not in Q.vertices:
        raise ValueError(f"vertex {v} not in {Q}")
    return _reach(Q, v, forward=True)


def injective(Q: QuiverA, v: int) -> IntervalModule:
    """I_v: supported on the vertices from which v is reachable."""
    if v not in Q.vertices:
        raise ValueError(f"vertex {v} not in {Q}")
    return _reach(Q, v, forward=False)


def is_projective(Q: QuiverA, M: IntervalModule) -> bool:
    return any(projective(Q, v) == M for v in Q.vertices)


def is_injective(Q: QuiverA, M: IntervalModule) -> bool:
    return any(injective(Q, v) == M for v in Q.vertices)


def hom_equations(Q: QuiverA, M: IntervalModule, N: IntervalModule) -> tuple[list[list[int]], int]:
    """The linear system whose kernel is Hom(M, N).

    Unknowns are the scalars phi_v for v in supp M and supp N; each arrow
    a: v -> w contributes the entry N_a phi_v - phi_w M_a of the map M_v -> N_w.
    """
    common = [v for v in M.support() if N.lo <= v <= N.hi]
    index = {v: k for k, v in enumerate(common)}
    inM = lambda v: M.lo <= v <= M.hi
    inN = lambda v: N.lo <= v <= N.hi
    rows = []
    for v, w in Q.arrows():
        if not (inM(v) and inN(w)):
            continue
        row = [0] * len(common)
        if v in index and inN(w):
            row[index[v]] += 1
        if w in index and inM(v):
            row[index[w]] -= 1
        rows.append(row)
    return rows, len(common)


@lru_cache(maxsize=None)
def hom_dim(Q: QuiverA, M: IntervalModule, N: IntervalModule) -> int:
    _check(Q, M, N)
    rows, n_vars = hom_equations(Q, M, N)
    return nullity(rows, n_vars)


@lru_cache(maxsize=None)
def ext_dim(Q: QuiverA, M: IntervalModule, N: IntervalModule) -> int:
    """dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N> (hereditary)."""
    value = hom_dim(Q, M, N) - euler_form(Q, M.dim_vector(Q.n), N.dim_vector(Q.n))
    if value < 0:
        raise ArithmeticError(f"negative Ext dimension for ({M}, {N}) over {Q}")
    return value


# -- Auslander-Reiten quiver -----------------------------------------------

@dataclass
class ARQuiver:
    quiver: QuiverA
    vertices: list[IntervalModule] = field(default_factory=list)
    arrows: list[tuple[IntervalModule, IntervalModule]] = field(default_factory=list)
    translate: dict[IntervalModule, IntervalModule] = field(default_factory=dict)
    # (m, v) with M = tau^{-m} P_v
    coords: dict[IntervalModule, tuple[int, int]] = field(default_factory=dict)

    def tau(self, M: IntervalModule) -> IntervalModule | None:
        return self.translate.get(M)

    def tau_inv(self, M: IntervalModule) -> IntervalModule | None:
        for X, Y in self.translate.items():
            if Y == M:
                return X
        return None

    def successors(self, M: IntervalModule) -> list[IntervalModule]:
        return [b for a, b in self.arrows if a == M]

    def predecessors(self, M: IntervalModule) -> list[IntervalModule]:
        return [a for a, b in self.arrows if b == M]

    def to_dot(self) -> str:
        lines = [f'digraph "AR({self.quiver})" {{', "  rankdir=LR;"]
        for M in self.vertices:
            m, v = self.coords[M]
            lines.append(f'  "{M}" [label="{M.lo}{M.hi}" pos="{m},{v}"];')
        for a, b in self.arrows:
            lines.append(f'  "{a}" -> "{b}";')
        for X, Y in sorted(self.translate.items()):
            lines.append(f'  "{X}" -> "{Y}" [style=dashed constraint=false];')
        lines.append("}")
        return "\n".join(lines)


def _indicator_interval(vec: list[int]) -> IntervalModule | None:
    support = [k + 1 for k, x in enumerate(vec) if x != 0]
    if not support or any(x not in (0, 1) for x in vec):
        return None
    lo, hi = support[0], support[-1]
    if support != list(range(lo, hi + 1)):
        return None
    return IntervalModule(lo, hi)


@lru_cache(maxsize=None)
def knit_ar_quiver(Q: QuiverA) -> ARQuiver:
    """Knit the AR quiver of mod kQ starting from the projectives.

    The irreducible maps between projectives are P_w -> P_v for each arrow
    v -> w (rad P_v is the sum of those P_w). A module X with all its
    predecessors settled gets tau^{-1} X of dimension
    sum_{X -> E} dim E - dim X, unless X is injective.
    """
    n = Q.n
    ar = ARQuiver(Q)
    proj = {v: projective(Q, v) for v in Q.vertices}
    inj = set(injective(Q, v) for v in Q.vertices)
    for v, P in proj.items():
        ar.vertices.append(P)
        ar.coords[P] = (0, v)
    for v, w in Q.arrows():
        ar.arrows.append((proj[w], proj[v]))

    preds: dict[IntervalModule, list[IntervalModule]] = {P: [] for P in proj.values()}
    for a, b in ar.arrows:
        preds[b].append(a)
    # tau^{-1} status: module, or None once known to be injective
    done: dict[IntervalModule, IntervalModule | None] = {}
    pending = list(ar.vertices)
    while pending:
        progress = False
        for X in list(pending):
            if any(Y not in done for Y in preds[X]):
                continue
            pending.remove(X)
            progress = True
            if X in inj:
                done[X] = None
                continue
            succ = [b for a, b in ar.arrows if a == X]
            vec = [0] * n
            for E in succ:
                for k, x in enumerate(E.dim_vector(n)):
                    vec[k] += x
            for k, x in enumerate(X.dim_vector(n)):
                vec[k] -= x
            Z = _indicator_interval(vec)
            if Z is None or Z in ar.coords:
                raise ArithmeticError(f"knitting {Q}: tau^-1 {X} has dimension vector {vec}")
            m, v = ar.coords[X]
            ar.vertices.append(Z)
            ar.coords[Z] = (m + 1, v)
            ar.translate[Z] = X
            done[X] = Z
            preds[Z] = list(succ)
            for E in succ:
                ar.arrows.append((E, Z))
            pending.append(Z)
        if not progress:
            raise ArithmeticError(f"knitting {Q} stalled")
    if len(ar.vertices) != n * (n + 1) // 2:
        raise ArithmeticError(f"knitting {Q} found {len(ar.vertices)} modules")
    return ar


def tau_module(Q: QuiverA, M: IntervalModule) -> IntervalModule | None:
    """The AR translate in mod kQ; None on projectives."""
    return knit_ar_quiver(Q).tau(M)


def tau_inv_module(Q: QuiverA, M: IntervalModule) -> IntervalModule | None:
    return knit_ar_quiver(Q).tau_inv(M)
