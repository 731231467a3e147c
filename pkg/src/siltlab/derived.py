"""The bounded derived category of a type-A path algebra, combinatorially.

Indecomposables are shifted interval modules M[s]. Since kQ is hereditary,

    Hom(M[s], N[t]) = Hom(M, N)    if t == s
                    = Ext^1(M, N)  if t == s + 1
                    = 0            otherwise.

The AR quiver of D^b(mod kQ) is Z Q^op; ``chart_label`` gives each object its
coordinates (m, v) with X = tau^{-m} P_v.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .modules import (
    IntervalModule,
    all_intervals,
    ext_dim,
    hom_dim,
    injective,
    knit_ar_quiver,
    projective,
)
from .quiver import QuiverA


@dataclass(frozen=True)
class DerivedObject:
    lo: int
    hi: int
    shift: int = 0

    @classmethod
    def of(cls, M: IntervalModule, shift: int = 0) -> "DerivedObject":
        return cls(M.lo, M.hi, shift)

    @property
    def module(self) -> IntervalModule:
        return IntervalModule(self.lo, self.hi)

    def sort_key(self) -> tuple[int, int, int]:
        return (self.shift, self.lo, self.hi)

    def __lt__(self, other: "DerivedObject") -> bool:
        return self.sort_key() < other.sort_key()

    def __getitem__(self, k: int) -> "DerivedObject":
        """X[k] is the k-th shift, as in the triangulated notation."""
        return DerivedObject(self.lo, self.hi, self.shift + k)

    def k0_class(self, n: int) -> tuple[int, ...]:
        sign = -1 if self.shift % 2 else 1
        return tuple(sign * x for x in self.module.dim_vector(n))

    def to_json(self, Q: QuiverA | None = None) -> dict:
        out = {"lo": self.lo, "hi": self.hi, "shift": self.shift}
        if Q is not None and Q.n == 2:
            out["label"] = a2_label(Q, self)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DerivedObject":
        return cls(int(data["lo"]), int(data["hi"]), int(data["shift"]))

    def __str__(self) -> str:
        return f"M[{self.lo},{self.hi}]" + (f"[{self.shift}]" if self.shift else "")


def hom_d(Q: QuiverA, X: DerivedObject, Y: DerivedObject) -> int:
    d = Y.shift - X.shift
    if d == 0:
        return hom_dim(Q, X.module, Y.module)
    if d == 1:
        return ext_dim(Q, X.module, Y.module)
    return 0


def objects_in_window(Q: QuiverA, lo_shift: int, hi_shift: int) -> list[DerivedObject]:
    """All indecomposables with shift in [lo_shift, hi_shift], canonically sorted."""
    mods = all_intervals(Q)
    return sorted(DerivedObject.of(M, s) for s in range(lo_shift, hi_shift + 1) for M in mods)


# -- autoequivalences ------------------------------------------------------

@dataclass(frozen=True)
class AutoSpec:
    """The formal composite tau^p o [q]."""

    tau_power: int = 0
    shift: int = 0

    @classmethod
    def serre(cls) -> "AutoSpec":
        return cls(1, 1)

    @classmethod
    def nu_d(cls, d: int) -> "AutoSpec":
        return cls(1, 1 - d)

    def inverse(self) -> "AutoSpec":
        return AutoSpec(-self.tau_power, -self.shift)

    def then(self, other: "AutoSpec") -> "AutoSpec":
        """``other`` after ``self``; tau and [1] commute."""
        return AutoSpec(self.tau_power + other.tau_power, self.shift + other.shift)

    def power(self, k: int) -> "AutoSpec":
        return AutoSpec(k * self.tau_power, k * self.shift)


@lru_cache(maxsize=None)
def _proj_inj_tables(Q: QuiverA):
    proj = {projective(Q, v): v for v in Q.vertices}
    inj = {injective(Q, v): v for v in Q.vertices}
    return proj, inj


def tau(Q: QuiverA, X: DerivedObject) -> DerivedObject:
    proj, _ = _proj_inj_tables(Q)
    M = X.module
    if M in proj:
        return DerivedObject.of(injective(Q, proj[M]), X.shift - 1)
    return DerivedObject.of(knit_ar_quiver(Q).tau(M), X.shift)


@lru_cache(maxsize=None)
def _tau_inv_table(Q: QuiverA) -> dict[IntervalModule, IntervalModule]:
    return {Y: X for X, Y in knit_ar_quiver(Q).translate.items()}


def tau_inv(Q: QuiverA, X: DerivedObject) -> DerivedObject:
    _, inj = _proj_inj_tables(Q)
    M = X.module
    if M in inj:
        return DerivedObject.of(projective(Q, inj[M]), X.shift + 1)
    return DerivedObject.of(_tau_inv_table(Q)[M], X.shift)


def apply_auto(Q: QuiverA, X: DerivedObject, f: AutoSpec) -> DerivedObject:
    Y = X[f.shift]
    step = tau if f.tau_power > 0 else tau_inv
    for _ in range(abs(f.tau_power)):
        Y = step(Q, Y)
    return Y


def serre(Q: QuiverA, X: DerivedObject) -> DerivedObject:
    return apply_auto(Q, X, AutoSpec.serre())


def nu_d(Q: QuiverA, X: DerivedObject, d: int) -> DerivedObject:
    return apply_auto(Q, X, AutoSpec.nu_d(d))


# -- Z Q chart ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _shift_data(Q: QuiverA) -> tuple[dict[int, tuple[int, int]], dict[int, int]]:
    """P_v[1] = tau^{-step} P_u, recorded as v -> (step, u), plus the inverse u -> v."""
    coords = knit_ar_quiver(Q).coords
    fwd = {}
    for v in Q.vertices:
        k, u = coords[injective(Q, v)]
        fwd[v] = (k + 1, u)
    back = {u: v for v, (_, u) in fwd.items()}
    return fwd, back


def chart_label(Q: QuiverA, X: DerivedObject) -> tuple[int, int]:
    """Coordinates (m, v) with X = tau^{-m} P_v."""
    fwd, back = _shift_data(Q)
    m, v = knit_ar_quiver(Q).coords[X.module]
    s = X.shift
    while s > 0:
        step, v = fwd[v]
        m += step
        s -= 1
    while s < 0:
        v = back[v]
        m -= fwd[v][0]
        s += 1
    return m, v


@lru_cache(maxsize=4096)
def object_at(Q: QuiverA, label: tuple[int, int]) -> DerivedObject:
    m, v = label
    if v not in Q.vertices:
        raise ValueError(f"vertex {v} not in {Q}")
    X = DerivedObject.of(projective(Q, v))
    return apply_auto(Q, X, AutoSpec(-m, 0))


def chart_shift_translation(Q: QuiverA) -> dict[int, tuple[int, int]]:
    """How [1] acts on chart labels: (m, v) -> (m + step, u)."""
    return dict(_shift_data(Q)[0])


# -- A_2 integer labels ---------------------------------------------------

def _a2_offsets(Q: QuiverA) -> dict[int, int]:
    if Q.n != 2:
        raise ValueError(f"integer labels are only defined for A_2, got {Q}")
    simple = next(v for v in Q.vertices if projective(Q, v).lo == projective(Q, v).hi)
    return {v: 1 if v == simple else 2 for v in Q.vertices}


def a2_label(Q: QuiverA, X: DerivedObject) -> int:
    """Integer label on the zigzag Z A_2.

    Label 1 is the simple projective, 2 the other projective, and the
    labels increase along the arrows, so tau is i -> i-2 and [1] is i -> i+3.
    """
    r = _a2_offsets(Q)
    m, v = chart_label(Q, X)
    return 2 * m + r[v]


def a2_object(Q: QuiverA, label: int) -> DerivedObject:
    r = _a2_offsets(Q)
    for v, off in r.items():
        if (label - off) % 2 == 0:
            return object_at(Q, ((label - off) // 2, v))
    raise AssertionError("unreachable")


def a2_objects(Q: QuiverA, labels: Iterable[int]) -> list[DerivedObject]:
    return [a2_object(Q, i) for i in labels]


def check_a2_anchor(Q: QuiverA) -> None:
    """Assert the label convention: Hom(i, j) != 0 exactly for j in {i, i+1}."""
    for i in range(-3, 4):
        for j in range(i - 3, i + 4):
            expected = 1 if j - i in (0, 1) else 0
            got = hom_d(Q, a2_object(Q, i), a2_object(Q, j))
            if got != expected:
                raise AssertionError(f"A_2 anchor broken: hom({i},{j}) = {got}")


def chart_dot(Q: QuiverA, lo_shift: int, hi_shift: int) -> str:
    """Graphviz rendering of the AR quiver of D^b restricted to a shift window."""
    objs = objects_in_window(Q, lo_shift, hi_shift)
    present = {chart_label(Q, X): X for X in objs}
    ar_arrows = _chart_arrows(Q)
    lines = [f'digraph "D^b({Q})" {{', "  rankdir=LR;"]
    for (m, v), X in sorted(present.items()):
        label = a2_label(Q, X) if Q.n == 2 else f"{X}"
        lines.append(f'  "{m},{v}" [label="{label}"];')
    for (m, v) in sorted(present):
        for (dm, w) in ar_arrows.get(v, []):
            if (m + dm, w) in present:
                lines.append(f'  "{m},{v}" -> "{m + dm},{w}";')
    lines.append("}")
    return "\n".join(lines)


def _chart_arrows(Q: QuiverA) -> dict[int, list[tuple[int, int]]]:
    """Arrows of Z Q^op leaving (m, v), as (dm, w)."""
    out: dict[int, list[tuple[int, int]]] = {v: [] for v in Q.vertices}
    for v, w in Q.arrows():
        out[w].append((0, v))
        out[v].append((1, w))
    return out


def iter_window_pairs(Q: QuiverA, lo_shift: int, hi_shift: int) -> Iterator[tuple[DerivedObject, DerivedObject]]:
    objs = objects_in_window(Q, lo_shift, hi_shift)
    for X in objs:
        for Y in objs:
            yield X, Y
