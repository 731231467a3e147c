"""Type-A quivers, dimension vectors and sections of the translation quiver ZQ."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

FORWARD = "F"
BACKWARD = "B"


@dataclass(frozen=True)
class QuiverA:
    """The path 1 - 2 - ... - n with an orientation per edge.

    ``orientation[k]`` (0-based) describes the edge between vertices k+1 and
    k+2: ``"F"`` is the arrow k+1 -> k+2, ``"B"`` the arrow k+2 -> k+1.
    """

    n: int
    orientation: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"quiver needs n >= 1, got {self.n!r}")
        orientation = tuple(self.orientation) if self.orientation else (FORWARD,) * (self.n - 1)
        if len(orientation) != self.n - 1:
            raise ValueError(f"A_{self.n} needs {self.n - 1} orientation letters, got {len(orientation)}")
        for letter in orientation:
            if letter not in (FORWARD, BACKWARD):
                raise ValueError(f"orientation letters must be F or B, got {letter!r}")
        object.__setattr__(self, "orientation", orientation)

    @classmethod
    def parse(cls, spec: str) -> "QuiverA":
        """Parse ``"a3"`` or ``"a3:FFB"``-style strings."""
        m = re.fullmatch(r"\s*[aA](\d+)(?::([FBfb]*))?\s*", spec)
        if m is None:
            raise ValueError(f"malformed quiver spec {spec!r}; expected e.g. 'a2' or 'a3:FB'")
        n = int(m.group(1))
        letters = tuple(m.group(2).upper()) if m.group(2) else ()
        return cls(n, letters)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrows(self) -> list[tuple[int, int]]:
        out = []
        for k, letter in enumerate(self.orientation, start=1):
            out.append((k, k + 1) if letter == FORWARD else (k + 1, k))
        return out

    def opposite(self) -> "QuiverA":
        flip = {FORWARD: BACKWARD, BACKWARD: FORWARD}
        return QuiverA(self.n, tuple(flip[o] for o in self.orientation))

    def neighbours(self, v: int) -> list[int]:
        return [w for w in (v - 1, v + 1) if 1 <= w <= self.n]

    def spec(self) -> str:
        if self.n == 1:
            return "a1"
        return f"a{self.n}:{''.join(self.orientation)}"

    def to_json(self) -> dict:
        return {"n": self.n, "orientation": list(self.orientation)}

    @classmethod
    def from_json(cls, data: dict) -> "QuiverA":
        return cls(int(data["n"]), tuple(data.get("orientation", ())))

    def __str__(self) -> str:
        return self.spec()


def euler_form(Q: QuiverA, d: Sequence[int], e: Sequence[int]) -> int:
    """The Euler form <d, e> = sum_v d_v e_v - sum_{v->w} d_v e_w."""
    if len(d) != Q.n or len(e) != Q.n:
        raise ValueError(f"dimension vectors must have length {Q.n}")
    value = sum(d[v] * e[v] for v in range(Q.n))
    for v, w in Q.arrows():
        value -= d[v - 1] * e[w - 1]
    return value


# -- sections ---------------------------------------------------------------

@dataclass(frozen=True)
class Section:
    """A section of ZQ, stored as one offset per vertex.

    The section meets the tau-orbit of vertex v at ZQ-vertex (m_v, v); larger
    offsets lie further in the tau^{-1} direction. For an arrow v -> w of Q the
    slice condition is m_v - m_w in {0, 1}. The all-zero section is the
    initial section, whose induced quiver is Q itself.
    """

    quiver: QuiverA
    offsets: tuple[int, ...]

    def __post_init__(self):
        offsets = tuple(int(m) for m in self.offsets)
        object.__setattr__(self, "offsets", offsets)
        if len(offsets) != self.quiver.n:
            raise ValueError(f"section needs {self.quiver.n} offsets, got {len(offsets)}")
        for v, w in self.quiver.arrows():
            if offsets[v - 1] - offsets[w - 1] not in (0, 1):
                raise ValueError(f"offsets {offsets} violate the slice condition at arrow {v}->{w}")

    @classmethod
    def initial(cls, Q: QuiverA) -> "Section":
        return cls(Q, (0,) * Q.n)

    def offset(self, v: int) -> int:
        return self.offsets[v - 1]

    def arrows(self) -> list[tuple[int, int]]:
        """Arrows of the quiver induced on the section."""
        out = []
        for v, w in self.quiver.arrows():
            out.append((v, w) if self.offset(v) == self.offset(w) else (w, v))
        return out

    def is_sink(self, v: int) -> bool:
        return all(w == v for _, w in self._incident(v))

    def is_source(self, v: int) -> bool:
        return all(u == v for u, _ in self._incident(v))

    def _incident(self, v: int) -> list[tuple[int, int]]:
        return [a for a in self.arrows() if v in a]

    def shifted(self, k: int) -> "Section":
        return Section(self.quiver, tuple(m + k for m in self.offsets))

    def normalized(self) -> "Section":
        """The same section moved so that its smallest offset is 0."""
        return self.shifted(-min(self.offsets))

    def to_json(self) -> dict:
        return {"offsets": list(self.offsets)}


def reflect_section(S: Section, v: int, sign: int | None = None) -> tuple[Section, int]:
    """Reflect S at a sink (toward tau, sign +1) or a source (toward tau^-1, sign -1).

    An isolated vertex (A_1) is both; pass ``sign`` to pick, else the sink
    reading is used.
    """
    if not 1 <= v <= S.quiver.n:
        raise ValueError(f"vertex {v} not in {S.quiver}")
    offsets = list(S.offsets)
    if sign in (None, +1) and S.is_sink(v):
        offsets[v - 1] -= 1
        return Section(S.quiver, tuple(offsets)), +1
    if sign in (None, -1) and S.is_source(v):
        offsets[v - 1] += 1
        return Section(S.quiver, tuple(offsets)), -1
    kind = {None: "a sink nor a source", 1: "a sink", -1: "a source"}[sign]
    raise ValueError(f"vertex {v} is not {kind} of section {S.offsets}")


def reflections(S: Section) -> Iterator[tuple[int, int]]:
    """All admissible (vertex, sign) reflection moves at S."""
    for v in S.quiver.vertices:
        if S.is_sink(v):
            yield v, +1
        if S.is_source(v):
            yield v, -1


def section_ball(Q: QuiverA, depth: int) -> dict[Section, int]:
    """All sections within ``depth`` reflections of the initial one, with distances."""
    start = Section.initial(Q)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        if dist[S] == depth:
            continue
        for v, sign in reflections(S):
            T, _ = reflect_section(S, v, sign)
            if T not in dist:
                dist[T] = dist[S] + 1
                queue.append(T)
    return dist


def all_sections_in_box(Q: QuiverA, lo: int, hi: int) -> list[Section]:
    """Every section with all offsets in [lo, hi], by walking the path."""
    out: list[tuple[int, ...]] = [(m,) for m in range(lo, hi + 1)]
    for (v, w) in [(k, k + 1) for k in range(1, Q.n)]:
        nxt = []
        for partial in out:
            for m in range(lo, hi + 1):
                cand = partial + (m,)
                a, b = (v, w) if (v, w) in Q.arrows() else (w, v)
                if cand[a - 1] - cand[b - 1] in (0, 1):
                    nxt.append(cand)
        out = nxt
    return [Section(Q, o) for o in out]
