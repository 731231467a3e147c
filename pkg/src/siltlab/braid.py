"""Braid groups of type A in left-greedy (Garside) normal form, and the section-to-braid map.

A braid on N strands is stored as Delta^inf * s_1 ... s_r with each s_j a
positive permutation braid, given as a permutation of {0, ..., N-1} in
one-line notation, s_j neither the identity nor Delta, and every adjacent
pair left-weighted: the left descents of s_{j+1} are right descents of s_j.

The generator b_i (1 <= i <= N-1) is the transposition of positions i-1, i.
A word b_{i_1} ... b_{i_k} corresponds to the permutation s_{i_1} o ... o s_{i_k}
with (p o q)[x] = p[q[x]].
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .derived import object_at
from .quiver import QuiverA, Section, reflect_section, reflections
from .silting import SiltingCandidate, _is_d_silting, is_silting

Perm = tuple[int, ...]
BraidWord = list[tuple[int, int]]


def _compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _transposition(N: int, i: int) -> Perm:
    p = list(range(N))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _identity(N: int) -> Perm:
    return tuple(range(N))


def _delta(N: int) -> Perm:
    return tuple(range(N - 1, -1, -1))


def right_descents(p: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def left_descents(p: Perm) -> frozenset[int]:
    return right_descents(_inverse(p))


def reduced_word(p: Perm) -> list[int]:
    """A reduced expression of p in the generators 1..N-1."""
    word = []
    p = tuple(p)
    while True:
        desc = sorted(right_descents(p))
        if not desc:
            return word[::-1]
        i = desc[0]
        word.append(i)
        p = _compose(p, _transposition(len(p), i))


def _flip(p: Perm, times: int = 1) -> Perm:
    """Conjugation by Delta (an involution on simple elements)."""
    if times % 2 == 0:
        return p
    w0 = _delta(len(p))
    return _compose(_compose(w0, p), w0)


def _left_weight(factors: list[Perm]) -> list[Perm]:
    """Make every adjacent pair left-weighted by sliding generators leftward."""
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b = factors[j], factors[j + 1]
            while True:
                movable = left_descents(b) - right_descents(a)
                if not movable:
                    break
                i = min(movable)
                t = _transposition(len(a), i)
                a, b = _compose(a, t), _compose(t, b)
                changed = True
            factors[j], factors[j + 1] = a, b
    return factors


def _normalize(N: int, inf: int, factors: Sequence[Perm]) -> tuple[int, tuple[Perm, ...]]:
    e, w0 = _identity(N), _delta(N)
    factors = _left_weight([f for f in factors if f != e])
    while factors and factors[0] == w0:
        inf += 1
        factors.pop(0)
    while factors and factors[-1] == e:
        factors.pop()
    return inf, tuple(factors)


@dataclass(frozen=True)
class BraidElement:
    strands: int
    inf: int = 0
    factors: tuple[Perm, ...] = ()

    @classmethod
    def identity(cls, strands: int) -> "BraidElement":
        return cls(strands)

    @classmethod
    def generator(cls, strands: int, i: int, sign: int = 1) -> "BraidElement":
        return normal_form([(i, sign)], strands)

    @classmethod
    def delta(cls, strands: int) -> "BraidElement":
        return cls(strands, 1, ())

    def __mul__(self, other: "BraidElement") -> "BraidElement":
        if other.strands != self.strands:
            raise ValueError("braids on different numbers of strands")
        moved = [_flip(f, other.inf) for f in self.factors]
        inf, factors = _normalize(self.strands, self.inf + other.inf, moved + list(other.factors))
        return BraidElement(self.strands, inf, factors)

    def inverse(self) -> "BraidElement":
        N = self.strands
        w0 = _delta(N)
        # (D^k f_1..f_r)^-1 = f_r^-1 .. f_1^-1 D^-k with f^-1 = D^-1 (w0 o f^-1)
        acc = BraidElement.identity(N)
        for f in reversed(self.factors):
            acc = acc * BraidElement(N, -1, (_compose(w0, _inverse(f)),))
        return acc * BraidElement(N, -self.inf, ())

    def __pow__(self, k: int) -> "BraidElement":
        base = self if k >= 0 else self.inverse()
        out = BraidElement.identity(self.strands)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def word(self) -> BraidWord:
        """A word representing the element (Delta written out, inverses as negative powers)."""
        out: BraidWord = []
        dw = reduced_word(_delta(self.strands))
        if self.inf >= 0:
            out += [(i, 1) for i in dw] * self.inf
        else:
            out += [(i, -1) for i in reversed(dw)] * (-self.inf)
        for f in self.factors:
            out += [(i, 1) for i in reduced_word(f)]
        return out

    def __str__(self) -> str:
        if self.is_identity():
            return "identity"
        sep = "" if self.strands <= 9 else ","
        body = ".".join(sep.join(str(x + 1) for x in f) for f in self.factors)
        return f"D^{self.inf} | {body}" if body else f"D^{self.inf}"


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"b1 b2 B1"``; a capital letter denotes the inverse generator."""
    word: BraidWord = []
    for tok in text.replace(",", " ").split():
        m = re.fullmatch(r"([bB])(\d+)", tok)
        if m is None:
            if tok in ("1", "e", "id"):
                continue
            raise ValueError(f"bad braid letter {tok!r}; use b<i> or B<i>")
        i = int(m.group(2))
        if i < 1 or (strands is not None and i >= strands):
            raise ValueError(f"generator b{i} out of range for {strands} strands")
        word.append((i, 1 if m.group(1) == "b" else -1))
    return word


def format_word(word: Iterable[tuple[int, int]]) -> str:
    return " ".join(("b" if s > 0 else "B") + str(i) for i, s in word) or "1"


def normal_form(word: Iterable[tuple[int, int]], strands: int) -> BraidElement:
    """Left-greedy normal form of a braid word."""
    N = strands
    inf, factors = 0, []
    w0 = _delta(N)
    for i, sign in word:
        if not 1 <= i < N:
            raise ValueError(f"generator b{i} out of range for {N} strands")
        if sign > 0:
            factors.append(_transposition(N, i))
        else:
            # b_i^-1 = D^-1 (w0 o s_i); move D^-1 to the front
            factors = [_flip(f) for f in factors]
            inf -= 1
            factors.append(_compose(w0, _transposition(N, i)))
    inf, fac = _normalize(N, inf, factors)
    return BraidElement(N, inf, fac)


def is_positive(x: BraidElement) -> bool:
    return x.inf >= 0


def braid_geq(a: BraidElement, b: BraidElement) -> bool:
    """a >= b iff a b^-1 is a positive braid."""
    return is_positive(a * b.inverse())


def diagram_strands(Q: QuiverA) -> int:
    """Strands of the braid group of the Dynkin diagram underlying Q."""
    return Q.n + 1


# -- sections to braids ------------------------------------------------------

class WellDefinednessError(AssertionError):
    pass


def braid_images(Q: QuiverA, depth: int) -> dict[Section, BraidElement]:
    """F on every section within ``depth`` reflections of the initial one.

    Reflecting at a sink (sign +1) or source (sign -1) vertex i multiplies
    on the left by b_i^{-sign}. A section reached along two paths must get
    the same normal form; otherwise WellDefinednessError is raised.
    """
    N = diagram_strands(Q)
    start = Section.initial(Q)
    images = {start: BraidElement.identity(N)}
    dist = {start: 0}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        if dist[S] == depth:
            continue
        for v, sign in reflections(S):
            T, eps = reflect_section(S, v, sign)
            value = BraidElement.generator(N, v, -eps) * images[S]
            if T in images:
                if images[T] != value:
                    raise WellDefinednessError(
                        f"section {T.offsets} reached with {images[T]} and {value}")
            else:
                images[T] = value
                dist[T] = dist[S] + 1
                queue.append(T)
    return images


def section_to_braid(Q: QuiverA, S: Section, depth: int) -> BraidElement:
    images = braid_images(Q, depth)
    if S not in images:
        raise LookupError(f"section {S.offsets} unreachable at depth {depth}")
    return images[S]


def section_to_silting(Q: QuiverA, S: Section):
    """The 1-silting object whose summands sit at the section's vertices.

    Sections of Z Q are read in the AR quiver of D^b(rep Q^op): its
    projectives form the initial section, with induced quiver Q.
    """
    if S.quiver != Q:
        raise ValueError("section belongs to a different quiver")
    alg = Q.opposite()
    T = SiltingCandidate.of(object_at(alg, (S.offset(v), v)) for v in Q.vertices)
    if not (is_silting(alg, T) and _is_d_silting(alg, T, 1)):
        raise AssertionError(f"section {S.offsets} did not give a 1-silting object")
    return T


def section_algebra(Q: QuiverA) -> QuiverA:
    """The quiver whose module category carries the sections of Z Q."""
    return Q.opposite()
