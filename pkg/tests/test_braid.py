import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siltlab.braid import (
    BraidElement,
    WellDefinednessError,
    braid_geq,
    braid_images,
    format_word,
    is_positive,
    left_descents,
    normal_form,
    parse_word,
    reduced_word,
    right_descents,
    section_algebra,
    section_to_braid,
    section_to_silting,
)
from siltlab.derived import a2_label
from siltlab.quiver import QuiverA, Section, reflect_section, reflections
from siltlab.silting import is_d_silting, projective_silting, silting_geq

A2 = QuiverA(2)


def nf(text, N=3):
    return normal_form(parse_word(text, N), N)


def words(N, max_len=8):
    return st.lists(st.tuples(st.integers(1, N - 1), st.sampled_from((1, -1))), max_size=max_len)


def test_identity_examples():
    assert nf("b1 b2 b1 B2 B1 B2").is_identity()
    assert nf("b1 B1").is_identity()
    assert str(nf("")) == "identity"


def test_delta_squared_is_central():
    N = 4
    D2 = BraidElement.delta(N) ** 2
    for i in range(1, N):
        b = BraidElement.generator(N, i)
        assert D2 * b == b * D2
    assert BraidElement.delta(N) == nf("b1 b2 b1 b3 b2 b1", N)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_defining_relations(N):
    for i in range(1, N):
        for j in range(1, N):
            if abs(i - j) == 1:
                assert nf(f"b{i} b{j} b{i}", N) == nf(f"b{j} b{i} b{j}", N)
            elif i != j:
                assert nf(f"b{i} b{j}", N) == nf(f"b{j} b{i}", N)


def test_positivity_examples():
    assert is_positive(BraidElement.identity(3))
    assert not is_positive(nf("B1"))
    assert is_positive(nf("b2 b1") ** 3)


def test_order_examples():
    a = nf("b1 b2")
    assert braid_geq(a, a)
    assert braid_geq(a, nf("b2"))
    assert not braid_geq(nf("b2"), a)


def test_print_format():
    assert str(nf("b1")) == "D^0 | 213"
    assert str(nf("B1")) == "D^-1 | 231"
    assert str(BraidElement.delta(3)) == "D^1"


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_word("b3", 3)
    with pytest.raises(ValueError):
        parse_word("x1", 3)
    assert format_word(parse_word("b1 B2", 3)) == "b1 B2"


def test_normal_form_is_left_weighted():
    rng = random.Random(1)
    for _ in range(200):
        N = rng.randint(3, 6)
        w = [(rng.randint(1, N - 1), rng.choice((1, -1))) for _ in range(10)]
        x = normal_form(w, N)
        for a, b in zip(x.factors, x.factors[1:]):
            assert left_descents(b) <= right_descents(a)
        for f in x.factors:
            assert f != tuple(range(N)) and f != tuple(range(N - 1, -1, -1))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6).flatmap(lambda N: st.tuples(st.just(N), words(N), words(N))))
def test_multiplicative_and_inverse(data):
    N, u, v = data
    x, y = normal_form(u, N), normal_form(v, N)
    assert normal_form(u + v, N) == x * y
    assert normal_form(x.word(), N) == x
    assert (x * x.inverse()).is_identity()
    inv_word = [(i, -s) for i, s in reversed(u)]
    assert normal_form(inv_word, N) == x.inverse()


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5).flatmap(lambda N: st.tuples(st.just(N), words(N, 6), words(N, 6), words(N, 6))))
def test_order_is_partial_order(data):
    N, u, v, w = data
    a, b, c = (normal_form(t, N) for t in (u, v, w))
    assert braid_geq(a, a)
    if braid_geq(a, b) and braid_geq(b, a):
        assert a == b
    if braid_geq(a, b) and braid_geq(b, c):
        assert braid_geq(a, c)


def test_reduced_word_length():
    for p in [(1, 0, 2), (2, 1, 0), (0, 1, 2, 3), (3, 2, 1, 0)]:
        inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        assert len(reduced_word(p)) == inversions


def test_initial_section_is_identity():
    for spec in ["a1", "a2", "a3:FB"]:
        Q = QuiverA.parse(spec)
        assert section_to_braid(Q, Section.initial(Q), 0).is_identity()


def test_a2_section_images():
    images = braid_images(A2, 9)
    c = nf("b2 b1")
    b1 = nf("b1")
    family = {c ** i for i in range(-5, 6)} | {b1 * c ** i for i in range(-6, 6)}
    assert len(images) == 19
    assert set(images.values()) <= family
    assert {c ** i for i in range(-4, 5)} <= set(images.values())


def test_unreachable_section():
    with pytest.raises(LookupError, match="unreachable at depth"):
        section_to_braid(A2, Section(A2, (5, 5)), 3)


@pytest.mark.parametrize("spec,depth", [("a2", 8), ("a3", 6), ("a3:FB", 6), ("a3:BF", 6), ("a3:BB", 6), ("a4:FBF", 4)])
def test_well_defined_and_injective(spec, depth):
    images = braid_images(QuiverA.parse(spec), depth)
    assert len(set(images.values())) == len(images)


def test_well_definedness_error_type():
    assert issubclass(WellDefinednessError, AssertionError)


def test_sections_to_silting_a2():
    alg = section_algebra(A2)
    assert section_to_silting(A2, Section.initial(A2)) == projective_silting(alg)
    for S in braid_images(A2, 6):
        T = section_to_silting(A2, S)
        i, j = sorted(a2_label(alg, X) for X in T)
        assert j == i + 1
        assert is_d_silting(alg, T, 1)


@pytest.mark.parametrize("spec", ["a2", "a3", "a3:FB"])
def test_sink_reflection_is_a_cover_and_reverses_order(spec):
    # reflecting at a sink moves toward tau, giving the larger silting object
    Q = QuiverA.parse(spec)
    alg = section_algebra(Q)
    images = braid_images(Q, 4)
    for S in images:
        for v, sign in reflections(S):
            if sign != 1:
                continue
            T, _ = reflect_section(S, v, sign)
            if T not in images:
                continue
            lower, upper = section_to_silting(Q, S), section_to_silting(Q, T)
            assert silting_geq(alg, upper, lower) and upper != lower
            assert len(set(upper) & set(lower)) == Q.n - 1
            # while F(T) = b_v^-1 F(S) sits one generator below F(S)
            assert braid_geq(images[S], images[T])
            assert images[S] * images[T].inverse() == BraidElement.generator(Q.n + 1, v)
