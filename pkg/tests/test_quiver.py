import json

import pytest

from siltlab.quiver import (
    QuiverA,
    Section,
    all_sections_in_box,
    euler_form,
    reflect_section,
    reflections,
    section_ball,
)


def test_parse_and_arrows():
    Q = QuiverA.parse("a3:FB")
    assert Q.n == 3
    assert Q.arrows() == [(1, 2), (3, 2)]
    assert QuiverA.parse("a2").arrows() == [(1, 2)]
    assert QuiverA.parse("A1").arrows() == []


@pytest.mark.parametrize("bad", ["b3", "a0", "a3:F", "a2:X", "a2:FF", ""])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        QuiverA.parse(bad)


def test_json_round_trip():
    Q = QuiverA.parse("a4:FBB")
    data = json.loads(json.dumps(Q.to_json()))
    assert data == {"n": 4, "orientation": ["F", "B", "B"]}
    assert QuiverA.from_json(data) == Q


def test_opposite_is_involution():
    Q = QuiverA.parse("a4:FBF")
    assert Q.opposite().opposite() == Q
    assert set(Q.opposite().arrows()) == {(w, v) for v, w in Q.arrows()}


def test_euler_form_examples():
    Q = QuiverA(2)
    assert euler_form(Q, (1, 0), (1, 0)) == 1
    assert euler_form(Q, (1, 0), (0, 1)) == -1
    # 1 - (1 + 1): the two arrow terms each contribute
    assert euler_form(QuiverA(3), (1, 1, 0), (0, 1, 1)) == -1
    with pytest.raises(ValueError):
        euler_form(Q, (1,), (1, 0))


def test_a2_sink_reflection():
    Q = QuiverA(2)
    S = Section.initial(Q)
    assert S.is_sink(2) and S.is_source(1)
    T, eps = reflect_section(S, 2)
    assert T.offsets == (0, -1) and eps == 1
    back, eps2 = reflect_section(T, 2)
    assert back == S and eps2 == -1


def test_reflect_rejects_middle_vertex():
    S = Section.initial(QuiverA(3))
    with pytest.raises(ValueError):
        reflect_section(S, 2)


def test_slice_condition_enforced():
    with pytest.raises(ValueError):
        Section(QuiverA(2), (0, 1))
    with pytest.raises(ValueError):
        Section(QuiverA(2), (2, 0))


@pytest.mark.parametrize("spec", ["a2", "a3", "a3:FB", "a4:BFB"])
def test_reflecting_everything_moves_by_tau(spec):
    # sinks first, in an admissible order, ends at the section shifted by -1
    Q = QuiverA.parse(spec)
    S = Section.initial(Q)
    for _ in range(Q.n):
        v = next(v for v in Q.vertices if S.is_sink(v) and S.offset(v) == 0)
        S, eps = reflect_section(S, v, +1)
        assert eps == 1
    assert S == Section.initial(Q).shifted(-1)


@pytest.mark.parametrize("spec", ["a1", "a2", "a3", "a3:FB", "a3:BF", "a4:FBF"])
def test_reflection_graph_is_connected_in_box(spec):
    Q = QuiverA.parse(spec)
    box = set(all_sections_in_box(Q, -2, 2))
    ball = section_ball(Q, 4 * Q.n + 4)
    inner = {S for S in box if all(-1 <= m <= 1 for m in S.offsets)}
    assert inner <= set(ball)


def test_reflections_reverse_each_other():
    Q = QuiverA.parse("a4:FBF")
    for S in section_ball(Q, 5):
        for v, sign in reflections(S):
            T, eps = reflect_section(S, v, sign)
            assert reflect_section(T, v, -eps) == (S, -eps)


def test_a1_both_directions():
    S = Section.initial(QuiverA(1))
    assert set(reflections(S)) == {(1, 1), (1, -1)}
    assert len(section_ball(QuiverA(1), 3)) == 7
