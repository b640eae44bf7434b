import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from pants_lab.surface.ball import (CacheError, CacheVersionError, CurveBall, enumerate_curve_ball,
                                    read_ball, standard_seeds, universe_curves, write_ball)
from pants_lab.surface.braids import GeneratorError, GeneratorWord, apply_generator, puncture_permutation
from pants_lab.surface.curves import (S05, S06, Curve, CurveError, SurfaceError, SurfaceSpec, canonical_form,
                                      complexity, standard_curve, word_to_coords)
from pants_lab.surface.domains import complement_domain, complement_domains, whole_surface
from pants_lab.surface.drawing import oracle_intersection
from pants_lab.surface.farey import chart_for
from pants_lab.surface.intersection import intersection_number
from pants_lab.surface.pants import (PantsDecomposition, PantsError, elementary_move_neighbors,
                                     is_domain_separating, is_elementary_move)


def c5(*ps):
    return standard_curve(S05, ps)


def c6(*ps):
    return standard_curve(S06, ps)


def test_complexity():
    assert complexity(0, 5) == 2
    assert complexity(0, 6) == 3
    assert complexity(1, 1) == 1
    with pytest.raises(SurfaceError):
        complexity(0, 3)


def test_surface_names():
    assert SurfaceSpec.from_name("s05") == S05
    assert S06.n_coords == 12
    with pytest.raises(SurfaceError):
        SurfaceSpec.from_name("s17").require_combinatorial()


def test_standard_curves_canonical():
    for s in (S05, S06):
        n = s.punctures
        for k in range(2, n - 1):
            for ps in combinations(range(1, n + 1), k):
                c = standard_curve(s, ps)
                assert canonical_form(c) == c
                assert c.inside == frozenset(ps) or c.inside == frozenset(range(1, n + 1)) - frozenset(ps)


def test_complementary_punctures_give_same_curve():
    assert c5(1, 2) == c5(3, 4, 5)
    assert c6(1, 2, 3) == c6(4, 5, 6)


def test_rejects_peripheral_and_multicurves():
    with pytest.raises(CurveError):
        standard_curve(S05, [1])
    with pytest.raises(CurveError):
        Curve.from_coords(S05, [0] * 7)


def test_backtracking_word_is_reduced():
    c = c5(1, 2)
    # a bigon with the axis across edge 3
    assert Curve.from_word(S05, (0, 2, 3, 3)) == c
    assert c.coords == word_to_coords(c.word, 5)


def test_dict_roundtrip():
    c = c6(2, 4)
    assert Curve.from_dict(c.to_dict()) == c


def test_half_twist_chirality():
    assert apply_generator(GeneratorWord(((2, 1),)), c5(1, 2)) == c5(1, 3)


def test_half_twist_fixes_its_curve():
    assert apply_generator(GeneratorWord(((1, 1),)), c5(1, 2)) == c5(1, 2)


def test_generator_parse_and_validate():
    w = GeneratorWord.parse("2,-3,1")
    assert w.letters == ((2, 1), (3, -1), (1, 1))
    assert len(w) == 3
    with pytest.raises(GeneratorError):
        GeneratorWord.parse("0")
    with pytest.raises(GeneratorError):
        GeneratorWord(((5, 1),)).validate(S05)


def test_puncture_permutation():
    perm = puncture_permutation(GeneratorWord(((2, 1),)), 5)
    assert perm == (0, 1, 3, 2, 4, 5)
    assert puncture_permutation(GeneratorWord(((2, 1), (2, -1))), 5) == (0, 1, 2, 3, 4, 5)


@pytest.mark.parametrize("a, b, i", [
    (c5(1, 2), c5(2, 3), 2),
    (c5(1, 2), c5(3, 4), 0),
    (c5(1, 2), c5(1, 2, 3), 0),
    (c5(1, 3), c5(2, 4), 4),
    (c6(1, 2), c6(2, 3), 2),
    (c6(1, 2, 3), c6(3, 4), 2),
])
def test_intersection_examples(a, b, i):
    assert intersection_number(a, b) == i
    assert oracle_intersection(a, b) == i


def _random_curve(rng, surface, length):
    seeds = standard_seeds(surface)
    return apply_generator(GeneratorWord.random(rng, surface, length), rng.choice(seeds))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9), st.sampled_from([S05, S06]))
def test_intersection_symmetric_and_invariant(seed, surface):
    rng = random.Random(seed)
    a, b = _random_curve(rng, surface, 4), _random_curve(rng, surface, 4)
    i = intersection_number(a, b)
    assert i == intersection_number(b, a)
    assert i % 2 == 0
    w = GeneratorWord.random(rng, surface, 3)
    assert intersection_number(apply_generator(w, a), apply_generator(w, b)) == i


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9), st.sampled_from([S05, S06]))
def test_twist_inverse(seed, surface):
    rng = random.Random(seed)
    c = _random_curve(rng, surface, 5)
    w = GeneratorWord.random(rng, surface, 6)
    assert apply_generator(w.inverse(), apply_generator(w, c)) == c
    assert canonical_form(apply_generator(w, c)) == apply_generator(w, c)


def test_pants_validation():
    PantsDecomposition(S05, (c5(1, 2), c5(4, 5)))
    with pytest.raises(PantsError):
        PantsDecomposition(S05, (c5(1, 2), c5(2, 3)))
    with pytest.raises(PantsError):
        PantsDecomposition(S05, (c5(1, 2),))


def test_elementary_move_neighbors():
    pd = PantsDecomposition(S05, (c5(1, 2), c5(4, 5)))
    nbrs = elementary_move_neighbors(pd, [c5(i, j) for i, j in combinations(range(1, 6), 2)])
    keys = {q.key for q in nbrs}
    assert frozenset((c5(1, 2), c5(3, 4))) in keys
    assert frozenset((c5(2, 3), c5(4, 5))) in keys
    assert all(is_elementary_move(pd, q) for q in nbrs)
    assert not is_elementary_move(pd, pd)


def test_disjoint_standard_curves():
    others = [c5(i, j) for i, j in combinations(range(1, 6), 2) if (i, j) != (1, 2)]
    assert {c for c in others if intersection_number(c, c5(1, 2)) == 0} == {c5(3, 4), c5(3, 5), c5(4, 5)}


def test_domain_separating():
    assert is_domain_separating(c6(1, 2, 3))
    assert not is_domain_separating(c6(1, 2))
    with pytest.raises(SurfaceError):
        is_domain_separating(c5(1, 2))


def test_domains():
    y = complement_domain(S05, [c5(4, 5)])
    assert y.complexity == 1
    assert y.contains(c5(1, 2)) and y.contains(c5(2, 3))
    assert not y.contains(c5(4, 5))
    assert whole_surface(S06).complexity == 3
    assert len(complement_domains(S06, [c6(1, 2, 3)])) == 2


def test_farey_chart_distances():
    y = complement_domain(S05, [c5(4, 5)])
    chart = chart_for(y)
    assert chart.distance(c5(1, 2), c5(2, 3)) == 1
    g = chart.geodesic(c5(1, 2), c5(2, 3))
    assert g[0] == c5(1, 2) and g[-1] == c5(2, 3)


def test_ball_word_bound_zero():
    b = enumerate_curve_ball(c5(1, 2), 50, 0)
    assert b.curves == (c5(1, 2),)
    assert b.adjacency == ()


def test_ball_roundtrip(tmp_path):
    b = enumerate_curve_ball(c5(1, 2), 20, 2)
    p = tmp_path / "ball.json"
    write_ball(p, b)
    assert read_ball(p) == b
    assert all(max(c.coords) <= 20 for c in b.curves)
    for i, j in b.adjacency:
        assert intersection_number(b.curves[i], b.curves[j]) == 0


def test_empty_ball_roundtrip():
    b = CurveBall(S06, (), ())
    assert CurveBall.from_json(b.to_json()) == b


def test_cache_errors():
    b = enumerate_curve_ball(c5(1, 2), 20, 1)
    text = b.to_json().replace('"version":1', '"version":2')
    with pytest.raises(CacheVersionError):
        CurveBall.from_json(text)
    with pytest.raises(CacheError):
        CurveBall.from_json("{not json")
    with pytest.raises(CacheError):
        CurveBall.from_json('{"format": "other"}')


def test_universe_covers_both_types():
    curves = universe_curves(S05, 2)
    assert c5(1, 2) in curves and c5(1, 2, 3) in curves and c5(2, 3) in curves
