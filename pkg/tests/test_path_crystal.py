from fractions import Fraction

import pytest

from affdemazure.affine_weyl import ExtendedAffineElement, decompose_translation, identity_aut
from affdemazure.char_ring import demazure_character, dimension
from affdemazure.path_crystal import (
    Path,
    concat,
    concatenation_seed,
    demazure_crystal,
    demazure_paths,
    demazure_seed,
    empty_path,
    endpoint_multiset,
    generate_crystal,
    has_concatenation_form,
    project,
    root_e,
    root_f,
    straight_path,
    to_dot,
)
from affdemazure.root_data import PreconditionError, ResourceError, build_root_system, nu, w0_dual

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
C2 = build_root_system("C", 2)


def test_straight_path():
    p = straight_path((1, 0))
    assert len(p.segments) == 1
    assert p.endpoint() == (1, 0)
    assert straight_path((0, 0)).is_empty()
    lam0 = straight_path((0, 0, 1))
    assert lam0.segments == ((0, 0, 1),)


def test_reparametrisation_is_invisible():
    split = Path([(Fraction(1, 2), 0), (Fraction(1, 2), 0)], 2)
    assert split == straight_path((1, 0))
    assert hash(split) == hash(straight_path((1, 0)))
    assert Path([(1, 0), (-1, 0)], 2) != empty_path(2)


def test_concat():
    p = Path([(1, 0), (0, 1)], 2)
    q = straight_path((2, -1))
    assert concat(p, empty_path(2)) == p
    assert concat(p, q).endpoint() == tuple(a + b for a, b in zip(p.endpoint(), q.endpoint()))
    with pytest.raises(PreconditionError):
        concat(p, straight_path((1, 0, 0)))


def test_eta_seed():
    star = nu(A2, w0_dual(A2, (1, 0)))
    eta = concat(straight_path((0, 0, 1)), straight_path(tuple(-x for x in star) + (0,)))
    assert eta.segments == ((0, 0, 1), (0, -1, 0))
    assert eta.endpoint() == (0, -1, 1)


def test_a1_lowering():
    assert root_f(A1, 1, straight_path((1, 0))) == straight_path((-1, 0))
    assert root_f(A1, 1, straight_path((-1, 0))) is None
    assert root_e(A1, 1, straight_path((-1, 0))) == straight_path((1, 0))


def test_raising_kills_dominant_paths():
    for p in [straight_path((1, 0, 1)), straight_path((0, 2, 2)), straight_path((0, 0, 1))]:
        assert all(root_e(A2, i, p) is None for i in range(3))


def test_operator_domain_errors():
    with pytest.raises(PreconditionError):
        root_f(A1, 2, straight_path((1, 0)))
    with pytest.raises(PreconditionError):
        root_f(A1, 1, straight_path((1, 0, 0, 0)))
    with pytest.raises(PreconditionError):
        root_f(A1, 1, straight_path((Fraction(-1, 2), 0)))


def test_generate_examples():
    g = generate_crystal(A1, straight_path((1, 0)), [1])
    assert len(g.vertices) == 2 and g.edges == ((0, 1, 1),)
    g = generate_crystal(A2, straight_path((1, 0, 0)), [1, 2])
    assert len(g.vertices) == 3
    g = generate_crystal(A2, empty_path(3), [0, 1, 2])
    assert len(g.vertices) == 1 and g.edges == ()


def test_generate_cap():
    with pytest.raises(ResourceError):
        generate_crystal(A2, straight_path((2, 2, 0)), [1, 2], cap=5)


def test_demazure_empty_word():
    seed = straight_path((0, 0, 1))
    e = ExtendedAffineElement(identity_aut(A2), ())
    assert demazure_paths(A2, e, seed) == (seed,)


@pytest.mark.parametrize(
    "rs,cw,expected",
    [(A1, (1,), 2), (C2, (1, 0), 11)],
)
def test_demazure_counts(rs, cw, expected):
    e = decompose_translation(rs, cw)
    paths = demazure_paths(rs, e, demazure_seed(rs, e))
    assert len(paths) == expected
    assert sum(endpoint_multiset(paths).values()) == expected


def test_endpoint_multiset():
    paths = [straight_path((1, 0)), straight_path((-1, 0))]
    assert endpoint_multiset(paths) == {((1,), 0): 1, ((-1,), 0): 1}


@pytest.mark.parametrize("series,rank,cw", [("A", 1, (2,)), ("A", 2, (1, 1)), ("B", 2, (1, 1)), ("G", 2, (1, 0))])
def test_members_have_integral_minima_and_weights(series, rank, cw):
    rs = build_root_system(series, rank)
    e = decompose_translation(rs, cw)
    paths = demazure_paths(rs, e, demazure_seed(rs, e))
    assert len(paths) == dimension(demazure_character(rs, 1, cw))
    for p in paths:
        assert all(Fraction(x).denominator == 1 for x in p.endpoint())
        for i in range(rank + 1):
            # raises if some minimum is not an integer
            root_f(rs, i, p)
            root_e(rs, i, p)


def test_projection_drops_delta():
    p = Path([(1, 0, Fraction(1, 2)), (0, 1, 0)], 3)
    assert project(p) == Path([(1, 0), (0, 1)], 2)


@pytest.mark.parametrize("cw", [(1, 0), (0, 1), (1, 1), (2, 0)])
def test_concatenation_form_a2(cw):
    star = nu(A2, w0_dual(A2, cw))
    seed = concatenation_seed(A2, star)
    e = decompose_translation(A2, cw)
    graph = demazure_crystal(A2, e, seed)
    assert all(has_concatenation_form(p) for p in graph.vertices)
    assert len(graph.vertices) == dimension(demazure_character(A2, 1, cw))


def test_has_concatenation_form():
    assert has_concatenation_form(Path([(0, 0, 1), (1, -1, 0)], 3))
    assert not has_concatenation_form(straight_path((1, 0, 1)))
    assert not has_concatenation_form(empty_path(3))


def test_dot_output():
    e = decompose_translation(A1, (1,))
    graph = demazure_crystal(A1, e, demazure_seed(A1, e))
    text = to_dot(graph)
    assert text == to_dot(demazure_crystal(A1, e, demazure_seed(A1, e)))
    assert text.count("[label=") == 3
    assert 'v0 -> v1 [label="1"];' in text
    e = decompose_translation(A2, (0, 0))
    assert to_dot(demazure_crystal(A2, e, demazure_seed(A2, e))).count(" -> ") == 0
