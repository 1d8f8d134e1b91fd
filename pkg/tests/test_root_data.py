from fractions import Fraction

import pytest

from affdemazure.root_data import (
    ConfigurationError,
    PreconditionError,
    build_root_system,
    finite_reflect,
    is_dominant,
    nu,
    parse_type,
    to_dominant,
    w0_dual,
)

ALL_TYPES = [
    ("A", 1), ("A", 2), ("A", 5), ("B", 2), ("B", 4), ("C", 2), ("C", 4),
    ("D", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
]

# Standard tables (Bourbaki numbering): Coxeter number h = 1 + sum a_i and
# dual Coxeter number h^vee = 1 + sum a_i^vee.
COXETER = {
    ("A", 1): (2, 2), ("A", 2): (3, 3), ("A", 5): (6, 6),
    ("B", 2): (4, 3), ("B", 4): (8, 7), ("C", 2): (4, 3), ("C", 4): (8, 5),
    ("D", 4): (6, 6), ("D", 6): (10, 10), ("E", 6): (12, 12), ("E", 7): (18, 18),
    ("E", 8): (30, 30), ("F", 4): (12, 9), ("G", 2): (6, 4),
}

POSITIVE_ROOTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 5): 15, ("B", 2): 4, ("B", 4): 16,
    ("C", 2): 4, ("C", 4): 16, ("D", 4): 12, ("D", 6): 30, ("E", 6): 36,
    ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6,
}


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_cartan_shape(series, rank):
    rs = build_root_system(series, rank)
    for i in range(rank):
        for j in range(rank):
            if i == j:
                assert rs.cartan[i][j] == 2
            else:
                assert rs.cartan[i][j] <= 0
                assert (rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0)


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_root_counts_and_coxeter_numbers(series, rank):
    rs = build_root_system(series, rank)
    assert len(rs.positive_roots) == POSITIVE_ROOTS[(series, rank)]
    h, hv = COXETER[(series, rank)]
    assert 1 + sum(rs.marks) == h
    assert 1 + sum(rs.comarks) == hv


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_marks_comarks_and_normalisation(series, rank):
    rs = build_root_system(series, rank)
    assert rs.theta == rs.marks
    # a_i^vee = a_i d_i, i.e. theta^vee = sum a_i^vee alpha_i^vee
    assert all(rs.comarks[i] == rs.marks[i] * rs.d[i] for i in range(rank))
    theta = rs.theta_weight
    assert rs.form(theta, theta) == 2
    assert rs.pair_theta_coroot(theta) == 2
    assert set(rs.nu_factors) <= {1, 2, 3}


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_theta_is_the_unique_maximal_root(series, rank):
    rs = build_root_system(series, rank)
    roots = set(rs.positive_roots)
    maximal = [
        beta
        for beta in roots
        if not any(
            tuple(b + int(j == i) for j, b in enumerate(beta)) in roots for i in range(rank)
        )
    ]
    assert maximal == [rs.theta]


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_nu_on_simple_coroots(series, rank):
    rs = build_root_system(series, rank)
    for i in range(1, rank + 1):
        coroot = rs.cartan[i - 1]
        expected = tuple(rs.nu_factors[i - 1] * x for x in rs.simple_root(i))
        assert nu(rs, coroot) == expected
        if rs.simply_laced:
            assert nu(rs, coroot) == coroot


def test_build_examples():
    a1 = build_root_system("A", 1)
    assert len(a1.positive_roots) == 1
    assert a1.theta == (1,)
    assert a1.marks == a1.comarks == (1,)
    assert len(build_root_system("C", 2).positive_roots) == 4
    assert len(build_root_system("G", 2).positive_roots) == 6


def test_g2_long_and_short():
    rs = build_root_system("G", 2)
    assert rs.d == (Fraction(1, 3), 1)
    assert rs.marks == (3, 2)


@pytest.mark.parametrize(
    "series,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("X", 2)]
)
def test_invalid_types(series, rank):
    with pytest.raises(ConfigurationError):
        build_root_system(series, rank)


def test_parse_type():
    assert parse_type("C2") == ("C", 2)
    assert parse_type("e8") == ("E", 8)
    for bad in ["", "C", "2C", "C-2", "CC"]:
        with pytest.raises(ConfigurationError):
            parse_type(bad)


def test_nu_examples():
    assert nu(build_root_system("A", 2), (1, 0)) == (1, 0)
    assert nu(build_root_system("C", 2), (1, 0)) == (2, 0)
    for series, rank in ALL_TYPES:
        rs = build_root_system(series, rank)
        assert nu(rs, (0,) * rank) == (0,) * rank


def _orbit(rs, w, coweight=False):
    seen = {tuple(w)}
    todo = [tuple(w)]
    while todo:
        x = todo.pop()
        for i in range(1, rs.rank + 1):
            y = finite_reflect(rs, i, x, coweight=coweight)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def _brute_w0_dual(rs, cw):
    negatives = _orbit(rs, tuple(-x for x in cw), coweight=True)
    (dominant,) = [w for w in negatives if is_dominant(w)]
    return dominant


def test_w0_dual_examples():
    assert w0_dual(build_root_system("A", 1), (1,)) == (1,)
    assert w0_dual(build_root_system("A", 2), (1, 0)) == (0, 1)
    assert w0_dual(build_root_system("D", 4), (1, 0, 0, 0)) == (1, 0, 0, 0)


@pytest.mark.parametrize("series,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("D", 5), ("E", 6), ("G", 2)])
def test_w0_dual_against_orbit(series, rank):
    rs = build_root_system(series, rank)
    for i in range(rank):
        cw = tuple(int(j == i) for j in range(rank))
        assert w0_dual(rs, cw) == _brute_w0_dual(rs, cw)


def test_w0_dual_rejects_non_dominant():
    with pytest.raises(PreconditionError):
        w0_dual(build_root_system("A", 2), (1, -1))


def test_finite_reflect_examples():
    a1 = build_root_system("A", 1)
    assert finite_reflect(a1, 1, (1,)) == (-1,)
    a2 = build_root_system("A", 2)
    assert finite_reflect(a2, 1, (1, 0)) == (-1, 1)
    assert finite_reflect(a2, 1, (0, 5)) == (0, 5)


def test_to_dominant_lands_in_chamber():
    rs = build_root_system("B", 3)
    w = to_dominant(rs, (-1, 2, -3))
    assert is_dominant(w)
    assert w in _orbit(rs, (-1, 2, -3))

