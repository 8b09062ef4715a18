import itertools

import pytest

from usym import (
    GF,
    QQ,
    Matrix,
    SearchSizeError,
    automorphism_group,
    convolve,
    counit_point,
    enumerate_endomorphisms,
    enumerate_homs,
    enumerate_measuring_points,
    gamma,
    is_algebra_map,
    is_measuring_point,
    is_point,
)
from conftest import dual_numbers, ground_field, triangular


def fmat(field, rows):
    return Matrix(field, [[field(x) for x in row] for row in rows])


def test_identity_is_point(dual_q, triangular_q):
    for a in (dual_q, triangular_q):
        assert is_point(a, counit_point(a))


def test_dual_point_constraint_alpha_zero(dual_q):
    # [[1, a], [0, b]] is a point iff a = 0 (from x[1,2]^2 = 0)
    assert is_point(dual_q, fmat(QQ, [[1, 0], [0, 7]]))
    assert not is_point(dual_q, fmat(QQ, [[1, 1], [0, 1]]))
    assert not is_point(dual_q, fmat(QQ, [[1, "1/2"], [0, "1/3"]]))


def test_dual_point_over_gf5(dual_q):
    f5 = GF(5)
    a5 = dual_numbers(f5)
    assert is_point(a5, fmat(f5, [[1, 0], [0, 3]]))


def test_point_wrong_first_column(dual_q):
    assert not is_point(dual_q, fmat(QQ, [[0, 0], [1, 0]]))
    with pytest.raises(ValueError):
        is_point(dual_q, Matrix.identity(QQ, 3))


def test_gamma_counit_is_identity(dual_q):
    w = gamma(dual_q, counit_point(dual_q))
    assert w == Matrix.identity(QQ, 2)


def test_gamma_dual_scales_t(dual_q):
    m = fmat(QQ, [[1, 0], [0, 9]])
    w = gamma(dual_q, m)
    t = dual_q.basis_vector(1)
    assert w.apply(t) == (QQ(0), QQ(9))
    assert is_algebra_map(dual_q, dual_q, w)
    with pytest.raises(ValueError):
        gamma(dual_q, fmat(QQ, [[1, 1], [0, 1]]))


def test_convolve_is_matrix_product():
    f7 = GF(7)
    a = dual_numbers(f7)
    m1 = fmat(f7, [[1, 0], [0, 2]])
    m2 = fmat(f7, [[1, 0], [0, 3]])
    prod = convolve(m1, m2)
    assert prod == fmat(f7, [[1, 0], [0, 6]])
    assert is_point(a, prod)
    assert convolve(m1, counit_point(a)) == m1


def test_convolution_preserves_noninvertibility():
    f5 = GF(5)
    a = dual_numbers(f5)
    degenerate = fmat(f5, [[1, 0], [0, 0]])
    assert is_point(a, degenerate)
    for beta in range(1, 5):
        m = fmat(f5, [[1, 0], [0, beta]])
        assert not convolve(degenerate, m).is_invertible()
        assert not convolve(m, degenerate).is_invertible()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_dual_endomorphism_monoid_is_diagonal(p):
    f = GF(p)
    a = dual_numbers(f)
    monoid = enumerate_endomorphisms(a)
    assert len(monoid) == p
    expected = [fmat(f, [[1, 0], [0, b]]) for b in range(p)]
    assert list(monoid.points) == expected
    assert monoid.points[monoid.identity_index] == counit_point(a)


def test_ground_field_single_point():
    a = ground_field(GF(3))
    monoid = enumerate_endomorphisms(a)
    assert len(monoid) == 1
    group = automorphism_group(a)
    assert len(group) == 1


@pytest.mark.parametrize("p", [2, 3])
def test_triangular_points_equal_brute_force_maps(p):
    a = triangular(GF(p))
    points = enumerate_endomorphisms(a).points
    homs = enumerate_homs(a, a)
    assert tuple(m.rows for m in points) == tuple(m.rows for m in homs)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_dual_automorphism_group_order(p):
    a = dual_numbers(GF(p))
    group = automorphism_group(a)
    assert len(group) == p - 1


@pytest.mark.parametrize("p", [2, 3])
def test_triangular_aut_equals_bijective_map_count(p):
    a = triangular(GF(p))
    group = automorphism_group(a)
    bijective = [m for m in enumerate_homs(a, a) if m.is_invertible()]
    assert tuple(m.rows for m in group.points) == tuple(m.rows for m in bijective)


def test_monoid_isomorphism_property():
    for p in (2, 3):
        a = triangular(GF(p))
        monoid = enumerate_endomorphisms(a)
        pts = monoid.points
        keys = {m.rows for m in pts}
        for m1, m2 in itertools.product(pts, repeat=2):
            prod = convolve(m1, m2)
            assert prod.rows in keys
            # gamma is multiplicative: applying the composite matches
            # composing the applications
            for i in range(a.n):
                v = a.basis_vector(i)
                assert prod.apply(v) == m1.apply(m2.apply(v))
        # gamma is a bijection onto the brute-force algebra maps
        assert tuple(m.rows for m in pts) == tuple(
            m.rows for m in enumerate_homs(a, a)
        )


def test_invertible_points_closed_under_product_and_inverse():
    a = triangular(GF(3))
    group = automorphism_group(a)
    keys = {m.rows for m in group.points}
    for m1, m2 in itertools.product(group.points, repeat=2):
        assert (m1 * m2).rows in keys
    for m in group.points:
        inv = m.inverse()
        assert inv.rows in keys
        assert is_point(a, inv)


def test_enumerate_homs_base_field_domain(dual_q):
    f3 = GF(3)
    a = dual_numbers(f3)
    k = ground_field(f3)
    homs = enumerate_homs(k, a)
    assert len(homs) == 1
    assert homs[0].column(0) == a.unit


def test_homs_dual_to_dual_count():
    a = dual_numbers(GF(3))
    assert len(enumerate_homs(a, a)) == 3


def test_cross_algebra_routes_agree():
    f2 = GF(2)
    b = dual_numbers(f2)
    a = triangular(f2)
    direct = enumerate_homs(b, a)
    via_points = enumerate_measuring_points(a, b)
    assert tuple(m.rows for m in direct) == tuple(m.rows for m in via_points)
    for m in direct:
        assert is_measuring_point(a, b, m)
        assert is_algebra_map(b, a, m)


def test_search_size_guard():
    a = triangular(GF(3))
    with pytest.raises(SearchSizeError):
        enumerate_endomorphisms(a, max_search=10)
    with pytest.raises(SearchSizeError):
        enumerate_homs(a, a, max_search=10)


def test_enumeration_requires_prime_field(dual_q):
    from usym import InputError

    with pytest.raises(InputError):
        enumerate_endomorphisms(dual_q)


def test_multiplication_table_on_demand():
    a = dual_numbers(GF(3))
    monoid = enumerate_endomorphisms(a)
    table = monoid.multiplication_table()
    assert len(table) == len(monoid)
    e = monoid.identity_index
    assert all(table[e][k] == k and table[k][e] == k for k in range(len(monoid)))
    # diag(1,b1) * diag(1,b2) = diag(1, b1 b2)
    lookup = {m.rows: k for k, m in enumerate(monoid.points)}
    for i, m1 in enumerate(monoid.points):
        for j, m2 in enumerate(monoid.points):
            assert table[i][j] == lookup[(m1 * m2).rows]


def test_truncated_cubic_known_orders():
    # maps are x -> a x + b x^2 with no constraint, invertible iff a != 0
    from conftest import truncated_cubic

    a = truncated_cubic(GF(3))
    assert len(enumerate_endomorphisms(a)) == 9
    assert len(automorphism_group(a)) == 6
    assert len(enumerate_homs(a, a)) == 9
