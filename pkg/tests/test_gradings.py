import itertools

import pytest

from usym import (
    GF,
    Grading,
    GradingPoint,
    Matrix,
    SearchSizeError,
    Subspace,
    automorphism_group,
    classify,
    coaction_from_point,
    conjugate_point,
    cyclic_group,
    enumerate_gradings_oracle,
    enumerate_points,
    grading_from_point,
    is_grading_point,
    point_from_grading,
    trivial_point,
    validate_grading,
)
from usym.gradings import apply_automorphism
from conftest import dual_numbers, triangular


def fmat(field, rows):
    return Matrix(field, [[field(x) for x in row] for row in rows])


def span(field, n, *vectors):
    return Subspace.from_vectors(
        field, n, [tuple(field(x) for x in v) for v in vectors]
    )


GRID = [
    (dual_numbers, 2, cyclic_group(2)),
    (dual_numbers, 3, cyclic_group(2)),
    (dual_numbers, 2, cyclic_group(3)),
    (triangular, 2, cyclic_group(2)),
]


def test_trivial_point_is_point():
    for build, p, group in GRID:
        a = build(GF(p))
        assert is_grading_point(a, group, trivial_point(a, group))


def test_dual_c2_diagonal_point():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    good = GradingPoint((fmat(f, [[1, 0], [0, 0]]), fmat(f, [[0, 0], [0, 1]])))
    assert is_grading_point(a, c2, good)
    # swapped family violates the unit-column condition
    bad = GradingPoint((fmat(f, [[0, 0], [0, 1]]), fmat(f, [[1, 0], [0, 0]])))
    assert not is_grading_point(a, c2, bad)


def test_point_shape_mismatch():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    with pytest.raises(ValueError):
        is_grading_point(a, c2, trivial_point(a, cyclic_group(3)))


def test_grading_from_trivial_point():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    g = grading_from_point(a, c2, trivial_point(a, c2))
    assert g.support == (0,)
    assert g.component(0) == Subspace.full(f, 2)


def test_grading_from_diagonal_point():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    point = GradingPoint((fmat(f, [[1, 0], [0, 0]]), fmat(f, [[0, 0], [0, 1]])))
    g = grading_from_point(a, c2, point)
    assert g.component(0) == span(f, 2, (1, 0))
    assert g.component(1) == span(f, 2, (0, 1))
    assert sum(dim for _, dim in g.dimension_profile()) == 2


def test_point_from_grading_projections():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    g = Grading(2, 2, {0: span(f, 2, (1, 0)), 1: span(f, 2, (0, 1))})
    point = point_from_grading(a, c2, g)
    assert point.matrices[0] == fmat(f, [[1, 0], [0, 0]])
    assert point.matrices[1] == fmat(f, [[0, 0], [0, 1]])


def test_validate_grading_examples():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    trivial = Grading(2, 2, {0: Subspace.full(f, 2)})
    assert validate_grading(a, c2, trivial)
    good = Grading(2, 2, {0: span(f, 2, (1, 0)), 1: span(f, 2, (0, 1))})
    assert validate_grading(a, c2, good)
    # unit not in the identity component
    swapped = Grading(2, 2, {0: span(f, 2, (0, 1)), 1: span(f, 2, (1, 0))})
    assert not validate_grading(a, c2, swapped)
    # components that do not sum to the whole space
    short = Grading(2, 2, {0: span(f, 2, (1, 0))})
    assert not validate_grading(a, c2, short)


def test_enumerate_points_c1():
    a = dual_numbers(GF(3))
    pts = enumerate_points(a, cyclic_group(1))
    assert len(pts) == 1
    assert pts[0] == trivial_point(a, cyclic_group(1))


def test_enumerate_dual_c2_gf3():
    a = dual_numbers(GF(3))
    pts = enumerate_points(a, cyclic_group(2))
    assert len(pts) == 2
    oracle = enumerate_gradings_oracle(a, cyclic_group(2))
    assert len(oracle) == 2


def test_enumerate_dual_c2_gf2_char_divides_order():
    # char 2, |G| = 2: an extra grading A_g = span(t+1) appears
    f = GF(2)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    pts = enumerate_points(a, c2)
    oracle = enumerate_gradings_oracle(a, c2)
    assert len(pts) == len(oracle) == 3
    shifted = Grading(2, 2, {0: span(f, 2, (1, 0)), 1: span(f, 2, (1, 1))})
    assert shifted in oracle


def test_bijection_grid():
    for build, p, group in GRID:
        a = build(GF(p))
        pts = enumerate_points(a, group)
        oracle = enumerate_gradings_oracle(a, group)
        induced = sorted(
            (grading_from_point(a, group, pt) for pt in pts), key=lambda g: g.sort_key()
        )
        assert list(induced) == list(oracle)
        for pt in pts:
            assert point_from_grading(a, group, grading_from_point(a, group, pt)) == pt


def test_structured_route_matches_direct():
    # force the decomposition-based enumeration with a bound between
    # the structured cost and the raw entry-search cost
    a = dual_numbers(GF(3))
    c2 = cyclic_group(2)
    direct = enumerate_points(a, c2)  # raw = 3^4 = 81 fits the default bound
    structured = enumerate_points(a, c2, max_search=50)  # 81 > 50 >= 6^2
    assert direct == structured
    with pytest.raises(SearchSizeError):
        enumerate_points(a, c2, max_search=10)


def test_oracle_search_guard():
    a = triangular(GF(3))
    with pytest.raises(SearchSizeError):
        enumerate_gradings_oracle(a, cyclic_group(4), max_search=100)


def test_conjugation_by_counit_fixes_points():
    a = dual_numbers(GF(3))
    c2 = cyclic_group(2)
    for pt in enumerate_points(a, c2):
        assert conjugate_point(pt, Matrix.identity(a.field, 2)) == pt


def test_conjugation_by_diagonal_fixes_diagonal_point():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    diag_point = GradingPoint((fmat(f, [[1, 0], [0, 0]]), fmat(f, [[0, 0], [0, 1]])))
    m = fmat(f, [[1, 0], [0, 2]])
    assert conjugate_point(diag_point, m) == diag_point


def test_conjugation_is_group_action():
    for build, p, group in GRID:
        a = build(GF(p))
        pts = enumerate_points(a, group)
        aut = automorphism_group(a)
        for pt in pts:
            for m1, m2 in itertools.product(aut.points, repeat=2):
                assert conjugate_point(pt, m1 * m2) == conjugate_point(
                    conjugate_point(pt, m2), m1
                )


def test_conjugate_of_point_is_point_and_moves_grading():
    for build, p, group in GRID:
        a = build(GF(p))
        pts = enumerate_points(a, group)
        aut = automorphism_group(a)
        for pt in pts:
            for m in aut.points:
                moved = conjugate_point(pt, m)
                assert is_grading_point(a, group, moved)
                expected = apply_automorphism(grading_from_point(a, group, pt), m)
                assert grading_from_point(a, group, moved) == expected


def test_conjugation_preserves_dimension_profile():
    for build, p, group in GRID:
        a = build(GF(p))
        pts = enumerate_points(a, group)
        aut = automorphism_group(a)
        for pt in pts:
            profile = sorted(
                d for _, d in grading_from_point(a, group, pt).dimension_profile()
            )
            for m in aut.points:
                moved = grading_from_point(a, group, conjugate_point(pt, m))
                assert sorted(d for _, d in moved.dimension_profile()) == profile


def test_conjugacy_is_equivalence_on_fixtures():
    a = triangular(GF(2))
    c2 = cyclic_group(2)
    pts = list(enumerate_points(a, c2))
    aut = automorphism_group(a)
    index = {pt.sort_key(): k for k, pt in enumerate(pts)}
    related = {
        (i, index[conjugate_point(pt, m).sort_key()])
        for i, pt in enumerate(pts)
        for m in aut.points
    }
    # reflexive (counit point), symmetric (inverse point), transitive (product)
    for i in range(len(pts)):
        assert (i, i) in related
    for i, j in list(related):
        assert (j, i) in related
    for i, j in list(related):
        for j2, k in list(related):
            if j2 == j:
                assert (i, k) in related


def test_classify_c1_single_class():
    a = dual_numbers(GF(3))
    result = classify(a, cyclic_group(1))
    assert result.class_count == 1
    assert result.counts_agree and result.correspondence_ok


def test_classify_dual_c2_gf3_two_classes():
    a = dual_numbers(GF(3))
    result = classify(a, cyclic_group(2))
    assert result.class_count == 2
    assert len(result.grading_orbits) == 2
    assert result.correspondence_ok


def test_classify_grid_agreement():
    for build, p, group in GRID:
        a = build(GF(p))
        result = classify(a, group)
        assert result.counts_agree
        assert result.correspondence_ok


def test_coaction_trivial_point():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    co = coaction_from_point(a, c2, trivial_point(a, c2))
    assert co.checks.ok
    # rho(e_i) = e_i (x) e: h[s][i] concentrated at the identity
    for s in range(2):
        for i in range(2):
            want = (f.one if s == i else f.zero, f.zero)
            assert co.h[s][i] == want


def test_coaction_diagonal_point_reads_off_degree():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    point = GradingPoint((fmat(f, [[1, 0], [0, 0]]), fmat(f, [[0, 0], [0, 1]])))
    co = coaction_from_point(a, c2, point)
    assert co.checks.ok
    # rho(t) = t (x) g
    assert co.h[1][1] == (f.zero, f.one)
    assert co.h[0][1] == (f.zero, f.zero)


def test_coaction_checks_on_grid():
    for build, p, group in GRID:
        a = build(GF(p))
        for pt in enumerate_points(a, group):
            assert coaction_from_point(a, group, pt).checks.ok


def test_homogeneous_membership_iff_coaction_fixes():
    # x in A_sigma iff rho(x) = x (x) sigma
    f = GF(2)
    a = triangular(f)
    c2 = cyclic_group(2)

    def rho(pt, vec):
        return [
            [
                sum((vec[i] * pt.matrices[tg].entry(s, i) for i in range(a.n)), f.zero)
                for tg in range(c2.order)
            ]
            for s in range(a.n)
        ]

    for pt in enumerate_points(a, c2):
        grading = grading_from_point(a, c2, pt)
        # forward: a homogeneous basis vector is fixed with its own degree
        for sigma, comp in grading.components.items():
            for vec in comp.basis:
                want = [
                    [vec[s] if tg == sigma else f.zero for tg in range(c2.order)]
                    for s in range(a.n)
                ]
                assert rho(pt, vec) == want
        # reverse: rho(x) = x (x) sigma forces membership in A_sigma,
        # checked over every nonzero vector of GF(2)^3
        import itertools as it

        for coords in it.product((f.zero, f.one), repeat=a.n):
            if not any(coords):
                continue
            for sigma in range(c2.order):
                fixed = rho(pt, coords) == [
                    [coords[s] if tg == sigma else f.zero for tg in range(c2.order)]
                    for s in range(a.n)
                ]
                comp = grading.component(sigma)
                member = comp is not None and comp.contains(coords)
                assert fixed == member


def test_enumerated_points_are_orthogonal_idempotent_families():
    for build, p, group in GRID:
        f = GF(p)
        a = build(f)
        for pt in enumerate_points(a, group):
            assert is_grading_point(a, group, pt)
            grading = grading_from_point(a, group, pt)
            assert validate_grading(a, group, grading)
            assert sum(comp.dim for comp in grading.components.values()) == a.n


def test_validate_grading_rejects_overlapping_components():
    f = GF(3)
    a = dual_numbers(f)
    c2 = cyclic_group(2)
    overlapping = Grading(
        2, 2, {0: Subspace.full(f, 2), 1: span(f, 2, (0, 1))}
    )
    assert not validate_grading(a, c2, overlapping)


def test_klein_four_gradings_of_dual():
    from usym.groups import FiniteGroup

    k4 = FiniteGroup(
        ("e", "a", "b", "c"),
        ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)),
    )
    a = dual_numbers(GF(2))
    pts = enumerate_points(a, k4)
    oracle = enumerate_gradings_oracle(a, k4)
    assert len(pts) == len(oracle)
    result = classify(a, k4)
    assert result.counts_agree and result.correspondence_ok


def test_truncated_cubic_c2_classification():
    # the three lines span(x + c x^2) form one automorphism orbit, so the
    # four points fall into two classes (trivial + split)
    from conftest import truncated_cubic

    a = truncated_cubic(GF(3))
    result = classify(a, cyclic_group(2))
    assert len(result.points) == 4
    assert result.class_count == 2
    assert result.counts_agree and result.correspondence_ok
