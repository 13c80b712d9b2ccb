"""Moebius maps, projective points and cross ratios."""

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pantsrep.projective import (
    INF,
    DegenerateInputError,
    MoebiusMap,
    ProjectivePoint,
    SingularMapError,
    as_point,
    axis_transport_squared,
    cross_ratio,
    fixed_points_with_eigs,
    mobius_with_axis,
    sl_normalize,
    sqrt_principal,
    three_point_map,
)

RNG = np.random.default_rng(20240901)


def rand_c(lo=-3.0, hi=3.0):
    return complex(RNG.uniform(lo, hi), RNG.uniform(lo, hi))


def rand_map():
    while True:
        m = np.array([[rand_c(), rand_c()], [rand_c(), rand_c()]])
        if abs(np.linalg.det(m)) > 1e-3:
            return MoebiusMap(m)


def test_point_identifications():
    assert as_point(2.0).same_as(ProjectivePoint(4, 2))
    assert INF.same_as(ProjectivePoint(-3, 0))
    assert not INF.same_as(as_point(0))
    assert as_point(INF) is INF or as_point(INF).same_as(INF)


def test_singular_matrix_rejected():
    with pytest.raises(SingularMapError):
        MoebiusMap(np.array([[1.0, 2.0], [2.0, 4.0]]))


def test_map_moves_infinity():
    m = MoebiusMap(np.array([[2.0, 1.0], [1.0, 1.0]]))
    assert m.apply(INF).same_as(as_point(2.0))
    # pole goes to infinity
    assert m.apply(as_point(-1.0)).same_as(INF)


def test_cross_ratio_normalization():
    for _ in range(50):
        z = rand_c()
        if abs(z) < 1e-6 or abs(z - 1) < 1e-6:
            continue
        assert abs(cross_ratio(as_point(0), INF, as_point(1), as_point(z)) - z) < 1e-12


def test_cross_ratio_moebius_invariance():
    for _ in range(100):
        pts = [rand_c() for _ in range(4)]
        m = rand_map()
        cr1 = cross_ratio(*pts)
        cr2 = cross_ratio(*(m.apply(as_point(p)) for p in pts))
        assert abs(cr1 - cr2) < 1e-9 * max(1.0, abs(cr1))


def test_cross_ratio_with_infinity():
    # [inf : x1 : x2 : x3] = (x2 - x1)/(x2 - inf) style degenerations stay finite
    val = cross_ratio(INF, as_point(0), as_point(1), as_point(3))
    # (x3-x0)(x2-x1)/((x3-x1)(x2-x0)) -> (x2-x1)/(x3-x1) = 1/3
    assert abs(val - 1 / 3) < 1e-12


def test_cross_ratio_coincident_points_raise():
    with pytest.raises(DegenerateInputError):
        cross_ratio(as_point(1), as_point(2), as_point(1), as_point(2))


def test_sqrt_principal_branch():
    assert sqrt_principal(4) == 2
    assert abs(sqrt_principal(-4) - 2j) < 1e-15
    for _ in range(100):
        z = rand_c()
        r = sqrt_principal(z)
        assert abs(r * r - z) < 1e-12
        assert r.imag > -1e-15


def test_mobius_with_axis():
    for _ in range(100):
        e = rand_c()
        if abs(e) < 0.1:
            continue
        x, y = rand_c(), rand_c()
        if abs(x - y) < 1e-3:
            continue
        m = mobius_with_axis(e, x, y)
        assert abs(m.det() - 1) < 1e-10
        assert abs(m.trace() - (e + 1 / e)) < 1e-9
        assert m.apply(as_point(x)).same_as(as_point(x))
        assert m.apply(as_point(y)).same_as(as_point(y))


def test_mobius_with_axis_at_infinity():
    e = 2.0 + 1.0j
    m = mobius_with_axis(e, INF, 0)
    assert sl_diff(m.m, np.array([[e, 0], [0, 1 / e]])) < 1e-12
    m2 = mobius_with_axis(e, 0, INF)
    assert sl_diff(m2.m, np.array([[1 / e, 0], [0, e]])) < 1e-12


def sl_diff(a, b):
    return min(np.abs(a - b).max(), np.abs(a + b).max())


def test_mobius_with_axis_degenerate():
    with pytest.raises(DegenerateInputError):
        mobius_with_axis(2.0, 1.0, 1.0)
    with pytest.raises(DegenerateInputError):
        mobius_with_axis(0.0, 0.0, 1.0)


def test_three_point_map():
    for _ in range(50):
        src = [rand_c() for _ in range(3)]
        dst = [rand_c() for _ in range(3)]
        if min(abs(p - q) for t in (src, dst) for i, p in enumerate(t) for q in t[i + 1 :]) < 1e-2:
            continue
        m = three_point_map(src, dst)
        for p, q in zip(src, dst):
            assert m.apply(as_point(p)).same_as(as_point(q), tol=1e-9)


def test_three_point_map_with_infinity():
    m = three_point_map((0, INF, 1), (INF, 0, 1))
    assert m.apply(as_point(0)).same_as(INF)
    assert m.apply(INF).same_as(as_point(0))
    assert m.apply(as_point(1)).same_as(as_point(1))


def test_three_point_map_degenerate():
    with pytest.raises(DegenerateInputError):
        three_point_map((0, 0, 1), (0, 1, INF))


def test_axis_transport():
    for _ in range(100):
        x, y, z1 = rand_c(), rand_c(), rand_c()
        t = rand_c()
        if min(abs(x - y), abs(z1 - x), abs(z1 - y), abs(t)) < 1e-2:
            continue
        m = mobius_with_axis(t, x, y)
        z2 = m.apply(as_point(z1))
        t2 = axis_transport_squared(x, y, z1, z2)
        assert abs(t2 - t * t) < 1e-8 * max(1.0, abs(t) ** 2)


def test_axis_transport_on_axis_raises():
    with pytest.raises(DegenerateInputError):
        axis_transport_squared(0, INF, 0, 1)


def test_sl_normalize():
    for _ in range(50):
        m = rand_map()
        s = sl_normalize(m)
        assert abs(s.det() - 1) < 1e-10
        # same projective map
        assert s.apply(as_point(0.3)).same_as(m.apply(as_point(0.3)))
        # idempotent, and stable under input rescaling
        again = sl_normalize(MoebiusMap(-5.0 * m.m))
        assert np.abs(s.m - again.m).max() < 1e-9


def test_fixed_points_with_eigs_roundtrip():
    for _ in range(100):
        e = rand_c()
        if abs(abs(e) - 1) < 0.05 or abs(e) < 0.1:
            continue
        x, y = rand_c(), rand_c()
        if abs(x - y) < 1e-2:
            continue
        m = mobius_with_axis(e, x, y)
        fx, fe, fy = fixed_points_with_eigs(m)
        want = e if abs(e) > 1 else 1 / e
        assert abs(fe - want) < 1e-8 * max(1.0, abs(want))
        px, py = (x, y) if abs(e) > 1 else (y, x)
        assert fx.same_as(as_point(px), tol=1e-7)
        assert fy.same_as(as_point(py), tol=1e-7)


def test_fixed_points_parabolic_raises():
    m = MoebiusMap(np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(DegenerateInputError):
        fixed_points_with_eigs(m)


@given(
    st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8),
    st.integers(1, 5), st.integers(-5, 5),
)
@settings(max_examples=200, deadline=None)
def test_cross_ratio_invariance_integer_maps(z0, z1, z2, z3, a, b):
    pts = [z0, z1 + 0.5, z2 + 0.25, z3 + 0.125]
    assume(a * (a + 1) - b != 0)
    m = MoebiusMap(np.array([[a, b], [1.0, a + 1.0]], dtype=complex))
    cr1 = cross_ratio(*pts)
    cr2 = cross_ratio(*(m.apply(as_point(p)) for p in pts))
    assert abs(cr1 - cr2) < 1e-9 * max(1.0, abs(cr1))
