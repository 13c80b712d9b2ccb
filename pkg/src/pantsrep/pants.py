"""Representations of the three-holed sphere group from eigenvalues and fixed points.

pi_1 of a pair of pants is free on boundary loops gamma_1, gamma_2, gamma_3
with gamma_1 gamma_2 gamma_3 = 1.  Given an eigenvalue e_i and a fixed point
x_i for each rho(gamma_i), the representation is determined exactly; the
construction below conjugates the normalized solution at (0, inf, 1) back to
the requested fixed points, which handles infinity without special cases.
"""

from collections import namedtuple

import numpy as np

from .projective import (
    INF,
    DegenerateInputError,
    MoebiusMap,
    as_point,
    three_point_map,
)

PantsData = namedtuple("PantsData", ["eigen", "fixed"])


def make_pants_data(eigen, fixed):
    eigen = tuple(complex(e) for e in eigen)
    fixed = tuple(as_point(x) for x in fixed)
    for e in eigen:
        if e == 0 or abs(e - 1) < 1e-13 or abs(e + 1) < 1e-13:
            raise DegenerateInputError("eigenvalue %r in {0, +1, -1}" % (e,))
    for i in range(3):
        if fixed[i].same_as(fixed[(i + 1) % 3]):
            raise DegenerateInputError("fixed points coincide")
    return PantsData(eigen, fixed)


def _normalized_matrices(e1, e2, e3):
    """The three matrices fixing (0, inf, 1) with eigenvalues (e1, e2, e3).

    These are the unique SL(2,C) solutions of m1 m2 m3 = I, written as
    Laurent polynomials in the eigenvalues so no reducibility locus turns
    into a spurious division by zero.
    """
    m1 = np.array([[1 / e1, 0], [1 / e1 - e3 / e2, e1]], dtype=complex)
    m2 = np.array([[e2, e1 / e3 - e2], [0, 1 / e2]], dtype=complex)
    m3 = np.array(
        [
            [e3 + 1 / e3 - e2 / e1, (e2 - e1 / e3) / e1],
            [(e1 * e3 - e2) / e1, e2 / e1],
        ],
        dtype=complex,
    )
    return m1, m2, m3


def _normalized_other_fixed_points(e1, e2, e3):
    """Companion fixed points y'_i of the normalized matrices.

    Denominators vanish exactly on the reducibility loci of the triple.
    """
    dens = [
        (e3 / e2 - 1 / e1, "e2 - e1 e3"),
        (e2 - 1 / e2, "e2^2 - 1"),
        (e2 - e1 * e3, "e2 - e1 e3"),
    ]
    nums = [e1 - 1 / e1, e2 - e1 / e3, e2 - e1 / e3]
    out = []
    for (den, label), num in zip(dens, nums):
        if abs(den) <= 1e-13 * max(1.0, abs(num)):
            raise DegenerateInputError(
                "companion fixed point degenerates (reducible triple)", factor=label
            )
        out.append(num / den)
    return tuple(out)


def pants_rep(data):
    """Matrices (m1, m2, m3) with m_i x_i = x_i, eigenvalue e_i, m1 m2 m3 = I.

    The product is the identity exactly in SL(2,C), not merely up to sign.
    """
    e1, e2, e3 = data.eigen
    mats = _normalized_matrices(e1, e2, e3)
    conj = three_point_map((0, INF, 1), data.fixed)
    a = conj.m / np.sqrt(np.abs(np.linalg.det(conj.m)))
    # conjugation is scale-invariant; use the adjugate divided by det so the
    # SL property of the normalized matrices is preserved exactly
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    ainv = np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=complex) / det
    return tuple(MoebiusMap(a @ m @ ainv) for m in mats)


def other_fixed_point(index, data):
    """The companion fixed point y_index (eigenvalue 1/e_index) of m_index."""
    if index not in (1, 2, 3):
        raise ValueError("index must be 1, 2 or 3")
    e1, e2, e3 = data.eigen
    yp = _normalized_other_fixed_points(e1, e2, e3)[index - 1]
    conj = three_point_map((0, INF, 1), data.fixed)
    return conj.apply(yp)


def is_admissible_triple(e1, e2, e3, tol=1e-9):
    """True iff the pants representation is irreducible for these eigenvalues.

    Reducibility happens exactly on e1 = e2 e3, e2 = e3 e1, e3 = e1 e2 and
    e1 e2 e3 = 1; comparisons are relative to the magnitudes involved.
    """
    e1, e2, e3 = complex(e1), complex(e2), complex(e3)
    products = [
        (e1, e2 * e3),
        (e2, e3 * e1),
        (e3, e1 * e2),
        (e1 * e2 * e3, 1.0 + 0j),
    ]
    for lhs, rhs in products:
        if abs(lhs - rhs) <= tol * max(abs(lhs), abs(rhs), 1.0):
            return False
    return True
