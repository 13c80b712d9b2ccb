"""Projective line CP^1 and Moebius transformation arithmetic.

Points of CP^1 are kept in homogeneous form (numerator, denominator) so
that infinity is the exact point (1, 0) and no code path ever divides by
zero.  Moebius maps are 2x2 complex matrices acting on homogeneous
coordinates; scalar multiples act identically (PGL), and sl_normalize
produces a determinant-1 representative when one is wanted.
"""

import cmath
import math

import numpy as np

#: default tolerance for projective comparisons
EQ_TOL = 1e-9
#: |det| below SING_TOL * ||m||^2 counts as singular
SING_TOL = 1e-12


class SingularMapError(ValueError):
    """Raised when a Moebius map is numerically singular."""


class DegenerateInputError(ValueError):
    """Raised when input points coincide or a named denominator vanishes.

    The offending factor (in the notation of the source formulas) is kept
    in ``factor`` to aid diagnosis.
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class ProjectivePoint:
    """A point of CP^1 as a homogeneous pair (num : den)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = complex(num)
        den = complex(den)
        if num == 0 and den == 0:
            raise ValueError("(0 : 0) is not a point of CP^1")
        self.num = num
        self.den = den

    @property
    def is_infinity(self):
        return abs(self.den) <= EQ_TOL * abs(self.num)

    def value(self):
        """The affine value num/den; raises on the point at infinity."""
        if self.is_infinity:
            raise ZeroDivisionError("point at infinity has no affine value")
        return self.num / self.den

    def same_as(self, other, tol=EQ_TOL):
        """Projective equality: vanishing of the 2x2 determinant, scaled."""
        other = as_point(other)
        det = self.num * other.den - other.num * self.den
        scale = max(abs(self.num), abs(self.den)) * max(abs(other.num), abs(other.den))
        return abs(det) <= tol * scale

    def __eq__(self, other):
        try:
            return self.same_as(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        raise TypeError("ProjectivePoint is not hashable (tolerant equality)")

    def __repr__(self):
        if self.is_infinity:
            return "ProjectivePoint(inf)"
        return "ProjectivePoint(%r)" % (self.num / self.den)


INF = ProjectivePoint(1, 0)


def as_point(z):
    """Coerce a complex number, 'inf', or ProjectivePoint into a point."""
    if isinstance(z, ProjectivePoint):
        return z
    if isinstance(z, str):
        if z == "inf":
            return INF
        raise ValueError("unknown point literal %r" % (z,))
    if isinstance(z, (int, float, complex, np.complexfloating, np.floating, np.integer)):
        if isinstance(z, (float, np.floating)) and math.isinf(z):
            return INF
        return ProjectivePoint(complex(z), 1)
    raise TypeError("cannot interpret %r as a point of CP^1" % (z,))


def sqrt_principal(z):
    """Square root with argument in [0, pi).

    cmath.sqrt returns arg in (-pi/2, pi/2]; negate when the result falls
    on the negative-argument side so every root has arg in [0, pi).
    """
    w = cmath.sqrt(complex(z))
    if w.imag < 0 or (w.imag == 0 and w.real < 0):
        w = -w
    return w


class MoebiusMap:
    """A nonsingular 2x2 complex matrix acting on CP^1.

    Interpreted projectively unless the caller asks for the SL-normalized
    representative.  Instances are immutable.
    """

    __slots__ = ("m",)

    def __init__(self, m):
        m = np.asarray(m, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError("MoebiusMap needs a 2x2 matrix")
        norm2 = np.abs(m).max() ** 2
        if norm2 == 0 or abs(np.linalg.det(m)) < SING_TOL * norm2:
            raise SingularMapError("singular matrix %r" % (m,))
        m.setflags(write=False)
        self.m = m

    @classmethod
    def identity(cls):
        return cls(np.eye(2))

    def det(self):
        a, b = self.m[0]
        c, d = self.m[1]
        return a * d - b * c

    def trace(self):
        return self.m[0, 0] + self.m[1, 1]

    def inverse(self):
        a, b = self.m[0]
        c, d = self.m[1]
        # adjugate; in PGL the 1/det factor is irrelevant, and for an SL
        # input the adjugate IS the inverse, keeping determinant exactly 1
        return MoebiusMap([[d, -b], [-c, a]])

    def __matmul__(self, other):
        return MoebiusMap(self.m @ other.m)

    def __neg__(self):
        return MoebiusMap(-self.m)

    def apply(self, p):
        p = as_point(p)
        num = self.m[0, 0] * p.num + self.m[0, 1] * p.den
        den = self.m[1, 0] * p.num + self.m[1, 1] * p.den
        return ProjectivePoint(num, den)

    def __call__(self, p):
        return self.apply(p)

    def same_pgl(self, other, tol=1e-8):
        """Equality in PGL: entrywise proportionality."""
        a = self.m / np.abs(self.m).max()
        b = other.m / np.abs(other.m).max()
        # align by the largest entry of a
        i = np.unravel_index(np.abs(a).argmax(), (2, 2))
        if abs(b[i]) < tol:
            return False
        b = b * (a[i] / b[i])
        return bool(np.abs(a - b).max() <= tol)

    def same_sl(self, other, tol=1e-9):
        """Equality in SL up to the overall sign."""
        d = min(np.abs(self.m - other.m).max(), np.abs(self.m + other.m).max())
        return bool(d <= tol)

    def __repr__(self):
        return "MoebiusMap(%s)" % np.array2string(self.m, separator=", ")


def sl_normalize(m):
    """Scale to determinant 1 and fix the sign convention.

    The representative is chosen so that the first row-major entry with
    modulus above tolerance has argument in [0, pi).  This is a repo
    convention: PSL elements have no canonical SL lift.
    """
    s = m.m / sqrt_principal(m.det())
    scale = np.abs(s).max()
    for v in s.flat:
        if abs(v) > 1e-12 * scale:
            if v.imag < 0 or (v.imag == 0 and v.real < 0):
                s = -s
            break
    return MoebiusMap(s)


def apply(m, p):
    """Image of the point p under the Moebius map m."""
    return m.apply(p)


def cross_ratio(x0, x1, x2, x3):
    """Cross ratio [x0 : x1 : x2 : x3] = (x3-x0)(x2-x1)/((x3-x1)(x2-x0)).

    Computed on homogeneous pairs so any argument may be infinity.
    """
    x0, x1, x2, x3 = (as_point(x) for x in (x0, x1, x2, x3))

    def d(p, q):
        return p.num * q.den - q.num * p.den

    num = d(x3, x0) * d(x2, x1)
    den = d(x3, x1) * d(x2, x0)
    if den == 0:
        raise DegenerateInputError("cross ratio of coincident points")
    return num / den


def mobius_with_axis(e, x, y):
    """The map M(e; x, y) fixing x with eigenvalue e and y with 1/e.

    Built from the conjugated diagonal form, so infinity among {x, y} is
    exact; the result has determinant 1.
    """
    e = complex(e)
    if e == 0:
        raise DegenerateInputError("eigenvalue e must be nonzero")
    x = as_point(x)
    y = as_point(y)
    if x.same_as(y):
        raise DegenerateInputError("axis endpoints coincide")
    # columns are homogeneous representatives of x and y
    p = np.array([[x.num, y.num], [x.den, y.den]], dtype=complex)
    s = p[0, 0] * p[1, 1] - p[0, 1] * p[1, 0]
    diag = np.array([[e, 0], [0, 1 / e]], dtype=complex)
    adj = np.array([[p[1, 1], -p[0, 1]], [-p[1, 0], p[0, 0]]], dtype=complex)
    return MoebiusMap(p @ diag @ adj / s)


def axis_transport_squared(x, y, z1, z2):
    """t^2 such that M(t; x, y) sends z1 to z2, i.e. [y : x : z1 : z2]."""
    x, y, z1, z2 = (as_point(p) for p in (x, y, z1, z2))
    for z in (z1, z2):
        if z.same_as(x) or z.same_as(y):
            raise DegenerateInputError("transported point lies on the axis")
    return cross_ratio(y, x, z1, z2)


def _map_from_standard(x1, x2, x3):
    """Matrix sending (0, inf, 1) to (x1, x2, x3), up to scalar."""
    # rows of the homogeneous pairs; the closed form
    #   ((x2(x3-x1), x1(x2-x3)), (x3-x1, x2-x3))
    # in homogeneous arithmetic:
    d31 = x3.num * x1.den - x1.num * x3.den
    d23 = x2.num * x3.den - x3.num * x2.den
    return np.array(
        [
            [x2.num * d31, x1.num * d23],
            [x2.den * d31, x1.den * d23],
        ],
        dtype=complex,
    )


def three_point_map(src, dst):
    """The unique PGL element sending the triple src to the triple dst."""
    src = tuple(as_point(p) for p in src)
    dst = tuple(as_point(p) for p in dst)
    for t in (src, dst):
        if t[0].same_as(t[1]) or t[1].same_as(t[2]) or t[0].same_as(t[2]):
            raise DegenerateInputError("triple is not pairwise distinct")
    a = _map_from_standard(*src)
    b = _map_from_standard(*dst)
    adj = np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=complex)
    return MoebiusMap(b @ adj)


def fixed_points_with_eigs(m, tol=1e-9):
    """Fixed points and eigenvalue of an SL-normalized non-parabolic map.

    Returns (x, e, y) with m x = x for eigenvalue e and m y = y for 1/e,
    where e is the root of l^2 - tr(m) l + 1 with |e| > 1 (ties broken by
    arg(e) in [0, pi)).  The other branch is reached through the flip
    action, not here.
    """
    if abs(m.det() - 1) > 1e-8:
        raise ValueError("fixed_points_with_eigs expects an SL-normalized map")
    tr = m.trace()
    disc = tr * tr - 4
    if abs(disc) <= tol * max(1.0, abs(tr) ** 2):
        raise DegenerateInputError(
            "parabolic or scalar map: tr = %r" % (tr,), factor="tr^2 - 4"
        )
    root = sqrt_principal(disc)
    e = (tr + root) / 2
    if abs(e) < 1 or (abs(abs(e) - 1) <= 1e-12 and not (0 <= cmath.phase(e) < math.pi)):
        e = (tr - root) / 2
    a, b = m.m[0]
    c, d = m.m[1]
    # eigenvector for eigenvalue lam solves (a - lam) u + b v = 0
    def eigvec(lam):
        r1 = (b, lam - a)
        r2 = (lam - d, c)
        return max((r1, r2), key=lambda r: abs(r[0]) + abs(r[1]))

    x = ProjectivePoint(*eigvec(e))
    y = ProjectivePoint(*eigvec(1 / e))
    return x, e, y
