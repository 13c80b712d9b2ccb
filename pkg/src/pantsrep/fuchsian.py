"""The real locus: Teichmueller domain, discreteness, Fenchel-Nielsen.

Eigenvalue parameters with e_i < -1 and positive real twists describe
discrete faithful PSL(2,R) representations; this module certifies the
pants-level discreteness inequalities, classifies real-or-unitary triples,
converts twists to the hyperbolic-distance normalization, and evaluates
Okai's length formula for the curve produced by an elementary move.
"""

import cmath
import math
from collections import namedtuple

from .projective import sqrt_principal
from .coordinates import EdgeParams, local_picture
from . import symmetry

REAL_TOL = 1e-9

FnParams = namedtuple("FnParams", ["lengths", "fn_twists", "meta"])
FnParams.__new__.__defaults__ = (None,)


def _is_real(z, tol=REAL_TOL):
    return abs(complex(z).imag) <= tol * max(1.0, abs(z))


def in_teich_domain(params, tol=REAL_TOL):
    """True iff every eigenvalue is real < -1 and every twist real > 0."""
    for e in params.eigen.values():
        if not _is_real(e, tol) or complex(e).real >= -1:
            return False
    for t in params.twist.values():
        if not _is_real(t, tol) or complex(t).real <= 0:
            return False
    return True


DiscretenessCertificate = namedtuple(
    "DiscretenessCertificate", ["chain", "passed"]
)


def pants_discreteness_certificate(e1, e2, e3):
    """Fixed-point chain 0 < 1 < y2 < x3 < y3 < e1^2 certifying discreteness.

    The three hyperbolic generators of a pants group have fixed points
    (0, e1^2), (1, y2), (x3, y3) on the real line; the ordering makes the
    half-plane ping-pong argument work, so the representation is discrete
    and faithful whenever the chain is strictly increasing.
    """
    for e in (e1, e2, e3):
        if not _is_real(e):
            raise ValueError("eigenvalues must be real, got %r" % (e,))
    e1, e2, e3 = complex(e1).real, complex(e2).real, complex(e3).real
    if e1 * e2 * e3 >= 0:
        raise ValueError("need e1*e2*e3 < 0 (boundary traces of a real pants group)")
    x3 = -e1 * (e1 * e2 - e3) / (e1 * e3 - e2)
    y2 = (e1 * e2 - e3) * (1 - e1 * e2 * e3) / ((e2 * e3 - e1) * (e1 * e3 - e2))
    y3 = -e1 * (1 - e1 * e2 * e3) / (e2 * e3 - e1)
    chain = (1.0, y2, x3, y3, e1 * e1)
    passed = all(a < b for a, b in zip((0.0,) + chain, chain))
    return DiscretenessCertificate(chain, passed)


def goldman_type(e1, e2, e3):
    """'SL2R' or 'SU2' for an irreducible pants representation.

    The boundary traces chi_i = e_i + 1/e_i are real exactly when each e_i
    is real or unit-modulus; the representation is conjugate into SL(2,R)
    iff some |chi_i| >= 2 or kappa >= 2 where kappa is the trace of the
    commutator, and into SU(2) otherwise.
    """
    chis = []
    for e in (e1, e2, e3):
        e = complex(e)
        chi = e + 1 / e
        if not _is_real(chi):
            raise ValueError("trace %r is not real; not a real or unitary triple" % (chi,))
        chis.append(chi.real)
    kappa = sum(c * c for c in chis) - chis[0] * chis[1] * chis[2] - 2
    if any(abs(c) >= 2 for c in chis) or kappa >= 2:
        return "SL2R"
    return "SU2"


def commutator_trace(e1, e2, e3):
    chis = [complex(e) + 1 / complex(e) for e in (e1, e2, e3)]
    return sum(c * c for c in chis) - chis[0] * chis[1] * chis[2] - 2


def fn_twist_factor(surface, params, edge):
    """Multiplier turning the twist at an interior edge into FN form.

    Factored square root of a positive rational expression on the
    Teichmueller domain; off the real locus the principal branch of each
    factor is used.
    """
    lp = local_picture(surface, params, edge)
    e1, e2, e3, e4, e5 = lp.es
    num = (
        (e1 * e3 - e2),
        (e2 * e3 - e1),
        (e1 * e4 - e5),
        (e4 * e5 - e1),
    )
    den = (
        (e1 * e2 - e3),
        (1 - e1 * e2 * e3),
        (e1 * e5 - e4),
        (1 - e1 * e4 * e5),
    )
    out = 1.0 + 0j
    for f in num:
        out *= sqrt_principal(f)
    for f in den:
        out /= sqrt_principal(f)
    return out


def normalize_domain(params, surface):
    """Push real parameters toward the canonical sign pattern e < -1.

    Eigenvalues inside the unit circle are inverted by the flip action
    (which is how an orientation reversal is undone), then a sign vector
    from the admissible (Z/2)^k action is solved for to make every real
    eigenvalue negative.  Returns (params', {"flips": [...], "epsilon": ...}).
    Both actions fix the underlying PSL(2,C) representation.
    """
    actions = {"flips": [], "epsilon": None}
    for eid in sorted(params.eigen):
        if abs(params.eigen[eid]) < 1:
            params = symmetry.flip_eigenvalue(params, surface, eid)
            actions["flips"].append(eid)
    want = {eid for eid, e in params.eigen.items()
            if _is_real(e) and complex(e).real > 0}
    if want:
        basis = symmetry.epsilon_basis(surface)
        edges = sorted(params.eigen)
        pos = {eid: i for i, eid in enumerate(edges)}
        target = 0
        for eid in want:
            target |= 1 << pos[eid]
        masks = []
        for eps in basis:
            m = 0
            for eid, s in eps.items():
                if s == -1:
                    m |= 1 << pos[eid]
            masks.append(m)
        # GF(2) elimination to express target in the span, if possible
        pivots = {}
        combo = {}
        for i, m in enumerate(masks):
            sel = 1 << i
            for col in sorted(pivots, reverse=True):
                if (m >> col) & 1:
                    m ^= pivots[col]
                    sel ^= combo[col]
            if m:
                col = m.bit_length() - 1
                pivots[col], combo[col] = m, sel
        t, chosen = target, 0
        for col in sorted(pivots, reverse=True):
            if (t >> col) & 1:
                t ^= pivots[col]
                chosen ^= combo[col]
        if t == 0:
            eps = {eid: 1 for eid in edges}
            for i in range(len(masks)):
                if (chosen >> i) & 1:
                    for eid, s in basis[i].items():
                        eps[eid] *= s
            params = symmetry.act_epsilon(params, eps, surface)
            actions["epsilon"] = eps
    return params, actions


def to_fenchel_nielsen(params, surface, require_domain=True):
    """Lengths l = 2 log(-e) and FN twists tau = log t^FN."""
    actions = {"flips": [], "epsilon": None}
    if not in_teich_domain(params):
        params, actions = normalize_domain(params, surface)
    on_locus = in_teich_domain(params)
    if require_domain and not on_locus:
        raise ValueError("parameters are outside the Teichmueller domain; "
                         "pass require_domain=False for the analytic extension")
    lengths = {}
    for eid, e in params.eigen.items():
        e = complex(e)
        if on_locus:
            lengths[eid] = 2 * math.log(-e.real)
        else:
            lengths[eid] = 2 * cmath.log(-e)
    fn_twists = {}
    for eid, t in params.twist.items():
        tfn = fn_twist_factor(surface, params, eid) * complex(t)
        if on_locus:
            fn_twists[eid] = math.log(tfn.real)
        else:
            fn_twists[eid] = cmath.log(tfn)
    meta = {"normalization": "signed distance between projected fixed points",
            "on_locus": on_locus, "actions": actions}
    return FnParams(lengths, fn_twists, meta)


def from_fenchel_nielsen(fn, surface):
    """Inverse of to_fenchel_nielsen on the Teichmueller domain."""
    eigen = {eid: -cmath.exp(complex(l) / 2) for eid, l in fn.lengths.items()}
    # the conversion factor depends only on eigenvalues, so the twists can
    # be recovered edge by edge
    twist = {eid: 1.0 + 0j for eid in fn.fn_twists}
    probe = EdgeParams(eigen, twist)
    out = {}
    for eid, tau in fn.fn_twists.items():
        out[eid] = cmath.exp(complex(tau)) / fn_twist_factor(surface, probe, eid)
    real = all(_is_real(e) for e in eigen.values()) and all(_is_real(t) for t in out.values())
    if real:
        eigen = {k: complex(v).real for k, v in eigen.items()}
        out = {k: complex(v).real for k, v in out.items()}
    return EdgeParams({k: complex(v) for k, v in eigen.items()},
                      {k: complex(v) for k, v in out.items()})


def okai_length(ls, tau1):
    """Length of the curve replacing the interior curve of a four-holed
    sphere, from the five old lengths and the FN twist."""
    l1, l2, l3, l4, l5 = (float(l) for l in ls)
    c = [math.cosh(l / 2) for l in (l1, l2, l3, l4, l5)]
    c1, c2, c3, c4, c5 = c
    r1 = c1 * c1 + c2 * c2 + c3 * c3 + 2 * c1 * c2 * c3 - 1
    r2 = c1 * c1 + c4 * c4 + c5 * c5 + 2 * c1 * c4 * c5 - 1
    val = (
        math.sqrt(r1) * math.sqrt(r2) * math.cosh(float(tau1))
        + c1 * (c3 * c5 + c2 * c4)
        + (c2 * c5 + c3 * c4)
    ) / math.sinh(l1 / 2) ** 2
    return 2 * math.acosh(val)


def okai_length_one_holed(l1, l2, tau1):
    """One-holed torus version: length of the new interior curve."""
    l1, l2, tau1 = float(l1), float(l2), float(tau1)
    val = (
        math.cosh(tau1 / 2)
        / math.sinh(l1 / 2)
        * math.sqrt(2 * math.cosh(l1) + 2 * math.cosh(l2 / 2))
        / 2
    )
    return 2 * math.acosh(val)


def psl2r_obstruction(rep, tol=1e-8):
    """Sign per handle generator: +1 for a real matrix, -1 for a purely
    imaginary one.  All +1 iff the representation reduces to PSL(2,R)."""
    signs = {}
    for i in range(1, rep.surface.genus + 1):
        m = rep.image("b%d" % i).m
        re = max(abs(z.real) for z in m.flat)
        im = max(abs(z.imag) for z in m.flat)
        scale = max(re, im)
        if im <= tol * scale:
            signs[i] = 1
        elif re <= tol * scale:
            signs[i] = -1
        else:
            raise ValueError(
                "image of b%d is neither real nor purely imaginary; "
                "parameters are not real" % i
            )
    return signs
