"""Pure-Python integer kernels.

Every function here maps plain Python ints to plain Python ints (or small
tuples of them) with no rounding anywhere: these are the hot inner loops of
the predicate, area-formula, and oracle evaluations.  A compiled twin lives
in ``_core.pyx`` with identical semantics; ``sixpoint._kernel`` picks one at
import time.

Keep this module dependency-free and exception-free: callers own validation
and error reporting.  Degenerate results are encoded in-band (all-zero
tuples), never raised.
"""

from math import gcd


def norm_pair(p, q):
    """Canonicalize a projective ratio pair: gcd 1 and q > 0, or (1, 0).

    (0, 0) is returned unchanged; the caller rejects it.
    """
    if q == 0:
        return (0, 0) if p == 0 else (1, 0)
    g = gcd(p, q)
    if q < 0:
        g = -g
    return (p // g, q // g)


def norm_point(x, y, w):
    """Canonicalize homogeneous point coords: gcd 1, first of (w, x, y) > 0."""
    if x == 0 and y == 0 and w == 0:
        return (0, 0, 0)
    g = gcd(gcd(x, y), w)
    lead = w if w != 0 else (x if x != 0 else y)
    if lead < 0:
        g = -g
    return (x // g, y // g, w // g)


def norm_line(l, m, n):
    """Canonicalize line coefficients: gcd 1, first of (l, m, n) > 0."""
    if l == 0 and m == 0 and n == 0:
        return (0, 0, 0)
    g = gcd(gcd(l, m), n)
    lead = l if l != 0 else (m if m != 0 else n)
    if lead < 0:
        g = -g
    return (l // g, m // g, n // g)


def cross3(a1, a2, a3, b1, b2, b3):
    return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


def dot3(a1, a2, a3, b1, b2, b3):
    return a1 * b1 + a2 * b2 + a3 * b3


def det3(a1, a2, a3, b1, b2, b3, c1, c2, c3):
    return (a1 * (b2 * c3 - b3 * c2)
            - a2 * (b1 * c3 - b3 * c1)
            + a3 * (b1 * c2 - b2 * c1))


def section_combine(bx, by, bw, cx, cy, cw, p, q):
    """Point dividing B -> C in ratio (p : q): q*B + p*C on w-normalized reps."""
    s = q * cw
    t = p * bw
    return (s * bx + t * cx, s * by + t * cy, s * bw + t * cw)


def section_solve(bx, by, bw, cx, cy, cw, dx, dy, dw):
    """Raw ratio pair (p, q) of D relative to segment B -> C.

    Requires D on line BC and B, C affine and distinct; then D is a linear
    combination q'*(cw*B) + p'*(bw*C) and any common nonzero coordinate of
    the cross products recovers (p : q).
    """
    b1, b2, b3 = cw * bx, cw * by, cw * bw
    c1, c2, c3 = bw * cx, bw * cy, bw * cw
    n = cross3(b1, b2, b3, c1, c2, c3)
    if n[0] != 0:
        i = 0
    elif n[1] != 0:
        i = 1
    else:
        i = 2
    p = cross3(b1, b2, b3, dx, dy, dw)[i]
    q = cross3(dx, dy, dw, c1, c2, c3)[i]
    return (p, q)


def combine3(ax, ay, aw, bx, by, bw, cx, cy, cw, ka, kb, kc):
    """Weighted combination ka*A + kb*B + kc*C of w-normalized points."""
    sa = ka * bw * cw
    sb = kb * aw * cw
    sc = kc * aw * bw
    return (sa * ax + sb * bx + sc * cx,
            sa * ay + sb * by + sc * cy,
            sa * aw + sb * bw + sc * cw)


def area_num_den(px, py, pw, qx, qy, qw, rx, ry, rw):
    """Signed area of an affine triple as an integer fraction (num, den)."""
    num = det3(px, py, pw, qx, qy, qw, rx, ry, rw)
    den = 2 * pw * qw * rw
    return (num, den)


def ceva_residual(pd, qd, pe, qe, pf, qf):
    """Cleared form of d*e*f - 1; zero exactly when the cevians concur."""
    return pd * pe * pf - qd * qe * qf


def menelaus_residual(pd, qd, pe, qe, pf, qf):
    """Cleared form of d*e*f + 1; zero exactly when the points colline."""
    return pd * pe * pf + qd * qe * qf


def six_concurrence_residual(pap, qap, pam, qam, pbp, qbp,
                             pbm, qbm, pcp, qcp, pcm, qcm):
    """Cleared a+b+c+ + a-b-c- + a+a- + b+b- + c+c- - 1.

    Each product term carries exactly the q-components it does not use, so
    the residual is degree 1 in every (p, q) pair and total over infinite
    ratios.
    """
    return (pap * pbp * pcp * qam * qbm * qcm
            + pam * pbm * pcm * qap * qbp * qcp
            + pap * pam * qbp * qbm * qcp * qcm
            + pbp * pbm * qap * qam * qcp * qcm
            + pcp * pcm * qap * qam * qbp * qbm
            - qap * qam * qbp * qbm * qcp * qcm)


def six_collinearity_residual(pap, qap, pam, qam, pbp, qbp,
                              pbm, qbm, pcp, qcp, pcm, qcm):
    """Cleared a+b+c+ + a-b-c- - a+a- - b+b- - c+c- + 1."""
    return (pap * pbp * pcp * qam * qbm * qcm
            + pam * pbm * pcm * qap * qbp * qcp
            - pap * pam * qbp * qbm * qcp * qcm
            - pbp * pbm * qap * qam * qcp * qcm
            - pcp * pcm * qap * qam * qbp * qbm
            + qap * qam * qbp * qbm * qcp * qcm)


def cevian_edge_factor(pd, qd, pe, qe):
    """Cleared 1 + d + d*e, one denominator factor of the cevian-triangle ratio."""
    return qd * qe + pd * qe + pd * pe


def cevian_vertex_factor(pd, qd):
    """Cleared 1 + d."""
    return qd + pd


def edge_vertex_coeffs(p1, q1, p2, q2, pb, qb, pc, qc):
    """Cleared barycentric weights of one edge-triangle vertex.

    Arguments are the pairs for (a+, a-, b-, c+) in the base orientation;
    cyclic images are obtained by rotating the arguments and the returned
    weights.  The weight sum is the cleared denominator factor
    1 - a+a- + b-(1 + a-) + c+(1 + a+), so the vertex lies at infinity
    exactly when that factor vanishes.
    """
    ka = (q1 * q2 - p1 * p2) * qb * qc
    kb = pc * q1 * q2 * qb + p2 * pb * q1 * qc
    kc = pb * q1 * q2 * qc + p1 * pc * q2 * qb
    return (ka, kb, kc)


def hat_coeffs(pc, qc, pb, qb):
    """Cleared barycentric weights of one cevian-intersection point.

    Arguments are the pairs for (c+, b-) in the base orientation.  The
    weight sum is the cleared 1 + c+ + b-.
    """
    return (qc * qb, pc * qb, pb * qc)
