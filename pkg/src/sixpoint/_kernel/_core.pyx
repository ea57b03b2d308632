# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of ``sixpoint._kernel.pure``.

Values are arbitrary-precision Python ints, so all variables stay ``object``
typed; the win over the pure lane is dispatch overhead, not machine words.
Function bodies must stay semantically identical to ``pure.py`` -- the
parity test compares both lanes on random inputs.
"""

from math import gcd


cpdef tuple norm_pair(object p, object q):
    cdef object g
    if q == 0:
        return (0, 0) if p == 0 else (1, 0)
    g = gcd(p, q)
    if q < 0:
        g = -g
    return (p // g, q // g)


cpdef tuple norm_point(object x, object y, object w):
    cdef object g, lead
    if x == 0 and y == 0 and w == 0:
        return (0, 0, 0)
    g = gcd(gcd(x, y), w)
    lead = w if w != 0 else (x if x != 0 else y)
    if lead < 0:
        g = -g
    return (x // g, y // g, w // g)


cpdef tuple norm_line(object l, object m, object n):
    cdef object g, lead
    if l == 0 and m == 0 and n == 0:
        return (0, 0, 0)
    g = gcd(gcd(l, m), n)
    lead = l if l != 0 else (m if m != 0 else n)
    if lead < 0:
        g = -g
    return (l // g, m // g, n // g)


cpdef tuple cross3(object a1, object a2, object a3,
                   object b1, object b2, object b3):
    return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


cpdef object dot3(object a1, object a2, object a3,
                  object b1, object b2, object b3):
    return a1 * b1 + a2 * b2 + a3 * b3


cpdef object det3(object a1, object a2, object a3,
                  object b1, object b2, object b3,
                  object c1, object c2, object c3):
    return (a1 * (b2 * c3 - b3 * c2)
            - a2 * (b1 * c3 - b3 * c1)
            + a3 * (b1 * c2 - b2 * c1))


cpdef tuple section_combine(object bx, object by, object bw,
                            object cx, object cy, object cw,
                            object p, object q):
    cdef object s = q * cw
    cdef object t = p * bw
    return (s * bx + t * cx, s * by + t * cy, s * bw + t * cw)


cpdef tuple section_solve(object bx, object by, object bw,
                          object cx, object cy, object cw,
                          object dx, object dy, object dw):
    cdef object b1 = cw * bx
    cdef object b2 = cw * by
    cdef object b3 = cw * bw
    cdef object c1 = bw * cx
    cdef object c2 = bw * cy
    cdef object c3 = bw * cw
    cdef tuple n = cross3(b1, b2, b3, c1, c2, c3)
    cdef int i
    if n[0] != 0:
        i = 0
    elif n[1] != 0:
        i = 1
    else:
        i = 2
    cdef object p = cross3(b1, b2, b3, dx, dy, dw)[i]
    cdef object q = cross3(dx, dy, dw, c1, c2, c3)[i]
    return (p, q)


cpdef tuple combine3(object ax, object ay, object aw,
                     object bx, object by, object bw,
                     object cx, object cy, object cw,
                     object ka, object kb, object kc):
    cdef object sa = ka * bw * cw
    cdef object sb = kb * aw * cw
    cdef object sc = kc * aw * bw
    return (sa * ax + sb * bx + sc * cx,
            sa * ay + sb * by + sc * cy,
            sa * aw + sb * bw + sc * cw)


cpdef tuple area_num_den(object px, object py, object pw,
                         object qx, object qy, object qw,
                         object rx, object ry, object rw):
    cdef object num = det3(px, py, pw, qx, qy, qw, rx, ry, rw)
    cdef object den = 2 * pw * qw * rw
    return (num, den)


cpdef object ceva_residual(object pd, object qd, object pe,
                           object qe, object pf, object qf):
    return pd * pe * pf - qd * qe * qf


cpdef object menelaus_residual(object pd, object qd, object pe,
                               object qe, object pf, object qf):
    return pd * pe * pf + qd * qe * qf


cpdef object six_concurrence_residual(object pap, object qap, object pam,
                                      object qam, object pbp, object qbp,
                                      object pbm, object qbm, object pcp,
                                      object qcp, object pcm, object qcm):
    return (pap * pbp * pcp * qam * qbm * qcm
            + pam * pbm * pcm * qap * qbp * qcp
            + pap * pam * qbp * qbm * qcp * qcm
            + pbp * pbm * qap * qam * qcp * qcm
            + pcp * pcm * qap * qam * qbp * qbm
            - qap * qam * qbp * qbm * qcp * qcm)


cpdef object six_collinearity_residual(object pap, object qap, object pam,
                                       object qam, object pbp, object qbp,
                                       object pbm, object qbm, object pcp,
                                       object qcp, object pcm, object qcm):
    return (pap * pbp * pcp * qam * qbm * qcm
            + pam * pbm * pcm * qap * qbp * qcp
            - pap * pam * qbp * qbm * qcp * qcm
            - pbp * pbm * qap * qam * qcp * qcm
            - pcp * pcm * qap * qam * qbp * qbm
            + qap * qam * qbp * qbm * qcp * qcm)


cpdef object cevian_edge_factor(object pd, object qd, object pe, object qe):
    return qd * qe + pd * qe + pd * pe


cpdef object cevian_vertex_factor(object pd, object qd):
    return qd + pd


cpdef tuple edge_vertex_coeffs(object p1, object q1, object p2, object q2,
                               object pb, object qb, object pc, object qc):
    cdef object ka = (q1 * q2 - p1 * p2) * qb * qc
    cdef object kb = pc * q1 * q2 * qb + p2 * pb * q1 * qc
    cdef object kc = pb * q1 * q2 * qc + p1 * pc * q2 * qb
    return (ka, kb, kc)


cpdef tuple hat_coeffs(object pc, object qc, object pb, object qb):
    return (qc * qb, pc * qb, pb * qc)
