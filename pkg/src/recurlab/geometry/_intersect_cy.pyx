# cython: language_level=3
"""Compiled chord-pair intersection kernel.

Exact mirror of ``_intersect_py.intersect_pairs``: same arguments, same
hit order, bit-identical output triples.  Coordinates stay arbitrary-
precision Python ints (exactness is non-negotiable); the speedup comes
from C-level loop indexing and list access around them.
"""

from math import gcd


def intersect_pairs(list px, list py, list pw, list lx, list ly, list lw,
                    list ca, list cb, Py_ssize_t start, Py_ssize_t stop):
    """Return [(i, j, X, Y, W), ...] for properly crossing chord pairs."""
    cdef Py_ssize_t n = len(ca)
    cdef Py_ssize_t i, j, a, b, c, d
    cdef list hits = []
    cdef object l0, l1, l2, m0, m1, m2, s1, s2, s3, s4, x, y, w, g
    for i in range(start, stop):
        a = ca[i]
        b = cb[i]
        l0 = lx[i]
        l1 = ly[i]
        l2 = lw[i]
        for j in range(i + 1, n):
            c = ca[j]
            d = cb[j]
            if c == a or c == b or d == a or d == b:
                continue
            s1 = l0 * px[c] + l1 * py[c] + l2 * pw[c]
            s2 = l0 * px[d] + l1 * py[d] + l2 * pw[d]
            if s1 == 0 or s2 == 0:
                raise ValueError("degenerate input: three collinear circle points")
            if (s1 > 0) == (s2 > 0):
                continue
            m0 = lx[j]
            m1 = ly[j]
            m2 = lw[j]
            s3 = m0 * px[a] + m1 * py[a] + m2 * pw[a]
            s4 = m0 * px[b] + m1 * py[b] + m2 * pw[b]
            if s3 == 0 or s4 == 0:
                raise ValueError("degenerate input: three collinear circle points")
            if (s3 > 0) == (s4 > 0):
                continue
            x = l1 * m2 - l2 * m1
            y = l2 * m0 - l0 * m2
            w = l0 * m1 - l1 * m0
            if w == 0:
                raise ValueError("crossing chords cannot be parallel")
            if w < 0:
                x = -x
                y = -y
                w = -w
            g = gcd(gcd(abs(x), abs(y)), w)
            hits.append((i, j, x // g, y // g, w // g))
    return hits
