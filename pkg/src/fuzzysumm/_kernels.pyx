# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels; see ``_pykernels.py`` for the reference versions."""

import numpy as np

from libc.math cimport sqrt
from libc.stdint cimport int64_t


cdef inline double _tri(double a, double b, double c, double x) nogil:
    cdef double left, right, v
    if x < a or x > c:
        return 0.0
    if a == b:
        left = 1.0
    else:
        left = (x - a) / (b - a)
    if b == c:
        right = 1.0
    else:
        right = (c - x) / (c - b)
    v = left if left < right else right
    return v if v > 0.0 else 0.0


def tri(double a, double b, double c, double x):
    return _tri(a, b, c, x)


cdef void _fire(const double[:, ::1] deg, const int64_t[:, ::1] ante, const double[::1] w,
                const int64_t[::1] cons, double[::1] act) nogil:
    cdef Py_ssize_t r, v, k
    cdef int64_t t
    cdef double s, d
    for k in range(act.shape[0]):
        act[k] = 0.0
    for r in range(ante.shape[0]):
        s = 1.0
        for v in range(ante.shape[1]):
            t = ante[r, v]
            if t >= 0:
                d = deg[v, t]
                if d < s:
                    s = d
        s = w[r] * s
        k = cons[r]
        if s > act[k]:
            act[k] = s


cdef double _centroid(const double[::1] act, const double[:, ::1] out, double lo, double hi,
                      Py_ssize_t resolution, double fallback) nogil:
    cdef Py_ssize_t i, k
    cdef double num = 0.0, den = 0.0, y, mu, m
    cdef double step = (hi - lo) / (resolution - 1)
    for i in range(resolution):
        y = lo + i * step
        mu = 0.0
        for k in range(out.shape[0]):
            m = _tri(out[k, 0], out[k, 1], out[k, 2], y)
            if act[k] < m:
                m = act[k]
            if m > mu:
                mu = m
        num += y * mu
        den += mu
    if den == 0.0:
        return fallback
    return num / den


def fire_rules(degrees, antecedents, weights, consequents, Py_ssize_t n_out):
    cdef double[:, ::1] deg = np.ascontiguousarray(degrees, dtype=np.float64)
    cdef int64_t[:, ::1] ante = np.ascontiguousarray(antecedents, dtype=np.int64)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef int64_t[::1] cons = np.ascontiguousarray(consequents, dtype=np.int64)
    act = np.zeros(n_out, dtype=np.float64)
    cdef double[::1] act_v = act
    _fire(deg, ante, w, cons, act_v)
    return act.tolist()


def centroid(activations, out_params, double lo, double hi, Py_ssize_t resolution, double fallback):
    cdef double[::1] act = np.ascontiguousarray(activations, dtype=np.float64)
    cdef double[:, ::1] out = np.ascontiguousarray(out_params, dtype=np.float64)
    return _centroid(act, out, lo, hi, resolution, fallback)


def fuzzify_all(x, in_params, n_terms):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[:, :, ::1] p = np.ascontiguousarray(in_params, dtype=np.float64)
    cdef int64_t[::1] nt = np.ascontiguousarray(n_terms, dtype=np.int64)
    cdef Py_ssize_t v, t
    out = []
    for v in range(xv.shape[0]):
        out.append([_tri(p[v, t, 0], p[v, t, 1], p[v, t, 2], xv[v]) for t in range(nt[v])])
    return out


def evaluate_batch(inputs, in_params, n_terms, antecedents, weights, consequents,
                   out_params, double lo, double hi, Py_ssize_t resolution, double fallback):
    cdef double[:, ::1] x = np.ascontiguousarray(inputs, dtype=np.float64)
    cdef double[:, :, ::1] p = np.ascontiguousarray(in_params, dtype=np.float64)
    cdef int64_t[::1] nt = np.ascontiguousarray(n_terms, dtype=np.int64)
    cdef int64_t[:, ::1] ante = np.ascontiguousarray(antecedents, dtype=np.int64)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef int64_t[::1] cons = np.ascontiguousarray(consequents, dtype=np.int64)
    cdef double[:, ::1] out = np.ascontiguousarray(out_params, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0], n_in = x.shape[1], s, v, t
    cdef double[:, ::1] deg = np.zeros((n_in, p.shape[1]), dtype=np.float64)
    cdef double[::1] act = np.zeros(out.shape[0], dtype=np.float64)
    scores = np.empty(n, dtype=np.float64)
    cdef double[::1] sc = scores
    with nogil:
        for s in range(n):
            for v in range(n_in):
                for t in range(nt[v]):
                    deg[v, t] = _tri(p[v, t, 0], p[v, t, 1], p[v, t, 2], x[s, v])
            _fire(deg, ante, w, cons, act)
            sc[s] = _centroid(act, out, lo, hi, resolution, fallback)
    return scores.tolist()


cdef double _cosine(const double[:, ::1] vec, Py_ssize_t i, Py_ssize_t j) nogil:
    cdef Py_ssize_t t
    cdef double dot = 0.0, nu = 0.0, nv = 0.0, a, b, sim
    for t in range(vec.shape[1]):
        a = vec[i, t]
        b = vec[j, t]
        dot += a * b
        nu += a * a
        nv += b * b
    if nu == 0.0 or nv == 0.0:
        return 0.0
    sim = dot / (sqrt(nu) * sqrt(nv))
    return 1.0 if sim > 1.0 else sim


def cosine(u, v):
    cdef double[:, ::1] vec = np.ascontiguousarray(np.vstack([u, v]), dtype=np.float64)
    return _cosine(vec, 0, 1)


def similarity_sums(vectors):
    cdef double[:, ::1] vec = np.ascontiguousarray(vectors, dtype=np.float64)
    cdef Py_ssize_t n = vec.shape[0], i, j
    sim_arr = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] sim = sim_arr
    sums = np.zeros(n, dtype=np.float64)
    cdef double[::1] out = sums
    cdef double total, s
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                s = _cosine(vec, i, j)
                sim[i, j] = s
                sim[j, i] = s
        for i in range(n):
            total = 0.0
            for j in range(n):
                if j != i:
                    total += sim[i, j]
            out[i] = total
    return sums.tolist()
