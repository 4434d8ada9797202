# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels; same contract as ``gaugeca._pykernels``."""

import numpy as np

NAME = "cython"


cdef inline Py_ssize_t _wrap(Py_ssize_t i, Py_ssize_t n) noexcept nogil:
    if i < 0:
        return i + n
    if i >= n:
        return i - n
    return i


def step_r(const int[:, ::1] psi):
    cdef Py_ssize_t N = psi.shape[0], L = psi.shape[1] // 2, n, x
    out = np.empty((N, 2 * L), dtype=np.int32)
    cdef int[:, ::1] o = out
    with nogil:
        for n in range(N):
            for x in range(L):
                o[n, 2 * x] = psi[n, 2 * _wrap(x + 1, L)]
                o[n, 2 * x + 1] = psi[n, 2 * _wrap(x - 1, L) + 1]
    return out


def step_r_inv(const int[:, ::1] psi):
    cdef Py_ssize_t N = psi.shape[0], L = psi.shape[1] // 2, n, x
    out = np.empty((N, 2 * L), dtype=np.int32)
    cdef int[:, ::1] o = out
    with nogil:
        for n in range(N):
            for x in range(L):
                o[n, 2 * x] = psi[n, 2 * _wrap(x - 1, L)]
                o[n, 2 * x + 1] = psi[n, 2 * _wrap(x + 1, L) + 1]
    return out


def step_ra(const int[:, ::1] act, const int[::1] inv,
            const int[:, ::1] psi, const int[:, ::1] field):
    cdef Py_ssize_t N = psi.shape[0], L = psi.shape[1] // 2, n, x, xm, xp
    out = np.empty((N, 2 * L), dtype=np.int32)
    cdef int[:, ::1] o = out
    with nogil:
        for n in range(N):
            for x in range(L):
                xp = _wrap(x + 1, L)
                xm = _wrap(x - 1, L)
                o[n, 2 * x] = act[inv[field[n, x]], psi[n, 2 * xp]]
                o[n, 2 * x + 1] = act[field[n, xm], psi[n, 2 * xm + 1]]
    return out


def step_ra_inv(const int[:, ::1] act, const int[::1] inv,
                const int[:, ::1] psi, const int[:, ::1] field):
    cdef Py_ssize_t N = psi.shape[0], L = psi.shape[1] // 2, n, x, xm, xp
    out = np.empty((N, 2 * L), dtype=np.int32)
    cdef int[:, ::1] o = out
    with nogil:
        for n in range(N):
            for x in range(L):
                xp = _wrap(x + 1, L)
                xm = _wrap(x - 1, L)
                o[n, 2 * x] = act[field[n, xm], psi[n, 2 * xm]]
                o[n, 2 * x + 1] = act[inv[field[n, x]], psi[n, 2 * xp + 1]]
    return out


cdef inline void _gauge_matter_row(const int* act, Py_ssize_t K, const int* g,
                                   const int* psi, int* dst, Py_ssize_t L) noexcept nogil:
    cdef Py_ssize_t x
    cdef const int* row
    for x in range(L):
        row = act + g[x] * K
        dst[2 * x] = row[psi[2 * x]]
        dst[2 * x + 1] = row[psi[2 * x + 1]]


cdef inline void _gauge_field_row(const int* mul, Py_ssize_t P, const int* inv, const int* g,
                                  const int* field, int* dst, Py_ssize_t L) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(L):
        dst[i] = mul[mul[g[_wrap(i + 1, L)] * P + field[i]] * P + inv[g[i]]]


def gauge_matter(const int[:, ::1] act, const int[:, ::1] g, const int[:, ::1] psi):
    cdef Py_ssize_t N = psi.shape[0], L = psi.shape[1] // 2, n, K = act.shape[1]
    cdef Py_ssize_t gstride = 0 if g.shape[0] == 1 else g.shape[1]
    out = np.empty((N, 2 * L), dtype=np.int32)
    if L == 0 or N == 0:
        return out
    cdef int[:, ::1] o = out
    with nogil:
        for n in range(N):
            _gauge_matter_row(&act[0, 0], K, &g[0, 0] + n * gstride, &psi[n, 0], &o[n, 0], L)
    return out


def gauge_field(const int[:, ::1] mul, const int[::1] inv,
                const int[:, ::1] g, const int[:, ::1] field):
    cdef Py_ssize_t N = field.shape[0], L = field.shape[1], n, P = mul.shape[0]
    cdef Py_ssize_t gstride = 0 if g.shape[0] == 1 else g.shape[1]
    out = np.empty((N, L), dtype=np.int32)
    if L == 0 or N == 0:
        return out
    cdef int[:, ::1] o = out
    with nogil:
        for n in range(N):
            _gauge_field_row(&mul[0, 0], P, &inv[0], &g[0, 0] + n * gstride, &field[n, 0], &o[n, 0], L)
    return out


cdef inline long long _key(const int* m, Py_ssize_t mw, const int* f, Py_ssize_t fw,
                           long long K, long long P) noexcept nogil:
    cdef long long k = 0
    cdef Py_ssize_t j
    for j in range(mw):
        k = k * K + m[j]
    for j in range(fw):
        k = k * P + f[j]
    return k


def state_keys(const int[:, ::1] psi, const int[:, ::1] field, long long K, long long P):
    cdef Py_ssize_t N = max(psi.shape[0], field.shape[0]), n, j
    cdef Py_ssize_t mw = psi.shape[1], fw = field.shape[1]
    out = np.empty(N, dtype=np.int64)
    cdef long long[::1] o = out
    cdef long long k
    with nogil:
        for n in range(N):
            k = 0
            for j in range(mw):
                k = k * K + psi[n, j]
            for j in range(fw):
                k = k * P + field[n, j]
            o[n] = k
    return out


def orbit_min_keys(const int[:, ::1] act, const int[:, ::1] mul, const int[::1] inv,
                   const int[:, ::1] G, const int[:, ::1] psi, const int[:, ::1] field,
                   long long K, long long P):
    cdef Py_ssize_t N = max(psi.shape[0], field.shape[0]), M = G.shape[0]
    cdef Py_ssize_t mw = psi.shape[1], fw = field.shape[1], n, m
    cdef Py_ssize_t L = G.shape[1]
    out = np.empty(N, dtype=np.int64)
    if N == 0:
        return out
    cdef long long[::1] o = out
    mbuf_arr = np.zeros(max(mw, 1), dtype=np.int32)
    fbuf_arr = np.zeros(max(fw, 1), dtype=np.int32)
    cdef int* mbuf
    cdef int[::1] mview = mbuf_arr
    cdef int[::1] fview = fbuf_arr
    cdef int* fbuf
    cdef const int* pact = &act[0, 0]
    cdef const int* pmul = &mul[0, 0]
    cdef const int* pinv = &inv[0]
    cdef const int* pG = &G[0, 0]
    cdef const int* ppsi = &psi[0, 0] if mw else NULL
    cdef const int* pfield = &field[0, 0] if fw else NULL
    cdef long long k, best
    mbuf = &mview[0]
    fbuf = &fview[0]
    with nogil:
        for n in range(N):
            best = -1
            for m in range(M):
                if mw:
                    _gauge_matter_row(pact, K, pG + m * L, ppsi + n * mw, mbuf, L)
                if fw:
                    _gauge_field_row(pmul, P, pinv, pG + m * L, pfield + n * fw, fbuf, L)
                k = _key(mbuf, mw, fbuf, fw, K, P)
                if best < 0 or k < best:
                    best = k
            o[n] = best
    return out


def fixed_counts(const int[:, ::1] act, const int[:, ::1] mul, const int[::1] inv,
                 const int[:, ::1] G, const int[:, ::1] psi, const int[:, ::1] field):
    cdef Py_ssize_t N = max(psi.shape[0], field.shape[0]), M = G.shape[0]
    cdef Py_ssize_t mw = psi.shape[1], fw = field.shape[1], n, m, j
    cdef Py_ssize_t L = G.shape[1]
    out = np.zeros(M, dtype=np.int64)
    cdef long long[::1] o = out
    cdef bint fixed
    cdef int s
    with nogil:
        for m in range(M):
            for n in range(N):
                fixed = True
                for j in range(mw):
                    if act[G[m, j // 2], psi[n, j]] != psi[n, j]:
                        fixed = False
                        break
                if fixed:
                    for j in range(fw):
                        s = mul[mul[G[m, _wrap(j + 1, L)], field[n, j]], inv[G[m, j]]]
                        if s != field[n, j]:
                            fixed = False
                            break
                if fixed:
                    o[m] += 1
    return out
