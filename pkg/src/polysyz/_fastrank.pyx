# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Dense Gaussian elimination mod a word-size prime (the rank hot loop)."""


cdef long long _modinv(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(long long[:, ::1] a, long long p):
    """Rank of the matrix over GF(p); entries are reduced in place.

    Requires p < 2**31 so that products of reduced entries fit in int64.
    """
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, i, j, c, piv
    cdef long long inv, f, v
    for i in range(m):
        for j in range(n):
            v = a[i, j] % p
            if v < 0:
                v += p
            a[i, j] = v
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                v = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = v
        inv = _modinv(a[r, c], p)
        for j in range(c, n):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(r + 1, m):
            f = a[i, c]
            if f != 0:
                for j in range(c, n):
                    v = (a[i, j] - f * a[r, j]) % p
                    if v < 0:
                        v += p
                    a[i, j] = v
        r += 1
    return r
