# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; must agree exactly with _pykernels."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

cdef uint64_t FNV_OFFSET = 0xCBF29CE484222325ULL
cdef uint64_t FNV_PRIME = 0x100000001B3ULL


def levenshtein(str a, str b):
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t n = len(a), m = len(b), i, j
    if m == 0:
        return n
    cdef Py_UCS4 ca
    cdef Py_ssize_t *prev = <Py_ssize_t *> malloc((m + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *cur = <Py_ssize_t *> malloc((m + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *tmp
    cdef Py_ssize_t best, cand
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()
    try:
        for j in range(m + 1):
            prev[j] = j
        for i in range(1, n + 1):
            ca = a[i - 1]
            cur[0] = i
            for j in range(1, m + 1):
                best = prev[j] + 1
                cand = cur[j - 1] + 1
                if cand < best:
                    best = cand
                cand = prev[j - 1] + (0 if ca == b[j - 1] else 1)
                if cand < best:
                    best = cand
                cur[j] = best
            tmp = prev
            prev = cur
            cur = tmp
        return prev[m]
    finally:
        free(prev)
        free(cur)


cpdef unsigned long long fnv1a64(bytes data, unsigned long long seed=0):
    cdef uint64_t h = FNV_OFFSET ^ seed
    cdef const unsigned char *p = data
    cdef Py_ssize_t i, n = len(data)
    for i in range(n):
        h ^= p[i]
        h *= FNV_PRIME
    return h


def hash_buckets(features, Py_ssize_t dim, unsigned long long seed):
    return [fnv1a64(f.encode("utf-8"), seed) % dim for f in features]
