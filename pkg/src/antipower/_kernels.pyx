# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; same signatures as ``_kernels_py``.

Letters are produced straight from index arithmetic. A 64-aligned chunk
starting at position 64c equals T64 when popcount(c) is even and its
complement otherwise, so any 64 consecutive letters are two shifts away.
Words are packed MSB-first: letter i of a word sits at bit 63 - i.
"""

from libc.stdint cimport uint64_t, int64_t, uint8_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcmp

import numpy as np

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil

cdef uint64_t T64 = 0x6996966996696996ULL
cdef uint64_t ONES = 0xFFFFFFFFFFFFFFFFULL
cdef uint64_t EMPTY_SLOT = 0xFFFFFFFFFFFFFFFFULL


cdef inline uint64_t aligned_word(uint64_t c) noexcept nogil:
    if popcount64(c) & 1:
        return ~T64
    return T64


cdef inline uint64_t word_at(uint64_t p) noexcept nogil:
    cdef uint64_t c = p >> 6
    cdef unsigned int s = <unsigned int>(p & 63)
    if s == 0:
        return aligned_word(c)
    return (aligned_word(c) << s) | (aligned_word(c + 1) >> (64 - s))


cdef inline void fill_block(uint64_t start, int64_t m, uint64_t* out) noexcept nogil:
    cdef int64_t nw = (m + 63) >> 6
    cdef int64_t w
    cdef int64_t rem = m & 63
    for w in range(nw):
        out[w] = word_at(start + 64 * <uint64_t>w)
    if rem:
        out[nw - 1] &= ONES << (64 - rem)


cdef inline uint64_t mix(uint64_t h) noexcept nogil:
    h ^= h >> 33
    h *= 0xff51afd7ed558ccdULL
    h ^= h >> 33
    h *= 0xc4ceb9fe1a85ec53ULL
    h ^= h >> 33
    return h


cdef inline uint64_t block_hash(uint64_t* words, int64_t nw) noexcept nogil:
    cdef uint64_t h = <uint64_t>nw * 0x9E3779B97F4A7C15ULL
    cdef int64_t w
    for w in range(nw):
        h = mix(h ^ words[w]) + 0x9E3779B97F4A7C15ULL
    return h


cdef struct Table:
    uint64_t* hashes
    int64_t* first
    int64_t* count
    int64_t cap
    int64_t size


cdef int table_init(Table* t, int64_t cap) noexcept nogil:
    cdef int64_t i
    t.cap = cap
    t.size = 0
    t.hashes = <uint64_t*>malloc(cap * sizeof(uint64_t))
    t.first = <int64_t*>malloc(cap * sizeof(int64_t))
    t.count = <int64_t*>malloc(cap * sizeof(int64_t))
    if t.hashes == NULL or t.first == NULL or t.count == NULL:
        return -1
    for i in range(cap):
        t.first[i] = -1
    return 0


cdef void table_free(Table* t) noexcept nogil:
    free(t.hashes)
    free(t.first)
    free(t.count)


cdef int table_grow(Table* t) noexcept nogil:
    cdef Table old = t[0]
    cdef int64_t i, slot
    if table_init(t, old.cap * 2) < 0:
        table_free(t)
        t[0] = old
        return -1
    for i in range(old.cap):
        if old.first[i] >= 0:
            slot = <int64_t>(old.hashes[i] & <uint64_t>(t.cap - 1))
            while t.first[slot] >= 0:
                slot = (slot + 1) & (t.cap - 1)
            t.hashes[slot] = old.hashes[i]
            t.first[slot] = old.first[i]
            t.count[slot] = old.count[i]
            t.size += 1
    table_free(&old)
    return 0


cdef int64_t repeat_search(uint64_t offset, int64_t m, int64_t k_max, int64_t lam,
                           int64_t* n1_out) noexcept nogil:
    """Index of the first block whose value exceeds ``lam`` occurrences, else -1.

    Returns -2 on allocation failure.
    """
    cdef int64_t nw = (m + 63) >> 6
    cdef uint64_t* cur = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef uint64_t* other = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef Table t
    cdef int64_t n, slot
    cdef int64_t result = -1
    cdef uint64_t h
    if cur == NULL or other == NULL or table_init(&t, 1024) < 0:
        free(cur)
        free(other)
        return -2
    for n in range(k_max):
        fill_block(offset + <uint64_t>n * <uint64_t>m, m, cur)
        h = block_hash(cur, nw)
        slot = <int64_t>(h & <uint64_t>(t.cap - 1))
        while True:
            if t.first[slot] < 0:
                t.hashes[slot] = h
                t.first[slot] = n
                t.count[slot] = 1
                t.size += 1
                break
            if t.hashes[slot] == h:
                # equal fingerprints are never trusted without a letterwise check
                fill_block(offset + <uint64_t>t.first[slot] * <uint64_t>m, m, other)
                if memcmp(cur, other, nw * sizeof(uint64_t)) == 0:
                    t.count[slot] += 1
                    if t.count[slot] > lam:
                        n1_out[0] = t.first[slot]
                        result = n
                    break
            slot = (slot + 1) & (t.cap - 1)
        if result >= 0:
            break
        if t.size * 2 > t.cap and table_grow(&t) < 0:
            result = -2
            break
    table_free(&t)
    free(cur)
    free(other)
    return result


cdef bint equal_runs(uint64_t a, uint64_t b, int64_t length) noexcept nogil:
    cdef int64_t full = length >> 6
    cdef int64_t rem = length & 63
    cdef int64_t w
    cdef uint64_t mask
    for w in range(full):
        if word_at(a + 64 * <uint64_t>w) != word_at(b + 64 * <uint64_t>w):
            return False
    if rem:
        mask = ONES << (64 - rem)
        if (word_at(a + 64 * <uint64_t>full) ^ word_at(b + 64 * <uint64_t>full)) & mask:
            return False
    return True


def tm_letters(start, n):
    """Letters ``t[start] .. t[start+n-1]`` (0-based) as a uint8 array of 0/1."""
    out = np.empty(n, dtype=np.uint8)
    cdef uint8_t[::1] view = out
    cdef uint64_t s = start
    cdef int64_t i, count = n
    with nogil:
        for i in range(count):
            view[i] = popcount64(s + <uint64_t>i) & 1
    return out


def factors_equal(a, b, length):
    """True iff the factors of the given length at 0-based starts a and b coincide."""
    cdef uint64_t ua = a, ub = b
    cdef int64_t n = length
    cdef bint res
    with nogil:
        res = equal_runs(ua, ub, n)
    return bool(res)


def first_repeat(m, k_max, offset=0, lam=1):
    """Scan the blocks ``offset + n*m`` for n = 0, 1, ... k_max-1.

    Returns ``(k, n1, n2)`` for the first block n2 whose value has now been
    seen more than ``lam`` times (k = n2 + 1, n1 = earliest block with that
    value), or None when the first k_max blocks never exceed ``lam``.
    """
    cdef uint64_t off = offset
    cdef int64_t mm = m, kk = k_max, ll = lam
    cdef int64_t n1 = -1, n2
    with nogil:
        n2 = repeat_search(off, mm, kk, ll, &n1)
    if n2 == -2:
        raise MemoryError("block table allocation failed")
    if n2 < 0:
        return None
    return n2 + 1, n1, n2
