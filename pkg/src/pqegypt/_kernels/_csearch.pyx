# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ``_pysearch.search_reduced`` and ``find_record``.

Same records, same order. The caller guarantees every intermediate fits in a
signed 64-bit integer.
"""

from libc.stdlib cimport free, malloc


cdef inline long long _floordiv(long long a, long long b):
    if a >= 0:
        return a / b
    return -((-a + b - 1) / b)


cdef class _Search:
    cdef long long p, q, P, pm1, max_depth
    cdef int *dsum
    cdef dict memo
    cdef set dead

    def __cinit__(self, long long p, long long q, int alpha, long long max_depth):
        cdef long long i
        self.p = p
        self.q = q
        self.P = 1
        for i in range(alpha):
            self.P *= p
        self.pm1 = p - 1
        self.max_depth = max_depth
        self.memo = {}
        self.dead = set()
        self.dsum = <int *> malloc(self.P * sizeof(int))
        if self.dsum == NULL:
            raise MemoryError()
        self.dsum[0] = 0
        for i in range(1, self.P):
            self.dsum[i] = self.dsum[i / p] + <int> (i % p)

    def __dealloc__(self):
        if self.dsum != NULL:
            free(self.dsum)

    cdef long long _q_power(self, long long m):
        cdef long long b = 0
        while m % self.q == 0:
            m = m / self.q
            b += 1
        return b if m == 1 else -1

    cdef list suffixes(self, long long m, long long st_in, long long s_in, long long depth):
        cdef tuple key = (m, st_in, s_in, depth)
        cdef object hit = self.memo.get(key)
        if hit is not None:
            return <list> hit
        cdef list out = []
        cdef long long P = self.P, q = self.q, pm1 = self.pm1
        cdef long long comp, cnt0, extra, l, side, s_out, diff, head, low, N
        cdef long long base, st_out, first, cnt, lmax, rem, b
        cdef list sub
        cdef tuple rec
        if depth > self.max_depth:
            self.memo[key] = out
            return out
        if depth > 1 and st_in == 0:
            comp = P - s_in
            cnt0 = self.dsum[comp]
            extra = m - cnt0
            if extra >= 0 and extra % pm1 == 0:
                l = extra / pm1
                if l * pm1 <= comp - cnt0:
                    out.append((0, 0, (l,), ()))
        side = m + st_in + (1 if s_in else 0)
        for s_out in range(P):
            diff = q * s_out - s_in
            head = _floordiv(diff, P)
            low = diff - head * P
            N = self.dsum[low]
            base = head - st_in
            st_out = 0 if base >= 0 else (-base + q - 1) / q
            if st_out == 0 and s_out == 0:
                st_out = 1
            while True:
                first = q * st_out + base
                cnt = first + N
                if cnt > m:
                    break
                lmax = (first * P + low - cnt) / pm1
                l = 0
                rem = m - cnt
                while rem >= 0 and l <= lmax:
                    if rem == 0:
                        if s_out == 0 and (depth > 1 or l > 0) and side >= q:
                            b = self._q_power(st_out)
                            if b >= 0:
                                out.append((1, b, (l,), ((st_out, 0),)))
                    else:
                        sub = self.suffixes(rem, st_out, s_out, depth + 1)
                        for rec in sub:
                            out.append((rec[0], rec[1], (l,) + <tuple> rec[2],
                                        ((st_out, s_out),) + <tuple> rec[3]))
                    l += 1
                    rem -= pm1
                st_out += 1
        self.memo[key] = out
        return out

    cdef object walk(self, long long m, long long st_in, long long s_in, long long depth, bint used_p):
        cdef tuple key = (m, st_in, s_in, depth, used_p)
        if key in self.dead or depth > self.max_depth:
            return None
        cdef long long P = self.P, q = self.q, pm1 = self.pm1
        cdef long long comp, cnt0, extra, l, side, s_out, diff, head, low, N
        cdef long long base, st_out, first, cnt, lmax, rem, b
        cdef bint now_p
        cdef object sub
        if depth > 1 and st_in == 0:
            comp = P - s_in
            cnt0 = self.dsum[comp]
            extra = m - cnt0
            if extra >= 0 and extra % pm1 == 0:
                l = extra / pm1
                if l * pm1 <= comp - cnt0:
                    return (0, 0, (l,), ())
        side = m + st_in + (1 if s_in else 0)
        for s_out in range(P):
            diff = q * s_out - s_in
            head = _floordiv(diff, P)
            low = diff - head * P
            N = self.dsum[low]
            base = head - st_in
            st_out = 0 if base >= 0 else (-base + q - 1) / q
            if st_out == 0 and s_out == 0:
                st_out = 1
            while True:
                first = q * st_out + base
                cnt = first + N
                if cnt > m:
                    break
                lmax = (first * P + low - cnt) / pm1
                l = 0
                rem = m - cnt
                while rem >= 0 and l <= lmax:
                    now_p = used_p or l > 0 or low != 0
                    if rem == 0:
                        if now_p and s_out == 0 and (depth > 1 or l > 0) and side >= q:
                            b = self._q_power(st_out)
                            if b >= 0:
                                return (1, b, (l,), ((st_out, 0),))
                    else:
                        sub = self.walk(rem, st_out, s_out, depth + 1, now_p)
                        if sub is not None:
                            return (sub[0], sub[1], (l,) + <tuple> sub[2],
                                    ((st_out, s_out),) + <tuple> sub[3])
                    l += 1
                    rem -= pm1
                st_out += 1
        self.dead.add(key)
        return None


def search_reduced(long long p, long long q, int alpha, long long n, long long max_depth):
    return _Search(p, q, alpha, max_depth).suffixes(n, 0, 0, 1)


def find_record(long long p, long long q, int alpha, long long n, long long max_depth):
    return _Search(p, q, alpha, max_depth).walk(n, 0, 0, 1, False)
