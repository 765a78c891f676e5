# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction and charpoly kernels over F_p (p < 2**31).

Mirrors ``pure.py`` exactly; the test suite cross-checks the two backends on
random inputs.  Arithmetic stays in int64: entries are reduced residues, so
products fit comfortably below 2**62.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memmove, memset

ctypedef long long i64

BACKEND_NAME = "compiled"


cdef i64 _inv_mod(i64 a, i64 p):
    cdef i64 result = 1
    cdef i64 base = a % p
    cdef i64 e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef class FpEchelon:
    """Incremental RREF accumulator over F_p, rows sorted by pivot column."""

    cdef i64 p
    cdef Py_ssize_t width, nrows, cap
    cdef i64 *data          # cap x width row-major
    cdef Py_ssize_t *pivs

    def __cinit__(self, Py_ssize_t width, i64 p):
        self.p = p
        self.width = width
        self.nrows = 0
        self.cap = 8
        self.data = <i64 *>malloc(self.cap * width * sizeof(i64))
        self.pivs = <Py_ssize_t *>malloc(self.cap * sizeof(Py_ssize_t))
        if self.data == NULL or self.pivs == NULL:
            raise MemoryError()

    def __dealloc__(self):
        if self.data != NULL:
            free(self.data)
        if self.pivs != NULL:
            free(self.pivs)

    cdef void _grow(self):
        cdef Py_ssize_t newcap = self.cap * 2
        cdef i64 *nd = <i64 *>realloc(self.data, newcap * self.width * sizeof(i64))
        cdef Py_ssize_t *np_ = <Py_ssize_t *>realloc(self.pivs, newcap * sizeof(Py_ssize_t))
        if nd == NULL or np_ == NULL:
            raise MemoryError()
        self.data = nd
        self.pivs = np_
        self.cap = newcap

    @property
    def rank(self):
        return self.nrows

    def pivots(self):
        return [self.pivs[i] for i in range(self.nrows)]

    def rows(self):
        cdef Py_ssize_t r, j
        out = []
        for r in range(self.nrows):
            out.append([self.data[r * self.width + j] for j in range(self.width)])
        return out

    cdef void _reduce_buf(self, i64 *buf):
        cdef Py_ssize_t r, j, piv
        cdef i64 c, p = self.p
        cdef i64 *row
        for r in range(self.nrows):
            piv = self.pivs[r]
            c = buf[piv]
            if c:
                row = self.data + r * self.width
                for j in range(piv, self.width):
                    if row[j]:
                        buf[j] = (buf[j] - c * row[j]) % p
                        if buf[j] < 0:
                            buf[j] += p
        for j in range(self.width):
            buf[j] %= p
            if buf[j] < 0:
                buf[j] += p

    cdef i64 *_load(self, object vec) except NULL:
        cdef Py_ssize_t n = len(vec)
        if n != self.width:
            raise ValueError("row length mismatch")
        cdef i64 *buf = <i64 *>malloc(self.width * sizeof(i64))
        if buf == NULL:
            raise MemoryError()
        cdef Py_ssize_t j
        cdef i64 v, p = self.p
        for j in range(n):
            v = vec[j]
            v %= p
            if v < 0:
                v += p
            buf[j] = v
        return buf

    def reduce(self, vec):
        cdef i64 *buf = self._load(vec)
        try:
            self._reduce_buf(buf)
            return [buf[j] for j in range(self.width)]
        finally:
            free(buf)

    def insert(self, vec):
        cdef i64 *buf = self._load(vec)
        cdef Py_ssize_t j, piv = -1, pos, r
        cdef i64 c, inv, p = self.p
        cdef i64 *row
        try:
            self._reduce_buf(buf)
            for j in range(self.width):
                if buf[j]:
                    piv = j
                    break
            if piv < 0:
                return False
            inv = _inv_mod(buf[piv], p)
            if inv != 1:
                for j in range(piv, self.width):
                    if buf[j]:
                        buf[j] = buf[j] * inv % p
            for r in range(self.nrows):
                row = self.data + r * self.width
                c = row[piv]
                if c:
                    for j in range(piv, self.width):
                        if buf[j]:
                            row[j] = (row[j] - c * buf[j]) % p
                            if row[j] < 0:
                                row[j] += p
            if self.nrows == self.cap:
                self._grow()
            pos = 0
            while pos < self.nrows and self.pivs[pos] < piv:
                pos += 1
            if pos < self.nrows:
                memmove(self.data + (pos + 1) * self.width,
                        self.data + pos * self.width,
                        (self.nrows - pos) * self.width * sizeof(i64))
                memmove(self.pivs + pos + 1, self.pivs + pos,
                        (self.nrows - pos) * sizeof(Py_ssize_t))
            memmove(self.data + pos * self.width, buf, self.width * sizeof(i64))
            self.pivs[pos] = piv
            self.nrows += 1
            return True
        finally:
            free(buf)


def fp_charpoly(mat, i64 p):
    """Characteristic polynomial coefficients of det(tI - M), ascending."""
    cdef Py_ssize_t n = len(mat)
    cdef Py_ssize_t i, j, k, m, piv
    cdef i64 f, inv, a, beta, coeff
    cdef i64 *h = <i64 *>malloc(n * n * sizeof(i64))
    # polys buffer: (n+1) polynomials, each with n+1 coefficient slots
    cdef i64 *polys = <i64 *>malloc((n + 1) * (n + 1) * sizeof(i64))
    cdef i64 *cur
    cdef i64 *prev
    if h == NULL or polys == NULL:
        if h != NULL:
            free(h)
        if polys != NULL:
            free(polys)
        raise MemoryError()
    try:
        for i in range(n):
            row = mat[i]
            for j in range(n):
                a = row[j]
                a %= p
                if a < 0:
                    a += p
                h[i * n + j] = a
        # similarity reduction to upper Hessenberg
        for j in range(n - 2):
            piv = -1
            for i in range(j + 1, n):
                if h[i * n + j]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != j + 1:
                for k in range(n):
                    h[piv * n + k], h[(j + 1) * n + k] = h[(j + 1) * n + k], h[piv * n + k]
                for i in range(n):
                    h[i * n + piv], h[i * n + j + 1] = h[i * n + j + 1], h[i * n + piv]
            inv = _inv_mod(h[(j + 1) * n + j], p)
            for i in range(j + 2, n):
                f = h[i * n + j] * inv % p
                if f:
                    for k in range(j, n):
                        if h[(j + 1) * n + k]:
                            h[i * n + k] = (h[i * n + k] - f * h[(j + 1) * n + k]) % p
                            if h[i * n + k] < 0:
                                h[i * n + k] += p
                    for k in range(n):
                        if h[k * n + i]:
                            h[k * n + j + 1] = (h[k * n + j + 1] + f * h[k * n + i]) % p
        # leading-minor recurrence
        memset(polys, 0, (n + 1) * (n + 1) * sizeof(i64))
        polys[0] = 1
        for k in range(1, n + 1):
            a = h[(k - 1) * n + (k - 1)]
            prev = polys + (k - 1) * (n + 1)
            cur = polys + k * (n + 1)
            for i in range(k):
                if prev[i]:
                    cur[i + 1] = (cur[i + 1] + prev[i]) % p
                    cur[i] = (cur[i] - a * prev[i]) % p
                    if cur[i] < 0:
                        cur[i] += p
            beta = 1
            for m in range(k - 2, -1, -1):
                beta = beta * h[(m + 1) * n + m] % p
                if beta == 0:
                    break
                coeff = h[m * n + (k - 1)] * beta % p
                if coeff:
                    prev = polys + m * (n + 1)
                    for i in range(m + 1):
                        if prev[i]:
                            cur[i] = (cur[i] - coeff * prev[i]) % p
                            if cur[i] < 0:
                                cur[i] += p
        return [polys[n * (n + 1) + i] for i in range(n + 1)]
    finally:
        free(h)
        free(polys)
