# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``.

``poly_add`` and ``poly_mul`` work on dict polynomials with Python int
coefficients.  The state sum (``run_top``) instead carries each weight as a
dense int64 array with an exponent offset; any int64 overflow raises
OverflowError so the caller can redo that labelling with exact integers.
"""
from cpython.array cimport array, clone

cdef extern from *:
    """
    static inline int qt_mul_add(long long *acc, long long a, long long b) {
        long long t;
        if (__builtin_mul_overflow(a, b, &t)) return 1;
        return __builtin_add_overflow(*acc, t, acc);
    }
    """
    int qt_mul_add(long long *acc, long long a, long long b) nogil

cdef array _tmpl = array('q', [])


def poly_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef long ea, eb
    cdef object ca, cb
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


cdef array _dense(dict r, long lo, long hi):
    cdef array arr = clone(_tmpl, hi - lo + 1, True)
    cdef long long[:] v = arr
    for e, c in r.items():
        v[<long>e - lo] = c  # OverflowError if c does not fit
    return arr


def prepare_table(list table):
    """table[i][j] -> list of (k, l, lo, int64 array)."""
    out = []
    for row in table:
        orow = []
        for cell in row:
            ocell = []
            for k, l, r in cell:
                lo, hi = min(r), max(r)
                ocell.append((k, l, lo, _dense(r, lo, hi)))
            orow.append(ocell)
        out.append(orow)
    return out


cdef int _convolve(long long[:] dst, long shift, long long[:] a, long long[:] b) nogil:
    cdef Py_ssize_t i, j, na = a.shape[0], nb = b.shape[0]
    cdef long long x
    for i in range(na):
        x = a[i]
        if x == 0:
            continue
        for j in range(nb):
            if qt_mul_add(&dst[shift + i + j], x, b[j]):
                return 1
    return 0


cdef tuple _trim(long lo, array arr):
    cdef long long[:] v = arr
    cdef Py_ssize_t n = v.shape[0], first = 0, last = n - 1
    while first < n and v[first] == 0:
        first += 1
    if first == n:
        return None
    while v[last] == 0:
        last -= 1
    if first == 0 and last == n - 1:
        return (lo, arr)
    return (lo + first, array('q', arr[first:last + 1]))


def run_top(tuple top, list steps):
    """Same contract as the pure-Python ``run_top``."""
    cdef dict states = {top: (0, array('q', [1]))}
    cdef dict ranges, new
    cdef list contrib, cell
    cdef tuple labels, key, w, ent, rng
    cdef long wlo, rlo, lo, hi
    cdef int pos, tl, tr, k, l
    cdef array warr, rarr, dst
    for pos, table, fl, fr in steps:
        tl = top[pos] if fl else -1
        tr = top[pos + 1] if fr else -1
        ranges = {}
        contrib = []
        for labels, w in states.items():
            wlo, warr = w
            cell = table[labels[pos]][labels[pos + 1]]
            for ent in cell:
                k, l, rlo, rarr = ent
                if tl >= 0 and k != tl:
                    continue
                if tr >= 0 and l != tr:
                    continue
                key = labels[:pos] + (k, l) + labels[pos + 2:]
                lo = wlo + rlo
                hi = lo + len(warr) + len(rarr) - 2
                rng = ranges.get(key)
                if rng is None:
                    ranges[key] = (lo, hi)
                else:
                    ranges[key] = (min(lo, <long>rng[0]), max(hi, <long>rng[1]))
                contrib.append((key, lo, warr, rarr))
        if not contrib:
            return {}
        new = {}
        for key, rng in ranges.items():
            new[key] = (rng[0], clone(_tmpl, rng[1] - rng[0] + 1, True))
        for key, lo, warr, rarr in contrib:
            ent = new[key]
            dst = ent[1]
            if _convolve(dst, lo - <long>ent[0], warr, rarr):
                raise OverflowError("int64 overflow in state sum")
        states = {}
        for key, ent in new.items():
            w = _trim(ent[0], ent[1])
            if w is not None:
                states[key] = w
        if not states:
            return {}
    w = states.get(top)
    if w is None:
        return {}
    wlo, warr = w
    return {wlo + i: c for i, c in enumerate(warr) if c}
