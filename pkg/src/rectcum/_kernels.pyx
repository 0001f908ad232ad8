# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.  Must stay output-identical to _kernels_py."""

from libc.stdlib cimport malloc, free


cdef void _rgs_rec(int i, int n, int maxb, int* rgs, list out):
    cdef int b, j
    if i == n:
        out.append(tuple([rgs[j] for j in range(n)]))
        return
    for b in range(maxb + 2):
        rgs[i] = b
        _rgs_rec(i + 1, n, maxb if b <= maxb else b, rgs, out)


def set_partition_rgs(int n):
    """All restricted-growth strings of length n, lexicographic."""
    cdef list out = []
    cdef int* rgs
    if n <= 0:
        return out
    rgs = <int*>malloc(n * sizeof(int))
    try:
        rgs[0] = 0
        _rgs_rec(1, n, 0, rgs, out)
    finally:
        free(rgs)
    return out


cdef void _even_rec(int i, int n, int nblocks, int nodd, int* rgs, int* sizes, list out):
    cdef int b, j, delta
    if i == n:
        if nodd == 0:
            out.append(tuple([rgs[j] for j in range(n)]))
        return
    for b in range(nblocks + 1):
        if b == nblocks:
            delta = 1
        elif sizes[b] & 1:
            delta = -1
        else:
            delta = 1
        # every odd block needs at least one more element
        if nodd + delta > n - i - 1:
            continue
        rgs[i] = b
        if b == nblocks:
            sizes[b] = 1
            _even_rec(i + 1, n, nblocks + 1, nodd + 1, rgs, sizes, out)
            sizes[b] = 0
        else:
            sizes[b] += 1
            _even_rec(i + 1, n, nblocks, nodd + delta, rgs, sizes, out)
            sizes[b] -= 1


def even_partition_rgs(int n):
    """Restricted-growth strings of the partitions of [n] with even blocks."""
    cdef list out = []
    cdef int* rgs
    cdef int* sizes
    cdef int j
    if n <= 0 or n & 1:
        return out
    rgs = <int*>malloc(n * sizeof(int))
    sizes = <int*>malloc(n * sizeof(int))
    try:
        for j in range(n):
            sizes[j] = 0
        rgs[0] = 0
        sizes[0] = 1
        _even_rec(1, n, 1, 1, rgs, sizes, out)
    finally:
        free(rgs)
        free(sizes)
    return out


cdef void _luk_rec(int i, int n, int h, int* rises, list out):
    cdef int r, j
    if i == n:
        if h == 0:
            out.append(tuple([rises[j] for j in range(n)]))
        return
    r = -1
    while h + r <= n - i - 1:
        if h + r >= 0:
            rises[i] = r
            _luk_rec(i + 1, n, h + r, rises, out)
        r += 2


def odd_luk_rises(int n):
    """Rise vectors of odd Lukasiewicz paths of length n, lexicographic."""
    cdef list out = []
    cdef int* rises
    if n <= 0:
        return out
    rises = <int*>malloc(n * sizeof(int))
    try:
        _luk_rec(0, n, 0, rises, out)
    finally:
        free(rises)
    return out


def rgs_is_noncrossing(rgs):
    """Stack test: a repeated block must be the innermost open block."""
    cdef int n = len(rgs)
    cdef int i, b, top = 0
    cdef bint ok = True
    cdef int* arr = <int*>malloc((4 * n + 1) * sizeof(int))
    cdef int* first = arr + n
    cdef int* last = arr + 2 * n
    cdef int* stack = arr + 3 * n
    try:
        for i in range(n):
            arr[i] = rgs[i]
            first[i] = -1
        for i in range(n):
            b = arr[i]
            if first[b] < 0:
                first[b] = i
            last[b] = i
        for i in range(n):
            b = arr[i]
            if first[b] == i:
                if last[b] != i:
                    stack[top] = b
                    top += 1
            elif top == 0 or stack[top - 1] != b:
                ok = False
                break
            elif last[b] == i:
                top -= 1
    finally:
        free(arr)
    return ok


def luk_to_rgs(rises):
    """Inverse of the partition -> path bijection (stack of open blocks)."""
    cdef int n = len(rises)
    cdef int i, r, top = 0, nxt = 0
    cdef list out = [0] * n
    cdef int* lab = <int*>malloc((2 * n + 1) * sizeof(int))
    cdef int* need = lab + n
    try:
        for i in range(n):
            r = rises[i]
            if r >= 0:
                out[i] = nxt
                if r > 0:
                    lab[top] = nxt
                    need[top] = r
                    top += 1
                nxt += 1
            else:
                if top == 0:
                    raise ValueError("rise vector is not a valid Lukasiewicz path")
                out[i] = lab[top - 1]
                need[top - 1] -= 1
                if need[top - 1] == 0:
                    top -= 1
        if top != 0:
            raise ValueError("rise vector is not a valid Lukasiewicz path")
    finally:
        free(lab)
    return tuple(out)
