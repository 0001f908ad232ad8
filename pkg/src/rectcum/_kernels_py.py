"""Pure-Python versions of the enumeration kernels in ``_kernels.pyx``."""
from __future__ import annotations


def set_partition_rgs(n):
    out = []
    if n <= 0:
        return out
    rgs = [0] * n

    def rec(i, maxb):
        if i == n:
            out.append(tuple(rgs))
            return
        for b in range(maxb + 2):
            rgs[i] = b
            rec(i + 1, max(maxb, b))

    rec(1, 0)
    return out


def even_partition_rgs(n):
    out = []
    if n <= 0 or n % 2:
        return out
    rgs = [0] * n
    sizes = [0] * n
    sizes[0] = 1

    def rec(i, nblocks, nodd):
        if i == n:
            if nodd == 0:
                out.append(tuple(rgs))
            return
        for b in range(nblocks + 1):
            delta = -1 if b < nblocks and sizes[b] % 2 else 1
            # every odd block needs at least one more element
            if nodd + delta > n - i - 1:
                continue
            rgs[i] = b
            sizes[b] += 1
            rec(i + 1, nblocks + (b == nblocks), nodd + delta)
            sizes[b] -= 1

    rec(1, 1, 1)
    return out


def odd_luk_rises(n):
    out = []
    if n <= 0:
        return out
    rises = [0] * n

    def rec(i, h):
        if i == n:
            if h == 0:
                out.append(tuple(rises))
            return
        r = -1
        while h + r <= n - i - 1:
            if h + r >= 0:
                rises[i] = r
                rec(i + 1, h + r)
            r += 2

    rec(0, 0)
    return out


def rgs_is_noncrossing(rgs):
    first, last = {}, {}
    for i, b in enumerate(rgs):
        first.setdefault(b, i)
        last[b] = i
    stack = []
    for i, b in enumerate(rgs):
        if first[b] == i:
            if last[b] != i:
                stack.append(b)
        elif not stack or stack[-1] != b:
            return False
        elif last[b] == i:
            stack.pop()
    return True


def luk_to_rgs(rises):
    out = []
    stack = []  # [label, elements still needed]
    nxt = 0
    for r in rises:
        if r >= 0:
            out.append(nxt)
            if r > 0:
                stack.append([nxt, r])
            nxt += 1
        else:
            if not stack:
                raise ValueError("rise vector is not a valid Lukasiewicz path")
            out.append(stack[-1][0])
            stack[-1][1] -= 1
            if stack[-1][1] == 0:
                stack.pop()
    if stack:
        raise ValueError("rise vector is not a valid Lukasiewicz path")
    return tuple(out)
