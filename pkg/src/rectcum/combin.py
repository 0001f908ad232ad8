"""Set partitions, even and noncrossing classes, odd Lukasiewicz paths.

Partitions are stored as restricted-growth strings (RGS) and elements are
numbered from 1 in every user-facing view.  All enumerations are returned
as fully materialized lists in a fixed order.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import kernels
from .errors import GuardError

MAX_PARTITION_SIZE = 14
MAX_PATH_HALF_LENGTH = 7


@dataclass(frozen=True, order=True)
class SetPartition:
    rgs: tuple

    def __post_init__(self):
        rgs = tuple(int(b) for b in self.rgs)
        top = -1
        for b in rgs:
            if b < 0 or b > top + 1:
                raise ValueError(f"not a restricted-growth string: {rgs}")
            top = max(top, b)
        if rgs and rgs[0] != 0:
            raise ValueError(f"not a restricted-growth string: {rgs}")
        object.__setattr__(self, "rgs", rgs)

    @classmethod
    def from_blocks(cls, blocks):
        """Build from 1-based blocks such as ``[[1, 4], [2, 3]]``."""
        blocks = [sorted(b) for b in blocks if b]
        n = sum(len(b) for b in blocks)
        if sorted(x for b in blocks for x in b) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition [1..{n}]: {blocks}")
        blocks.sort(key=lambda b: b[0])
        rgs = [0] * n
        for label, b in enumerate(blocks):
            for x in b:
                rgs[x - 1] = label
        return cls(tuple(rgs))

    @property
    def n(self):
        return len(self.rgs)

    @property
    def blocks(self):
        out = {}
        for i, b in enumerate(self.rgs, start=1):
            out.setdefault(b, []).append(i)
        return [out[b] for b in sorted(out)]

    @property
    def num_blocks(self):
        return max(self.rgs) + 1 if self.rgs else 0

    @property
    def block_sizes(self):
        return [len(b) for b in self.blocks]

    def block_type(self):
        """Multiset of block sizes as a sorted tuple (largest first)."""
        return tuple(sorted(self.block_sizes, reverse=True))

    def __str__(self):
        return "{" + "|".join("".join(map(str, b)) if self.n < 10 else ",".join(map(str, b))
                              for b in self.blocks) + "}"


@dataclass(frozen=True, order=True)
class LukPath:
    rises: tuple
    heights: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rises = tuple(int(r) for r in self.rises)
        h, heights = 0, [0]
        for r in rises:
            if r < -1:
                raise ValueError(f"rise {r} below -1 in {rises}")
            h += r
            if h < 0:
                raise ValueError(f"path {rises} goes below the axis")
            heights.append(h)
        if h != 0:
            raise ValueError(f"path {rises} does not return to height 0")
        object.__setattr__(self, "rises", rises)
        object.__setattr__(self, "heights", tuple(heights))

    @property
    def length(self):
        return len(self.rises)

    @property
    def vertices(self):
        return [(i, h) for i, h in enumerate(self.heights)]

    def is_odd(self):
        return all(r % 2 for r in self.rises)


@dataclass(frozen=True)
class PathStats:
    down_from_height: dict
    up_count_by_rise: dict
    up_steps: int
    down_steps: int
    height_sum: int


def _check_n(n, lo=1, hi=MAX_PARTITION_SIZE):
    if not isinstance(n, int) or n < lo or n > hi:
        raise GuardError(f"size {n} outside the supported range [{lo}, {hi}]")


def enumerate_partitions(n):
    """All set partitions of [n] in lexicographic RGS order."""
    _check_n(n)
    return [SetPartition(r) for r in kernels.set_partition_rgs(n)]


def is_even(p: SetPartition):
    return all(len(b) % 2 == 0 for b in p.blocks)


def is_noncrossing(p: SetPartition):
    return kernels.rgs_is_noncrossing(p.rgs)


def _check_even(n):
    if n % 2:
        raise ValueError(f"even partitions need an even ground set, got {n}")
    _check_n(n, 2)


def enumerate_even_partitions(n):
    """Partitions of [n] with all blocks even, lexicographic RGS order.

    Generated directly with parity pruning; equal to filtering
    :func:`enumerate_partitions` by :func:`is_even`.
    """
    _check_even(n)
    return [SetPartition(r) for r in kernels.even_partition_rgs(n)]


def enumerate_nc_even(n):
    """Noncrossing even partitions of [n], lexicographic RGS order.

    Produced from odd paths through the bijection, then sorted.
    """
    _check_even(n)
    if n // 2 > MAX_PATH_HALF_LENGTH:
        raise GuardError(f"noncrossing enumeration supports n <= {2 * MAX_PATH_HALF_LENGTH}")
    return [SetPartition(r) for r in _nc_even_rgs(n)]


@lru_cache(maxsize=None)
def _nc_even_rgs(n):
    return tuple(sorted(kernels.luk_to_rgs(r) for r in kernels.odd_luk_rises(n)))


def enumerate_luk_odd(n):
    """Odd Lukasiewicz paths of length n = 2k, lexicographic in the rises."""
    if n % 2 or n < 2 or n // 2 > MAX_PATH_HALF_LENGTH:
        raise GuardError(f"path length must be 2k with 1 <= k <= {MAX_PATH_HALF_LENGTH}, got {n}")
    return [LukPath(r) for r in kernels.odd_luk_rises(n)]


def coarsenings(sigma: SetPartition):
    """All partitions ``pi >= sigma``, finest first, then by RGS."""
    blocks = sigma.blocks
    k = len(blocks)
    out = []
    for outer in kernels.set_partition_rgs(k):
        rgs = [0] * sigma.n
        for label, block in zip(outer, blocks):
            for x in block:
                rgs[x - 1] = label
        out.append(SetPartition(_relabel(rgs)))
    out.sort(key=lambda p: (-p.num_blocks, p.rgs))
    return out


def _relabel(labels):
    seen = {}
    return tuple(seen.setdefault(b, len(seen)) for b in labels)


def nc_to_path(p: SetPartition) -> LukPath:
    if not is_noncrossing(p):
        raise ValueError(f"{p} is not noncrossing")
    sizes = Counter(p.rgs)
    seen = set()
    rises = []
    for b in p.rgs:
        if b in seen:
            rises.append(-1)
        else:
            seen.add(b)
            rises.append(sizes[b] - 1)
    return LukPath(tuple(rises))


def path_to_nc(path: LukPath) -> SetPartition:
    return SetPartition(kernels.luk_to_rgs(path.rises))


def path_stats(path: LukPath) -> PathStats:
    """Step and height statistics; a down step's height is that of its start."""
    down, up = Counter(), Counter()
    for h, r in zip(path.heights, path.rises):
        if r < 0:
            down[h] += 1
        elif r > 0:
            up[r] += 1
    return PathStats(
        down_from_height=dict(sorted(down.items())),
        up_count_by_rise=dict(sorted(up.items())),
        up_steps=sum(up.values()),
        down_steps=sum(down.values()),
        height_sum=sum(path.heights),
    )


def even_stat(p: SetPartition):
    """Number of blocks whose smallest element is even."""
    return sum(1 for b in p.blocks if b[0] % 2 == 0)


def partition_to_json(p: SetPartition):
    return p.blocks


def path_to_json(path: LukPath):
    return list(path.rises)
