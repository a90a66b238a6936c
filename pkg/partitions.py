# Date: 10-18-2026
# Author: plucker-degrees developers
# Purpose: Partitions, Young diagram combinatorics, hook lengths, the brute-force tableau oracle and Pieri neighbour sets
# Notes:
#   partitions are stored without trailing zeros; rectangle-relative work pads explicitly with pad()
#   lists of partitions are always returned in graded-lex descending order (see canonical_key)

from collections import Counter
from math import factorial, prod

import config
from report import InvariantViolation


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zeros are stripped on construction so that (2, 1, 0) == Partition((2, 1)).
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for k, p in enumerate(parts):
            if p < 1:
                raise ValueError("partition parts must be positive: {}".format(parts))
            if k + 1 < len(parts) and parts[k + 1] > p:
                raise ValueError("partition parts must be weakly decreasing: {}".format(parts))
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    @property
    def first(self):
        # λ₁, zero for the empty partition
        return self[0] if self else 0

    def part(self, k):
        # 0-indexed access that pads with zeros
        return self[k] if 0 <= k < len(self) else 0

    def __repr__(self):
        return "Partition({})".format(tuple(self))

    def __str__(self):
        return format_partition(self)


def canonical_key(partition):
    return (sum(partition), tuple(-p for p in partition))


def canonical_sort(partitions):
    return sorted((Partition(p) for p in partitions), key=canonical_key)


def parse_partition(text):
    text = text.strip()
    if text in ("", "-", "()", "[]"):
        return Partition()
    text = text.strip("()[]")
    pieces = [piece.strip() for piece in text.split(",")]
    try:
        if not all(pieces):
            raise ValueError("empty part")
        parts = [int(piece) for piece in pieces]
    except ValueError:
        raise ValueError("not a partition: {!r} (expected e.g. 3,2,1 or -)".format(text))
    return Partition(parts)


def format_partition(partition):
    if not partition:
        return "-"
    return ",".join(str(p) for p in partition)


def pad(partition, r):
    if len(partition) > r:
        raise ValueError("partition {} has more than {} parts".format(format_partition(partition), r))
    return tuple(partition) + (0,) * (r - len(partition))


def fits(partition, r, c):
    return len(partition) <= r and (not partition or partition[0] <= c)


def multiplicities(partition):
    return dict(sorted(Counter(partition).items()))


def conjugate(partition):
    partition = Partition(partition)
    if not partition:
        return Partition()
    return Partition(sum(1 for p in partition if p > j) for j in range(partition[0]))


def _descending(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def partitions_of(d):
    if d < 0:
        raise ValueError("weight must be non-negative, got {}".format(d))
    return [Partition(p) for p in _descending(d, d)]


def partitions_in_rectangle(r, c):
    if r < 1 or c < 0:
        raise ValueError("rectangle needs r >= 1 and c >= 0, got r={} c={}".format(r, c))
    found = []

    def grow(prefix, bound):
        found.append(Partition(prefix))
        if len(prefix) == r:
            return
        for p in range(1, bound + 1):
            grow(prefix + (p,), p)

    grow((), c)
    return canonical_sort(found)


def complement(partition, r, c):
    partition = Partition(partition)
    if not fits(partition, r, c):
        raise ValueError("{} does not fit the {}x{} rectangle".format(format_partition(partition), r, c))
    padded = pad(partition, r)
    return Partition(c - padded[r - 1 - i] for i in range(r))


def hook_lengths(partition):
    """Grid of hook lengths, row i holding λᵢ entries (arm + leg + 1)."""
    partition = Partition(partition)
    columns = conjugate(partition)
    return tuple(
        tuple((row - j - 1) + (columns[j] - i - 1) + 1 for j in range(row))
        for i, row in enumerate(partition)
    )


def contents(partition):
    return tuple(tuple(j - i for j in range(row)) for i, row in enumerate(Partition(partition)))


def hook_product(partition):
    return prod(h for row in hook_lengths(partition) for h in row)


def degree_hook(partition):
    partition = Partition(partition)
    quotient, remainder = divmod(factorial(partition.weight), hook_product(partition))
    if remainder:
        raise InvariantViolation("hook product of {} does not divide {}!".format(
            format_partition(partition), partition.weight))
    return quotient


def syt_count_bruteforce(partition, cutoff=None):
    """Count standard Young tableaux by filling 1..|λ| box by box.

    Refuses shapes heavier than the cutoff (PLUCKER_SYT_CUTOFF, default 12).
    """
    partition = Partition(partition)
    if cutoff is None:
        cutoff = config.syt_cutoff()
    config.check_cutoff("syt", cutoff)
    if partition.weight > cutoff:
        raise ValueError("|{}| = {} exceeds the tableau enumeration cutoff {}".format(
            format_partition(partition), partition.weight, cutoff))

    filled = [0] * len(partition)
    remaining = [partition.weight]

    def place():
        if remaining[0] == 0:
            return 1
        count = 0
        for i, row in enumerate(partition):
            j = filled[i]
            # next entry goes at the end of row i if the box above is already filled
            if j < row and (i == 0 or filled[i - 1] > j):
                filled[i] += 1
                remaining[0] -= 1
                count += place()
                remaining[0] += 1
                filled[i] -= 1
        return count

    return place()


def pieri_up(partition, i, cap=None):
    """PF_i(λ): all μ ⊇ λ with |μ| = |λ| + i differing by a horizontal strip.

    cap=(r, c) drops every μ outside the r x c rectangle.
    """
    if i < 0:
        raise ValueError("pieri_up needs i >= 0, got {}".format(i))
    partition = Partition(partition)
    rows = len(partition) + 1
    found = []

    def grow(k, prefix, left):
        if k == rows:
            if left == 0:
                found.append(Partition(prefix))
            return
        low = partition.part(k)
        high = low + left if k == 0 else min(partition.part(k - 1), low + left)
        for value in range(low, high + 1):
            grow(k + 1, prefix + (value,), left - (value - low))

    grow(0, (), i)
    if cap is not None:
        r, c = cap
        found = [mu for mu in found if fits(mu, r, c)]
    return canonical_sort(found)


def pieri_down(partition, i):
    """PF_{-i}(λ): all μ ⊆ λ with |μ| = |λ| - i and λ₁ ≥ μ₁ ≥ λ₂ ≥ μ₂ ≥ ..."""
    if i < 0:
        raise ValueError("pieri_down needs i >= 0, got {}".format(i))
    partition = Partition(partition)
    rows = len(partition)
    found = []

    def shrink(k, prefix, left):
        if k == rows:
            if left == 0:
                found.append(Partition(prefix))
            return
        high = partition[k]
        low = max(partition.part(k + 1), high - left)
        for value in range(high, low - 1, -1):
            shrink(k + 1, prefix + (value,), left - (high - value))

    shrink(0, (), i)
    return canonical_sort(found)
