from collections import Counter

from hypothesis import strategies as st

from partitions import Partition


@st.composite
def partition_strategy(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))

    # drop n boxes into k bins and sort the bin sizes
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(sorted(Counter(bins).values(), reverse=True))


@st.composite
def rectangle_partition_strategy(draw, r, c):
    # λ inside the r x c rectangle
    parts = draw(st.lists(st.integers(min_value=0, max_value=c), min_size=r, max_size=r))
    return Partition(sorted(parts, reverse=True))
