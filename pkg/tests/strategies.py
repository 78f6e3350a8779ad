"""
Hypothesis strategies for the value types.
"""

import fractions

from hypothesis import strategies as st

from schreier.spaces.families import FinSet
from schreier.spaces.ordinals import Ordinal
from schreier.spaces.vectors import SignSeq, Vector

small_ordinals = st.builds(
    Ordinal, q=st.integers(min_value=0, max_value=2), r=st.integers(min_value=0, max_value=4)
)

ordinals = st.builds(
    Ordinal, q=st.integers(min_value=0, max_value=50), r=st.integers(min_value=0, max_value=50)
)


def finsets(max_index=12, max_size=None):
    return st.sets(
        st.integers(min_value=1, max_value=max_index), max_size=max_size
    ).map(FinSet.of)


rationals = st.builds(
    fractions.Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=20),
)


def vectors(max_index=10, max_size=6):
    return st.dictionaries(
        st.integers(min_value=1, max_value=max_index), rationals, max_size=max_size
    ).map(Vector)


def signs(length):
    return st.lists(st.sampled_from([1, -1]), min_size=length, max_size=length).map(SignSeq)
