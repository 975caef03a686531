"""Hypothesis strategies for exact scalars and lattice elements."""

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from src.riesz.lattice import TAIL_SEQ, Carrier, Vec

MAX_DIMENSION = 4
MAX_PREFIX = 8

acceptance = settings(
    max_examples=10_000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


def rationals() -> st.SearchStrategy[Fraction]:
    """Rationals with denominators up to 64."""
    return st.fractions(min_value=-16, max_value=16, max_denominator=64)


def non_negative_rationals() -> st.SearchStrategy[Fraction]:
    return st.fractions(min_value=0, max_value=16, max_denominator=64)


def fin_dim_vectors(dimension: int = 3) -> st.SearchStrategy[Vec]:
    """Elements of Q^dimension."""
    return st.lists(rationals(), min_size=dimension, max_size=dimension).map(
        lambda coords: Vec(Carrier.fin_dim(dimension), coords),
    )


def tail_seq_vectors() -> st.SearchStrategy[Vec]:
    """Eventually constant sequences with prefixes of up to eight entries."""
    return st.builds(
        lambda prefix, tail: Vec(TAIL_SEQ, prefix, tail),
        st.lists(rationals(), max_size=MAX_PREFIX),
        rationals(),
    )


def carriers() -> st.SearchStrategy[Carrier]:
    """FinDim(1) to FinDim(4), and TailSeq."""
    return st.one_of(
        st.integers(min_value=1, max_value=MAX_DIMENSION).map(Carrier.fin_dim),
        st.just(TAIL_SEQ),
    )


def carrier_vectors(carrier: Carrier) -> st.SearchStrategy[Vec]:
    if carrier.is_tail_seq:
        return tail_seq_vectors()
    return fin_dim_vectors(carrier.dimension or 1)


def vectors() -> st.SearchStrategy[Vec]:
    """Elements of any supported carrier."""
    return carriers().flatmap(carrier_vectors)


def vector_triples() -> st.SearchStrategy[tuple[Vec, Vec, Vec]]:
    """Three elements of one carrier."""
    return carriers().flatmap(
        lambda carrier: st.tuples(
            carrier_vectors(carrier),
            carrier_vectors(carrier),
            carrier_vectors(carrier),
        ),
    )
