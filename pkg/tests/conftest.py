"""Shared hypothesis strategies for charpflag tests."""

from hypothesis import strategies as st

from charpflag import make_datum

CLASSICAL_FAMILIES = ("GL", "SL", "Sp", "SO_odd", "SO_even")
FAMILY_MIN_RANK = {"GL": 1, "SL": 2, "Sp": 2, "SO_odd": 2, "SO_even": 2}


@st.composite
def classical_datums(draw, families=CLASSICAL_FAMILIES, min_rank=2, max_rank=8):
    family = draw(st.sampled_from(families))
    n = draw(st.integers(max(min_rank, FAMILY_MIN_RANK[family]), max_rank))
    return make_datum(family, n)


@st.composite
def weights_of(draw, datum, coord_bound=60):
    base = draw(st.tuples(*([st.integers(-coord_bound, coord_bound)] * datum.rank)))
    if datum.family == "SO_odd":
        parity = draw(st.integers(0, 1))
        base = tuple(2 * c + parity for c in base)
    return datum.weight(base)


@st.composite
def datum_weights(draw, coord_bound=60, **datum_kwargs):
    datum = draw(classical_datums(**datum_kwargs))
    return draw(weights_of(datum, coord_bound=coord_bound))


@st.composite
def weight_root_pairs(draw, simple_only=False, **kwargs):
    w = draw(datum_weights(**kwargs))
    pool = w.datum.simple_roots if simple_only else w.datum.roots
    return w, draw(st.sampled_from(pool))
