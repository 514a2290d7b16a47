import pytest
from hypothesis import given
from hypothesis import strategies as st

from charpflag import (
    DimensionMismatchError,
    PMorphismData,
    RingChar,
    central_isogeny_etale,
    compose_p_morphisms,
    custom_datum,
    frobenius_p_morphism,
    frobenius_rigidity_verdict,
    identity_p_morphism,
    make_datum,
    make_torus,
    validate_p_morphism,
)
from charpflag.rootmorph import q_admissible

RINGS = (RingChar.zero(), RingChar.prime(5), RingChar.prime_power(5, 2))


def test_frobenius_data_valid_over_prime_field():
    data = frobenius_p_morphism(make_datum("GL", 3), 5, RingChar.prime(5))
    assert validate_p_morphism(data).valid


def test_frobenius_data_fails_admissibility_over_witt_length_two():
    datum = make_datum("GL", 3)
    data = frobenius_p_morphism(datum, 5, RingChar.prime_power(5, 2))
    verdict = validate_p_morphism(data)
    assert not verdict.valid
    # one admissibility failure per root, nothing else
    assert len(verdict.failures) == len(datum.roots)
    assert {f.relation for f in verdict.failures} == {"q_admissible"}


def test_frobenius_data_fails_over_characteristic_zero():
    data = frobenius_p_morphism(make_datum("GL", 3), 5, RingChar.zero())
    assert not validate_p_morphism(data).valid


def test_identity_morphism_is_valid_over_every_ring():
    for ring in RINGS:
        data = identity_p_morphism(make_datum("Sp", 2), ring)
        assert validate_p_morphism(data).valid


def _sl2_datum():
    # Rank-one simply connected datum: root 2*omega, coroot the generator.
    return custom_datum(1, [((2,), (1,))], [(2,)], weyl_vector_coords=(1,), name="SL(2)-rk1")


def _pgl2_datum():
    # Adjoint datum: root generates the lattice, coroot is doubled; no
    # integral vector pairs to 1 with the simple coroot.
    return custom_datum(1, [((1,), (2,))], [(1,)], name="PGL(2)-rk1")


def test_sl2_to_pgl2_quotient_data():
    sl2, pgl2 = _sl2_datum(), _pgl2_datum()
    for ring in RINGS:
        data = PMorphismData(
            source=sl2,
            target=pgl2,
            h=((2,),),
            d_map=dict(zip(sl2.roots, pgl2.roots)),
            q={a: 1 for a in sl2.roots},
            ring_char=ring,
        )
        assert validate_p_morphism(data).valid


def test_sl2_to_pgl2_with_wrong_lattice_map_fails():
    sl2, pgl2 = _sl2_datum(), _pgl2_datum()
    data = PMorphismData(
        source=sl2,
        target=pgl2,
        h=((3,),),
        d_map=dict(zip(sl2.roots, pgl2.roots)),
        q={a: 1 for a in sl2.roots},
        ring_char=RingChar.prime(5),
    )
    verdict = validate_p_morphism(data)
    assert not verdict.valid
    assert {f.relation for f in verdict.failures} == {
        "h(d(alpha)) = q(alpha) * alpha",
        "h^t(alpha^vee) = q(alpha) * d(alpha)^vee",
    }


def test_dimension_mismatch_raises():
    gl2, gl3 = make_datum("GL", 2), make_datum("GL", 3)
    data = PMorphismData(
        source=gl2,
        target=gl3,
        h=((1, 0), (0, 1)),
        d_map=dict(zip(gl2.roots, gl3.roots)),
        q={a: 1 for a in gl2.roots},
        ring_char=RingChar.zero(),
    )
    with pytest.raises(DimensionMismatchError):
        validate_p_morphism(data)


def test_frobenius_composed_with_frobenius_has_q_p_squared():
    datum = make_datum("GL", 3)
    frob = frobenius_p_morphism(datum, 5, RingChar.prime(5))
    squared = compose_p_morphisms(frob, frob)
    assert all(q == 25 for q in squared.q.values())
    assert squared.h[0][0] == 25
    assert validate_p_morphism(squared).valid  # q = p^2 admissible where p = 0


def test_identity_composed_with_frobenius():
    datum = make_datum("SL", 3)
    frob = frobenius_p_morphism(datum, 7, RingChar.prime(7))
    ident = identity_p_morphism(datum, RingChar.prime(7))
    assert validate_p_morphism(compose_p_morphisms(ident, frob)).valid
    assert validate_p_morphism(compose_p_morphisms(frob, ident)).valid


@given(st.sampled_from(RINGS))
def test_q_one_is_ring_independent(ring):
    datum = make_datum("SO_even", 3)
    assert validate_p_morphism(identity_p_morphism(datum, ring)).valid


def test_q_admissibility_rule():
    assert q_admissible(1, RingChar.zero())
    assert q_admissible(1, RingChar.prime_power(5, 2))
    assert q_admissible(5, RingChar.prime(5))
    assert q_admissible(125, RingChar.prime(5))
    assert not q_admissible(5, RingChar.prime(7))
    assert not q_admissible(5, RingChar.prime_power(5, 2))
    assert not q_admissible(5, RingChar.zero())
    assert not q_admissible(6, RingChar.prime(2))  # not a prime power
    assert not q_admissible(12, RingChar.prime(3))


# ---------------------------------------------------------------------------
# Rigidity verdicts


@pytest.mark.parametrize(
    "family,n",
    [("GL", 4), ("GL", 2), ("SL", 3), ("Sp", 2), ("SO_odd", 3), ("SO_even", 4)],
)
def test_rigidity_no_lift_where_p_nonzero(family, n):
    datum = make_datum(family, n)
    assert frobenius_rigidity_verdict(datum, RingChar.prime(5)).lift_possible
    assert not frobenius_rigidity_verdict(datum, RingChar.prime_power(5, 2)).lift_possible
    assert not frobenius_rigidity_verdict(datum, RingChar.zero(), p=5).lift_possible


def test_rigidity_monotone_zero_vs_prime_power():
    for family, n in [("GL", 3), ("Sp", 2), ("SO_odd", 2)]:
        datum = make_datum(family, n)
        for p in (5, 7, 11):
            p2 = frobenius_rigidity_verdict(datum, RingChar.prime_power(p, 2))
            zero = frobenius_rigidity_verdict(datum, RingChar.zero(), p=p)
            assert not p2.lift_possible
            assert not zero.lift_possible


def test_rigidity_toral_data_lift():
    for ring in RINGS:
        verdict = frobenius_rigidity_verdict(make_torus(4), ring, p=5)
        assert verdict.lift_possible
        assert "toral" in verdict.note
    # GL(1) is a torus too
    assert frobenius_rigidity_verdict(make_datum("GL", 1), RingChar.zero(), p=5).lift_possible


def test_rigidity_zero_ring_needs_a_residue_prime():
    with pytest.raises(ValueError):
        frobenius_rigidity_verdict(make_datum("GL", 3), RingChar.zero())
    with pytest.raises(ValueError):
        frobenius_rigidity_verdict(make_datum("GL", 3), RingChar.prime(5), p=7)


# ---------------------------------------------------------------------------
# Etale kernels


def test_central_isogeny_etale_examples():
    assert central_isogeny_etale(2, 7)
    assert not central_isogeny_etale(5, 5)
    assert central_isogeny_etale(1, 5)
    assert central_isogeny_etale(6, 5)
    assert not central_isogeny_etale(10, 5)
    with pytest.raises(ValueError):
        central_isogeny_etale(0, 5)
