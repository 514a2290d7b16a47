"""Validation of rigidified morphisms (p-morphisms) between root data.

A rigidified morphism between root data is a lattice map
``h : X(T') -> X(T)`` together with a root bijection ``d : R -> R'`` and a
multiplier function ``q : R -> Z_{>0}`` satisfying

    h(d(alpha)) = q(alpha) * alpha        h^t(alpha^vee) = q(alpha) * d(alpha)^vee.

Over a base ring, ``x -> x^q`` is an additive endomorphism only for
``q = 1`` or ``q = p^k`` with ``p = 0`` in the ring, so the multiplier is
admissible exactly in those cases.  The Frobenius of a split reductive
group is the special case ``h = p * id``, ``d = id``, ``q == p``; its
rigidification is discrete and hence pinned by the special fibre, which
forces ``q == p`` and rules out deformations over any base where p is
nonzero.  Both checks are implemented here, along with the coprimality
test for a central isogeny to be etale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, Optional

from .errors import DimensionMismatchError, NotPrimeError
from .cohomology import is_prime
from .lattice import Root, RootDatum


@dataclass(frozen=True, slots=True)
class RingChar:
    """Characteristic tag of the coefficient ring.

    ``prime_power`` (exponent >= 2) models Artinian rings where p is
    nonzero but nilpotent, e.g. Witt vectors of length two; ``zero``
    models characteristic-zero bases.
    """

    kind: str  # "zero" | "prime" | "prime_power"
    p: Optional[int] = None
    n: Optional[int] = None

    @classmethod
    def zero(cls) -> "RingChar":
        return cls("zero")

    @classmethod
    def prime(cls, p: int) -> "RingChar":
        if not is_prime(p):
            raise NotPrimeError(f"ring characteristic {p} is not prime")
        return cls("prime", p=p)

    @classmethod
    def prime_power(cls, p: int, n: int) -> "RingChar":
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if n < 2:
            raise ValueError(f"prime_power needs exponent >= 2, got {n}")
        return cls("prime_power", p=p, n=n)

    def describe(self) -> str:
        if self.kind == "zero":
            return "characteristic 0"
        if self.kind == "prime":
            return f"characteristic {self.p}"
        return f"characteristic {self.p}^{self.n} (p nonzero, nilpotent)"

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.p, "n": self.n}


def _prime_power_base(q: int) -> Optional[tuple[int, int]]:
    """(p, k) with q = p^k, k >= 1, or None if q is not a prime power."""
    if q < 2:
        return None
    f = 2
    while f * f <= q:
        if q % f == 0:
            k = 0
            while q % f == 0:
                q //= f
                k += 1
            return (f, k) if q == 1 else None
        f += 1
    return (q, 1)


def q_admissible(q: int, ring_char: RingChar) -> bool:
    """Whether x -> x^q is an additive endomorphism over the given ring.

    True for q = 1 always, and for q = p^k exactly when the ring has
    characteristic p (p = 0 in the ring).  Everything else is rejected.
    """
    if q == 1:
        return True
    pk = _prime_power_base(q)
    if pk is None:
        return False
    return ring_char.kind == "prime" and ring_char.p == pk[0]


@dataclass(frozen=True, slots=True)
class MorphismFailure:
    relation: str
    root: Root
    detail: str

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "root": self.root.vector.to_json(),
            "detail": self.detail,
        }


@dataclass(frozen=True, slots=True)
class MorphismVerdict:
    valid: bool
    failures: tuple[MorphismFailure, ...] = ()

    def __post_init__(self):
        assert self.valid == (not self.failures)

    def to_json(self) -> dict:
        return {"valid": self.valid, "failures": [f.to_json() for f in self.failures]}


@dataclass(frozen=True)
class PMorphismData:
    """Candidate rigidified-isogeny data between two root data.

    ``h`` maps target characters to source characters (rows indexed by
    source coordinates, columns by target coordinates).  ``d_map`` sends
    each source root to a target root; ``q`` assigns each source root its
    positive multiplier.
    """

    source: RootDatum
    target: RootDatum
    h: tuple[tuple[int, ...], ...]
    d_map: Mapping[Root, Root]
    q: Mapping[Root, int]
    ring_char: RingChar = field(default_factory=RingChar.zero)


def _mat_vec(mat: tuple[tuple[int, ...], ...], vec: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def _transpose(mat: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*mat))


def validate_p_morphism(data: PMorphismData) -> MorphismVerdict:
    """Check the two lattice relations and q-admissibility, per source root."""
    src, tgt = data.source, data.target
    if len(data.h) != src.rank or any(len(row) != tgt.rank for row in data.h):
        raise DimensionMismatchError(
            f"h must be a {src.rank} x {tgt.rank} integer matrix "
            f"(source rank x target rank), got {len(data.h)} rows"
        )
    h_t = _transpose(data.h)
    failures: list[MorphismFailure] = []
    for alpha in src.roots:
        image = data.d_map[alpha]
        q = data.q[alpha]
        if q < 1:
            failures.append(
                MorphismFailure("q_positive", alpha, f"q = {q} must be a positive integer")
            )
            continue
        lhs = _mat_vec(data.h, image.vector.coords)
        rhs = tuple(q * c for c in alpha.vector.coords)
        if lhs != rhs:
            failures.append(
                MorphismFailure(
                    "h(d(alpha)) = q(alpha) * alpha",
                    alpha,
                    f"h({image.vector.coords}) = {lhs} != {rhs}",
                )
            )
        lhs_co = _mat_vec(h_t, alpha.coroot)
        rhs_co = tuple(q * c for c in image.coroot)
        if lhs_co != rhs_co:
            failures.append(
                MorphismFailure(
                    "h^t(alpha^vee) = q(alpha) * d(alpha)^vee",
                    alpha,
                    f"h^t({alpha.coroot}) = {lhs_co} != {rhs_co}",
                )
            )
        if not q_admissible(q, data.ring_char):
            failures.append(
                MorphismFailure(
                    "q_admissible",
                    alpha,
                    f"x -> x^{q} is not an additive endomorphism over a ring of "
                    f"{data.ring_char.describe()}",
                )
            )
    return MorphismVerdict(valid=not failures, failures=tuple(failures))


def identity_p_morphism(datum: RootDatum, ring_char: RingChar) -> PMorphismData:
    ident = tuple(
        tuple(1 if i == j else 0 for j in range(datum.rank)) for i in range(datum.rank)
    )
    return PMorphismData(
        source=datum,
        target=datum,
        h=ident,
        d_map={a: a for a in datum.roots},
        q={a: 1 for a in datum.roots},
        ring_char=ring_char,
    )


def frobenius_p_morphism(datum: RootDatum, p: int, ring_char: RingChar) -> PMorphismData:
    """The Frobenius data of a split datum: h = p * id, d = id, q == p."""
    if not is_prime(p):
        raise NotPrimeError(f"Frobenius multiplier {p} is not prime")
    h = tuple(tuple(p if i == j else 0 for j in range(datum.rank)) for i in range(datum.rank))
    return PMorphismData(
        source=datum,
        target=datum,
        h=h,
        d_map={a: a for a in datum.roots},
        q={a: p for a in datum.roots},
        ring_char=ring_char,
    )


def compose_p_morphisms(outer: PMorphismData, inner: PMorphismData) -> PMorphismData:
    """Data of the composite morphism (inner first, then outer).

    The composite lattice map is ``h_inner o h_outer`` and the multipliers
    multiply along the root bijections.
    """
    if inner.target is not outer.source:
        raise DimensionMismatchError("inner.target must be outer.source to compose")
    h = tuple(
        tuple(
            sum(inner.h[i][k] * outer.h[k][j] for k in range(outer.source.rank))
            for j in range(outer.target.rank)
        )
        for i in range(inner.source.rank)
    )
    d_map = {a: outer.d_map[inner.d_map[a]] for a in inner.source.roots}
    q = {a: inner.q[a] * outer.q[inner.d_map[a]] for a in inner.source.roots}
    return PMorphismData(
        source=inner.source,
        target=outer.target,
        h=h,
        d_map=d_map,
        q=q,
        ring_char=inner.ring_char,
    )


# ---------------------------------------------------------------------------
# Frobenius rigidity


@dataclass(frozen=True, slots=True)
class RigidityVerdict:
    """Whether a Frobenius lifting can exist over the given base."""

    lift_possible: bool
    reason: Optional[str] = None
    note: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "verdict": "lift_possible" if self.lift_possible else "no_lift",
            "reason": self.reason,
            "note": self.note,
        }


def frobenius_rigidity_verdict(
    datum: RootDatum, ring_char: RingChar, p: Optional[int] = None
) -> RigidityVerdict:
    """Decide liftability of the Frobenius homomorphism over a base ring.

    The rigidification of any Frobenius lifting is discrete, hence pinned
    to ``h = p * id, d = id, q == p`` by the special fibre; the verdict is
    the admissibility of that data.  A toral datum (no roots) carries no
    multiplier constraint: the multiplication-by-p endomorphism lifts
    Frobenius over every base.
    """
    if ring_char.p is not None:
        if p is not None and p != ring_char.p:
            raise ValueError(f"residue prime {p} conflicts with ring {ring_char.describe()}")
        p = ring_char.p
    if not datum.roots:
        return RigidityVerdict(
            lift_possible=True,
            note="toral datum: Frobenius deforms by the multiplication-by-p map",
        )
    if p is None:
        raise ValueError("residue prime p required for a characteristic-zero base")
    verdict = validate_p_morphism(frobenius_p_morphism(datum, p, ring_char))
    if verdict.valid:
        return RigidityVerdict(lift_possible=True)
    return RigidityVerdict(
        lift_possible=False,
        reason=(
            f"forced Frobenius data (h = {p}*id, d = id, q == {p}) is inadmissible over "
            f"a base of {ring_char.describe()}: x -> x^{p} is additive only where {p} = 0"
        ),
    )


def central_isogeny_etale(kernel_order: int, p: int) -> bool:
    """Whether a central isogeny with the given kernel order is etale at p."""
    if kernel_order < 1:
        raise ValueError(f"kernel order must be >= 1, got {kernel_order}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return gcd(kernel_order, p) == 1
