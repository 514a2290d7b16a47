"""Decision procedures for H^i(G/B, L_lambda) in characteristic p.

Implements Kempf vanishing, the degree-one criterion of Andersen with its
base-p digit analysis (Jantzen, *Representations of Algebraic Groups*,
II.4.5 and II.5.15), a filtration aggregation rule, and a classical
characteristic-zero Borel--Weil--Bott oracle for cross-checks.

Statuses are qualitative: the procedures decide vanishing and, for a
non-vanishing H^1, record only its largest weight.  Multiplicities and
module structure are out of scope.  Whenever the criterion's hypotheses
fail, the answer is an explicit ``undetermined`` status, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .errors import (
    InternalInconsistencyError,
    NotPrimeError,
    UnsupportedDatumError,
)
from .lattice import Root, RootDatum, Weight, dot_reflect, is_dominant, pairing


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")


def _require_type_a(datum: RootDatum) -> None:
    if datum.family not in ("GL", "SL"):
        raise UnsupportedDatumError(
            f"operation implemented for type A data (GL/SL) only, got {datum.name}"
        )


# ---------------------------------------------------------------------------
# Base-p digits


@dataclass(frozen=True, slots=True)
class DigitExpansion:
    """Base-p digits a_0..a_n of a positive integer, least significant first."""

    digits: tuple[int, ...]
    prime: int

    def __post_init__(self):
        assert self.digits and self.digits[-1] != 0
        assert all(0 <= d < self.prime for d in self.digits)

    def value(self) -> int:
        return sum(d * self.prime**j for j, d in enumerate(self.digits))


def base_p_digits(m: int, p: int) -> DigitExpansion:
    """Canonical base-p expansion of m >= 1."""
    _require_prime(p)
    if m <= 0:
        raise ValueError(f"digit expansion requires m >= 1, got {m}")
    digits = []
    while m:
        m, d = divmod(m, p)
        digits.append(d)
    return DigitExpansion(tuple(digits), p)


# ---------------------------------------------------------------------------
# Statuses


@dataclass(frozen=True, slots=True)
class H1Status:
    """Verdict for H^1(G/B, L_mu): zero, nonzero with largest weight, or open."""

    status: str  # "zero" | "nonzero" | "undetermined"
    highest_weight: Optional[Weight] = None
    reason: Optional[str] = None

    @classmethod
    def zero(cls) -> "H1Status":
        return cls("zero")

    @classmethod
    def nonzero(cls, highest_weight: Weight) -> "H1Status":
        assert is_dominant(highest_weight), "largest weight of a nonzero H^1 must be dominant"
        return cls("nonzero", highest_weight=highest_weight)

    @classmethod
    def undetermined(cls, reason: str) -> "H1Status":
        return cls("undetermined", reason=reason)

    @property
    def is_zero(self) -> bool:
        return self.status == "zero"

    @property
    def is_trivial_module(self) -> bool:
        """Nonzero with largest weight zero: a trivial G-module downstream."""
        return self.status == "nonzero" and self.highest_weight.is_zero()

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "highest_weight": None
            if self.highest_weight is None
            else self.highest_weight.to_json(),
            "undetermined_reason": self.reason,
        }


@dataclass(frozen=True, slots=True)
class KempfStatus:
    h0_nonzero: bool
    higher_vanish_if_dominant: bool


def kempf_status(lam: Weight) -> KempfStatus:
    """Kempf vanishing: H^0 != 0 iff dominant; then all higher H^i vanish."""
    dom = is_dominant(lam)
    return KempfStatus(h0_nonzero=dom, higher_vanish_if_dominant=dom)


# ---------------------------------------------------------------------------
# Andersen's H^1 criterion


def andersen_h1(mu: Weight, p: int) -> H1Status:
    """Decide H^1(G/B, L_mu) over a field of characteristic p (type A).

    For non-dominant mu, every simple root alpha with
    ``<mu, alpha^vee> <= -2`` is inverted through the dot action to
    ``lam = s_alpha . mu`` and, when ``<lam, alpha^vee> > 0``, classified:

    * ``<lam, alpha^vee> = a p^k - 1`` with ``0 < a < p``: H^1 is nonzero
      iff lam is dominant, with largest weight lam.
    * otherwise, with digits ``a_0..a_n`` of the pairing and some
      ``a_j < p-1`` for j < n: H^1 is nonzero iff ``mu + a_n p^n alpha``
      is dominant; the largest weight is lam when lam is dominant, else
      ``mu + sum_{t=m'}^n a_t p^t alpha`` for the minimal applicable m'.

    All applicable simple roots are evaluated and must agree; conflicting
    definite verdicts raise InternalInconsistencyError (a bug, not a
    mathematical outcome).  If no simple root is applicable the status is
    undetermined.
    """
    _require_type_a(mu.datum)
    _require_prime(p)
    if is_dominant(mu):
        return H1Status.zero()
    verdicts: list[tuple[Root, H1Status]] = []
    for alpha in mu.datum.simple_roots:
        c = pairing(mu, alpha)
        if c > -2:
            continue
        lam = dot_reflect(mu, alpha)
        m = pairing(lam, alpha)
        assert m == -c - 2
        if m <= 0:
            continue  # criterion needs <lam, alpha^vee> > 0
        verdicts.append((alpha, _andersen_one_root(mu, lam, alpha, m, p)))
    if not verdicts:
        return H1Status.undetermined(
            "no simple root with <mu, alpha^vee> <= -3; criterion not applicable"
        )
    statuses = [v for _, v in verdicts]
    for other in statuses[1:]:
        if other != statuses[0]:
            raise InternalInconsistencyError(
                f"simple roots give conflicting H^1 verdicts for {mu!r}: {verdicts}"
            )
    return statuses[0]


def _andersen_one_root(mu: Weight, lam: Weight, alpha: Root, m: int, p: int) -> H1Status:
    # Part a): m = a p^k - 1 with 0 < a < p.
    s, k = m + 1, 0
    while s % p == 0:
        s //= p
        k += 1
    if s < p:
        return H1Status.nonzero(lam) if is_dominant(lam) else H1Status.zero()
    # Part b): some digit below the top one is < p-1.  (If all of them were
    # p-1 the pairing would be a p^k - 1 and part a) would have caught it;
    # the guard is kept for safety.)
    digits = base_p_digits(m, p).digits
    n = len(digits) - 1
    if all(digits[j] == p - 1 for j in range(n)):
        return H1Status.undetermined(
            f"all low base-{p} digits of {m} equal {p - 1}; criterion part b) inapplicable"
        )
    if not is_dominant(mu + (digits[n] * p**n) * alpha.vector):
        return H1Status.zero()
    if is_dominant(lam):
        return H1Status.nonzero(lam)
    m_low = next(j for j in range(n) if digits[j] < p - 1)
    for j in range(m_low, n + 1):
        tail = sum(digits[t] * p**t for t in range(j, n + 1))
        nu = mu + tail * alpha.vector
        if is_dominant(nu):
            return H1Status.nonzero(nu)
    raise InternalInconsistencyError(
        f"dominant tail weight not found for {mu!r} though nu_n was dominant"
    )


# ---------------------------------------------------------------------------
# Filtration aggregation


class FiltrationH1(str, Enum):
    ZERO = "zero"
    TRIVIAL_MODULE = "trivial_module"
    UNKNOWN = "unknown"


def aggregate_h1_statuses(statuses: Iterable[H1Status]) -> FiltrationH1:
    """Combine per-quotient H^1 statuses of a line-bundle filtration.

    A bundle filtered by line bundles whose H^1 are each zero or trivial
    has H^1 zero or a trivial module; any undetermined status or nonzero
    highest weight degrades the aggregate to unknown.
    """
    saw_trivial = False
    for st in statuses:
        if st.is_zero:
            continue
        if st.is_trivial_module:
            saw_trivial = True
            continue
        return FiltrationH1.UNKNOWN
    return FiltrationH1.TRIVIAL_MODULE if saw_trivial else FiltrationH1.ZERO


def h1_of_filtration(weights: Iterable[Weight], p: int) -> FiltrationH1:
    """Aggregate H^1 over an equivariant line-bundle filtration's weights."""
    return aggregate_h1_statuses(andersen_h1(w, p) for w in weights)


# ---------------------------------------------------------------------------
# Characteristic-zero oracle


@dataclass(frozen=True, slots=True)
class BwbStatus:
    """Classical Borel--Weil--Bott answer: all-zero, or one cohomology degree."""

    all_zero: bool
    degree: Optional[int] = None
    highest_weight: Optional[Weight] = None

    def to_json(self) -> dict:
        return {
            "all_zero": self.all_zero,
            "degree": self.degree,
            "highest_weight": None
            if self.highest_weight is None
            else self.highest_weight.to_json(),
        }


def bwb_char0(lam: Weight) -> BwbStatus:
    """Characteristic-zero cohomology of L_lam on GL_n/B by the sort rule.

    lam + rho singular (a repeated coordinate) kills all cohomology;
    otherwise the single nonzero group sits in degree equal to the number
    of inversions needed to sort lam + rho strictly decreasing, with
    highest weight w(lam + rho) - rho.
    """
    _require_type_a(lam.datum)
    shifted = (lam + lam.datum.weyl_vector).coords
    if len(set(shifted)) < len(shifted):
        return BwbStatus(all_zero=True)
    inversions = sum(
        1
        for i in range(len(shifted))
        for j in range(i + 1, len(shifted))
        if shifted[i] < shifted[j]
    )
    dominant_shift = lam.datum.weight(sorted(shifted, reverse=True))
    return BwbStatus(
        all_zero=False,
        degree=inversions,
        highest_weight=dominant_shift - lam.datum.weyl_vector,
    )


def weyl_dim(lam: Weight) -> int:
    """Dimension of the irreducible of highest weight lam (characteristic 0).

    Weyl dimension formula over the true half sum of positive roots; the
    intermediate arithmetic is exact (denominators cancel against the
    doubled half sum, which is integral).
    """
    if not is_dominant(lam):
        raise ValueError(f"weyl_dim requires a dominant weight, got {lam!r}")
    datum = lam.datum
    rho2 = [0] * datum.rank  # twice the half sum = sum of positive roots
    for beta in datum.positive_roots:
        for i, c in enumerate(beta.vector.coords):
            rho2[i] += c
    rho2_w = datum.weight(rho2)
    num = den = 1
    for beta in datum.positive_roots:
        b = pairing(rho2_w, beta)
        num *= 2 * pairing(lam, beta) + b
        den *= b
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension did not come out integral"
    return q
