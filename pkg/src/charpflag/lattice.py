"""Exact integer models of root data for the classical groups.

Weights live in the character lattice of a fixed maximal torus and are
stored as integer coordinate vectors in the standard character basis
``l_1, ..., l_n`` (for GL(n), ``l_i`` reads off the i-th diagonal entry of
the torus).  All arithmetic is exact integer arithmetic.

Coordinate conventions per family:

* ``GL(n)``    -- X(T) = Z^n; roots ``l_i - l_j``, coroots ``e_i - e_j``.
* ``SL(n)``    -- Z^n modulo the all-ones vector; every weight is stored
  as the canonical representative with last coordinate zero.
* ``Sp(2n)``   -- rank n; roots ``+-l_i +- l_j`` and ``+-2 l_i``.
* ``SO(2n)``   -- rank n; roots ``+-l_i +- l_j``.
* ``SO(2n+1)`` -- rank n, coordinates in *half-character* units l_i/2,
  i.e. the spin weight lattice: valid coordinate vectors have all entries
  of equal parity and pairings carry a denominator of 2.  The plain SO
  character lattice contains no integral vector pairing to 1 with every
  simple coroot, which the Weyl-vector convention below requires.

The stored ``weyl_vector`` is an exact integral solution of
``<rho, alpha^vee> = 1`` for every simple root ``alpha``.  For GL(n) it is
``(n-1, n-2, ..., 0)``: this differs from the half sum of positive roots
by a central (Weyl-invariant) shift, so it induces the same shifted
("dot") action ``s_alpha . lam = s_alpha(lam) - alpha`` on simple
reflections.

All types in this module are immutable values and all operations are
pure, so everything here is safe to call concurrently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .errors import (
    DatumMismatchError,
    LatticeMembershipError,
    NonSimpleRootError,
    RankRangeError,
)

DEFAULT_MAX_RANK = 8
MAX_RANK_ENV = "CHARP_FLAG_MAX_RANK"

# Canonical family tags accepted by make_datum.
FAMILIES = ("GL", "SL", "Sp", "SO_odd", "SO_even", "Torus")

_FAMILY_ALIASES = {
    "gl": "GL",
    "sl": "SL",
    "sp": "Sp",
    "soodd": "SO_odd",
    "soeven": "SO_even",
    "torus": "Torus",
}


def normalize_family(family: str) -> str:
    key = family.lower().replace("-", "").replace("_", "").replace(" ", "")
    try:
        return _FAMILY_ALIASES[key]
    except KeyError:
        raise RankRangeError(
            f"unknown datum family {family!r}; expected one of {', '.join(FAMILIES)}"
        ) from None


class RootDatum:
    """A root datum: lattice rank, roots with coroots, simple roots, Weyl vector.

    Instances compare by identity; ``make_datum`` caches construction so
    repeated calls with the same arguments return the same handle.
    """

    __slots__ = (
        "family",
        "rank",
        "roots",
        "positive_roots",
        "simple_roots",
        "weyl_vector",
        "pairing_denominator",
        "name",
    )

    family: str
    rank: int
    roots: "tuple[Root, ...]"
    positive_roots: "tuple[Root, ...]"
    simple_roots: "tuple[Root, ...]"
    weyl_vector: "Optional[Weight]"
    pairing_denominator: int
    name: str

    def __init__(
        self,
        family: str,
        rank: int,
        positive_pairs: Iterable[tuple[tuple[int, ...], tuple[int, ...]]],
        simple_coords: Iterable[tuple[int, ...]],
        weyl_vector_coords: Optional[tuple[int, ...]],
        pairing_denominator: int = 1,
        name: Optional[str] = None,
    ):
        self.family = family
        self.rank = rank
        self.pairing_denominator = pairing_denominator
        self.name = name if name is not None else family
        positives = []
        negatives = []
        for vec, cov in positive_pairs:
            positives.append(Root(Weight(tuple(vec), self), tuple(cov)))
            negatives.append(Root(Weight(tuple(-x for x in vec), self), tuple(-x for x in cov)))
        self.positive_roots = tuple(positives)
        self.roots = tuple(positives) + tuple(negatives)
        by_coords = {r.vector.coords: r for r in self.positive_roots}
        self.simple_roots = tuple(by_coords[self._canonical(tuple(c))] for c in simple_coords)
        if weyl_vector_coords is None:
            self.weyl_vector = None
        else:
            self.weyl_vector = Weight(tuple(weyl_vector_coords), self)
        self._sanity_check()

    # -- lattice membership ------------------------------------------------

    def _canonical(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        """Canonical stored form of a coordinate vector, or raise."""
        if len(coords) != self.rank:
            raise LatticeMembershipError(
                f"expected {self.rank} coordinates for {self.name}, got {len(coords)}"
            )
        if self.family == "SL":
            last = coords[-1]
            if last:
                coords = tuple(c - last for c in coords)
        elif self.family == "SO_odd":
            parities = {c & 1 for c in coords}
            if len(parities) > 1:
                raise LatticeMembershipError(
                    f"{self.name} weights need all coordinates of equal parity "
                    "(coordinates are in half-character units); got "
                    f"{coords}"
                )
        return coords

    def weight(self, coords: Iterable[int]) -> "Weight":
        """Build a Weight of this datum from raw coordinates."""
        return Weight(tuple(int(c) for c in coords), self)

    def zero(self) -> "Weight":
        return Weight((0,) * self.rank, self)

    def fundamental_character(self, i: int) -> "Weight":
        """The basis character l_i (1-indexed) as a Weight of this datum."""
        if not 1 <= i <= self.rank:
            raise LatticeMembershipError(f"character index {i} outside 1..{self.rank}")
        scale = 2 if self.family == "SO_odd" else 1
        return self.weight(tuple(scale if j == i - 1 else 0 for j in range(self.rank)))

    # -- plumbing ----------------------------------------------------------

    def _sanity_check(self) -> None:
        root_coords = {r.vector.coords for r in self.roots}
        assert len(root_coords) == len(self.roots), "duplicate roots"
        for r in self.roots:
            assert pairing(r.vector, r) == 2, f"<alpha, alpha^vee> != 2 for {r}"
            neg = tuple(-x for x in r.vector.coords)
            assert neg in root_coords, f"root set not closed under negation at {r}"
        if self.weyl_vector is not None:
            for a in self.simple_roots:
                assert pairing(self.weyl_vector, a) == 1, (
                    f"Weyl vector pairs to {pairing(self.weyl_vector, a)} != 1 "
                    f"with simple root {a.vector.coords} of {self.name}"
                )

    def to_json(self) -> dict:
        return {"type": self.family, "n": self.rank}

    def __repr__(self) -> str:  # short: the full object graph is cyclic
        return f"RootDatum({self.name})"


@dataclass(frozen=True, slots=True)
class Weight:
    """Integer vector in the character lattice of a datum's maximal torus.

    Value semantics: two weights are equal iff their datum handles and
    stored coordinates agree.  Construction canonicalizes (SL) and
    validates lattice membership (SO_odd parity).
    """

    coords: tuple[int, ...]
    datum: RootDatum

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", self.datum._canonical(coords))

    def __add__(self, other: "Weight") -> "Weight":
        _same_datum(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.datum)

    def __sub__(self, other: "Weight") -> "Weight":
        _same_datum(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.datum)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.datum)

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords), self.datum)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> list[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        return f"Weight({self.coords} @ {self.datum.name})"


@dataclass(frozen=True, slots=True)
class Root:
    """A root: its character-lattice vector plus its coroot (cocharacter)."""

    vector: Weight
    coroot: tuple[int, ...]

    @property
    def datum(self) -> RootDatum:
        return self.vector.datum

    def __repr__(self) -> str:
        return f"Root({self.vector.coords}, coroot={self.coroot})"


def _same_datum(a, b) -> None:
    da = a.datum if not isinstance(a, RootDatum) else a
    db = b.datum if not isinstance(b, RootDatum) else b
    if da is not db:
        raise DatumMismatchError(f"operands live in different data: {da.name} vs {db.name}")


# ---------------------------------------------------------------------------
# Core operations


def pairing(lam: Weight, alpha: Root) -> int:
    """The canonical pairing <lam, alpha^vee>, an exact integer."""
    _same_datum(lam, alpha.vector)
    num = sum(a * b for a, b in zip(lam.coords, alpha.coroot))
    den = lam.datum.pairing_denominator
    q, r = divmod(num, den)
    assert r == 0, f"non-integral pairing {num}/{den}; invalid lattice point slipped through"
    return q


def reflect(lam: Weight, alpha: Root) -> Weight:
    """Reflection s_alpha(lam) = lam - <lam, alpha^vee> alpha."""
    return lam - pairing(lam, alpha) * alpha.vector


def dot_reflect(lam: Weight, alpha: Root) -> Weight:
    """Shifted reflection s_alpha . lam = s_alpha(lam) - alpha, for simple alpha.

    Equals ``reflect(lam + rho, alpha) - rho`` for any rho with
    ``<rho, alpha^vee> = 1``, in particular the datum's Weyl vector.
    """
    if alpha not in lam.datum.simple_roots:
        raise NonSimpleRootError(f"{alpha!r} is not a simple root of {lam.datum.name}")
    return reflect(lam, alpha) - alpha.vector


def is_dominant(lam: Weight) -> bool:
    """True iff <lam, alpha^vee> >= 0 for every simple root alpha."""
    return all(pairing(lam, a) >= 0 for a in lam.datum.simple_roots)


# ---------------------------------------------------------------------------
# Weyl group machinery


@dataclass(frozen=True, slots=True)
class WeylElement:
    """Signed permutation acting on weight coordinates.

    ``images[i] = +-(j+1)`` means coordinate position i is sent to
    position j with the given sign; for type A all signs are positive.
    The SL action permutes and then re-canonicalizes.
    """

    images: tuple[int, ...]
    datum: RootDatum

    def apply(self, lam: Weight) -> Weight:
        _same_datum(lam, self.datum)
        out = [0] * self.datum.rank
        for i, im in enumerate(self.images):
            if im > 0:
                out[im - 1] = lam.coords[i]
            else:
                out[-im - 1] = -lam.coords[i]
        return Weight(tuple(out), self.datum)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition self o other (other acts first)."""
        _same_datum(self.datum, other.datum)
        imgs = []
        for im_o in other.images:
            im_s = self.images[abs(im_o) - 1]
            imgs.append(im_s if im_o > 0 else -im_s)
        return WeylElement(tuple(imgs), self.datum)

    def is_identity(self) -> bool:
        return all(im == i + 1 for i, im in enumerate(self.images))

    def __repr__(self) -> str:
        return f"WeylElement({self.images} @ {self.datum.name})"


def identity_element(datum: RootDatum) -> WeylElement:
    return WeylElement(tuple(range(1, datum.rank + 1)), datum)


def _transposition(datum: RootDatum, i: int, j: int) -> WeylElement:
    imgs = list(range(1, datum.rank + 1))
    imgs[i], imgs[j] = imgs[j], imgs[i]
    return WeylElement(tuple(imgs), datum)


def simple_reflection_elements(datum: RootDatum) -> tuple[WeylElement, ...]:
    """Weyl group generators matching ``datum.simple_roots`` in order."""
    n = datum.rank
    gens: list[WeylElement] = []
    if datum.family in ("GL", "SL"):
        gens = [_transposition(datum, k, k + 1) for k in range(n - 1)]
    elif datum.family in ("Sp", "SO_odd"):
        gens = [_transposition(datum, k, k + 1) for k in range(n - 1)]
        flip = list(range(1, n + 1))
        flip[n - 1] = -n
        gens.append(WeylElement(tuple(flip), datum))
    elif datum.family == "SO_even":
        gens = [_transposition(datum, k, k + 1) for k in range(n - 1)]
        last = list(range(1, n + 1))
        last[n - 2], last[n - 1] = -n, -(n - 1)
        gens.append(WeylElement(tuple(last), datum))
    elif datum.family == "Torus":
        gens = []
    else:
        # Custom data: derive each reflection matrix and require it to be a
        # signed permutation of the stored coordinates.
        for alpha in datum.simple_roots:
            gens.append(_reflection_as_signed_permutation(datum, alpha))
    for g, a in zip(gens, datum.simple_roots):
        assert g.apply(a.vector) == -a.vector, "generator does not negate its simple root"
    return tuple(gens)


def _reflection_as_signed_permutation(datum: RootDatum, alpha: Root) -> WeylElement:
    n = datum.rank
    den = datum.pairing_denominator
    cols: list[tuple[int, ...]] = []
    for i in range(n):
        coeff = Fraction(alpha.coroot[i], den)
        col = tuple(
            (1 if j == i else 0) - coeff * alpha.vector.coords[j] for j in range(n)
        )
        if any(x.denominator != 1 for x in col):
            raise NonSimpleRootError(
                f"reflection by {alpha.vector.coords} is not integral on {datum.name}"
            )
        cols.append(tuple(int(x) for x in col))
    imgs = []
    for i in range(n):
        col = cols[i]
        nonzero = [(j, v) for j, v in enumerate(col) if v]
        if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
            raise NonSimpleRootError(
                f"reflection by {alpha.vector.coords} is not a signed permutation"
            )
        j, v = nonzero[0]
        imgs.append((j + 1) * v)
    return WeylElement(tuple(imgs), datum)


def max_weyl_rank() -> int:
    """Rank bound for Weyl group generation (env CHARP_FLAG_MAX_RANK)."""
    raw = os.environ.get(MAX_RANK_ENV)
    if raw is None:
        return DEFAULT_MAX_RANK
    try:
        bound = int(raw)
    except ValueError:
        raise RankRangeError(f"{MAX_RANK_ENV}={raw!r} is not an integer") from None
    if bound < 1:
        raise RankRangeError(f"{MAX_RANK_ENV} must be >= 1, got {bound}")
    return bound


def weyl_group(datum: RootDatum) -> frozenset[WeylElement]:
    """The full Weyl group, by closure of the simple reflections.

    Guarded by the configurable rank bound; note that non-A families grow
    like 2^n n!, so large ranks are deliberately out of reach.
    """
    bound = max_weyl_rank()
    if datum.rank > bound:
        raise RankRangeError(
            f"rank {datum.rank} exceeds the Weyl group bound {bound} "
            f"(override with {MAX_RANK_ENV})"
        )
    return _weyl_closure(datum)


@lru_cache(maxsize=32)
def _weyl_closure(datum: RootDatum) -> frozenset[WeylElement]:
    gens = simple_reflection_elements(datum)
    ident = identity_element(datum)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                c = g * w
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


# ---------------------------------------------------------------------------
# Construction of the classical data


def _e(n: int, i: int, val: int = 1) -> tuple[int, ...]:
    return tuple(val if j == i else 0 for j in range(n))


def _e2(n: int, i: int, vi: int, j: int, vj: int) -> tuple[int, ...]:
    return tuple(vi if k == i else (vj if k == j else 0) for k in range(n))


def make_datum(family: str, n: int) -> RootDatum:
    """Construct (and cache) the root datum of a classical family.

    ``n`` is the rank of the character lattice: GL(n), SL(n), Sp(2n)
    [rank n], SO(2n+1) [rank n], SO(2n) [rank n], or a rank-n torus.
    """
    return _build_datum(normalize_family(family), int(n))


def make_torus(n: int) -> RootDatum:
    """A rank-n torus datum: empty root set."""
    return _build_datum("Torus", int(n))


@lru_cache(maxsize=None)
def _build_datum(family: str, n: int) -> RootDatum:
    if family in ("GL", "SL", "Torus"):
        if n < 1:
            raise RankRangeError(f"{family} requires n >= 1, got {n}")
    elif n < 2:
        raise RankRangeError(f"{family} requires n >= 2, got {n}")

    if family == "Torus":
        return RootDatum("Torus", n, [], [], (0,) * n, name=f"T({n})")

    if family in ("GL", "SL"):
        positives = [
            (_e2(n, i, 1, j, -1), _e2(n, i, 1, j, -1)) for i in range(n) for j in range(i + 1, n)
        ]
        simples = [_e2(n, k, 1, k + 1, -1) for k in range(n - 1)]
        rho = tuple(range(n - 1, -1, -1))
        return RootDatum(family, n, positives, simples, rho, name=f"{family}({n})")

    if family == "Sp":
        positives = [
            (_e2(n, i, 1, j, -1), _e2(n, i, 1, j, -1)) for i in range(n) for j in range(i + 1, n)
        ]
        positives += [
            (_e2(n, i, 1, j, 1), _e2(n, i, 1, j, 1)) for i in range(n) for j in range(i + 1, n)
        ]
        positives += [(_e(n, i, 2), _e(n, i, 1)) for i in range(n)]
        simples = [_e2(n, k, 1, k + 1, -1) for k in range(n - 1)] + [_e(n, n - 1, 2)]
        rho = tuple(range(n, 0, -1))
        return RootDatum("Sp", n, positives, simples, rho, name=f"Sp({2 * n})")

    if family == "SO_even":
        positives = [
            (_e2(n, i, 1, j, -1), _e2(n, i, 1, j, -1)) for i in range(n) for j in range(i + 1, n)
        ]
        positives += [
            (_e2(n, i, 1, j, 1), _e2(n, i, 1, j, 1)) for i in range(n) for j in range(i + 1, n)
        ]
        simples = [_e2(n, k, 1, k + 1, -1) for k in range(n - 1)] + [_e2(n, n - 2, 1, n - 1, 1)]
        rho = tuple(range(n - 1, -1, -1))
        return RootDatum("SO_even", n, positives, simples, rho, name=f"SO({2 * n})")

    assert family == "SO_odd"
    # Spin weight lattice, half-character units: every plain vector below is
    # doubled; short coroots stay doubled, long coroots are the plain e_i-e_j.
    positives = [
        (_e2(n, i, 2, j, -2), _e2(n, i, 1, j, -1)) for i in range(n) for j in range(i + 1, n)
    ]
    positives += [
        (_e2(n, i, 2, j, 2), _e2(n, i, 1, j, 1)) for i in range(n) for j in range(i + 1, n)
    ]
    positives += [(_e(n, i, 2), _e(n, i, 2)) for i in range(n)]
    simples = [_e2(n, k, 2, k + 1, -2) for k in range(n - 1)] + [_e(n, n - 1, 2)]
    rho = tuple(2 * (n - i) - 1 for i in range(n))
    return RootDatum(
        "SO_odd", n, positives, simples, rho, pairing_denominator=2, name=f"SO({2 * n + 1})"
    )


def custom_datum(
    rank: int,
    positive_pairs: Iterable[tuple[tuple[int, ...], tuple[int, ...]]],
    simple_coords: Iterable[tuple[int, ...]],
    weyl_vector_coords: Optional[tuple[int, ...]] = None,
    pairing_denominator: int = 1,
    name: str = "custom",
) -> RootDatum:
    """A hand-built root datum, e.g. for isogeny sources/targets.

    ``positive_pairs`` lists the positive roots as (vector, coroot);
    negatives are filled in automatically.  ``weyl_vector_coords`` may be
    omitted for lattices that contain no vector pairing to 1 with every
    simple coroot (adjoint data).
    """
    return RootDatum(
        "custom",
        rank,
        positive_pairs,
        simple_coords,
        weyl_vector_coords,
        pairing_denominator=pairing_denominator,
        name=name,
    )


# ---------------------------------------------------------------------------
# Exact decomposition in the simple-root basis (used by invariant checks)


def simple_root_coefficients(datum: RootDatum, beta: Root) -> tuple[Fraction, ...]:
    """Coefficients of ``beta`` in the simple-root basis, exactly."""
    simples = datum.simple_roots
    m = len(simples)
    # Solve sum_k x_k * simple_k = beta by Gaussian elimination over Q.
    rows = [
        [Fraction(simples[k].vector.coords[i]) for k in range(m)]
        + [Fraction(beta.vector.coords[i])]
        for i in range(datum.rank)
    ]
    col = 0
    pivots = []
    for k in range(m):
        piv = next((r for r in range(col, len(rows)) if rows[r][k]), None)
        if piv is None:
            continue
        rows[col], rows[piv] = rows[piv], rows[col]
        rows[col] = [x / rows[col][k] for x in rows[col]]
        for r in range(len(rows)):
            if r != col and rows[r][k]:
                factor = rows[r][k]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
        pivots.append(k)
        col += 1
    coeffs = [Fraction(0)] * m
    for idx, k in enumerate(pivots):
        coeffs[k] = rows[idx][m]
    for r in range(col, len(rows)):
        if rows[r][m]:
            raise LatticeMembershipError(
                f"{beta.vector.coords} is not in the span of the simple roots"
            )
    return tuple(coeffs)
