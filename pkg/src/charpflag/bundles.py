"""Weight-level model of equivariant vector bundles on Grassmannians.

An equivariant bundle on GL_N/P is determined by a P-representation; this
module tracks only its multiset of torus weights.  That shadow suffices
for the tautological bundle on Gr(d, N), its Frobenius twist (which
multiplies every weight by p), the endomorphism bundle (pairwise weight
differences), and the induced line-bundle filtration after pulling back
to the Borel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPrimeError, RankRangeError
from .cohomology import is_prime
from .lattice import RootDatum, Weight, make_datum


@dataclass(frozen=True, slots=True)
class EquivariantBundleWeights:
    """Multiset of torus weights of the defining P-representation.

    The multiset cardinality equals the bundle rank; weights are kept with
    multiplicity (repeated weights matter for rank bookkeeping).
    """

    datum: RootDatum
    weights: tuple[Weight, ...]
    label: str

    def __post_init__(self):
        assert all(w.datum is self.datum for w in self.weights)

    @property
    def rank(self) -> int:
        return len(self.weights)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "datum": self.datum.to_json(),
            "weights": [w.to_json() for w in self.weights],
        }


def tautological_weights(d: int, n: int) -> EquivariantBundleWeights:
    """Weights {l_1, ..., l_d} of the tautological subbundle on Gr(d, N).

    The parabolic of d x (N-d) block type acts on the fiber through the
    projection onto the d x d block.
    """
    if not 2 <= d <= n - 2:
        raise RankRangeError(f"tautological bundle requires 2 <= d <= N - 2, got d={d}, N={n}")
    datum = make_datum("GL", n)
    return EquivariantBundleWeights(
        datum=datum,
        weights=tuple(datum.fundamental_character(i) for i in range(1, d + 1)),
        label=f"S(d={d},N={n})",
    )


def frobenius_twist(
    bundle: EquivariantBundleWeights, p: int, allow_unit_twist: bool = False
) -> EquivariantBundleWeights:
    """Frobenius pullback: every weight multiplied by p, rank unchanged.

    ``p = 1`` (the identity twist) is admitted only for testing via
    ``allow_unit_twist``.
    """
    if p == 1 and allow_unit_twist:
        return EquivariantBundleWeights(bundle.datum, bundle.weights, bundle.label)
    if not is_prime(p):
        raise NotPrimeError(f"Frobenius twist needs a prime p, got {p}")
    return EquivariantBundleWeights(
        datum=bundle.datum,
        weights=tuple(p * w for w in bundle.weights),
        label=f"F*{bundle.label}",
    )


def end_weights(bundle: EquivariantBundleWeights) -> EquivariantBundleWeights:
    """Weights of End(E): all pairwise differences, with multiplicity.

    Cardinality is rank^2 and the zero weight occurs at least rank times
    (the diagonal).
    """
    diffs = tuple(w - v for w in bundle.weights for v in bundle.weights)
    return EquivariantBundleWeights(
        datum=bundle.datum, weights=diffs, label=f"End({bundle.label})"
    )


def pullback_filtration(bundle: EquivariantBundleWeights) -> tuple[Weight, ...]:
    """The bundle's weights in the fixed filtration order (lexicographic).

    Models the equivariant line-bundle filtration of the pullback to G/B.
    The true filtration order is not canonical; a fixed total order keeps
    reports deterministic, and every consumer here is order-independent.
    """
    return tuple(sorted(bundle.weights, key=lambda w: w.coords))
