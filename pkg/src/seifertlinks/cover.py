"""Left-orderability analysis of cyclic branched covers.

For a prime link L of the class and an index n, the n-fold cyclic cover
branched over L is a Seifert fibred rational homology sphere (or has
positive first Betti number), and three mutually exclusive mechanisms
decide whether its fundamental group is left-orderable:

  * the group is finite (never left-orderable),
  * the cover carries no co-oriented taut foliation, certified by its
    normalized Seifert invariants (never left-orderable),
  * the group surjects onto the reals or admits a faithful lift of a
    PSL(2,R) representation, witnessed either by a positive first Betti
    number or by rotation-number data (left-orderable).

`canonical_star_status` runs the complete decision for the canonical
cover; `general_psi_lo` gives the one-sided test available for an
arbitrary weighted cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .alexander import cyclotomic_divides
from .classify import is_ade_up_to_orientation
from .errors import (
    InvalidParameters,
    NotCore,
    NotInCatalog,
    NotPrime,
    WeightMismatch,
)
from .link_model import (
    HopfSum,
    OneCore,
    SeifertLink,
    TwoCore,
    ZeroCore,
    components,
    normalize,
)
from .orbifold import FiniteGroupTag, b_bar, finite_group

__all__ = [
    "CoverSpec",
    "canonical_weights",
    "JNData",
    "jn_data",
    "jn_lo_sufficient",
    "SeifertInvariants",
    "nlo_seifert_invariants",
    "FinitePi1",
    "NoCTF_SeifertObstruction",
    "PositiveBetti",
    "PSL2R_Rep",
    "Catalog",
    "Evidence",
    "LO",
    "Inconclusive",
    "general_psi_lo",
    "StarStatus",
    "canonical_star_status",
]


CATALOG_NONPOSITIVE_CHI = (
    "the double branched cover's base orbifold has non-positive Euler "
    "characteristic, which forces left-orderability of every cyclic "
    "branched cover of the link"
)
CATALOG_TWO_BRIDGE = (
    "cyclic branched covers in this reoriented family are two-bridge "
    "covers with non-left-orderable fundamental groups"
)
CATALOG_HOROFOLIATION = (
    "left-orderable by the horizontal-foliation catalog for Seifert "
    "fibred branched covers"
)


@dataclass(frozen=True)
class CoverSpec:
    """A branching index n >= 2 and one weight per component, listed as
    copies first, then the first core, then the second, measured against
    the positively reoriented link.  Weights lie in 1..n-1."""

    n: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidParameters("branched-cover index n must be at least 2")
        for a in self.weights:
            if not 1 <= a <= self.n - 1:
                raise InvalidParameters(
                    f"cover weight {a} is outside 1..{self.n - 1}"
                )

    def reflected(self) -> "CoverSpec":
        """The complementary cover (deck transformation reversed)."""
        return CoverSpec(self.n, tuple(self.n - a for a in self.weights))


def _require_core(link: SeifertLink) -> SeifertLink:
    link = normalize(link)
    if isinstance(link, HopfSum):
        raise NotCore("this operation needs a core presentation, not a Hopf sum")
    return link


def _check_weights(link: SeifertLink, spec: CoverSpec) -> None:
    expected = components(link)
    if len(spec.weights) != expected:
        raise WeightMismatch(
            f"expected {expected} weights, got {len(spec.weights)}"
        )


def canonical_weights(link: SeifertLink, n: int) -> CoverSpec:
    """The weights of the canonical n-fold cover of the link as oriented:
    1 on positively oriented components, n-1 on reversed ones."""
    link = _require_core(link)
    if n < 2:
        raise InvalidParameters("branched-cover index n must be at least 2")
    positives = (link.k + link.w) // 2
    weights = [1] * positives + [n - 1] * (link.k - positives)
    if isinstance(link, OneCore):
        weights.append(1 if link.sign > 0 else n - 1)
    elif isinstance(link, TwoCore):
        weights.append(1 if link.sign1 > 0 else n - 1)
        weights.append(1 if link.sign2 > 0 else n - 1)
    return CoverSpec(n, tuple(weights))


@dataclass(frozen=True)
class JNData:
    """Rotation-number data of the weighted cover: one angle per cone
    point of the base, their sum sigma, and the count r."""

    thetas: tuple[Fraction, ...]
    sigma: Fraction
    r: int


def jn_data(link: SeifertLink, spec: CoverSpec) -> JNData:
    """Cone angles of the weighted cover.

    Branch copies contribute weight/n; a branched core of multiplicity m
    contributes weight/(n m); an unbranched exceptional fibre of
    multiplicity m > 1 contributes the background angle 1/m.
    """
    link = _require_core(link)
    _check_weights(link, spec)
    n = spec.n
    thetas = [Fraction(spec.weights[i], n) for i in range(link.k)]
    if isinstance(link, ZeroCore):
        if link.q > 1:
            thetas.append(Fraction(1, link.q))
        if link.p > 1:
            thetas.append(Fraction(1, link.p))
    elif isinstance(link, OneCore):
        thetas.append(Fraction(spec.weights[link.k], n * link.q))
        if link.p > 1:
            thetas.append(Fraction(1, link.p))
    else:
        thetas.append(Fraction(spec.weights[link.k], n * link.q))
        thetas.append(Fraction(spec.weights[link.k + 1], n * link.p))
    total = sum(thetas, start=Fraction(0))
    return JNData(tuple(thetas), total, len(thetas))


def jn_lo_sufficient(data: JNData) -> bool:
    """Whether the rotation numbers force a PSL(2,R) representation with
    a left-orderable lift (sufficient, not necessary)."""
    if data.r == 3:
        return data.sigma < 1 or data.sigma > 2
    if data.r == 4:
        return data.sigma != 2
    return data.r >= 5


@dataclass(frozen=True)
class SeifertInvariants:
    """Normalized Seifert invariants (e0; b1/a1, ..., br/ar) of a cover."""

    e0: int
    coefficients: tuple[Fraction, ...]

    def render(self) -> str:
        parts = ", ".join(str(c) for c in self.coefficients)
        return f"({self.e0}; {parts})"

    def __str__(self) -> str:
        return self.render()


def nlo_seifert_invariants(link: SeifertLink, n: int) -> SeifertInvariants:
    """Seifert invariants certifying that the n-fold canonical cover has
    no co-oriented taut foliation.

    Only the three catalogued families admit this certificate; any other
    pair raises NotInCatalog.
    """
    if n < 2:
        raise InvalidParameters("branched-cover index n must be at least 2")
    link = normalize(link)
    if (
        isinstance(link, ZeroCore)
        and (link.p, link.q, link.k, link.w) == (1, 1, 3, 1)
        and n >= 3
    ):
        third = Fraction(1, n)
        return SeifertInvariants(0, (third, third, -third))
    if (
        isinstance(link, OneCore)
        and (link.p, link.k, link.w, link.sign) == (1, 2, 0, 1)
        and n >= 3
    ):
        return SeifertInvariants(
            0, (Fraction(-1, n), Fraction(1, n), Fraction(-1, n * link.q))
        )
    if (
        isinstance(link, OneCore)
        and (link.p, link.q, link.k, link.w, link.sign) == (2, 3, 1, 1, -1)
        and n == 3
    ):
        return SeifertInvariants(
            0, (Fraction(1, 3), Fraction(2, 9), Fraction(-3, 2))
        )
    raise NotInCatalog(
        "no non-foliation Seifert-invariant certificate is catalogued "
        f"for ({link!r}, n={n})"
    )


# -- evidence and verdicts -----------------------------------------------------


@dataclass(frozen=True)
class FinitePi1:
    """The cover's fundamental group is finite."""

    group: FiniteGroupTag


@dataclass(frozen=True)
class NoCTF_SeifertObstruction:
    """The cover admits no co-oriented taut foliation."""

    invariants: SeifertInvariants


@dataclass(frozen=True)
class PositiveBetti:
    """The cover has positive first Betti number."""

    n: int


@dataclass(frozen=True)
class PSL2R_Rep:
    """Rotation-number witness of a left-orderable PSL(2,R) lift."""

    data: JNData


@dataclass(frozen=True)
class Catalog:
    """A catalogued fact, carried as a neutral descriptive note."""

    note: str


Evidence = Union[
    FinitePi1, NoCTF_SeifertObstruction, PositiveBetti, PSL2R_Rep, Catalog
]

_STAR_EVIDENCE = (PositiveBetti, PSL2R_Rep, Catalog)
_NOT_STAR_EVIDENCE = (FinitePi1, NoCTF_SeifertObstruction, Catalog)


@dataclass(frozen=True)
class LO:
    """Left-orderability established, with its witness."""

    evidence: Evidence


@dataclass(frozen=True)
class Inconclusive:
    """The one-sided tests for this weighted cover all failed."""


def general_psi_lo(
    link: SeifertLink, spec: CoverSpec
) -> Union[LO, Inconclusive]:
    """One-sided left-orderability test for an arbitrary weighted cover.

    Tries, in order: the non-positive double-cover Euler characteristic
    catalog, the rotation-number criterion for the cover and for its
    reflection, and (when the weights describe a canonical cover of a
    reorientation) the cyclotomic Betti-number witness.
    """
    link = _require_core(link)
    _check_weights(link, spec)
    if b_bar(link, 2).chi <= 0:
        return LO(Catalog(CATALOG_NONPOSITIVE_CHI))
    data = jn_data(link, spec)
    if jn_lo_sufficient(data):
        return LO(PSL2R_Rep(data))
    reflected = jn_data(link, spec.reflected())
    if jn_lo_sufficient(reflected):
        return LO(PSL2R_Rep(reflected))
    if all(a in (1, spec.n - 1) for a in spec.weights):
        reoriented = _link_of_weights(link, spec)
        if cyclotomic_divides(spec.n, reoriented):
            return LO(PositiveBetti(spec.n))
    return Inconclusive()


def _link_of_weights(link: SeifertLink, spec: CoverSpec) -> SeifertLink:
    """The reorientation of `link` whose canonical cover `spec` describes.

    Only meaningful when every weight is 1 or n-1: weight 1 keeps the
    positive orientation of the component, weight n-1 reverses it.  (At
    n = 2 both coincide and the cover is orientation-independent.)
    """
    balance = sum(1 if a == 1 else -1 for a in spec.weights[: link.k])
    if isinstance(link, ZeroCore):
        return normalize(ZeroCore(link.p, link.q, link.k, balance))
    if isinstance(link, OneCore):
        sign = 1 if spec.weights[link.k] == 1 else -1
        return normalize(OneCore(link.p, link.q, link.k, balance, sign))
    sign1 = 1 if spec.weights[link.k] == 1 else -1
    sign2 = 1 if spec.weights[link.k + 1] == 1 else -1
    return normalize(TwoCore(link.p, link.q, link.k, balance, sign1, sign2))


@dataclass(frozen=True)
class StarStatus:
    """Verdict for the canonical n-fold cover, with matching evidence.

    `star` is True when the cover's fundamental group is left-orderable.
    Star verdicts carry PositiveBetti, PSL2R_Rep, or Catalog evidence;
    NotStar verdicts carry FinitePi1, NoCTF_SeifertObstruction, or
    Catalog evidence.
    """

    star: bool
    evidence: Evidence

    def __post_init__(self) -> None:
        allowed = _STAR_EVIDENCE if self.star else _NOT_STAR_EVIDENCE
        if not isinstance(self.evidence, allowed):
            raise ValueError(
                f"{type(self.evidence).__name__} cannot support "
                f"verdict {self.verdict}"
            )

    @property
    def verdict(self) -> str:
        return "Star" if self.star else "NotStar"


def _star_by_representation(
    link: SeifertLink, n: int, betti_first: bool
) -> StarStatus:
    """A Star verdict with the strongest witness available."""
    if betti_first and cyclotomic_divides(n, link):
        return StarStatus(True, PositiveBetti(n))
    data = jn_data(link, canonical_weights(link, n))
    if jn_lo_sufficient(data):
        return StarStatus(True, PSL2R_Rep(data))
    reflected = jn_data(link, canonical_weights(link, n).reflected())
    if jn_lo_sufficient(reflected):
        return StarStatus(True, PSL2R_Rep(reflected))
    if not betti_first and cyclotomic_divides(n, link):
        return StarStatus(True, PositiveBetti(n))
    return StarStatus(True, Catalog(CATALOG_HOROFOLIATION))


def _not_star_bound(link: SeifertLink) -> int:
    """Largest n at which the canonical cover fails to be left-orderable,
    for links that are ADE up to orientation (outside the families that
    fail at every n)."""
    if link == ZeroCore(2, 3, 1, 1):
        return 5
    if link in (ZeroCore(1, 2, 2, 2), ZeroCore(2, 5, 1, 1)):
        return 3
    if link == OneCore(2, 3, 1, 1, -1):
        return 3
    return 2


def canonical_star_status(link: SeifertLink, n: int) -> StarStatus:
    """Left-orderability verdict for the canonical n-fold branched cover.

    Raises NotPrime on composite links.  The decision follows the
    trichotomy: links that are not ADE up to orientation have
    left-orderable covers at every index; three reoriented families fail
    at every index; the remaining links fail up to a type-dependent
    bound and are left-orderable beyond it.
    """
    if n < 2:
        raise InvalidParameters("branched-cover index n must be at least 2")
    link = normalize(link)
    if isinstance(link, HopfSum):
        if link.plus + link.minus >= 2:
            raise NotPrime("star status is defined for prime links only")
        group = finite_group(link, n)
        assert group is not None
        return StarStatus(False, FinitePi1(group))

    if not is_ade_up_to_orientation(link):
        return _star_by_representation(link, n, betti_first=False)

    if isinstance(link, ZeroCore) and (link.p, link.k, link.w) == (1, 2, 0):
        group = finite_group(link, n)
        if group is not None:
            return StarStatus(False, FinitePi1(group))
        return StarStatus(False, Catalog(CATALOG_TWO_BRIDGE))

    balanced_pretzel = isinstance(link, ZeroCore) and (
        link.p, link.q, link.k, link.w
    ) == (1, 1, 3, 1)
    reversed_even_pretzel = isinstance(link, OneCore) and (
        link.p, link.k, link.w, link.sign
    ) == (1, 2, 0, 1)
    if balanced_pretzel or reversed_even_pretzel:
        if n == 2:
            group = finite_group(link, 2)
            assert group is not None
            return StarStatus(False, FinitePi1(group))
        return StarStatus(
            False, NoCTF_SeifertObstruction(nlo_seifert_invariants(link, n))
        )

    if n <= _not_star_bound(link):
        group = finite_group(link, n)
        if group is not None:
            return StarStatus(False, FinitePi1(group))
        return StarStatus(
            False, NoCTF_SeifertObstruction(nlo_seifert_invariants(link, n))
        )
    return _star_by_representation(link, n, betti_first=True)
