"""Base orbifolds of cyclic branched covers and finiteness detection.

The n-fold cyclic cover of the 3-sphere branched over a link of this
class is a Seifert fibred space.  Its base is a 2-sphere with cone
points whose orders depend only on (p, q, k, n); the orbifold Euler
characteristic of that base decides finiteness of the fundamental group,
and in the finite cases a short catalog identifies the group itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .classify import DynkinType, is_ade
from .errors import InvalidParameters, NotPrime
from .link_model import (
    HopfSum,
    OneCore,
    SeifertLink,
    TwoCore,
    ZeroCore,
    normalize,
    reorient_to_P,
)

__all__ = [
    "ConeOrbifold",
    "chi",
    "b_bar",
    "FibreCoverData",
    "fibre_data",
    "base_orbifold_sigma_n",
    "pi1_sigma_n_finite",
    "Cyclic",
    "BinaryDihedral",
    "BinaryTetrahedral",
    "BinaryOctahedral",
    "BinaryIcosahedral",
    "FiniteUnidentified",
    "FiniteGroupTag",
    "finite_group",
]


@dataclass(frozen=True)
class ConeOrbifold:
    """A 2-sphere with cone points; orders sorted ascending, all >= 2."""

    cone_orders: tuple[int, ...]

    @staticmethod
    def build(orders: Iterable[int]) -> "ConeOrbifold":
        """Sort the orders and drop trivial (order 1) cone points."""
        kept = tuple(sorted(a for a in orders if a > 1))
        if any(a < 1 for a in orders):
            raise InvalidParameters("cone orders must be positive")
        return ConeOrbifold(kept)

    @property
    def chi(self) -> Fraction:
        """Orbifold Euler characteristic 2 - sum(1 - 1/a)."""
        return Fraction(2) - sum(
            (Fraction(1) - Fraction(1, a) for a in self.cone_orders),
            start=Fraction(0),
        )

    @property
    def geometry(self) -> str:
        value = self.chi
        if value > 0:
            return "spherical"
        if value == 0:
            return "euclidean"
        return "hyperbolic"

    def render(self) -> str:
        if not self.cone_orders:
            return "S2"
        return "S2(" + ",".join(str(a) for a in self.cone_orders) + ")"

    def __str__(self) -> str:
        return self.render()


def chi(orbifold: ConeOrbifold) -> Fraction:
    return orbifold.chi


def _require_prime_level(link: SeifertLink, n: int) -> SeifertLink:
    if n < 2:
        raise InvalidParameters("branched-cover index n must be at least 2")
    link = normalize(link)
    if isinstance(link, HopfSum) and link.plus + link.minus >= 2:
        raise NotPrime("branched-cover analysis applies to prime links only")
    return link


def _core_parameters(link: SeifertLink) -> tuple[int, int, int, int]:
    """(p, q, k, s) with s the total fibre winding of the link.

    The prime Hopf link enters through its coreless presentation with
    p = q = 1 and two positively oriented copies.
    """
    if isinstance(link, HopfSum):
        return 1, 1, 2, 2
    if isinstance(link, ZeroCore):
        return link.p, link.q, link.k, link.w * link.p * link.q
    if isinstance(link, OneCore):
        return (
            link.p,
            link.q,
            link.k,
            link.w * link.p * link.q + link.sign * link.p,
        )
    return (
        link.p,
        link.q,
        link.k,
        link.w * link.p * link.q + link.sign1 * link.p + link.sign2 * link.q,
    )


def b_bar(link: SeifertLink, n: int) -> ConeOrbifold:
    """Base orbifold of the n-fold cyclic branched cover.

    The branch copies each contribute a cone of order n; the exceptional
    fibres contribute their multiplicities, amplified by n when the
    corresponding core is part of the link.
    """
    link = _require_prime_level(link, n)
    if isinstance(link, HopfSum):
        return ConeOrbifold.build((n, n))
    orders = [n] * link.k
    if isinstance(link, ZeroCore):
        orders += [link.q, link.p]
    elif isinstance(link, OneCore):
        orders += [n * link.q, link.p]
    else:
        orders += [n * link.q, n * link.p]
    return ConeOrbifold.build(orders)


@dataclass(frozen=True)
class FibreCoverData:
    """How the regular fibre behaves under the n-fold branched cover.

    `s` is the total winding of the link against a regular fibre, `r` the
    order of the fibre class in the covering group, and cover_degree =
    n / r the number of fibre preimages.
    """

    s: int
    r: int
    cover_degree: int


def fibre_data(link: SeifertLink, n: int) -> FibreCoverData:
    link = _require_prime_level(link, n)
    _, _, _, s = _core_parameters(link)
    r = n // math.gcd(n, s % n)
    return FibreCoverData(s=s, r=r, cover_degree=n // r)


def base_orbifold_sigma_n(
    link: SeifertLink, n: int
) -> tuple[Fraction, Optional[ConeOrbifold]]:
    """(Euler characteristic of the cover's base, and the base orbifold
    itself when the fibration does not unwrap, i.e. when r = n)."""
    link = _require_prime_level(link, n)
    data = fibre_data(link, n)
    base = b_bar(link, n)
    total = data.cover_degree * base.chi
    return total, (base if data.r == n else None)


def pi1_sigma_n_finite(link: SeifertLink, n: int) -> bool:
    """Finiteness of the fundamental group of the n-fold branched cover."""
    return b_bar(link, n).chi > 0


# -- identification of the finite groups --------------------------------------


@dataclass(frozen=True)
class Cyclic:
    order: int

    @property
    def label(self) -> str:
        return f"Z/{self.order}"

    @property
    def group_order(self) -> Optional[int]:
        return self.order

    @property
    def h1_order(self) -> Optional[int]:
        return self.order


@dataclass(frozen=True)
class BinaryDihedral:
    index: int

    @property
    def label(self) -> str:
        return f"D*_{self.index}"

    @property
    def group_order(self) -> Optional[int]:
        return 4 * self.index

    @property
    def h1_order(self) -> Optional[int]:
        return 4


@dataclass(frozen=True)
class BinaryTetrahedral:
    @property
    def label(self) -> str:
        return "T*"

    @property
    def group_order(self) -> Optional[int]:
        return 24

    @property
    def h1_order(self) -> Optional[int]:
        return 3


@dataclass(frozen=True)
class BinaryOctahedral:
    @property
    def label(self) -> str:
        return "O*"

    @property
    def group_order(self) -> Optional[int]:
        return 48

    @property
    def h1_order(self) -> Optional[int]:
        return 2


@dataclass(frozen=True)
class BinaryIcosahedral:
    @property
    def label(self) -> str:
        return "I*"

    @property
    def group_order(self) -> Optional[int]:
        return 120

    @property
    def h1_order(self) -> Optional[int]:
        return 1


@dataclass(frozen=True)
class FiniteUnidentified:
    """Finite by the Euler-characteristic test, but outside the catalog
    of groups this package identifies by name."""

    orbifold: ConeOrbifold

    @property
    def label(self) -> str:
        return f"finite central extension over {self.orbifold.render()}"

    @property
    def group_order(self) -> Optional[int]:
        return None

    @property
    def h1_order(self) -> Optional[int]:
        return None


FiniteGroupTag = Union[
    Cyclic,
    BinaryDihedral,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    FiniteUnidentified,
]


def _two_fold_group(dynkin: DynkinType) -> FiniteGroupTag:
    if dynkin.family == "A":
        return Cyclic(dynkin.index + 1)
    if dynkin.family == "D":
        return BinaryDihedral(dynkin.index - 2)
    return {
        6: BinaryTetrahedral(),
        7: BinaryOctahedral(),
        8: BinaryIcosahedral(),
    }[dynkin.index]


_HIGHER_COVER_GROUPS: dict[tuple[SeifertLink, int], FiniteGroupTag] = {
    (ZeroCore(2, 3, 1, 1), 3): BinaryDihedral(2),
    (ZeroCore(2, 3, 1, 1), 4): BinaryTetrahedral(),
    (ZeroCore(2, 3, 1, 1), 5): BinaryIcosahedral(),
    (ZeroCore(1, 2, 2, 2), 3): BinaryTetrahedral(),
    (ZeroCore(2, 5, 1, 1), 3): BinaryIcosahedral(),
}


def finite_group(link: SeifertLink, n: int) -> Optional[FiniteGroupTag]:
    """The fundamental group of the n-fold branched cover when finite.

    None when the group is infinite (non-positive base Euler
    characteristic).  At n = 2 the group is read off the Dynkin type of
    the positively reoriented link; at higher n a finite catalog covers
    the torus-link cases, lens-space bases give cyclic groups, and the
    one genuinely unidentified case is reported as such.
    """
    link = _require_prime_level(link, n)
    base = b_bar(link, n)
    if base.chi <= 0:
        return None
    if n == 2:
        dynkin = is_ade(reorient_to_P(link))
        assert dynkin is not None, f"spherical double cover of non-ADE {link!r}"
        return _two_fold_group(dynkin)
    if len(base.cone_orders) <= 2:
        return Cyclic(n)
    tag = _HIGHER_COVER_GROUPS.get((link, n))
    if tag is not None:
        return tag
    return FiniteUnidentified(base)
