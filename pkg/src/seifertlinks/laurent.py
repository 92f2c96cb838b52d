"""Exact Laurent polynomials in one variable over the integers.

Alexander polynomials of the links handled by this package are only defined
up to multiplication by units (signs and powers of t), and the closed
formulas for them are built from a handful of ring operations plus one exact
division.  This module provides exactly that: immutable sparse polynomials
with integer coefficients, integer exponents of either sign, exact division
that refuses to guess (NotDivisible), a unit-normal form for comparisons,
and the cyclotomic polynomials needed for first-Betti-number tests.

>>> p = LaurentPoly.from_terms([(0, 1), (1, -1)])   # 1 - t
>>> print(p * p)
1 - 2t + t^2
>>> print(cyclotomic(6))
1 - t + t^2
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator

from .errors import NotDivisible, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "cyclotomic",
    "geometric_sum",
    "one_minus_t_power",
]


@dataclass(frozen=True)
class LaurentPoly:
    """A sparse Laurent polynomial: sorted (exponent, coefficient) pairs.

    Coefficients are nonzero integers; exponents are integers of either
    sign, strictly increasing.  Instances are immutable and hashable, and
    equality is exact (use `normalize_units` before comparing values that
    are only defined up to units).
    """

    terms: tuple[tuple[int, int], ...]

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_terms(pairs: Iterable[tuple[int, int]]) -> "LaurentPoly":
        """Build from (exponent, coefficient) pairs, merging duplicates.

        >>> print(LaurentPoly.from_terms([(2, 1), (0, 3), (2, -1)]))
        3
        """
        acc: dict[int, int] = {}
        for exp, coef in pairs:
            acc[exp] = acc.get(exp, 0) + coef
        return LaurentPoly(tuple(sorted((e, c) for e, c in acc.items() if c)))

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(((0, 1),))

    @staticmethod
    def monomial(exp: int, coef: int = 1) -> "LaurentPoly":
        """The single term coef * t^exp.

        >>> print(LaurentPoly.monomial(3, -2))
        -2t^3
        """
        if coef == 0:
            return LaurentPoly(())
        return LaurentPoly(((exp, coef),))

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exp(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no lowest term")
        return self.terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no highest term")
        return self.terms[-1][0]

    @property
    def breadth(self) -> int:
        """Highest exponent minus lowest exponent.

        >>> LaurentPoly.from_terms([(-1, 2), (3, 1)]).breadth
        4
        """
        return self.max_exp - self.min_exp

    def coefficient(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self.terms)
        for exp, coef in other.terms:
            acc[exp] = acc.get(exp, 0) + coef
        return LaurentPoly(tuple(sorted((e, c) for e, c in acc.items() if c)))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(tuple(sorted((e, c) for e, c in acc.items() if c)))

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly(())
        return LaurentPoly(tuple((e, c * k) for e, k in self.terms))

    def shift(self, j: int) -> "LaurentPoly":
        """Multiply by t^j.

        >>> print(LaurentPoly.from_terms([(0, 1), (1, 1)]).shift(-1))
        t^-1 + 1
        """
        return LaurentPoly(tuple((e + j, c) for e, c in self.terms))

    def compose_power(self, m: int) -> "LaurentPoly":
        """Substitute t -> t^m (m >= 1).

        >>> print(LaurentPoly.from_terms([(0, 1), (2, -1)]).compose_power(3))
        1 - t^6
        """
        if m < 1:
            raise ValueError("substitution exponent must be positive")
        return LaurentPoly(tuple((e * m, c) for e, c in self.terms))

    # -- division ----------------------------------------------------------

    def div_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor; NotDivisible on any remainder.

        >>> num = LaurentPoly.from_terms([(0, -1), (2, 1)])   # t^2 - 1
        >>> den = LaurentPoly.from_terms([(0, 1), (1, 1)])    # 1 + t
        >>> print(num.div_exact(den))
        -1 + t
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly(())
        # Work with ordinary polynomials and restore the exponent shift at
        # the end; Laurent units are invertible so this loses nothing.
        shift_back = self.min_exp - divisor.min_exp
        rem = {e - self.min_exp: c for e, c in self.terms}
        div = {e - divisor.min_exp: c for e, c in divisor.terms}
        div_deg = max(div)
        div_lead = div[div_deg]
        quot: dict[int, int] = {}
        while rem:
            rem_deg = max(rem)
            if rem_deg < div_deg:
                raise NotDivisible("non-zero remainder in exact division")
            lead, residue = divmod(rem[rem_deg], div_lead)
            if residue:
                raise NotDivisible("non-zero remainder in exact division")
            quot[rem_deg - div_deg] = lead
            for e, c in div.items():
                k = e + rem_deg - div_deg
                v = rem.get(k, 0) - lead * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly.from_terms(
            (e + shift_back, c) for e, c in quot.items()
        )

    def divisible_by(self, divisor: "LaurentPoly") -> bool:
        try:
            self.div_exact(divisor)
        except NotDivisible:
            return False
        return True

    # -- normal forms and evaluation ----------------------------------------

    def normalize_units(self) -> "LaurentPoly":
        """Canonical representative up to units: lowest exponent 0 and a
        positive constant term.

        >>> print(LaurentPoly.from_terms([(2, -1), (3, 1)]).normalize_units())
        1 - t
        >>> print(LaurentPoly.monomial(-1, -3).normalize_units())
        3
        """
        if self.is_zero:
            return self
        shifted = self.shift(-self.min_exp)
        if shifted.terms[0][1] < 0:
            return -shifted
        return shifted

    def eval_at_minus_one(self) -> int:
        """Integer value of the unit-normalized form at t = -1.

        >>> LaurentPoly.from_terms([(0, 1), (1, -1), (2, 1)]).eval_at_minus_one()
        3
        """
        normal = self.normalize_units()
        return sum(c if e % 2 == 0 else -c for e, c in normal.terms)

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        """Sparse human-readable form, ascending exponents.

        >>> LaurentPoly.from_terms([(0, 1), (3, -1), (7, 2)]).to_text()
        '1 - t^3 + 2t^7'
        """
        if self.is_zero:
            return "0"
        chunks: list[str] = []
        for i, (exp, coef) in enumerate(self.terms):
            mag = abs(coef)
            if exp == 0:
                body = str(mag)
            else:
                var = "t" if exp == 1 else f"t^{exp}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                chunks.append(body if coef > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_text()


def one_minus_t_power(n: int) -> LaurentPoly:
    """The polynomial 1 - t^n (for any integer n, including negatives)."""
    if n == 0:
        return LaurentPoly.zero()
    return LaurentPoly.from_terms([(0, 1), (n, -1)])


def geometric_sum(step: int, count: int) -> LaurentPoly:
    """1 + t^step + t^(2 step) + ... with `count` terms (count >= 1).

    >>> print(geometric_sum(3, 3))
    1 + t^3 + t^6
    """
    if count < 1 or step < 1:
        raise ValueError("geometric_sum needs count >= 1 and step >= 1")
    return LaurentPoly(tuple((step * i, 1) for i in range(count)))


@cache
def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial, computed by exact division:
    t^n - 1 divided by the product of the lower cyclotomic factors.

    >>> print(cyclotomic(1))
    -1 + t
    >>> print(cyclotomic(12))
    1 - t^2 + t^4
    """
    if n < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    numerator = -one_minus_t_power(n)  # t^n - 1
    if n == 1:
        return numerator
    lower = LaurentPoly.one()
    for d in range(1, n):
        if n % d == 0:
            lower = lower * cyclotomic(d)
    return numerator.div_exact(lower)
