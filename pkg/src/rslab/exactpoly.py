"""Truncated polynomial arithmetic over exact rationals.

A :class:`TruncatedPoly` is a sparse polynomial in one or two formal
variables with ``Fraction`` coefficients, taken modulo the ideal generated
by ``v**(cutoff_v + 1)`` for each variable ``v``.  Multiplication silently
drops monomials past a cutoff, which is exactly the truncation an
n-dimensional cohomology ring or an order-n series expansion wants.

Coefficients are stored in a dict keyed by exponent tuples; zero
coefficients are never stored, so dict equality is polynomial equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import InputError

Exponent = Tuple[int, ...]
RationalLike = Union[int, Fraction]


class TruncatedPoly:
    __slots__ = ("variables", "cutoffs", "coeffs")

    def __init__(
        self,
        variables: Iterable[str],
        cutoffs: Iterable[int],
        coeffs: Mapping[Exponent, RationalLike] | None = None,
    ) -> None:
        self.variables: Tuple[str, ...] = tuple(variables)
        self.cutoffs: Tuple[int, ...] = tuple(int(c) for c in cutoffs)
        if not 1 <= len(self.variables) <= 2:
            raise InputError("supported variable counts are 1 and 2")
        if len(self.cutoffs) != len(self.variables):
            raise InputError("one cutoff per variable required")
        if any(c < 0 for c in self.cutoffs):
            raise InputError("cutoffs must be nonnegative")
        clean: Dict[Exponent, Fraction] = {}
        for exps, value in (coeffs or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != len(self.variables) or any(e < 0 for e in key):
                raise InputError(f"bad exponent tuple {exps!r}")
            if any(e > c for e, c in zip(key, self.cutoffs)):
                continue  # truncated away by construction
            value = Fraction(value)
            if value:
                clean[key] = clean.get(key, Fraction(0)) + value
                if not clean[key]:
                    del clean[key]
        self.coeffs = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str], cutoffs: Iterable[int]) -> "TruncatedPoly":
        return cls(variables, cutoffs)

    @classmethod
    def constant(
        cls, value: RationalLike, variables: Iterable[str], cutoffs: Iterable[int]
    ) -> "TruncatedPoly":
        variables = tuple(variables)
        return cls(variables, cutoffs, {(0,) * len(variables): value})

    def monomial(self, exponents: Exponent, value: RationalLike = 1) -> "TruncatedPoly":
        """A single term with this polynomial's variables and cutoffs."""
        return TruncatedPoly(self.variables, self.cutoffs, {tuple(exponents): value})

    def _like(self, coeffs: Mapping[Exponent, Fraction]) -> "TruncatedPoly":
        out = TruncatedPoly.__new__(TruncatedPoly)
        out.variables = self.variables
        out.cutoffs = self.cutoffs
        out.coeffs = {k: v for k, v in coeffs.items() if v}
        return out

    # -- inspection -------------------------------------------------------

    def coefficient(self, exponents: Exponent) -> Fraction:
        return self.coeffs.get(tuple(exponents), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * len(self.variables), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "TruncatedPoly") -> None:
        if self.variables != other.variables or self.cutoffs != other.cutoffs:
            raise InputError("operands live in different truncated rings")

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_compatible(other)
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return self._like(merged)

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_compatible(other)
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = merged.get(k, Fraction(0)) - v
        return self._like(merged)

    def __neg__(self) -> "TruncatedPoly":
        return self._like({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: Union["TruncatedPoly", RationalLike]) -> "TruncatedPoly":
        if isinstance(other, TruncatedPoly):
            self._check_compatible(other)
            out: Dict[Exponent, Fraction] = {}
            cut = self.cutoffs
            for ea, ca in self.coeffs.items():
                for eb, cb in other.coeffs.items():
                    key = tuple(a + b for a, b in zip(ea, eb))
                    if any(e > c for e, c in zip(key, cut)):
                        continue
                    out[key] = out.get(key, Fraction(0)) + ca * cb
            return self._like(out)
        factor = Fraction(other)
        return self._like({k: v * factor for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedPoly":
        if n < 0:
            raise InputError("negative powers: use series_inverse")
        result = TruncatedPoly.constant(1, self.variables, self.cutoffs)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.cutoffs == other.cutoffs
            and self.coeffs == other.coeffs
        )

    def __hash__(self):  # pragma: no cover - dict use is not supported
        raise TypeError("TruncatedPoly is not hashable")

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for exps in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            coeff = self.coeffs[exps]
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps)
                if e
            ]
            if not factors:
                terms.append(str(coeff))
            elif coeff == 1:
                terms.append("*".join(factors))
            elif coeff == -1:
                terms.append("-" + "*".join(factors))
            else:
                terms.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(terms).replace("+ -", "- ")


def poly_mul(a: TruncatedPoly, b: TruncatedPoly) -> TruncatedPoly:
    """Product in the common truncated ring of ``a`` and ``b``."""
    return a * b


def series_inverse(p: TruncatedPoly) -> TruncatedPoly:
    """Multiplicative inverse of a series with nonzero constant term."""
    c0 = p.constant_term
    if not c0:
        raise InputError("series has no inverse: constant term is zero")
    one = TruncatedPoly.constant(1, p.variables, p.cutoffs)
    # p = c0*(1 - r) with r nilpotent under truncation, so the geometric
    # series terminates on its own.
    r = one - p * (Fraction(1) / c0)
    result = one
    term = one
    while True:
        term = term * r
        if term.is_zero():
            break
        result = result + term
    return result * (Fraction(1) / c0)


def series_exp(p: TruncatedPoly) -> TruncatedPoly:
    """exp of a series with zero constant term."""
    if p.constant_term:
        raise InputError("series_exp needs a zero constant term")
    result = TruncatedPoly.constant(1, p.variables, p.cutoffs)
    term = result
    k = 1
    while True:
        term = term * p * Fraction(1, k)
        if term.is_zero():
            break
        result = result + term
        k += 1
    return result


def series_log(p: TruncatedPoly) -> TruncatedPoly:
    """log of a series with constant term one."""
    if p.constant_term != 1:
        raise InputError("series_log needs constant term one")
    u = p - TruncatedPoly.constant(1, p.variables, p.cutoffs)
    result = TruncatedPoly.zero(p.variables, p.cutoffs)
    power = TruncatedPoly.constant(1, p.variables, p.cutoffs)
    k = 1
    sign = 1
    while True:
        power = power * u
        if power.is_zero():
            break
        result = result + power * Fraction(sign, k)
        k += 1
        sign = -sign
    return result


class RationalFunctionSeries:
    """Power-series expansion of a quotient of exact polynomials.

    The denominator must have a nonzero constant term.  Coefficients come
    from the long-division recurrence
    ``e_k = (n_k - sum_{i>=1} d_i * e_{k-i}) / d_0`` and are cached, so
    arbitrary orders can be asked for regardless of the cutoffs the inputs
    were built with (both inputs are exact polynomials, not truncations).
    """

    def __init__(self, numerator: TruncatedPoly, denominator: TruncatedPoly) -> None:
        if len(numerator.variables) != 1 or len(denominator.variables) != 1:
            raise InputError("rational function series are univariate")
        if not denominator.constant_term:
            raise InputError("denominator constant term must be nonzero")
        self._num = {e[0]: c for e, c in numerator.items()}
        self._den = {e[0]: c for e, c in denominator.items()}
        self._den_deg = max(self._den) if self._den else 0
        self._cache: list[Fraction] = []

    def series_coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise InputError("coefficient index must be nonnegative")
        d0 = self._den[0]
        while len(self._cache) <= k:
            j = len(self._cache)
            acc = self._num.get(j, Fraction(0))
            for i in range(1, min(j, self._den_deg) + 1):
                di = self._den.get(i)
                if di:
                    acc -= di * self._cache[j - i]
            self._cache.append(acc / d0)
        return self._cache[k]

    def coefficients(self, count: int) -> list[Fraction]:
        return [self.series_coefficient(k) for k in range(count)]
