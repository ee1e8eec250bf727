"""Symmetric-power series, configuration series, and the series exponential.

Three layers live here.

Zeta series of a pair class: the generating series whose t^n coefficient
is the class of the n-th symmetric power of the pair.  It is computed
componentwise: unordered n-tuples avoiding the marked subspace are exactly
unordered n-tuples in the complement, so the complement class transforms
by the base-ring zeta just like the ambient class.

Configuration series: the same with repeated points excluded.  Distinct
unordered tuples correspond to squarefree divisor patterns, which the
quotient zeta(t) / zeta(t^2) counts; the brute-force oracles validate that
quotient independently (squarefree polynomial counts, finite-scene
enumeration), and the series exponential below reproduces it as
(1 + t)^class.

Series exponential ("power structure"): raises any series with constant
term 1 to a ring-element power.  A series factors uniquely as a product
of zeta factors prod_i zeta_{b_i}(t^i) -- peel degree by degree, dividing
out one factor at a time -- and the exponential just scales every factor
exponent: A(t)^m := prod_i zeta_{m * b_i}(t^i).  Multiplicativity of zeta
in its subscript then forces all the usual exponent laws, which
`verify_power_axioms` checks coefficientwise.

Everything is parameterized by a LambdaRing: the ring constants plus the
zeta map.  Two instances are provided, one for the L-polynomial ring and
one for the pair ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .lefschetz import MotivicPolynomial, zeta_series
from .pairs import PairClass
from .series import TruncatedSeries


@dataclass(frozen=True)
class LambdaRing:
    """Capability bundle: ring constants plus the zeta series map.

    The zeta map must send m to a series with constant term 1 and t^1
    coefficient m, multiplicatively in m.  Those are the only properties
    the factorization machinery relies on.
    """

    name: str
    zero: Any
    one: Any
    zeta: Callable[[Any, int], TruncatedSeries]

    def one_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.unit(self.one, self.zero, order)

    def geometric_series(self, order: int) -> TruncatedSeries:
        """1/(1 - t): every coefficient is the ring unit."""
        return TruncatedSeries((self.one,) * (order + 1))

    def one_plus_t(self, order: int) -> TruncatedSeries:
        if order < 1:
            raise ValueError("1 + t needs order >= 1")
        return TruncatedSeries((self.one, self.one) + (self.zero,) * (order - 1))


def kapranov_zeta(p: PairClass, order: int) -> TruncatedSeries:
    """Generating series of symmetric-power classes of a pair, coefficientwise a PairClass."""
    ambient = zeta_series(p.amb, order)
    complement = zeta_series(p.comp, order)
    return TruncatedSeries(
        tuple(PairClass(a, c) for a, c in zip(ambient.coeffs, complement.coeffs))
    )


LEFSCHETZ_RING = LambdaRing(
    "lefschetz", MotivicPolynomial.zero(), MotivicPolynomial.one(), zeta_series
)
PAIR_RING = LambdaRing("pairs", PairClass.zero(), PairClass.one(), kapranov_zeta)


def config_series(m: Any, order: int, ring: LambdaRing) -> TruncatedSeries:
    """Generating series of configuration-space classes: zeta(t) / zeta(t^2)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    numerator = ring.zeta(m, order)
    denominator = ring.zeta(m, order // 2).inflate(2, ring.zero).resized(order, ring.zero)
    return numerator.divide(denominator, ring.one)


def config_series_pair(p: PairClass, order: int) -> TruncatedSeries:
    """Configuration series of a pair; t^1 coefficient is the pair itself."""
    return config_series(p, order, PAIR_RING)


@dataclass(frozen=True)
class FactorExponents:
    """Exponents b_1..b_N of the factorization A(t) = prod_i zeta_{b_i}(t^i)."""

    exponents: tuple

    @property
    def order(self) -> int:
        return len(self.exponents)

    def reconstruct(self, ring: LambdaRing) -> TruncatedSeries:
        """Multiply the factors back out; must reproduce the factored series."""
        result = ring.one_series(self.order)
        for i, b in enumerate(self.exponents, start=1):
            result = result * _zeta_power_factor(b, i, self.order, ring)
        return result


def _zeta_power_factor(b: Any, i: int, order: int, ring: LambdaRing) -> TruncatedSeries:
    # zeta_b(t^i) truncated at the ambient order.
    return ring.zeta(b, order // i).inflate(i, ring.zero).resized(order, ring.zero)


def factor_exponents(series: TruncatedSeries, ring: LambdaRing) -> FactorExponents:
    """Peel a unit-constant series into zeta-factor exponents, degree by degree.

    Step i reads off the t^i coefficient of the residual and divides out
    zeta of it in t^i, which clears degree i without touching lower
    degrees.  The residual after the last step is 1, so reconstruction is
    exact by construction.
    """
    if series.coeffs[0] != ring.one:
        raise ValueError("factorization requires constant term 1")
    order = series.order
    residual = series
    exponents: list[Any] = []
    for i in range(1, order + 1):
        b = residual.coefficient(i)
        exponents.append(b)
        if b != ring.zero:
            residual = residual.divide(_zeta_power_factor(b, i, order, ring), ring.one)
    return FactorExponents(tuple(exponents))


def power_pow(series: TruncatedSeries, exponent: Any, ring: LambdaRing) -> TruncatedSeries:
    """Raise a series with constant term 1 to a ring-element power."""
    if series.coeffs[0] != ring.one:
        raise ValueError("the series exponential requires constant term 1")
    order = series.order
    if exponent == ring.zero or order == 0:
        return ring.one_series(order)
    factored = factor_exponents(series, ring)
    result = ring.one_series(order)
    for i, b in enumerate(factored.exponents, start=1):
        scaled = exponent * b
        if scaled != ring.zero:
            result = result * _zeta_power_factor(scaled, i, order, ring)
    return result


# -- executable identity checks ------------------------------------------------


def first_mismatch(a: TruncatedSeries, b: TruncatedSeries) -> int | None:
    """Smallest degree where two windows disagree, or None up to the common order."""
    n = min(a.order, b.order)
    for k in range(n + 1):
        if a.coeffs[k] != b.coeffs[k]:
            return k
    return None


def axiom_row(axiom: str, sample: str, order: int, lhs: TruncatedSeries, rhs: TruncatedSeries) -> dict:
    """Report row for one coefficientwise series comparison."""
    mismatch = first_mismatch(lhs, rhs)
    return {
        "axiom": axiom,
        "sample": sample,
        "order": order,
        "pass": mismatch is None,
        "first_mismatch_degree": mismatch,
    }


def verify_power_axioms(
    samples: Sequence[tuple[str, TruncatedSeries, TruncatedSeries, Any, Any]],
    order: int,
    ring: LambdaRing = PAIR_RING,
) -> list[dict]:
    """Check the five exponent laws on (name, A, B, m1, m2) samples.

    Per sample: A^0 = 1, A^1 = A, (A*B)^m1 = A^m1 * B^m1,
    A^(m1+m2) = A^m1 * A^m2, and A^(m1*m2) = (A^m2)^m1, all compared
    coefficientwise exactly.  Failures become report rows, not errors.
    """
    rows: list[dict] = []
    for name, base_a, base_b, m1, m2 in samples:
        a = base_a.resized(order, ring.zero)
        b = base_b.resized(order, ring.zero)
        pow_a_m1 = power_pow(a, m1, ring)
        pow_a_m2 = power_pow(a, m2, ring)
        rows.append(axiom_row("zero-exponent", name, order, power_pow(a, ring.zero, ring), ring.one_series(order)))
        rows.append(axiom_row("unit-exponent", name, order, power_pow(a, ring.one, ring), a))
        rows.append(axiom_row("base-multiplicative", name, order, power_pow(a * b, m1, ring), pow_a_m1 * power_pow(b, m1, ring)))
        rows.append(axiom_row("exponent-additive", name, order, power_pow(a, m1 + m2, ring), pow_a_m1 * pow_a_m2))
        rows.append(axiom_row("exponent-multiplicative", name, order, power_pow(a, m1 * m2, ring), power_pow(pow_a_m2, m1, ring)))
    return rows


def verify_identities(p: PairClass, order: int, sample: str = "") -> list[dict]:
    """Check that the exponential reproduces both generating series.

    (1/(1-t))^p must equal the symmetric-power series of p, and
    (1 + t)^p must equal the configuration series of p.
    """
    label = sample or str(p)
    geometric = PAIR_RING.geometric_series(order)
    binomial = PAIR_RING.one_plus_t(max(order, 1)).resized(order, PAIR_RING.zero)
    return [
        axiom_row(
            "geometric-power-is-zeta", label, order,
            power_pow(geometric, p, PAIR_RING), kapranov_zeta(p, order),
        ),
        axiom_row(
            "binomial-power-is-config", label, order,
            power_pow(binomial, p, PAIR_RING), config_series_pair(p, order),
        ),
    ]
