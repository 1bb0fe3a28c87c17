"""Exact truncated power series over Python integers.

Everything here works on plain ``int`` coefficients, so values far beyond
64 bits (W(1000, 1) has about 700 bits) stay exact.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Optional, Tuple

from ..core.errors import InvalidParameterError, NonUnitConstantTermError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polynomial:
    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "Polynomial":
        if not terms:
            return cls(())
        if min(terms) < 0:
            raise InvalidParameterError("polynomial powers must be nonnegative")
        dense = [0] * (max(terms) + 1)
        for power, coeff in terms.items():
            dense[power] += coeff
        return cls(dense)

    @property
    def degree(self) -> int:
        """Degree ignoring trailing zeros; -1 for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of x^0 .. x^order of a formal power series."""

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise InvalidParameterError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        _check_order(order)
        return cls((1,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __pow__(self, e: int) -> "TruncatedSeries":
        return series_pow(self, e)

    def truncate(self, order: int) -> "TruncatedSeries":
        _check_order(order)
        if order > self.order:
            raise InvalidParameterError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1])


def _check_order(order: int) -> None:
    if order < 0:
        raise InvalidParameterError(f"truncation order must be >= 0, got {order}")


def _unit_constant(denom: Polynomial) -> int:
    c0 = denom[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTermError(c0)
    return c0


def _divide(values: List[int], denom: Polynomial) -> List[int]:
    """Solve denom * S = values in place, one coefficient at a time."""
    c0 = _unit_constant(denom)
    tail = [(j, d) for j, d in denom.nonzero_terms() if j > 0]
    for i in range(len(values)):
        acc = values[i]
        for j, d in tail:
            if j > i:
                break
            acc -= d * values[i - j]
        # 1/c0 == c0 for a unit
        values[i] = acc * c0
    return values


def series_from_rational(numer: Polynomial, denom: Polynomial, order: int) -> TruncatedSeries:
    _check_order(order)
    values = [numer[i] for i in range(order + 1)]
    return TruncatedSeries(_divide(values, denom))


def w_denominator(r: int, order: Optional[int] = None) -> Polynomial:
    """1 - 2x + x^r - x^(r+1), dropping powers above ``order`` when given."""
    if r < 1:
        raise InvalidParameterError(f"run length r must be >= 1, got {r}")
    terms = {0: 1, 1: -2}
    terms[r] = terms.get(r, 0) + 1
    terms[r + 1] = terms.get(r + 1, 0) - 1
    if order is not None:
        terms = {p: c for p, c in terms.items() if p <= order}
    return Polynomial.from_terms(terms)


W_NUMERATOR = Polynomial((1, -1))


def w_series(r: int, order: int) -> TruncatedSeries:
    """W_r(x) = (1 - x) / (1 - 2x + x^r - x^(r+1)) up to x^order."""
    _check_order(order)
    series = series_from_rational(W_NUMERATOR, w_denominator(r, order), order)
    logger.debug("expanded W_%d to order %d", r, order)
    return series


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.order != b.order:
        raise InvalidParameterError(
            f"cannot multiply series of orders {a.order} and {b.order}"
        )
    ac, bc = a.coeffs, b.coeffs
    # leading zeros of either factor contribute nothing
    lo_a = next((i for i, c in enumerate(ac) if c), len(ac))
    lo_b = next((i for i, c in enumerate(bc) if c), len(bc))
    out = [0] * len(ac)
    for n in range(lo_a + lo_b, len(ac)):
        out[n] = sum(ac[i] * bc[n - i] for i in range(lo_a, n - lo_b + 1))
    return TruncatedSeries(out)


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        raise InvalidParameterError(f"exponent must be >= 0, got {e}")
    result = TruncatedSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_mul_rational(a: TruncatedSeries, numer: Polynomial, denom: Polynomial) -> TruncatedSeries:
    """a * numer / denom at a's order, without expanding numer / denom first."""
    ac = a.coeffs
    terms = numer.nonzero_terms()
    values = []
    for i in range(len(ac)):
        acc = 0
        for j, c in terms:
            if j > i:
                break
            acc += c * ac[i - j]
        values.append(acc)
    return TruncatedSeries(_divide(values, denom))
