"""Counting functions for maximal runs in binary words that begin with 0.

N(n, r, k) is the number of such words of length n with exactly k maximal
runs of length r. Its generating function is x^(kr) * W_r(x)^(k+1), where
W_r(x) = (1 - x) / (1 - 2x + x^r - x^(r+1)) enumerates the r-run-free words.
M(n, r, k), the count with exactly k runs of 1s of length r, equals
N(n, r + 1, k).
"""
import logging
import time
from typing import Dict, List

from pydantic import ValidationError

from ..core.errors import InvalidParameterError
from ..schemas.runs import CountTriple, Pmf, Scope, Statistic
from .series import W_NUMERATOR, series_mul_rational, series_pow, w_denominator, w_series

logger = logging.getLogger(__name__)


def make_triple(n: int, r: int, k: int) -> CountTriple:
    try:
        return CountTriple(n=n, r=r, k=k)
    except ValidationError as e:
        errors = "; ".join(f"{err['loc'][0]}: {err['msg']}" for err in e.errors())
        raise InvalidParameterError(f"invalid query (n={n}, r={r}, k={k}): {errors}") from e


def _check_r(r: int) -> None:
    if r < 1:
        raise InvalidParameterError(f"run length r must be >= 1, got {r}")


class RunCounter:
    """One counting context. W tables are cached per instance, keyed by r."""

    def __init__(self):
        self._w_tables: Dict[int, List[int]] = {}

    def w_count(self, n: int, r: int) -> int:
        _check_r(r)
        if n < 0:
            return 0
        table = self._w_tables.setdefault(r, [])
        while len(table) <= n:
            m = len(table)
            if m == 0:
                value = 1
            elif m == 1:
                value = 0 if r == 1 else 1
            else:
                value = 2 * table[m - 1]
                if m - r >= 0:
                    value -= table[m - r]
                if m - r - 1 >= 0:
                    value += table[m - r - 1]
            table.append(value)
        return table[n]

    def count_exact_runs(self, q: CountTriple) -> int:
        m = q.n - q.k * q.r
        if m < 0:
            return 0
        w = w_series(q.r, m)
        if q.k == 0:
            return w[m]
        return series_pow(w, q.k + 1)[m]

    def count_success_runs(self, q: CountTriple) -> int:
        return self.count_exact_runs(CountTriple(n=q.n, r=q.r + 1, k=q.k))

    def count_all_words(self, q: CountTriple) -> int:
        count = self.count_exact_runs(q)
        return 2 * count if q.n >= 1 else count

    def count(self, q: CountTriple, scope: Scope = "prefix0", statistic: Statistic = "runs") -> int:
        """The count behind ``count``: exact or success runs, over B0 or all words."""
        if statistic == "runs":
            return self.count_all_words(q) if scope == "all" else self.count_exact_runs(q)
        if scope == "all":
            # prefixing a 0 maps all words of length n onto B0(n + 1), keeping the runs of 1s
            return self.count_success_runs(CountTriple(n=q.n + 1, r=q.r, k=q.k))
        return self.count_success_runs(q)

    def pmf(self, n: int, r: int) -> Pmf:
        if n < 1:
            raise InvalidParameterError(f"the distribution needs n >= 1, got {n}")
        _check_r(r)
        return self._distribution(n, r, r, "runs")

    def success_pmf(self, n: int, r: int) -> Pmf:
        if n < 1:
            raise InvalidParameterError(f"the distribution needs n >= 1, got {n}")
        _check_r(r)
        return self._distribution(n, r + 1, r, "success-runs")

    def _distribution(self, n: int, run_length: int, r: int, statistic: str) -> Pmf:
        started = time.perf_counter()
        denom = w_denominator(run_length, n)
        # power holds W^(k+1) truncated at n - k*run_length
        power = w_series(run_length, n)
        numerators = []
        for k in range(n // run_length + 1):
            m = n - k * run_length
            numerators.append(power[m])
            if m - run_length >= 0:
                power = series_mul_rational(power.truncate(m - run_length), W_NUMERATOR, denom)
        logger.info(
            "computed %s distribution n=%d r=%d (%d entries) in %.3fs",
            statistic, n, r, len(numerators), time.perf_counter() - started,
        )
        return Pmf(n=n, r=r, statistic=statistic, numerators=numerators, denominator_exponent=n - 1)


def w_count(n: int, r: int) -> int:
    return RunCounter().w_count(n, r)


def count_exact_runs(q: CountTriple) -> int:
    return RunCounter().count_exact_runs(q)


def count_success_runs(q: CountTriple) -> int:
    return RunCounter().count_success_runs(q)


def count_all_words(q: CountTriple) -> int:
    return RunCounter().count_all_words(q)


def pmf(n: int, r: int) -> Pmf:
    return RunCounter().pmf(n, r)


def success_pmf(n: int, r: int) -> Pmf:
    return RunCounter().success_pmf(n, r)
