"""Formula-versus-enumeration sweep behind ``verify``."""
import logging
from collections import Counter
from typing import Callable, Optional

from ..core.config import settings
from ..core.errors import EnumerationLimitError
from ..schemas.runs import CountTriple, Mismatch, VerificationReport
from . import counts, oracle

logger = logging.getLogger(__name__)

CountFn = Callable[[CountTriple], int]


def run_verification(
    n_max: int,
    r_max: Optional[int] = None,
    counter: CountFn = counts.count_exact_runs,
    success_counter: CountFn = counts.count_success_runs,
    limit: Optional[int] = None,
) -> VerificationReport:
    """Check every (n, r, k) with n <= n_max against exhaustive enumeration.

    Covers exact-run counts, success-run counts, the gamma round trip and
    run coding on every word, and normalization of each row over k. Words
    are enumerated once per n and only the per-(r, k) tallies are kept.
    """
    limit = settings.ORACLE_MAX_N if limit is None else limit
    if n_max > limit:
        raise EnumerationLimitError(n_max, limit)
    report = VerificationReport(n_max=n_max, r_max=r_max)

    def record(check: str, n: int, r: Optional[int], k: Optional[int], formula, expected) -> None:
        report.checks_run += 1
        if formula != expected:
            report.mismatches.append(
                Mismatch(check=check, n=n, r=r, k=k, formula=str(formula), oracle=str(expected))
            )

    def check_word(check: str, n: int, word: oracle.BinaryWord, got: oracle.BinaryWord) -> None:
        report.checks_run += 1
        if got != word:
            report.mismatches.append(
                Mismatch(check=check, n=n, formula=oracle.render_word(got), oracle=oracle.render_word(word))
            )

    for n in range(0, n_max + 1):
        top_r = max(n, 1) if r_max is None else min(max(n, 1), r_max)
        # r -> Counter of k over the words of length n; words are streamed, not stored
        exact = {r: Counter() for r in range(1, top_r + 2)}
        success = {r: Counter() for r in range(1, top_r + 1)}
        coded = {r: Counter() for r in range(1, top_r + 1)}

        seen = 0
        for w in oracle.enumerate_b0(n, limit):
            seen += 1
            image = oracle.gamma(w)
            check_word("gamma-roundtrip", n, w, oracle.gamma_inv(image))
            check_word("gamma-inverse", n, w, oracle.gamma(oracle.gamma_inv(w)))

            profile = oracle.run_profile(w)
            lengths = Counter(run.length for run in profile)
            ones = Counter(run.length for run in profile if run.symbol == 1)
            coded_ones = Counter(run.length for run in oracle.run_profile(image) if run.symbol == 1)
            for r, tally in exact.items():
                tally[lengths[r]] += 1
            for r in success:
                success[r][ones[r]] += 1
                coded[r][coded_ones[r]] += 1

        for r in range(1, top_r + 1):
            total = 0
            for k in range(0, n // r + 1):
                q = CountTriple(n=n, r=r, k=k)
                value = counter(q)
                total += value
                record("exact", n, r, k, value, exact[r][k])
                record("success", n, r, k, success_counter(q), success[r][k])
                # gamma should carry runs of length r+1 to success runs of length r
                record("gamma-coding", n, r, k, coded[r][k], exact[r + 1][k])
            record("normalization", n, r, None, total, 1 << (n - 1) if n else 1)

        logger.debug("verified n=%d (%d words)", n, seen)

    logger.info(
        "verification up to n=%d: %d checks, %d mismatches",
        n_max, report.checks_run, len(report.mismatches),
    )
    return report
