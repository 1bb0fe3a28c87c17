"""Brute-force ground truth for the counting formulas.

Words are tuples of 0/1 ints. B0(n) is the set of length-n words that begin
with 0 (just the empty word when n = 0).
"""
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from ..core.config import settings
from ..core.errors import EnumerationLimitError, InvalidParameterError


BinaryWord = Tuple[int, ...]


class Run(NamedTuple):
    symbol: int
    length: int


RunProfile = Tuple[Run, ...]


def parse_word(text: str) -> BinaryWord:
    if any(ch not in "01" for ch in text):
        raise InvalidParameterError(f"not a binary word: {text!r}")
    return tuple(int(ch) for ch in text)


def render_word(w: BinaryWord) -> str:
    return "".join(str(b) for b in w)


def _check_limit(n: int, limit: Optional[int]) -> None:
    if n < 0:
        raise InvalidParameterError(f"word length must be >= 0, got {n}")
    limit = settings.ORACLE_MAX_N if limit is None else limit
    if n > limit:
        raise EnumerationLimitError(n, limit)


def _require_b0(w: BinaryWord) -> None:
    if w and w[0] != 0:
        raise InvalidParameterError(f"word {render_word(w)} does not begin with 0")


def enumerate_b0(n: int, limit: Optional[int] = None) -> Iterator[BinaryWord]:
    """All words of B0(n) in lexicographic order."""
    _check_limit(n, limit)
    if n == 0:
        yield ()
        return
    for tail in itertools.product((0, 1), repeat=n - 1):
        yield (0,) + tail


def run_profile(w: BinaryWord) -> RunProfile:
    return tuple(Run(symbol, sum(1 for _ in group)) for symbol, group in itertools.groupby(w))


def profile_word(profile: RunProfile) -> BinaryWord:
    return tuple(b for run in profile for b in (run.symbol,) * run.length)


def count_runs_of_length(profile: RunProfile, r: int, symbol: Optional[int] = None) -> int:
    return sum(1 for run in profile if run.length == r and (symbol is None or run.symbol == symbol))


def complement(w: BinaryWord) -> BinaryWord:
    return tuple(1 - b for b in w)


def witnesses_exact(n: int, r: int, k: int, limit: Optional[int] = None) -> List[BinaryWord]:
    return [w for w in enumerate_b0(n, limit) if count_runs_of_length(run_profile(w), r) == k]


def brute_count_exact(n: int, r: int, k: int, limit: Optional[int] = None) -> int:
    return sum(1 for w in enumerate_b0(n, limit) if count_runs_of_length(run_profile(w), r) == k)


def brute_count_success(n: int, r: int, k: int, limit: Optional[int] = None) -> int:
    return sum(1 for w in enumerate_b0(n, limit) if count_runs_of_length(run_profile(w), r, symbol=1) == k)


def brute_distribution(n: int, r: int, success: bool = False, limit: Optional[int] = None) -> Dict[int, int]:
    """k -> number of words in B0(n) with exactly k (success) runs of length r."""
    symbol = 1 if success else None
    tally = Counter(count_runs_of_length(run_profile(w), r, symbol) for w in enumerate_b0(n, limit))
    return dict(tally)


def gamma(w: BinaryWord) -> BinaryWord:
    """Replace each maximal run by a 0 followed by 1s, keeping its length."""
    _require_b0(w)
    out: List[int] = []
    for run in run_profile(w):
        out.append(0)
        out.extend((1,) * (run.length - 1))
    return tuple(out)


def gamma_inv(w: BinaryWord) -> BinaryWord:
    _require_b0(w)
    out: List[int] = []
    block = -1
    for b in w:
        if b == 0:
            block += 1
        out.append(block % 2)
    return tuple(out)


@dataclass(frozen=True)
class RunDecomposition:
    """w = free[0] runs[0] free[1] ... runs[k-1] free[k]."""

    r: int
    free: Tuple[BinaryWord, ...]
    runs: Tuple[BinaryWord, ...]

    def assemble(self) -> BinaryWord:
        out: List[int] = list(self.free[0])
        for run, segment in zip(self.runs, self.free[1:]):
            out.extend(run)
            out.extend(segment)
        return tuple(out)


def decompose(w: BinaryWord, r: int) -> RunDecomposition:
    """Split w around its maximal runs of length r."""
    if r < 1:
        raise InvalidParameterError(f"run length r must be >= 1, got {r}")
    free: List[BinaryWord] = []
    runs: List[BinaryWord] = []
    segment: List[int] = []
    for run in run_profile(w):
        block = (run.symbol,) * run.length
        if run.length == r:
            free.append(tuple(segment))
            runs.append(block)
            segment = []
        else:
            segment.extend(block)
    free.append(tuple(segment))
    return RunDecomposition(r=r, free=tuple(free), runs=tuple(runs))
