import pytest

from app.cli import main
from app.services.counts import RunCounter
from app.services.series import Polynomial, series_from_rational, series_pow


@pytest.fixture
def counter():
    return RunCounter()


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit status, stdout, stderr)."""

    def _run(*argv):
        status = main(list(argv))
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return _run


@pytest.fixture
def mutated_counter():
    """N(n, r, k) from a denominator with the sign of x^(r+1) flipped."""

    def _count(q):
        m = q.n - q.k * q.r
        if m < 0:
            return 0
        terms = {0: 1, 1: -2}
        terms[q.r] = terms.get(q.r, 0) + 1
        terms[q.r + 1] = terms.get(q.r + 1, 0) + 1
        w = series_from_rational(Polynomial((1, -1)), Polynomial.from_terms(terms), m)
        return series_pow(w, q.k + 1)[m]

    return _count
