from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator

Statistic = Literal["runs", "success-runs"]
Scope = Literal["prefix0", "all"]


class CountTriple(BaseModel):
    """Query parameters (n, r, k). n >= k*r is not required; such queries count 0."""

    model_config = ConfigDict(frozen=True)

    n: NonNegativeInt
    r: PositiveInt
    k: NonNegativeInt


class Pmf(BaseModel):
    """Exact distribution of the run count: entry k is numerators[k] / 2^denominator_exponent."""

    model_config = ConfigDict(frozen=True)

    n: PositiveInt
    r: PositiveInt
    statistic: Statistic = "runs"
    numerators: List[int]
    denominator_exponent: NonNegativeInt

    @model_validator(mode="after")
    def check_normalized(self) -> "Pmf":
        if any(c < 0 for c in self.numerators):
            raise ValueError("numerators must be nonnegative")
        if self.denominator_exponent != self.n - 1:
            raise ValueError("denominator exponent must be n - 1")
        if sum(self.numerators) != 1 << self.denominator_exponent:
            raise ValueError("numerators do not sum to 2^(n-1)")
        return self

    @property
    def k_max(self) -> int:
        return len(self.numerators) - 1

    def probability(self, k: int) -> Fraction:
        if 0 <= k < len(self.numerators):
            return Fraction(self.numerators[k], 1 << self.denominator_exponent)
        return Fraction(0)

    def total(self) -> Fraction:
        return Fraction(sum(self.numerators), 1 << self.denominator_exponent)


class OutputRecord(BaseModel):
    k: int
    count: str
    prob_num: str
    prob_den_exp: int
    prob_float: float


class Mismatch(BaseModel):
    check: str
    n: int
    r: Optional[int] = None
    k: Optional[int] = None
    formula: str
    oracle: str

    def describe(self) -> str:
        where = f"n={self.n}"
        if self.r is not None:
            where += f" r={self.r}"
        if self.k is not None:
            where += f" k={self.k}"
        return f"{self.check} {where}: formula={self.formula} oracle={self.oracle}"


class VerificationReport(BaseModel):
    n_max: int
    r_max: Optional[int] = None
    checks_run: int = 0
    mismatches: List[Mismatch] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches
