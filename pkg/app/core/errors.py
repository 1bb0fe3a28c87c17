"""Exceptions raised by the counting library."""


class RunCountError(ValueError):
    """Base class for every error the library raises on bad input."""


class InvalidParameterError(RunCountError):
    pass


class NonUnitConstantTermError(RunCountError):
    def __init__(self, coefficient: int):
        self.coefficient = coefficient
        super().__init__(
            f"denominator constant term must be +1 or -1, got {coefficient}"
        )


class EnumerationLimitError(RunCountError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(
            f"refusing to enumerate words of length {n}: limit is {limit}"
        )
