"""
exceptions - Exception subclasses relevant to bihilbert operations.
"""


class BiHilbertException(ValueError):
    """
    Thrown for general exceptions handled by bihilbert.
    """
    pass


class MaxSizeException(ValueError):
    """
    Thrown when a spanning-set matrix for a single Hilbert function cell
    exceeds the allowable number of entries.
    """
    pass


class ParseException(BiHilbertException):
    """
    Thrown after a presentation document or polynomial string parse error.
    """
    pass


class GradingException(ParseException):
    """
    Thrown when a generator is not homogeneous of its declared (bi)degree.
    """
    pass


class ColonDataException(BiHilbertException):
    """
    Thrown when colon ideal data violates its ordering constraints.
    """
    pass


class UnisolventException(BiHilbertException):
    """
    Thrown when an interpolation system is singular.
    """
    def __init__(self, msg: str = "interpolation grid not unisolvent") -> None:
        super().__init__(msg)


class UnluckyPrimeException(BiHilbertException):
    """
    Thrown when a prime divides the denominator of a matrix entry.
    """
    def __init__(self, prime: int) -> None:
        super().__init__(
            "prime {} divides an entry denominator; retry with another prime".format(prime))
        self.prime = prime


class StabilizationException(BiHilbertException):
    """
    Thrown when no validated polynomial is found within the retry budget.
    """
    pass


class HypothesisException(BiHilbertException):
    """
    Thrown when a diagonal (c, e) does not satisfy c > d*e.
    """
    pass
