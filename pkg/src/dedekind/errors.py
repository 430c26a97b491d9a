"""Exception types for invalid arguments and violated hypotheses.

Everything derives from ValueError so callers can catch invalid input
generically; the CLI maps any ValueError to exit code 2.
"""


class NotCoprime(ValueError):
    """Arguments required to be coprime share a common factor."""


class ModuliNotCoprime(ValueError):
    """CRT moduli share a common factor."""


class NotOddPrime(ValueError):
    """A modulus required to be an odd prime is 2 or composite."""


class NotSquareFree(ValueError):
    """A modulus required to be square-free has a repeated prime factor."""


class NonPositiveQ(ValueError):
    """The three-term modulus m*d - n*c is not positive."""


class BadEps(ValueError):
    """A sign parameter is neither +1 nor -1."""


class HypothesisViolated(ValueError):
    """A family construction hypothesis fails; the message names it."""


class RangeViolated(ValueError):
    """An exponent parameter is outside its admissible range."""


class IneligiblePrime(ValueError):
    """A prime fails an eligibility condition; the message names it."""


class DuplicatePrime(ValueError):
    """A prime list contains repeats."""
