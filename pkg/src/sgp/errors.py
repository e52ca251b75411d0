"""Exception types raised by the toolkit."""

from __future__ import annotations


class SemigroupError(ValueError):
    """Base class for every input/contract error raised by sgp."""


class GcdNotOne(SemigroupError):
    def __init__(self, gens, gcd: int) -> None:
        super().__init__(f"gcd of generators {list(gens)} is {gcd}; complement would be infinite")
        self.gcd = gcd


class IntegerOverflow(SemigroupError):
    """Input too large for the signed 64-bit contract."""


class NotClosed(SemigroupError):
    def __init__(self, a: int, b: int) -> None:
        super().__init__(f"not additively closed: {a} + {b} = {a + b} is listed as a gap")
        self.a = a
        self.b = b


class NotMember(SemigroupError):
    def __init__(self, n: int) -> None:
        super().__init__(f"{n} is not a nonzero element of the semigroup")
        self.n = n


class NoSecondGenerator(SemigroupError):
    """Raised for the naturals, whose minimal generating system is {1}."""


class BadParameters(SemigroupError):
    pass


class Divides(SemigroupError):
    def __init__(self, frobenius: int, multiplicity: int) -> None:
        super().__init__(f"{multiplicity} divides {frobenius}; F would lie in <m>")
        self.frobenius = frobenius
        self.multiplicity = multiplicity


class CapExceeded(SemigroupError):
    pass


class UnknownTheorem(SemigroupError):
    pass


class UnknownPredicate(SemigroupError):
    pass
