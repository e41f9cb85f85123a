"""Exception types shared across the package."""


class RSDHError(Exception):
    """Base class for every error raised by rsdh."""


# finite fields

class NotPrime(RSDHError, ValueError):
    pass


class ReducibleModulus(RSDHError, ValueError):
    pass


class DegreeMismatch(RSDHError, ValueError):
    pass


class FieldMismatch(RSDHError, TypeError):
    pass


class DivisionByZero(RSDHError, ZeroDivisionError):
    pass


class ZeroElement(RSDHError, ValueError):
    pass


class CharacteristicTwo(RSDHError, ValueError):
    pass


class CharacteristicNotTwo(RSDHError, ValueError):
    pass


class TrivialField(RSDHError, ValueError):
    """GF(2) has no primitive element of interest; ``element`` carries 1."""

    def __init__(self, message, element=1):
        super().__init__(message)
        self.element = element


class FieldTooLarge(RSDHError, ValueError):
    pass


# polynomials and codes

class DuplicateNode(RSDHError, ValueError):
    pass


class LengthMismatch(RSDHError, ValueError):
    pass


class DegreeOutOfRange(RSDHError, ValueError):
    pass


# distance engine

class TooLarge(RSDHError, RuntimeError):
    """A brute-force or table-based method would exceed its configured cap."""


class OutOfTheoremRange(RSDHError, ValueError):
    pass


class Undecidable(RSDHError, RuntimeError):
    pass


class InconsistencyDetected(RSDHError, AssertionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# constructions

class NoWitness(RSDHError, ValueError):
    pass


class OutOfRange(RSDHError, ValueError):
    pass


class DegenerateConstant(RSDHError, ArithmeticError):
    pass


class SearchExhausted(RSDHError, RuntimeError):
    pass


class ZeroCoefficient(RSDHError, ValueError):
    pass


# cli

class ParseError(RSDHError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        self.reason = message
        if position is not None:
            message = f"{message} at column {position + 1}: {text!r}"
        super().__init__(message)
