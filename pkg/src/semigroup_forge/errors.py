"""Exception hierarchy.

Input problems derive from ``InputError`` (a ``ValueError``), which the CLI
maps to exit code 2.
"""


class SemigroupForgeError(Exception):
    pass


class InputError(SemigroupForgeError, ValueError):
    pass


# core semigroup
class EmptyGenerators(InputError):
    pass


class NotNumerical(InputError):
    pass


class GeneratorTooLarge(InputError):
    pass


class MNotInSemigroup(InputError):
    pass


# kunz
class InvalidKunzPoint(InputError):
    pass


class WrongMultiplicity(InputError):
    pass


class OutsideCone(InputError):
    pass


# puiseux / planarity
class NotIncreasing(InputError):
    pass


class InvalidCharacteristic(InputError):
    pass


class NotPlanar(InputError):
    pass


class NotMinimalGenerators(InputError):
    pass


# series oracle
class NotWellParameterized(InputError):
    def __init__(self, message, g=None):
        super().__init__(message)
        self.g = g


class Divergence(SemigroupForgeError, RuntimeError):
    pass


# honest dimension
class NotInterior(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class WrongFamily(InputError):
    pass


class WitnessVerificationFailed(SemigroupForgeError, RuntimeError):
    """Raised when a constructed witness does not check out; always a bug."""


# parsing
class ParseError(InputError):
    def __init__(self, message, offset=None, expected=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset
        self.expected = expected


class ZeroOrNegative(InputError):
    pass


class NonzeroConstantTerm(InputError):
    pass


class DuplicateCoordinate(InputError):
    pass
