"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class DressianError(Exception):
    exit_code = 3


class InputError(DressianError, ValueError):
    exit_code = 1


class MalformedSubset(InputError):
    pass


class EmptyBasisSet(InputError):
    pass


class AxiomViolation(InputError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAMatroid(AxiomViolation):
    pass


class UnknownName(InputError):
    pass


class InvalidSizes(InputError):
    pass


class MissingCoordinate(InputError):
    pass


class DimMismatch(InputError):
    pass


class VacuousInput(InputError):
    pass


class MonomialRelation(DressianError):
    pass


class InternalCycle(DressianError):
    pass


class Overflow(DressianError):
    exit_code = 2
