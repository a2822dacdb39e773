"""Exception hierarchy.

Input problems subclass :class:`InputError` (CLI exit code 1); a closed form
that fails its own validation raises :class:`InternalInconsistency` (exit 2).
"""


class EvoderError(Exception):
    pass


class InputError(EvoderError, ValueError):
    pass


class MalformedInput(InputError):
    pass


class LoopEdge(InputError):
    pass


class LabelOutOfRange(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ConnectivityError(InputError):
    pass


class SizeTooSmall(InputError):
    pass


class InvalidClass(InputError):
    pass


class InvalidFamilyParams(InputError):
    pass


class InternalInconsistency(EvoderError, RuntimeError):
    pass
