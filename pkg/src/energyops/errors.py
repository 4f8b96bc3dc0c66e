"""Exception types shared across the package."""


class EnergyOpsError(Exception):
    """Base class for all domain errors raised by this package."""


class NonIntegrableAtom(EnergyOpsError):
    """An antiderivative from -infinity was requested for an atom with
    Re(lambda) <= 0, where the defining integral does not converge."""


class NotReciprocable(EnergyOpsError):
    """1/f requested for an f that is not a single degree-0 atom."""


class InvalidOrder(EnergyOpsError):
    """Decomposition requested with derivative order < 1 or power < 2."""


class UnsupportedOrder(EnergyOpsError):
    """Derivative order outside the implemented range."""


class StencilOutOfRange(EnergyOpsError):
    """A finite-difference stencil would reach past the sampling grid."""


class IdentityViolation(EnergyOpsError):
    """An identity the algebra guarantees failed to hold exactly.

    This only fires when an implementation invariant is broken; it is the
    signal the mutation canary relies on."""


class ParseError(EnergyOpsError):
    """Expression syntax error, with position and the tokens that would
    have been accepted there."""

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += " (expected: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)
