"""The differential energy operator families.

Every family here combines a function f, its first derivative, and its
signed-order (k-1)-th and k-th derivatives:

    value = scale * (cross * f' * f^(k-1)  +  ff_sign * f * f^(k))

with (cross, ff_sign, scale) taken from one table, ``FAMILY_DEFS``.  The
table is the single source of truth: the pointwise ``apply``, the fused
evaluation used by decomposition plans, and the (psi+, psi-) coordinate
of each family are all derived from it, so a deliberately injected sign
mutation is visible to every consumer at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import ExpPoly
from .errors import NonIntegrableAtom
from .scalars import ExactScalar

_TAGS = ("psi+", "psi-", "gamma+", "theta+", "theta-", "eta")

# tag -> (cross, ff_sign, scale); scale None means (p-1)/2 from the
# family's power parameter.
FAMILY_DEFS = {
    "psi+": (1, 1, Fraction(1)),
    "psi-": (1, -1, Fraction(1)),
    "gamma+": (1, 1, Fraction(3, 2)),
    "theta+": (1, 1, None),
    "theta-": (1, -1, None),
    "eta": (3, -1, Fraction(1)),
}


@dataclass(frozen=True)
class OperatorFamily:
    """Identifier for one operator family; theta variants carry their
    power parameter p >= 2."""

    tag: str
    p: int | None = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.tag.startswith("theta"):
            if self.p is None or self.p < 2:
                raise ValueError("theta families need p >= 2")
        elif self.p is not None:
            raise ValueError(f"{self.tag} takes no power parameter")

    @property
    def name(self) -> str:
        """Wire name: psi+, psi-, gamma+, theta+:p, theta-:p, eta."""
        if self.p is not None:
            return f"{self.tag}:{self.p}"
        return self.tag

    @classmethod
    def from_name(cls, name: str) -> "OperatorFamily":
        if ":" in name:
            tag, _, p = name.partition(":")
            return cls(tag, int(p))
        return cls(name)

    def definition(self) -> tuple[ExactScalar, ExactScalar, ExactScalar]:
        cross, ff_sign, scale = FAMILY_DEFS[self.tag]
        if scale is None:
            scale = Fraction(self.p - 1, 2)
        return ExactScalar(cross), ExactScalar(ff_sign), ExactScalar(scale)

    def __str__(self):
        return self.name


PSI_PLUS = OperatorFamily("psi+")
PSI_MINUS = OperatorFamily("psi-")
GAMMA_PLUS = OperatorFamily("gamma+")
ETA = OperatorFamily("eta")


def theta_plus(p: int) -> OperatorFamily:
    return OperatorFamily("theta+", p)


def theta_minus(p: int) -> OperatorFamily:
    return OperatorFamily("theta-", p)


def apply(family: OperatorFamily, k: int, f: ExpPoly) -> ExpPoly:
    """Operator of order k applied to f, by the defining combination.

    For k <= 0 the signed-order derivatives integrate from -infinity,
    so the operand must be antiderivable (NonIntegrableAtom otherwise).
    """
    cross, ff_sign, scale = family.definition()
    fdot = f.derivative()
    fk1 = f.signed_derivative(k - 1)
    fk = f.signed_derivative(k)
    value = (fdot * fk1).scale(cross) + (f * fk).scale(ff_sign)
    return value.scale(scale)


def apply_to_derivative(family: OperatorFamily, k: int, f: ExpPoly,
                        operand_deriv: int = 0) -> ExpPoly:
    """Operator of order k applied to the operand_deriv-th derivative
    of f, with the factor orders folded onto f itself.

    Folding turns every factor into a single signed-order derivative of
    f (orders j+1, j+k-1, j, j+k for j = operand_deriv), which is how
    decomposition sums stay inside the algebra: for the emitted plans
    all four orders are nonnegative, so trigonometric operands work
    wherever no operator of negative order appears.  A negative k still
    demands an antiderivable f -- the individual term is only defined
    through integrals from -infinity in that case.
    """
    if operand_deriv < 0:
        raise ValueError("operand derivative order must be >= 0")
    if k < 0 and not f.is_antiderivable():
        raise NonIntegrableAtom(
            f"operator order {k} < 0 needs an antiderivable operand")
    j = operand_deriv
    cross, ff_sign, scale = family.definition()
    value = ((f.signed_derivative(j + 1) * f.signed_derivative(j + k - 1))
             .scale(cross)
             + (f.signed_derivative(j) * f.signed_derivative(j + k))
             .scale(ff_sign))
    return value.scale(scale)


def family_coefficients(family: OperatorFamily) -> tuple[ExactScalar, ExactScalar]:
    """Coordinates (a1, a2) of the family in the (psi+, psi-) basis:
    family_k = a1 * psi+_k + a2 * psi-_k."""
    cross, ff_sign, scale = family.definition()
    half = ExactScalar(Fraction(1, 2))
    a1 = (cross + ff_sign) * half * scale
    a2 = (cross - ff_sign) * half * scale
    return a1, a2


def p_minus_bilinear(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    """Symmetric bilinear form whose quadratic form is the classical
    second-order minus-type operator: P(f, f) = f'^2 - f*f''."""
    fdot, gdot = f.derivative(), g.derivative()
    half = ExactScalar(Fraction(1, 2))
    return ((fdot * gdot + gdot * fdot).scale(half)
            - (f * gdot.derivative() + fdot.derivative() * g).scale(half))


def chain_rule_residual(family: OperatorFamily, k: int, f: ExpPoly) -> ExpPoly:
    """d/dt T_k(f) - T_{k+1}(f) - T_{k-1}(f'); identically zero for
    every family in the table."""
    return (apply(family, k, f).derivative()
            - apply(family, k + 1, f)
            - apply(family, k - 1, f.derivative()))
