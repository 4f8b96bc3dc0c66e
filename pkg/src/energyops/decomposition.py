"""Decomposition plans: derivatives of powers of f as operator sums.

A plan is inspectable data, not an opaque evaluator: every term records
its binomial weight, rational prefactor, operator family and order, the
derivative order of the operand, and the cofactor (a power of f with a
derivative order, recursively planned when the power exceeds 1).

Terms evaluate through the fused form in
:func:`energyops.operators.apply_to_derivative`, so a materialized plan
is an exact product-rule identity in the algebra; only genuinely
negative operator orders demand an antiderivable f.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .algebra import ExpPoly, recip_single_atom
from .errors import IdentityViolation, InvalidOrder, UnsupportedOrder
from .operators import (OperatorFamily, PSI_MINUS, PSI_PLUS, apply,
                        apply_to_derivative)
from .scalars import ClosedFormValue, ExactScalar


@dataclass(frozen=True)
class PlanTerm:
    binom: int
    prefactor: ExactScalar
    family: OperatorFamily
    order_k: int
    operand_deriv: int
    cofactor_power: int
    cofactor_deriv: int
    subplan: "DecompositionPlan | None" = None

    def value(self, f: ExpPoly) -> ExpPoly:
        op = apply_to_derivative(self.family, self.order_k, f,
                                 self.operand_deriv)
        weight = self.prefactor * ExactScalar(self.binom)
        return (op * self._cofactor(f)).scale(weight)

    def _cofactor(self, f: ExpPoly) -> ExpPoly:
        q, d = self.cofactor_power, self.cofactor_deriv
        if q == 0:
            return ExpPoly.one() if d == 0 else ExpPoly.zero()
        if q == 1:
            return f.derivative(d)
        if d == 0:
            return f.pow(q)
        if self.subplan is not None:
            return self.subplan.materialize(f)
        return f.pow(q).derivative(d)

    def to_json(self):
        return {
            "binom": self.binom,
            "prefactor": str(Fraction(self.prefactor.real)),
            "family": self.family.name,
            "k": self.order_k,
            "operand_deriv": self.operand_deriv,
            "cofactor_power": self.cofactor_power,
            "cofactor_deriv": self.cofactor_deriv,
            "subplan": self.subplan.to_json() if self.subplan else None,
        }

    @classmethod
    def from_json(cls, obj) -> "PlanTerm":
        return cls(
            binom=int(obj["binom"]),
            prefactor=ExactScalar(Fraction(obj["prefactor"])),
            family=OperatorFamily.from_name(obj["family"]),
            order_k=int(obj["k"]),
            operand_deriv=int(obj["operand_deriv"]),
            cofactor_power=int(obj["cofactor_power"]),
            cofactor_deriv=int(obj["cofactor_deriv"]),
            subplan=(DecompositionPlan.from_json(obj["subplan"])
                     if obj.get("subplan") else None),
        )


@dataclass(frozen=True)
class DecompositionPlan:
    """Plan for writing the v-th derivative of f**n as operator terms."""

    n: int
    v: int
    terms: tuple[PlanTerm, ...] = field(default_factory=tuple)

    def materialize(self, f: ExpPoly) -> ExpPoly:
        total = ExpPoly.zero()
        for term in self.terms:
            total = total + term.value(f)
        return total

    def verify(self, f: ExpPoly) -> ExpPoly:
        """Residual against the direct derivative; zero by contract."""
        return self.materialize(f) - f.pow(self.n).derivative(self.v)

    def substitute_family(self, family: OperatorFamily) -> "DecompositionPlan":
        """Same structure with every operator replaced by ``family``
        (used for the non-uniqueness counterexample)."""
        new_terms = tuple(
            PlanTerm(t.binom, t.prefactor, family, t.order_k,
                     t.operand_deriv, t.cofactor_power, t.cofactor_deriv,
                     t.subplan.substitute_family(family) if t.subplan else None)
            for t in self.terms)
        return DecompositionPlan(self.n, self.v, new_terms)

    def to_json(self):
        return {"n": self.n, "v": self.v,
                "terms": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, obj) -> "DecompositionPlan":
        return cls(int(obj["n"]), int(obj["v"]),
                   tuple(PlanTerm.from_json(t) for t in obj["terms"]))


def decompose_power(v: int, n: int, variant: str = "plus_only") -> DecompositionPlan:
    """Plan for the v-th derivative of f**n, n >= 2.

    ``plus_only`` uses the plus family alone; ``plus_minus`` adds the
    mirrored minus-family terms (whose own sum vanishes identically).
    Cofactors f**(n-2) recurse into sub-plans until the power reaches
    0 or 1, which stay literal.
    """
    if v < 1 or n < 2:
        raise InvalidOrder(f"need v >= 1 and n >= 2, got v={v}, n={n}")
    if variant not in ("plus_only", "plus_minus"):
        raise InvalidOrder(f"unknown variant {variant!r}")
    s = v - 1
    prefactor = ExactScalar(Fraction(n, 2))
    families = (PSI_PLUS,) if variant == "plus_only" else (PSI_PLUS, PSI_MINUS)
    terms = []
    for k in range(s, -1, -1):
        cof_d = s - k
        cof_q = n - 2
        if cof_q == 0 and cof_d > 0:
            continue  # derivative of the constant cofactor f^0
        subplan = None
        if cof_q >= 2 and cof_d >= 1:
            subplan = decompose_power(cof_d, cof_q, variant)
        outer = comb(s, k)
        for fam in families:
            for i in range(k, -1, -1):
                terms.append(PlanTerm(
                    binom=outer * comb(k, i),
                    prefactor=prefactor,
                    family=fam,
                    order_k=2 * i + 1 - k,
                    operand_deriv=k - i,
                    cofactor_power=cof_q,
                    cofactor_deriv=cof_d,
                    subplan=subplan,
                ))
    return DecompositionPlan(n, v, tuple(terms))


def decompose_square(v: int) -> DecompositionPlan:
    return decompose_power(v, 2)


def decompose_cube(v: int) -> DecompositionPlan:
    return decompose_power(v, 3)


def materialize(plan: DecompositionPlan, f: ExpPoly) -> ExpPoly:
    return plan.materialize(f)


def verify(plan: DecompositionPlan, f: ExpPoly) -> ExpPoly:
    return plan.verify(f)


# -- binomial ladders of single operators -----------------------------

def a_plus(s: int, f: ExpPoly) -> ExpPoly:
    """Binomial ladder of plus-type operators equal to the s-th
    derivative of f**2.

    Checks the three equivalent routes against each other before
    returning: the ladder, the (s-1)-fold derivative of the order-1
    operator, and the direct derivative of f**2.
    """
    if s < 1:
        raise InvalidOrder("s must be >= 1")
    ladder = _ladder(PSI_PLUS, s, f)
    routes = (apply(PSI_PLUS, 1, f).derivative(s - 1),
              f.pow(2).derivative(s))
    for other in routes:
        if ladder != other:
            raise IdentityViolation(
                f"plus ladder at s={s} disagrees with a direct route")
    return ladder


def a_minus(s: int, f: ExpPoly) -> ExpPoly:
    """Minus-type twin of :func:`a_plus`; identically zero because the
    order-1 minus operator annihilates everything."""
    if s < 1:
        raise InvalidOrder("s must be >= 1")
    ladder = _ladder(PSI_MINUS, s, f)
    if ladder != apply(PSI_MINUS, 1, f).derivative(s - 1):
        raise IdentityViolation(
            f"minus ladder at s={s} disagrees with the derivative route")
    return ladder


def _ladder(family: OperatorFamily, s: int, f: ExpPoly) -> ExpPoly:
    total = ExpPoly.zero()
    for k in range(s - 1, -1, -1):
        term = apply_to_derivative(family, 2 * (k + 1) - s, f, s - k - 1)
        total = total + term.scale(ExactScalar(comb(s - 1, k)))
    return total


def cap_A(i: int, f: ExpPoly) -> ExpPoly:
    """(i-1)-th derivative of the 3/2-scaled order-1 plus operator; the
    building block of the cube decomposition."""
    if i < 1:
        raise InvalidOrder("i must be >= 1")
    return apply(OperatorFamily("gamma+"), 1, f).derivative(i - 1)


def cap_B(i: int, sign: str, p: int, f: ExpPoly) -> ExpPoly:
    """(i-1)-th derivative of the (p-1)/2-scaled order-1 operator of the
    requested sign; the building block of the general-power
    decomposition.  The minus variant is identically zero."""
    if i < 1:
        raise InvalidOrder("i must be >= 1")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    fam = OperatorFamily("theta" + sign, p)
    return apply(fam, 1, f).derivative(i - 1)


# -- reciprocal-power and unity reductions ----------------------------

def decompose_negative(v: int, n: int, f: ExpPoly) -> ExpPoly:
    """Residual for the v-th derivative of f**(-n), reduced through
    h = 1/f and the plan for h**n; zero by contract."""
    if v < 1 or n < 2:
        raise InvalidOrder(f"need v >= 1 and n >= 2, got v={v}, n={n}")
    h = recip_single_atom(f)
    plan = decompose_power(v, n)
    residual = plan.verify(h)
    # independent route: invert f**n first, then differentiate
    direct = recip_single_atom(f.pow(n)).derivative(v)
    if plan.materialize(h) - direct != residual:
        raise IdentityViolation("reciprocal routes disagree")
    return residual


def _unity_parts(f: ExpPoly):
    """Plan-backed derivatives of f**3 and f**(-2) used by the unity
    reduction (f = f**3 / f**2)."""
    h = recip_single_atom(f)
    f3 = f.pow(3)
    fm2 = h.pow(2)
    d_f3 = {j: decompose_power(j, 3).materialize(f) for j in (1, 2)}
    d_fm2 = {j: decompose_power(j, 2).materialize(h) for j in (1, 2)}
    return f3, fm2, d_f3, d_fm2


def unity_combination(k: int, f: ExpPoly) -> ExpPoly:
    """The k-th derivative of f written through the product rule on
    f**3 * f**(-2), with every power derivative taken from a plan."""
    if k not in (1, 2):
        raise UnsupportedOrder(f"unity reduction implemented for k in (1, 2), got {k}")
    f3, fm2, d_f3, d_fm2 = _unity_parts(f)
    if k == 1:
        return fm2 * d_f3[1] + f3 * d_fm2[1]
    return (d_fm2[1] * d_f3[1]).scale(ExactScalar(2)) + f3 * d_fm2[2] + fm2 * d_f3[2]


def decompose_unity(k: int, f: ExpPoly) -> ExpPoly:
    """Residual of the unity reduction against the direct derivative;
    zero by contract.  Only the two displayed orders are supported."""
    return unity_combination(k, f) - f.derivative(k)


def taylor_coefficient_decomposition(f: ExpPoly, t0, K: int):
    """Taylor coefficients of f at t0 for orders 0..K.

    Each derivative is cross-checked through the unity reduction when f
    admits it (single degree-0 atom, order 1 or 2); the flag records
    whether that reduction ran.  Returns [(coefficient, flag), ...].
    """
    if not f.is_real():
        raise ValueError("Taylor coefficients are defined for real f here")
    out: list[tuple[ClosedFormValue, bool]] = []
    reducible = False
    if not f.is_zero():
        try:
            recip_single_atom(f)
            reducible = True
        except Exception:
            reducible = False
    for k in range(K + 1):
        direct = f.derivative(k).eval_exact(t0)
        coeff = direct.scale(ExactScalar(Fraction(1, factorial(k))))
        flag = False
        if reducible and k in (1, 2):
            reduced = unity_combination(k, f).eval_exact(t0)
            if reduced != direct:
                raise IdentityViolation(
                    f"unity reduction disagrees with direct derivative at k={k}")
            flag = True
        out.append((coeff, flag))
    return out
