"""Exact closed function algebra: finite sums of ``c * t**m * exp(lambda*t)``.

This class of functions is closed under addition, multiplication,
differentiation to every order, and antidifferentiation from -infinity
whenever every exponential rate has positive real part.  Equality of
canonical forms is decidable, which is what makes exact zero-residual
identity checking possible at all.

An ``ExpPoly`` maps ``Atom`` (a pair ``(m, lambda)``) to a nonzero
``ExactScalar`` coefficient.  The zero function is the empty map.
Trigonometric functions enter as conjugate pairs of imaginary-rate atoms
(``cos bt = (e^{ibt} + e^{-ibt})/2``), which keeps the whole pipeline on
one representation.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterator

from . import _kernel as K
from .errors import NonIntegrableAtom, NotReciprocable
from .scalars import ClosedFormValue, ExactScalar, _as_fraction, _coerce


class Atom:
    """One basis function ``t**m * exp(lambda*t)`` with m >= 0."""

    __slots__ = ("m", "lam")

    def __init__(self, m: int, lam):
        if m < 0:
            raise ValueError("polynomial degree must be >= 0")
        self.m = int(m)
        self.lam = lam if isinstance(lam, ExactScalar) else ExactScalar(lam)

    @property
    def raw(self):
        return (self.m, self.lam.raw)

    @classmethod
    def from_raw(cls, raw) -> "Atom":
        obj = object.__new__(cls)
        obj.m = raw[0]
        obj.lam = ExactScalar.from_raw(raw[1])
        return obj

    def __eq__(self, other):
        return isinstance(other, Atom) and self.raw == other.raw

    def __hash__(self):
        return hash(self.raw)

    def __repr__(self):
        return f"Atom(m={self.m}, lam={self.lam})"


class ExpPoly:
    """Immutable exponential polynomial in canonical form."""

    __slots__ = ("_raw",)

    def __init__(self, terms=None):
        raw = {}
        for atom, c in (terms or {}).items():
            if not isinstance(atom, Atom):
                atom = Atom(*atom)
            c = _coerce_coeff(c)
            if c.is_zero():
                continue
            key = atom.raw
            prev = raw.get(key)
            total = c.raw if prev is None else K.s_add(prev, c.raw)
            if K.s_is_zero(total):
                raw.pop(key, None)
            else:
                raw[key] = total
        self._raw = raw

    @classmethod
    def _from_raw(cls, raw: dict) -> "ExpPoly":
        obj = object.__new__(cls)
        obj._raw = raw
        return obj

    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls._from_raw({})

    @classmethod
    def one(cls) -> "ExpPoly":
        return cls._from_raw({(0, K.S_ZERO): K.S_ONE})

    @classmethod
    def atom(cls, m: int, lam, coeff=1) -> "ExpPoly":
        return cls({Atom(m, lam): coeff})

    def terms(self) -> Iterator[tuple[Atom, ExactScalar]]:
        for key, c in sorted(self._raw.items()):
            yield Atom.from_raw(key), ExactScalar.from_raw(c)

    def __len__(self):
        return len(self._raw)

    def is_zero(self) -> bool:
        return not self._raw

    def is_real(self) -> bool:
        """True iff the term map is closed under conjugation."""
        for (m, lam), c in self._raw.items():
            cc = self._raw.get((m, K.s_conj(lam)))
            if cc is None or cc != K.s_conj(c):
                return False
        return True

    def is_antiderivable(self) -> bool:
        """Every atom decays toward -infinity, i.e. Re(lambda) > 0."""
        return all(lam[0] > 0 for (_, lam) in self._raw)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        return ExpPoly._from_raw(K.p_add(self._raw, other._raw))

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "ExpPoly":
        return self.scale(-1)

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        return ExpPoly._from_raw(K.p_mul(self._raw, other._raw))

    def scale(self, c) -> "ExpPoly":
        return ExpPoly._from_raw(K.p_scale(self._raw, _coerce_coeff(c).raw))

    def __eq__(self, other):
        return isinstance(other, ExpPoly) and self._raw == other._raw

    def __hash__(self):
        return hash(frozenset(self._raw.items()))

    def pow(self, n: int) -> "ExpPoly":
        if n < 0:
            raise ValueError("use recip_single_atom for negative powers")
        out = ExpPoly.one()
        for _ in range(n):
            out = out * self
        return out

    # -- calculus ----------------------------------------------------

    def derivative(self, order: int = 1) -> "ExpPoly":
        raw = self._raw
        for _ in range(order):
            raw = K.p_diff(raw)
        return ExpPoly._from_raw(raw)

    def antiderivative(self) -> "ExpPoly":
        """Antiderivative vanishing at -infinity; inverse of derivative."""
        self._require_antiderivable()
        return ExpPoly._from_raw(K.p_antideriv(self._raw))

    def signed_derivative(self, k: int) -> "ExpPoly":
        """k-fold derivative for k > 0, identity for k = 0, |k|-fold
        antiderivative from -infinity for k < 0."""
        if k >= 0:
            return self.derivative(k)
        self._require_antiderivable()
        raw = self._raw
        for _ in range(-k):
            raw = K.p_antideriv(raw)
        return ExpPoly._from_raw(raw)

    def _require_antiderivable(self):
        for (m, lam) in self._raw:
            if lam[0] <= 0:
                raise NonIntegrableAtom(
                    f"atom t^{m}*exp(({ExactScalar.from_raw(lam)})t) has "
                    "Re(lambda) <= 0; integral from -infinity diverges")

    # -- evaluation --------------------------------------------------

    def eval(self, t: float) -> complex:
        """Floating-point value at t (complex; imaginary part is residue
        for conjugation-closed inputs)."""
        total = 0j
        for (m, lam), c in self._raw.items():
            lamc = complex(lam[0] / lam[1], lam[2] / lam[3])
            total += complex(ExactScalar.from_raw(c)) * (t ** m) * cmath.exp(lamc * t)
        return total

    def eval_exact(self, t) -> ClosedFormValue:
        """Exact value at an exact rational point, as coefficients on
        exponential point values e^(lambda*t)."""
        t = _as_fraction(t)
        ts = ExactScalar(t)
        terms = {}
        for (m, lam), c in self._raw.items():
            mu = ExactScalar.from_raw(lam) * ts
            coeff = ExactScalar.from_raw(c) * ExactScalar(t ** m)
            prev = terms.get(mu)
            terms[mu] = coeff if prev is None else prev + coeff
        return ClosedFormValue(terms)

    def __repr__(self):
        if not self._raw:
            return "ExpPoly(0)"
        bits = []
        for atom, c in self.terms():
            part = f"({c})"
            if atom.m:
                part += f"*t^{atom.m}" if atom.m > 1 else "*t"
            if not atom.lam.is_zero():
                part += f"*e^(({atom.lam})t)"
            bits.append(part)
        return "ExpPoly(" + " + ".join(bits) + ")"


def _coerce_coeff(c) -> ExactScalar:
    if isinstance(c, ExactScalar):
        return c
    if isinstance(c, (int, Fraction)):
        return ExactScalar(c)
    raise TypeError(f"cannot use {c!r} as a coefficient")


# -- module-level operation surface ----------------------------------

def add(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    return f + g


def mul(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    return f * g


def derivative(f: ExpPoly) -> ExpPoly:
    return f.derivative()


def antiderivative(f: ExpPoly) -> ExpPoly:
    return f.antiderivative()


def signed_derivative(f: ExpPoly, k: int) -> ExpPoly:
    return f.signed_derivative(k)


def pow_int(f: ExpPoly, n: int) -> ExpPoly:
    return f.pow(n)


def recip_single_atom(f: ExpPoly) -> ExpPoly:
    """Reciprocal of a single degree-0 atom: 1/(c e^{lt}) = (1/c) e^{-lt}.

    Anything else leaves the algebra, hence NotReciprocable.
    """
    if len(f._raw) != 1:
        raise NotReciprocable("reciprocal needs exactly one atom")
    ((m, lam), c), = f._raw.items()
    if m != 0:
        raise NotReciprocable("reciprocal needs polynomial degree 0")
    return ExpPoly._from_raw({(0, K.s_neg(lam)): K.s_inv(c)})


def _formal_antiderivative_raw(raw: dict) -> dict:
    """Antiderivative usable for definite integrals at finite endpoints:
    the lambda != 0 closed form without the -infinity restriction, plus
    the polynomial rule t^(m+1)/(m+1) for lambda = 0 atoms."""
    exp_part = {}
    out = {}
    for (m, lam), c in raw.items():
        if lam[0] == 0 and lam[2] == 0:
            out[(m + 1, lam)] = K.s_div(c, K.s_from_int(m + 1))
        else:
            exp_part[(m, lam)] = c
    if exp_part:
        out = K.p_add(out, K.p_antideriv(exp_part))
    return out


def definite_integral(f: ExpPoly, a, b) -> ClosedFormValue:
    """Exact integral of f over [a, b] at exact rational endpoints."""
    F = ExpPoly._from_raw(_formal_antiderivative_raw(f._raw))
    return F.eval_exact(b) - F.eval_exact(a)
