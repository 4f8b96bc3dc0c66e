"""Exact scalars and exact closed-form point values.

``ExactScalar`` is a complex number with rational real and imaginary
parts.  All arithmetic is exact; equality is decidable.  Internally it
wraps the kernel's normalized 4-int tuple so that values can cross the
kernel boundary without conversion.

``ClosedFormValue`` represents numbers of the form ``sum c_mu * e**mu``
with exact rational-complex ``c_mu`` and ``mu`` (the point values that
definite integrals and evaluations at exact points produce, e.g.
``tau/2 + sin(2*tau)/4``).  Distinct exponents are kept symbolic, so
equality at the exact layer is canonical-dict equality; a float renderer
is provided for everything else.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from . import _kernel as K


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)  # floats are exact binary rationals
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class ExactScalar:
    """Complex number with exact rational components."""

    __slots__ = ("_raw",)

    def __init__(self, real=0, imag=0):
        if isinstance(real, ExactScalar):
            raw = real._raw
            if imag:
                raw = K.s_add(raw, ExactScalar(imag).mul_i()._raw)
            self._raw = raw
            return
        re = _as_fraction(real)
        im = _as_fraction(imag)
        self._raw = K.s_make(re.numerator, re.denominator,
                             im.numerator, im.denominator)

    @classmethod
    def from_raw(cls, raw) -> "ExactScalar":
        obj = object.__new__(cls)
        obj._raw = raw
        return obj

    @property
    def raw(self):
        return self._raw

    @property
    def real(self) -> Fraction:
        return Fraction(self._raw[0], self._raw[1])

    @property
    def imag(self) -> Fraction:
        return Fraction(self._raw[2], self._raw[3])

    def is_zero(self) -> bool:
        return K.s_is_zero(self._raw)

    def is_real(self) -> bool:
        return self._raw[2] == 0

    def conjugate(self) -> "ExactScalar":
        return ExactScalar.from_raw(K.s_conj(self._raw))

    def mul_i(self) -> "ExactScalar":
        """Multiply by the imaginary unit."""
        rn, rd, im_n, im_d = self._raw
        return ExactScalar.from_raw(K.s_make(-im_n, im_d, rn, rd))

    def __add__(self, other):
        return ExactScalar.from_raw(K.s_add(self._raw, _coerce(other)._raw))

    __radd__ = __add__

    def __sub__(self, other):
        return ExactScalar.from_raw(K.s_sub(self._raw, _coerce(other)._raw))

    def __rsub__(self, other):
        return ExactScalar.from_raw(K.s_sub(_coerce(other)._raw, self._raw))

    def __neg__(self):
        return ExactScalar.from_raw(K.s_neg(self._raw))

    def __mul__(self, other):
        return ExactScalar.from_raw(K.s_mul(self._raw, _coerce(other)._raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ExactScalar.from_raw(K.s_div(self._raw, _coerce(other)._raw))

    def __rtruediv__(self, other):
        return ExactScalar.from_raw(K.s_div(_coerce(other)._raw, self._raw))

    def __eq__(self, other):
        try:
            return self._raw == _coerce(other)._raw
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._raw)

    def __complex__(self):
        rn, rd, im_n, im_d = self._raw
        return complex(rn / rd, im_n / im_d)

    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        re, im = self.real, self.imag
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"


def _coerce(x) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar(x)
    raise TypeError(f"cannot coerce {x!r} to ExactScalar")


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
HALF = ExactScalar(Fraction(1, 2))


class ClosedFormValue:
    """Exact linear combination ``sum c * e**mu`` over distinct exact mu.

    Exponentials at distinct exact arguments are linearly independent, so
    two values are equal iff their canonical term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canon = {}
        for mu, c in (terms or {}).items():
            mu = _coerce_cfv_key(mu)
            c = _coerce(c)
            if c.is_zero():
                continue
            prev = canon.get(mu)
            total = c if prev is None else prev + c
            if total.is_zero():
                canon.pop(mu, None)
            else:
                canon[mu] = total
        self._terms = canon

    @classmethod
    def constant(cls, c) -> "ClosedFormValue":
        return cls({ZERO: _coerce(c)})

    def terms(self):
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        """True when the terms are closed under conjugation."""
        for mu, c in self._terms.items():
            cc = self._terms.get(mu.conjugate())
            if cc is None or cc != c.conjugate():
                return False
        return True

    def __add__(self, other):
        if not isinstance(other, ClosedFormValue):
            return NotImplemented
        out = dict(self._terms)
        merged = ClosedFormValue.__new__(ClosedFormValue)
        for mu, c in other._terms.items():
            prev = out.get(mu)
            total = c if prev is None else prev + c
            if total.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = total
        merged._terms = out
        return merged

    def __sub__(self, other):
        return self + other.scale(ExactScalar(-1))

    def __neg__(self):
        return self.scale(ExactScalar(-1))

    def scale(self, c) -> "ClosedFormValue":
        c = _coerce(c)
        if c.is_zero():
            return ClosedFormValue()
        out = ClosedFormValue.__new__(ClosedFormValue)
        out._terms = {mu: cc * c for mu, cc in self._terms.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, ClosedFormValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __complex__(self):
        total = 0j
        for mu, c in self._terms.items():
            total += complex(c) * cmath.exp(complex(mu))
        return total

    def __float__(self):
        return complex(self).real

    def __repr__(self):
        if not self._terms:
            return "ClosedFormValue(0)"
        bits = [f"({c})*e^({mu})" for mu, c in sorted(
            self._terms.items(), key=lambda kv: str(kv[0]))]
        return "ClosedFormValue(" + " + ".join(bits) + ")"

    def to_json(self):
        return [
            {"exponent": str(mu), "coeff": str(c)}
            for mu, c in sorted(self._terms.items(), key=lambda kv: str(kv[0]))
        ]


def _coerce_cfv_key(mu) -> ExactScalar:
    if isinstance(mu, ExactScalar):
        return mu
    return ExactScalar(mu)
