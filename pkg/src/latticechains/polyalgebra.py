"""Exact univariate polynomial arithmetic with big-integer coefficients.

Two families cover every identity in this project:

* ``QHalfPoly`` -- Laurent polynomials in v where q = v^2, so a v-exponent
  e stands for q^(e/2). Half-integer powers of q stay integral by doubling.
* ``UnitPoly`` -- ordinary polynomials in x with nonnegative exponents.

Coefficients are Python ints (arbitrary precision); zero coefficients are
never stored, so dict equality is canonical equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class _Poly:
    """Sparse exponent -> coefficient polynomial; immutable value object."""

    __slots__ = ("_coeffs",)
    _allow_negative = True

    def __init__(self, coeffs=None):
        items = {}
        if coeffs:
            for e, c in coeffs.items():
                if c == 0:
                    continue
                if e < 0 and not self._allow_negative:
                    raise ValueError(f"negative exponent {e} not allowed for {type(self).__name__}")
                items[e] = c
        self._coeffs = items

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    def coefficient(self, exponent) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self):
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return sorted(self._coeffs.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        return type(self) is type(other) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._coeffs.items())))

    def __neg__(self):
        return type(self)({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)(out)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial power must be a nonnegative int, got {exponent!r}")
        result = type(self).one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_rational(self, num: int, den: int) -> Fraction:
        """Exact value at num/den. Raises ZeroDivisionError for den == 0,
        or for num == 0 when negative exponents are present."""
        x = Fraction(num, den)
        return sum((c * x**e for e, c in self._coeffs.items()), Fraction(0))

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            var = self._var_text(e)
            if not var:
                body = str(mag)
            elif mag == 1:
                body = var
            else:
                body = f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({dict(self.items())!r})"

    def __str__(self):
        return self.render()

    @staticmethod
    def _var_text(e) -> str:
        raise NotImplementedError


class QHalfPoly(_Poly):
    """Laurent polynomial in v with q = v^2; rendered in terms of q."""

    __slots__ = ()
    _allow_negative = True

    @staticmethod
    def _var_text(e) -> str:
        if e == 0:
            return ""
        if e % 2 == 0:
            half = e // 2
            return "q" if half == 1 else f"q^{half}"
        return f"q^({e}/2)"

    @classmethod
    def q_minus_one(cls):
        return cls({2: 1, 0: -1})


def q_monomial(doubled_exponent: int) -> QHalfPoly:
    """q^(doubled_exponent/2), i.e. the single term v^doubled_exponent."""
    return QHalfPoly.monomial(doubled_exponent)


class UnitPoly(_Poly):
    """Polynomial in x, nonnegative exponents only."""

    __slots__ = ()
    _allow_negative = False

    @staticmethod
    def _var_text(e) -> str:
        if e == 0:
            return ""
        return "x" if e == 1 else f"x^{e}"

    @classmethod
    def x(cls):
        return cls({1: 1})

    @classmethod
    def one_minus_x(cls):
        return cls({0: 1, 1: -1})


def term_x_pow_times_one_minus_x_pow(a: int, b: int) -> UnitPoly:
    """Expansion of x^a * (1-x)^b with exact signed binomial coefficients."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    return UnitPoly({a + t: (-1) ** t * comb(b, t) for t in range(b + 1)})
