# -*- coding: utf-8 -*-
# File: laurent.py

from fractions import Fraction
import numbers

import sympy as sp
from sympy import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

__all__ = ['LaurentPoly', 'NotDivisibleError']


class NotDivisibleError(ArithmeticError):
    """
    Raised by :meth:`LaurentPoly.exact_div` when the divisor does not divide
    the dividend in the Laurent ring Z[t, 1/t].
    """
    pass


def _is_int(x):
    return isinstance(x, numbers.Integral) and not isinstance(x, bool)


def _zero(var):
    return sp.Poly(0, sp.Symbol(var), domain=ZZ)


def _monomial(k, var):
    return sp.Poly.from_dict({(k,): 1}, sp.Symbol(var), domain=ZZ)


class LaurentPoly(object):
    """
    An immutable Laurent polynomial in one variable with integer coefficients.

    Stored as ``t^low * P(t)`` with ``P`` a :class:`sympy.Poly` over ZZ whose
    constant term is nonzero (``low = 0`` for the zero polynomial), so two
    polynomials are equal iff their shifts and coefficient lists are equal.
    Plain integers are accepted wherever a polynomial is, which lets numpy
    object arrays of LaurentPoly go through ``np.dot``.
    """

    __slots__ = ('_low', '_poly', '_var', '_hash')

    def __init__(self, terms=None, var='t'):
        """
        Args:
            terms: a dict or an iterable of (exponent, coefficient) pairs.
                Repeated exponents are summed.
            var (str): name of the variable, used for printing and to refuse
                mixing polynomials in different variables.
        """
        acc = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if not _is_int(e) or not _is_int(c):
                    raise TypeError("LaurentPoly needs integer exponents and coefficients, got {}".format((e, c)))
                e, c = int(e), int(c)
                acc[e] = acc.get(e, 0) + c
        acc = {e: c for e, c in acc.items() if c != 0}
        if not acc:
            self._set(_zero(var), 0, var)
            return
        low = min(acc)
        poly = sp.Poly.from_dict({(e - low,): c for e, c in acc.items()}, sp.Symbol(var), domain=ZZ)
        self._set(poly, low, var)

    def _set(self, poly, low, var):
        if poly.is_zero:
            low = 0
        else:
            (k,), poly = poly.terms_gcd()
            low += k
        self._poly = poly
        self._low = low
        self._var = var
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def from_poly(cls, poly, low=0, var='t'):
        """
        Args:
            poly (sympy.Poly): univariate, integer coefficients.
            low (int): the result is ``t^low * poly``.
        """
        ret = cls.__new__(cls)
        ret._set(sp.Poly.from_list(poly.all_coeffs(), sp.Symbol(var), domain=ZZ), low, var)
        return ret

    @classmethod
    def constant(cls, c, var='t'):
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent, coef=1, var='t'):
        return cls({exponent: coef}, var)

    @classmethod
    def from_coefficients(cls, coeffs, low=0, var='t'):
        """
        Args:
            coeffs (list[int]): dense coefficients, the first one belongs to ``t^low``.
        """
        return cls(((low + i, c) for i, c in enumerate(coeffs)), var)

    @classmethod
    def from_json(cls, obj):
        try:
            return cls([(int(e), int(c)) for e, c in obj['terms']], obj.get('var', 't'))
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError("Malformed LaurentPoly JSON: {}".format(obj)) from e

    # accessors ----------------------------------------------------------
    @property
    def var(self):
        return self._var

    @property
    def terms(self):
        """ list[(int, int)]: (exponent, coefficient) sorted by exponent. """
        if self.is_zero():
            return []
        return sorted((m + self._low, int(c)) for (m,), c in self._poly.terms())

    def coefficient(self, exponent):
        k = exponent - self._low
        if k < 0 or self.is_zero():
            return 0
        return int(self._poly.nth(k))

    def is_zero(self):
        return self._poly.is_zero

    def __bool__(self):
        return not self._poly.is_zero

    @property
    def min_degree(self):
        if self.is_zero():
            raise ValueError("The zero polynomial has no degree")
        return self._low

    @property
    def max_degree(self):
        if self.is_zero():
            raise ValueError("The zero polynomial has no degree")
        return self._low + self._poly.degree()

    @property
    def span(self):
        return self.max_degree - self.min_degree

    def coefficients(self):
        """ Dense coefficient list from ``min_degree`` to ``max_degree``. """
        if self.is_zero():
            return []
        return [int(c) for c in reversed(self._poly.all_coeffs())]

    def is_unit(self):
        """ Units of Z[t, 1/t] are exactly ``±t^k``. """
        return self._poly.is_ground and abs(int(self._poly.LC())) == 1

    def is_palindromic(self):
        c = self.coefficients()
        return c == c[::-1]

    def to_sympy(self):
        """ The polynomial as a sympy expression in ``Symbol(var)``. """
        return self._poly.as_expr() * sp.Symbol(self._var) ** self._low

    # arithmetic ---------------------------------------------------------
    def _recast(self, var):
        if var == self._var:
            return self._poly
        return sp.Poly.from_list(self._poly.all_coeffs(), sp.Symbol(var), domain=ZZ)

    def _pair(self, other):
        """ Both operands as sympy polys in a common variable, plus that variable. """
        if _is_int(other):
            other = LaurentPoly.constant(int(other), self._var)
        if not isinstance(other, LaurentPoly):
            return None
        if other._var != self._var and not other.is_zero() and not self.is_zero():
            raise ValueError("Cannot combine polynomials in {} and {}".format(self._var, other._var))
        var = other._var if self.is_zero() else self._var
        return self._recast(var), other._recast(var), other, var

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, other, var = pair
        low = min(self._low, other._low)
        if self._low > low:
            a = a * _monomial(self._low - low, var)
        if other._low > low:
            b = b * _monomial(other._low - low, var)
        return LaurentPoly.from_poly(a + b, low, var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_poly(-self._poly, self._low, self._var)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return self + (-pair[2])

    def __rsub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return pair[2] + (-self)

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, other, var = pair
        return LaurentPoly.from_poly(a * b, self._low + other._low, var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not _is_int(k):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise NotDivisibleError("Only units ±t^k have negative powers, got {}".format(self))
            c = int(self._poly.LC())
            return LaurentPoly({self._low * k: 1 if k % 2 == 0 else c}, self._var)
        return LaurentPoly.from_poly(self._poly ** k, self._low * k, self._var)

    def shift(self, k):
        """ Multiply by ``t^k``. """
        return LaurentPoly.from_poly(self._poly, self._low + k, self._var)

    def mirror(self):
        """ Substitute ``t -> 1/t``. """
        if self.is_zero():
            return self
        rev = sp.Poly.from_list(self.coefficients(), sp.Symbol(self._var), domain=ZZ)
        return LaurentPoly.from_poly(rev, -self.max_degree, self._var)

    def substitute_power(self, k, var=None):
        """
        Substitute ``t -> s^k`` where ``s`` is named ``var``.

        Example: the Jones polynomial in ``t`` becomes a polynomial in the
        bracket variable with ``substitute_power(-4, 'A')``.
        """
        return LaurentPoly({e * k: c for e, c in self.terms}, var or self._var)

    def exact_div(self, other):
        """
        Divide in Z[t, 1/t].

        Both operands are ``t^low`` times a polynomial with a nonzero
        constant term, so the quotient exists iff the polynomial parts divide
        in Z[t].

        Raises:
            ZeroDivisionError: when ``other`` is zero.
            NotDivisibleError: when the division over ZZ is not exact.
        """
        pair = self._pair(other)
        if pair is None:
            raise TypeError("Cannot divide LaurentPoly by {}".format(type(other)))
        a, b, other, var = pair
        if other.is_zero():
            raise ZeroDivisionError("LaurentPoly division by zero")
        if self.is_zero():
            return LaurentPoly(None, self._var)
        try:
            quot = a.exquo(b)
        except ExactQuotientFailed as e:
            raise NotDivisibleError("{} is not divisible by {}".format(self, other)) from e
        return LaurentPoly.from_poly(quot, self._low - other._low, var)

    def eval_at(self, x):
        """
        Evaluate at an integer (or Fraction). Returns an int when the value is integral.
        """
        x = Fraction(x)
        if x == 0 and self._low < 0:
            raise ZeroDivisionError("Cannot evaluate {} at 0".format(self))
        v = sp.Rational(x.numerator, x.denominator)
        total = sp.Rational(self._poly.eval(v)) * v ** self._low
        total = Fraction(int(total.p), int(total.q))
        return int(total) if total.denominator == 1 else total

    # comparison ---------------------------------------------------------
    def _key(self):
        if self.is_zero():
            return None
        return self._var, self._low, tuple(self.coefficients())

    def __eq__(self, other):
        if _is_int(other):
            other = LaurentPoly.constant(int(other), self._var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        ret = self.__eq__(other)
        return ret if ret is NotImplemented else not ret

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # serialization ------------------------------------------------------
    def to_json(self):
        return {"var": self._var, "terms": [[e, c] for e, c in self.terms]}

    def __str__(self):
        if self.is_zero():
            return "0"
        out = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = self._var if e == 1 else "{}^{}".format(self._var, e)
                body = mono if mag == 1 else "{}*{}".format(mag, mono)
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return "LaurentPoly({!r}, var={!r})".format(dict(self.terms), self._var)
