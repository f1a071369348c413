"""The rational-function field in q, plus the Chebyshev-flavoured constants.

QField elements are reduced fractions of LaurentPolys.  The denominator is
normalized to an integer-primitive polynomial with positive leading
coefficient and lowest exponent 0, which makes equality a dict comparison.
"""

from __future__ import annotations

from ._rational import QQ, qq, qq_from_str
from .laurent import LaurentPoly, laurent_divexact, laurent_gcd


def _content(p: LaurentPoly):
    """Positive rational c with p/c integer-primitive."""
    from math import gcd

    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        num_gcd = gcd(num_gcd, int(c.numerator))
        den_lcm = den_lcm * int(c.denominator) // gcd(den_lcm, int(c.denominator))
    return qq(num_gcd, den_lcm)


class QField:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, QField):
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.one()
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("QField with zero denominator")
        if _reduced:
            self.num, self.den = num, den
            return
        self.num, self.den = _reduce(num, den)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero():
        return QField(LaurentPoly.zero(), LaurentPoly.one(), _reduced=True)

    @staticmethod
    def one():
        return QField(LaurentPoly.one(), LaurentPoly.one(), _reduced=True)

    @staticmethod
    def const(c):
        return QField(LaurentPoly.const(c), LaurentPoly.one(), _reduced=True)

    @staticmethod
    def q_power(e, coeff=1):
        return QField(LaurentPoly.q_power(e, coeff), LaurentPoly.one(), _reduced=True)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    # -- field ops -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return QField(self.num + other.num, self.den)
        return QField(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QField(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return QField.zero()
        return QField(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero QField")
        return QField(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = QField.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"

    # -- io ---------------------------------------------------------------

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data):
        return QField(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _coerce(x):
    if isinstance(x, QField):
        return x
    if isinstance(x, LaurentPoly):
        return QField(x)
    if isinstance(x, (int, type(QQ(0)))):
        return QField.const(x)
    try:
        return QField.const(QQ(x))
    except (TypeError, ValueError):
        return NotImplemented


def _reduce(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return LaurentPoly.zero(), LaurentPoly.one()
    g = laurent_gcd(num, den)
    if not g.is_one():
        num = laurent_divexact(num, g)
        den = laurent_divexact(den, g)
    # strip q-power units into the numerator, den starts at exponent 0
    shift = den.min_exp()
    if shift:
        den = den.shifted(-shift)
        num = num.shifted(-shift)
    # integer-primitive den with positive leading coefficient
    c = _content(den)
    if den.leading_coeff() < 0:
        c = -c
    if c != 1:
        den = den.scaled(1 / c)
        num = num.scaled(1 / c)
    return num, den


# -- the named constants ---------------------------------------------------

Q = QField.q_power(1)
TAU = QField(LaurentPoly({1: qq(-1), -1: qq(-1)}))  # -(q + 1/q)


def chebyshev_u(m: int) -> QField:
    """U_m at tau = -(q+1/q): (-1)^m (q^{m+1}-q^{-(m+1)})/(q-q^{-1}).

    Always a Laurent polynomial; U_0 = 1, U_1 = tau, three-term recurrence
    U_{m+1} = tau*U_m - U_{m-1}.
    """
    if m < -1:
        raise ValueError("chebyshev_u defined for m >= -1")
    if m == -1:
        return QField.zero()
    sign = 1 if m % 2 == 0 else -1
    terms = {m - 2 * j: qq(sign) for j in range(m + 1)}
    return QField(LaurentPoly(terms))


def mu(m: int) -> QField:
    """mu_m = U_{m-1}/U_m; mu_0 = 0 by convention (so e_i = L_i(0) internally)."""
    if m < 0:
        raise ValueError("mu defined for m >= 0")
    if m == 0:
        return QField.zero()
    return chebyshev_u(m - 1) / chebyshev_u(m)


def alpha(n: int) -> QField:
    """alpha_n = prod_{i=1..n} mu_i^{-2^{n-i}}, the Y_n eigenvalue chain."""
    if n < 1:
        raise ValueError("alpha defined for n >= 1")
    if n > 12:
        raise ResourceWarning("alpha exponent budget exceeded (n > 12)")
    result = QField.one()
    for i in range(1, n + 1):
        result = result * mu(i) ** (-(2 ** (n - i)))
    return result


def delta(m: int) -> QField:
    """Delta_m = mu_m - mu_{m-1}, the band-weight increment."""
    return mu(m) - mu(m - 1)


def u_prime(m: int) -> QField:
    """U_m(-tau) = (q^{m+1}-q^{-(m+1)})/(q-q^{-1}), the q-integer [m+1]."""
    if m == -1:
        return QField.zero()
    return QField(LaurentPoly({m - 2 * j: qq(1) for j in range(m + 1)}))
