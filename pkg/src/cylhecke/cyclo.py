"""Exact arithmetic in the cyclotomic field hosting q = -exp(i*pi/(k+1)).

q is the (k+2)-th power of a primitive 2(k+1)-th root of unity, so its
multiplicative order is m = 2(k+1)/gcd(k+2, 2(k+1)).  CycloScalar elements
are vectors over Q modulo the m-th cyclotomic polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from ._rational import QQ, ZERO, qq, qq_from_str
from .laurent import LaurentPoly
from .qfield import QField, chebyshev_u


class PoleError(ArithmeticError):
    """A denominator vanished at the specialization point."""


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int):
    """Coefficient tuple (low to high) of the m-th cyclotomic polynomial."""
    # Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact integer division
    coeffs = [qq(-1)] + [ZERO] * (m - 1) + [qq(1)]
    from .laurent import _poly_divmod

    for d in range(1, m):
        if m % d == 0:
            quot, rem = _poly_divmod(coeffs, list(cyclotomic_poly(d)))
            assert not rem
            coeffs = quot
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _field_tables(m: int):
    """Degree phi(m) and reduction rows for zeta^j above the degree."""
    phi_coeffs = cyclotomic_poly(m)
    deg = len(phi_coeffs) - 1
    # zeta^deg = -(phi_0 + phi_1 zeta + ...); phi is monic over Z
    rows = {}
    top = [-c for c in phi_coeffs[:deg]]
    rows[deg] = tuple(top)
    prev = list(top)
    for j in range(deg + 1, max(2 * deg - 1, m)):
        shifted = [ZERO] + prev[:-1]
        overflow = prev[-1]
        if overflow:
            shifted = [s + overflow * t for s, t in zip(shifted, top)]
        rows[j] = tuple(shifted)
        prev = shifted
    return deg, rows


@lru_cache(maxsize=None)
def rs_field(k: int) -> "CycloField":
    return CycloField(k)


class CycloField:
    """The field Q(zeta_m); owns the reduction tables and the image of q."""

    def __init__(self, k: int):
        self.k = k
        double = 2 * (k + 1)
        g = gcd(k + 2, double)
        self.order = double // g
        self.q_exponent = (k + 2) // g  # q = zeta^{q_exponent}
        self.degree, self._rows = _field_tables(self.order)

    # -- element builders -------------------------------------------------

    def zero(self):
        return CycloScalar(self, (ZERO,) * self.degree)

    def one(self):
        return self.from_rational(1)

    def from_rational(self, c):
        v = [ZERO] * self.degree
        v[0] = QQ(c)
        return CycloScalar(self, tuple(v))

    def zeta_power(self, j: int):
        j %= self.order
        v = [ZERO] * self.order
        v[j] = qq(1)
        return CycloScalar(self, self._reduce(v))

    def q_power(self, e: int):
        return self.zeta_power(self.q_exponent * e)

    def _reduce(self, vec):
        deg = self.degree
        if len(vec) > deg:
            v = list(vec[:deg])
            for j in range(deg, len(vec)):
                c = vec[j]
                if c:
                    row = self._rows[j]
                    for i in range(deg):
                        if row[i]:
                            v[i] += c * row[i]
            return tuple(v)
        return tuple(vec) + (ZERO,) * (deg - len(vec))

    # -- specialization ----------------------------------------------------

    def eval_laurent(self, p: LaurentPoly):
        v = [ZERO] * self.order
        e0 = self.q_exponent
        m = self.order
        for e, c in p.terms.items():
            v[(e0 * e) % m] += c
        return CycloScalar(self, self._reduce(v))

    def specialize(self, x: QField):
        den = self.eval_laurent(x.den)
        if den.is_zero():
            raise PoleError(
                f"denominator {x.den!r} vanishes at the k={self.k} root of unity"
                + _name_vanishing_factor(x.den, self.k)
            )
        return self.eval_laurent(x.num) / den

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.order == self.order

    def __hash__(self):
        return hash(("CycloField", self.order))

    def __repr__(self):
        return f"CycloField(k={self.k}, order={self.order}, degree={self.degree})"


def _name_vanishing_factor(den: LaurentPoly, k: int) -> str:
    """Identify den with a Chebyshev U_j (up to units) when possible."""
    from .laurent import laurent_divexact

    for j in range(1, 2 * k + 4):
        u = chebyshev_u(j).num
        if u.max_exp() - u.min_exp() != den.max_exp() - den.min_exp():
            continue
        try:
            quot = laurent_divexact(den, u)
        except ArithmeticError:
            continue
        if quot.is_constant() or len(quot.terms) == 1:
            return f" (factor U_{j}(tau) = 0 at the RS point)"
    return ""


class CycloScalar:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        deg = self.field.degree
        out = [ZERO] * (2 * deg - 1)
        a, b = self.coeffs, other.coeffs
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
        return CycloScalar(self.field, self.field._reduce(out))

    __rmul__ = __mul__

    def inverse(self):
        """Extended Euclid against the cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero CycloScalar")
        from .laurent import _poly_divmod, _trim

        phi = list(cyclotomic_poly(self.field.order))
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [], [qq(1)]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(rem)
            prod = _polymul(quot, s1)
            s0, s1 = s1, _trim([a - b for a, b in _zip_pad(s0, prod)])
        if not r1:
            raise ZeroDivisionError("zero divisor in cyclotomic field (impossible)")
        c = r1[0]
        inv = [s / c for s in s1]
        return CycloScalar(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _coerce(self, x):
        if isinstance(x, CycloScalar):
            if x.field.order != self.field.order:
                raise ValueError("mixing cyclotomic fields of different order")
            return x
        if isinstance(x, (int, type(QQ(0)))):
            return self.field.from_rational(x)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        parts = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"order": self.field.order, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data, field: CycloField):
        assert field.order == data["order"]
        return CycloScalar(field, tuple(qq_from_str(c) for c in data["coeffs"]))


def _polymul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [ZERO] * (n - len(a))
    b = list(b) + [ZERO] * (n - len(b))
    return zip(a, b)


def specialize_rs(x: QField, k: int) -> CycloScalar:
    """Exact image of a generic-q value at q = -exp(i*pi/(k+1))."""
    return rs_field(k).specialize(x)
