"""Laurent polynomials in q with exact rational coefficients.

A LaurentPoly is a canonical dict {exponent: nonzero rational}.  These are the
coefficients of everything at generic q, so add/mul here are the innermost
loops of the whole package.
"""

from __future__ import annotations

from ._rational import QQ, ZERO, qq, qq_from_str


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None, _canonical=False):
        if terms is None:
            self.terms = {}
        elif _canonical:
            self.terms = terms
        else:
            t = {}
            for e, c in dict(terms).items():
                c = QQ(c)
                if c:
                    t[int(e)] = c
            self.terms = t

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly({}, _canonical=True)

    @staticmethod
    def one():
        return LaurentPoly({0: qq(1)}, _canonical=True)

    @staticmethod
    def const(c):
        c = QQ(c)
        return LaurentPoly({0: c} if c else {}, _canonical=True)

    @staticmethod
    def q_power(e, coeff=1):
        c = QQ(coeff)
        return LaurentPoly({int(e): c} if c else {}, _canonical=True)

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: qq(1)}

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    # -- ring ops --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t = dict(a)
        for e, c in b.items():
            s = t.get(e, ZERO) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentPoly(t, _canonical=True)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, ZERO) - c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentPoly(t, _canonical=True)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly.zero()
        if len(a) > len(b):
            a, b = b, a
        t = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = t.get(e, ZERO) + ca * cb
                if s:
                    t[e] = s
                else:
                    del t[e]
        return LaurentPoly(t, _canonical=True)

    def scaled(self, c):
        c = QQ(c)
        if not c:
            return LaurentPoly.zero()
        return LaurentPoly({e: co * c for e, co in self.terms.items()}, _canonical=True)

    def shifted(self, d):
        """Multiply by q**d."""
        if not d:
            return self
        return LaurentPoly({e + d: c for e, c in self.terms.items()}, _canonical=True)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use QField")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure -------------------------------------------------------

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def leading_coeff(self):
        return self.terms[max(self.terms)] if self.terms else ZERO

    def coeff(self, e):
        return self.terms.get(e, ZERO)

    def mirror(self):
        """q -> 1/q."""
        return LaurentPoly({-e: c for e, c in self.terms.items()}, _canonical=True)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- io ------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [[e, str(self.terms[e])] for e in sorted(self.terms)]

    @staticmethod
    def from_json(data):
        return LaurentPoly({int(e): qq_from_str(c) for e, c in data})


# -- polynomial gcd over Q[q] (Laurent polys shifted to ordinary polys) ----


def _poly_divmod(a, b):
    """Divide coefficient lists a by b (highest-degree last), exact rationals."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [ZERO] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        f = c / lead
        quot[i - db] = f
        for j, bc in enumerate(b):
            a[i - db + j] -= f * bc
    while a and not a[-1]:
        a.pop()
    return quot, a


def _trim(lst):
    while lst and not lst[-1]:
        lst.pop()
    return lst


def _poly_gcd(a, b):
    """Monic gcd of coefficient lists over the rationals."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _as_coeff_list(p: LaurentPoly):
    lo = p.min_exp()
    n = p.max_exp() - lo + 1
    coeffs = [ZERO] * n
    for e, c in p.terms.items():
        coeffs[e - lo] = c
    return coeffs, lo


def _from_coeff_list(coeffs, lo=0):
    return LaurentPoly({lo + i: c for i, c in enumerate(coeffs) if c}, _canonical=True)


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd ignoring q-power units (min exponent normalized to 0)."""
    if a.is_zero() and b.is_zero():
        return LaurentPoly.one()
    if a.is_zero():
        a, b = b, a
    if b.is_zero():
        ca, _ = _as_coeff_list(a)
        lead = ca[-1]
        return _from_coeff_list([c / lead for c in ca])
    ca, _ = _as_coeff_list(a)
    cb, _ = _as_coeff_list(b)
    return _from_coeff_list(_poly_gcd(ca, cb))


def laurent_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient a/b; raises ArithmeticError on a nonzero remainder."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero LaurentPoly")
    if a.is_zero():
        return LaurentPoly.zero()
    ca, la = _as_coeff_list(a)
    cb, lb = _as_coeff_list(b)
    quot, rem = _poly_divmod(ca, cb)
    if rem:
        raise ArithmeticError("inexact Laurent division")
    return _from_coeff_list(quot, la - lb)
