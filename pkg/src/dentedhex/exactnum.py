"""Exact arithmetic kernel.

Tiling counts are plain Python ints (arbitrary precision) and exact ratios
are fractions.Fraction; this module adds what the standard library lacks:
Laurent polynomials in a single variable q with integer coefficients, and
equality of ratios of such polynomials decided by cross-multiplication
instead of division. No floating point anywhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class ZeroDenominator(ZeroDivisionError):
    """A ratio of polynomials was built with a zero denominator."""


class InexactDivision(ArithmeticError):
    """An exact polynomial quotient was requested but a remainder is left."""


class QPoly:
    """Laurent polynomial in q with exact integer coefficients.

    Stored as a map exponent -> coefficient with zero coefficients absent.
    Exponents may be negative. Instances are immutable; all operators
    return new values, so sharing across workers is safe.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = c.get(int(e), 0) + int(v)
                    if not c[int(e)]:
                        del c[int(e)]
        self._c = c

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "QPoly":
        p = object.__new__(cls)
        p._c = c
        return p

    @classmethod
    def zero(cls) -> "QPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "QPoly":
        return cls._raw({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def q(cls) -> "QPoly":
        return cls._raw({1: 1})

    def items(self):
        return self._c.items()

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self) -> "QPoly":
        return QPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return QPoly._raw(c)

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            if not other:
                return QPoly.zero()
            return QPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    del c[e]
        return QPoly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = QPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def eval_one(self) -> int:
        """Value at q=1, i.e. the sum of coefficients."""
        return sum(self._c.values())

    def invert_variable(self) -> "QPoly":
        """Substitute q -> 1/q (an involution on Laurent polynomials)."""
        return QPoly._raw({-e: v for e, v in self._c.items()})

    def shifted(self, k: int) -> "QPoly":
        """Multiply by the monomial q^k."""
        return QPoly._raw({e + k: v for e, v in self._c.items()})

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def divexact(self, other: "QPoly") -> "QPoly":
        """Exact quotient self/other; raises InexactDivision otherwise.

        Works over the Laurent ring: both operands are shifted to ordinary
        polynomials first, so q-power factors never obstruct the division.
        """
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return QPoly.zero()
        smin = self.min_exp()
        omin = other.min_exp()
        num = _dense(self, smin)
        den = _dense(other, omin)
        qdeg = len(num) - len(den)
        if qdeg < 0:
            raise InexactDivision("quotient would have negative degree")
        lead = den[-1]
        rem = list(num)
        quo = [0] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            c = rem[k + len(den) - 1]
            if c % lead:
                raise InexactDivision("leading coefficient does not divide")
            f = c // lead
            quo[k] = f
            if f:
                for i, dv in enumerate(den):
                    rem[k + i] -= f * dv
        if any(rem):
            raise InexactDivision("nonzero remainder")
        shift = smin - omin
        return QPoly._raw({e + shift: v for e, v in enumerate(quo) if v})

    def render(self) -> str:
        """Canonical text form: exponent-ascending "c*q^e" terms.

        The constant term is printed bare, e.g. "1*q^-1 + 2 + 1*q^2".
        """
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            parts.append(str(v) if e == 0 else f"{v}*q^{e}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QPoly({self.render()!r})"


def _dense(p: QPoly, low: int) -> list[int]:
    out = [0] * (p.max_exp() - low + 1)
    for e, v in p.items():
        out[e - low] = v
    return out


def one_minus_q_quotient(num_exps: Iterable[int], den_exps: Iterable[int]) -> QPoly:
    """prod(1 - q^a) / prod(1 - q^b), which must come out a polynomial.

    Common exponents cancel as a multiset first; the remaining product is
    built densely and each denominator factor is removed by the linear
    recurrence r[k] = p[k] + r[k-b], which is exact iff the top b
    coefficients vanish. This is the hot path behind the closed-form
    q-counts, so it avoids general polynomial division.
    """
    cn = Counter(int(a) for a in num_exps)
    cd = Counter(int(b) for b in den_exps)
    for e in cn:
        if e <= 0:
            raise ValueError("factor exponents must be positive")
    for e in cd:
        if e <= 0:
            raise ValueError("factor exponents must be positive")
    common = cn & cd
    cn -= common
    cd -= common
    poly = [1]
    for a in cn.elements():
        nxt = poly + [0] * a
        for k, v in enumerate(poly):
            nxt[k + a] -= v
        poly = nxt
    for b in cd.elements():
        n = len(poly)
        if n - b < 0:
            raise InexactDivision("denominator factor exceeds degree")
        r = [0] * n
        for k in range(n):
            r[k] = poly[k] + (r[k - b] if k >= b else 0)
        if any(r[n - b:]):
            raise InexactDivision("denominator factor does not divide")
        poly = r[: n - b]
    return QPoly({e: v for e, v in enumerate(poly) if v})


@dataclass(frozen=True)
class QRatio:
    """A ratio of Laurent polynomials, compared by cross-multiplication."""

    num: QPoly
    den: QPoly

    def __post_init__(self):
        if not self.den:
            raise ZeroDenominator("QRatio denominator is zero")

    @classmethod
    def from_poly(cls, p: QPoly) -> "QRatio":
        return cls(p, QPoly.one())

    @classmethod
    def from_int(cls, n: int) -> "QRatio":
        return cls(QPoly.monomial(0, n), QPoly.one())

    def __mul__(self, other: "QRatio") -> "QRatio":
        return QRatio(self.num * other.num, self.den * other.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QRatio.from_int(other)
        if not isinstance(other, QRatio):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def limit_at_one(self) -> Fraction:
        """Exact value of num/den as q -> 1.

        Strips matching powers of (q - 1) from both sides first, so ratios
        whose numerator and denominator both vanish at q=1 still evaluate.
        """
        num, den = self.num, self.den
        q_minus_1 = QPoly({1: 1, 0: -1})
        while num.eval_one() == 0 and den.eval_one() == 0:
            num = num.divexact(q_minus_1)
            den = den.divexact(q_minus_1)
        d = den.eval_one()
        if d == 0:
            raise ZeroDenominator("denominator vanishes to higher order at q=1")
        return Fraction(num.eval_one(), d)

    def render(self) -> str:
        if self.num == self.den:
            return "1"
        return f"({self.num.render()}) / ({self.den.render()})"

    def __str__(self) -> str:
        return self.render()


def qratio_eq(a: QRatio, b: QRatio) -> bool:
    """a/b equality without division: a.num*b.den == b.num*a.den."""
    return a == b
