"""Exact arithmetic in the field Q(sqrt2, i).

An :class:`ExactScalar` stores four rationals ``p, q, r, s`` and stands for
``(p + q*sqrt2) + i*(r + s*sqrt2)``. Every amplitude that shows up in the
sculpting schemes (``+-1``, ``+-1/sqrt2`` and their products) is exactly
representable, so nothing in this package touches floating point except
:meth:`ExactScalar.to_complex`, which exists for display only.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Union

# gmpy2's mpq is a drop-in, much faster rational; fractions.Fraction is the fallback.
Rational = Fraction
if os.environ.get("SCULPTGRAPH_PURE_PYTHON", "") in ("", "0"):
    try:
        from gmpy2 import mpq as Rational
    except ImportError:
        pass

RATIONAL_BACKEND = "fractions" if Rational is Fraction else "gmpy2"
_RATIONALS = (int, Fraction, Rational)

Number = Union[int, Fraction, "ExactScalar"]


def _rat(x):
    if type(x) is Rational:
        return x
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    if isinstance(x, (int, str, Rational)):
        return Rational(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


_Z = Rational(0)


def _qmul(a0, a1, b0, b1):
    # (a0 + a1 r2)(b0 + b1 r2); most amplitudes have a zero half, so skip those
    if not a1:
        if not b1:
            return a0 * b0, _Z
        if not b0:
            return _Z, a0 * b1
        return a0 * b0, a0 * b1
    if not a0:
        if not b1:
            return _Z, a1 * b0
        if not b0:
            return 2 * a1 * b1, _Z
        return 2 * a1 * b1, a1 * b0
    return a0 * b0 + 2 * a1 * b1, a0 * b1 + a1 * b0


def _add(a, b):
    if not a:
        return b
    if not b:
        return a
    return a + b


class ExactScalar:
    __slots__ = ("p", "q", "r", "s", "_hash")

    def __init__(self, p=0, q=0, r=0, s=0):
        self.p = _rat(p)
        self.q = _rat(q)
        self.r = _rat(r)
        self.s = _rat(s)
        self._hash = None

    @classmethod
    def _raw(cls, p, q, r, s) -> ExactScalar:
        # Light coercion only; the hot paths already hand over Rational values.
        obj = object.__new__(cls)
        obj.p = p if type(p) is Rational else _rat(p)
        obj.q = q if type(q) is Rational else _rat(q)
        obj.r = r if type(r) is Rational else _rat(r)
        obj.s = s if type(s) is Rational else _rat(s)
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x: Number) -> ExactScalar:
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, _RATIONALS):
            return cls._raw(_rat(x), _Z, _Z, _Z)
        raise TypeError(f"cannot convert {type(x).__name__} to ExactScalar")

    # -- structure -----------------------------------------------------------

    @property
    def components(self) -> tuple:
        return (self.p, self.q, self.r, self.s)

    def is_zero(self) -> bool:
        return not (self.p or self.q or self.r or self.s)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return not (self.r or self.s)

    def is_rational(self) -> bool:
        return not (self.q or self.r or self.s)

    def is_integer(self) -> bool:
        return self.is_rational() and self.p.denominator == 1

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return int(self.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, _RATIONALS):
            return self.p == other and not (self.q or self.r or self.s)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return (
            self.p == other.p
            and self.q == other.q
            and self.r == other.r
            and self.s == other.s
        )

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.p)
            else:
                self._hash = hash((self.p, self.q, self.r, self.s))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> ExactScalar:
        return ExactScalar._raw(-self.p, -self.q, -self.r, -self.s)

    def __pos__(self) -> ExactScalar:
        return self

    def __add__(self, other: Number) -> ExactScalar:
        if not isinstance(other, ExactScalar):
            if isinstance(other, _RATIONALS):
                return ExactScalar._raw(self.p + other, self.q, self.r, self.s)
            return NotImplemented
        return ExactScalar._raw(
            _add(self.p, other.p),
            _add(self.q, other.q),
            _add(self.r, other.r),
            _add(self.s, other.s),
        )

    __radd__ = __add__

    def __sub__(self, other: Number) -> ExactScalar:
        if not isinstance(other, ExactScalar):
            if isinstance(other, _RATIONALS):
                return ExactScalar._raw(self.p - other, self.q, self.r, self.s)
            return NotImplemented
        return ExactScalar._raw(
            _add(self.p, -other.p) if other.p else self.p,
            _add(self.q, -other.q) if other.q else self.q,
            _add(self.r, -other.r) if other.r else self.r,
            _add(self.s, -other.s) if other.s else self.s,
        )

    def __rsub__(self, other: Number) -> ExactScalar:
        return (-self) + other

    def __mul__(self, other: Number) -> ExactScalar:
        if not isinstance(other, ExactScalar):
            if isinstance(other, _RATIONALS):
                return ExactScalar._raw(
                    self.p * other, self.q * other, self.r * other, self.s * other
                )
            return NotImplemented
        p, q, r, s = self.p, self.q, self.r, self.s
        P, Q, R, S = other.p, other.q, other.r, other.s
        if not (r or s or R or S):
            re0, re1 = _qmul(p, q, P, Q)
            return ExactScalar._raw(re0, re1, _Z, _Z)
        # (a + bi)(c + di) with a, b, c, d in Q(sqrt2)
        ac0, ac1 = _qmul(p, q, P, Q)
        bd0, bd1 = _qmul(r, s, R, S)
        ad0, ad1 = _qmul(p, q, R, S)
        bc0, bc1 = _qmul(r, s, P, Q)
        return ExactScalar._raw(ac0 - bd0, ac1 - bd1, ad0 + bc0, ad1 + bc1)

    __rmul__ = __mul__

    def conjugate(self) -> ExactScalar:
        """Complex conjugate (sqrt2 is real, so only the imaginary part flips)."""
        return ExactScalar._raw(self.p, self.q, -self.r, -self.s)

    def abs2(self) -> ExactScalar:
        """``|z|^2`` as an element of Q(sqrt2)."""
        re0, re1 = _qmul(self.p, self.q, self.p, self.q)
        im0, im1 = _qmul(self.r, self.s, self.r, self.s)
        return ExactScalar._raw(re0 + im0, re1 + im1, 0, 0)

    def inverse(self) -> ExactScalar:
        if self.is_zero():
            raise ZeroDivisionError("ExactScalar division by zero")
        # 1/z = conj(z) / |z|^2 and |z|^2 = u + v sqrt2 has inverse (u - v sqrt2)/(u^2 - 2v^2)
        n = self.abs2()
        u, v = n.p, n.q
        d = u * u - 2 * v * v
        inv_n = ExactScalar._raw(u / d, -v / d, 0, 0)
        return self.conjugate() * inv_n

    def __truediv__(self, other: Number) -> ExactScalar:
        if isinstance(other, _RATIONALS):
            if other == 0:
                raise ZeroDivisionError("ExactScalar division by zero")
            return self * (Rational(1) / _rat(other))
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> ExactScalar:
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> ExactScalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- display -------------------------------------------------------------

    def to_complex(self) -> complex:
        r2 = math.sqrt(2.0)
        return complex(
            float(self.p) + float(self.q) * r2, float(self.r) + float(self.s) * r2
        )

    def __repr__(self) -> str:
        return f"ExactScalar({self.p!s}, {self.q!s}, {self.r!s}, {self.s!s})"

    def __str__(self) -> str:
        def part(a: Fraction, b: Fraction) -> str:
            bits = []
            if a:
                bits.append(str(a))
            if b:
                if b == 1:
                    bits.append("√2")
                elif b == -1:
                    bits.append("-√2")
                else:
                    bits.append(f"{b}√2")
            if not bits:
                return ""
            out = bits[0]
            for extra in bits[1:]:
                out += extra if extra.startswith("-") else "+" + extra
            return out

        re = part(self.p, self.q)
        im = part(self.r, self.s)
        if not im:
            return re or "0"
        im_txt = f"({im})i" if ("+" in im[1:] or "-" in im[1:]) else f"{im}i"
        if not re:
            return im_txt
        return f"{re}{'' if im_txt.startswith('-') else '+'}{im_txt}"


ZERO = ExactScalar()
ONE = ExactScalar(1)
I = ExactScalar(0, 0, 1)
SQRT2 = ExactScalar(0, 1)
INV_SQRT2 = ExactScalar(0, Fraction(1, 2))
HALF = ExactScalar(Fraction(1, 2))
