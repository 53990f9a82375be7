"""Scalar arithmetic for the complex numbers and the quaternions.

Two numeric backends share one :class:`Quaternion` type:

* ``exact``: every component is a :class:`QuadExt`, an element ``a + b*sqrt(m)``
  of the real quadratic field Q(sqrt m) with arbitrary-precision rational parts.
  Square roots are never taken; ordering is decided with rational arithmetic.
* ``float``: every component is a Python ``float``.

A complex number is a quaternion whose ``j`` and ``k`` parts vanish.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import BackendMismatchError, ScalarParseError

__all__ = [
    "QuadExt",
    "Quaternion",
    "ScalarField",
    "mul",
    "conj",
    "norm_sq",
    "inverse",
    "compare_real",
    "is_squarefree",
    "parse_component",
    "format_component",
    "to_float",
]

Real = Union["QuadExt", float]


def is_squarefree(m: int) -> bool:
    if m < 0:
        return False
    if m in (0, 1):
        return True
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def _sign(q) -> int:
    return (q > 0) - (q < 0)


class QuadExt:
    """Element ``a + b*sqrt(m)`` of Q(sqrt m).

    Values with ``b == 0`` are plain rationals and combine with any ``m``;
    two values with nonzero radical parts must share ``m``. Internally the
    value is ``(p + q*sqrt(m)) / d`` with integers in lowest terms, ``d > 0``.
    """

    __slots__ = ("p", "q", "d", "m")

    def __init__(self, a: Union[int, Fraction, str] = 0, b: Union[int, Fraction, str] = 0, m: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if not is_squarefree(m):
            raise ValueError(f"m={m} is not a non-negative square-free integer")
        if b and m in (0, 1):
            raise ValueError("radical part must vanish when m is 0 or 1")
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._set(a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d, m)

    def _set(self, p: int, q: int, d: int, m: int) -> None:
        g = math.gcd(math.gcd(p, q), d)
        if g != 1:
            p //= g
            q //= g
            d //= g
        self.p, self.q, self.d = p, q, d
        self.m = m if q else 0

    @classmethod
    def _new(cls, p: int, q: int, d: int, m: int) -> "QuadExt":
        x = object.__new__(cls)
        if d < 0:
            p, q, d = -p, -q, -d
        x._set(p, q, d, m)
        return x

    @property
    def a(self) -> Fraction:
        return Fraction(self.p, self.d)

    @property
    def b(self) -> Fraction:
        return Fraction(self.q, self.d)

    @classmethod
    def coerce(cls, x) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls._new(x, 0, 1, 0)
        if isinstance(x, (Fraction, Rational)):
            return cls._new(x.numerator, 0, x.denominator, 0)
        if isinstance(x, float):
            raise BackendMismatchError("cannot mix float and exact scalars")
        raise TypeError(f"cannot convert {type(x).__name__} to QuadExt")

    def _common_m(self, other: "QuadExt") -> int:
        if self.m and other.m and self.m != other.m:
            raise BackendMismatchError(f"sqrt({self.m}) and sqrt({other.m}) live in different fields")
        return self.m or other.m

    def __add__(self, other):
        if not isinstance(other, QuadExt):
            try:
                other = QuadExt.coerce(other)
            except TypeError:
                return NotImplemented
        m = self._common_m(other)
        if self.d == other.d:
            return QuadExt._new(self.p + other.p, self.q + other.q, self.d, m)
        return QuadExt._new(
            self.p * other.d + other.p * self.d,
            self.q * other.d + other.q * self.d,
            self.d * other.d,
            m,
        )

    __radd__ = __add__

    def __neg__(self):
        x = object.__new__(QuadExt)
        x.p, x.q, x.d, x.m = -self.p, -self.q, self.d, self.m
        return x

    def __sub__(self, other):
        if not isinstance(other, QuadExt):
            try:
                other = QuadExt.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QuadExt.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QuadExt):
            try:
                other = QuadExt.coerce(other)
            except TypeError:
                return NotImplemented
        m = self._common_m(other)
        return QuadExt._new(
            self.p * other.p + self.q * other.q * m,
            self.p * other.q + self.q * other.p,
            self.d * other.d,
            m,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # 1 / ((p + q r)/d) = d (p - q r) / (p^2 - q^2 m)
        den = self.p * self.p - self.q * self.q * self.m
        if den == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt._new(self.d * self.p, -self.d * self.q, den, self.m)

    def __truediv__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) * self.inverse()

    def sign(self) -> int:
        """Sign of ``a + b*sqrt(m)`` by rational case analysis."""
        sa, sb = _sign(self.p), _sign(self.q)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 m
        return sa * _sign(self.p * self.p - self.q * self.q * self.m)

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __eq__(self, other):
        if isinstance(other, float):
            return NotImplemented
        if not isinstance(other, QuadExt):
            try:
                other = QuadExt.coerce(other)
            except TypeError:
                return NotImplemented
        if self.q and other.q and self.m != other.m:
            return False
        return self.p == other.p and self.q == other.q and self.d == other.d

    def __hash__(self):
        if not self.q:
            return hash(Fraction(self.p, self.d))
        return hash((self.p, self.q, self.d, self.m))

    def __lt__(self, other):
        return compare_real(self, other) < 0

    def __le__(self, other):
        return compare_real(self, other) <= 0

    def __gt__(self, other):
        return compare_real(self, other) > 0

    def __ge__(self, other):
        return compare_real(self, other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        if not self.q:
            return self.p / self.d
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __repr__(self):
        if not self.q:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a}, {self.b}, m={self.m})"

    def __str__(self):
        return format_component(self)


def compare_real(x, y) -> int:
    """Total order on real component values: -1, 0 or 1.

    Exact values are compared without approximating any square root.
    """
    if isinstance(x, float) or isinstance(y, float):
        if isinstance(x, QuadExt) or isinstance(y, QuadExt):
            raise BackendMismatchError("cannot compare float with exact value")
        x, y = float(x), float(y)
        return (x > y) - (x < y)
    x = QuadExt.coerce(x)
    y = QuadExt.coerce(y)
    return (x - y).sign()


def to_float(x) -> float:
    return float(x)


# text grammar ---------------------------------------------------------------

_COMPONENT_RE = re.compile(r"^(-?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)r)?$")


def _parse_rational(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_component(text: str, m: int) -> QuadExt:
    """Parse ``"p"``, ``"p+qr"`` or ``"p-qr"`` where ``r`` stands for sqrt(m)."""
    if not isinstance(text, str):
        raise ScalarParseError(f"exact component must be a string, got {type(text).__name__}")
    match = _COMPONENT_RE.match(text)
    if match is None:
        raise ScalarParseError(f"malformed exact component {text!r}")
    a = _parse_rational(match.group(1))
    b = Fraction(0)
    if match.group(2):
        b = _parse_rational(match.group(3))
        if match.group(2) == "-":
            b = -b
    if b and m in (0, 1):
        raise ScalarParseError(f"radical term in {text!r} but sqrt_m={m}")
    return QuadExt(a, b, m if b else 0)


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_component(x: QuadExt) -> str:
    x = QuadExt.coerce(x)
    head = _format_rational(x.a)
    if not x.b:
        return head
    op = "+" if x.b > 0 else "-"
    return f"{head}{op}{_format_rational(abs(x.b))}r"


# quaternions ----------------------------------------------------------------


def _coerce_components(parts: Iterable) -> tuple:
    parts = tuple(parts)
    has_float = any(isinstance(p, float) for p in parts)
    has_exact = any(isinstance(p, QuadExt) for p in parts)
    if has_float and has_exact:
        raise BackendMismatchError("quaternion mixes float and exact components")
    if has_float:
        return tuple(float(p) for p in parts)
    out = tuple(QuadExt.coerce(p) for p in parts)
    ms = {p.m for p in out if p.m}
    if len(ms) > 1:
        raise BackendMismatchError(f"components from different quadratic fields: {sorted(ms)}")
    return out


class Quaternion:
    """``a + b i + c j + d k`` with Hamilton multiplication.

    Integer and rational components are taken to be exact; give floats to get
    the float backend.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a, self.b, self.c, self.d = _coerce_components((a, b, c, d))

    @classmethod
    def _raw(cls, a, b, c, d) -> "Quaternion":
        q = object.__new__(cls)
        q.a, q.b, q.c, q.d = a, b, c, d
        return q

    @property
    def components(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_float(self) -> bool:
        return isinstance(self.a, float)

    @property
    def sqrt_m(self) -> int:
        if self.is_float:
            return 0
        return max(p.m for p in self.components)

    def is_complex(self) -> bool:
        return not self.c and not self.d

    def _check(self, other: "Quaternion") -> None:
        if self.is_float != other.is_float:
            raise BackendMismatchError("cannot combine float and exact quaternions")

    def _lift(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            zero = 0.0 if self.is_float else QuadExt()
            val = float(other) if self.is_float else QuadExt.coerce(other)
            return Quaternion._raw(val, zero, zero, zero)
        if isinstance(other, float) and self.is_float:
            return Quaternion._raw(other, 0.0, 0.0, 0.0)
        if isinstance(other, QuadExt) and not self.is_float:
            z = QuadExt()
            return Quaternion._raw(other, z, z, z)
        if isinstance(other, (float, QuadExt)):
            raise BackendMismatchError("cannot combine float and exact values")
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Quaternion._raw(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return Quaternion._raw(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Quaternion._raw(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a1, b1, c1, d1 = self.components
        a2, b2, c2, d2 = other.components
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def scale(self, r) -> "Quaternion":
        """Multiply every component by the real value ``r``."""
        return Quaternion._raw(self.a * r, self.b * r, self.c * r, self.d * r)

    def conj(self) -> "Quaternion":
        return Quaternion._raw(self.a, -self.b, -self.c, -self.d)

    def norm_sq(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of the zero quaternion")
        inv = 1.0 / n if self.is_float else n.inverse()
        return self.conj().scale(inv)

    def __truediv__(self, other):
        """Right division ``self * other**-1``."""
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __bool__(self):
        return any(bool(p) for p in self.components)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            if self.is_float != other.is_float:
                return False
            return self.components == other.components
        if isinstance(other, (int, float, Fraction, QuadExt)) and not isinstance(other, bool):
            try:
                lifted = self._lift(other)
            except BackendMismatchError:
                return False
            return self.components == lifted.components
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def to_floats(self) -> tuple:
        return tuple(float(p) for p in self.components)

    def to_float(self) -> "Quaternion":
        return Quaternion._raw(*(float(p) for p in self.components))

    def __repr__(self):
        return "Quaternion({})".format(", ".join(str(p) if not isinstance(p, float) else repr(p) for p in self.components))


def mul(x: Quaternion, y: Quaternion) -> Quaternion:
    """Hamilton product ``x*y``."""
    return x * y


def conj(x: Quaternion) -> Quaternion:
    return x.conj()


def norm_sq(x: Quaternion):
    """``x * conj(x)`` as a real component value."""
    return x.norm_sq()


def inverse(x: Quaternion) -> Quaternion:
    return x.inverse()


# fields ---------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarField:
    """Field tag (``"C"`` or ``"H"``) plus numeric backend.

    ``tol`` is the relative incidence tolerance of the float backend; it is
    multiplied by the bounding-box diameter of a point set.
    """

    tag: str = "C"
    backend: str = "float"
    m: int = 3
    tol: float = 1e-9

    def __post_init__(self):
        if self.tag not in ("C", "H"):
            raise ValueError(f"unknown field tag {self.tag!r}")
        if self.backend not in ("exact", "float"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if not is_squarefree(self.m):
            raise ValueError(f"sqrt_m={self.m} is not square-free")

    @property
    def exact(self) -> bool:
        return self.backend == "exact"

    @property
    def real_dim(self) -> int:
        return 2 if self.tag == "C" else 4

    def scalar(self, *parts) -> Quaternion:
        """Build a scalar of this field from up to four components."""
        if len(parts) > 4:
            raise ValueError("at most four components")
        parts = tuple(parts) + (0,) * (4 - len(parts))
        if self.exact:
            q = Quaternion(*(QuadExt.coerce(p) if not isinstance(p, str) else parse_component(p, self.m) for p in parts))
        else:
            q = Quaternion(*(float(p) for p in parts))
        self.validate(q)
        return q

    def zero(self) -> Quaternion:
        return self.scalar(0)

    def one(self) -> Quaternion:
        return self.scalar(1)

    def validate(self, q: Quaternion) -> None:
        if q.is_float == self.exact:
            raise BackendMismatchError(f"scalar {q!r} does not belong to the {self.backend} backend")
        if self.exact:
            m = q.sqrt_m
            if m and m != self.m:
                raise BackendMismatchError(f"scalar uses sqrt({m}) but field has sqrt({self.m})")
        if self.tag == "C" and not q.is_complex():
            raise ValueError(f"{q!r} is not a complex number")

    def convert(self, q: Quaternion) -> Quaternion:
        """Re-express an exact scalar in this field's backend."""
        if self.exact:
            if q.is_float:
                raise BackendMismatchError("cannot convert a float scalar to exact")
            return q
        return q.to_float()

    def real_zero(self):
        return QuadExt() if self.exact else 0.0
