"""
Exact scalars: Laurent polynomials in ``v`` (with ``v**2 == q``) over the
integers, and quotients of them.

All values are immutable.  A ``LaurentScalar`` is stored as a sparse map from
exponent of ``v`` to a nonzero Python integer, so equal scalars always have
identical term maps.

>>> v = LaurentScalar.v()
>>> q = v * v
>>> (q - 1) * (q + 1)
v^4 - 1
>>> unit_inverse(v**3)
v^-3
>>> specialize(q - 1, 1)
Fraction(0, 1)
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping, Union

__all__ = [
    "LaurentScalar",
    "ScalarFraction",
    "NonUnit",
    "DivisionByZero",
    "laurent_arith",
    "unit_inverse",
    "specialize",
    "specialize_q",
    "fraction_arith",
    "as_fraction",
]


class NonUnit(ArithmeticError):
    """Raised when inverting a Laurent polynomial that is not ``±v^k``."""


class DivisionByZero(ZeroDivisionError):
    pass


Scalarish = Union["LaurentScalar", int]


class LaurentScalar:
    """An element of ``Z[v, 1/v]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            t = {}
        elif isinstance(terms, int):
            t = {0: terms} if terms else {}
        else:
            t = {int(e): int(c) for e, c in terms.items() if c}
        self._terms = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentScalar":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentScalar":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def v(cls) -> "LaurentScalar":
        return cls._raw({1: 1})

    @classmethod
    def q(cls) -> "LaurentScalar":
        return cls._raw({2: 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero has no valuation")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero has no degree")
        return max(self._terms)

    def leading_coefficient(self) -> int:
        return self._terms[self.degree()]

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def constant(self) -> int | None:
        """The integer value if this scalar is a constant, else ``None``."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and 0 in self._terms:
            return self._terms[0]
        return None

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by ``v**k``."""
        return LaurentScalar._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, n: int) -> "LaurentScalar":
        if not n:
            return LaurentScalar._raw({})
        return LaurentScalar._raw({e: c * n for e, c in self._terms.items()})

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, int):
            return LaurentScalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self._terms)
        for e, c in o._terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentScalar._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentScalar._raw({e + eb: c * cb for e, c in a.items()})
        t: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                t[e] = t.get(e, 0) + ca * cb
        return LaurentScalar._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return unit_inverse(self) ** (-n)
        result = LaurentScalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "LaurentScalar") -> "LaurentScalar | None":
        """Quotient ``self / other`` if it lies in ``Z[v, 1/v]``, else ``None``."""
        if not other:
            raise DivisionByZero("division by zero Laurent polynomial")
        if not self:
            return LaurentScalar()
        if len(other._terms) == 1:
            (e0, c0), = other._terms.items()
            if any(c % c0 for c in self._terms.values()):
                return None
            return LaurentScalar._raw({e - e0: c // c0 for e, c in self._terms.items()})
        num = dict(self._terms)
        dd = other.degree()
        dv = other.valuation()
        lc = other._terms[dd]
        quot: dict[int, int] = {}
        # the quotient's valuation is fixed, so its degree range is bounded
        low = self.valuation() - dv
        while num:
            nd = max(num)
            e = nd - dd
            if e < low:
                return None
            c, r = divmod(num[nd], lc)
            if r:
                return None
            quot[e] = c
            for oe, oc in other._terms.items():
                k = oe + e
                s = num.get(k, 0) - c * oc
                if s:
                    num[k] = s
                else:
                    num.pop(k, None)
        return LaurentScalar._raw(quot)

    # comparison and hashing

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, ScalarFraction):
                return other == self
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            c = self.constant()
            self._hash = hash(c) if c is not None else hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return self.format("v")

    def format(self, var: str = "v") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # serialization: {"2": 1, "0": -1}

    def to_json(self) -> dict:
        return {str(e): self._terms[e] for e in sorted(self._terms, reverse=True)}

    @classmethod
    def from_json(cls, data) -> "LaurentScalar":
        if isinstance(data, int):
            return cls(data)
        if not isinstance(data, dict):
            raise ValueError(f"bad Laurent scalar: {data!r}")
        out: dict[int, int] = {}
        for k, c in data.items():
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"bad coefficient {c!r}")
            e = int(k)
            out[e] = out.get(e, 0) + c
        return cls(out)


ONE = LaurentScalar(1)
ZERO = LaurentScalar(0)


def laurent_arith(a: LaurentScalar, b: LaurentScalar, op: str) -> LaurentScalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def unit_inverse(a: LaurentScalar) -> LaurentScalar:
    if not a.is_unit():
        raise NonUnit(f"{a!r} is not of the form ±v^k")
    (e, c), = a.items()
    return LaurentScalar.monomial(-e, c)


def specialize(a: LaurentScalar, v0) -> Fraction:
    """Evaluate at ``v = v0`` exactly (``v0`` a nonzero rational)."""
    v0 = Fraction(v0)
    if not a:
        return Fraction(0)
    if v0 == 0 and a.valuation() < 0:
        raise DivisionByZero("negative power of v at v = 0")
    return sum((c * v0 ** e for e, c in a.items()), Fraction(0))


def specialize_q(a: LaurentScalar, q0) -> Fraction:
    """Evaluate at ``q = q0`` for scalars that only involve even powers of v."""
    q0 = Fraction(q0)
    out = Fraction(0)
    for e, c in a.items():
        if e % 2:
            raise ValueError(f"{a!r} has odd powers of v; not a polynomial in q")
        out += c * q0 ** (e // 2)
    return out


class ScalarFraction:
    """A quotient ``num / den`` of Laurent polynomials.

    Normal form removes monomial factors and integer content, makes the
    leading coefficient of ``den`` positive, and collapses to ``den == 1`` when
    ``den`` divides ``num`` exactly.  No polynomial gcd is taken, so equality
    is tested by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentScalar._coerce(num) if not isinstance(num, LaurentScalar) else num
        den = LaurentScalar._coerce(den) if not isinstance(den, LaurentScalar) else den
        if num is None or den is None:
            raise TypeError("ScalarFraction takes Laurent scalars or ints")
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        k = den.valuation()
        if k:
            num, den = num.shift(-k), den.shift(-k)
        g = gcd(num.content(), den.content())
        if den.leading_coefficient() < 0:
            g = -g
        if g != 1:
            num = LaurentScalar._raw({e: c // g for e, c in num.items()})
            den = LaurentScalar._raw({e: c // g for e, c in den.items()})
        if den != ONE:
            quot = num.exact_div(den)
            if quot is not None:
                num, den = quot, ONE
        self.num, self.den = num, den

    @staticmethod
    def _coerce(other):
        if isinstance(other, ScalarFraction):
            return other
        if isinstance(other, (LaurentScalar, int)):
            return ScalarFraction(other)
        return None

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ScalarFraction(self.num + o.num, self.den)
        return ScalarFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarFraction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ScalarFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero("division by zero fraction")
        return ScalarFraction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def as_laurent(self) -> LaurentScalar | None:
        return self.num if self.den == ONE else None

    def specialize(self, v0) -> Fraction:
        d = specialize(self.den, v0)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at v = {v0}")
        return specialize(self.num, v0) / d

    def __repr__(self):
        if self.den == ONE:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "ScalarFraction":
        if isinstance(data, dict) and "num" in data:
            return cls(LaurentScalar.from_json(data["num"]), LaurentScalar.from_json(data.get("den", {"0": 1})))
        return cls(LaurentScalar.from_json(data))


def as_fraction(a) -> ScalarFraction:
    return a if isinstance(a, ScalarFraction) else ScalarFraction(a)


def fraction_arith(a: ScalarFraction, b: ScalarFraction, op: str) -> ScalarFraction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")
