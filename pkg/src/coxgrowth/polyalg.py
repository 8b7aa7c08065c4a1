"""Exact univariate polynomials over Z and rational functions over Q.

Everything here works on Python integers, so coefficient growth is never
an issue. Polynomials are dense, stored with ascending powers; the
polynomials met in practice have degree well under a hundred.
"""

from __future__ import annotations

import re
import warnings
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import PoleAtOrigin

Number = Union[int, Fraction]


class DegreeDropWarning(UserWarning):
    """Reciprocal of a polynomial with vanishing constant term."""


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _as_int(c) -> int:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if hasattr(c, "__index__"):
        return c.__index__()
    raise TypeError(f"integer coefficient expected, got {c!r}")


class IntPoly:
    """Polynomial with integer coefficients, ``coeffs[k]`` multiplies ``t**k``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        if isinstance(coeffs, IntPoly):
            self.coeffs = coeffs.coeffs
            return
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        self.coeffs = tuple(_strip([_as_int(c) for c in coeffs]))

    # -- construction -----------------------------------------------------
    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, x) -> "IntPoly":
        return x if isinstance(x, IntPoly) else cls(x)

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        return parse_poly(text)

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly([x // c for x in self.coeffs])

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_reciprocal(self) -> bool:
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    def is_anti_reciprocal(self) -> bool:
        return bool(self.coeffs) and self.coeffs == tuple(-c for c in self.coeffs[::-1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Number) -> int:
        """Exact sign of p(x) for rational x, computed in integers."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        n = self.degree
        acc = 0
        for k, c in enumerate(self.coeffs):
            acc += c * p**k * q ** (n - k)
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def reverse(self) -> "IntPoly":
        """t^deg p(1/t); drops degree when p(0) = 0."""
        return IntPoly(self.coeffs[::-1])

    def compose_monomial(self, k: int) -> "IntPoly":
        """p(t^k)."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPoly(out)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        other = IntPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        return self + (-IntPoly.coerce(other))

    def __rsub__(self, other):
        return IntPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        other = IntPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return RatFunc(self) / other

    def __rtruediv__(self, other):
        return RatFunc(other) / RatFunc(self)

    def __floordiv__(self, other):
        return exact_div(self, IntPoly.coerce(other))

    def __mod__(self, other):
        return divmod_q(self, IntPoly.coerce(other))[1]

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly(other).coeffs
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)


T = IntPoly([0, 1])
ONE = IntPoly([1])


# -- division and gcd -----------------------------------------------------

def divmod_q(a: IntPoly, b: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over Q as Fraction coefficient lists."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = [Fraction(c) for c in a.coeffs]
    db, lb = b.degree, b.lc
    if len(r) - 1 < db:
        return [], r
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db] / lb
        q[i] = c
        if c:
            for j, y in enumerate(b.coeffs):
                r[i + j] -= c * y
    r = r[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """a / b when the quotient exists in Z[t]; ArithmeticError otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return IntPoly()
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c, rem = divmod(r[i + db], lb)
        if rem:
            raise ArithmeticError(f"{b} does not divide {a} over Z")
        q[i] = c
        if c:
            for j, y in enumerate(b.coeffs):
                r[i + j] -= c * y
    if any(r):
        raise ArithmeticError(f"{b} does not divide {a}")
    return IntPoly(q)


def divides(b: IntPoly, a: IntPoly) -> bool:
    try:
        exact_div(a, b)
    except ArithmeticError:
        return False
    return True


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """lc(b)^(deg a - deg b + 1) * a mod b, fraction free."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    if len(r) - 1 < db:
        return a
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db]
        r = [x * lb for x in r]
        if c:
            for j, y in enumerate(b.coeffs):
                r[i + j] -= c * y
    return IntPoly(r[:db])


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd over Q, returned primitive with positive leading coefficient."""
    a, b = IntPoly.coerce(a), IntPoly.coerce(b)
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_rem(a, b)
        a, b = b, r.primitive()
    return a.primitive()


def poly_lcm(a: IntPoly, b: IntPoly) -> IntPoly:
    a, b = a.primitive(), b.primitive()
    return exact_div(a * b, poly_gcd(a, b)).primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    g = poly_gcd(p, p.derivative())
    return exact_div(p.primitive(), g).primitive() if g.degree > 0 else p.primitive()


# -- special polynomials --------------------------------------------------

def qint(k: int) -> IntPoly:
    """[k] = 1 + t + ... + t^(k-1)."""
    if k < 1:
        raise ValueError(f"[k] needs k >= 1, got {k}")
    return IntPoly([1] * k)


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """k-th cyclotomic polynomial, by exact division of t^k - 1."""
    if k < 1:
        raise ValueError(f"cyclotomic index must be positive, got {k}")
    p = IntPoly.monomial(k) - 1
    for d in range(1, k):
        if k % d == 0:
            p = exact_div(p, cyclotomic(d))
    return p


def reciprocal_poly(p: IntPoly) -> IntPoly:
    """t^deg(p) * p(1/t)."""
    p = IntPoly.coerce(p)
    if p.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    if p[0] == 0:
        warnings.warn(f"{p} has p(0) = 0; reciprocal drops degree", DegreeDropWarning, stacklevel=2)
    return p.reverse()


# -- rational functions ---------------------------------------------------

class RatFunc:
    """num/den in lowest terms.

    Canonical form: gcd(num, den) = 1 over Q, joint integer content 1, and
    den has positive leading coefficient. Zero is 0/1. Equality is
    therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatFunc):
            if den == 1 or (isinstance(den, IntPoly) and den == ONE):
                self.num, self.den = num.num, num.den
                return
            other = num / RatFunc(den)
            self.num, self.den = other.num, other.den
            return
        num, den = IntPoly.coerce(num), IntPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = IntPoly(), ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = exact_div(num, g), exact_div(den, g)
        c = gcd(num.content(), den.content())
        if den.lc < 0:
            c = -c
        if c != 1:
            num = IntPoly([x // c for x in num.coeffs])
            den = IntPoly([x // c for x in den.coeffs])
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def as_poly(self) -> IntPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __add__(self, other):
        o = RatFunc.coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        o = RatFunc.coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(1) / (self ** (-k))
        return RatFunc(self.num**k, self.den**k)

    def inverse(self) -> "RatFunc":
        return RatFunc(1) / self

    def __eq__(self, other):
        if isinstance(other, (RatFunc, IntPoly, int, Fraction)):
            o = RatFunc.coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __call__(self, x):
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return Fraction(self.num(Fraction(x))) / d

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def derivative_at(self, x) -> Fraction:
        x = Fraction(x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return (self.num.derivative()(x) * d - self.num(x) * self.den.derivative()(x)) / (d * d)

    def substitute_inverse(self) -> "RatFunc":
        return substitute_inverse(self)

    def __repr__(self):
        return f"RatFunc({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.is_polynomial():
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def arith(a, b, op: str):
    """Binary arithmetic on polynomials or rational functions.

    add/sub/mul of two IntPoly stay IntPoly; anything involving a RatFunc,
    and every division, yields a canonical RatFunc.
    """
    if op == "div":
        return RatFunc.coerce(a) / RatFunc.coerce(b)
    if isinstance(a, IntPoly) and isinstance(b, IntPoly):
        return {"add": a + b, "sub": a - b, "mul": a * b}[op]
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def substitute_inverse(f: RatFunc) -> RatFunc:
    """f(1/t) with negative powers cleared."""
    f = RatFunc.coerce(f)
    if f.is_zero():
        raise ValueError("substitute_inverse of the zero function")
    a, b = f.num.degree, f.den.degree
    num, den = f.num.reverse(), f.den.reverse()
    if b >= a:
        num = num * IntPoly.monomial(b - a)
    else:
        den = den * IntPoly.monomial(a - b)
    return RatFunc(num, den)


def taylor_coeffs(f: RatFunc, count: int) -> list:
    """First `count` Maclaurin coefficients of num/den.

    Uses the recurrence den(t) * sum(a_k t^k) = num(t). Coefficients are
    ints whenever they are integral, Fractions otherwise.
    """
    f = RatFunc.coerce(f)
    d0 = f.den[0]
    if d0 == 0:
        raise PoleAtOrigin(f"{f} has a pole at t = 0")
    den = f.den.coeffs
    out: list = []
    for k in range(count):
        acc = Fraction(f.num[k])
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return [int(a) if a.denominator == 1 else a for a in out]


# -- text syntax ----------------------------------------------------------

_TERM = re.compile(r"[+-]?[^+-]+")


def parse_poly(text: str) -> IntPoly:
    """Parse ``[c0, c1, ...]`` or ``1 - 8*t + 8*t^5 - t^6``."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated coefficient list: {text!r}")
        body = s[1:-1].strip()
        return IntPoly([int(x) for x in body.split(",")] if body else [])
    s = s.replace(" ", "").replace("**", "^").replace("x", "t")
    if not s:
        raise ValueError("empty polynomial")
    acc: dict[int, int] = {}
    consumed = 0
    for m in _TERM.finditer(s):
        if m.start() != consumed:
            raise ValueError(f"cannot parse polynomial {text!r}")
        consumed = m.end()
        term = m.group()
        sign = -1 if term[0] == "-" else 1
        term = term.lstrip("+-")
        if "t" in term:
            coef_txt, _, power_txt = term.partition("t")
            if coef_txt.endswith("*"):
                coef_txt = coef_txt[:-1]
                if not coef_txt:
                    raise ValueError(f"bad term {term!r} in {text!r}")
            coef = int(coef_txt) if coef_txt else 1
            if power_txt:
                if not power_txt.startswith("^"):
                    raise ValueError(f"bad term {term!r} in {text!r}")
                power = int(power_txt[1:])
            else:
                power = 1
        else:
            coef, power = int(term), 0
        acc[power] = acc.get(power, 0) + sign * coef
    if consumed != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    top = max(acc)
    return IntPoly([acc.get(k, 0) for k in range(top + 1)])


def format_poly(p: IntPoly, var: str = "t") -> str:
    """Human form, ascending powers: ``1 - 8*t + 8*t^5 - t^6``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_coeffs(p: IntPoly) -> str:
    return "[" + ", ".join(str(c) for c in p.coeffs) + "]"


def product(polys: Sequence[IntPoly]) -> IntPoly:
    return reduce(lambda a, b: a * b, polys, ONE)
