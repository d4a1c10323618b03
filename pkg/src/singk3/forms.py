"""Even positive-definite binary quadratic forms.

A form (a, b, c) stands for a*x^2 + b*x*y + c*y^2, equivalently for the even
Gram matrix ((2a, b), (b, 2c)).  All arithmetic is exact over Python ints;
forms are immutable and safe to share.

Reduction is classical Gauss reduction (Cohen, Alg. 5.4.2); composition is
Dirichlet composition of primitive forms (Cohen, Alg. 5.4.7) followed by
reduction.  The discriminants handled here are desk-scale, so no NUCOMP.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .errors import (
    ImprimitiveInput,
    InvalidDiscriminant,
    MismatchedDiscriminant,
    NotNegativeDiscriminant,
    NotPositiveDefinite,
    ParseError,
)

_FORM_RE = re.compile(r"\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\Z")


def check_discriminant(d: int) -> int:
    """Validate d < 0 and d = 0, 1 (mod 4); returns d."""
    if d >= 0:
        raise NotNegativeDiscriminant(f"discriminant must be negative, got {d}")
    if d % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{d} is not 0 or 1 mod 4")
    return d


@dataclass(frozen=True)
class Form:
    """Positive definite integral binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.c <= 0:
            raise NotPositiveDefinite(f"({self.a},{self.b},{self.c}) is not positive definite")
        if self.b * self.b - 4 * self.a * self.c >= 0:
            raise NotNegativeDiscriminant(
                f"({self.a},{self.b},{self.c}) has non-negative discriminant"
            )

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def content(self) -> int:
        """Degree of primitivity: the largest m with (1/m)*form still even integral."""
        return gcd(gcd(self.a, self.b), self.c)

    def is_primitive(self) -> bool:
        return self.content() == 1

    def primitive_part(self) -> Form:
        m = self.content()
        return self if m == 1 else Form(self.a // m, self.b // m, self.c // m)

    def scaled(self, m: int) -> Form:
        """The form m*(a, b, c); inverse of primitive_part up to content."""
        if m <= 0:
            raise ValueError("scale factor must be positive")
        return Form(m * self.a, m * self.b, m * self.c)

    def is_reduced(self) -> bool:
        """Gauss-reduced: -a < b <= a <= c, with b >= 0 if a == c."""
        a, b, c = self.a, self.b, self.c
        return -a < b <= a <= c and (a != c or b >= 0)

    def reduced(self) -> Form:
        """The unique reduced representative of the SL2(Z)-class."""
        a, b, c = self.a, self.b, self.c
        # normalize b into (-a, a]
        r = (a - b) // (2 * a)
        b, c = b + 2 * r * a, a * r * r + b * r + c
        while not (-a < b <= a <= c and (a != c or b >= 0)):
            s = (c + b) // (2 * c)
            a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
        return Form(a, b, c)

    def inverse(self) -> Form:
        """Reduced inverse class; corresponds to b -> -b."""
        if not self.is_primitive():
            raise ImprimitiveInput("inverse requires a primitive form")
        return Form(self.a, -self.b, self.c).reduced()

    def transformed(self, p: int, q: int, r: int, s: int) -> Form:
        """Apply the GL2(Z) substitution (x, y) -> (p*x + q*y, r*x + s*y)."""
        if p * s - q * r not in (1, -1):
            raise ValueError("matrix must be unimodular")
        a, b, c = self.a, self.b, self.c
        return Form(
            a * p * p + b * p * r + c * r * r,
            2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            a * q * q + b * q * s + c * s * s,
        )

    def __mul__(self, other: Form) -> Form:
        return compose(self, other)

    def __pow__(self, k: int) -> Form:
        return power(self, k)

    @classmethod
    def from_text(cls, text: str) -> Form:
        """Parse the canonical "a,b,c" serialization."""
        m = _FORM_RE.match(text)
        if m is None:
            raise ParseError(f"expected 'a,b,c' integers, got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)))

    def as_json(self) -> dict[str, str]:
        # decimal strings so that consumers with 64-bit ints survive
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}

    @classmethod
    def from_json(cls, obj: dict) -> Form:
        try:
            return cls(int(obj["a"]), int(obj["b"]), int(obj["c"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad form object {obj!r}") from exc


def form_sort_key(f: Form) -> tuple[int, int, int, int]:
    """Deterministic display order: identity first, +b before -b."""
    return (f.a, abs(f.b), 0 if f.b >= 0 else 1, f.c)


def principal_form(d: int) -> Form:
    """The reduced principal form: identity of Cl(d)."""
    check_discriminant(d)
    if d % 4 == 0:
        return Form(1, 0, -d // 4)
    return Form(1, 1, (1 - d) // 4)


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    # returns (g, u, v) with u*x + v*y = g = gcd(x, y)
    g, u, v = x, 1, 0
    g2, u2, v2 = y, 0, 1
    while g2:
        q = g // g2
        g, g2 = g2, g - q * g2
        u, u2 = u2, u - q * u2
        v, v2 = v2, v - q * v2
    if g < 0:
        g, u, v = -g, -u, -v
    return g, u, v


def compose(f1: Form, f2: Form) -> Form:
    """Dirichlet composition of primitive forms of equal discriminant, reduced.

    Cohen, Alg. 5.4.7.  Inputs need not be reduced; the output class does not
    depend on the chosen representatives.
    """
    if f1.discriminant() != f2.discriminant():
        raise MismatchedDiscriminant(
            f"discriminants differ: {f1.discriminant()} vs {f2.discriminant()}"
        )
    if not f1.is_primitive() or not f2.is_primitive():
        raise ImprimitiveInput("composition requires primitive forms")
    if f1.a > f2.a:
        f1, f2 = f2, f1
    a1, b1, c1 = f1.a, f1.b, f1.c
    a2, b2, c2 = f2.a, f2.b, f2.c
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u, v = _xgcd(s, d)
        x2, y2 = u, -v
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (c2 * d1 + r * (b2 + v2 * r)) // v1
    return Form(a3, b3, c3).reduced()


def power(f: Form, k: int) -> Form:
    """k-fold composition; k = 0 gives the principal form, k < 0 uses inverses."""
    if not f.is_primitive():
        raise ImprimitiveInput("power requires a primitive form")
    if k < 0:
        f, k = f.inverse(), -k
    result = principal_form(f.discriminant())
    base = f.reduced()
    while k:
        if k & 1:
            result = compose(result, base)
        k >>= 1
        if k:
            base = compose(base, base)
    return result
