"""Exact scalars over the rationals and prime fields.

Rational scalars are :class:`fractions.Fraction` instances; residues mod p are
plain ints in ``range(p)``.  A :class:`Field` knows how to parse, print and
combine them, so the linear algebra above it never sees a float.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

_SCALAR_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Ground field: ``Field()`` is QQ, ``Field(p)`` is GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    @classmethod
    def from_string(cls, text: str) -> Field:
        """Parse ``"rational"`` or ``"prime:p"``."""
        text = text.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls()
        if text.startswith("prime:"):
            try:
                p = int(text[6:])
            except ValueError:
                raise FieldError(f"bad field spec {text!r}") from None
            return cls(p)
        raise FieldError(f"bad field spec {text!r}")

    @property
    def kind(self) -> str:
        return "rational" if self.p is None else "prime"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "rational" if self.p is None else f"prime:{self.p}"

    # -- element construction ----------------------------------------------

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else 1

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def parse(self, text: str) -> Scalar:
        m = _SCALAR_RE.match(text)
        if m is None:
            raise FieldError(f"malformed scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise FieldError(f"zero denominator in {text!r}")
        if self.p is None:
            return Fraction(num, den)
        if den % self.p == 0:
            raise FieldError(f"denominator of {text!r} vanishes mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def format(self, x: Scalar) -> str:
        return str(x)

    # -- arithmetic ----------------------------------------------------------

    def add(self, x: Scalar, y: Scalar) -> Scalar:
        return x + y if self.p is None else (x + y) % self.p

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        return x - y if self.p is None else (x - y) % self.p

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        return x * y if self.p is None else x * y % self.p

    def neg(self, x: Scalar) -> Scalar:
        return -x if self.p is None else -x % self.p

    def inv(self, x: Scalar) -> Scalar:
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x if self.p is None else pow(x, -1, self.p)

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.mul(x, self.inv(y))

    def axpy(self, v: dict, c: Scalar, w: dict) -> None:
        """In place ``v += c*w`` on sparse vectors, dropping zeros."""
        p = self.p
        for k, x in w.items():
            y = v.get(k, 0) + c * x
            if p is not None:
                y %= p
            if y:
                v[k] = y
            else:
                v.pop(k, None)

    def scale(self, c: Scalar, w: dict) -> dict:
        if not c:
            return {}
        if self.p is None:
            return {k: c * x for k, x in w.items()}
        return {k: c * x % self.p for k, x in w.items()}


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)
