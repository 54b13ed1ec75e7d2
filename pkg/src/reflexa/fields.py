"""Exact coefficient fields: prime fields F_p and the rationals.

Every scalar in the library is either a Python int in canonical range
[0, p) or a fully reduced `fractions.Fraction`.  No floating point is
used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: ``prime(p)`` for F_p or ``rational()`` for Q."""

    kind: str  # "prime" | "rational"
    p: int | None = None

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        if not isinstance(p, int) or p > MAX_PRIME or not _is_prime(p):
            raise ValueError(f"not a prime <= 2^31: {p!r}")
        return FieldSpec("prime", p)

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec("rational", None)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    # -- canonical element arithmetic ------------------------------------

    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def canon(self, x):
        """Canonical representative of ``x`` (int, Fraction, or str like "2/5")."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.is_prime_field:
            if isinstance(x, Fraction):
                return self.div(x.numerator % self.p, x.denominator % self.p)
            return int(x) % self.p
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.is_prime_field else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime_field else a - b

    def neg(self, a):
        return (-a) % self.p if self.is_prime_field else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.is_prime_field else a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_prime_field:
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return f"F{self.p}" if self.is_prime_field else "Q"


def parse_field(text) -> FieldSpec:
    """Parse a field description: "Q", "rational", "F2", "GF(7)", {"p": 5}, 5."""
    if isinstance(text, FieldSpec):
        return text
    if isinstance(text, int):
        return FieldSpec.prime(text)
    if isinstance(text, dict) and "p" in text:
        return FieldSpec.prime(int(text["p"]))
    if isinstance(text, str):
        t = text.strip()
        if t in ("Q", "QQ", "rational"):
            return FieldSpec.rational()
        if t.startswith("F"):
            return FieldSpec.prime(int(t[1:]))
        if t.startswith("GF(") and t.endswith(")"):
            return FieldSpec.prime(int(t[3:-1]))
    raise ValueError(f"unrecognized field description: {text!r}")
