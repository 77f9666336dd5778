"""Exact scalar arithmetic over Q or a prime field F_p.

All arithmetic is exact: rationals are arbitrary-precision `Fraction`s in
lowest terms, prime-field elements are canonical residues in [0, p).
There is deliberately no floating-point backend.
"""

from fractions import Fraction

from .errors import FieldMismatchError, PreconditionError


def _is_prime(p):
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


class FieldSpec:
    """The base field: kind 'Q' (rationals) or 'Fp' (prime field of order p)."""

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind == "Q":
            assert p is None
        elif kind == "Fp":
            if not isinstance(p, int) or not _is_prime(p):
                raise PreconditionError(f"characteristic must be prime, got {p!r}")
        else:
            raise PreconditionError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Q" if self.kind == "Q" else f"F{self.p}"

    def zero(self):
        return FieldScalar(self, Fraction(0) if self.kind == "Q" else 0)

    def one(self):
        return FieldScalar(self, Fraction(1) if self.kind == "Q" else 1)

    def scalar(self, value):
        """Canonicalize an int, Fraction, FieldScalar or coefficient string."""
        if isinstance(value, FieldScalar):
            if value.spec != self:
                raise FieldMismatchError(f"scalar over {value.spec}, expected {self}")
            return value
        if isinstance(value, str):
            return self._parse(value)
        if self.kind == "Q":
            return FieldScalar(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            num = value.numerator % self.p
            den = value.denominator % self.p
            return FieldScalar(self, num * pow(den, -1, self.p) % self.p)
        return FieldScalar(self, value % self.p)

    def _parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"bad coefficient literal {text!r}") from exc
        return self.scalar(frac)


class FieldScalar:
    """Immutable exact field element; value is a Fraction (Q) or residue (Fp)."""

    __slots__ = ("spec", "value")

    def __init__(self, spec, value):
        self.spec = spec
        self.value = value

    def _check(self, other):
        if not isinstance(other, FieldScalar):
            raise FieldMismatchError(f"cannot combine FieldScalar with {other!r}")
        if other.spec is not self.spec and other.spec != self.spec:
            raise FieldMismatchError(f"mixed fields {self.spec} and {other.spec}")

    def __add__(self, other):
        self._check(other)
        v = self.value + other.value
        if self.spec.kind == "Fp":
            v %= self.spec.p
        return FieldScalar(self.spec, v)

    def __sub__(self, other):
        self._check(other)
        v = self.value - other.value
        if self.spec.kind == "Fp":
            v %= self.spec.p
        return FieldScalar(self.spec, v)

    def __mul__(self, other):
        self._check(other)
        v = self.value * other.value
        if self.spec.kind == "Fp":
            v %= self.spec.p
        return FieldScalar(self.spec, v)

    def __truediv__(self, other):
        return self * other.inv()

    def __neg__(self):
        v = -self.value
        if self.spec.kind == "Fp":
            v %= self.spec.p
        return FieldScalar(self.spec, v)

    def inv(self):
        if not self.value:
            raise ZeroDivisionError("inversion of zero field element")
        if self.spec.kind == "Q":
            return FieldScalar(self.spec, 1 / self.value)
        return FieldScalar(self.spec, pow(self.value, -1, self.spec.p))

    def __eq__(self, other):
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"{self.to_str()}"

    def to_str(self):
        """Canonical coefficient literal: reduced 'n/d' or plain integer."""
        v = self.value
        if self.spec.kind == "Q" and v.denominator != 1:
            return f"{v.numerator}/{v.denominator}"
        return str(int(v))


QQ = FieldSpec("Q")


def GF(p):
    return FieldSpec("Fp", p)
