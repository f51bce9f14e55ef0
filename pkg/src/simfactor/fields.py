"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` for the rationals
(always in lowest terms, positive denominator) and ``int`` residues in
``[0, p)`` for GF(p).  A field object supplies the handful of operations
that depend on which field we are in; ordinary ``+ - *`` work directly on
the scalar values, with a final :meth:`reduce` where modular wrap-around
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError, SingularMatrixError

Scalar = Union[Fraction, int]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the base set covers all n < 3.3e24.
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers."""

    modulus = None

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def name(self) -> str:
        return "rational"

    def coerce(self, value) -> Fraction:
        return Fraction(value)

    def reduce(self, value: Fraction) -> Fraction:
        return value

    def inv(self, value: Fraction) -> Fraction:
        if value == 0:
            raise SingularMatrixError("division by zero")
        return 1 / Fraction(value)

    def parse(self, token: str) -> Fraction:
        num, sep, den = token.partition("/")
        try:
            if sep:
                d = int(den)
                if d <= 0:
                    raise ParseError(f"denominator must be positive: {token!r}")
                return Fraction(int(num), d)
            return Fraction(int(num))
        except ValueError:
            raise ParseError(f"bad rational entry {token!r}") from None

    def format(self, value: Fraction) -> str:
        return str(value)

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("rational")

    def __repr__(self) -> str:
        return "Rationals()"


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p); scalars are canonical residues in [0, p)."""

    modulus: int

    def __post_init__(self):
        if not _is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    zero = 0
    one = 1

    @property
    def name(self) -> str:
        return f"gf:{self.modulus}"

    def coerce(self, value) -> int:
        return int(value) % self.modulus

    def reduce(self, value: int) -> int:
        return value % self.modulus

    def inv(self, value: int) -> int:
        if value % self.modulus == 0:
            raise SingularMatrixError("division by zero")
        return pow(value, -1, self.modulus)

    def parse(self, token: str) -> int:
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"bad field entry {token!r}") from None
        if not 0 <= value < self.modulus:
            raise ParseError(
                f"entry {token!r} is not a canonical residue mod {self.modulus}"
            )
        return value

    def format(self, value: int) -> str:
        return str(value)

    def __repr__(self) -> str:
        return f"PrimeField({self.modulus})"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


def field_by_name(name: str) -> Field:
    """Resolve a CLI field name: ``rational`` or ``gf:<p>``."""
    if name == "rational":
        return QQ
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ParseError(f"bad field name {name!r}") from None
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field {name!r} (expected 'rational' or 'gf:<p>')")
