"""Monic polynomials over a field, companion matrices, minimal polynomials.

A :class:`MonicPoly` of degree p stores the tuple ``(a_0, ..., a_{p-1})``
and denotes ``t^p - sum_k a_k t^k``.  That sign convention makes the
companion matrix a direct transcription: subdiagonal ones, last column
``a_0 ... a_{p-1}``.

The module also provides plain coefficient-list arithmetic (ascending
order, trimmed, ``[]`` is the zero polynomial) used by the canonical-form
computations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError
from .fields import Field, Scalar
from .matrices import Matrix

# -- coefficient-list arithmetic --------------------------------------


def poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(field: Field, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    if field.modulus is not None:
        out = [x % field.modulus for x in out]
    return poly_trim(out)


def poly_sub(field: Field, a: list, b: list) -> list:
    out = list(a) + [field.zero] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = out[i] - y
    if field.modulus is not None:
        out = [x % field.modulus for x in out]
    return poly_trim(out)


def poly_mul(field: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    if field.modulus is not None:
        out = [v % field.modulus for v in out]
    return poly_trim(out)


def poly_scale(field: Field, a: list, c: Scalar) -> list:
    if c == 0:
        return []
    out = [c * x for x in a]
    if field.modulus is not None:
        out = [v % field.modulus for v in out]
    return poly_trim(out)


def poly_divmod(field: Field, a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead_inv = field.inv(b[-1])
    quo = [field.zero] * max(0, len(a) - db)
    mod = field.modulus
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if mod is not None:
            c %= mod
        if c == 0:
            continue
        f = c * lead_inv
        if mod is not None:
            f %= mod
        quo[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] = rem[i - db + j] - f * b[j]
    if mod is not None:
        rem = [v % mod for v in rem]
    return poly_trim(quo), poly_trim(rem[:db])


def poly_monic(field: Field, a: list) -> list:
    if not a or a[-1] == field.one:
        return list(a)
    return poly_scale(field, a, field.inv(a[-1]))


def poly_gcd(field: Field, a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = poly_divmod(field, a, b)
        a, b = b, r
    return poly_monic(field, a)


def poly_lcm(field: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    g = poly_gcd(field, a, b)
    q, r = poly_divmod(field, poly_mul(field, a, b), g)
    assert not r
    return poly_monic(field, q)


# -- monic polynomials -------------------------------------------------


@dataclass(frozen=True)
class MonicPoly:
    """t^p - sum_{k<p} a_k t^k, p >= 1, stored as (a_0, ..., a_{p-1})."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise DimensionMismatchError("monic polynomial needs degree >= 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_coefficients(cls, field: Field, ascending) -> "MonicPoly":
        """Build from true ascending coefficients, leading coefficient 1."""
        coeffs = [field.coerce(c) for c in ascending]
        if len(coeffs) < 2 or coeffs[-1] != field.one:
            raise DimensionMismatchError(
                "need a monic polynomial of degree >= 1"
            )
        return cls(field, tuple(field.reduce(-c) for c in coeffs[:-1]))

    def coefficients(self) -> list:
        """True ascending coefficients, including the leading 1."""
        return [self.field.reduce(-a) for a in self.coeffs] + [self.field.one]

    def __str__(self) -> str:
        return format_poly(self)


def companion(p: MonicPoly) -> Matrix:
    """The degree x degree companion matrix of ``p``.

    Subdiagonal ones; last column holds a_0 ... a_{p-1}.
    """
    d = p.degree
    field = p.field
    rows = [[field.zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = field.one
    for i in range(d):
        rows[i][d - 1] = p.coeffs[i]
    return Matrix.from_rows(field, rows)


def times_t(p: MonicPoly) -> MonicPoly:
    """Return t * p(t); the degree goes up by one."""
    return MonicPoly(p.field, (p.field.zero,) + p.coeffs)


def eval_at_zero(p: MonicPoly) -> Scalar:
    """The constant term p(0), which is -a_0."""
    return p.field.reduce(-p.coeffs[0])


def _matvec(a: Matrix, v: list) -> list:
    n = a.rows
    mod = a.field.modulus
    ent = a.entries
    out = [sum(ent[i * n + j] * v[j] for j in range(n)) for i in range(n)]
    if mod is not None:
        out = [x % mod for x in out]
    return out


def _evaluate_poly_at_matrix(field: Field, coeffs: list, a: Matrix) -> Matrix:
    # Horner on matrices; coeffs ascending.
    n = a.rows
    acc = Matrix.zeros(field, n, n)
    ident = Matrix.identity(field, n)
    for c in reversed(coeffs):
        acc = acc * a + ident.scale(c)
    return acc


def _local_order(a: Matrix, start: list) -> list:
    """Least-degree monic annihilator of the vector ``start`` under ``a``.

    Grows the Krylov chain start, a*start, ... with tracked combination
    polynomials until the first linear dependence.
    """
    field = a.field
    n = a.rows
    stored = []  # (lead index, reduced vector, combination poly), leads unique
    v = list(start)
    k = 0
    while True:
        vec = list(v)
        combo = [field.zero] * k + [field.one]  # t^k
        for lead, rvec, rcombo in stored:
            c = vec[lead]
            if c == 0:
                continue
            vec = [x - c * y for x, y in zip(vec, rvec)]
            combo = poly_sub(field, combo, poly_scale(field, rcombo, c))
            if field.modulus is not None:
                vec = [x % field.modulus for x in vec]
        lead = next((i for i, x in enumerate(vec) if x != 0), None)
        if lead is None:
            return combo  # monic of degree k by construction
        inv = field.inv(vec[lead])
        vec = [field.reduce(x * inv) for x in vec]
        combo = poly_scale(field, combo, inv)
        stored.append((lead, vec, combo))
        stored.sort(key=lambda t: t[0])
        v = _matvec(a, v)
        k += 1
        assert k <= n, "Krylov chain exceeded the space dimension"


def minimal_polynomial(a: Matrix) -> MonicPoly:
    """Least-degree monic annihilator of a square matrix, exactly.

    Accumulates the least common multiple of the Krylov orders of the
    standard basis vectors, stopping as soon as the accumulated
    polynomial annihilates the matrix under direct substitution.
    """
    if not a.is_square or a.rows < 1:
        raise DimensionMismatchError("minimal polynomial needs a square matrix, size >= 1")
    field = a.field
    n = a.rows
    acc = [field.one]
    for i in range(n):
        e = [field.zero] * n
        e[i] = field.one
        acc = poly_lcm(field, acc, _local_order(a, e))
        if len(acc) - 1 == n:
            break
        if _evaluate_poly_at_matrix(field, acc, a).is_zero():
            break
    return MonicPoly.from_coefficients(field, acc)


def format_poly(p: MonicPoly) -> str:
    """Render in standard monomial order, e.g. ``t^3 - t``."""
    field = p.field
    coeffs = p.coefficients()
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if not parts:
            sign = ""
            mag = c
        elif field.modulus is None and c < 0:
            sign = " - "
            mag = -c
        else:
            sign = " + "
            mag = c
        if k == 0:
            body = field.format(mag)
        else:
            t = "t" if k == 1 else f"t^{k}"
            body = t if mag == field.one else f"{field.format(mag)} {t}"
        parts.append(f"{sign}{body}")
    return "".join(parts) if parts else field.format(field.zero)
