"""Exact integer polynomials and cyclotomic multiplicities.

Polynomials are dense tuples of Python ints, lowest degree first. Nothing
in here touches floating point: vanishing of an integer polynomial at a
primitive e-th root of unity is decided by divisibility by the e-th
cyclotomic polynomial.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial",
    "NotDivisible",
    "poly_mul",
    "poly_exact_div",
    "cyclotomic",
    "phi_multiplicity",
    "degree_count_multiplicity",
    "eval_at_integer",
    "q_integer",
    "CYCLOTOMIC_CACHE_BOUND",
]


class NotDivisible(ArithmeticError):
    """Raised by :func:`poly_exact_div` when the division leaves a remainder."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend} (remainder {remainder})")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    ``IntPolynomial([1, 2, 1])`` is ``1 + 2x + x^2``. The zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _trim(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", hash(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __floordiv__(self, other):
        return poly_exact_div(self, _coerce(other))

    def __call__(self, v: int) -> int:
        return eval_at_integer(self, v)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> IntPolynomial:
        return cls(int(c) for c in data)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "x"
            else:
                mono = f"x^{k}"
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            body += mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    return IntPolynomial(p)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    a, b = _coerce(a), _coerce(b)
    if a.is_zero() or b.is_zero():
        return IntPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPolynomial(out)


def poly_exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``a == b * q`` in Z[x].

    Raises :class:`NotDivisible` when no such integer polynomial exists. The
    exception carries the remainder of the long division; if the division
    stalls on a non-integral quotient coefficient, the partial remainder at
    that point is reported.
    """
    a, b = _coerce(a), _coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    lead = b.leading
    if len(rem) - 1 < db:
        if rem:
            raise NotDivisible(a, b, IntPolynomial(rem))
        return IntPolynomial()
    quot = [0] * (len(rem) - db)
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        qk, r = divmod(c, lead)
        if r:
            raise NotDivisible(a, b, IntPolynomial(rem))
        shift = k - db
        quot[shift] = qk
        for j, y in enumerate(bc):
            rem[shift + j] -= qk * y
    remainder = _trim(rem)
    if remainder:
        raise NotDivisible(a, b, IntPolynomial(remainder))
    return IntPolynomial(quot)


CYCLOTOMIC_CACHE_BOUND = 512

_cyclotomic_cache: dict[int, IntPolynomial] = {}
_cyclotomic_lock = threading.Lock()


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial.

    Built as ``x^d - 1`` divided exactly by every ``cyclotomic(d')`` for proper
    divisors ``d'`` of ``d``. Results with ``d <= CYCLOTOMIC_CACHE_BOUND`` are
    memoized; concurrent callers may compute the same entry twice, which is
    harmless since the value is unique.
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"cyclotomic index must be a positive integer, got {d!r}")
    hit = _cyclotomic_cache.get(d)
    if hit is not None:
        return hit
    p = IntPolynomial.monomial(d) - 1
    for dd in _divisors(d)[:-1]:
        p = poly_exact_div(p, cyclotomic(dd))
    if d <= CYCLOTOMIC_CACHE_BOUND:
        with _cyclotomic_lock:
            p = _cyclotomic_cache.setdefault(d, p)
    return p


def phi_multiplicity(p: IntPolynomial, e: int) -> int:
    """Largest k such that the e-th cyclotomic polynomial to the k divides p."""
    p = _coerce(p)
    if p.is_zero():
        raise ValueError("multiplicity is undefined for the zero polynomial")
    if e < 1:
        raise ValueError("e must be positive")
    phi = cyclotomic(e)
    k = 0
    while p.degree >= phi.degree:
        try:
            p = poly_exact_div(p, phi)
        except NotDivisible:
            break
        k += 1
    return k


def degree_count_multiplicity(degrees: Sequence[int], e: int) -> int:
    """Number of degrees divisible by e.

    Each ``(x^d - 1)/(x - 1)`` contains the e-th cyclotomic factor exactly
    once when ``e | d`` (and ``e >= 2``), never otherwise.
    """
    if e < 2:
        raise ValueError("degree counting needs e >= 2")
    return sum(1 for d in degrees if d % e == 0)


def eval_at_integer(p: IntPolynomial, v: int) -> int:
    acc = 0
    for c in reversed(_coerce(p).coeffs):
        acc = acc * v + c
    return acc


def q_integer(d: int) -> IntPolynomial:
    """``1 + x + ... + x^(d-1)``, obtained as ``(x^d - 1) / (x - 1)``."""
    if d < 1:
        raise ValueError("d must be positive")
    return poly_exact_div(IntPolynomial.monomial(d) - 1, IntPolynomial([-1, 1]))
