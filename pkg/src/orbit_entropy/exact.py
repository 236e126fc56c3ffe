"""Exact integer, q-integer, and polynomial arithmetic.

Counts are plain Python ints, so there is no overflow at any input size.
Division helpers never round: a nonzero remainder means some counting
identity was violated upstream, and that is reported as
``InexactDivisionError`` rather than silently truncated.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

__all__ = [
    "InexactDivisionError",
    "IntPolynomial",
    "exact_div",
    "factorial",
    "gauss_bracket",
    "multinomial",
    "q_factorial",
    "q_multinomial",
]


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder."""


def exact_div(numerator: int, denominator: int) -> int:
    """Integer quotient, raising ``InexactDivisionError`` on a remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(
            f"{numerator} is not divisible by {denominator}"
        )
    return quotient


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return math.factorial(n)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Number of words of length n with the given symbol counts.

    ``parts`` must be nonnegative and sum to n; the value is computed as a
    product of binomials, so no division is involved.
    """
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to n={n}")
    out = 1
    remaining = n
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


def q_factorial(k: int, q: int) -> int:
    """Product (q^k - 1)(q^{k-1} - 1) ... (q - 1); empty product for k = 0."""
    if k < 0:
        raise ValueError("q_factorial requires k >= 0")
    if q < 2:
        raise ValueError("q must be at least 2")
    out = 1
    power = 1
    for _ in range(k):
        power *= q
        out *= power - 1
    return out


def q_multinomial(n: int, parts: Sequence[int], q: int) -> int:
    """q-analog of the multinomial coefficient; division is exact by theorem."""
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to n={n}")
    denominator = 1
    for p in parts:
        denominator *= q_factorial(p, q)
    return exact_div(q_factorial(n, q), denominator)


class IntPolynomial:
    """Dense polynomial with integer coefficients, immutable.

    Coefficients are stored lowest degree first with trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def div_exact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Long division over the integers; any remainder is an error."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return IntPolynomial()
        if self.degree < divisor.degree:
            raise InexactDivisionError("divisor degree exceeds dividend degree")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dd = divisor.degree
        lead = dcs[-1]
        quot = [0] * (len(rem) - len(dcs) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + dd]
            if c == 0:
                continue
            f, r = divmod(c, lead)
            if r:
                raise InexactDivisionError("nonzero remainder in polynomial division")
            quot[i] = f
            for j, dc in enumerate(dcs):
                rem[i + j] -= f * dc
        if any(rem):
            raise InexactDivisionError("nonzero remainder in polynomial division")
        return IntPolynomial(quot)


def gauss_bracket(j: int) -> IntPolynomial:
    """The polynomial 1 + t + ... + t^{j-1}."""
    if j < 1:
        raise ValueError("gauss_bracket requires j >= 1")
    return IntPolynomial((1,) * j)
