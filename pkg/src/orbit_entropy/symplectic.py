"""Exact orders of general linear and symplectic groups over F_q, counts
of isotropic subspaces and isotropic flags, and the chain identity the
flag counts satisfy under coarse-graining.

The counting layer accepts any integer q >= 2; only the brute-force
enumerations elsewhere insist on an actual prime field.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

from .entropy import CoarseMap, ProbVec, pushforward
from .exact import InexactDivisionError, q_multinomial
from .report import IdentityReport

__all__ = [
    "FlagType",
    "gl_order",
    "sp_order",
    "unipotent_radical_order",
    "ig_count",
    "isotropic_flag_count",
    "sp_quotient_closed",
    "normalized_logq_quotient",
    "symplectic_chain_identity_check",
]


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError("field size q must be at least 2")


def gl_order(m: int, q: int) -> int:
    """Order of GL_m(F_q); 1 when m = 0."""
    _check_q(q)
    if m < 0:
        raise ValueError("m must be nonnegative")
    qm = q**m
    out = 1
    for i in range(m):
        out *= qm - q**i
    return out


def sp_order(n: int, q: int) -> int:
    """Order of the symplectic group of a 2n-dimensional space over F_q;
    n = 0 gives 1 so tail factors of factorizations stay uniform."""
    _check_q(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = q ** (n * n)
    for i in range(1, n + 1):
        out *= q ** (2 * i) - 1
    return out


def unipotent_radical_order(s: int, n: int, q: int) -> int:
    """q^{s(s+1)/2 + 2s(n-s)}: the kernel of the stabilizer of an
    s-dimensional isotropic subspace acting on its associated graded."""
    _check_q(q)
    if not 0 <= s <= n:
        raise ValueError("need 0 <= s <= n")
    return q ** (s * (s + 1) // 2 + 2 * s * (n - s))


def ig_count(s: int, n: int, q: int) -> int:
    """Number of s-dimensional totally isotropic subspaces of a
    2n-dimensional symplectic space over F_q."""
    _check_q(q)
    if not 0 <= s <= n:
        raise ValueError("need 0 <= s <= n")
    count = q_multinomial(n, (s, n - s), q)
    for j in range(n - s + 1, n + 1):
        count *= q**j + 1
    # stabilizer factorization: count * |N| * |GL_s| * |Sp_{n-s}| = |Sp_n|
    check = count * unipotent_radical_order(s, n, q) * gl_order(s, q) * sp_order(n - s, q)
    if check != sp_order(n, q):
        raise InexactDivisionError("isotropic count fails the stabilizer factorization")
    return count


@dataclass(frozen=True)
class FlagType:
    """Shape of an isotropic flag: dimension increments, ambient
    half-dimension, field size.  Zero increments are rejected; delete
    them upstream, where doing so visibly changes the distribution."""

    increments: tuple[int, ...]
    n: int
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "increments", tuple(int(m) for m in self.increments))
        _check_q(self.q)
        if self.n < 1:
            raise ValueError("half-dimension n must be positive")
        if any(m < 1 for m in self.increments):
            raise ValueError("flag increments must be positive")
        if sum(self.increments) > self.n:
            raise ValueError("total isotropic dimension cannot exceed n")


def isotropic_flag_count(ft: FlagType) -> int:
    """Number of isotropic flags of the given shape: subspace count for
    the total dimension times the q-multinomial of the increments."""
    s = sum(ft.increments)
    return ig_count(s, ft.n, ft.q) * q_multinomial(s, ft.increments, ft.q)


def sp_quotient_closed(n: int, dist: ProbVec, q: int) -> int:
    """|Sp/P| for the parabolic attached to the scaled distribution n*P:
    the q-multinomial of all parts times the tail product of (q^j + 1)
    for j from n*p_k + 1 to n.  Cross-checked against the flag count of
    shape (n*p_1, ..., n*p_{k-1})."""
    counts = dist.scaled_counts(n)
    count = q_multinomial(n, counts, q)
    for j in range(counts[-1] + 1, n + 1):
        count *= q**j + 1
    flags = isotropic_flag_count(FlagType(counts[:-1], n, q))
    if count != flags:
        raise InexactDivisionError("closed form disagrees with the flag count")
    return count


def normalized_logq_quotient(n: int, dist: ProbVec, q: int) -> float:
    # growth is superexponential, rate n^2, hence the normalization
    count = sp_quotient_closed(n, dist, q)
    return math.log(count) / (n * n * math.log(q))


def symplectic_chain_identity_check(
    n: int, dist: ProbVec, cmap: CoarseMap, q: int
) -> IdentityReport:
    """Exact integer identity: the fine quotient equals the coarse
    quotient times per-block q-multinomials times the tail product of
    (q^j + 1) for j from n*p_k + 1 to n*q_m."""
    coarse = pushforward(dist, cmap)
    counts = dist.scaled_counts(n)
    coarse_counts = coarse.scaled_counts(n)
    lhs = sp_quotient_closed(n, dist, q)
    rhs = sp_quotient_closed(n, coarse, q)
    start = 0
    for j, size in enumerate(cmap.blocks):
        block = counts[start : start + size]
        rhs *= q_multinomial(coarse_counts[j], block, q)
        start += size
    for j in range(counts[-1] + 1, coarse_counts[-1] + 1):
        rhs *= q**j + 1
    return IdentityReport(lhs, rhs)
