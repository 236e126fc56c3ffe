"""Probability vectors with exact rational entries, coarse-grainings of
them, and the entropy functionals that normalized orbit growth rates
converge to.

Order matters throughout: the reflective and symplectic entropies weight
the last entry specially, so permuting a vector changes them.  Entries
must be strictly positive; a block of probability zero has no parabolic
counterpart.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

__all__ = [
    "CoarseMap",
    "ProbVec",
    "compose",
    "conditional",
    "pushforward",
    "reflective",
    "reflective_chain_residual",
    "shannon",
    "shannon_chain_residual",
    "symplectic_chain_residual",
    "symplectic_entropy",
    "tsallis2",
]

_LN2 = math.log(2)


class ProbVec:
    """Ordered tuple of strictly positive exact probabilities summing to 1."""

    __slots__ = ("probs",)

    probs: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[Fraction | int | str]) -> None:
        ps = tuple(Fraction(p) for p in entries)
        if not ps:
            raise ValueError("probability vector must be nonempty")
        if any(p <= 0 for p in ps):
            raise ValueError("probabilities must be strictly positive")
        if sum(ps) != 1:
            raise ValueError(f"probabilities sum to {sum(ps)}, not 1")
        object.__setattr__(self, "probs", ps)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ProbVec is immutable")

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.probs)

    def __getitem__(self, i: int) -> Fraction:
        return self.probs[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbVec):
            return NotImplemented
        return self.probs == other.probs

    def __hash__(self) -> int:
        return hash(self.probs)

    def __repr__(self) -> str:
        return f"ProbVec({', '.join(str(p) for p in self.probs)})"

    @property
    def denominator(self) -> int:
        """Least n for which every n*p_i is an integer."""
        out = 1
        for p in self.probs:
            out = out * p.denominator // math.gcd(out, p.denominator)
        return out

    def scaled_counts(self, n: int) -> tuple[int, ...]:
        """The integer vector n*P; every entry must be integral."""
        if n < 1:
            raise ValueError("n must be positive")
        counts = []
        for p in self.probs:
            c = n * p
            if c.denominator != 1:
                raise ValueError(f"n={n} does not make {p} integral")
            counts.append(int(c))
        return tuple(counts)


class CoarseMap:
    """Block sizes (b_1, ..., b_m) of an increasing surjection.

    Block j collects the next b_j consecutive entries of the finer vector,
    so the last fine entry always lands in the last block.
    """

    __slots__ = ("blocks",)

    blocks: tuple[int, ...]

    def __init__(self, blocks: Iterable[int]) -> None:
        bs = tuple(int(b) for b in blocks)
        if not bs:
            raise ValueError("coarse map must have at least one block")
        if any(b < 1 for b in bs):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "blocks", bs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CoarseMap is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoarseMap):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"CoarseMap({self.blocks})"

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def domain_size(self) -> int:
        return sum(self.blocks)


def _check_compatible(dist: ProbVec, cmap: CoarseMap) -> None:
    if cmap.domain_size != len(dist):
        raise ValueError(
            f"coarse map covers {cmap.domain_size} entries, vector has {len(dist)}"
        )


def pushforward(dist: ProbVec, cmap: CoarseMap) -> ProbVec:
    """Coarse-grained vector: block sums of ``dist``."""
    _check_compatible(dist, cmap)
    out = []
    start = 0
    for b in cmap.blocks:
        out.append(sum(dist.probs[start:start + b], Fraction(0)))
        start += b
    return ProbVec(out)


def conditional(dist: ProbVec, cmap: CoarseMap, j: int) -> ProbVec:
    """Distribution of ``dist`` within block j (1-based), renormalized."""
    _check_compatible(dist, cmap)
    if not 1 <= j <= cmap.m:
        raise ValueError(f"block index {j} out of range 1..{cmap.m}")
    start = sum(cmap.blocks[:j - 1])
    block = dist.probs[start:start + cmap.blocks[j - 1]]
    total = sum(block, Fraction(0))
    return ProbVec(p / total for p in block)


def compose(outer: CoarseMap, inner: CoarseMap) -> CoarseMap:
    """Coarse map equal to applying ``inner`` first, then ``outer``."""
    if outer.domain_size != inner.m:
        raise ValueError(
            f"outer map covers {outer.domain_size} blocks, inner produces {inner.m}"
        )
    out = []
    start = 0
    for b in outer.blocks:
        out.append(sum(inner.blocks[start:start + b]))
        start += b
    return CoarseMap(out)


def _ln(p: Fraction) -> float:
    # log of numerator and denominator separately keeps tiny p accurate
    return math.log(p.numerator) - math.log(p.denominator)


def shannon(dist: ProbVec) -> float:
    """Shannon entropy in nats."""
    return -math.fsum(float(p) * _ln(p) for p in dist)


def tsallis2(dist: ProbVec) -> Fraction:
    """Order-2 Tsallis entropy 1 - sum p_i^2, exact."""
    return 1 - sum((p * p for p in dist), Fraction(0))


def reflective(dist: ProbVec) -> float:
    """Shannon entropy plus (1 - p_k) ln 2, the orbit growth rate of the
    signed-permutation families."""
    return shannon(dist) + float(1 - dist[-1]) * _LN2


def symplectic_entropy(dist: ProbVec) -> Fraction:
    """Half the Tsallis-2 entropy plus (1 - p_k^2)/2, exact."""
    pk = dist[-1]
    return tsallis2(dist) / 2 + (1 - pk * pk) / 2


def shannon_chain_residual(dist: ProbVec, cmap: CoarseMap) -> float:
    """H(P) minus its two-stage decomposition through the coarse map."""
    coarse = pushforward(dist, cmap)
    rhs = shannon(coarse) + math.fsum(
        float(coarse[j]) * shannon(conditional(dist, cmap, j + 1))
        for j in range(cmap.m)
    )
    return shannon(dist) - rhs


def reflective_chain_residual(dist: ProbVec, cmap: CoarseMap) -> float:
    """Reflective analog: interior blocks contribute Shannon terms, the
    last block contributes a reflective term."""
    coarse = pushforward(dist, cmap)
    m = cmap.m
    parts = [
        float(coarse[j]) * shannon(conditional(dist, cmap, j + 1))
        for j in range(m - 1)
    ]
    parts.append(float(coarse[m - 1]) * reflective(conditional(dist, cmap, m)))
    return reflective(dist) - (reflective(coarse) + math.fsum(parts))


def symplectic_chain_residual(dist: ProbVec, cmap: CoarseMap) -> Fraction:
    """Symplectic analog, exact: interior blocks contribute (q_j^2/2) H_2
    terms, the last block q_m^2 times its symplectic entropy."""
    coarse = pushforward(dist, cmap)
    m = cmap.m
    rhs = symplectic_entropy(coarse)
    for j in range(m - 1):
        qj = coarse[j]
        rhs += qj * qj / 2 * tsallis2(conditional(dist, cmap, j + 1))
    qm = coarse[m - 1]
    rhs += qm * qm * symplectic_entropy(conditional(dist, cmap, m))
    return symplectic_entropy(dist) - rhs
