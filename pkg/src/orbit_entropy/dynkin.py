"""Dynkin diagrams of the four classical families and their node-removal
arithmetic.

Nodes are numbered 1..rank.  Families A, B, C are chains with the double
bond of B/C between the last two nodes.  Family D is the chain 1..rank-1
together with node rank attached to node rank-2, so both fork tips sit at
the two highest indices and tip rank-1 is not adjacent to tip rank.
Removing nodes therefore splits B/C chains by segments but splits D by
graph components; the component holding both fork tips keeps family D,
every other component is a plain chain of type A.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .entropy import ProbVec
from .exact import InexactDivisionError, IntPolynomial, factorial

__all__ = [
    "FAMILIES",
    "Diagram",
    "group_order",
    "parabolic_for_distribution",
    "parabolic_order",
    "poincare_closed",
    "poincare_parabolic",
    "poincare_quotient",
    "remove_nodes",
    "surviving_components",
]

FAMILIES = ("A", "B", "C", "D")

# (family, rank) pairs; rank-0 factors are never materialized
ParabolicType = list[tuple[str, int]]


@dataclass(frozen=True)
class Diagram:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.family == "D" and self.rank < 2:
            raise ValueError("family D requires rank >= 2")


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")


def _adjacency(diagram: Diagram) -> dict[int, list[int]]:
    m = diagram.rank
    adj: dict[int, list[int]] = {i: [] for i in range(1, m + 1)}
    if diagram.family == "D":
        edges = [(i, i + 1) for i in range(1, m - 1)]
        if m >= 3:
            edges.append((m - 2, m))
    else:
        edges = [(i, i + 1) for i in range(1, m)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _normalize_removed(diagram: Diagram, removed: Iterable[int]) -> tuple[int, ...]:
    rm = tuple(sorted(int(r) for r in removed))
    for r in rm:
        if not 1 <= r <= diagram.rank:
            raise ValueError(f"node {r} outside 1..{diagram.rank}")
    if len(set(rm)) != len(rm):
        raise ValueError("removal set has repeated nodes")
    return rm


def surviving_components(
    diagram: Diagram, removed: Iterable[int]
) -> list[tuple[tuple[int, ...], str]]:
    """Connected components of the surviving nodes, ordered by lowest
    index, each labeled with the family of the group it generates."""
    rm = set(_normalize_removed(diagram, removed))
    alive = [i for i in range(1, diagram.rank + 1) if i not in rm]
    adj = _adjacency(diagram)
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for start in alive:
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in rm and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    m = diagram.rank
    out = []
    for comp in comps:
        if diagram.family in ("B", "C"):
            fam = diagram.family if m in comp else "A"
        elif diagram.family == "D":
            fam = "D" if (m in comp and m - 1 in comp) else "A"
        else:
            fam = "A"
        out.append((comp, fam))
    return out


def remove_nodes(diagram: Diagram, removed: Iterable[int]) -> ParabolicType:
    """Factor list (family, rank) of the parabolic left by deleting nodes."""
    return [(fam, len(nodes)) for nodes, fam in surviving_components(diagram, removed)]


def group_order(family: str, rank: int) -> int:
    """Order of the reflection group: (rank+1)!, 2^rank rank!, or
    2^{rank-1} rank! for A, B/C, or D.

    Rank 1 is accepted for every family so that degenerate tail factors
    keep the uniform closed forms; the D value at rank 1 is 1.
    """
    _check_family(family)
    if rank < 1:
        raise ValueError("rank must be at least 1")
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return (1 << rank) * factorial(rank)
    return (1 << (rank - 1)) * factorial(rank)


def parabolic_order(factors: Sequence[tuple[str, int]]) -> int:
    out = 1
    for fam, rank in factors:
        out *= group_order(fam, rank)
    return out


def _bracket_sizes(family: str, rank: int) -> tuple[int, ...]:
    # degrees of the bracket factors in the closed-form length generating
    # function of each family
    if family == "A":
        return tuple(range(2, rank + 2))
    if family in ("B", "C"):
        return tuple(2 * i for i in range(1, rank + 1))
    return (rank,) + tuple(2 * i for i in range(1, rank))


def _times_bracket(coeffs: list[int], j: int) -> list[int]:
    # multiply by 1 + t + ... + t^{j-1} with a sliding window sum
    out = []
    acc = 0
    n = len(coeffs)
    for i in range(n + j - 1):
        if i < n:
            acc += coeffs[i]
        if i - j >= 0:
            acc -= coeffs[i - j]
        out.append(acc)
    return out


def _div_bracket(coeffs: list[int], j: int) -> list[int]:
    # exact division by 1 + t + ... + t^{j-1}; verified by re-multiplying
    if len(coeffs) < j:
        raise InexactDivisionError("bracket degree exceeds dividend degree")
    quot = [0] * (len(coeffs) - j + 1)
    window = 0
    for i in range(len(quot)):
        qi = coeffs[i] - window
        quot[i] = qi
        window += qi
        if i - j + 1 >= 0:
            window -= quot[i - j + 1]
    if _times_bracket(quot, j) != coeffs:
        raise InexactDivisionError("nonzero remainder in bracket division")
    return quot


@lru_cache(maxsize=None)
def poincare_closed(family: str, rank: int) -> IntPolynomial:
    """Length generating function of the full group, as a product of
    gauss brackets; evaluates to group_order at t = 1."""
    _check_family(family)
    if rank < 1:
        raise ValueError("rank must be at least 1")
    coeffs = [1]
    for j in _bracket_sizes(family, rank):
        coeffs = _times_bracket(coeffs, j)
    return IntPolynomial(coeffs)


def poincare_parabolic(factors: Sequence[tuple[str, int]]) -> IntPolynomial:
    out = IntPolynomial.one()
    for fam, rank in factors:
        out = out * poincare_closed(fam, rank)
    return out


def poincare_quotient(
    family: str, rank: int, factors: Sequence[tuple[str, int]]
) -> IntPolynomial:
    """poincare_closed(family, rank) divided by the parabolic product,
    computed by exact bracketwise division."""
    coeffs = list(poincare_closed(family, rank).coeffs)
    for fam, r in factors:
        for j in _bracket_sizes(fam, r):
            if j == 1:
                continue
            coeffs = _div_bracket(coeffs, j)
    return IntPolynomial(coeffs)


def parabolic_for_distribution(
    family: str, n: int, dist: ProbVec
) -> tuple[Diagram, tuple[int, ...], ParabolicType]:
    """Diagram of rank n-1, the removal set cut at the partial sums of
    n*P, and the factor list [A(np_1 - 1), ..., A(np_{k-1} - 1),
    family(np_k - 1)] with rank-0 factors dropped.

    For family D with np_k = 2 the factor list keeps the degenerate
    (D, 1) tail of order 1 rather than re-deriving components from the
    fork geometry; this preserves the uniform closed-form quotient.  In
    every other case the list equals remove_nodes on the same removal
    set.
    """
    counts = dist.scaled_counts(n)
    diagram = Diagram(family, n - 1)
    cuts = []
    acc = 0
    for c in counts[:-1]:
        acc += c
        cuts.append(acc)
    factors: ParabolicType = []
    for i, c in enumerate(counts):
        fam = family if i == len(counts) - 1 else "A"
        if c >= 2:
            factors.append((fam, c - 1))
    return diagram, tuple(cuts), factors
