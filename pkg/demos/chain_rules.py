"""Chain rules: merging outcomes splits every entropy into a coarse part
plus conditional parts, and the orbit counts factor the same way.

The float identities hold to roundoff; the rational and integer ones hold
exactly, and the exact checkers return both sides so the residual is a
genuine zero, not a small number.
"""

from orbit_entropy.entropy import (
    CoarseMap,
    ProbVec,
    conditional,
    pushforward,
    reflective_chain_residual,
    shannon_chain_residual,
    symplectic_chain_residual,
)
from orbit_entropy.reflection import (
    coarsening_cardinality_check,
    coarsening_poincare_check,
)
from orbit_entropy.symplectic import symplectic_chain_identity_check

dist = ProbVec(("1/2", "1/4", "1/4"))
cmap = CoarseMap((2, 1))

print("== merging the first two outcomes of P = (1/2, 1/4, 1/4) ==")
coarse = pushforward(dist, cmap)
print("  coarse distribution:", tuple(str(p) for p in coarse.probs))
for j in (1, 2):
    cond = conditional(dist, cmap, j)
    print(f"  conditional within block {j}:", tuple(str(p) for p in cond.probs))

print()
print("== entropy residuals ==")
print("  Shannon   :", f"{shannon_chain_residual(dist, cmap):.2e}")
print("  reflective:", f"{reflective_chain_residual(dist, cmap):.2e}")
print("  symplectic:", symplectic_chain_residual(dist, cmap), "(exact rational)")

print()
print("== orbit counts factor along the merge ==")
card = coarsening_cardinality_check("A", 8, dist, cmap)
print(f"  unsigned n=8: fine orbit {card.lhs} = coarse x conditionals {card.rhs}")
card = coarsening_cardinality_check("B", 8, dist, cmap)
print(f"  signed   n=8: fine orbit {card.lhs} = coarse x conditionals {card.rhs}")

poly = coarsening_poincare_check("B", 8, dist, cmap)
print("  the refinement by length also matches: degree",
      poly.lhs.degree, "polynomials, residual is zero:", poly.residual.is_zero)

print()
print("== and over a finite field ==")
skew = ProbVec(("1/4", "1/4", "1/2"))
report = symplectic_chain_identity_check(4, skew, CoarseMap((2, 1)), 2)
print(f"  n=4, q=2: both sides {report.lhs}, residual {report.residual}")
report = symplectic_chain_identity_check(12, skew, CoarseMap((1, 2)), 3)
print(f"  n=12, q=3: equality holds: {report.holds} "
      f"(sides have {len(str(report.lhs))} digits)")
