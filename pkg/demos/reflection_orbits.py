"""Orbits of signed and unsigned permutation groups on type classes.

Deleting nodes from a diagram picks out a stabilizer; the orbit size is the
group order divided by the stabilizer order, computed here without ever
leaving integer arithmetic. As the word length grows with the letter
frequencies held proportional, the normalized log of the orbit size
approaches an entropy: plain Shannon entropy for the unsigned family, and
an extra (1 - p_k) ln 2 for the signed ones.
"""

from orbit_entropy.dynkin import Diagram, remove_nodes
from orbit_entropy.entropy import ProbVec, reflective, shannon
from orbit_entropy.reflection import normalized_log_orbit, orbit_count, orbit_poincare

print("== deleting diagram nodes ==")
for family, rank, removal in (("A", 5, (3,)), ("B", 5, (2,)), ("D", 4, (3,))):
    factors = remove_nodes(Diagram(family, rank), removal)
    print(f"  {family}{rank} minus {removal}: factors {factors}")

print()
print("== orbit sizes ==")
half = ProbVec(("1/2", "1/2"))
print("  unsigned, n=4, even split:", orbit_count("A", 4, half), "(= 4 choose 2)")
print("  signed,   n=8, even split:", orbit_count("B", 8, half))
poly = orbit_poincare("A", 4, half)
print("  the n=4 orbit refined by length:", poly.coeffs, "->", poly(1), "cosets")

print()
print("== the signed/fork cancellation ==")
print("  the fork group is half the signed group, but once the last letter")
print("  appears at least twice its stabilizer halves as well:")
for n in (4, 8, 16):
    b, d = orbit_count("B", n, half), orbit_count("D", n, half)
    print(f"    n={n:3d}: signed {b}, fork {d}, ratio {b // d}")
singles = ProbVec(("3/4", "1/4"))
b, d = orbit_count("B", 4, singles), orbit_count("D", 4, singles)
print(f"    n=4 with a single final letter: signed {b}, fork {d}, ratio {b // d}")

print()
print("== convergence to the reflective entropy ==")
dist = ProbVec(("1/4", "1/4", "1/2"))
limit = reflective(dist)
print(f"  P = (1/4, 1/4, 1/2); Shannon {shannon(dist):.6f}, "
      f"reflective limit {limit:.6f}")
print("      n   (1/n) ln(orbit)   error")
for n in (8, 16, 32, 64, 128, 256):
    value = normalized_log_orbit("B", n, dist)
    print(f"   {n:4d}   {value:.10f}   {abs(value - limit):.9f}")
print("  the gap scales like (ln n)/n, as a Stirling expansion suggests")
