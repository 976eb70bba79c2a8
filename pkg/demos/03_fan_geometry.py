#!/usr/bin/env python3
"""The fan of interlace certs as a concrete geometric object.

Trim palindromic polynomials of darga n, written in sigma coordinates,
are classified by which root of unity attains their interlace maximum.
The attaining functionals are the vertices of a simplex whose normal fan
tiles sigma-space; its isometry group is enormous and fully explicit.
"""

from palinlace import (
    cone_halfspaces,
    cone_membership,
    count_colored_automorphisms,
    functional,
    isometry_graph,
    isometry_group,
    membership_shortcuts,
    polar_vertices,
)
from palinlace.families import coprime_support, fekete, geometric

print("== the darga-6 fan, where every cosine is rational ==")
for j in range(4):
    print(f"I_{j} row: {functional(6, j).coefficients}")
print("half-space description of each maximal cone (primitive integers):")
for j in range(4):
    print(f"  C_{j}: {cone_halfspaces(6, j)}")

print("\n== membership ==")
for p, label in [(geometric(6), "ge_6"),
                 (coprime_support(12), "coprime-support, n = 12"),
                 (fekete(13), "Fekete, n = 13")]:
    cm = cone_membership(p)
    print(f"{label}: certs {sorted(cm.cones)}, face dimension {cm.face_dimension}")

print("\ncheap one-sided membership certificates:")
p = geometric(6).scale(-1)
print(f"-ge_6 shortcuts: {membership_shortcuts(p)}")

print("\n== polar vertices: rays with the maximum number of certs ==")
for j, v in enumerate(polar_vertices(6)):
    print(f"p^({j}) coefficients: {[str(c) for c in v.re[1:]]}")

print("\n== isometries, counted two ways ==")
print(f"{'n':>3} {'formula order':>14} {'brute force':>12}  structure")
for n in range(3, 17):
    order, structure = isometry_group(n)
    brute = count_colored_automorphisms(isometry_graph(n))
    print(f"{n:>3} {order:>14} {brute:>12}  {structure}")
