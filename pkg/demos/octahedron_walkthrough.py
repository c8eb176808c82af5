"""Cut the octahedron U(2,4) into two square pyramids and watch every
valuation in the package survive the cut."""

from matroid_valuations import (
    Subdivision,
    interior_faces,
    intersection_lattice,
    matroid_from_bases,
    tutte,
    uniform,
    verify_valuation,
)
from matroid_valuations.catalog import valuation_table

octahedron = uniform(2, 4)
lower = matroid_from_bases(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]])
upper = matroid_from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])

S = Subdivision(octahedron, (lower, upper)).validate()
print("valid:", S.validated, S.report.cell_volumes, "->", S.report.ambient_volume)

for A, MA in intersection_lattice(S):
    print(sorted(A) or "-", len(MA), "bases")

# the square 13,14,23,24 is the only interior face besides the two pyramids
for F in interior_faces(S):
    print("interior face", F.witness, "dim", F.dim)

print("Tutte of the octahedron:", tutte(octahedron))
print("Tutte of the pyramids:", tutte(lower), "|", tutte(upper))

for name, f in valuation_table(S.dim).items():
    print(f"{name:>10}", "ok" if verify_valuation(f, S) else "FAILS")
