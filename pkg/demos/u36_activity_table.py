"""Three Schubert-type cells tile the hypersimplex of U(3,6).  Print the
activity of every basis in every intersection, then count parity."""

from matroid_valuations import u36_subdivision
from matroid_valuations.catalog import activity_table, parity_violations

S = u36_subdivision().validate()
print("cells:", [len(c) for c in S.cells], "volumes", S.report.cell_volumes)

header, rows = activity_table(S)
print("\t".join(header))
for row in rows:
    print("\t".join(row))

# each (basis, E, I) pair should appear as often with even |A| as with odd |A|
print(len(parity_violations(S)), "parity violations")
