"""The Tutte polynomial from corank-nullity and from basis activities,
compared over every Schubert matroid on six elements."""

import itertools

from matroid_valuations import activities, schubert, tutte

M = schubert(6, [2, 4, 6])
print(len(M), "bases; T =", tutte(M))
for B in M.bases[:5]:
    rec = activities(M, B)
    print(B, "external", rec.external, "internal", rec.internal)

disagree = 0
for r in range(1, 7):
    for s in itertools.combinations(range(1, 7), r):
        N = schubert(6, list(s))
        disagree += tutte(N) != tutte(N, method="activities")
print("disagreements:", disagree)
