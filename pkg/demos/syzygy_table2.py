"""A linear relation among twelve rank-2 matroids on four elements that the
rank valuation sees but the finer invariants do not."""

from matroid_valuations import f_rank, g_derksen, h_flags, qs_bjr
from matroid_valuations.catalog import TABLE2_COEFFS, linear_combination, table2_matroids

ms = table2_matroids()
for c, M in zip(TABLE2_COEFFS, ms):
    print(f"{c:+d}", [''.join(map(str, b)) for b in M.bases])

for name, f in (("rank", f_rank), ("flags", h_flags), ("derksen", g_derksen), ("qs", qs_bjr)):
    total = linear_combination(f, ms, TABLE2_COEFFS)
    print(f"{name:>8}:", "zero" if not total else f"nonzero, {len(total.support())} terms")
