# Count equivalence classes of symmetric pencils over F_2, curve by curve.
import time
from collections import Counter

from theta2 import field_new, sdr_census

F2 = field_new(1)
t0 = time.time()
res = sdr_census(3, F2)
print(f"{res.pencils} symmetric 3x3 pencils, {len(res.rows)} smooth cubics "
      f"({res.coverage}, {time.time() - t0:.1f}s)")

table = Counter((r.ordinary, r.points % 2 == 0, r.class_count) for r in res.rows)
print("ordinary  even  classes  curves")
for (ordi, even, n), count in sorted(table.items()):
    print(f"{ordi!s:9} {even!s:5} {n:7}  {count}")

example = next(r for r in res.rows if r.class_count)
print("e.g.", example.form, "points:", example.points, "class representative code:", example.classes[0])

sample = sdr_census(4, F2, sample=200, seed=3)
print(f"quartics: {len(sample.rows)} curves seen in a {sample.coverage} run; "
      f"max classes {max(r.class_count for r in sample.rows)}")
