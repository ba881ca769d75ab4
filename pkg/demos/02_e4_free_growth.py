"""Grow E5 while avoiding an E4-minor, and watch M12 and R17 appear.

Run:  python demos/02_e4_free_growth.py
"""

from matx import catalog
from matx.generate import census, classify, is_splitter
from matx.isomorph import has_minor
from matx.matroid import is_internally_4connected

E4, E5 = catalog.get("E4"), catalog.get("E5-lemma")

P = classify(E5, "extend", excluded=[E4])
print("E5 extensions without an E4-minor:", ", ".join(c.label for c in P.surviving()))

# B and C each have one E4-free coextension class, and both are M12.
for base in ("B", "C"):
    free = classify(catalog.get(base), "coextend", excluded=[E4]).surviving()
    print(f"{base}: E4-free coextension classes ->", ", ".join(c.label for c in free))

M12 = catalog.get("M12")
print("M12 is a splitter for excluding E4:", is_splitter(M12, [E4]))

# The whole E4-free closure from E5 up to 17 elements.
nodes = census(catalog.get("E5"), [E4], max_size=17, max_rank=6)
print(f"\n{len(nodes)} classes")
for nd in nodes:
    print(f"  {nd.size:>2} r{nd.rank}  {catalog.name_of(nd.matroid) or '-':>6}  {nd.provenance()}")

R17 = catalog.get("R17")
print("\nR17 internally 4-connected:", is_internally_4connected(R17))
print("R17 has an E4-minor:", has_minor(R17, E4) is not None)
