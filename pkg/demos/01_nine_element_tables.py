"""Regenerate the extension and coextension tables of the nine-element matroid P9.

Run:  python demos/01_nine_element_tables.py
"""

from matx import catalog
from matx.generate import classify


def show(title, partition):
    print(title)
    for c in partition.classes:
        print(f"  {c.label:>10}  " + " ".join(c.member_strings))
    print()


P9 = catalog.get("P9")
print(P9.pretty(), "\n")

# Every simple column we can add lands in one of three isomorphism classes.
show("P9 extensions", classify(P9, "extend"))

# Going one step further along the chain D -> X -> Y.
for name in ("D1", "D2", "D3", "X1"):
    show(f"{name} extensions", classify(catalog.get(name), "extend"))

# Rows added together with a new basis element: 22 candidates, 8 classes.
# E4 is the class every later argument excludes.
show("P9 coextensions", classify(P9, "coextend"))
