"""Spikes, a small census, and the full claim report.

Run:  python demos/03_spikes_and_checks.py
"""

from matx import catalog, verify
from matx.catalog import spike, spike_b, spike_c
from matx.generate import census
from matx.isomorph import are_isomorphic, is_selfdual
from matx.matroid import delete, dual

for r in (4, 5, 6):
    Z = spike(r)
    print(f"Z{r}: size {Z.size};  Z{r}\\b{r} self-dual: {is_selfdual(delete(Z, [spike_b(r, r)]))};"
          f"  Z{r}\\c{r} self-dual: {is_selfdual(delete(Z, [spike_c(r)]))}")
    if r > 4:
        tip = delete(Z, [spike_b(r, r), spike_c(r)])
        print(f"   Z{r}\\{{b{r},c{r}}} is Z{r - 1}*:", are_isomorphic(tip, dual(spike(r - 1))) is not None)

# Everything reachable from F7* without P9 or its dual is a spike relative.
nodes = census(catalog.get("F7*"), [catalog.get("P9"), catalog.get("P9*")], 12, 6)
print("\nF7* census:", ", ".join(catalog.name_of(nd.matroid) or "?" for nd in nodes))

print()
report = verify.run_all()
for c in report.claims:
    print(f"{c.id:<12} {c.status}")
print(report.summary)
