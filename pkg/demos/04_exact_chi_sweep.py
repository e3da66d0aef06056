"""Desk-scale bound check: exact chromatic index never exceeds n.

Enumerates every clique partition of E(K_n) for n <= 5 and a batch of
seeded random instances for larger n, computing the exact chromatic index
of each conflict graph and, where a certificate exists, the certified
coloring's size.
"""

from eflcolor import (
    color_decomposition,
    enumerate_decompositions,
    exact_chromatic_index,
    find_certificate,
    random_decomposition,
)

print("exhaustive sweep, n <= 5:")
for n in range(2, 6):
    instances = list(enumerate_decompositions(n))
    chis = [exact_chromatic_index(d).chi for d in instances]
    assert all(chi <= n for chi in chis)
    print(f"  n={n}: {len(instances):4d} decompositions, max chi {max(chis)}")

print("\nseeded random instances, n = 9:")
arithmetic = 0
for seed in range(30):
    d = random_decomposition(9, seed)
    chi = exact_chromatic_index(d).chi
    cert = find_certificate(d)
    certified = "-"
    if cert is not None:
        arithmetic += 1
        certified = str(color_decomposition(d, cert).colors_used)
    print(f"  seed={seed:2d}: elements={len(d.elements):2d} chi={chi} certified={certified}")
print(f"{arithmetic}/30 instances are arithmetic under the given labels")
