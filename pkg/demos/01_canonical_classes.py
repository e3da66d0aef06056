"""Walk through the mod-n edge coloring of K_n and its class structure.

Edge {a, b} receives color (a + b) mod n. For odd n every color class is a
near-perfect matching missing exactly one vertex; for even n the
even-indexed classes miss two vertices and the odd-indexed classes are
perfect matchings.
"""

from eflcolor import canonical_edge_color, chromatic_class, class_structure_report

print("colors of a few K_9 edges:")
for a, b in [(0, 6), (2, 3), (4, 5), (7, 8)]:
    print(f"  {{{a},{b}}} -> color {canonical_edge_color(a, b, 9)}")

for n in (5, 6):
    print(f"\nall {n} classes of K_{n}:")
    for i in range(n):
        cls = chromatic_class(i, n)
        edges = " ".join(f"{a}{b}" for a, b in cls.edges)
        iso = ",".join(map(str, cls.isolated)) or "-"
        print(f"  class {i}: edges [{edges}] isolated [{iso}]")

print("\nedge counts always partition C(n,2); checking n = 2..50")
for n in range(2, 51):
    report = class_structure_report(n)
    assert sum(s.edge_count for s in report) == n * (n - 1) // 2
print("ok")
