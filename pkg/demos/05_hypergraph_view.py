"""The hypergraph (quasicluster) side of the correspondence.

Each K_n vertex becomes a hypergraph edge (the elements through it), each
element a hypergraph vertex. Element colorings transfer to proper vertex
colorings and back; padding with degree-one vertices makes the hypergraph
uniform and stripping undoes it; extending a coloring over the padding
never needs more than n colors.
"""

from eflcolor import (
    check_vertex_coloring,
    color_decomposition,
    corollary_condition,
    decomposition_to_quasicluster,
    edge_arithmetic_check,
    extend_coloring,
    find_certificate,
    fixture,
    near_pencil,
    pad_to_uniform,
    strip_degree_one,
    transfer_coloring,
)

d = fixture("paper_k9")
h, corr = decomposition_to_quasicluster(d)
print(f"quasicluster: {h.n} edges over {len(h.vertices())} vertices")
print("edge sizes:", [len(e) for e in h.edges])

colored = color_decomposition(d, find_certificate(d))
vc = transfer_coloring(colored.coloring, corr)
print("transferred coloring proper:", check_vertex_coloring(h, vc).ok)

padded, registry = pad_to_uniform(h)
print("padded to uniform size:", {len(e) for e in padded.edges})
print("strip undoes pad:", strip_degree_one(padded).edges == h.edges)
extended = extend_coloring(vc, padded)
print("extension proper with <= 9 colors:",
      check_vertex_coloring(padded, extended).ok and max(extended.values()) < 9)

print("\nedge-arithmetic certificates:")
result = edge_arithmetic_check(h, list(range(9)))
print("  worked example central edges:", dict(sorted(result.central_edges.items())))

pencil = near_pencil(8)
hp, _ = decomposition_to_quasicluster(pencil)
print("\nnear pencil on 8 vertices:")
print("  every edge has at most one odd-degree vertex:", corollary_condition(hp))
print("  certified:", edge_arithmetic_check(hp, list(range(8))) is not None)
