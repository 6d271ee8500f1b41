"""Tour of the map engine: a regular map is three involutions.

The running example is the 4-cycle embedded in the real projective plane.
Its symmetry group is the dihedral group of order 16, which is too big to
act faithfully on the 4 vertices, so the triple is carried upstairs on
the octagon and the graph is recovered from cosets.
"""

from regmaps import (
    coset_graph,
    evaluate_word,
    format_triple,
    hamming,
    invariants,
    is_isomorphic,
    named_triple,
    nonorientability_witness,
    petrie_dual,
    validate_admissible,
)

t = named_triple("h22-octagon")
print("generators on the octagon:")
print(f"  lam = {t.lam}")
print(f"  rho = {t.rho}")
print(f"  tau = {t.tau}")

# the defining relations: three involutions with lam and tau commuting
report = validate_admissible(t)
print(f"\nvalidation: ok={report.ok}, group order {report.group_order}")
for name, ok in report.checks:
    print(f"  {name}: {ok}")

# numeric profile: type {p,q}_r, counts, Euler characteristic, genus
inv = invariants(t)
print(f"\ntype {inv.type_string}: every face has {inv.covalency} sides,")
print(f"every vertex degree {inv.valency}, zig-zag walks close after {inv.petrie} steps")
print(f"V={inv.vertices} E={inv.edges} F={inv.faces} chi={inv.chi}")
print(f"orientable={inv.orientable}, genus={inv.genus}  (genus 1 nonorientable = projective plane)")

# the underlying graph lives in the cosets of the vertex stabilizer
graph = coset_graph(t)
print(f"\ncoset graph: {graph}")
print("isomorphic to the 4-cycle H(2,2):", is_isomorphic(graph, hamming(2, 2)) is not None)

# nonorientability has a constructive certificate: an exponent word with
# L R^m1 L R^m2 ... = tau, tracing a cycle whose neighbourhood is a
# Moebius band
word = nonorientability_witness(t, max_len=6)
print(f"\nwitness word: {word}")
print("evaluates to tau:", evaluate_word(t.L, t.R, word) == t.tau)

# the Petrie dual keeps the graph and swaps faces with zig-zag walks
dual_inv = invariants(petrie_dual(t))
print(f"\nPetrie dual has type {dual_inv.type_string} (p and r exchanged)")

# triples serialize to a tiny text format
print("\ntriple file:")
print(format_triple(t), end="")
