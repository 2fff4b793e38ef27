"""Walk the whole poset pipeline on one small example, step by step.

The poset is a "bowtie with a tail": two minimal elements under a common
middle element, which sits under two maximal elements, one of which has an
extra element on top.  Its maximal chains do not all have the same length,
so the ring attached to it cannot be Gorenstein, and the torsion number
measures how far off it is.
"""

from divclass import (
    AbelianPresentation,
    ClassElement,
    bound,
    build_poset,
    choose_tree,
    class_expressions,
    is_pure,
    joinmeet_report,
    quotient_by,
    relation_matrix,
    smith_normal_form,
    structure,
    support_forms,
    torsion_number,
    verify_column_relations,
)

poset = build_poset(
    ["a", "b", "m", "u", "v", "w"],
    [("a", "m"), ("b", "m"), ("m", "u"), ("m", "v"), ("v", "w")],
)
print("elements in linear-extension order:", poset.labels)
print("cover relations:", poset.cover_label_pairs())
print("pure (all maximal chains the same size)?", is_pure(poset))

# Bounded extension: new bottom below the minimal elements, new top above
# the maximal ones.  Every Hasse edge of the extension is one facet.
extension = bound(poset)
print("\nHasse edges of the bounded extension:")
for u, v in extension.edges:
    print(f"  {extension.vertex_name(u)} -> {extension.vertex_name(v)}")

forms = support_forms(extension)
matrix = relation_matrix(forms)
print("\nrelation matrix (rows = edges, columns = z_0..z_n):")
print(matrix.pretty())

# Route 1: Smith normal form of the relation matrix.  The class group is
# always free here; its rank is |edges| - (n + 1).
snf = smith_normal_form(matrix)
print("\ninvariant factors:", snf.invariant_factors)
print("class-group rank:", matrix.rows - snf.rank, "=", len(extension.edges), "-", poset.n + 1)

presentation = AbelianPresentation(matrix.rows, matrix)
canonical = ClassElement((1,) * matrix.rows)  # sum of all edge classes
d_matrix = torsion_number(presentation, canonical)
print("torsion number via Fitting ideals:", d_matrix)
print("reduced class group (quotient by the canonical class):",
      structure(quotient_by(presentation, canonical)))

# Route 2: spanning tree and fundamental cycles.  Each vertex below the top
# keeps one upward edge; the leftover edges index a basis of the class
# group, and every tree class is expanded in that basis along the unique
# cycle its edge closes.
tree = choose_tree(extension)
print("\ntree edges (one per vertex below the top):")
for u, v in tree.tree_edges:
    print(f"  {extension.vertex_name(u)} -> {extension.vertex_name(v)}")
print("nontree (basis) edges:")
for u, v in tree.nontree_edges:
    print(f"  {extension.vertex_name(u)} -> {extension.vertex_name(v)}")

expr = class_expressions(extension, tree)
print("\ncycle coefficients (tree edge x basis edge):")
for (u, v), row in zip(tree.tree_edges, expr.cycle_coeffs):
    print(f"  [{extension.vertex_name(u)} -> {extension.vertex_name(v)}] {row}")
print("canonical class over the basis:", expr.canonical_coords)
print("expressions satisfy every defining relation?",
      verify_column_relations(extension, tree, expr))

# The two routes must agree; joinmeet_report runs both and cross-checks.
report = joinmeet_report(poset)
print("\nfull report:")
print("  class group:", report.group)
print("  torsion number:", report.torsion_number)
print("  gorenstein:", report.gorenstein, "| pure:", report.pure)
