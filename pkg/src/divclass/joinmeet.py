"""Join-meet (Hibi) ring of a finite poset: class group and torsion number.

The cone attached to a poset P on n elements lives in coordinates
(z_0, z_1, ..., z_n), one z_i per element plus the auxiliary z_0.  Every
Hasse edge e of the bounded extension contributes one facet, with support
form

    z_i          for e = (v_i, top),
    z_i - z_j    for e = (v_i, v_j) inside P,
    z_0 - z_j    for e = (bot, v_j),

and the class group is generated by the corresponding height-one prime
classes [P_e] subject to the coefficient columns of those forms.  It is
always free of rank |E| - (n + 1).

A spanning tree of the Hasse diagram assigning one upward edge to each
vertex below the top makes the tree rows of the relation matrix upper
triangular with unit diagonal, so the nontree classes form a basis.  Each
tree class is expressed in that basis through the fundamental cycle its
edge closes, with coefficients +1/-1/0 read off the cycle orientation.
Summing the expressions of all edge classes gives the canonical class; the
gcd of its basis coordinates is the torsion number, which is also computed
independently from Fitting ideals of the relation matrix and cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .abelian import AbelianPresentation, ClassElement, structure, torsion_number
from .errors import InternalInvariantError
from .exact_linalg import IntMatrix
from .poset import BoundedPoset, Poset, bound, is_pure
from .semigroup import ClassGroupReport


@dataclass(frozen=True)
class SupportForm:
    """Coefficients of one facet form over (z_0, ..., z_n), with its edge."""

    coeffs: tuple
    source_edge: tuple


@dataclass(frozen=True)
class SpanningTree:
    """One upward tree edge per vertex of the bounded poset except the top.

    ``tree_edges[v]`` is the edge chosen for vertex v (v = 0 is the bottom);
    ``nontree_edges`` lists the remaining Hasse edges in enumeration order.
    """

    tree_edges: tuple
    nontree_edges: tuple


@dataclass(frozen=True)
class ClassExpression:
    """Tree classes in the nontree basis, plus the canonical coordinates.

    ``cycle_coeffs[i][j]`` is the coefficient of the j-th nontree class in
    the i-th tree class (always -1, 0, or 1); ``canonical_coords[j]`` is
    1 + sum_i cycle_coeffs[i][j], the j-th coordinate of the canonical
    class, i.e. of the sum of all edge classes.
    """

    cycle_coeffs: tuple
    canonical_coords: tuple


def support_forms(extension: BoundedPoset) -> tuple:
    """One support form per Hasse edge, in the enumeration order of ``bound``."""
    n = extension.base.n
    top = extension.top
    forms = []
    for u, v in extension.edges:
        coeffs = [0] * (n + 1)
        coeffs[u] = 1
        if v != top:
            coeffs[v] = -1
        forms.append(SupportForm(tuple(coeffs), (u, v)))
    return tuple(forms)


def relation_matrix(forms) -> IntMatrix:
    """Relation matrix of the class group: one row per edge, columns z_0..z_n."""
    rows = [f.coeffs for f in forms]
    width = len(rows[0]) if rows else 0
    return IntMatrix.from_rows(rows, cols=width)


def choose_tree(extension: BoundedPoset) -> SpanningTree:
    """Deterministic spanning tree: each vertex keeps its smallest upward edge.

    For every vertex below the top, the upward Hasse edge with the
    smallest-labelled target is kept (the top counts as largest); the
    bottom keeps its edge to the smallest minimal element.  The resulting
    tree rows are upper triangular with unit diagonal, which is what makes
    the nontree classes a basis.
    """
    n = extension.base.n
    ups: dict = {}
    for u, v in extension.edges:
        ups.setdefault(u, []).append(v)
    tree = []
    for v in range(n + 1):
        targets = ups.get(v)
        if not targets:
            raise InternalInvariantError(f"vertex {v} has no upward edge in the Hasse diagram")
        tree.append((v, min(targets)))
    tree_set = set(tree)
    nontree = tuple(e for e in extension.edges if e not in tree_set)
    if len(nontree) + len(tree) != len(extension.edges):
        raise InternalInvariantError("tree edges do not partition the edge set")
    for v, (source, target) in enumerate(tree):
        # upper triangular with unit diagonal: row v is z_v or z_v - z_target
        if source != v or target <= v:
            raise InternalInvariantError(f"tree row {v} is not upper triangular")
    top = extension.top
    for v in range(n + 1):
        w, steps = v, 0
        while w != top:
            w = tree[w][1]
            steps += 1
            if steps > n + 2:
                raise InternalInvariantError("tree does not reach the top")
    return SpanningTree(tuple(tree), nontree)


def class_expressions(extension: BoundedPoset, tree: SpanningTree) -> ClassExpression:
    """Fundamental-cycle coefficients of every tree class, and the canonical class.

    For a nontree edge e_j = (x, y), the tree plus e_j closes a unique
    cycle; orienting it x -> y, a tree edge traversed along its own
    direction contributes +1 to the j-th coefficient of its class, one
    traversed backwards contributes -1.  The cycle climbs from y to the
    meet of the two tree paths and descends to x, so the y-side tree edges
    are the +1's and the x-side ones the -1's.
    """
    n = extension.base.n
    top = extension.top
    parent = [edge[1] for edge in tree.tree_edges]

    def path_to_top(v):
        out = [v]
        while out[-1] != top:
            out.append(parent[out[-1]])
        return out

    m = len(tree.nontree_edges)
    coeffs = [[0] * m for _ in range(n + 1)]
    for j, (x, y) in enumerate(tree.nontree_edges):
        px = path_to_top(x)
        py = path_to_top(y)
        ix, iy = len(px), len(py)
        while ix > 0 and iy > 0 and px[ix - 1] == py[iy - 1]:
            ix -= 1
            iy -= 1
        for w in py[:iy]:
            coeffs[w][j] += 1
        for w in px[:ix]:
            coeffs[w][j] -= 1
    canonical = tuple(1 + sum(coeffs[i][j] for i in range(n + 1)) for j in range(m))
    return ClassExpression(tuple(map(tuple, coeffs)), canonical)


def verify_column_relations(
    extension: BoundedPoset, tree: SpanningTree, expr: ClassExpression
) -> bool:
    """Substitute the tree-class expressions into every defining relation.

    Each coordinate column of the relation matrix says a certain integer
    combination of edge classes vanishes; replacing the tree classes by
    their nontree expressions must leave the zero vector over the basis.
    """
    forms = {f.source_edge: f.coeffs for f in support_forms(extension)}
    n = extension.base.n
    tree_rows = [forms[e] for e in tree.tree_edges]
    nontree_rows = [forms[e] for e in tree.nontree_edges]
    for col in range(n + 1):
        for j in range(len(tree.nontree_edges)):
            total = nontree_rows[j][col]
            total += sum(expr.cycle_coeffs[i][j] * tree_rows[i][col] for i in range(n + 1))
            if total != 0:
                return False
    return True


def joinmeet_report(poset: Poset) -> ClassGroupReport:
    """Full class-group report of the join-meet ring of a poset.

    The torsion number is computed twice, once from the fundamental-cycle
    coordinates of the canonical class and once from Fitting ideals of the
    relation matrix, and the two must agree; so must the freeness and
    rank of the class group.  Any mismatch raises, since each one is a
    theorem.
    """
    extension = bound(poset)
    forms = support_forms(extension)
    matrix = relation_matrix(forms)
    r = len(forms)
    n = poset.n
    presentation = AbelianPresentation(r, matrix)
    group = structure(presentation)
    expected_rank = r - (n + 1)
    if group.torsion_factors or group.free_rank != expected_rank:
        raise InternalInvariantError(
            f"class group of a join-meet ring must be free of rank {expected_rank}, got {group}"
        )
    tree = choose_tree(extension)
    expr = class_expressions(extension, tree)
    if any(c not in (-1, 0, 1) for row in expr.cycle_coeffs for c in row):
        raise InternalInvariantError("fundamental-cycle coefficients must be -1, 0, or 1")
    if not verify_column_relations(extension, tree, expr):
        raise InternalInvariantError("tree-class expressions violate the defining relations")
    canonical = ClassElement((1,) * r)
    d_tree = math.gcd(*(abs(c) for c in expr.canonical_coords))
    d_matrix = torsion_number(presentation, canonical)
    if d_tree != d_matrix:
        raise InternalInvariantError(
            f"tree-basis torsion number {d_tree} disagrees with the Fitting-ideal value {d_matrix}"
        )
    return ClassGroupReport(
        num_height_one_primes=r,
        group=group,
        canonical=canonical,
        canonical_in_basis=expr.canonical_coords,
        torsion_number=d_matrix,
        gorenstein=(d_matrix == 0),
        pure=is_pure(poset),
    )
