"""Segre products of Veronese subrings: torsion numbers above 1.

For the Segre product of the p-th Veronese in m variables with the q-th
Veronese in n variables, the class group is Z[P] + Z[Q] modulo p[P] + q[Q],
i.e. Z + Z/gcd(p, q), and the canonical class is m[P] + n[Q].  The ring is
Gorenstein exactly when (m, n) is an integer multiple of (p, q).

The headline instance (m, p, n, q) = (4, 2, 9, 3) has free class group of
rank one and torsion number 6.
"""

from divclass import cone_report, segre_veronese_cone

cone = segre_veronese_cone(4, 2, 9, 3)
report = cone_report(cone)
print("(m, p, n, q) = (4, 2, 9, 3)")
print("  facet forms:")
for f in cone.forms:
    print("   ", f)
print("  class group:", report.group)
print("  canonical class over a basis of Z:", report.canonical_in_basis)
print("  torsion number:", report.torsion_number)
print("  gorenstein:", report.gorenstein)

print("\nGorenstein locus for (p, q) = (2, 3), 2 <= m, n <= 12 ('.' = Gorenstein):")
print("m\\n " + "".join(f"{n:>4}" for n in range(2, 13)))
for m in range(2, 13):
    row = [f"{m:>3} "]
    for n in range(2, 13):
        r = cone_report(segre_veronese_cone(m, 2, n, 3))
        row.append(f"{'.' if r.gorenstein else r.torsion_number:>4}")
    print("".join(row))
print("\nGorenstein cells are exactly (m, n) = (2c, 3c).")
