"""Veronese subrings: class group Z/r, torsion number gcd(r, n) off the
Gorenstein locus.

The r-th Veronese of a polynomial ring in n >= 2 variables has class group
Z/r with canonical class n times the generator, so it is Gorenstein exactly
when r divides n, and otherwise its torsion number is gcd(r, n).  The n = 1
column is degenerate: the ring is again a polynomial ring, whatever r is.
"""

import math

from divclass import cone_report, veronese_cone

print("d(n, r) for the r-th Veronese in n variables ('.' = Gorenstein)\n")
print("r\\n " + "".join(f"{n:>4}" for n in range(1, 13)))
for r in range(1, 13):
    row = [f"{r:>3} "]
    for n in range(1, 13):
        report = cone_report(veronese_cone(n, r))
        if n >= 2:
            expected = 0 if n % r == 0 else math.gcd(r, n)
            assert report.torsion_number == expected
        else:
            # one variable: K[x^r] is a polynomial ring, so always Gorenstein
            assert report.gorenstein
        cell = "." if report.gorenstein else str(report.torsion_number)
        row.append(f"{cell:>4}")
    print("".join(row))

print("\n(n, r) = (4, 6) in detail:")
report = cone_report(veronese_cone(4, 6))
print("  facet forms:", veronese_cone(4, 6).forms)
print("  class group:", report.group)
print("  torsion number:", report.torsion_number, "= gcd(6, 4)")
