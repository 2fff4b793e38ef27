"""Two disjoint chains: the torsion number hits every nonnegative integer.

A poset made of two disjoint chains with a and b cover steps has a class
group isomorphic to Z, and the canonical class sits at (a - b) times the
generator.  So the torsion number is |a - b|: zero exactly when the chains
have equal length, which is exactly when the poset is pure.
"""

from divclass import joinmeet_report, two_chains_poset

print("d(a, b) for two disjoint chains with a and b cover steps\n")
header = "a\\b " + "".join(f"{b:>4}" for b in range(9))
print(header)
for a in range(9):
    row = [f"{a:>3} "]
    for b in range(9):
        report = joinmeet_report(two_chains_poset(a, b))
        assert report.torsion_number == abs(a - b)
        assert report.pure == (a == b)
        row.append(f"{report.torsion_number:>4}")
    print("".join(row))

print("\nThe diagonal is the Gorenstein (= pure) locus.")

report = joinmeet_report(two_chains_poset(5, 2))
print("\n(a, b) = (5, 2) in detail:")
print("  class group:", report.group)
print("  canonical class over the nontree basis:", report.canonical_in_basis)
print("  torsion number:", report.torsion_number)
print("  pure:", report.pure, "| gorenstein:", report.gorenstein)
