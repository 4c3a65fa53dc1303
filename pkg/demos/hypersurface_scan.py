"""Scan spin hypersurfaces: signatures two ways, Ahat, and both indices.

The signature comes out of the L-genus, then again from a rational
generating function that never sees a Pontryagin class; the scan insists
they agree before printing a row.  The last block re-derives the claimed
linear relations between the spin-3/2 index, Ahat, and the signature in
dimensions 4, 8 and 12 from scratch.
"""

import sys

from rslab import CISpec, build_ci, ci_invariants, fermat_signature
from rslab import verify_dimension_identities

max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 8

print(f"{'manifold':<10} {'sigma':>9} {'Ahat':>6} {'ind D':>6} {'ind Q':>9}")
for m in (2, 4, 6):
    for d in range(2, max_degree + 1, 2):  # even degree <=> spin hypersurface
        ci = build_ci(CISpec(m, (d,)))
        inv = ci_invariants(ci)
        assert fermat_signature(m, d) == inv.signature, "independent routes disagree"
        print(
            f"{ci.name:<10} {str(inv.signature):>9} {str(inv.ahat):>6}"
            f" {str(inv.dirac_index):>6} {str(inv.rs_index):>9}"
        )
    print()

print("index as a linear functional on Pontryagin numbers:")
for dim in (4, 8, 12):
    report = verify_dimension_identities(dim)
    assert report.all_matched
    for check in report.checks:
        coeffs = ", ".join(f"{name}: {value}" for name, value in check.coefficients)
        print(f"    dim {dim:>2}  {check.label:<28} [{coeffs}]")
