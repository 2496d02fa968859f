"""
Finite quotients by exhaustive permutation search
=================================================

Every finite image of G(2, 1; 1) is cyclic.  We confirm this for all
homomorphisms into S_d with d <= 6, and contrast it with G(12, 3; 3),
which already maps onto the non-cyclic group S_3.
"""

from brunner_groups import GPresentation, finite_quotient_scan

for triple in [(2, 1, 1), (12, 3, 3)]:
    pres = GPresentation(*triple)
    print(pres)
    for degree in range(1, 7):
        report = finite_quotient_scan(pres, degree)
        line = f"  S_{degree}: {report.total_homs:>7} homomorphisms, all cyclic: {report.all_cyclic}"
        if report.witness is not None:
            alpha, tau = report.witness_cycles()
            line += f"  e.g. a -> {alpha}, t -> {tau}"
        print(line)
