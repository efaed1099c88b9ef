"""Full report for every catalog algebra: tolerances, representability,
weak representability, permutability and the lattice-specific checks."""
import sys

from tolrep import catalog as cat
from tolrep.permutability import check_tolerances_are_congruences, permutability_report
from tolrep.relations import enumerate_tolerances
from tolrep.representability import (format_pairs, is_representable, is_weakly_representable,
                                     lattgen2_check, rep_report, weak_report)


def main(out=sys.stdout):
    for key, entry in cat.catalog().items():
        A = entry.algebra
        tols = enumerate_tolerances(A)
        print(f"== {key} ({entry.note}) tolerances={len(tols)}", file=out)
        for theta in tols:
            print(f"THETA {format_pairs(theta)}", file=out)
            for line in rep_report(A, is_representable(A, theta)):
                print(f"  {line}", file=out)
            for line in weak_report(A, is_weakly_representable(A, theta, tolerances=tols)):
                print(f"  {line}", file=out)
        for line in permutability_report(A, 4).lines():
            print(line, file=out)
        ok, w = check_tolerances_are_congruences(A, tols)
        print(f"TOLERANCES-ARE-CONGRUENCES {'yes' if ok else 'no ' + format_pairs(w)}", file=out)
        if entry.kind == "lattice":
            print(lattgen2_check(A).line("LATTGEN2"), file=out)


if __name__ == "__main__":
    main()
