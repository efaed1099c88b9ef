"""Print the brute-force values that the tests freeze.

Uses only tolrep.oracles (plain sets, raw subset enumeration) and the catalog
tables, so the numbers do not depend on the closure/search code under test.
"""
from itertools import product

from tolrep import catalog as cat
from tolrep.oracles import naive_congruences, naive_is_representable, naive_n_permutable, naive_tolerances


def closed_square_subsets(A):
    pts = [(a, b) for a in range(A.n) for b in range(A.n)]
    count = 0
    for mask in range(1, 1 << len(pts)):
        S = {p for i, p in enumerate(pts) if mask >> i & 1}
        if all(tuple(op(*[r[c] for r in rows]) for c in (0, 1)) in S
               for op in A.ops for rows in product(sorted(S), repeat=op.arity)):
            count += 1
    return count


def main():
    for key, entry in cat.catalog().items():
        A = entry.algebra
        tols = naive_tolerances(A)
        rep = sum(naive_is_representable(A, set(T)) for T in tols)
        perm = tuple(naive_n_permutable(A, n) for n in (2, 3, 4))
        line = (f"{key} n={A.n} tolerances={len(tols)} congruences={len(naive_congruences(A))} "
                f"representable={rep} permutable(2,3,4)={perm}")
        if A.n <= 3:
            line += f" square-subuniverses={closed_square_subsets(A)}"
        print(line)


if __name__ == "__main__":
    main()
