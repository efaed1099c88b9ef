"""Random search for tolerances that are weakly but not plainly representable.

    python scripts/hunt_weak.py --trials 2000 --seed 1 --max-n 4
"""
import argparse
import random

from tolrep.algebra import FiniteAlgebra, Operation
from tolrep.fileio import format_algebra
from tolrep.relations import enumerate_tolerances
from tolrep.representability import WeakRepCertificate, format_pairs, is_weakly_representable


def random_algebra(rng, n, max_ops):
    ops = []
    for i in range(rng.randint(1, max_ops)):
        arity = rng.choice((1, 1, 2))
        ops.append(Operation(f"f{i}", arity, tuple(rng.randrange(n) for _ in range(n**arity))))
    return FiniteAlgebra("hunt", n, tuple(ops))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-ops", type=int, default=2)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    found = 0
    for t in range(args.trials):
        A = random_algebra(rng, rng.randint(3, args.max_n), args.max_ops)
        tols = enumerate_tolerances(A)
        for theta in tols:
            w = is_weakly_representable(A, theta, tolerances=tols)
            if isinstance(w, WeakRepCertificate) and w.lam >= 2:
                found += 1
                print(f"# trial {t}: lambda={w.lam} theta={format_pairs(theta)}")
                print(format_algebra(A))
                break
    print(f"# {found} algebras with a lambda >= 2 tolerance in {args.trials} trials")


if __name__ == "__main__":
    main()
