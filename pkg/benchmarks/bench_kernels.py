"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are run on the same inputs and their results are checked to be
equal before timings are reported.
"""
import argparse
import sys
import timeit

from cobwebs import kernels
from cobwebs.cobweb import CobwebPoset, adjacency_blocks, zeta_definitional
from cobwebs.seq import make_sequence


def chain_case(spec, levels):
    poset = CobwebPoset(make_sequence(spec), levels)
    z = zeta_definitional(poset)
    starts = list(poset.bounds[:-1])
    stops = list(poset.bounds[1:])
    return f"count chains {spec} levels 1..{levels}", "count_chain_tuples", (z, starts, stops)


def closure_case(spec, levels):
    a = adjacency_blocks(make_sequence(spec), levels)
    return f"bool closure {spec} V={a.shape[0]}", "bool_closure", (a,)


CASES = [
    chain_case("fibonacci", 8),
    chain_case("naturals", 8),
    chain_case("gaussian:2", 6),
    chain_case("gaussian:2", 7),
    closure_case("fibonacci", 10),
    closure_case("gaussian:2", 7),
]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if kernels.compiled_kernels is None:
        print("compiled backend not built; nothing to compare", file=sys.stderr)
        return 1
    backends = [("python", kernels.python_kernels), ("cython", kernels.compiled_kernels)]
    print(f"{'case':<44} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for title, fn, inputs in CASES:
        results, times = [], []
        for _, mod in backends:
            f = getattr(mod, fn)
            results.append(f(*inputs))
            times.append(min(timeit.repeat(lambda: f(*inputs), number=1, repeat=args.repeat)))
        a, b = results
        same = (a == b).all() if hasattr(a, "all") else a == b
        if not same:
            print(f"{title}: backends disagree", file=sys.stderr)
            return 1
        print(f"{title:<44} {times[0]:>10.4f} {times[1]:>10.4f} {times[0] / times[1]:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
