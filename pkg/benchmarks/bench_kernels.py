"""Compare the compiled and pure-numpy kernels on large arrays.

    python3 benchmarks/bench_kernels.py [--n 1000000] [--repeat 5]
"""
import argparse
import importlib
import timeit

import numpy as np

from ifdist._backend import GENERAL, IF1, IF2, IF3

CASES = [
    ("IF1", IF1, 0.0, 2.0, 1.5),
    ("IF2", IF2, 0.0, -1.0, 2.0),
    ("IF3", IF3, 3.0, 1.0, 2.0),
    ("general", GENERAL, 2.0, 3.0, 2.0),
]


def load(name):
    try:
        return importlib.import_module(f"ifdist.{name}")
    except ImportError:
        return None


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    pure, compiled = load("_pykernels"), load("_ckernels")
    if compiled is None:
        print("compiled kernels not built; only the pure backend is available")
    rng = np.random.default_rng(0)
    ls = rng.normal(0.0, 3.0, args.n)
    u = rng.uniform(size=args.n)
    lu, l1mu = np.log(u), np.log1p(-u)

    print(f"n = {args.n}, best of {args.repeat} (ms)")
    print(f"{'kernel':<10}{'case':<9}{'pure':>10}{'compiled':>10}{'speedup':>9}")
    for case, mode, p, b, q in CASES:
        jobs = {
            "pdf": lambda k: k.log_pdf_std(mode, p, b, q, ls),
            "cdf": lambda k: k.log_cdf_std(mode, p, b, q, ls, False),
            "quantile": lambda k: k.log_quantile_std(mode, p, b, q, lu, l1mu),
        }
        for kernel, job in jobs.items():
            times = {}
            for label, mod in (("pure", pure), ("compiled", compiled)):
                if mod is not None:
                    times[label] = 1e3 * min(timeit.repeat(lambda: job(mod), number=1, repeat=args.repeat))
            if compiled is not None:
                ref, got = job(pure), job(compiled)
                same = (ref == got) | (np.abs(ref - got) <= 1e-12 * np.maximum(1.0, np.abs(got)))
                assert same.all(), (kernel, case)
                speed = times["pure"] / times["compiled"]
                print(f"{kernel:<10}{case:<9}{times['pure']:>10.1f}{times['compiled']:>10.1f}{speed:>8.1f}x")
            else:
                print(f"{kernel:<10}{case:<9}{times['pure']:>10.1f}{'-':>10}{'-':>9}")


if __name__ == "__main__":
    main()
