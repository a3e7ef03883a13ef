"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times each hot kernel on fixed inputs, then times an end-to-end workload
in fresh interpreters with and without ``FLAGCOB_PURE=1``.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from flagcob import _kernels_py

try:
    from flagcob import _kernels_c
except ImportError:
    _kernels_c = None


def _random_poly(rng, nterms, nvars, maxexp):
    out = {}
    for _ in range(nterms):
        key = [rng.randint(0, maxexp) for _ in range(nvars)]
        while key and key[-1] == 0:
            key.pop()
        out[tuple(key)] = rng.randint(-10**6, 10**6) or 1
    return out


def kernel_cases(rng):
    p1 = _random_poly(rng, 120, 6, 3)
    p2 = _random_poly(rng, 120, 6, 3)
    t1 = {(k, l): 1 for k, l in zip(list(p1)[:40], list(p2)[:40])}
    t2 = {(l, k): 2 for k, l in zip(list(p1)[40:80], list(p2)[40:80])}
    n = 12
    q = (1 << n) - 1
    exps = [[rng.randint(0, 3) for _ in range(n)] for _ in range(400)]
    f1 = {rng.randrange(1 << n): {(): 1, (1,): 2} for _ in range(40)}
    f2 = {rng.randrange(1 << n): {(0, 1): 3} for _ in range(40)}
    return [
        ("poly_mul 120x120 terms", "poly_mul", (p1, p2)),
        ("tensor_mul 40x40 terms", "tensor_mul", (t1, t2)),
        ("flag_reduce x400, n=12", "reduce_many", (exps, q)),
        ("flag_mul 40x40 masks, n=12", "flag_mul", (f1, f2, q)),
    ]


def _call(mod, name, args):
    if name == "reduce_many":
        exps, q = args
        return lambda: [mod.flag_reduce(e, q) for e in exps]
    fn = getattr(mod, name)
    return lambda: fn(*args)


def bench(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


WORKLOAD = (
    "import time;"
    "from flagcob import verify, kernels;"
    "t = time.perf_counter();"
    "verify.suite_actions(5); verify.suite_hopf(16, 16); verify.suite_ring(6, 12, 2000, 12);"
    "print(kernels.BACKEND, time.perf_counter() - t)"
)


def end_to_end(pure: bool):
    env = dict(os.environ)
    env.pop("FLAGCOB_PURE", None)
    if pure:
        env["FLAGCOB_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True,
                         text=True, check=True)
    backend, secs = out.stdout.split()
    return backend, float(secs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(1)
    print(f"{'kernel':<30} {'python':>12} {'cython':>12} {'speedup':>8}")
    for label, name, inputs in kernel_cases(rng):
        py = bench(_call(_kernels_py, name, inputs), args.repeat)
        if _kernels_c is None:
            print(f"{label:<30} {py * 1e3:>10.3f}ms {'n/a':>12}")
            continue
        assert _call(_kernels_c, name, inputs)() == _call(_kernels_py, name, inputs)()
        cy = bench(_call(_kernels_c, name, inputs), args.repeat)
        print(f"{label:<30} {py * 1e3:>10.3f}ms {cy * 1e3:>10.3f}ms {py / cy:>7.2f}x")

    print()
    for pure in (True, False):
        backend, secs = end_to_end(pure)
        print(f"end-to-end suites, {backend:<7} backend: {secs:.2f}s")


if __name__ == "__main__":
    main()
