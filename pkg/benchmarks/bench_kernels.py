"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Shapes follow the fitnet-mnist and fitnet4-desk presets at batch 64. Each
line reports the best-of-N wall time per call for both backends and the
speedup of the compiled one.
"""

import argparse
import timeit

import numpy as np

from initlab import _fallback

try:
    from initlab import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    # name, x shape, kernel, stride, pad
    ("mnist conv1 im2col", (64, 1, 28, 28), 3, 1, 1),
    ("mnist conv2 im2col", (64, 16, 28, 28), 3, 1, 1),
    ("desk conv im2col", (64, 32, 8, 8), 3, 1, 1),
    ("strided im2col", (64, 16, 16, 16), 3, 2, 1),
]
POOLS = [
    ("mnist pool 4/2", (64, 16, 28, 28), 4, 2),
    ("desk pool 2/2", (64, 32, 8, 8), 2, 2),
]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def bench(repeat: int):
    rng = np.random.default_rng(0)
    rows = []
    for name, shape, k, s, p in CASES:
        x = rng.standard_normal(shape)
        cols = _fallback.im2col(x, k, k, s, p)
        for label, impl in (("im2col", "im2col"), ("col2im", "col2im")):
            if impl == "im2col":
                args = (x, k, k, s, p)
            else:
                args = (cols, shape, k, k, s, p)
            t_np = best(lambda: getattr(_fallback, impl)(*args), repeat)
            t_c = best(lambda: getattr(_ckernels, impl)(*args), repeat) if _ckernels else float("nan")
            rows.append((name.replace("im2col", label), t_np, t_c))
    for name, shape, k, s in POOLS:
        x = rng.standard_normal(shape)
        out, arg = _fallback.maxpool_forward(x, k, k, s)
        g = rng.standard_normal(out.shape)
        for label, fn_name, args in (
            ("fwd", "maxpool_forward", (x, k, k, s)),
            ("bwd", "maxpool_backward", (g, arg, shape)),
        ):
            t_np = best(lambda: getattr(_fallback, fn_name)(*args), repeat)
            t_c = best(lambda: getattr(_ckernels, fn_name)(*args), repeat) if _ckernels else float("nan")
            rows.append((f"{name} {label}", t_np, t_c))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the numpy column is meaningful")
    print(f"{'kernel':<28}{'numpy ms':>10}{'cython ms':>11}{'speedup':>9}")
    for name, t_np, t_c in bench(args.repeat):
        print(f"{name:<28}{1e3 * t_np:>10.2f}{1e3 * t_c:>11.2f}{t_np / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
