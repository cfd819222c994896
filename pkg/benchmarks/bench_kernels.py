"""Time each numba kernel against its NumPy twin.

Usage: ``python benchmarks/bench_kernels.py [--repeat 5]``

Numba timings exclude the first (compiling) call. Sizes match what the
toolkit meets on MNIST: 60000 rows, 784 inputs, 128 penultimate units.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from labelnoise import _kernels as k


def cases(rng):
    n, m = 60000, 10
    y = rng.integers(0, m, n)
    pred = rng.integers(0, m, n)
    pixels = rng.random((n, 784))
    active = rng.random(n) < 0.7
    feats = rng.random((n, 128))
    cum = np.cumsum(rng.dirichlet(np.ones(m), m), axis=1)
    cum[:, -1] = 1.0
    u = rng.random(n)
    probs = rng.dirichlet(np.ones(m), n)
    return {
        "confusion_counts": (y, pred, m),
        "masked_sq_dists": (pixels, pixels[0], active),
        "class_variances": (feats, y, m),
        "sample_rows": (y, cum, u),
        "best_other_class": (probs, y),
    }


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not k.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<18} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for name, call_args in cases(rng).items():
        fn_np = getattr(k, f"{name}_numpy")
        fn_nb = getattr(k, f"{name}_numba")
        fn_nb(*call_args)  # compile
        t_np = min(timeit.repeat(lambda: fn_np(*call_args), number=1, repeat=args.repeat)) * 1e3
        t_nb = min(timeit.repeat(lambda: fn_nb(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<18} {t_np:>10.2f} {t_nb:>10.2f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
