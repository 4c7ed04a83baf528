"""Time the compiled RK4 kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``. Each row reports the best of
several repeats for one kernel call on each backend and the speedup.
"""

import argparse
import timeit

from ads_lorentz import _backend

CASES = {
    "killing_flow K2, s=2, step=1e-3": ("killing_flow", (2, 0.3, 0.4, 2.0, 1e-3)),
    "killing_flow K3, s=2, step=1e-4": ("killing_flow", (3, -0.5, 1.0, 2.0, 1e-4)),
    "hamiltonian_flow t=3, step=1e-4": ("hamiltonian_flow", (0.0, 0.0, 1.0, 3.0, 1e-4)),
}


def best_time(fn, args, repeat, number):
    return min(timeit.repeat(lambda: fn(*args), repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=3)
    args = parser.parse_args(argv)

    py = _backend.load("python")
    try:
        cy = _backend.load("cython")
    except ImportError:
        cy = None
        print("compiled kernels not built; timing the Python fallback only")

    print(f"{'case':36s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}")
    for name, (func, call_args) in CASES.items():
        t_py = best_time(getattr(py, func), call_args, args.repeat, args.number)
        if cy is None:
            print(f"{name:36s} {t_py * 1e3:12.3f} {'-':>12s} {'-':>8s}")
            continue
        t_cy = best_time(getattr(cy, func), call_args, args.repeat, args.number)
        print(f"{name:36s} {t_py * 1e3:12.3f} {t_cy * 1e3:12.3f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
