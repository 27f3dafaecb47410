"""Benchmark the numba kernel lane against the pure-NumPy fallback.

Times each hot kernel on representative workloads, then two end-to-end
evaluations, under both lanes, and checks that the lanes agree numerically.
The active lane for normal use is chosen by the PENTADGF_BACKEND environment
variable; this script switches lanes programmatically so one run covers both.

Run:

    python benchmarks/bench_backends.py [--repeats 200]
"""

import argparse
import cmath
import statistics
import time

import numpy as np

from pentadgf import _backend as backend
from pentadgf import dgf, zeros


def _time(fn, repeats):
    # one warm-up call covers jit compilation / cache loading
    fn()
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def kernel_workloads():
    rng = np.random.default_rng(12345)
    z_line = (0.0 + 1j * rng.uniform(-40.0, 40.0, 20000)).astype(np.complex128)
    z_edge = (rng.uniform(0.1, 20.0, 20000) + 1j * np.pi / 12.0).astype(np.complex128)
    v = rng.uniform(-4.3, 4.9, 1000)
    w = rng.uniform(0.0, 0.5, 1000)
    h = (rng.normal(size=1000) + 1j * rng.normal(size=1000)).astype(np.complex128)
    t_nodes = (rng.uniform(0.05, 40.0, 1000) * np.exp(1j * 1.1)).astype(np.complex128)
    s = 0.4 + 17.0j
    logq = cmath.log(0.5)
    tau = 0.2 + 0.8j
    return {
        "fu_pow (20k nodes)": lambda impl: impl["fu_pow"](z_line, s),
        "phi_edge (20k nodes)": lambda impl: impl["phi_edge"](z_edge, logq),
        "eta_edge (20k nodes)": lambda impl: impl["eta_edge"](z_edge, tau),
        "exp_weighted_sum (1k)": lambda impl: impl["exp_weighted_sum"](v, w, h, s),
        "theta_series (n=40)": lambda impl: impl["theta_series"](logq, 40),
        "phi_exp_neg (1k nodes)": lambda impl: impl["phi_exp_neg"](t_nodes),
    }


def end_to_end():
    return {
        "d_mellin(0.3+18i)": lambda: dgf.d_mellin(0.3 + 18.0j, 1e-12).value,
        "dstar_integral(2.5+3i)": lambda: dgf.dstar_integral(2.5 + 3.0j, 1e-11).value,
        "find_zeros(5)": lambda: zeros.find_zeros(5.0)[0].location,
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=50)
    args = ap.parse_args()

    lanes = backend.available()
    if "numba" not in lanes:
        print("numba unavailable: only the numpy lane can be timed")

    print(f"lanes: {', '.join(lanes)};  repeats per timing: {args.repeats}")
    header = f"{'workload':28s}" + "".join(f"{name:>12s}" for name in lanes)
    if len(lanes) == 2:
        header += f"{'speedup':>10s}{'agree':>12s}"
    print(header)
    print("-" * len(header))

    for name, load in kernel_workloads().items():
        times = {}
        values = {}
        for lane in lanes:
            impl = backend.implementations(lane)
            times[lane] = _time(lambda: load(impl), args.repeats)
            values[lane] = np.atleast_1d(np.asarray(load(impl)))
        row = f"{name:28s}" + "".join(f"{times[k]*1e3:11.3f}m" for k in lanes)
        if len(lanes) == 2:
            a, b = values["numba"], values["numpy"]
            agree = float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(a))))
            row += f"{times['numpy']/times['numba']:9.2f}x{agree:12.2e}"
        print(row)

    print()
    restore = backend.active()
    try:
        for name, task in end_to_end().items():
            times = {}
            values = {}
            for lane in lanes:
                backend.use(lane)
                dgf._mellin_meshes.clear()  # mesh caches hold lane-built arrays
                times[lane] = _time(task, max(3, args.repeats // 10))
                values[lane] = task()
            row = f"{name:28s}" + "".join(f"{times[k]*1e3:11.3f}m" for k in lanes)
            if len(lanes) == 2:
                diff = abs(values["numba"] - values["numpy"])
                row += f"{times['numpy']/times['numba']:9.2f}x{diff:12.2e}"
            print(row)
    finally:
        backend.use(restore)


if __name__ == "__main__":
    main()
