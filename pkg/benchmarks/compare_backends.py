"""Benchmark the compiled kernels against the pure-numpy reference.

Times one backward taker sweep, one forward mass sweep, one maker sweep
and a Monte Carlo batch on the desk-scale grids, for each available
backend.

    python3 benchmarks/compare_backends.py [--nt 23000] [--paths 20000] [--repeat 3]
"""

import argparse
import time

import numpy as np

from mfgmm import MarketParams, StateGrids
from mfgmm.kernels import get_backend


def build_inputs(p, g):
    rng = np.random.default_rng(0)
    n = g.Nt + 1
    nqm, nb, nq = len(g.Qm), len(g.B), len(g.Q)
    mass = rng.random((n, nqm, nb))
    mass /= mass.sum(axis=(1, 2), keepdims=True)
    bid = rng.normal(0.42, 0.02, (n, nqm, nb))
    ask = rng.normal(0.42, 0.02, (n, nqm, nb))
    P0 = np.zeros((nqm, nb)); P0[nqm // 2, nb // 2] = 1.0
    mb = rng.normal(0.42, 0.01, n)
    ma = rng.normal(0.42, 0.01, n)
    im = rng.normal(0.0, 1e-4, n)
    return {
        "taker_hjb_sweep": (mass, g.Qm, g.B, p.sigma, p.k_m, p.A_m,
                            p.lambda_plus, p.lambda_minus, p.gamma, p.kappa,
                            p.delta_inf, g.dt),
        "fp_sweep": (P0, bid, ask, g.Qm, g.B, p.sigma, p.k_m, p.A_m,
                     p.lambda_plus, p.lambda_minus, g.dt),
        "maker_hjb_sweep": (mb, ma, im, g.Q, p.sigma, p.k, p.A, p.phi,
                            p.delta_inf, g.dt),
    }


def mc_inputs(p, g, n_paths):
    rng = np.random.default_rng(1)
    nt = g.Nt
    nqm, nb, nq = len(g.Qm), len(g.B), len(g.Q)
    rate_t = rng.uniform(5, 60, (2, nt, nqm, nb))
    rate_t[0][:, -1, :] = 0.0
    rate_t[1][:, 0, :] = 0.0
    rate_m = rng.uniform(5, 60, (2, nt, nq))
    rate_m[0][:, -1] = 0.0
    rate_m[1][:, 0] = 0.0
    int_t = rng.normal(0, 5, (nt, nqm, nb))
    int_m = rng.normal(0, 5, (nt, nq))
    cum_t = np.zeros_like(int_t); cum_t[1:] = np.cumsum(int_t[:-1], axis=0) * g.dt
    cum_m = np.zeros_like(int_m); cum_m[1:] = np.cumsum(int_m[:-1], axis=0) * g.dt
    return (n_paths, 7, p.T, g.dt, nt, rate_t[0], rate_t[1], rate_m[0],
            rate_m[1], p.lambda_plus, p.lambda_minus, cum_t, int_t, cum_m,
            int_m, nq // 2, nqm // 2, nb // 2)


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nt", type=int, default=23000)
    ap.add_argument("--paths", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    p = MarketParams()
    g = StateGrids.build(p, args.nt)
    sweep_args = build_inputs(p, g)
    mc_args = mc_inputs(p, g, args.paths)

    backends = {}
    for name in ("python", "cython"):
        try:
            backends[name] = get_backend(name)
        except Exception as e:
            print(f"{name}: unavailable ({e})")
    if not backends:
        return

    rows = []
    for kernel, kargs in sweep_args.items():
        times = {n: best_of(getattr(b, kernel), kargs, args.repeat)
                 for n, b in backends.items()}
        rows.append((kernel, times))
    times = {n: best_of(b.mc_paths, mc_args, args.repeat)
             for n, b in backends.items()}
    rows.append((f"mc_paths[{args.paths}]", times))

    names = list(backends)
    header = f"{'kernel':<24}" + "".join(f"{n + ' (s)':>14}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(f"grid Nt={g.Nt} dt={g.dt:.3e}, best of {args.repeat}")
    print(header)
    for kernel, times in rows:
        line = f"{kernel:<24}" + "".join(f"{times[n]:>14.4f}" for n in names)
        if len(names) == 2:
            line += f"{times[names[0]] / times[names[1]]:>9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
