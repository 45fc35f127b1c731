"""Error-norm benchmark over the five built-in problems.

Marches each problem at a desk-scale resolution and prints L2, Linf and RMS
knot errors plus the stepping wall time at a few output times.
"""

import argparse
import math

from telespline import (
    SchemeParams,
    UniformMesh,
    builtin_problem,
    error_norms,
    run,
)

HORIZONS = {1: 2.0, 2: 1.0, 3: 2.0, 4: 2.0, 5: 2.0}


def bench_one(pid, n_cells, dt, theta):
    problem = builtin_problem(pid)
    t_final = HORIZONS[pid]
    mesh = UniformMesh(problem.domain[0], problem.domain[1], n_cells)
    params = SchemeParams(theta=theta, dt=dt, t_final=t_final)
    steps = int(round(t_final / dt))
    times = [round(j * dt, 12) for j in (steps // 2, steps)]
    history = run(problem, mesh, params, times)
    for frame, cpu in zip(history.frames, history.stepping_seconds):
        report = error_norms(frame, problem, mesh)
        print(
            f"P{pid}  t={frame.time:<5g} L2={report.l2:.3e}  "
            f"Linf={report.l_inf:.3e}  RMS={report.rms:.3e}  cpu={cpu:.3f}s"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=100, help="mesh cells (default 100)")
    parser.add_argument("--dt", type=float, default=1e-3, help="time step (default 1e-3)")
    parser.add_argument("--theta", type=float, default=0.5)
    parser.add_argument(
        "--problems", default="1,2,3,4,5", help="comma-separated problem ids"
    )
    args = parser.parse_args()

    print(f"n = {args.n}, dt = {args.dt}, theta = {args.theta}")
    for pid in (int(p) for p in args.problems.split(",")):
        bench_one(pid, args.n, args.dt, args.theta)


if __name__ == "__main__":
    main()
