"""Spatial convergence study: halve h at a fixed small time step.

Prints the Linf knot error at the final time for a sequence of meshes and
the observed order log2(e_coarse / e_fine) between consecutive levels.
"""

import argparse
import math

from telespline import SchemeParams, UniformMesh, builtin_problem, error_norms, run

FINALS = {1: 0.5, 2: 1.0, 3: 1.0, 4: 1.0, 5: 1.0}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--problem", type=int, default=1, help="built-in id (1..5)")
    parser.add_argument("--levels", type=int, default=4, help="number of halvings")
    parser.add_argument("--n0", type=int, default=10, help="coarsest cell count")
    parser.add_argument("--dt", type=float, default=1e-4)
    args = parser.parse_args()

    problem = builtin_problem(args.problem)
    t_final = FINALS[args.problem]
    print(
        f"problem {args.problem}, dt = {args.dt}, theta = 0.5, "
        f"Linf error at t = {t_final}"
    )

    previous = None
    for level in range(args.levels):
        n = args.n0 * 2**level
        mesh = UniformMesh(problem.domain[0], problem.domain[1], n)
        params = SchemeParams(theta=0.5, dt=args.dt, t_final=t_final)
        history = run(problem, mesh, params, [t_final])
        err = error_norms(history.frames[0], problem, mesh).l_inf
        order = "    -" if previous is None else f"{math.log2(previous / err):5.2f}"
        print(f"  n = {n:<5d} h = {mesh.h:.5f}  Linf = {err:.4e}  order = {order}")
        previous = err


if __name__ == "__main__":
    main()
