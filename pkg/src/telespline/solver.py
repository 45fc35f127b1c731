"""Collocation time stepping for the damped wave equation.

Space is discretised by the trigonometric cubic B-spline expansion
U(x, t_j) = sum_i C_i^j TB_i(x) over i = -3 .. N-1; time by the three-level
scheme (k is the time step, theta the implicitness weight, G = U_xx - beta^2 U)

    (U^{j+1} - 2 U^j + U^{j-1}) / k^2  +  2 alpha (U^{j+1} - U^j) / k
        = theta G^{j+1} + (1 - theta) G^j + q(x, t_j)

collocated at the mesh knots, which after collecting the new level reads

    (1 + 2 alpha k + k^2 theta beta^2) U^{j+1} - k^2 theta (U_xx)^{j+1}
        = 2 (1 + alpha k) U^j + k^2 (1 - theta) ((U_xx)^j - beta^2 U^j)
          - U^{j-1} + k^2 q(x, t_j)

Substituting the knot identities from :mod:`telespline.basis` makes each
collocation row touch exactly three consecutive coefficients, so together
with one boundary row at each end the update is a corner-tridiagonal solve.

The missing level at start-up is removed with the ghost identity
U^{-1} = U^1 - 2 k g2(x): the first step gains +1 on the a-weight part of
the diagonal and +2 k g2(x_i) on the right-hand side.

The initial coefficient vector interpolates g1 at all knots and matches
g1' at both ends (for either boundary kind), which closes the system.
"""

from __future__ import annotations

import time as _time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .basis import UniformMesh, basis_weights, knot_values
from .linalg import CornerTridiagonalSystem, solve
from .problem import BoundaryKind, TelegraphProblem, central_slope

_TIME_ALIGN_TOL = 1e-9

_FORCING_LEVELS = ("j", "theta")


@dataclass(frozen=True)
class SchemeParams:
    """Time-scheme parameters.

    ``forcing_level`` selects where the source term is sampled: at the old
    level t_j (``"j"``, the default) or theta-blended between t_j and t_{j+1}
    (``"theta"``).
    """

    theta: float
    dt: float
    t_final: float
    forcing_level: str = "j"

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {self.theta}")
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not self.t_final >= self.dt:
            raise ValueError(
                f"t_final must be at least one step, got {self.t_final} < {self.dt}"
            )
        if self.forcing_level not in _FORCING_LEVELS:
            raise ValueError(
                f"forcing_level must be one of {_FORCING_LEVELS}, got {self.forcing_level!r}"
            )

    @property
    def stability_warning(self) -> bool:
        """True when theta is below the unconditionally stable range."""
        return self.theta < 0.5


@dataclass(frozen=True)
class CoefficientFrame:
    """Spline coefficients C_{-3} .. C_{N-1} at one time level."""

    values: np.ndarray
    time: float


@dataclass(frozen=True)
class SolutionHistory:
    """Frames captured at the requested output times of one run.

    ``stepping_seconds[i]`` is the wall time the stepping loop (assembly and
    solve only) had consumed when ``frames[i]`` was captured.
    """

    problem: TelegraphProblem
    mesh: UniformMesh
    frames: list[CoefficientFrame] = field(default_factory=list)
    stepping_seconds: list[float] = field(default_factory=list)


def _initial_slope_at(problem: TelegraphProblem, x: float, mesh: UniformMesh) -> float:
    if problem.initial_slope is not None:
        return problem.initial_slope(x)
    return central_slope(problem.initial_value, x, 1e-6 * mesh.h)


def initial_coefficients(problem: TelegraphProblem, mesh: UniformMesh) -> CoefficientFrame:
    """Fit the initial profile: g1 at every knot, g1' at both ends."""
    w = basis_weights(mesh)
    n = mesh.n_cells + 3
    sub = np.empty(n - 1)
    diag = np.empty(n)
    sup = np.empty(n - 1)
    rhs = np.empty(n)

    knots = mesh.knots()
    sub[: n - 2] = w.a1
    diag[1 : n - 1] = w.a2
    sup[1:] = w.a1
    rhs[1 : n - 1] = [problem.initial_value(float(x)) for x in knots]

    diag[0] = w.a3
    sup[0] = 0.0
    corner_top = w.a4
    rhs[0] = _initial_slope_at(problem, mesh.a, mesh)

    corner_bottom = w.a3
    sub[n - 2] = 0.0
    diag[n - 1] = w.a4
    rhs[n - 1] = _initial_slope_at(problem, mesh.b, mesh)

    system = CornerTridiagonalSystem(sub, diag, sup, corner_top, corner_bottom, rhs)
    return CoefficientFrame(values=solve(system), time=0.0)


def assemble_step(
    problem: TelegraphProblem,
    mesh: UniformMesh,
    params: SchemeParams,
    current: CoefficientFrame,
    previous: CoefficientFrame,
    t_j: float,
    first_step: bool = False,
) -> CornerTridiagonalSystem:
    """Build the linear system whose solution is the coefficient level j+1.

    ``previous`` is ignored when ``first_step`` is set (the ghost level
    replaces it).
    """
    w = basis_weights(mesh)
    k = params.dt
    theta = params.theta
    alpha = problem.alpha
    beta2 = problem.beta**2

    lam = 1.0 + 2.0 * alpha * k + k * k * theta * beta2
    if first_step:
        lam += 1.0
    inner_lo = lam * w.a1 - k * k * theta * w.a5
    inner_mid = lam * w.a2 - k * k * theta * w.a6

    knots = mesh.knots()
    u_now = knot_values(current.values, w, 0)
    uxx_now = knot_values(current.values, w, 2)
    if params.forcing_level == "j":
        q_vals = np.array([problem.forcing(float(x), t_j) for x in knots])
    else:
        q_vals = np.array(
            [
                theta * problem.forcing(float(x), t_j + k)
                + (1.0 - theta) * problem.forcing(float(x), t_j)
                for x in knots
            ]
        )

    rhs_mid = (
        2.0 * (1.0 + alpha * k) * u_now
        + k * k * (1.0 - theta) * (uxx_now - beta2 * u_now)
        + k * k * q_vals
    )
    if first_step:
        g2_vals = np.array([problem.initial_velocity(float(x)) for x in knots])
        rhs_mid += 2.0 * k * g2_vals
    else:
        rhs_mid -= knot_values(previous.values, w, 0)

    n = mesh.n_cells + 3
    sub = np.empty(n - 1)
    diag = np.empty(n)
    sup = np.empty(n - 1)
    rhs = np.empty(n)
    sub[: n - 2] = inner_lo
    diag[1 : n - 1] = inner_mid
    sup[1:] = inner_lo
    rhs[1 : n - 1] = rhs_mid

    t_next = t_j + k
    bc = problem.boundary
    if bc.kind is BoundaryKind.DIRICHLET:
        diag[0], sup[0], corner_top = w.a1, w.a2, w.a1
        corner_bottom, sub[n - 2], diag[n - 1] = w.a1, w.a2, w.a1
    else:
        diag[0], sup[0], corner_top = w.a3, 0.0, w.a4
        corner_bottom, sub[n - 2], diag[n - 1] = w.a3, 0.0, w.a4
    rhs[0] = bc.left(t_next)
    rhs[n - 1] = bc.right(t_next)

    return CornerTridiagonalSystem(sub, diag, sup, corner_top, corner_bottom, rhs)


def step(
    problem: TelegraphProblem,
    mesh: UniformMesh,
    params: SchemeParams,
    current: CoefficientFrame,
    previous: CoefficientFrame,
    t_j: float,
    first_step: bool = False,
) -> CoefficientFrame:
    """Advance one time level."""
    system = assemble_step(problem, mesh, params, current, previous, t_j, first_step)
    return CoefficientFrame(values=solve(system), time=t_j + params.dt)


def run(
    problem: TelegraphProblem,
    mesh: UniformMesh,
    params: SchemeParams,
    output_times: Sequence[float],
) -> SolutionHistory:
    """March from t = 0 and capture the requested output times.

    Every output time must sit on a step boundary (a multiple of dt within
    1e-9) inside [0, t_final].
    """
    times = [float(t) for t in output_times]
    if not times:
        raise ValueError("at least one output time is required")
    indices: list[int] = []
    for t in times:
        if t < -_TIME_ALIGN_TOL or t > params.t_final + _TIME_ALIGN_TOL:
            raise ValueError(f"output time {t} outside [0, {params.t_final}]")
        j = int(round(t / params.dt))
        if abs(t - j * params.dt) > _TIME_ALIGN_TOL:
            raise ValueError(
                f"output time {t} is not a multiple of the step {params.dt}"
            )
        indices.append(j)
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError(f"output times must be strictly increasing, got {times}")

    wanted = set(indices)
    last = indices[-1]
    frames: list[CoefficientFrame] = []
    seconds: list[float] = []

    frame0 = initial_coefficients(problem, mesh)
    elapsed = 0.0
    if 0 in wanted:
        frames.append(frame0)
        seconds.append(0.0)

    previous = frame0
    current = frame0
    for j in range(last):
        tic = _time.perf_counter()
        advanced = step(
            problem, mesh, params, current, previous, j * params.dt, first_step=(j == 0)
        )
        elapsed += _time.perf_counter() - tic
        previous, current = current, advanced
        if j + 1 in wanted:
            frames.append(advanced)
            seconds.append(elapsed)

    return SolutionHistory(problem=problem, mesh=mesh, frames=frames, stepping_seconds=seconds)
