"""Von Neumann stability analysis of the collocation time scheme.

Inserting a Fourier mode C_m^j = delta^j e^{i m phi} into the interior
recurrence gives, per mode angle phi, the quadratic

    A(phi) delta^2 - B(phi) delta + C(phi) = 0

with A = w2 + 2 w1 cos(phi), B = w4 + 2 w3 cos(phi), C = a2 + 2 a1 cos(phi),
where the w-coefficients collect the scheme weights on the three time levels:

    w1 = (1 + 2 alpha k + k^2 theta beta^2) a1 - k^2 theta a5
    w2 = (1 + 2 alpha k + k^2 theta beta^2) a2 - k^2 theta a6
    w3 = (2 + 2 alpha k - (1 - theta) k^2 beta^2) a1 + (1 - theta) k^2 a5
    w4 = (2 + 2 alpha k - (1 - theta) k^2 beta^2) a2 + (1 - theta) k^2 a6

The scheme is stable at phi when both roots satisfy |delta| <= 1.  Mapping
delta = (1 + xi)/(1 - xi) turns that into a Routh-Hurwitz condition: the
transformed quadratic (A+B+C) xi^2 + 2 (A-C) xi + (A-B+C) = 0 must have no
root with positive real part, which for nonnegative coefficients is
automatic.  The triple (A+B+C, A-C, A-B+C) is therefore reported alongside
the scanned amplification maximum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .basis import BasisWeights, UniformMesh, basis_weights

_DEGENERATE_LEAD = 1e-14
_STABILITY_SLACK = 1e-12


@dataclass(frozen=True)
class FourierCoefficients:
    """Per-mode recurrence weights, plus the basis weights they combine."""

    w1: float
    w2: float
    w3: float
    w4: float
    a1: float
    a2: float
    a5: float
    a6: float


@dataclass(frozen=True)
class StabilityReport:
    """Result of scanning mode angles phi over [0, pi]."""

    max_amplification: float
    worst_phi: float
    rh_conditions: tuple[float, float, float]
    stable: bool


def fourier_coefficients(
    alpha: float, beta: float, theta: float, dt: float, weights: BasisWeights
) -> FourierCoefficients:
    """The w-coefficients of the per-mode amplification quadratic."""
    if alpha < 0 or beta < 0:
        raise ValueError(f"alpha and beta must be nonnegative, got {alpha}, {beta}")
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    if dt < 0:
        raise ValueError(f"dt must be nonnegative, got {dt}")
    k = dt
    beta2 = beta * beta
    lam = 1.0 + 2.0 * alpha * k + k * k * theta * beta2
    mu = 2.0 + 2.0 * alpha * k - (1.0 - theta) * k * k * beta2
    return FourierCoefficients(
        w1=lam * weights.a1 - k * k * theta * weights.a5,
        w2=lam * weights.a2 - k * k * theta * weights.a6,
        w3=mu * weights.a1 + (1.0 - theta) * k * k * weights.a5,
        w4=mu * weights.a2 + (1.0 - theta) * k * k * weights.a6,
        a1=weights.a1,
        a2=weights.a2,
        a5=weights.a5,
        a6=weights.a6,
    )


def _quadratic_coefficients(fc: FourierCoefficients, phi: float) -> tuple[float, float, float]:
    c = math.cos(phi)
    return (
        fc.w2 + 2.0 * fc.w1 * c,
        fc.w4 + 2.0 * fc.w3 * c,
        fc.a2 + 2.0 * fc.a1 * c,
    )


def amplification_roots(fc: FourierCoefficients, phi: float) -> tuple[complex, complex]:
    """Both roots of A delta^2 - B delta + C = 0 at mode angle phi.

    When the quadratic degenerates (A ~ 0) the single linear root is paired
    with an infinite-magnitude marker.
    """
    a, b, c = _quadratic_coefficients(fc, phi)
    if abs(a) < _DEGENERATE_LEAD:
        marker = complex(math.inf, 0.0)
        if abs(b) < _DEGENERATE_LEAD:
            return marker, marker
        return complex(c / b, 0.0), marker
    disc = b * b - 4.0 * a * c
    if disc >= 0.0:
        sq = math.sqrt(disc)
        # cancellation-free split: bigger root via b + sign(b) sqrt, mate via Vieta
        q = (b + math.copysign(sq, b)) / 2.0
        if q == 0.0:
            return complex(0.0), complex(0.0)
        return complex(q / a, 0.0), complex(c / q, 0.0)
    sq = cmath.sqrt(complex(disc, 0.0))
    r1 = (b + sq) / (2.0 * a)
    return r1, r1.conjugate()


def routh_hurwitz_conditions(fc: FourierCoefficients, phi: float) -> tuple[float, float, float]:
    """The triple (A+B+C, A-C, A-B+C) at mode angle phi."""
    a, b, c = _quadratic_coefficients(fc, phi)
    return (a + b + c, a - c, a - b + c)


def _max_amplification_grid(
    fc: FourierCoefficients, phis: np.ndarray
) -> np.ndarray:
    """Vectorised |delta|_max per phi; mirrors :func:`amplification_roots`."""
    cos = np.cos(phis)
    a = fc.w2 + 2.0 * fc.w1 * cos
    b = fc.w4 + 2.0 * fc.w3 * cos
    c = fc.a2 + 2.0 * fc.a1 * cos
    amp = np.empty_like(a)

    degenerate = np.abs(a) < _DEGENERATE_LEAD
    amp[degenerate] = np.inf

    ok = ~degenerate
    disc = b * b - 4.0 * a * c
    with np.errstate(divide="ignore", invalid="ignore"):
        # complex-conjugate pair: |delta|^2 equals the root product C/A
        conj = ok & (disc < 0.0)
        amp[conj] = np.sqrt(np.maximum(c[conj] / a[conj], 0.0))

        real = ok & (disc >= 0.0)
        sq = np.sqrt(np.where(real, disc, 0.0))
        q = (b + np.where(b >= 0.0, sq, -sq)) / 2.0
        r1 = np.where(q != 0.0, q / np.where(a != 0.0, a, 1.0), 0.0)
        r2 = np.where(q != 0.0, c / np.where(q != 0.0, q, 1.0), 0.0)
        amp[real] = np.maximum(np.abs(r1), np.abs(r2))[real]
    return amp


def stability_scan(
    alpha: float,
    beta: float,
    theta: float,
    dt: float,
    mesh: UniformMesh,
    phi_samples: int = 721,
) -> StabilityReport:
    """Scan phi over [0, pi] and report the worst amplification factor."""
    if phi_samples < 2:
        raise ValueError(f"phi_samples must be at least 2, got {phi_samples}")
    weights = basis_weights(mesh)
    fc = fourier_coefficients(alpha, beta, theta, dt, weights)
    phis = np.linspace(0.0, math.pi, phi_samples)
    amp = _max_amplification_grid(fc, phis)
    worst = int(np.argmax(amp))
    max_amp = float(amp[worst])
    return StabilityReport(
        max_amplification=max_amp,
        worst_phi=float(phis[worst]),
        rh_conditions=routh_hurwitz_conditions(fc, math.pi),
        stable=max_amp <= 1.0 + _STABILITY_SLACK,
    )
