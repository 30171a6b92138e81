"""Run configuration: tolerances, contour parameters, eps schedules.

All defaults are pinned here so that every numerical contract in the
test suite refers to a single source of truth.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict


# Classification of points against the null cone happens on Euclidean
# unit representatives, so an absolute tolerance is meaningful.
CLASS_TOL = 1e-12

# Orthogonality defect allowed for O(n,1) matrices, |g^T J g - J|_max.
ORTHOGONALITY_TOL = 1e-12


def default_eps_schedule() -> list[float]:
    """Strictly decreasing eps values used by the eps-oracle."""
    return [1e-2, 5e-3, 2.5e-3, 1.25e-3]


@dataclass
class RunConfig:
    """Numerical knobs shared by the contour engine and the oracles.

    Attributes
    ----------
    quad_tol : float
        Absolute tolerance per adaptive quadrature call.
    oracle_tol : float
        Allowed |contour - eps-oracle| disagreement on measurable regions.
    xr_tol, eq7_tol, trig_tol, santalo_tol : float
        Contract tolerances for the closed-form cross checks.
    delta : float
        Radius of the clockwise semicircle around r = 1.
    pole_guard : float
        Integrand evaluations closer than this to r = +-1 abort.
    eps_schedule : list of float
        Decreasing eps values for Richardson extrapolation.
    max_depth : int
        Subdivision limit forwarded to the adaptive integrator.
    seed : int
        Seed for every stochastic component (Monte Carlo, tests).
    """

    quad_tol: float = 1e-10
    oracle_tol: float = 1e-5
    xr_tol: float = 1e-9
    eq7_tol: float = 1e-9
    trig_tol: float = 1e-9
    santalo_tol: float = 1e-8
    delta: float = 0.1
    delta_min: float = 1e-3
    pole_guard: float = 1e-3
    eps_schedule: list[float] = field(default_factory=default_eps_schedule)
    max_depth: int = 200
    divergence_growth: float = 1.1
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        if self.quad_tol <= 0 or self.oracle_tol <= 0:
            raise ValueError("tolerances must be positive")
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        eps = list(self.eps_schedule)
        if any(e <= 0 for e in eps) or any(a <= b for a, b in zip(eps, eps[1:])):
            raise ValueError("eps schedule must be positive and strictly decreasing")

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        with open(path) as fh:
            return cls(**json.load(fh))

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT = RunConfig()
