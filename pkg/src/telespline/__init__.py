"""Trigonometric cubic B-spline collocation solver for the 1D damped wave
(telegraph) equation u_tt + 2 alpha u_t + beta^2 u = u_xx + q, with Dirichlet
or Neumann boundary data, a von Neumann stability analyzer, and error-norm
benchmarking utilities.
"""

from .basis import (
    BasisValue,
    BasisWeights,
    DegenerateMeshError,
    UniformMesh,
    basis_weights,
    eval_basis,
    eval_basis_all,
    evaluate_solution,
    knot_values,
)
from .expr import (
    EvaluationError,
    Expression,
    ExpressionError,
    ExpressionSyntaxError,
    UnknownFunctionError,
    evaluate,
    parse,
)
from .linalg import CornerTridiagonalSystem, SingularSystemError, dense_solve_oracle, solve
from .metrics import ErrorReport, MissingExactSolutionError, error_norms
from .problem import (
    BoundaryKind,
    BoundarySpec,
    Diagnostic,
    TelegraphProblem,
    builtin_problem,
    validate,
)
from .solver import (
    CoefficientFrame,
    SchemeParams,
    SolutionHistory,
    assemble_step,
    initial_coefficients,
    run,
    step,
)
from .stability import (
    FourierCoefficients,
    StabilityReport,
    amplification_roots,
    fourier_coefficients,
    routh_hurwitz_conditions,
    stability_scan,
)

__version__ = "0.1.0"

__all__ = [
    "BasisValue",
    "BasisWeights",
    "BoundaryKind",
    "BoundarySpec",
    "CoefficientFrame",
    "CornerTridiagonalSystem",
    "DegenerateMeshError",
    "Diagnostic",
    "ErrorReport",
    "EvaluationError",
    "Expression",
    "ExpressionError",
    "ExpressionSyntaxError",
    "FourierCoefficients",
    "MissingExactSolutionError",
    "SchemeParams",
    "SingularSystemError",
    "SolutionHistory",
    "StabilityReport",
    "TelegraphProblem",
    "UniformMesh",
    "UnknownFunctionError",
    "amplification_roots",
    "assemble_step",
    "basis_weights",
    "builtin_problem",
    "dense_solve_oracle",
    "error_norms",
    "eval_basis",
    "eval_basis_all",
    "evaluate",
    "evaluate_solution",
    "fourier_coefficients",
    "initial_coefficients",
    "knot_values",
    "parse",
    "routh_hurwitz_conditions",
    "run",
    "solve",
    "stability_scan",
    "step",
    "validate",
]
