"""Measure-geometric Laplacians for discrete probability measures on [0, 1].

The mu-derivative of a step function over ``mu = sum alpha_i delta(z_i)`` is
the periodic forward difference divided by the weights, ``A``; the
mu-Laplacian is ``B = -A^T A``, the Laplacian of a weighted cycle graph.
"""

from .closed_forms import (
    ClosedFormSpectrum,
    EllipseSpec,
    Family,
    alternating6_spectrum,
    eigenpair_tuples,
    ellipse_residual,
    ellipse_tuples,
    trig_vectors,
    two_atom_spectrum,
    uniform_eigenfunction,
    uniform_eigenfunction_values,
    uniform_eigenvalue,
    uniform_eigenvector,
    uniform_spectrum,
)
from .errors import *  # noqa: F401,F403
from .experiments import (
    ConvergenceRow,
    VerificationReport,
    convergence_table,
    export_eigenfunctions,
    export_figures,
    random_measure,
    scan_trig,
    verify,
)
from .functions import (
    StepFunction,
    clamp_unit,
    energy,
    evaluate,
    inner,
    integral_upto,
    mu_antiderivative,
    mu_derivative,
    norm,
)
from .measure import (
    DiscreteMeasure,
    alternating_measure,
    distribution_function,
    load_measure,
    make_measure,
    measure_from_json,
    measure_to_json,
    two_atom_measure,
    uniform_measure,
)
from .operators import OperatorMatrix, derivative_matrix, laplacian_matrix, laplacian_stencil, matrix_rank
from .spectral import (
    SpectralDecomposition,
    eigen_residual,
    eigenfunctions,
    multiplicity_groups,
    spectrum,
    symmetric_eigendecomposition,
)

__version__ = "0.1.0"
