"""Weierstrass-Enneper minimal surfaces over the unit disk and a sharp Schwarz-type bound."""

__version__ = "0.1.0"

from .boundary import (
    QuadratureError,
    QuadratureSpec,
    SchwarzReport,
    circle_length,
    mean_ratio_profile,
    schwarz_report,
)
from .equality import (
    AffineCoefficients,
    EqualityVerdict,
    affine_coefficients,
    affine_surface,
    boundary_speed,
    conformality_check,
    equality_certificate,
)
from .estimators import SchwarzBoundEstimator, SurfaceEmbedding
from .mobius import (
    DerivedSurface,
    DiskMobius,
    mobius_apply,
    mobius_derivative,
    precompose,
    pullback_identity_residual,
)
from .series import PowerSeries, antiderivative, derivative, evaluate, multiply
from .subharmonic import (
    RieszReport,
    SingularPointError,
    fd_laplacian,
    laplacian_identity_residual,
    riesz_balance,
)
from .surface import (
    IsothermalReport,
    Point3,
    PolarGrid,
    Surface,
    conformal_density,
    from_pq,
    isothermal_report,
    position,
    sum_of_squares_residual,
    tangents,
)
from .validation import DiskDomainError
