"""Exact symbolic toolkit for singular Levi-flat polynomial hypersurfaces.

Everything is computed over the Gaussian rationals with no floating point
anywhere: Milnor numbers and local-algebra bases through standard bases in
the local ring, quasihomogeneous weight systems, an integrability certificate
for the Levi distribution, and the normal-form templates the certificates
feed into.
"""

from .errors import (
    DegreeCapExceededError,
    DegreeOverflowError,
    LeviformError,
    NonIsolatedSingularityError,
    NonzeroConstantTermError,
    NotInMaximalIdealError,
    NotLeviFlatError,
    NotQuasihomogeneousError,
    NotRealValuedError,
    NotSemiquasihomogeneousError,
    ParseError,
    PrincipalPartError,
    SingularMatrixError,
    UnsupportedDimensionError,
    VariableMismatchError,
    ZeroInputError,
)
from .forms import ExteriorForm
from .gauss import GaussRational
from .gcd import divide_exact, divides, poly_gcd, squarefree_part
from .levi import (
    HermitianPoly,
    LeviCertificate,
    complexify,
    integrability_obstruction,
    is_levi_flat,
    levi_form_restriction_split,
    levi_one_form,
    singular_locus_is_origin,
)
from .normalform import (
    NormalFormTemplate,
    arnold_template,
    determinacy_bound,
    jet,
    homogeneous_template,
    quasihomogeneous_template,
)
from .parse import parse_holomorphic, parse_mixed, parse_real_analytic
from .poly import BiPoly, Poly
from .localbasis import (
    DEFAULT_DEGREE_CAP,
    INFINITE,
    LocalAlgebraBasis,
    LocalOrder,
    StandardBasis,
    is_isolated_singularity,
    local_algebra_basis,
    milnor_number,
    mora_normal_form,
    standard_basis,
)
from .weights import (
    SemiQhDecomposition,
    WeightSystem,
    find_weights,
    newton_support,
    semiqh_split,
    weighted_degree,
)

__version__ = "0.1.0"

__all__ = [
    "GaussRational",
    "Poly",
    "BiPoly",
    "ExteriorForm",
    "HermitianPoly",
    "LeviCertificate",
    "NormalFormTemplate",
    "WeightSystem",
    "SemiQhDecomposition",
    "LocalOrder",
    "StandardBasis",
    "LocalAlgebraBasis",
    "INFINITE",
    "DEFAULT_DEGREE_CAP",
    "parse_holomorphic",
    "parse_real_analytic",
    "parse_mixed",
    "mora_normal_form",
    "standard_basis",
    "milnor_number",
    "local_algebra_basis",
    "is_isolated_singularity",
    "newton_support",
    "find_weights",
    "weighted_degree",
    "semiqh_split",
    "complexify",
    "levi_one_form",
    "levi_form_restriction_split",
    "integrability_obstruction",
    "is_levi_flat",
    "singular_locus_is_origin",
    "jet",
    "determinacy_bound",
    "homogeneous_template",
    "arnold_template",
    "quasihomogeneous_template",
    "poly_gcd",
    "squarefree_part",
    "divides",
    "divide_exact",
    "LeviformError",
    "ParseError",
    "VariableMismatchError",
    "SingularMatrixError",
    "DegreeOverflowError",
    "ZeroInputError",
    "NotInMaximalIdealError",
    "NonIsolatedSingularityError",
    "NotQuasihomogeneousError",
    "NotSemiquasihomogeneousError",
    "NotRealValuedError",
    "PrincipalPartError",
    "NotLeviFlatError",
    "NonzeroConstantTermError",
    "UnsupportedDimensionError",
    "DegreeCapExceededError",
]
