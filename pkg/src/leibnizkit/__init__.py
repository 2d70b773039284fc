"""Exact-arithmetic toolkit for Leibniz algebras: structure-constant algebras
and representations, Kupershmidt/Rota-Baxter/Nijenhuis operator checks, the
graded cochain bracket with Maurer-Cartan machinery, Yang-Baxter tensors and
coupled form structures, finite-field search, and a batch CLI over a bundled
instance catalog."""

from .algebras import (
    LeibnizAlgebra,
    Representation,
    check_leibniz,
    check_matched_pair,
    check_representation,
    dual_representation,
    regular_representation,
    semidirect_sum,
)
from .dgla import (
    Cochain,
    balavoine_bracket,
    check_maurer_cartan,
    coboundary,
    dgla_bracket,
    dual_kn_from_mc,
    mc_from_dual_kn,
    theta_twist,
    tilde_varrho_bracket,
)
from .fields import RATIONALS, FieldSpec, Scalar, prime_field, scalar_arith
from .forms import (
    BilinearForm,
    Tensor2,
    check_bn_structure,
    check_quadratic,
    check_rbn_structure,
    check_rn_structure,
    check_ybe,
    rbn_rn_transfer,
    sharp_map,
)
from .linalg import (
    LinearSolution,
    Matrix,
    mat_inverse,
    mat_mul,
    solve_linear,
    transpose_dual,
)
from .operators import (
    DendriformPair,
    LinearOperator,
    as_operator,
    check_compatible,
    check_kupershmidt,
    check_nijenhuis,
    check_nk_condition,
    check_rota_baxter,
    deformed_bracket,
    induced_representation,
    lifted_algebra,
    nijenhuis_from_compatible,
    subadjacent_algebra,
)
from .oracles import oracle_eval
from .pairs import (
    DeformationTriple,
    KNStructure,
    OperatorPair,
    check_dual_nijenhuis_pair,
    check_kn_structure,
    check_nijenhuis_pair,
    check_perfect_pair,
    compatible_from_kn,
    deformation_from_pair,
    dual_kn_from_compatible,
    hat_tilde_representations,
    kn_to_dual_kn,
    make_kn,
    make_pair,
    sum_nijenhuis_on_twilled,
)
from .reports import CheckReport, Violation
from .search import (
    SearchSpec,
    enumerate_bn_pairs,
    enumerate_operators,
    mc_solutions_from_linear_layer,
    random_instance,
    solve_mc_linear_layer,
)
from .twilled import TwilledContext

__version__ = "0.1.0"
