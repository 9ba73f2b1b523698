"""Exact-rational toolkit relating CYBE solutions and Rota-Baxter operators
on quadratic Lie algebras."""
from .errors import *  # noqa: F401,F403
from .exact_linalg import Matrix, Subspace, char_poly, kernel, rational_eigen_decomposition, scalar
from .lie import (
    LieAlgebra,
    QuotientAlgebra,
    abelian,
    center,
    derived_subalgebra,
    direct_sum,
    ideal_closure,
    induce_operator,
    is_ideal,
    quotient,
    validate,
)
from .quadratic import (
    BilinearForm,
    adjoint,
    dual_numbers_extension,
    invariant_forms_basis,
    is_invariant,
    is_nondegenerate,
    killing_form,
)
from .rota_baxter import (
    WeightSet,
    centroid_check,
    find_weights,
    is_rota_baxter,
    operators,
    rb_defect,
    theta,
)
from .structure import (
    Decomposition,
    StructureReport,
    condition_weights,
    corollary1_check,
    corollary3_check,
    corollary4_check,
    harmonize_weights,
    ideal_I_lambda,
    remark1_condition,
    theorem1_condition,
    theorem2_pipeline,
    theorem3_decomposition,
    theorem4_decomposition,
)
from .tensor import (
    Tensor2,
    Tensor3,
    cybe_element,
    is_ad_invariant,
    is_cybe_solution,
    operator_of,
    symmetric_part,
    tau,
    tensor_of,
)

__version__ = "0.1.0"
