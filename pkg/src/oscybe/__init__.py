"""oscybe: exact-arithmetic workbench for Lie bialgebra structures,
Yang-Baxter equations and the induced left-invariant geometry on
oscillator and quadratic Lie algebras."""

from .algebra import (
    Covector,
    LieAlgebra,
    LinearMap,
    Vector,
    abelian,
    heisenberg,
    is_heisenberg,
    sl2,
    validate_lie_algebra,
)
from .bialgebra import (
    BialgebraParams,
    Cocycle,
    Corollary12Report,
    DualAlgebra,
    NormalForm,
    analyze_dual_structure,
    bialgebra_cocycle,
    bialgebra_condition_residual,
    coboundary,
    cocycle_check,
    cybe_check,
    cybe_reduced_residual,
    dual_bracket_from_cocycle,
    dual_from_params,
    extract_params,
    gybe_check,
    gybe_reduced_residual,
    r_bracket,
    solve_cocycle_space,
    ybe_normal_form,
)
from .catalog import (
    ExampleBundle,
    block_basis,
    block_sum,
    dim4_family,
    dim6_family,
    flat_lorentzian_bundle,
    isotropic_solution,
    sl2_bundle,
    sl2_r_matrix,
    sl2_trace_form,
    verify_pairing_table,
)
from .forms import DualMetric, OrthogonalStructure, dual_metric, validate_orthogonal
from .geometry import (
    ConnectionTable,
    CurvatureTensor,
    DualGeometryReport,
    connection,
    curvature,
    geometry_report,
    koszul_connection,
    u_r_map,
)
from .multivector import (
    Bivector,
    Trivector,
    ad_dag,
    ad_trivector,
    j_dag,
    schouten_pair,
    schouten_self,
    schouten_self_decomposable,
    wedge,
    wedge3,
)
from .oscillator import (
    OscillatorAlgebra,
    SkewDerivation,
    build_oscillator,
    decompose,
    is_generic,
    j_a,
    k_lambda,
    omega_pair,
    project_S,
)
from .scalar import BACKEND, Q, scalar_str

__version__ = "0.1.0"
