"""Exact and numerical machinery for Hecke-algebra derivatives.

Layers, bottom to top: exact scalars (rational functions in q and
polynomials in (p, kappa)), exact dense linear algebra with a compiled
core, symmetric-group combinatorics and seminormal modules, the finite
and affine Hecke algebras with derivative functors on their modules, the
graded algebra with Speh modules, and the numeric transport between the
graded and affine sides.
"""

from .combinatorics import (
    Permutation,
    hook_dimension,
    min_coset_reps,
    parse_partition,
    partitions,
    render_partition,
    standard_tableaux,
    sym_group,
    vertical_strips,
)
from .scalars import KAPPA_SYM, P_SYM, PKPoly, QRational, parse_qrational
from .linalg import BACKEND
from .symgroup import (
    decompose_sn,
    sign_isotypic,
    specht_module,
)
from .finite_hecke import (
    FiniteHeckeElement,
    parse_element,
    poincare_value,
    render_element,
    sign_character,
    sign_idempotent,
    sign_projector,
)
from .affine import (
    AffineElement,
    levi_embed,
    multiply,
    oracle_apply,
    parse_affine,
    render_affine,
    sign_projector_tail,
)
from .affine.modules import (
    FinDimAffineModule,
    antispherical_apply,
    antispherical_generator,
    bz_derivative,
    bz_dimension,
    central_block,
    generic_guard,
    induce,
    leibniz_check,
    one_dimensional_module,
    principal_series,
    verify_relations,
)
from .graded import (
    GradedModule,
    check_graded_relations,
    decompose_as_speh,
    g_bz_derivative,
    pieri_verify,
    speh_module,
)
from .bridge import (
    bridge_bz_compare,
    fc_value,
    lambda_functor,
    matrix_function,
    theta_spectrum_check,
)

__version__ = "0.1.0"

__all__ = [
    "AffineElement",
    "BACKEND",
    "FinDimAffineModule",
    "FiniteHeckeElement",
    "GradedModule",
    "KAPPA_SYM",
    "P_SYM",
    "PKPoly",
    "Permutation",
    "QRational",
    "antispherical_apply",
    "antispherical_generator",
    "bridge_bz_compare",
    "bz_derivative",
    "bz_dimension",
    "central_block",
    "check_graded_relations",
    "decompose_as_speh",
    "decompose_sn",
    "fc_value",
    "g_bz_derivative",
    "generic_guard",
    "hook_dimension",
    "induce",
    "lambda_functor",
    "leibniz_check",
    "levi_embed",
    "matrix_function",
    "min_coset_reps",
    "multiply",
    "one_dimensional_module",
    "oracle_apply",
    "parse_affine",
    "parse_element",
    "parse_partition",
    "parse_qrational",
    "partitions",
    "pieri_verify",
    "poincare_value",
    "principal_series",
    "render_affine",
    "render_element",
    "render_partition",
    "sign_character",
    "sign_idempotent",
    "sign_isotypic",
    "sign_projector",
    "sign_projector_tail",
    "specht_module",
    "speh_module",
    "standard_tableaux",
    "sym_group",
    "theta_spectrum_check",
    "verify_relations",
    "vertical_strips",
    "__version__",
]
