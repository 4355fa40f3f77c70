"""Numerical toolkit for hypermonogenic solutions of the Dirac operator
on R^p x R^q.

Clifford arithmetic, special functions, sphere quadrature, plane-wave
constructions, and the hemisphere Cauchy reconstruction, with every
closed form paired against a brute-force quadrature oracle.
"""

from .algebra import (
    BiaxialPoint,
    Multivector,
    blade_name,
    embed_vector,
    grade_project,
    mv_product,
    vector_exterior,
    vector_interior,
)
from .special import (
    ConvergenceError,
    HypergeometricParams,
    bessel_i,
    bessel_j,
    gamma_fn,
    gauss_2f1,
    gegenbauer,
    gegenbauer_normalized,
    pochhammer,
)
from .quadrature import (
    HemisphereRule,
    IntervalRule,
    SphereRule,
    funk_hecke_check,
    gauss_jacobi_rule,
    hemisphere_rule,
    sphere_area,
    sphere_rule,
)
from .fields import (
    AxialField,
    ExpLinear,
    HypermonogenicSeries,
    beta,
    ck_bessel_form,
    ck_extend,
    constant_field,
    dirac_apply_fd,
    eval_series,
    lift_axial,
    linear_monogenic_field,
    modified_dirac_correspondence,
    modified_dirac_residual,
    series_axial_parts,
    vekua_residual,
)
from .planewave import (
    HPWQuadruple,
    PlaneWaveSeries,
    eval_planewave,
    exp_coeffs_closed,
    exp_hpw_axial_field,
    exp_hpw_series,
    fourier_axial_field,
    fourier_kernel_closed,
    fourier_kernel_oracle,
    hpw_exp_closed,
    hpw_recurrence,
    planewave_quadruple,
    poly_coeff_a,
    poly_coeff_b,
    poly_hpw_axial_field,
    radialize_poly,
    radialize_poly_oracle,
)
from .cauchy import (
    FullBallCauchy,
    KernelParams,
    cauchy_full_ball,
    kernel_I_closed,
    kernel_I_oracle,
    kernel_phi,
    reconstruct_ab,
    reconstruct_ab_variants,
)

__all__ = [
    "AxialField",
    "BiaxialPoint",
    "ConvergenceError",
    "ExpLinear",
    "FullBallCauchy",
    "HPWQuadruple",
    "HemisphereRule",
    "HypergeometricParams",
    "HypermonogenicSeries",
    "IntervalRule",
    "KernelParams",
    "Multivector",
    "PlaneWaveSeries",
    "SphereRule",
    "bessel_i",
    "bessel_j",
    "beta",
    "blade_name",
    "cauchy_full_ball",
    "ck_bessel_form",
    "ck_extend",
    "constant_field",
    "dirac_apply_fd",
    "embed_vector",
    "eval_planewave",
    "eval_series",
    "exp_coeffs_closed",
    "exp_hpw_axial_field",
    "exp_hpw_series",
    "fourier_axial_field",
    "fourier_kernel_closed",
    "fourier_kernel_oracle",
    "funk_hecke_check",
    "gamma_fn",
    "gauss_2f1",
    "gauss_jacobi_rule",
    "gegenbauer",
    "gegenbauer_normalized",
    "grade_project",
    "hemisphere_rule",
    "hpw_exp_closed",
    "hpw_recurrence",
    "kernel_I_closed",
    "kernel_I_oracle",
    "kernel_phi",
    "lift_axial",
    "linear_monogenic_field",
    "modified_dirac_correspondence",
    "modified_dirac_residual",
    "mv_product",
    "planewave_quadruple",
    "pochhammer",
    "poly_coeff_a",
    "poly_coeff_b",
    "poly_hpw_axial_field",
    "radialize_poly",
    "radialize_poly_oracle",
    "reconstruct_ab",
    "reconstruct_ab_variants",
    "series_axial_parts",
    "sphere_area",
    "sphere_rule",
    "vector_exterior",
    "vector_interior",
    "vekua_residual",
]
