# Interior reconstruction from hemisphere boundary data, and why the
# reduced single-kernel integrand cannot reproduce interior values.
#
# The inner sphere integral of the Cauchy kernel against axial boundary
# data produces terms that are odd in the S^{p-1} variable.  Dropping them
# would be legitimate against an even kernel, but the kernel
# (tau - 2 r cos(theta) <xi, omega>)^-(p+q)/2 is not even in omega for
# r > 0, so the dropped terms carry a first-order zonal moment Phi that
# must be kept.  The cleanest witness is the constant field at y = 0:
# the I-kernel-only reduction returns the Poisson mass 1/(1 - r^2), while
# the corrected two-kernel assembly returns 1 and matches the full-sphere
# Cauchy quadrature.

import numpy as np

from biaxial.algebra import BiaxialPoint
from biaxial.cauchy import FullBallCauchy, reconstruct_ab_variants
from biaxial.fields import constant_field
from biaxial.planewave import exp_hpw_axial_field
from biaxial.quadrature import hemisphere_rule, sphere_rule

p = q = 2
s = np.array([1.0, 0.0])

print("constant field, y = 0: reduced vs corrected vs full-sphere oracle")
field = constant_field(p, q)
hrule = hemisphere_rule(p, q, 40)
oracle = FullBallCauchy(field.boundary_value, sphere_rule(p + q, 28))
print("r     reduced A       1/(1-r^2)       corrected A     full-sphere A")
for r in (0.1, 0.2, 0.3, 0.4, 0.5):
    pt = BiaxialPoint(p, q, np.array([r, 0.0]), np.zeros(q))
    variants = reconstruct_ab_variants(field, pt, hrule)
    reduced = variants["full"][0].scalar_part.real
    corrected = variants["corrected"][0].scalar_part.real
    ball = oracle.evaluate(pt).scalar_part.real
    print(f"{r:3.1f}   {reduced:.10f}  {1.0 / (1.0 - r * r):.10f}  "
          f"{corrected:.10f}  {ball:.10f}")
print()

print("exponential plane wave: worst component error against direct values")
field = exp_hpw_axial_field(p, q, s)
points = [
    BiaxialPoint(p, q, np.array([0.30, 0.00]), np.array([0.00, 0.00])),
    BiaxialPoint(p, q, np.array([0.20, 0.10]), np.array([0.15, -0.10])),
    BiaxialPoint(p, q, np.array([0.15, -0.20]), np.array([0.10, 0.20])),
]
print("res    reduced         printed         corrected")
for res in (10, 20, 40):
    hrule = hemisphere_rule(p, q, res)
    errs = {"full": 0.0, "printed": 0.0, "corrected": 0.0}
    for pt in points:
        variants = reconstruct_ab_variants(field, pt, hrule)
        a_direct = field.A(pt.r, pt.y)
        b_direct = field.B(pt.r, pt.y)
        for key in errs:
            a_v, b_v = variants[key]
            errs[key] = max(errs[key], (a_v - a_direct).norm_inf,
                            (b_v - b_direct).norm_inf)
    print(f"{res:3d}    {errs['full']:.6e}    {errs['printed']:.6e}    "
          f"{errs['corrected']:.6e}")
print()
print("The reduced and printed variants converge to a fixed defect as the")
print("resolution grows; only the corrected assembly converges to zero.")
