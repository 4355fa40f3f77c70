# Exponential plane waves three ways: the coefficient recurrence, the
# Bessel-J closed form, and the series extension of exp(<y, s>).  All three
# agree to machine precision and are annihilated by the first-order operator.

import numpy as np

from biaxial.algebra import BiaxialPoint
from biaxial.fields import ExpLinear, ck_bessel_form, ck_extend, dirac_apply_fd, eval_series
from biaxial.planewave import (
    eval_planewave,
    exp_coeffs_closed,
    exp_hpw_series,
    hpw_exp_closed,
    planewave_quadruple,
)

p, q = 3, 2
s = np.array([1.0, 0.0])

print(f"axis split p={p}, q={q}, direction s={s}")
print()

# Coefficients from the recurrence against their Gamma-ratio closed form.
series = exp_hpw_series(p, q, s, J=40)
print("j   recurrence        closed form       (c_j for even j, d_j for odd j)")
for j in range(8):
    profile = series.C[j] if j % 2 == 0 else series.D[j]
    got = float(profile.poly[0].real)
    want = exp_coeffs_closed(j, p)
    print(f"{j}   {got:.15f} {want:.15f}")
print()

# Pointwise agreement of the three construction routes.
extension = ck_extend(ExpLinear.exponential(s), p, q, J=40)
rows = []
for r in (0.0, 0.5, 1.0, 1.5, 2.0):
    x = np.zeros(p)
    x[0] = r
    pt = BiaxialPoint(p, q, x, np.array([0.4, -0.2]))
    closed = hpw_exp_closed(pt, s)
    via_series = eval_planewave(series, pt)[0]
    via_extension = eval_series(extension, pt)[0]
    via_bessel_op = ck_bessel_form(pt, s)
    rows.append((
        r,
        (closed - via_series).norm_inf,
        (closed - via_extension).norm_inf,
        (closed - via_bessel_op).norm_inf,
    ))
print("|x|   closed-vs-series  closed-vs-extension  closed-vs-operator-form")
for r, e1, e2, e3 in rows:
    print(f"{r:3.1f}   {e1:.3e}         {e2:.3e}            {e3:.3e}")
print()

# The finite-difference residual of the first-order operator vanishes to
# truncation order.
pt = BiaxialPoint(p, q, np.array([0.7, 0.3, -0.2]), np.array([0.3, 0.5]))
for h in (1e-3, 5e-4):
    res = dirac_apply_fd(lambda pt2: hpw_exp_closed(pt2, s), pt, h=h)
    print(f"operator residual at h={h:g}: {res.norm_inf:.3e}")
print()

# Parity split into the four scalar coefficient functions and back.
quad = planewave_quadruple(series)
assembled = quad.assemble(pt)
direct = eval_planewave(series, pt)[0]
print(f"quadruple round-trip gap: {(assembled - direct).norm_inf:.3e}")
