# Zonal-integral reduction on spheres: sphere quadrature of
# psi(<xi, eta>) H_k(eta) against the weighted Gegenbauer moment of psi.
# The balancing prefactor is the equatorial measure |S^{m-2}|; the m=3,
# psi=1 row shows both sides equal to 4 pi.

import math

import numpy as np

from biaxial.quadrature import funk_hecke_check

battery = [
    ("1", lambda t: np.ones_like(t)),
    ("t", lambda t: t),
    ("t^2", lambda t: t ** 2),
    ("t^3", lambda t: t ** 3),
    ("e^t", np.exp),
]
resolution = {2: 96, 3: 48, 4: 24, 5: 16}

print("m  k  psi    lhs (sphere)        rhs (interval)      |gap|")
for m in (2, 3, 4, 5):
    for k in (0, 1, 2):
        for name, psi in battery:
            lhs, rhs = funk_hecke_check(psi, k, m, resolution=resolution[m])
            print(f"{m}  {k}  {name:4s}  {lhs:+.12e}  {rhs:+.12e}  {abs(lhs - rhs):.2e}")
    print()

lhs, rhs = funk_hecke_check(lambda t: np.ones_like(t), 0, 3, resolution=48)
print(f"anchor: m=3, psi=1 gives lhs={lhs:.12f} rhs={rhs:.12f} (4 pi = {4 * math.pi:.12f})")
