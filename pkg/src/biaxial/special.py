"""Real-order special functions used by the closed-form solution formulas.

Gamma, Bessel J and modified Bessel I by power series, Gegenbauer
polynomials, Pochhammer symbols, and the Gauss hypergeometric function
with a series branch and a symmetric Euler-integral branch.
"""

import math
from dataclasses import dataclass

import numpy as np

_TERM_EPS = 1e-16
_MAX_TERMS = 20000

BESSEL_MAX_ORDER = 10.0
BESSEL_MAX_ARG = 50.0


class ConvergenceError(RuntimeError):
    """A series or quadrature failed to reach the requested tolerance."""


def gamma_fn(x: float) -> float:
    """Gamma function for positive arguments."""
    if x <= 0:
        raise ValueError(f"gamma_fn requires x > 0, got {x}")
    return math.gamma(x)


def lgamma(x: float) -> float:
    if x <= 0:
        raise ValueError(f"lgamma requires x > 0, got {x}")
    return math.lgamma(x)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial a (a+1) ... (a+k-1); the empty product is 1."""
    if k < 0 or int(k) != k:
        raise ValueError(f"pochhammer order must be a nonnegative integer, got {k}")
    out = 1.0
    for i in range(int(k)):
        out *= a + i
    return out


def _bessel_series(nu: float, z: float, signed: bool) -> float:
    if not 0.0 <= nu <= BESSEL_MAX_ORDER:
        raise ValueError(f"order must lie in [0, {BESSEL_MAX_ORDER}], got {nu}")
    if not 0.0 <= z <= BESSEL_MAX_ARG:
        raise ValueError(f"argument must lie in [0, {BESSEL_MAX_ARG}], got {z}")
    if z == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    quarter = 0.25 * z * z
    term = math.exp(nu * math.log(0.5 * z) - math.lgamma(nu + 1.0))
    total = term
    j = 0
    while j < _MAX_TERMS:
        j += 1
        term *= quarter / (j * (nu + j))
        total += -term if (signed and j % 2 == 1) else term
        # Terms shrink monotonically once j exceeds z/2; only stop there.
        if j * (nu + j) > quarter and term < _TERM_EPS * max(1.0, abs(total)):
            return total
    raise ConvergenceError(f"Bessel series did not converge for nu={nu}, z={z}")


def bessel_j(nu: float, z: float) -> float:
    """Bessel function of the first kind by its defining power series."""
    return _bessel_series(nu, z, signed=True)


def bessel_i(nu: float, z: float) -> float:
    """Modified Bessel function: the same series without alternating signs."""
    return _bessel_series(nu, z, signed=False)


def gegenbauer(k: int, lam: float, t):
    """Gegenbauer polynomial C_k^lam(t) by the three-term recurrence.

    Accepts scalar or array t in [-1, 1]; lam must be positive (the
    lam -> 0 limit is exposed through gegenbauer_normalized).
    """
    if not 0 <= k <= 30:
        raise ValueError(f"degree must lie in [0, 30], got {k}")
    if lam <= 0:
        raise ValueError(f"gegenbauer requires lam > 0, got {lam}")
    t = np.asarray(t, dtype=np.float64)
    if np.any(np.abs(t) > 1.0 + 1e-12):
        raise ValueError("argument outside [-1, 1]")
    prev = np.ones_like(t)
    if k == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * lam * t
    for n in range(2, k + 1):
        prev, cur = cur, (2.0 * t * (n + lam - 1.0) * cur - (n + 2.0 * lam - 2.0) * prev) / n
    return cur if cur.ndim else float(cur)


def gegenbauer_normalized(k: int, m: int, t):
    """(k!/(m-2)_k) C_k^{m/2-1}(t), the zonal kernel normalized to 1 at t=1.

    For m = 2 the weight degenerates and the limit is the Chebyshev value
    cos(k arccos t).
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if m == 2:
        t = np.asarray(t, dtype=np.float64)
        out = np.cos(k * np.arccos(np.clip(t, -1.0, 1.0)))
        return out if out.ndim else float(out)
    factor = math.factorial(k) / pochhammer(m - 2.0, k)
    return factor * gegenbauer(k, 0.5 * m - 1.0, t)


@dataclass(frozen=True)
class HypergeometricParams:
    """Arguments of 2F1(a, b; c; z) on the real evaluation domain used here."""

    a: float
    b: float
    c: float
    z: float

    def __post_init__(self):
        if self.c <= 0 and float(self.c).is_integer():
            raise ValueError(f"c must not be a non-positive integer, got {self.c}")
        if self.z >= 1.0:
            raise ValueError(f"need z < 1, got {self.z}")


def _hyp2f1_series(a: float, b: float, c: float, z) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    term = np.ones_like(z)
    total = term.copy()
    for n in range(_MAX_TERMS):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z
        total += term
        if np.all(np.abs(term) < _TERM_EPS * np.maximum(1.0, np.abs(total))):
            return total
    raise ConvergenceError(f"2F1 series stalled at z_max={float(np.max(z))}")


def _hyp2f1_euler(a: float, b: float, c: float, z) -> np.ndarray:
    # Symmetric Euler integral: valid when c = 2b, with the interval weight
    # (1 - t^2)^(b-1); singular endpoints (b < 1) are fine for Gauss-Jacobi.
    if abs(c - 2.0 * b) > 1e-12:
        raise ValueError(f"Euler branch needs c = 2b, got b={b}, c={c}")
    from .quadrature import gauss_jacobi_rule

    z = np.asarray(z, dtype=np.float64)
    w = z / (2.0 - z)
    wmax = float(np.max(np.abs(w))) if w.size else 0.0
    if wmax >= 1.0:
        raise ValueError("Euler branch needs z < 1")
    # Integrand has a pole at t = 1/w; pick the node count from the
    # Bernstein ellipse through it so accuracy stays near 1e-13.
    inv_w = 1.0 / max(wmax, 1e-6)
    rho = inv_w + math.sqrt(inv_w * inv_w - 1.0)
    n = int(min(768, max(48, math.ceil(30.0 / math.log10(rho)))))
    rule = gauss_jacobi_rule(n, b - 1.0)
    kernel = (1.0 - w[..., None] * rule.nodes) ** (-a)
    integral = kernel @ rule.weights
    const = math.exp(math.lgamma(2.0 * b) - 2.0 * math.lgamma(b)) / 2.0 ** (2.0 * b - 1.0)
    return const * (1.0 - 0.5 * z) ** (-a) * integral


def gauss_2f1(params: HypergeometricParams, method: str = "auto") -> float:
    """Gauss hypergeometric value on z in [0, 0.999] with c > b > 0.

    method: 'auto' switches from the power series to the Euler-integral
    quadrature at z = 0.5; 'series' or 'euler' force a branch.
    """
    a, b, c, z = params.a, params.b, params.c, params.z
    if not 0.0 <= z <= 0.999:
        raise ValueError(f"z must lie in [0, 0.999], got {z}")
    if b <= 0 or c - b <= 0:
        raise ValueError(f"need c > b > 0, got b={b}, c={c}")
    if method == "auto":
        method = "series" if z <= 0.5 else "euler"
    if method == "series":
        return float(_hyp2f1_series(a, b, c, z))
    if method == "euler":
        return float(_hyp2f1_euler(a, b, c, z))
    raise ValueError(f"unknown method {method!r}")


def hyp2f1_symmetric(a: float, b: float, z) -> np.ndarray:
    """Vectorized 2F1(a, b; 2b; z) over an array of z in [0, 1).

    Series below z = 0.5, Euler-integral quadrature above; this is the
    combination every kernel evaluation uses.
    """
    z = np.asarray(z, dtype=np.float64)
    if np.any(z < 0.0) or np.any(z >= 1.0):
        raise ValueError("kernel arguments must lie in [0, 1)")
    out = np.empty_like(z)
    low = z <= 0.5
    if np.any(low):
        out[low] = _hyp2f1_series(a, b, 2.0 * b, z[low])
    if np.any(~low):
        out[~low] = _hyp2f1_euler(a, b, 2.0 * b, z[~low])
    return out
