"""Hemisphere Cauchy machinery for axial fields in the unit ball.

The sphere of R^{p+q} splits as S^{p-1} x S^{q-1} x [0, pi/2]; the inner
integral over S^{p-1} of the Cauchy kernel against boundary data reduces
to two zonal moments of (tau - 2 r cos(theta) u)^{-(p+q)/2}:

  I   - the plain moment, with a closed hypergeometric form,
  Phi - the first-order moment (weighted by u), evaluated by quadrature.

reconstruct_ab supports three assembly variants of the reduced integral:

  'full'      keeps I (A + (x+y)(sin(theta) nu A - cos(theta) B)) and
              grade-splits it,
  'printed'   additionally drops the cos(theta) B term from the odd part,
  'corrected' adds the Phi terms that the first two variants discard.

The discarded terms are odd in omega but integrate against a kernel that
is not even in omega, so they do not vanish: only 'corrected' reproduces
interior values (the full-sphere Cauchy quadrature is the referee; see
tests and demos for the measured discrepancy of the other variants).
"""

import math
from dataclasses import dataclass

import numpy as np

from .algebra import BiaxialPoint, Multivector, batch_vector_mv, embed_vector
from .fields import AxialField
from .quadrature import HemisphereRule, SphereRule, gauss_jacobi_rule, sphere_area
from .special import hyp2f1_symmetric

BALL_RADIUS_MAX = 0.9
_MIN_BOUNDARY_DISTANCE = 0.05
_PHI_NODES = 96

RECONSTRUCTION_VARIANTS = ("full", "printed", "corrected")


def _check_interior(r: float, y: np.ndarray) -> None:
    rho = math.sqrt(r * r + float(np.dot(y, y)))
    if rho > BALL_RADIUS_MAX:
        raise ValueError(
            f"evaluation point has |x+y| = {rho:.3f} > {BALL_RADIUS_MAX}; "
            "too close to the boundary sphere"
        )


@dataclass(frozen=True)
class KernelParams:
    """Arguments of the reduced kernel at one hemisphere node."""

    p: int
    q: int
    r: float
    y: np.ndarray
    theta: float
    nu: np.ndarray

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError("kernel needs p, q >= 2")
        if self.r < 0:
            raise ValueError("r is a radius, need r >= 0")
        if not 0.0 <= self.theta <= 0.5 * math.pi + 1e-12:
            raise ValueError("theta must lie in [0, pi/2]")
        y = np.asarray(self.y, dtype=np.float64)
        nu = np.asarray(self.nu, dtype=np.float64)
        if y.shape != (self.q,) or nu.shape != (self.q,):
            raise ValueError("y and nu must be length-q vectors")
        if abs(float(np.linalg.norm(nu)) - 1.0) > 1e-9:
            raise ValueError("nu must be a unit vector")
        _check_interior(self.r, y)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "nu", nu)

    @property
    def tau(self) -> float:
        c = math.cos(self.theta)
        s = math.sin(self.theta)
        return self.r ** 2 + c * c + float(np.sum((self.y - s * self.nu) ** 2))

    @property
    def z(self) -> float:
        c2 = 2.0 * self.r * math.cos(self.theta)
        return 2.0 * c2 / (self.tau + c2)


def kernel_I_closed(kp: KernelParams) -> float:
    """Closed hypergeometric form of the zonal kernel moment.

    I = kappa_p (2^{p-2} Gamma((p-1)/2)^2 / Gamma(p-1))
        (tau + 2 r cos theta)^{-(p+q)/2} 2F1((p+q)/2, (p-1)/2; p-1; z)
    with z = 4 r cos(theta) / (tau + 2 r cos(theta)); at r = 0 this is the
    sphere measure |S^{p-1}| times tau^{-(p+q)/2}.
    """
    p, q = kp.p, kp.q
    a = 0.5 * (p + q)
    b = 0.5 * (p - 1.0)
    tau = kp.tau
    c2 = 2.0 * kp.r * math.cos(kp.theta)
    z = 2.0 * c2 / (tau + c2)
    const = sphere_area(p - 1) * 2.0 ** (p - 2) * math.gamma(b) ** 2 / math.gamma(p - 1.0)
    hyp = float(hyp2f1_symmetric(a, b, np.array(z)))
    return const * (tau + c2) ** (-a) * hyp


def kernel_phi(kp: KernelParams, nodes: int = _PHI_NODES) -> float:
    """First-order zonal moment kappa_p int u (1-u^2)^{(p-3)/2} K(u) du.

    K(u) = (tau - 2 r cos(theta) u)^{-(p+q)/2}; the moment vanishes at
    r = 0 and multiplies the omega-odd boundary terms in the corrected
    reconstruction.
    """
    p, q = kp.p, kp.q
    if kp.r == 0.0:
        return 0.0
    rule = gauss_jacobi_rule(nodes, 0.5 * (p - 3.0))
    c2 = 2.0 * kp.r * math.cos(kp.theta)
    tau = kp.tau
    vals = rule.nodes * (tau - c2 * rule.nodes) ** (-0.5 * (p + q))
    return sphere_area(p - 1) * float(np.dot(rule.weights, vals))


def kernel_I_oracle(x: np.ndarray, y: np.ndarray, theta: float, nu: np.ndarray,
                    rule: SphereRule) -> float:
    """Direct S^{p-1} quadrature of the kernel integral.

    Integrates |x + y - cos(theta) omega - sin(theta) nu|^{-(p+q)} over
    omega; depends on x only through |x|, which the zonal-invariance tests
    exercise.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    p = x.size
    q = y.size
    if rule.dim != p:
        raise ValueError("oracle rule must live on S^{p-1}")
    c, s = math.cos(theta), math.sin(theta)
    dx = x[None, :] - c * rule.points
    dy = y - s * np.asarray(nu, dtype=np.float64)
    dist2 = np.einsum("ij,ij->i", dx, dx) + float(np.dot(dy, dy))
    if math.sqrt(float(np.min(dist2))) < _MIN_BOUNDARY_DISTANCE:
        raise ValueError("kernel oracle integrand is near-singular at this node")
    return float(np.dot(rule.weights, dist2 ** (-0.5 * (p + q))))


def reconstruct_ab_variants(field: AxialField, pt: BiaxialPoint, hrule: HemisphereRule):
    """All reconstruction variants in one sweep over the hemisphere nodes.

    Returns {variant: (A_value, B_value)} of y-subalgebra multivectors
    such that the field at pt is A_value + (x/|x|) B_value.
    """
    p, q = field.p, field.q
    if (pt.p, pt.q) != (p, q) or (hrule.p, hrule.q) != (p, q):
        raise ValueError("field, point, and rule must share (p, q)")
    _check_interior(pt.r, pt.y)
    dim = p + q
    r = pt.r
    y_mv = embed_vector(dim, p, pt.y)
    size = 1 << dim
    acc = {
        "A_full": np.zeros(size, dtype=np.complex128),
        "B_full": np.zeros(size, dtype=np.complex128),
        "B_printed": np.zeros(size, dtype=np.complex128),
        "A_corr": np.zeros(size, dtype=np.complex128),
        "B_corr": np.zeros(size, dtype=np.complex128),
    }
    for theta, wt in zip(hrule.theta_nodes, hrule.theta_weights):
        c, s = math.cos(theta), math.sin(theta)
        for nu, wn in zip(hrule.nu.points, hrule.nu.weights):
            w = wt * wn
            a_b = field.A(c, s * nu)
            b_b = field.B(c, s * nu)
            nu_mv = embed_vector(dim, p, nu)
            kp = KernelParams(p, q, r, pt.y, theta, nu)
            kern_i = kernel_I_closed(kp)
            nu_a = nu_mv * a_b
            core = s * nu_a - c * b_b
            acc["A_full"] += (w * kern_i) * (a_b + y_mv * core).coeffs
            acc["B_full"] += (w * kern_i * r) * core.coeffs
            acc["B_printed"] += (w * kern_i * r * s) * nu_a.coeffs
            phi = kernel_phi(kp)
            if phi != 0.0:
                nu_b = nu_mv * b_b
                acc["A_corr"] += (w * phi * r) * (s * nu_b - c * a_b).coeffs
                acc["B_corr"] += (w * phi) * (
                    b_b + s * (y_mv * nu_b) - c * (y_mv * a_b)
                ).coeffs
    lam = sphere_area(dim)
    for key in acc:
        acc[key] /= lam
    return {
        "full": (Multivector(dim, acc["A_full"]), Multivector(dim, acc["B_full"])),
        "printed": (Multivector(dim, acc["A_full"]), Multivector(dim, acc["B_printed"])),
        "corrected": (
            Multivector(dim, acc["A_full"] + acc["A_corr"]),
            Multivector(dim, acc["B_full"] + acc["B_corr"]),
        ),
    }


def reconstruct_ab(field: AxialField, pt: BiaxialPoint, hrule: HemisphereRule,
                   variant: str = "full"):
    """Hemisphere reconstruction of the axial components at pt."""
    if variant not in RECONSTRUCTION_VARIANTS:
        raise ValueError(f"variant must be one of {RECONSTRUCTION_VARIANTS}")
    return reconstruct_ab_variants(field, pt, hrule)[variant]


class FullBallCauchy:
    """Full-sphere Cauchy integral with boundary values cached.

    Evaluates (1/lambda_{m-1}) int (z - eta)/|z - eta|^m eta f(eta) dS(eta)
    over S^{m-1}; reusing one instance across evaluation points avoids
    re-sampling the boundary.
    """

    def __init__(self, f_boundary, rule: SphereRule):
        self.rule = rule
        self.dim = rule.dim
        values = np.stack([f_boundary(eta).coeffs for eta in rule.points])
        self._eta_f = batch_vector_mv(rule.points, values, self.dim)

    def evaluate(self, pt: BiaxialPoint) -> Multivector:
        if pt.dim != self.dim:
            raise ValueError("point dimension does not match the rule")
        _check_interior(pt.r, pt.y)
        z = np.concatenate([pt.x, pt.y])
        diff = z[None, :] - self.rule.points
        dist = np.linalg.norm(diff, axis=1)
        if float(np.min(dist)) < _MIN_BOUNDARY_DISTANCE:
            raise ValueError("evaluation point is too close to a boundary node")
        scale = self.rule.weights * dist ** (-float(self.dim))
        integrand = batch_vector_mv(diff, self._eta_f, self.dim) * scale[:, None]
        return Multivector(self.dim, integrand.sum(axis=0) / sphere_area(self.dim))


def cauchy_full_ball(f_boundary, pt: BiaxialPoint, rule: SphereRule) -> Multivector:
    """One-shot full-sphere Cauchy quadrature; the master oracle."""
    return FullBallCauchy(f_boundary, rule).evaluate(pt)
