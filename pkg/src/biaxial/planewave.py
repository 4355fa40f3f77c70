"""Plane waves with x-radial symmetry.

Constructions: the coefficient recurrence determined by the initial pair
(C_0, D_0), the Gamma-ratio closed coefficients of the exponential family
and its Bessel-J assembly, the polynomial radialization of
(<x,t> + i<y,s>)^k (t + i s) over t in S^{p-1}, and the Fourier-kernel
family with its modified-Bessel closed form.  Every closed form has a
sphere-quadrature oracle next to it.

All spherical prefactors use the equatorial measure
kappa_p = |S^{p-2}| = 2 pi^{(p-1)/2} / Gamma((p-1)/2), the constant the
zonal-integral oracle actually fixes (see the p = 2 anchors in the tests).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .algebra import BiaxialPoint, Multivector, embed_vector
from .fields import AxialField, ExpLinear, beta, _unit
from .quadrature import SphereRule, sphere_area
from .special import ConvergenceError, bessel_i, bessel_j, gamma_fn

MAX_POLY_DEGREE = 12


@dataclass(frozen=True)
class PlaneWaveSeries:
    """Series sum_j x^j (C_j(t) + s D_j(t)) of closed-class profiles."""

    p: int
    q: int
    s: np.ndarray
    C: tuple
    D: tuple
    terminated: bool

    def __post_init__(self):
        object.__setattr__(self, "s", _unit(self.s))
        if len(self.C) != len(self.D):
            raise ValueError("C and D profile lists must have equal length")

    @property
    def truncation(self) -> int:
        return len(self.C)


def hpw_recurrence(c0: ExpLinear, d0: ExpLinear, p: int, q: int, J: int = 40) -> PlaneWaveSeries:
    """Extend initial profiles through the coupled first-order system.

    C_{j+1} = (-1)^j beta_{j+1}^{-1} D_j',
    D_{j+1} = -(-1)^j beta_{j+1}^{-1} C_j'.
    """
    if J > 60:
        raise ValueError(f"truncation must satisfy J <= 60, got {J}")
    C = [c0]
    D = [d0]
    terminated = False
    for j in range(J):
        if C[j].is_zero and D[j].is_zero:
            C.pop()
            D.pop()
            terminated = True
            break
        b = beta(j + 1, p)
        sign = (-1.0) ** j
        C.append(D[j].d_dt().scale(sign / b))
        D.append(C[j].d_dt().scale(-sign / b))
    return PlaneWaveSeries(p, q, c0.s, tuple(C), tuple(D), terminated)


def eval_planewave(series: PlaneWaveSeries, pt: BiaxialPoint, tail_tol: float = 1e-14):
    """Evaluate at pt; returns (value, tail diagnostic)."""
    if pt.p != series.p or pt.q != series.q:
        raise ValueError("point and series axis dimensions differ")
    dim = pt.dim
    t = float(np.dot(pt.y, series.s))
    r = pt.r
    s_mv = embed_vector(dim, series.p, series.s)
    x_mv = pt.embed_x()
    xs_mv = x_mv * s_mv
    acc = np.zeros(1 << dim, dtype=np.complex128)
    tail = 0.0
    for j, (cj, dj) in enumerate(zip(series.C, series.D)):
        cv, dv = cj.value(t), dj.value(t)
        sign = -1.0 if (j // 2) % 2 else 1.0
        if j % 2 == 0:
            term = (sign * r ** j * dv) * s_mv.coeffs
            term[0] += sign * r ** j * cv
        else:
            term = (sign * r ** (j - 1)) * (cv * x_mv.coeffs + dv * xs_mv.coeffs)
        acc += term
        tail = float(np.max(np.abs(term)))
    if series.terminated:
        tail = 0.0
    if tail > tail_tol * max(1.0, float(np.max(np.abs(acc)))):
        raise ConvergenceError(f"plane-wave tail {tail:.3e} above tolerance {tail_tol:.1e}")
    return Multivector(dim, acc), tail


@dataclass(frozen=True)
class HPWQuadruple:
    """Parity split of a plane-wave series into four scalar evaluators.

    F = A + B (x/|x|) + C s + D (x/|x|) s with evaluators of (|x|, t).
    """

    p: int
    q: int
    s: np.ndarray
    A: callable
    B: callable
    C: callable
    D: callable

    def assemble(self, pt: BiaxialPoint) -> Multivector:
        dim = pt.dim
        t = float(np.dot(pt.y, self.s))
        r = pt.r
        s_mv = embed_vector(dim, self.p, self.s)
        out = Multivector.scalar(dim, self.A(r, t)) + self.C(r, t) * s_mv
        if r > 0.0:
            e_mv = pt.embed_unit_x()
            out = out + self.B(r, t) * e_mv + self.D(r, t) * (e_mv * s_mv)
        return out


def planewave_quadruple(series: PlaneWaveSeries) -> HPWQuadruple:
    """Collect even-index terms into (A, C) and odd-index terms into (B, D)."""

    def parity_sum(profiles, parity):
        def evaluate(r, t):
            acc = 0.0 + 0.0j
            for j, prof in enumerate(profiles):
                if j % 2 != parity:
                    continue
                sign = -1.0 if (j // 2) % 2 else 1.0
                acc += sign * r ** j * prof.value(t)
            return acc

        return evaluate

    return HPWQuadruple(
        series.p, series.q, series.s,
        A=parity_sum(series.C, 0),
        B=parity_sum(series.C, 1),
        C=parity_sum(series.D, 0),
        D=parity_sum(series.D, 1),
    )


def exp_coeffs_closed(j: int, p: int) -> float:
    """Nonzero coefficient at index j of the exponential family (c0=1, d0=0).

    Even j gives c_j = Gamma(p/2) / (2^j Gamma(j/2+1) Gamma(j/2+p/2)),
    odd j gives d_j = Gamma(p/2) / (2^j Gamma((j+1)/2) Gamma((j+1)/2+p/2)).
    """
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    half_p = 0.5 * p
    if j % 2 == 0:
        log = (
            math.lgamma(half_p) - j * math.log(2.0)
            - math.lgamma(0.5 * j + 1.0) - math.lgamma(0.5 * j + half_p)
        )
    else:
        log = (
            math.lgamma(half_p) - j * math.log(2.0)
            - math.lgamma(0.5 * (j + 1.0)) - math.lgamma(0.5 * (j + 1.0) + half_p)
        )
    return math.exp(log)


def exp_hpw_series(p: int, q: int, s, J: int = 40) -> PlaneWaveSeries:
    """Exponential family from the recurrence with c_0 = 1, d_0 = 0."""
    s = _unit(s)
    return hpw_recurrence(ExpLinear.exponential(s), ExpLinear.zero(s), p, q, J)


def _exp_profiles(p: int, r: float):
    """Radial coefficients of the exponential family's Bessel closed form."""
    half_p = 0.5 * p
    if r == 0.0:
        return 1.0, 0.0
    scale = 2.0 ** (half_p - 1.0) * gamma_fn(half_p) / r ** (half_p - 1.0)
    return scale * bessel_j(half_p - 1.0, r), scale * bessel_j(half_p, r)


def hpw_exp_closed(pt: BiaxialPoint, s) -> Multivector:
    """Bessel-J closed form of the exponential plane wave.

    (2^{p/2-1} Gamma(p/2) / |x|^{p/2-1})
    (J_{p/2-1}(|x|) + J_{p/2}(|x|) (x/|x|) s) exp(<y, s>);
    the |x| -> 0 limit is exp(<y, s>).
    """
    s = _unit(s)
    dim = pt.dim
    phase = math.exp(float(np.dot(pt.y, s)))
    c, d = _exp_profiles(pt.p, pt.r)
    out = Multivector.scalar(dim, c * phase)
    if pt.r > 0.0:
        es = pt.embed_unit_x() * embed_vector(dim, pt.p, s)
        out = out + (d * phase) * es
    return out


def exp_hpw_axial_field(p: int, q: int, s) -> AxialField:
    """The exponential plane wave as an axial A/B pair."""
    s = _unit(s)
    dim = p + q

    def a_part(r, y):
        c, _ = _exp_profiles(p, r)
        return Multivector.scalar(dim, c * math.exp(float(np.dot(y, s))))

    def b_part(r, y):
        _, d = _exp_profiles(p, r)
        return (d * math.exp(float(np.dot(y, s)))) * embed_vector(dim, p, s)

    return AxialField(p, q, a_part, b_part)


def poly_coeff_a(j: int, k: int, p: int) -> float:
    """Gamma-ratio coefficient of x^{2j+1} in the radialized vector part."""
    if not 0 <= 2 * j + 1 <= k:
        raise ValueError(f"need 0 <= 2j+1 <= k, got j={j}, k={k}")
    return (
        (-1.0) ** j * math.comb(k, 2 * j + 1)
        * gamma_fn(0.5 * (p - 1.0)) * gamma_fn(j + 1.5) / gamma_fn(0.5 * p + j + 1.0)
    )


def poly_coeff_b(j: int, k: int, p: int) -> float:
    """Gamma-ratio coefficient of x^{2j} in the radialized scalar part."""
    if not 0 <= 2 * j <= k:
        raise ValueError(f"need 0 <= 2j <= k, got j={j}, k={k}")
    return (
        (-1.0) ** j * math.comb(k, 2 * j)
        * gamma_fn(0.5 * (p - 1.0)) * gamma_fn(j + 0.5) / gamma_fn(0.5 * p + j)
    )


def _poly_radial_coeffs(k: int, p: int, r: float, t: float):
    """Coefficients (of x/|x| and of i s) in the radialized degree-k wave.

    The x powers carry their multivector signs: x^{2j} = (-1)^j |x|^{2j}.
    """
    it = 1j * t
    coef_a = 0.0 + 0.0j
    for j in range((k - 1) // 2 + 1):
        coef_a += ((-1.0) ** j * r ** (2 * j)) * poly_coeff_a(j, k, p) * it ** (k - 2 * j - 1)
    coef_b = 0.0 + 0.0j
    for j in range(k // 2 + 1):
        coef_b += ((-1.0) ** j * r ** (2 * j)) * poly_coeff_b(j, k, p) * it ** (k - 2 * j)
    kappa = sphere_area(p - 1)
    return kappa * coef_a, kappa * coef_b


def radialize_poly(k: int, pt: BiaxialPoint, s) -> Multivector:
    """Closed form of g = int (<x,t> + i<y,s>)^k (t + i s) dS(t) over S^{p-1}.

    g = A + i B s with the vector part A along x and scalar B.
    """
    if not 0 <= k <= MAX_POLY_DEGREE:
        raise ValueError(f"degree must lie in [0, {MAX_POLY_DEGREE}], got {k}")
    s = _unit(s)
    t = float(np.dot(pt.y, s))
    coef_a, coef_b = _poly_radial_coeffs(k, pt.p, pt.r, t)
    out = coef_a * pt.embed_x()
    return out + (1j * coef_b) * embed_vector(pt.dim, pt.p, s)


def radialize_poly_oracle(k: int, pt: BiaxialPoint, s, rule: SphereRule) -> Multivector:
    """Direct sphere quadrature of the radialization integrand."""
    s = _unit(s)
    if rule.dim != pt.p:
        raise ValueError("oracle needs a rule on S^{p-1}")
    proj = rule.points @ pt.x + 1j * float(np.dot(pt.y, s))
    zonal = rule.weights * proj ** k
    x_part = zonal @ rule.points
    y_part = np.sum(zonal) * 1j * s
    return Multivector.vector(pt.dim, np.concatenate([x_part, y_part]))


def poly_hpw_axial_field(p: int, q: int, s, k: int) -> AxialField:
    """Radialized polynomial wave as an axial pair.

    A(r, y) = i kappa coef_b s and B(r, y) = kappa coef_a r, so that
    A + (x/|x|) B reassembles the closed form.
    """
    if not 0 <= k <= MAX_POLY_DEGREE:
        raise ValueError(f"degree must lie in [0, {MAX_POLY_DEGREE}], got {k}")
    s = _unit(s)
    dim = p + q

    def a_part(r, y):
        _, coef_b = _poly_radial_coeffs(k, p, r, float(np.dot(y, s)))
        return (1j * coef_b) * embed_vector(dim, p, s)

    def b_part(r, y):
        coef_a, _ = _poly_radial_coeffs(k, p, r, float(np.dot(y, s)))
        return Multivector.scalar(dim, coef_a * r)

    return AxialField(p, q, a_part, b_part)


def fourier_kernel_closed(pt: BiaxialPoint, s) -> Multivector:
    """Modified-Bessel closed form of the radialized Fourier kernel.

    G = sqrt(pi) kappa_p 2^{(p-2)/2} Gamma((p-1)/2) / |x|^{(p-2)/2}
        (i I_{(p-2)/2}(|x|) s + (x/|x|) I_{p/2}(|x|)) exp(i <y, s>),
    with G -> i |S^{p-1}| s exp(i<y,s>) as x -> 0.
    """
    s = _unit(s)
    p, dim = pt.p, pt.dim
    r = pt.r
    phase = cmath.exp(1j * float(np.dot(pt.y, s)))
    s_mv = embed_vector(dim, p, s)
    if r == 0.0:
        return (1j * sphere_area(p) * phase) * s_mv
    kappa = sphere_area(p - 1)
    const = math.sqrt(math.pi) * kappa * 2.0 ** (0.5 * (p - 2.0)) * gamma_fn(0.5 * (p - 1.0))
    const /= r ** (0.5 * (p - 2.0))
    out = (1j * const * bessel_i(0.5 * (p - 2.0), r) * phase) * s_mv
    return out + (const * bessel_i(0.5 * p, r) * phase) * pt.embed_unit_x()


def fourier_kernel_oracle(pt: BiaxialPoint, s, rule: SphereRule) -> Multivector:
    """Sphere quadrature of exp(<x,t> + i<y,s>) (t + i s) over t in S^{p-1}."""
    s = _unit(s)
    if rule.dim != pt.p:
        raise ValueError("oracle needs a rule on S^{p-1}")
    phase = cmath.exp(1j * float(np.dot(pt.y, s)))
    zonal = rule.weights * np.exp(rule.points @ pt.x) * phase
    x_part = zonal @ rule.points
    y_part = np.sum(zonal) * 1j * s
    return Multivector.vector(pt.dim, np.concatenate([x_part, y_part]))


def fourier_axial_field(p: int, q: int, s) -> AxialField:
    """Fourier-kernel wave as an axial pair: A = (i-part) s, B scalar."""
    s = _unit(s)
    dim = p + q

    def profiles(r):
        if r == 0.0:
            return 1j * sphere_area(p), 0.0
        kappa = sphere_area(p - 1)
        const = math.sqrt(math.pi) * kappa * 2.0 ** (0.5 * (p - 2.0)) * gamma_fn(0.5 * (p - 1.0))
        const /= r ** (0.5 * (p - 2.0))
        return 1j * const * bessel_i(0.5 * (p - 2.0), r), const * bessel_i(0.5 * p, r)

    def a_part(r, y):
        cs, _ = profiles(r)
        return (cs * cmath.exp(1j * float(np.dot(y, s)))) * embed_vector(dim, p, s)

    def b_part(r, y):
        _, be = profiles(r)
        return Multivector.scalar(dim, be * cmath.exp(1j * float(np.dot(y, s))))

    return AxialField(p, q, a_part, b_part)
