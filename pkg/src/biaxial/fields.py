"""Axially symmetric solution candidates and their numerical residuals.

An axial field is f(x, y) = A(|x|, y) + (x/|x|) B(|x|, y) with A, B valued
in the y-generator subalgebra.  The module provides the closed function
class P(t) e^{lambda t} in t = <y, s>, the power-series extension of
initial data f(0, y) to a Dirac-null field, finite-difference Dirac and
Vekua residuals, and the axial-operator form e d_r + d_y + ((p-1)/r) e.
acting in the reduced (q+1)-generator picture.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import BiaxialPoint, Multivector, embed_vector, vector_interior
from .special import ConvergenceError, gamma_fn

FD_STEP_MIN = 1e-6
FD_STEP_MAX = 1e-2

_TERM_EPS = 1e-16
_MAX_TERMS = 500


def beta(j: int, p: int) -> int:
    """Eigenvalue of the x-Dirac derivative on x^j: d_x x^j = beta_j x^{j-1}.

    -j for even j, -(j + p - 1) for odd j.
    """
    if j < 1:
        raise ValueError(f"need j >= 1, got {j}")
    return -j if j % 2 == 0 else -(j + p - 1)


def _check_step(h: float) -> None:
    if not FD_STEP_MIN <= h <= FD_STEP_MAX:
        raise ValueError(f"finite-difference step must lie in [{FD_STEP_MIN}, {FD_STEP_MAX}]")


def _unit(s) -> np.ndarray:
    s = np.array(s, dtype=np.float64)
    norm = float(np.linalg.norm(s))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"direction must be a unit vector, |s| = {norm}")
    s.setflags(write=False)
    return s


@dataclass(frozen=True)
class ExpLinear:
    """Closed-class function t -> P(t) exp(lam t) of t = <y, s>.

    The class is closed under d/dt, which is all the extension recursions
    use: differentiating in y multiplies by the direction vector s and
    maps P to P' + lam P.
    """

    lam: complex
    s: np.ndarray
    poly: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "s", _unit(self.s))
        poly = np.atleast_1d(np.array(self.poly, dtype=np.complex128))
        poly.setflags(write=False)
        object.__setattr__(self, "poly", poly)

    @classmethod
    def exponential(cls, s, lam=1.0) -> "ExpLinear":
        return cls(lam, s, [1.0])

    @classmethod
    def polynomial(cls, s, coeffs) -> "ExpLinear":
        return cls(0.0, s, coeffs)

    @classmethod
    def zero(cls, s) -> "ExpLinear":
        return cls(0.0, s, [0.0])

    @property
    def is_zero(self) -> bool:
        return bool(np.all(self.poly == 0))

    def value(self, t: float) -> complex:
        acc = 0.0 + 0.0j
        for c in self.poly[::-1]:
            acc = acc * t + c
        lam = complex(self.lam)
        return acc * cmath.exp(lam * t) if lam != 0 else acc

    def d_dt(self) -> "ExpLinear":
        n = self.poly.size
        deriv = self.poly[1:] * np.arange(1, n) if n > 1 else np.zeros(0, dtype=complex)
        lam = complex(self.lam)
        if lam == 0:
            out = deriv if deriv.size else np.zeros(1, dtype=complex)
        else:
            out = lam * self.poly
            out = out.copy()
            out[: deriv.size] += deriv
        return ExpLinear(self.lam, self.s, out)

    def scale(self, c) -> "ExpLinear":
        return ExpLinear(self.lam, self.s, self.poly * c)


@dataclass(frozen=True)
class AxialField:
    """Field A(|x|, y) + (x/|x|) B(|x|, y); A, B return y-subalgebra values."""

    p: int
    q: int
    A: Callable[[float, np.ndarray], Multivector]
    B: Callable[[float, np.ndarray], Multivector]

    def value_at(self, pt: BiaxialPoint) -> Multivector:
        if pt.p != self.p or pt.q != self.q:
            raise ValueError("point and field axis dimensions differ")
        a = self.A(pt.r, pt.y)
        if pt.r == 0.0:
            return a
        return a + pt.embed_unit_x() * self.B(pt.r, pt.y)

    def boundary_value(self, eta: np.ndarray) -> Multivector:
        """Value at a point of the unit sphere of R^{p+q}."""
        eta = np.asarray(eta, dtype=np.float64)
        pt = BiaxialPoint(self.p, self.q, eta[: self.p], eta[self.p:])
        if pt.r < 1e-12:
            return self.A(pt.r, pt.y)
        return self.value_at(pt)


def constant_field(p: int, q: int, value=1.0) -> AxialField:
    dim = p + q
    return AxialField(
        p, q,
        A=lambda r, y: Multivector.scalar(dim, value),
        B=lambda r, y: Multivector.zero(dim),
    )


def linear_monogenic_field(p: int, q: int, s) -> AxialField:
    """The Dirac-null polynomial <y, s> + (1/p) x s in axial form."""
    s = _unit(s)
    dim = p + q

    def a_part(r, y):
        return Multivector.scalar(dim, float(np.dot(y, s)))

    def b_part(r, y):
        return embed_vector(dim, p, (r / p) * s)

    return AxialField(p, q, a_part, b_part)


@dataclass(frozen=True)
class HypermonogenicSeries:
    """Series sum_j x^j f_j(y) with f_j = profile_j(t) times s^(j parity).

    The recursion f_{j+1} = -(-1)^j beta_{j+1}^{-1} d_y f_j stays inside
    the closed class: profiles alternate between plain and s-multiplied.
    terminated marks series whose recursion reached an identically zero
    profile, making the stored terms exact.
    """

    p: int
    q: int
    s: np.ndarray
    profiles: tuple
    vector_flags: tuple
    terminated: bool

    def __post_init__(self):
        object.__setattr__(self, "s", _unit(self.s))

    @property
    def truncation(self) -> int:
        return len(self.profiles)


def ck_extend(f0: ExpLinear, p: int, q: int = None, J: int = 40) -> HypermonogenicSeries:
    """Unique Dirac-null series extension of the initial datum f(0, y) = f0.

    Each step applies f_{j+1} = -(-1)^j beta_{j+1}^{-1} d_y f_j inside the
    closed class; d_y of a plain profile g is s g', and of an s-multiplied
    profile is -g' since s^2 = -1.
    """
    if J > 60:
        raise ValueError(f"truncation must satisfy J <= 60, got {J}")
    if q is None:
        q = int(np.asarray(f0.s).size)
    profiles = [f0]
    flags = [False]
    g, has_s = f0, False
    terminated = f0.is_zero
    for j in range(J):
        if terminated:
            break
        dg = g.d_dt()
        factor = -((-1.0) ** j) / beta(j + 1, p)
        if has_s:
            g, has_s = dg.scale(-factor), False
        else:
            g, has_s = dg.scale(factor), True
        if g.is_zero:
            terminated = True
            break
        profiles.append(g)
        flags.append(has_s)
    return HypermonogenicSeries(p, q, f0.s, tuple(profiles), tuple(flags), terminated)


def eval_series(series: HypermonogenicSeries, pt: BiaxialPoint, tail_tol: float = 1e-14):
    """Evaluate the series at pt, realizing x^{2j} = (-1)^j |x|^{2j}.

    Returns (value, tail) where tail is the magnitude of the last term
    relative to the partial sum; raises ConvergenceError when the series
    is truncated and the tail exceeds tail_tol.
    """
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
    for j, (profile, has_s) in enumerate(zip(series.profiles, series.vector_flags)):
        c = profile.value(t)
        half = j // 2
        sign = -1.0 if half % 2 else 1.0
        if j % 2 == 0:
            base = s_mv.coeffs if has_s else None
            weight = sign * r ** j * c
            if base is None:
                term = np.zeros_like(acc)
                term[0] = weight
            else:
                term = weight * base
        else:
            base = xs_mv.coeffs if has_s else x_mv.coeffs
            term = (sign * r ** (j - 1) * c) * base
        acc += term
        tail = float(np.max(np.abs(term)))
    if series.terminated:
        tail = 0.0
    if tail > tail_tol * max(1.0, float(np.max(np.abs(acc)))):
        raise ConvergenceError(
            f"series tail {tail:.3e} above tolerance {tail_tol:.1e}; increase J or shrink |x|"
        )
    return Multivector(dim, acc), tail


def series_axial_parts(series: HypermonogenicSeries, r: float, y: np.ndarray):
    """Axial split A = sum (-1)^j r^{2j} f_{2j}, B = sum (-1)^j r^{2j+1} f_{2j+1}."""
    dim = series.p + series.q
    t = float(np.dot(np.asarray(y, dtype=float), series.s))
    s_mv = embed_vector(dim, series.p, series.s)
    a_acc = np.zeros(1 << dim, dtype=np.complex128)
    b_acc = np.zeros_like(a_acc)
    for j, (profile, has_s) in enumerate(zip(series.profiles, series.vector_flags)):
        c = profile.value(t)
        sign = -1.0 if (j // 2) % 2 else 1.0
        weight = sign * r ** j * c
        target = a_acc if j % 2 == 0 else b_acc
        if has_s:
            target += weight * s_mv.coeffs
        else:
            target[0] += weight
    return Multivector(dim, a_acc), Multivector(dim, b_acc)


def series_as_axial_field(series: HypermonogenicSeries) -> AxialField:
    return AxialField(
        series.p, series.q,
        A=lambda r, y: series_axial_parts(series, r, y)[0],
        B=lambda r, y: series_axial_parts(series, r, y)[1],
    )


def ck_bessel_form(pt: BiaxialPoint, s) -> Multivector:
    """Closed evaluation of the extension of exp(<y, s>).

    Gamma(p/2) [ sum_j (-1)^j |x|^{2j} / (j! 2^{2j} Gamma(p/2+j))
               + (1/2) sum_j (-1)^j |x|^{2j} / (j! 2^{2j} Gamma(p/2+j+1)) x s ]
    exp(<y, s>), summed adaptively.
    """
    s = _unit(s)
    p, dim = pt.p, pt.dim
    r2 = pt.r ** 2
    half_p = 0.5 * p
    term1 = 1.0 / gamma_fn(half_p)
    term2 = 1.0 / gamma_fn(half_p + 1.0)
    s1, s2 = term1, term2
    j = 0
    while j < _MAX_TERMS:
        j += 1
        scale = -r2 / (4.0 * j)
        term1 *= scale / (half_p + j - 1.0)
        term2 *= scale / (half_p + j)
        s1 += term1
        s2 += term2
        if max(abs(term1), abs(term2)) < _TERM_EPS * max(abs(s1), abs(s2), 1e-300):
            break
    phase = math.exp(float(np.dot(pt.y, s)))
    xs = pt.embed_x() * embed_vector(dim, p, s)
    value = Multivector.scalar(dim, s1) + 0.5 * s2 * xs
    return gamma_fn(half_p) * phase * value


def dirac_apply_fd(f, pt: BiaxialPoint, h: float = 1e-4) -> Multivector:
    """Central-difference (d_x + d_y) f: sum_i e_i (f(pt+h e_i) - f(pt-h e_i)) / 2h."""
    _check_step(h)
    if pt.r <= 2.0 * h:
        raise ValueError("evaluation too close to the x = 0 axis for the step size")
    dim = pt.dim
    acc = Multivector.zero(dim)
    for i in range(dim):
        diff = f(pt.shifted(i, h)) - f(pt.shifted(i, -h))
        acc = acc + Multivector.basis_vector(dim, i + 1) * (diff / (2.0 * h))
    return acc


def dirac_residual_relative(f, pt: BiaxialPoint, h: float = 1e-4) -> float:
    """Max-blade Dirac residual scaled by max(1, |f(pt)|)."""
    res = dirac_apply_fd(f, pt, h)
    return res.norm_inf / max(1.0, f(pt).norm_inf)


def vekua_residual(field: AxialField, r: float, y: np.ndarray, h: float = 1e-4):
    """Residuals of the first-order axial system.

    res1 = d_y A - d_r B - ((p-1)/r) B,  res2 = d_y B - d_r A,
    both by central differences; Dirac-null axial fields satisfy
    res1 = res2 = 0.
    """
    _check_step(h)
    if r <= 2.0 * h:
        raise ValueError("need r > 2h")
    y = np.asarray(y, dtype=np.float64)
    p, q = field.p, field.q
    dim = p + q

    def dy(g):
        acc = Multivector.zero(dim)
        for i in range(q):
            step = np.zeros(q)
            step[i] = h
            diff = g(r, y + step) - g(r, y - step)
            acc = acc + Multivector.basis_vector(dim, p + i + 1) * (diff / (2.0 * h))
        return acc

    def dr(g):
        return (g(r + h, y) - g(r - h, y)) / (2.0 * h)

    b_here = field.B(r, y)
    res1 = dy(field.A) - dr(field.B) - ((p - 1.0) / r) * b_here
    res2 = dy(field.B) - dr(field.A)
    return res1, res2


def modified_dirac_residual(f, p: int, q: int, r: float, y: np.ndarray,
                            h: float = 1e-4) -> Multivector:
    """Apply e d_r + d_y + ((p-1)/r) e. in the reduced (q+1)-generator picture.

    f maps (r, y) to a multivector over generators (e, y_1, ..., y_q) with
    e on generator 1; the interior multiplication supplies the e. term.
    """
    _check_step(h)
    if r <= 2.0 * h:
        raise ValueError("need r > 2h")
    y = np.asarray(y, dtype=np.float64)
    dim = q + 1
    e_mv = Multivector.basis_vector(dim, 1)
    drf = (f(r + h, y) - f(r - h, y)) / (2.0 * h)
    acc = e_mv * drf
    for i in range(q):
        step = np.zeros(q)
        step[i] = h
        diff = f(r, y + step) - f(r, y - step)
        acc = acc + Multivector.basis_vector(dim, i + 2) * (diff / (2.0 * h))
    return acc + ((p - 1.0) / r) * vector_interior(e_mv, f(r, y))


def lift_axial(mv: Multivector, u: np.ndarray, p: int, q: int) -> Multivector:
    """Map a reduced-picture value into the full algebra at x-direction u.

    The axial generator e becomes the embedded unit vector u on the x
    generators; y generators shift onto e_{p+1}..e_{p+q}.  This is an
    algebra map because u^2 = -1 and u anticommutes with the y block.
    """
    if mv.dim != q + 1:
        raise ValueError(f"expected a ({q + 1})-generator value, got dim {mv.dim}")
    dim = p + q
    u = np.asarray(u, dtype=np.float64)
    u_mv = embed_vector(dim, 0, u)
    out = Multivector.zero(dim)
    for mask in np.flatnonzero(mv.coeffs):
        mask = int(mask)
        big = Multivector.blade(dim, (mask >> 1) << p, mv.coeffs[mask])
        out = out + (u_mv * big if mask & 1 else big)
    return out


def modified_dirac_correspondence(f, p: int, q: int, pt: BiaxialPoint, h: float = 1e-4):
    """Both sides of the operator correspondence at a point with |x| = r.

    Returns (lifted axial-operator value, full-space Dirac value) for the
    field F(x, y) = lift(f(|x|, y)) at direction x/|x|; for radial fields
    the two agree.
    """
    m_small = modified_dirac_residual(f, p, q, pt.r, pt.y, h)
    m_big = lift_axial(m_small, pt.unit_x, p, q)

    def lifted(pt2: BiaxialPoint) -> Multivector:
        return lift_axial(f(pt2.r, pt2.y), pt2.unit_x, p, q)

    d_big = dirac_apply_fd(lifted, pt, h)
    return m_big, d_big
