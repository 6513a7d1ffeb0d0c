"""The Koshliakov kernel, its integral transform, reciprocal pairs, and
the Z / Theta / Omega / lambda family feeding the identity verifiers.

Kernel conventions (both appear in the literature and differ by a
substitution): the named kernel uses order z, argument 4 sqrt(x) and
half-angle trig weights; the transform kernel uses order 2z, argument
2 sqrt(xt) and full-angle weights.  The transform of t -> K_z(t) under
the latter reproduces K_z(x) exactly, which the test-suite checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import arith
from .errors import ConvergenceError, DecayError, DomainError, NearPoleError
from .quadrature import (ExpDecay, ExplicitCutoff, PowerDecay, QuadratureResult,
                         QuadratureSpec, integrate_finite, integrate_semi_infinite,
                         tanh_sinh)
from .specfun import (EULER_GAMMA, bessel_j, bessel_k, bessel_y, digamma,
                      exp_integral_e1_scaled, exp_integral_ei_scaled, gamma,
                      hurwitz_zeta, riemann_zeta)


def _require_real_order(z) -> float:
    z = complex(z)
    if z.imag != 0.0:
        raise DomainError("kernel orders must be real (Y is real-order only)")
    return z.real


def kernel_m(z, x):
    """M_z(x) = (2/pi) K_z(x) - Y_z(x) for real order z and x > 0."""
    zr = _require_real_order(z)
    k = bessel_k(zr, x)
    k = k.real if np.ndim(x) else k.real
    return (2.0 / math.pi) * k - bessel_y(zr, x)


def koshliakov_kernel(z, x):
    """cos(pi z/2) M_z(4 sqrt(x)) - sin(pi z/2) J_z(4 sqrt(x))."""
    zr = _require_real_order(z)
    v = 4.0 * np.sqrt(np.asarray(x, dtype=float))
    out = (math.cos(0.5 * math.pi * zr) * kernel_m(zr, v)
           - math.sin(0.5 * math.pi * zr) * bessel_j(zr, v))
    return float(out) if np.ndim(x) == 0 else out


def transform_kernel(z, v):
    """cos(pi z) M_{2z}(v) - sin(pi z) J_{2z}(v): the first-transform kernel
    evaluated at a precomputed argument v."""
    zr = _require_real_order(z)
    return (math.cos(math.pi * zr) * kernel_m(2.0 * zr, v)
            - math.sin(math.pi * zr) * bessel_j(2.0 * zr, v))


def _estimate_exp_decay(g, margin: float = 30.0) -> ExpDecay:
    """Fit an exponential envelope to g from samples at t=2 and t=6."""
    s = np.abs(np.asarray(g(np.array([2.0, 6.0]))))
    a, b = float(s[0]), float(s[1])
    if a == 0.0 and b == 0.0:
        return ExpDecay(1e-18, 1.0)
    if b == 0.0 or a == 0.0:
        return ExpDecay(max(a, b) * margin, 2.0)
    rate = min(max(math.log(a / b) / 4.0, 0.15), 12.0)
    return ExpDecay(margin * a * math.exp(2.0 * rate), rate)


def first_koshliakov_transform(g, z, x: float, spec: QuadratureSpec | None = None,
                               decay=None) -> QuadratureResult:
    """Integral of g(t) against the transform kernel at argument 2 sqrt(xt).

    g must accept an array of t > 0.  The range is split at t=1: the
    kernel grows like |log t| toward 0, so that panel runs through the
    singular-endpoint rule.  The tail needs a decay certificate; if none
    is passed, an exponential envelope is fitted from two samples of g.
    """
    zr = _require_real_order(z)
    if abs(zr) >= 0.5:
        raise DomainError("first Koshliakov transform needs |z| < 1/2")
    if x <= 0.0:
        raise DomainError("transform argument x must be positive")
    spec = spec or QuadratureSpec(abs_tol=1e-11, rel_tol=1e-11)

    def integrand(t):
        t = np.asarray(t, dtype=float)
        return np.asarray(g(t)) * transform_kernel(zr, 2.0 * np.sqrt(x * t))

    head = tanh_sinh(integrand, 0.0, 1.0, spec)
    tail_decay = decay or _estimate_exp_decay(integrand)
    tail = integrate_semi_infinite(integrand, 1.0, tail_decay, spec)
    return QuadratureResult(head.value + tail.value,
                            head.err_estimate + tail.err_estimate,
                            head.nodes_used + tail.nodes_used,
                            truncation_bound=tail.truncation_bound)


@dataclass(frozen=True)
class ReciprocalPair:
    """A (phi, psi) pair reciprocal under the factor-2 kernel convention.

    phi and psi map (x: positive array or scalar, z) to values; z_domain
    bounds Re z; Z_closed and dZ_ds_closed, when present, give the closed
    form of the shared normalized Mellin transform and its s-derivative.
    """

    phi: Callable
    psi: Callable
    z_domain: tuple
    label: str
    Z_closed: Optional[Callable] = None
    dZ_ds_closed: Optional[Callable] = None

    def check_z(self, z) -> complex:
        z = complex(z)
        lo, hi = self.z_domain
        if not lo <= z.real <= hi:
            raise DomainError(
                f"pair '{self.label}' requires Re z in [{lo}, {hi}], got {z.real}")
        return z


def pair_k_bessel(alpha: float) -> ReciprocalPair:
    """phi = K_z(2 alpha x), psi = beta K_z(2 beta x) with beta = 1/alpha."""
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError("pair_k_bessel requires alpha > 0")
    beta = 1.0 / alpha
    log_a = math.log(alpha)

    def phi(x, z):
        return bessel_k(z, 2.0 * alpha * np.asarray(x, dtype=float))

    def psi(x, z):
        return beta * bessel_k(z, 2.0 * beta * np.asarray(x, dtype=float))

    def z_closed(s, z):
        s = complex(s)
        return (cmath.exp(-s * log_a) + cmath.exp((s - 1.0) * log_a)) / 4.0

    def dz_closed(s, z):
        s = complex(s)
        return log_a * (cmath.exp((s - 1.0) * log_a) - cmath.exp(-s * log_a)) / 4.0

    return ReciprocalPair(phi=phi, psi=psi, z_domain=(-0.5, 0.5),
                          label=f"k-bessel(alpha={alpha:g})",
                          Z_closed=z_closed, dZ_ds_closed=dz_closed)


def _df_psi(x):
    """-(2/pi)(e^{4x} li(e^{-4x}) + e^{-4x} li(e^{4x})), fully scaled so no
    exponential is ever formed; decays like -1/(4 pi x^2)."""
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty(arr.shape, dtype=float)
    for i, t in enumerate(arr.ravel()):
        w = 4.0 * float(t)
        out.ravel()[i] = (2.0 / math.pi) * (exp_integral_e1_scaled(w)
                                            - exp_integral_ei_scaled(w))
    return float(out[0]) if scalar else out


def pair_dixon_ferrar() -> ReciprocalPair:
    """The z=0 pair (e^{-x}, -(2/pi)(e^{4x} li(e^{-4x}) + e^{-4x} li(e^{4x})))."""

    def check(z):
        if abs(complex(z)) > 1e-12:
            raise DomainError("the Dixon-Ferrar pair is defined at z=0 only")

    def phi(x, z):
        check(z)
        return np.exp(-np.asarray(x, dtype=float))

    def psi(x, z):
        check(z)
        return _df_psi(x)

    return ReciprocalPair(phi=phi, psi=psi, z_domain=(0.0, 0.0),
                          label="dixon-ferrar")


def theta_eval(pair: ReciprocalPair, x, z):
    """Theta(x, z) = phi(x, z) + psi(x, z)."""
    z = pair.check_z(z)
    return pair.phi(x, z) + pair.psi(x, z)


def _mellin_numeric(f, s: complex, spec: QuadratureSpec):
    """Integral of x^{s-1} f(x) over (0, inf) with a fitted tail model."""

    def integrand(x):
        x = np.asarray(x, dtype=float)
        return np.power(x, s - 1.0) * np.asarray(f(x))

    head = tanh_sinh(integrand, 0.0, 1.0, spec)
    h = np.abs(np.asarray(integrand(np.array([4.0, 8.0]))))
    a, b = float(h[0]), float(h[1])
    if b == 0.0 or a == 0.0:
        decay = ExplicitCutoff(8.0, 1.0)
    elif b / a < 0.125:
        rate = min(max(math.log(a / b) / 4.0, 0.15), 12.0)
        decay = ExpDecay(30.0 * a * math.exp(4.0 * rate), rate)
    else:
        power = math.log(a / b) / math.log(2.0)
        if power <= 1.0:
            raise DecayError(
                f"Mellin integrand decays like x^-{power:.2f}, tail not integrable")
        decay = PowerDecay(30.0 * a * 4.0 ** power, power, start=4.0)
    tail = integrate_semi_infinite(integrand, 1.0, decay, spec)
    return head, tail


def pair_Z_numeric(pair: ReciprocalPair, s, z, spec: QuadratureSpec | None = None) -> complex:
    """(Mellin(phi) + Mellin(psi))(s) / (Gamma((s-z)/2) Gamma((s+z)/2))."""
    z = pair.check_z(z)
    s = complex(s)
    if s.real <= abs(z.real) + 1e-9:
        raise DomainError(
            f"Mellin strip needs Re s > |Re z|; got Re s = {s.real}, Re z = {z.real}")
    spec = spec or QuadratureSpec(abs_tol=1e-12, rel_tol=1e-12)
    h1, t1 = _mellin_numeric(lambda x: pair.phi(x, z), s, spec)
    h2, t2 = _mellin_numeric(lambda x: pair.psi(x, z), s, spec)
    total = h1.value + t1.value + h2.value + t2.value
    return total / (gamma(0.5 * (s - z)) * gamma(0.5 * (s + z)))


# ---------------------------------------------------------------------------
# Omega
# ---------------------------------------------------------------------------

_OMEGA_ROT = cmath.exp(0.25j * math.pi)          # e^{i pi/4}


def _omega_definition(x: float, z: complex, n_terms: int) -> complex:
    """2 sum sigma_{-z}(n) n^{z/2} (e^{i pi z/4} K_z(4 pi e^{i pi/4} sqrt(nx))
    + e^{-i pi z/4} K_z(4 pi e^{-i pi/4} sqrt(nx))); terms die like
    exp(-2 sqrt(2) pi sqrt(nx))."""
    n_eff = min(n_terms, max(6, math.ceil(22.0 / x) + 4))
    n = np.arange(1, n_eff + 1, dtype=float)
    sig = np.array([arith.sigma(-z, int(m)) for m in range(1, n_eff + 1)])
    root = 4.0 * math.pi * np.sqrt(n * x)
    kp = bessel_k(z, root * _OMEGA_ROT)
    km = bessel_k(z, root * np.conj(_OMEGA_ROT))
    rot = cmath.exp(0.25j * math.pi * z)
    terms = 2.0 * sig * np.power(n, 0.5 * z) * (rot * kp + km / rot)
    return complex(np.sum(terms))


def omega_definition_term(x: float, z: complex, n: int) -> complex:
    """A single term of the defining K-series (diagnostics and tests)."""
    root = 4.0 * math.pi * math.sqrt(n * x)
    rot = cmath.exp(0.25j * math.pi * complex(z))
    kp = bessel_k(z, root * _OMEGA_ROT)
    km = bessel_k(z, root * np.conj(_OMEGA_ROT))
    return 2.0 * arith.sigma(-complex(z), n) * n ** (0.5 * complex(z)) * (rot * kp + km / rot)


def _omega_pf_array(x: np.ndarray, z: complex, n_terms: int,
                    table: arith.DivisorTable | None = None,
                    include_pole_term: bool = True) -> np.ndarray:
    """Partial-fraction form, vectorized over x; requires max(x) < N+1.

    The n > N remainder is restored analytically through the moments
    d_j = sum_{n>N} sigma_{-z}(n) n^{-2j-2}, whose alternating series in
    x^{2j} converges geometrically in (x/(N+1))^2; a bare truncation at
    the default N would strand the cross-mode agreement near 1e-7.

    Each d_j is assembled from Hurwitz-zeta tails through sigma's
    Dirichlet convolution,
        d_j = sum_{d<=N} d^{-s-z} zeta(s, floor(N/d)+1)
              + zeta(s) zeta(s+z, N+1),    s = 2j+2.
    Differencing zeta(s) zeta(s+z) against a partial sum instead leaves
    only roundoff for j >= 2, which x^{2j} then amplifies without bound.
    """
    N = n_terms
    if float(np.max(x)) >= N + 1.0:
        raise DomainError("partial-fraction mode needs x < N + 1")
    if table is None or table.n_max < N or table.exponent != -z:
        table = arith.build_table(-z, N)
    sig = table.slice(N)
    n = np.arange(1, N + 1, dtype=float)
    s_direct = np.sum(sig[None, :] / (n[None, :] ** 2 + x[:, None] ** 2), axis=1)

    # Moment tail.
    floors = N // np.arange(1, N + 1)
    uniq, inverse = np.unique(floors, return_inverse=True)
    s_tail = np.zeros_like(x, dtype=complex)
    x2 = x ** 2
    converged = False
    for j in range(0, 61):
        s = 2 * j + 2
        t_uniq = np.array([hurwitz_zeta(s, float(m) + 1.0) for m in uniq])
        d_j = (np.sum(n ** (-s - z) * t_uniq[inverse])
               + riemann_zeta(float(s)) * hurwitz_zeta(s + z, N + 1.0))
        piece = (-1.0) ** j * x2 ** j * d_j
        s_tail += piece
        if np.all(np.abs(piece) <= 1e-19 * np.maximum(np.abs(s_direct), 1e-30)):
            converged = True
            break
    if not converged:
        raise ConvergenceError(
            "partial-fraction moment tail stalled; raise n_terms above 2x")
    s_all = s_direct + s_tail

    half = 0.5 * z
    a = -gamma(z) * riemann_zeta(z) * np.power(2.0 * math.pi * np.sqrt(x), -z)
    c = -riemann_zeta(z + 1.0) * np.power(x, half) / 2.0
    out = a + c + np.power(x, half + 1.0) * s_all / math.pi
    if include_pole_term:
        # The zeta(z) x^{z/2-1} piece overflows at double-exponential nodes
        # near 0 for Re z < 0; callers that subtract it ask for it dropped
        # here instead of cancelling infinities.
        out = out + riemann_zeta(z) * np.power(x, half - 1.0) / (2.0 * math.pi)
    return out


def omega(x, z, mode: str = "partial-fraction", n_terms: int = 500):
    """Omega(x, z) in either representation; |Re z| < 1.

    In partial-fraction mode z=0 is a removable singularity evaluated by
    averaging z = +-1e-4 (error near 1e-8 by symmetry of the pole terms),
    and orders closer to 0 than that are refused.
    """
    z = complex(z)
    if abs(z.real) >= 1.0:
        raise DomainError("omega requires |Re z| < 1")
    if n_terms < 1:
        raise DomainError("omega needs n_terms >= 1")
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr).astype(float)
    if np.any(arr <= 0.0):
        raise DomainError("omega requires x > 0")

    if mode == "definition":
        out = np.array([_omega_definition(float(t), z, n_terms) for t in arr])
    elif mode == "partial-fraction":
        if abs(z) < 1e-12:
            hi = _omega_pf_array(arr, 1e-4 + 0.0j, n_terms)
            lo = _omega_pf_array(arr, -1e-4 + 0.0j, n_terms)
            out = 0.5 * (hi + lo)
        elif abs(z) < 1e-4:
            raise NearPoleError(
                "partial-fraction omega is ill-conditioned for 0 < |z| < 1e-4")
        else:
            out = _omega_pf_array(arr, z, n_terms)
    else:
        raise DomainError(f"unknown omega mode '{mode}'")
    return complex(out[0]) if scalar else out


def omega_pf_tail_envelope(n_terms: int, z) -> float:
    """Provable envelope for sum_{n>N} sigma_{-z}(n)/(n^2 + x^2) using
    sigma_{-z}(n) <= 2 n^{1/2 + max(0, -Re z)}; valid for Re z > -1/2."""
    p = 0.5 + max(0.0, -complex(z).real)
    if p >= 1.0:
        raise DecayError("envelope inapplicable for Re z <= -1/2")
    return 2.0 * n_terms ** (p - 1.0) / (1.0 - p)


def omega_combination(x, z, n_terms: int = 500):
    """Omega(x,z) - zeta(z) x^{z/2-1} / (2 pi): the self-reciprocal
    combination; partial-fraction based with the pole term dropped
    analytically, vectorized over x."""
    z = complex(z)
    if abs(z.real) >= 1.0:
        raise DomainError("omega_combination requires |Re z| < 1")
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr).astype(float)
    if np.any(arr <= 0.0):
        raise DomainError("omega_combination requires x > 0")
    if abs(z) < 1e-12:
        hi = _omega_pf_array(arr, 1e-4 + 0.0j, n_terms, include_pole_term=False)
        lo = _omega_pf_array(arr, -1e-4 + 0.0j, n_terms, include_pole_term=False)
        out = 0.5 * (hi + lo)
    elif abs(z) < 1e-4:
        raise NearPoleError(
            "partial-fraction omega is ill-conditioned for 0 < |z| < 1e-4")
    else:
        out = _omega_pf_array(arr, z, n_terms, include_pole_term=False)
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# lambda and its tail-corrected sums
# ---------------------------------------------------------------------------

def lambda_fn(x, z):
    """lambda(x, z) = zeta(z+1, x) - x^{-z}/z - x^{-z-1}/2, with the z=0
    limit log x - psi(x) - 1/(2x); decays like x^{-Re z - 2}."""
    z = complex(z)
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr).astype(float)
    if np.any(arr <= 0.0):
        raise DomainError("lambda_fn requires x > 0")
    if abs(z) < 1e-12:
        out = np.array([math.log(t) - digamma(t).real - 0.5 / t for t in arr],
                       dtype=complex)
    elif abs(z) < 1e-4:
        raise NearPoleError("lambda_fn is ill-conditioned for 0 < |z| < 1e-4")
    else:
        out = np.array([hurwitz_zeta(z + 1.0, t) for t in arr])
        out -= np.power(arr, -z) / z + 0.5 * np.power(arr, -z - 1.0)
    return complex(out[0]) if scalar else out


def _lambda_antiderivative_tail(U: float, z: complex) -> complex:
    """Integral of lambda(v, z) over [U, inf)."""
    return (hurwitz_zeta(z, U) / z + U ** (1.0 - z) / (z * (1.0 - z))
            - U ** (-z) / (2.0 * z))


def lambda_sum(alpha: float, z, n_terms: int):
    """sum_{n>=1} lambda(n alpha, z) as (value, residual_bound).

    The first n_terms terms are summed directly; the rest by Euler-
    Maclaurin through the closed antiderivative and the derivative
    recursion lambda'(v, z) = -(z+1) lambda(v, z+1).  Plain truncation
    decays only like N^{-Re z - 1} and cannot reach the verification
    tolerances at small term counts such as N=10.
    """
    z = complex(z)
    if abs(z) < 1e-4:
        raise NearPoleError("lambda_sum needs |z| >= 1e-4")
    N = max(int(n_terms), 1)
    head = complex(np.sum(lambda_fn(alpha * np.arange(1, N + 1, dtype=float), z)))
    a = N + 1.0
    U = a * alpha
    integral = _lambda_antiderivative_tail(U, z) / alpha
    f_a = complex(lambda_fn(U, z))
    fp_a = -alpha * (z + 1.0) * complex(lambda_fn(U, z + 1.0))
    fppp_a = -(alpha ** 3) * (z + 1.0) * (z + 2.0) * (z + 3.0) * complex(lambda_fn(U, z + 3.0))
    tail = integral + 0.5 * f_a - fp_a / 12.0 + fppp_a / 720.0
    resid = abs(alpha ** 5 * (z + 1.0) * (z + 2.0) * (z + 3.0) * (z + 4.0)
                * (z + 5.0) * complex(lambda_fn(U, z + 5.0))) / 30240.0
    return head + tail, resid
