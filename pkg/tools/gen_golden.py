#!/usr/bin/env python3
"""Generate the frozen golden-value file used by the test suite.

Independent arbitrary-precision oracle built on mpmath at 40 significant
digits.  It is run once, before the double-precision library is written,
and its output is committed at tests/data/golden.json.  The test suite
only ever reads the frozen file; it never calls mpmath.

    python tools/gen_golden.py                  # write the golden file
    python tools/gen_golden.py --checks         # also run slow identity
                                                # cross-verifications

--checks evaluates both sides of the deep identities (Xi-integral vs.
series forms, kernel self-reciprocality, the two candidate closed forms
for the two-exponential difference, the divisor-sum vs. Hurwitz-tail
identity) entirely within mpmath, so any later disagreement in the fast
library is attributable to the implementation and not to the formulas.
"""

from __future__ import annotations

import argparse
import json
import time

from mpmath import (
    mp, mpf, mpc, pi, exp, log, sqrt, sin, cos, atan, gamma, digamma,
    zeta, besselj, bessely, besselk, li, ei, quad, nsum, inf, expm1,
    euler, binomial, fabs, arg, re, im,
)

mp.dps = 40


# ----------------------------------------------------------------------
# building blocks
# ----------------------------------------------------------------------

def divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def sigma(a, n: int):
    """Divisor power sum sigma_a(n) = sum_{d|n} d^a."""
    return sum(mpf(d) ** a if im(mpc(a)) == 0 else mpc(d) ** a
               for d in divisors(n))


def xi(s):
    """Completed zeta xi(s) = (1/2) s (s-1) pi^(-s/2) Gamma(s/2) zeta(s)."""
    s = mpc(s)
    if fabs(s - 1) < mpf("1e-30"):
        # (s-1) zeta(s) -> 1 at s = 1
        return mpf("0.5") * s * pi ** (-s / 2) * gamma(s / 2)
    return mpf("0.5") * s * (s - 1) * pi ** (-s / 2) * gamma(s / 2) * zeta(s)


def big_xi(w):
    """Xi(w) = xi(1/2 + i w)."""
    return xi(mpf("0.5") + mpc(0, 1) * mpc(w))


def kernel_m(z, x):
    """M_z(x) = (2/pi) K_z(x) - Y_z(x)."""
    return 2 / pi * besselk(z, x) - bessely(z, x)


def kosh_kernel(z, x):
    """cos(pi z/2) M_z(4 sqrt(x)) - sin(pi z/2) J_z(4 sqrt(x))."""
    v = 4 * sqrt(mpf(x))
    return cos(pi * z / 2) * kernel_m(z, v) - sin(pi * z / 2) * besselj(z, v)


def transform_kernel(z, v):
    """cos(pi z) M_{2z}(v) - sin(pi z) J_{2z}(v); v = 2 sqrt(x t)."""
    return cos(pi * z) * kernel_m(2 * z, v) - sin(pi * z) * besselj(2 * z, v)


def df_phi(x):
    return exp(-x)


def df_psi(x):
    """Second member of the Dixon-Ferrar reciprocal pair at z = 0."""
    x = mpf(x)
    return -(2 / pi) * (exp(4 * x) * li(exp(-4 * x))
                        + exp(-4 * x) * li(exp(4 * x)))


def omega_term(n, x, z):
    """Single term of the K-Bessel definition of Omega(x, z)."""
    n, x, z = mpf(n), mpf(x), mpc(z)
    rot = exp(mpc(0, 1) * pi * z / 4)
    u = 4 * pi * sqrt(n * x)
    return 2 * sigma(-z, int(n)) * n ** (z / 2) * (
        rot * besselk(z, u * exp(mpc(0, 1) * pi / 4))
        + (1 / rot) * besselk(z, u * exp(-mpc(0, 1) * pi / 4)))


def omega_def(x, z, nmax=80):
    """Omega(x, z) by its exponentially convergent K-Bessel definition."""
    s = mpc(0)
    for n in range(1, nmax + 1):
        t = omega_term(n, x, z)
        s += t
        if n > 4 and fabs(t) < mpf(10) ** (-mp.dps - 8) * max(1, fabs(s)):
            break
    return s


def omega_pf(x, z, nexp=60, kmax=60):
    """Omega(x, z) by partial fractions plus zeta-moment tail.

    Omega(x,z) = -Gamma(z) zeta(z) (2 pi sqrt(x))^(-z)
                 + zeta(z) x^(z/2 - 1) / (2 pi)
                 - x^(z/2) zeta(z+1) / 2
                 + x^(z/2 + 1) / pi * S(x, z),
    S = sum_{n>=1} sigma_{-z}(n) / (n^2 + x^2), with the n > N tail
    rewritten through sum_{n>N} sigma_{-z}(n) n^(-2k-2) =
    zeta(2k+2) zeta(2k+2+z) - partial sum.
    """
    x, z = mpf(x), mpc(z)
    N = max(nexp, int(2 * x) + 10)
    s_direct = sum(sigma(-z, n) / (n * n + x * x) for n in range(1, N + 1))
    tail = mpc(0)
    for k in range(kmax):
        mom = zeta(2 * k + 2) * zeta(2 * k + 2 + z) - sum(
            sigma(-z, n) * mpf(n) ** (-2 * k - 2) for n in range(1, N + 1))
        term = (-1) ** k * x ** (2 * k) * mom
        tail += term
        if fabs(term) < mpf(10) ** (-mp.dps - 8):
            break
    S = s_direct + tail
    return (-gamma(z) * zeta(z) * (2 * pi * sqrt(x)) ** (-z)
            + zeta(z) * x ** (z / 2 - 1) / (2 * pi)
            - x ** (z / 2) * zeta(z + 1) / 2
            + x ** (z / 2 + 1) / pi * S)


def lam(x, z):
    """lambda(x, z) = zeta(z+1, x) - x^(-z)/z - x^(-z-1)/2."""
    x, z = mpf(x), mpc(z)
    return zeta(z + 1, x) - x ** (-z) / z - x ** (-z - 1) / 2


def lam_sum(alpha, z, nmax=400):
    """sum_{n>=1} lambda(n alpha, z), Richardson-accelerated tail."""
    return nsum(lambda n: lam(n * alpha, z), [1, inf], method="r+s+e")


def Z_closed(s, alpha):
    return (mpf(alpha) ** (-mpc(s)) + mpf(alpha) ** (mpc(s) - 1)) / 4


def dZ_closed(s, alpha):
    a = mpf(alpha)
    return log(a) * (-a ** (-mpc(s)) + a ** (mpc(s) - 1)) / 4


def theta_k(x, w, alpha):
    beta = 1 / mpf(alpha)
    return besselk(w, 2 * alpha * x) + beta * besselk(w, 2 * beta * x)


# ----------------------------------------------------------------------
# golden values
# ----------------------------------------------------------------------

def golden_values():
    i = mpc(0, 1)
    soldner = mpf("1.45136923488338105028396848589202744949303228")
    vals = {}

    def put(name, value, what):
        v = mpc(value)
        vals[name] = {"re": mp.nstr(v.real, 36), "im": mp.nstr(v.imag, 36),
                      "what": what}

    put("gamma_1_plus_i", gamma(1 + i), "Gamma(1+i)")
    put("gamma_quarter", gamma(mpf("0.25")), "Gamma(1/4)")
    put("zeta_half", zeta(mpf("0.5")), "zeta(1/2)")
    put("zeta_half_plus_3i", zeta(mpf("0.5") + 3 * i), "zeta(1/2+3i)")
    put("zeta_minus_half", zeta(mpf("-0.5")), "zeta(-1/2)")
    put("zeta_3", zeta(3), "zeta(3)")
    put("hurwitz_1p5_2p5", zeta(mpf("1.5"), mpf("2.5")), "zeta(3/2, 5/2)")
    put("hurwitz_0p75_3p25", zeta(mpf("0.75"), mpf("3.25")),
        "zeta(3/4, 13/4)")
    put("hurwitz_2p2i_1p5", zeta(2 + 2 * i, mpf("1.5")), "zeta(2+2i, 3/2)")
    put("digamma_3p7", digamma(mpf("3.7")), "psi(37/10)")
    put("digamma_0p5", digamma(mpf("0.5")), "psi(1/2)")
    put("xi_half", xi(mpf("0.5")), "xi(1/2) = Xi(0)")
    put("big_xi_2p5", big_xi(mpf("2.5")), "Xi(5/2)")
    put("big_xi_2_p5i", big_xi(2 + mpf("0.5") * i), "Xi(2+i/2)")
    put("xi_at_2", xi(mpf(2)), "xi(2)")
    put("bessel_j_0p3_7p5", besselj(mpf("0.3"), mpf("7.5")), "J_0.3(7.5)")
    put("bessel_j_0p25_2", besselj(mpf("0.25"), 2), "J_0.25(2)")
    put("bessel_j_1p25_2", besselj(mpf("1.25"), 2), "J_1.25(2)")
    put("bessel_j_m0p8_14", besselj(mpf("-0.8"), 14), "J_-0.8(14)")
    put("bessel_j_0p6_25", besselj(mpf("0.6"), 25), "J_0.6(25)")
    put("bessel_y_0_1", bessely(0, 1), "Y_0(1)")
    put("bessel_y_0p25_2", bessely(mpf("0.25"), 2), "Y_0.25(2)")
    put("bessel_y_1p25_2", bessely(mpf("1.25"), 2), "Y_1.25(2)")
    put("bessel_y_2_3p5", bessely(2, mpf("3.5")), "Y_2(3.5)")
    put("bessel_y_0p3_30", bessely(mpf("0.3"), 30), "Y_0.3(30)")
    put("bessel_k_0_1", besselk(0, 1), "K_0(1)")
    put("bessel_k_0p25_2", besselk(mpf("0.25"), 2), "K_0.25(2)")
    put("bessel_k_0p3_cplx", besselk(mpf("0.3"), 2 * exp(i * pi / 4)),
        "K_0.3(2 e^{i pi/4})")
    put("bessel_k_1p6_0p3", besselk(mpf("1.6"), mpf("0.3")), "K_1.6(0.3)")
    put("bessel_k_0_377", besselk(0, 377) * exp(mpf(377)),
        "e^377 K_0(377) (scaled)")
    put("li_2", li(2), "li(2)")
    put("li_soldner", li(soldner), "li at the Soldner point (approx 0)")
    put("ei_1", ei(1), "Ei(1)")
    put("df_psi_1", df_psi(1), "Dixon-Ferrar psi(1)")
    put("df_psi_6", df_psi(6), "Dixon-Ferrar psi(6)")
    put("kernel_m_0_1", kernel_m(0, 1), "M_0(1)")
    put("kosh_kernel_0p5_1", kosh_kernel(mpf("0.5"), 1),
        "kernel at z=1/2, x=1")
    put("kosh_kernel_0_2", kosh_kernel(0, 2), "kernel at z=0, x=2")
    put("theta_k_alpha2_pi", theta_k(pi, 0, 2),
        "Theta(pi, 0) for the K pair at alpha=2")
    put("lambda_2_half", lam(2, mpf("0.5")), "lambda(2, 1/2)")
    put("lambda_1_0", log(1) - digamma(1) - mpf("0.5"),
        "lambda(1, 0) = gamma - 1/2")
    put("omega_1_0p4", omega_def(1, mpf("0.4")), "Omega(1, 2/5)")
    put("omega_2_m0p4", omega_def(2, mpf("-0.4")), "Omega(2, -2/5)")
    put("omega_term10_1_0", fabs(omega_term(10, 1, 0)),
        "|n=10 term| of the K-definition of Omega at x=1, z=0")
    put("sigma_c_12", sigma(-mpc("0.5", "0.5"), 12), "sigma_{-(1/2+i/2)}(12)")
    put("mellin_k_closed", 2 ** (mpc("1.2", "0.7") - 2)
        * gamma((mpc("1.2", "0.7") - mpf("0.3")) / 2)
        * gamma((mpc("1.2", "0.7") + mpf("0.3")) / 2),
        "2^(s-2) q^(-s) Gamma((s-nu)/2) Gamma((s+nu)/2), s=1.2+0.7i, nu=0.3, q=1")

    # quadrature targets
    put("hz0_inner_n1", quad(lambda xx: 2 * xx * besselk(0, 2 * xx)
                             / (xx * xx + pi * pi) ** mpf("1.5"),
                             [0, 1, 5, 30]),
        "int_0^inf 2 x K_0(2x) (x^2+pi^2)^(-3/2) dx")
    put("bh_inner_n1", quad(lambda xx: xx ** mpf("1.25")
                            * besselk(mpf("0.25"), 2 * xx)
                            / (xx * xx + pi * pi) ** mpf("1.75"),
                            [0, 1, 5, 30]),
        "int_0^inf x^(5/4) K_{1/4}(2x) (x^2+pi^2)^(-7/4) dx")
    put("laplace_bessel_rhs_1_1_0", exp(-2 * pi) / (2 * pi),
        "e^(-2 pi y/alpha) y^(z/2) / (2 pi alpha^(z+1)) at alpha=y=1, z=0")

    # identity right-hand sides frozen for regression
    z, alpha = mpf("0.5"), mpf(1)
    ksum = sum(sigma(-z, n) * mpf(n) ** (z / 2) * besselk(z / 2, 2 * n * pi * alpha)
               for n in range(1, 40))
    rg_rhs = sqrt(alpha) * (alpha ** (z / 2 - 1) * pi ** (-z / 2)
                            * gamma(z / 2) * zeta(z)
                            + alpha ** (-z / 2 - 1) * pi ** (z / 2)
                            * gamma(-z / 2) * zeta(-z) - 4 * ksum)
    put("rg_rhs_half_1", rg_rhs, "difference-form RHS at z=1/2, alpha=1")

    dsum = sum(sigma(0, n) * theta_k(pi * n, 0, 1) for n in range(1, 30))
    put("rgz0_rhs_alpha1", dsum - (euler - log(4 * pi)) / 2,
        "z->0 corollary RHS at alpha=1")

    put("f_frak_2_c", frak_f(mpf(2), mpc("0.3", "0.2")),
        "F(alpha, z) at alpha=2, z=0.3+0.2i")
    put("f_frak_half_c", frak_f(mpf("0.5"), mpc("0.3", "0.2")),
        "F(alpha, z) at alpha=1/2, z=0.3+0.2i")
    return vals


def frak_f(alpha, z):
    """F(alpha, z): the completed K-Bessel divisor series.

    F = sqrt(alpha) (alpha^(z/2-1) pi^(-z/2) Gamma(z/2) zeta(z) / 8
        + alpha^(-z/2-1) pi^(z/2) Gamma(-z/2) zeta(-z) / 8
        - (1/2) sum sigma_{-z}(n) n^(z/2) K_{z/2}(2 pi n alpha)).
    Invariant under alpha -> 1/alpha.
    """
    alpha, z = mpf(alpha), mpc(z)
    ks = mpc(0)
    for n in range(1, 60):
        t = sigma(-z, n) * mpf(n) ** (z / 2) * besselk(z / 2, 2 * pi * n * alpha)
        ks += t
        if fabs(t) < mpf(10) ** (-mp.dps - 6):
            break
    return sqrt(alpha) * (alpha ** (z / 2 - 1) * pi ** (-z / 2) * gamma(z / 2)
                          * zeta(z) / 8
                          + alpha ** (-z / 2 - 1) * pi ** (z / 2)
                          * gamma(-z / 2) * zeta(-z) / 8 - ks / 2)


# ----------------------------------------------------------------------
# identity cross-checks (slow; run with --checks)
# ----------------------------------------------------------------------

def check(name, lhs, rhs):
    lhs, rhs = mpc(lhs), mpc(rhs)
    denom = max(fabs(lhs), fabs(rhs), mpf("1e-30"))
    rel = fabs(lhs - rhs) / denom
    print(f"  {name}: lhs={mp.nstr(lhs, 20)} rhs={mp.nstr(rhs, 20)} "
          f"rel={mp.nstr(rel, 3)}")
    return rel


def run_checks():
    print("[checks] prefactor identity 8 (4 pi)^((z-3)/2) vs 2^z pi^((z-3)/2)")
    for z in (mpf("0.75"), mpc("0.4", "0.2")):
        check(f"z = {z}", 8 * (4 * pi) ** ((z - 3) / 2),
              2 ** z * pi ** ((z - 3) / 2))

    print("[checks] two-exponential difference: candidate closed forms")
    old = mp.dps
    mp.dps = 25
    z = mpf("0.5")
    a = mpf("1.5") * pi
    b = pi * pi / a
    lhs = (sqrt(a) * nsum(lambda n: sigma(-z, int(n)) * mpf(n) ** (z / 2)
                          * besselk(z / 2, 2 * n * a), [1, 40])
           - sqrt(b) * nsum(lambda n: sigma(-z, int(n)) * mpf(n) ** (z / 2)
                            * besselk(z / 2, 2 * n * b), [1, 40]))
    gz = gamma(z / 2) * zeta(z) / 4
    gmz = gamma(-z / 2) * zeta(-z) / 4
    va = (gz * (b ** ((1 - z) / 2) - a ** ((1 - z) / 2)) / pi ** (z / 2)
          + gmz * pi ** (z / 2) * (a ** ((1 + z) / 2) - b ** ((1 + z) / 2))
          / pi ** z)
    # variant printed in the source: second brace {a^((1+z)/2) - a^((1+z)/2)}
    vb = gz * (b ** ((1 - z) / 2) - a ** ((1 - z) / 2)) / pi ** (z / 2)
    check("variant braces (a-b)", lhs, va)
    check("variant braces (a-a), i.e. zero second term", lhs, vb)

    print("[checks] self-reciprocality of K_z under the first kernel")
    for z, x in ((mpf("0.25"), mpf(2)), (mpf(0), mpf(1))):
        val = quad(lambda t: besselk(z, t) * transform_kernel(z, 2 * sqrt(x * t)),
                   [0, x, 1 + x, 10, 60])
        check(f"z={z}, x={x}", val, besselk(z, x))

    print("[checks] scaled-pair normalization: transform of beta K_z(2 beta t)")
    alpha = mpf(2)
    beta = 1 / alpha
    x = mpf(1)
    val = quad(lambda t: beta * besselk(0, 2 * beta * t)
               * transform_kernel(0, 2 * sqrt(x * t)), [0, 1, 10, 80])
    check("alpha=2, z=0, x=1 vs K_0(alpha x/2)/2", val, besselk(0, 1) / 2)

    print("[checks] Dixon-Ferrar pair, mirrored direction (psi from phi)")
    for x in (mpf("0.5"), mpf(1)):
        val = 2 * quad(lambda t: df_phi(t) * kernel_m(0, 4 * sqrt(t * x)),
                       [0, mpf("0.05"), 1, 10, 60])
        check(f"x={x}", val, df_psi(x))

    print("[checks] Dixon-Ferrar pair, forward direction (phi from psi)")
    x = mpf(1)
    mp.dps = 15
    val = 2 * quad(lambda t: df_psi(t) * kernel_m(0, 4 * sqrt(t * x)),
                   [0, mpf("0.05"), 1, 10, 100, 400, 1600, 4000],
                   maxdegree=7)
    check("x=1 (coarse tail to T=4000)", val, df_phi(x))
    mp.dps = 25

    print("[checks] Xi-integral identity, difference form, z=1/2, alpha=1")
    z, alpha = mpf("0.5"), mpf(1)
    num = lambda t: (big_xi((t + mpc(0, 1) * z) / 2)
                     * big_xi((t - mpc(0, 1) * z) / 2)
                     * cos(t * log(alpha) / 2)
                     / ((t * t + (z + 1) ** 2) * (t * t + (z - 1) ** 2)))
    lhs = -(32 / pi) * quad(num, [0, 5, 15, 40])
    ksum = nsum(lambda n: sigma(-z, int(n)) * mpf(n) ** (z / 2)
                * besselk(z / 2, 2 * n * pi * alpha), [1, 30])
    rhs = sqrt(alpha) * (alpha ** (z / 2 - 1) * pi ** (-z / 2) * gamma(z / 2)
                         * zeta(z) + alpha ** (-z / 2 - 1) * pi ** (z / 2)
                         * gamma(-z / 2) * zeta(-z) - 4 * ksum)
    check("difference form", lhs, rhs)

    print("[checks] Xi-integral identity, z->0 corollary, alpha=1")
    num0 = lambda t: (big_xi(t / 2) ** 2 * cos(t * log(mpf(1)) / 2)
                      / (t * t + 1) ** 2)
    lhs0 = (32 / pi) * quad(num0, [0, 5, 15, 40])
    rhs0 = (nsum(lambda n: sigma(0, int(n)) * theta_k(pi * n, 0, 1), [1, 25])
            - (euler - log(4 * pi)) / 2)
    check("z->0 corollary", lhs0, rhs0)

    print("[checks] Hurwitz-tail identity (lambda form), z=3/4, alpha=1")
    z, alpha = mpf("0.75"), mpf(1)
    numh = lambda t: (gamma((z - 1 + mpc(0, 1) * t) / 4)
                      * gamma((z - 1 - mpc(0, 1) * t) / 4)
                      * big_xi((t + mpc(0, 1) * z) / 2)
                      * big_xi((t - mpc(0, 1) * z) / 2)
                      * cos(t * log(alpha) / 2) / (t * t + (z + 1) ** 2))
    pref = 2 ** z * pi ** ((z - 3) / 2) / gamma(z + 1)
    lhsh = pref * quad(numh, [0, 5, 15, 40]) * alpha ** ((z + 1) / 2)
    rhsh = alpha ** ((z + 1) / 2) * (lam_sum(alpha, z)
                                     - zeta(z + 1) / (2 * alpha ** (z + 1))
                                     - zeta(z) / (alpha * z))
    check("lambda form", lhsh, rhsh)

    print("[checks] Hurwitz-tail z->0 corollary, alpha=1")
    numh0 = lambda t: (gamma((-1 + mpc(0, 1) * t) / 4)
                       * gamma((-1 - mpc(0, 1) * t) / 4)
                       * big_xi(t / 2) ** 2 / ((t * t + 1) * pi ** mpf("1.5")))
    lhsh0 = quad(numh0, [0, 5, 15, 40])
    inner = lambda n: quad(lambda xx: xx * theta_k(xx, 0, 1)
                           / (xx * xx + pi * pi * n * n) ** mpf("1.5"),
                           [0, 1, 5, 30])
    ssum = nsum(lambda n: n * sigma(0, int(n)) * inner(int(n)), [1, inf],
                method="r+e")
    rhsh0 = (pi / 2) * ssum - ((euler - log(2 * pi)) * Z_closed(1, 1)
                               + dZ_closed(1, 1)) / 2
    check("z->0 corollary", lhsh0, rhsh0)

    print("[checks] divisor series vs lambda series (single-sum identity), "
          "z=1/2, alpha=1")
    z, alpha = mpf("0.5"), mpf(1)
    inner2 = lambda n: quad(lambda xx: xx ** (1 + z / 2)
                            * besselk(z / 2, 2 * alpha * xx)
                            / (xx * xx + pi * pi * n * n) ** ((z + 3) / 2),
                            [0, 1, 5, 30])
    lhs_d = (pi ** (z + mpf("0.5")) * gamma((z + 3) / 2)
             * nsum(lambda n: sigma(-z, int(n)) * mpf(n) ** (z + 1)
                    * inner2(int(n)), [1, inf], method="r+e"))
    rhs_lam = (alpha ** (z / 2) / 2 ** (z + 2) * gamma(z + 1)
               * lam_sum(alpha, z))
    rhs_printed = (alpha ** (z / 2) / 2 ** (z + 2) * gamma(z + 1)
                   * nsum(lambda m: zeta(z + 1, m * alpha)
                          - (m * alpha) ** (-z) / z - (m * alpha) ** (-z) / 2,
                          [1, 60]))
    check("lambda bracket", lhs_d, rhs_lam)
    check("bracket as printed, (m a)^(-z)/2 last term", lhs_d, rhs_printed)

    print("[checks] Omega: K-definition vs partial fractions + moment tail")
    for x, z in ((mpf(1), mpf("0.4")), (mpf(2), mpf("-0.4")),
                 (mpf("0.7"), mpc("0.2", "0.1"))):
        check(f"x={x}, z={z}", omega_def(x, z), omega_pf(x, z))

    print("[checks] self-transform of the Omega combination, x=1, z=0.3")
    z, x = mpf("0.3"), mpf(1)
    comb = lambda y: omega_def(y, z) - zeta(z) * y ** (z / 2 - 1) / (2 * pi)
    lhs_s = quad(lambda y: besselj(z, 4 * pi * sqrt(x * y)) * comb(y),
                 [0, mpf("0.25"), 1, 4, 16])
    rhs_s = comb(x)
    check("self-transform", lhs_s, rhs_s)

    print("[checks] Laplace-type J integral, alpha=1, y=1, z=0")
    val = quad(lambda xx: exp(-2 * pi * xx) * besselj(0, 4 * pi * sqrt(xx)),
               [0, 1, 4, 10])
    check("closed form", val, exp(-2 * pi) / (2 * pi))

    print("[checks] exponential-damping identity (equi), z=1/2, alpha=2")
    z, alpha = mpf("0.5"), mpf(2)
    comb2 = lambda y: omega_def(y, z) - zeta(z) * y ** (z / 2 - 1) / (2 * pi)
    lhs_e = quad(lambda y: exp(-2 * pi * alpha * y) * y ** (z / 2) * comb2(y),
                 [0, mpf("0.25"), 1, 4])
    gsum = nsum(lambda n: sigma(-z, int(n)) * (
        (n * n + alpha * alpha) ** (-z / 2 - mpf("0.5"))
        * gamma(z + 1) * cos((z + 1) * atan(mpf(n) / alpha)) / (2 * pi) ** (z + 1)),
        [1, inf], method="r+e")
    rhs_e = (gamma(z + 1) * zeta(z + 1) / (2 * pi * alpha) ** (z + 1) / 2
             - zeta(z) / (4 * pi * alpha) + gsum)
    check("constants outside the sum", lhs_e, rhs_e)

    mp.dps = old


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tests/data/golden.json")
    ap.add_argument("--checks", action="store_true",
                    help="run slow identity cross-verifications")
    args = ap.parse_args()

    t0 = time.time()
    vals = golden_values()
    payload = {
        "generator": "tools/gen_golden.py",
        "dps": mp.dps,
        "values": vals,
    }
    with open(args.out, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(vals)} golden values to {args.out} "
          f"({time.time() - t0:.1f}s)")

    if args.checks:
        run_checks()
        print(f"checks done ({time.time() - t0:.1f}s)")


if __name__ == "__main__":
    main()
