"""Clausen function, dilogarithm, and closed-form log-trigonometric integrals.

The Clausen function is evaluated from the integrated cotangent expansion

    Cl2(t) = t - t*log(t) + sum_{n>=1} |B_{2n}| / (2n (2n+1) (2n)!) * t^(2n+1)

after reduction to (0, pi] by oddness and periodicity, with one duplication
step pulling arguments in (2pi/3, pi] back below 2pi/3 so the series ratio
never exceeds 1/9.  Bernoulli numbers come from the classical recurrence
over exact rationals, computed once per process and shared by every
precision (per-precision coefficient tables are derived from them and
cached write-once).

A second, independent evaluation route, :func:`cl2_series_reference`, sums
the defining series sum sin(n t)/n^2 directly and completes it with the
exact Laplace-transform tail

    sum_{n>M} z^n/n^2 = integral_0^inf  s (z e^-s)^(M+1) / (1 - z e^-s) ds,

evaluated by quadrature.  It shares nothing with the primary route past
elementary functions and serves as its cross-check oracle.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import libmp

from .mpcore import DomainError, PrecisionCtx, get_ctx, round_out
from . import quad

__all__ = [
    "cl2",
    "cl2_series_reference",
    "li2",
    "LogTrigClosedForm",
    "log_sin_product_integral",
    "log_tan_integral",
    "bernoulli_over_factorial",
]


# ---------------------------------------------------------------------------
# Bernoulli numbers: b[m] = B_m / m! as exact fractions (B_1 = -1/2).
# Recurrence: b_m = -sum_{j<m} b_j / (m+1-j)!,  from sum_j C(m+1,j) B_j = 0.
# The list only ever grows; entries are immutable.
# ---------------------------------------------------------------------------

_B_OVER_FACT: list = [Fraction(1)]
_INV_FACT: list = [Fraction(1), Fraction(1)]
# Guards cache growth (readers never see mutation).  Reentrant: growing a
# coefficient table pulls Bernoulli numbers under the same lock.
_CACHE_LOCK = threading.RLock()


def _inv_fact(k: int) -> Fraction:
    while len(_INV_FACT) <= k:
        n = len(_INV_FACT)
        _INV_FACT.append(_INV_FACT[n - 1] / n)
    return _INV_FACT[k]


def bernoulli_over_factorial(m: int) -> Fraction:
    """Exact B_m / m!."""
    if len(_B_OVER_FACT) > m:
        return _B_OVER_FACT[m]
    with _CACHE_LOCK:
        while len(_B_OVER_FACT) <= m:
            k = len(_B_OVER_FACT)
            acc = Fraction(0)
            for j in range(k):
                bj = _B_OVER_FACT[j]
                if bj:
                    acc += bj * _inv_fact(k + 1 - j)
            _B_OVER_FACT.append(-acc)
    return _B_OVER_FACT[m]


# Per-precision series coefficients, keyed by working precision in bits.
_CL2_COEFFS: dict = {}
_LI2_W_COEFFS: dict = {}


def _grow_coeffs(cache: dict, prec: int, n: int, make):
    coeffs = cache.setdefault(prec, [])
    if len(coeffs) >= n:
        return coeffs
    with _CACHE_LOCK:
        while len(coeffs) < n:
            coeffs.append(make(len(coeffs) + 1))
    return coeffs


def _cl2_coeffs(ctx: PrecisionCtx, n: int):
    """mpf coefficients c[k] = |B_2k|/(2k (2k+1) (2k)!) for k = 1..n."""
    def make(k):
        return ctx.mpf(abs(bernoulli_over_factorial(2 * k)) / (2 * k * (2 * k + 1)))

    return _grow_coeffs(_CL2_COEFFS, ctx.prec_work, n, make)


def _li2_w_coeffs(ctx: PrecisionCtx, n: int):
    """mpf coefficients e[k] = B_2k/((2k)! (2k+1)) for k = 1..n."""
    def make(k):
        return ctx.mpf(bernoulli_over_factorial(2 * k) / (2 * k + 1))

    return _grow_coeffs(_LI2_W_COEFFS, ctx.prec_work, n, make)


# ---------------------------------------------------------------------------
# Clausen function.
# ---------------------------------------------------------------------------

def _reduce_to_0_pi(theta, ctx: PrecisionCtx):
    """Map theta to (sign, t) with t in [0, pi], using 2pi-periodicity and oddness."""
    mp = ctx._mp
    two_pi = 2 * ctx.pi
    k = ctx.nint(theta / two_pi)
    if k:
        # Subtract k*2pi with pi carried at extra precision so the reduced
        # angle keeps full absolute accuracy even for large |theta|.
        extra = max(0, abs(k).bit_length()) + 10
        pi2 = libmp.mpf_shift(libmp.mpf_pi(ctx.prec_work + extra), 1)
        prod = libmp.mpf_mul_int(pi2, k, ctx.prec_work + extra, "n")
        t = mp.make_mpf(libmp.mpf_sub(theta._mpf_, prod, ctx.prec_work, "n"))
    else:
        t = theta
    if t > ctx.pi:
        t = t - two_pi
    if t < -ctx.pi:
        t = t + two_pi
    if t < 0:
        return -1, -t
    return 1, t


def _cl2_series(t, ctx: PrecisionCtx):
    """The defining expansion on [0, 2pi/3]."""
    if t == 0:
        return ctx._mp.mpf(0)
    s = t - t * ctx.log(t)
    t2 = t * t
    power = t * t2
    eps = ctx._mp.mpf(2) ** (-ctx.prec_work - 4)
    k = 1
    while True:
        coeffs = _cl2_coeffs(ctx, k + 16)
        while k <= len(coeffs):
            term = coeffs[k - 1] * power
            s += term
            if term < eps * s:
                return s
            power *= t2
            k += 1


def cl2(theta, ctx: PrecisionCtx):
    """Clausen function Cl2(theta) = -int_0^theta log|2 sin(u/2)| du.

    Odd and 2pi-periodic; defined for any finite real angle.
    """
    theta = theta if isinstance(theta, ctx._mp.mpf) else ctx.mpf(theta)
    if not ctx.isfinite(theta):
        raise DomainError("cl2 requires a finite angle")
    sign, t = _reduce_to_0_pi(theta, ctx)
    two_thirds_pi = 2 * ctx.pi / 3
    if t <= two_thirds_pi:
        value = _cl2_series(t, ctx)
    else:
        # Duplication: Cl2(t) = Cl2(pi - t) - Cl2(2pi - 2t)/2, both arguments
        # now in [0, 2pi/3).
        value = _cl2_series(ctx.pi - t, ctx) - _cl2_series(2 * (ctx.pi - t), ctx) / 2
    return round_out(sign * value, ctx)


def cl2_series_reference(theta, ctx: PrecisionCtx, terms: int = 256):
    """Independent Cl2 evaluation: partial sum of sin(n t)/n^2 plus exact tail.

    The first ``terms`` terms are summed directly (stable three-term sine
    recurrence); the remainder is the imaginary part of the Laplace-transform
    integral of the tail, computed by double-exponential quadrature with its
    own error control.  Intended as a cross-check oracle for :func:`cl2`.
    """
    theta = theta if isinstance(theta, ctx._mp.mpf) else ctx.mpf(theta)
    hi = get_ctx(ctx.digits + 10, ctx.guard_digits)
    mp = hi._mp
    sign, t = _reduce_to_0_pi(hi.mpf(theta), hi)
    if t == 0:
        return round_out(ctx.mpf(0), ctx)

    M = max(8, terms)
    cos_t = hi.cos(t)
    sin_t = hi.sin(t)
    two_cos = 2 * cos_t
    s_prev = mp.mpf(0)
    s_cur = sin_t
    partial = sin_t
    for n in range(2, M + 1):
        s_prev, s_cur = s_cur, two_cos * s_cur - s_prev
        partial += s_cur / (n * n)

    # Tail = Im sum_{n>M} e^{i n t}/n^2 = Im e^{i(M+1)t} int_0^inf
    #   s e^{-(M+1)s} / (1 - e^{it} e^{-s}) ds.  Substituting s = u/(M+1)
    # brings the mass to u ~ 1 where the exp-sinh grid is dense; taking the
    # imaginary part analytically keeps the integrand real.
    mt = (M + 1) * t
    sin_mt = hi.sin(mt)
    cos_mt = hi.cos(mt)
    mp1 = mp.mpf(M + 1)

    def tail_integrand(u):
        e = mp.exp(-u / mp1)
        num = sin_mt * (1 - e * cos_t) + cos_mt * (e * sin_t)
        den = 1 - two_cos * e + e * e
        return u * mp.exp(-u) * num / (den * mp1 * mp1)

    tol = hi.pow10(-(ctx.digits + 5))
    tail = quad.integrate(tail_integrand, (0, hi.inf), tol, hi)
    return round_out(ctx.mpf(sign * (partial + tail.value)), ctx)


# ---------------------------------------------------------------------------
# Dilogarithm.
# ---------------------------------------------------------------------------

def _li2_power_series(z, ctx: PrecisionCtx):
    """sum z^n/n^2 for |z| <= 1/2 (real or complex)."""
    mp = ctx._mp
    eps = mp.mpf(2) ** (-ctx.prec_work - 4)
    total = z
    power = z
    n = 2
    while True:
        power *= z
        term = power / (n * n)
        total += term
        if abs(term) < eps * abs(total):
            return total
        n += 1


def _li2_log_series(z, ctx: PrecisionCtx):
    """Li2 via the expansion in w = -log(1-z), valid for |w| < 2pi.

    Li2(z) = sum_{n>=0} B_n/(n! (n+1)) w^(n+1)
           = w - w^2/4 + sum_{k>=1} B_2k/((2k)! (2k+1)) w^(2k+1).
    """
    mp = ctx._mp
    w = -ctx.log(1 - z)
    eps = mp.mpf(2) ** (-ctx.prec_work - 4)
    total = 1 - w / 4
    w2 = w * w
    power = w2
    k = 1
    while True:
        coeffs = _li2_w_coeffs(ctx, k + 16)
        while k <= len(coeffs):
            term = coeffs[k - 1] * power
            total += term
            if abs(term) < eps * abs(total):
                return w * total
            power *= w2
            k += 1


def _li2_main(z, ctx: PrecisionCtx):
    mp = ctx._mp
    if z == 0:
        return mp.mpf(0)
    if z == 1:
        return ctx.pi ** 2 / 6
    if abs(z) > 1:
        # Inversion: Li2(z) + Li2(1/z) = -pi^2/6 - log(-z)^2/2 (principal
        # branch; real z > 1 arrives as mpc and lands on the standard cut
        # values with Im Li2 = -pi*log z).
        logterm = ctx.log(-z)
        return -_li2_main(1 / z, ctx) - ctx.pi ** 2 / 6 - logterm ** 2 / 2
    if abs(z) <= mp.mpf(1) / 2:
        return _li2_power_series(z, ctx)
    if abs(1 - z) <= mp.mpf(1) / 2:
        # Reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
        return ctx.pi ** 2 / 6 - ctx.log(z) * ctx.log(1 - z) - _li2_power_series(1 - z, ctx)
    return _li2_log_series(z, ctx)


def li2(z, ctx: PrecisionCtx):
    """Principal-branch dilogarithm sum z^n/n^2, real or complex argument.

    Real arguments z <= 1 give a real result; real z > 1 lie on the branch
    cut and return the standard complex continuation with
    Im Li2(z) = -pi*log(z).
    """
    mp = ctx._mp
    if isinstance(z, (int, float, Fraction)):
        z = ctx.mpf(z)
    if isinstance(z, complex):
        z = ctx.mpc(z.real, z.imag)
    if isinstance(z, mp.mpf) and z > 1:
        z = mp.mpc(z)
    elif isinstance(z, mp.mpc) and z.imag == 0 and z.real <= 1:
        z = z.real
    if not ctx.isfinite(z):
        raise DomainError("li2 requires a finite argument")
    return round_out(_li2_main(z, ctx), ctx)


# ---------------------------------------------------------------------------
# Closed-form log-trigonometric integrals.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogTrigClosedForm:
    """Value of int_alpha^beta log(a cos x + b sin x + c) dx with the two
    auxiliary angles that factor the integrand as
    2 sqrt(a^2+b^2) sin((delta2-x)/2) sin((delta1+x)/2)."""

    value: object
    delta1: object
    delta2: object


def _lemma1_deltas(a, b, c, ctx: PrecisionCtx):
    """Auxiliary angles so a cos x + b sin x + c = 2R sin((d2-x)/2) sin((d1+x)/2).

    Writing the left side as R cos(x - psi) + c, the factorization forces
    (d2 - d1)/2 = psi and cos((d1+d2)/2) = -c/R, so d1 = S - psi and
    d2 = S + psi with S = arccos(-c/R).  This construction is branch-safe
    where the direct arctan formulas are not; the invariant is asserted.
    """
    mp = ctx._mp
    r2 = a * a + b * b
    if r2 == 0:
        raise DomainError("a and b may not both vanish")
    root2 = r2 - c * c
    if root2 < 0:
        if root2 > -ctx.pow10(-ctx.digits) * r2:
            root2 = mp.mpf(0)
        else:
            raise DomainError("hypothesis a^2 + b^2 >= c^2 violated")
    big_r = ctx.sqrt(r2)
    arg = -c / big_r
    if arg > 1:
        arg = mp.mpf(1)
    elif arg < -1:
        arg = mp.mpf(-1)
    big_s = ctx.acos(arg)
    psi = ctx.atan2(b, a)
    return big_s - psi, big_s + psi, big_r


def _assert_factorization(a, b, c, d1, d2, big_r, alpha, beta, ctx: PrecisionCtx):
    tol = ctx.pow10(-ctx.digits + 5) * (1 + big_r)
    for frac in (0.19, 0.55, 0.83):
        x = alpha + (beta - alpha) * ctx.mpf(frac) if beta != alpha else alpha + ctx.mpf(frac)
        lhs = a * ctx.cos(x) + b * ctx.sin(x) + c
        rhs = 2 * big_r * ctx.sin((d2 - x) / 2) * ctx.sin((d1 + x) / 2)
        if abs(lhs - rhs) > tol:
            raise DomainError("internal angle-factorization check failed")


def log_sin_product_integral(alpha, beta, a, b, c, ctx: PrecisionCtx) -> LogTrigClosedForm:
    """Closed form of int_alpha^beta log(a cos x + b sin x + c) dx.

    Requires a^2 + b^2 >= c^2 and a nonnegative integrand argument on
    [alpha, beta] (it may touch zero at the endpoints; the integral is then
    improper but convergent).  The value is

        (beta-alpha) log(sqrt(a^2+b^2)/2)
        + Cl2(d2-beta) - Cl2(d2-alpha) + Cl2(d1+alpha) - Cl2(d1+beta).
    """
    mp = ctx._mp
    alpha, beta = ctx.mpf(alpha), ctx.mpf(beta)
    a, b, c = ctx.mpf(a), ctx.mpf(b), ctx.mpf(c)
    if beta < alpha:
        raise DomainError("interval must satisfy alpha <= beta")
    d1, d2, big_r = _lemma1_deltas(a, b, c, ctx)
    _assert_factorization(a, b, c, d1, d2, big_r, alpha, beta, ctx)
    if beta == alpha:
        return LogTrigClosedForm(round_out(mp.mpf(0), ctx), round_out(d1, ctx), round_out(d2, ctx))

    # Sign check: sample endpoints and any interior extremum of
    # R cos(x - psi) + c (extrema at x = psi mod pi).
    psi = (d2 - d1) / 2
    neg_tol = ctx.pow10(-ctx.digits + 5) * (1 + big_r)
    probes = [alpha, beta]
    k_lo = int(math.floor(float((alpha - psi) / ctx.pi))) - 1
    k_hi = int(math.ceil(float((beta - psi) / ctx.pi))) + 1
    for k in range(k_lo, k_hi + 1):
        x = psi + k * ctx.pi
        if alpha < x < beta:
            probes.append(x)
    for x in probes:
        if a * ctx.cos(x) + b * ctx.sin(x) + c < -neg_tol:
            raise DomainError("integrand argument is negative on the interval")

    value = (beta - alpha) * ctx.log(big_r / 2)
    value += cl2(d2 - beta, ctx) - cl2(d2 - alpha, ctx)
    value += cl2(d1 + alpha, ctx) - cl2(d1 + beta, ctx)
    return LogTrigClosedForm(round_out(value, ctx), round_out(d1, ctx), round_out(d2, ctx))


def log_tan_integral(alpha, beta, delta, ctx: PrecisionCtx):
    """Closed form of int_alpha^beta log(tan x - tan delta) dx.

    Valid for -pi/2 < delta <= alpha <= beta < pi/2 (so the integrand
    argument is positive inside the interval, possibly vanishing at the
    left endpoint):

        (Cl2(2a-2d) - Cl2(2b-2d) + Cl2(pi-2a) - Cl2(pi-2b))/2
        - (beta-alpha) log(cos(delta)).
    """
    alpha, beta, delta = ctx.mpf(alpha), ctx.mpf(beta), ctx.mpf(delta)
    half_pi = ctx.pi / 2
    for name, ang in (("alpha", alpha), ("beta", beta), ("delta", delta)):
        if not (-half_pi < ang < half_pi):
            raise DomainError("%s must lie in (-pi/2, pi/2)" % name)
    if beta < alpha:
        raise DomainError("interval must satisfy alpha <= beta")
    if delta > alpha:
        raise DomainError("positivity requires delta <= alpha")
    if beta == alpha:
        return round_out(ctx._mp.mpf(0), ctx)
    value = (cl2(2 * alpha - 2 * delta, ctx) - cl2(2 * beta - 2 * delta, ctx)
             + cl2(ctx.pi - 2 * alpha, ctx) - cl2(ctx.pi - 2 * beta, ctx)) / 2
    value -= (beta - alpha) * ctx.log(ctx.cos(delta))
    return round_out(value, ctx)
