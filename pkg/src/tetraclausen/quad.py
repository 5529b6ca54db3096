"""Adaptive double-exponential quadrature.

Finite intervals use the tanh-sinh rule ``x = mid + halfw*tanh(pi/2*sinh t)``,
semi-infinite intervals ``[lo, inf)`` the exp-sinh rule
``x = lo + exp(pi/2*sinh t)``.  Both tolerate integrable endpoint
singularities (logarithmic, or algebraic ``(x-endpoint)^-s`` with ``s < 1``)
because the weights decay double-exponentially toward the endpoints.

Abscissas are strictly interior: nodes are generated from the stable
endpoint-offset form ``1 - |tanh(g)| = 2/(exp(2g)+1)``, so a node's distance
to the nearest endpoint is accurate in relative terms even when it is far
below one ulp of the endpoint itself, and the integrand is never evaluated
exactly at ``lo`` or ``hi``.

Levels halve the mesh and reuse previous abscissas.  Convergence is declared
when two successive level sums differ by less than ``tol/2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mpcore import PrecisionCtx, round_out

__all__ = ["QuadratureResult", "QuadratureError", "integrate", "MAX_LEVELS"]

# Doublings of the mesh before giving up (~2^12 points per panel at the cap).
MAX_LEVELS = 12

# Consecutive negligible contributions before a level's node loop stops.
_TAIL_RUN = 3


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with an absolute error estimate and evaluation count."""

    value: object
    error_estimate: object
    evaluations: int


class QuadratureError(ArithmeticError):
    """Quadrature failure; carries the best available result when one exists."""

    def __init__(self, message, result: QuadratureResult | None = None):
        super().__init__(message)
        self.result = result


# ---------------------------------------------------------------------------
# Node caches.  Keyed by working precision in bits, so any two contexts at the
# same precision share nodes; entries are written once and never mutated.
# ---------------------------------------------------------------------------

_TS_NODES: dict = {}
_ES_NODES: dict = {}
_NODE_CTX: dict = {}


def _node_ctx(prec: int):
    ctx = _NODE_CTX.get(prec)
    if ctx is None:
        from mpmath.ctx_mp import MPContext

        ctx = MPContext()
        ctx.prec = prec
        _NODE_CTX[prec] = ctx
    return ctx


def _t_max(prec: int, mp):
    # Weight ~ 2*pi*cosh(t)*exp(-pi*sinh t); run nodes out until the bare
    # weight is far below the tightest admissible tolerance (squared margin
    # so that x^(-1/2)-type singular integrands stay covered).
    decades = 2 * (prec / 3.32 + 8)
    return mp.asinh(decades * mp.log(10) / mp.pi)


def _ts_level(prec: int, level: int):
    """Tanh-sinh nodes for one level: list of (offset, weight, is_center).

    ``offset`` is ``1 - tanh(pi/2*sinh t)`` for t >= 0, the node's distance
    to the transformed endpoint ``u = 1``.  Level 0 holds all integer t >= 0
    (including the center t = 0); level m > 0 holds odd multiples of 2^-m.
    """
    key = (prec, level)
    nodes = _TS_NODES.get(key)
    if nodes is not None:
        return nodes
    mp = _node_ctx(prec + 20)
    tmax = _t_max(prec, mp)
    h = mp.mpf(2) ** (-level)
    nodes = []
    j = 0 if level == 0 else 1
    step = 1 if level == 0 else 2
    half_pi = mp.pi / 2
    while True:
        t = j * h
        if t > tmax:
            break
        g = half_pi * mp.sinh(t)
        e2g = mp.exp(2 * g)
        offset = 2 / (e2g + 1)           # 1 - tanh(g), no cancellation
        weight = half_pi * mp.cosh(t) * (4 * e2g / (e2g + 1) ** 2)  # (pi/2)cosh(t)/cosh(g)^2
        nodes.append((offset, weight, j == 0))
        j += step
    _TS_NODES[key] = nodes
    return nodes


def _es_level(prec: int, level: int):
    """Exp-sinh nodes for one level: list of (t_sign_pairs) entries.

    Each entry is ``(r_neg, w_neg, r_pos, w_pos)`` where ``x = lo + r`` and the
    weight already includes dx/dt; the t = 0 node appears only at level 0 as
    an entry with its positive half only (r_neg is None).
    """
    key = (prec, level)
    nodes = _ES_NODES.get(key)
    if nodes is not None:
        return nodes
    mp = _node_ctx(prec + 20)
    tmax = _t_max(prec, mp)
    h = mp.mpf(2) ** (-level)
    nodes = []
    j = 0 if level == 0 else 1
    step = 1 if level == 0 else 2
    half_pi = mp.pi / 2
    while True:
        t = j * h
        if t > tmax:
            break
        ch = mp.cosh(t)
        g = half_pi * mp.sinh(t)
        r_pos = mp.exp(g)
        w_pos = half_pi * ch * r_pos
        if j == 0:
            nodes.append((None, None, r_pos, w_pos))
        else:
            r_neg = 1 / r_pos
            w_neg = half_pi * ch * r_neg
            nodes.append((r_neg, w_neg, r_pos, w_pos))
        j += step
    _ES_NODES[key] = nodes
    return nodes


# ---------------------------------------------------------------------------
# Level sums.
# ---------------------------------------------------------------------------

def _sum_level_finite(f, lo, hi, halfw, prec, level, tiny, counter):
    nodes = _ts_level(prec, level)
    total = None
    run = 0
    for offset, weight, is_center in nodes:
        d = halfw * offset
        x_left = lo + d
        x_right = hi - d
        contrib = None
        if x_left > lo and x_left < hi:
            counter[0] += 1
            contrib = weight * f(x_left)
        if not is_center and x_right > lo and x_right < hi:
            counter[0] += 1
            fr = weight * f(x_right)
            contrib = fr if contrib is None else contrib + fr
        if contrib is None:
            break
        total = contrib if total is None else total + contrib
        if abs(contrib) < tiny:
            run += 1
            if run >= _TAIL_RUN:
                break
        else:
            run = 0
    return total if total is not None else lo * 0


def _sum_level_semiinf(f, lo, prec, level, tiny, counter):
    nodes = _es_level(prec, level)
    total = None
    run_pos = _TAIL_RUN  # separate tail detection per direction
    run_neg = _TAIL_RUN
    for r_neg, w_neg, r_pos, w_pos in nodes:
        contrib = None
        if run_pos > 0:
            x = lo + r_pos
            if x > lo:
                counter[0] += 1
                c = w_pos * f(x)
                contrib = c
                run_pos = run_pos - 1 if abs(c) < tiny else _TAIL_RUN
        if r_neg is not None and run_neg > 0:
            x = lo + r_neg
            if x > lo:
                counter[0] += 1
                c = w_neg * f(x)
                contrib = c if contrib is None else contrib + c
                run_neg = run_neg - 1 if abs(c) < tiny else _TAIL_RUN
        if contrib is not None:
            total = contrib if total is None else total + contrib
        if run_pos <= 0 and run_neg <= 0:
            break
    return total if total is not None else lo * 0


# ---------------------------------------------------------------------------
# Public entry point.
# ---------------------------------------------------------------------------

def integrate(f, domain, tol, ctx: PrecisionCtx, max_levels: int = MAX_LEVELS) -> QuadratureResult:
    """Integrate ``f`` over ``domain = (lo, hi)`` to absolute tolerance ``tol``.

    ``hi`` may be ``ctx.inf`` (or the string ``"inf"``) for a semi-infinite
    domain.  ``f`` receives working-precision reals and must return one; it
    may diverge integrably at the endpoints but is never called there.

    Returns a :class:`QuadratureResult` whose ``error_estimate`` bounds
    ``|value - true integral|`` and is at most ``tol`` on success.  Raises
    :class:`QuadratureError` (carrying the best result) if the level cap is
    reached without convergence, or if the integrand fails at an interior
    point.
    """
    mp = ctx._mp
    lo, hi = domain
    lo = ctx.mpf(lo)
    semi_infinite = hi == ctx.inf or (isinstance(hi, str) and hi.strip() in ("inf", "+inf"))
    if not semi_infinite:
        hi = ctx.mpf(hi)
        if not (lo < hi):
            if lo == hi:
                zero = mp.mpf(0)
                return QuadratureResult(zero, round_out(ctx.pow10(-ctx.digits), ctx), 0)
            raise ValueError("domain must satisfy lo < hi")
    tol = ctx.mpf(tol)
    tol_floor = ctx.pow10(-ctx.digits + 5)
    if tol < tol_floor:
        raise ValueError(
            "tol %s below the admissible floor 1e%d for a %d-digit context"
            % (mp.nstr(tol, 3), -ctx.digits + 5, ctx.digits)
        )

    prec = ctx.prec_work
    tiny = mp.mpf(2) ** (-prec - 10) + tol * mp.mpf(10) ** -8
    counter = [0]
    halfw = (hi - lo) / 2 if not semi_infinite else None

    def level_sum(m):
        try:
            if semi_infinite:
                return _sum_level_semiinf(f, lo, prec, m, tiny, counter)
            return _sum_level_finite(f, lo, hi, halfw, prec, m, tiny, counter)
        except QuadratureError:
            raise
        except (ArithmeticError, ValueError) as exc:
            raise QuadratureError("integrand evaluation failed: %s" % exc) from exc

    scale = halfw if not semi_infinite else mp.mpf(1)
    s_prev = None
    value = None
    err = None
    for m in range(max_levels + 1):
        h = mp.mpf(2) ** (-m)
        partial = level_sum(m) * h * scale
        s_m = partial if s_prev is None else s_prev / 2 + partial
        if s_prev is not None:
            diff = abs(s_m - s_prev)
            value = s_m
            err = diff
            if m >= 2 and diff < tol / 2:
                floor = mp.mpf(2) ** (-prec + 4) * (1 + abs(s_m))
                est = diff if diff > floor else floor
                return QuadratureResult(round_out(s_m, ctx), round_out(est, ctx), counter[0])
        s_prev = s_m

    best = QuadratureResult(
        round_out(value if value is not None else s_prev, ctx),
        round_out(err if err is not None else abs(s_prev), ctx),
        counter[0],
    )
    raise QuadratureError(
        "no convergence to tol=%s after %d levels (best estimate %s)"
        % (mp.nstr(tol, 3), max_levels, mp.nstr(best.error_estimate, 3)),
        result=best,
    )
