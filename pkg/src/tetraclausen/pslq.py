"""Integer-relation detection for vectors of high-precision reals.

The classic PSLQ iteration (Hermite reduction of the lower-trapezoidal H
matrix with gamma = sqrt(4/3) row selection) is run in full working
precision, with the integer change-of-basis matrix kept exact.  A run
terminates in one of three ways:

* ``found``      -- some normalized residual dropped below the detection
                    threshold 10^(-0.7*digits) and the candidate coefficient
                    vector re-checks at 20 extra digits;
* ``none_found`` -- the iteration certifies that no relation with Euclidean
                    norm below ``max_norm`` exists (exclusion bound
                    1/max|H_jj| exceeded it);
* error          -- precision was exhausted before either verdict, raised as
                    :class:`InsufficientPrecision` (never conflated with a
                    no-relation verdict).

Detection applies to the scale-normalized vector x/|x|, so the verdict and
coefficients are invariant under multiplying every input by one constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mpcore import PrecisionCtx, get_ctx, round_out

__all__ = [
    "RelationResult",
    "InsufficientPrecision",
    "find_relation",
    "check_relation",
    "read_value_file",
    "DETECTION_EXPONENT",
]

# Threshold exponent: a relation is detected at 10^(-0.7*digits).
DETECTION_EXPONENT = 0.7


class InsufficientPrecision(ArithmeticError):
    """Iteration exhausted the working precision without reaching a verdict."""


@dataclass(frozen=True)
class RelationResult:
    """Outcome of an integer-relation search.

    ``found`` results carry canonical coefficients (content 1, first nonzero
    coefficient positive) and the residual |sum coeffs*x|.  ``none_found``
    results carry an exclusion bound: no integer relation with Euclidean norm
    below it exists for the given vector.
    """

    status: str                      # "found" | "none_found"
    coeffs: tuple | None
    residual: object | None
    exclusion_bound: object | None

    @property
    def found(self) -> bool:
        return self.status == "found"


def _canonical(coeffs):
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(c))
    if g > 1:
        coeffs = [c // g for c in coeffs]
    for c in coeffs:
        if c:
            if c < 0:
                coeffs = [-c for c in coeffs]
            break
    return tuple(coeffs)


def check_relation(coeffs, xs, ctx: PrecisionCtx):
    """|sum coeffs[i]*xs[i]| at working precision."""
    if len(coeffs) != len(xs):
        raise ValueError("coefficient and value vectors differ in length")
    total = ctx._mp.mpf(0)
    for c, x in zip(coeffs, xs):
        total += int(c) * ctx.mpf(x)
    return round_out(abs(total), ctx)


def find_relation(xs, max_norm, ctx: PrecisionCtx, max_iterations: int | None = None) -> RelationResult:
    """Search for an integer relation among ``xs`` (length >= 2, all nonzero).

    ``max_norm`` bounds the Euclidean norm of relations of interest: the
    search reports ``none_found`` once it can certify no relation with norm
    below ``max_norm`` exists.
    """
    mp = ctx._mp
    n = len(xs)
    if n < 2:
        raise ValueError("need at least 2 values")
    x = [ctx.mpf(v) for v in xs]
    if any(v == 0 for v in x):
        raise ValueError("all values must be nonzero at working precision")
    max_norm = ctx.mpf(max_norm)

    gamma = ctx.sqrt(mp.mpf(4) / 3)
    tol = ctx.pow10(-int(DETECTION_EXPONENT * ctx.digits))
    noise_floor = ctx.pow10(-(ctx.work_dps - 3))
    if max_iterations is None:
        max_iterations = 2000 + 120 * n * n + 20 * n * ctx.digits

    # Initialization (partial sums of squares, normalized y, H matrix).
    s = [mp.mpf(0)] * (n + 1)
    acc = mp.mpf(0)
    for k in range(n, 0, -1):
        acc += x[k - 1] * x[k - 1]
        s[k] = acc
    s = [mp.mpf(0)] + [ctx.sqrt(v) for v in s[1:]]
    t = s[1]
    y = [mp.mpf(0)] + [v / t for v in x]
    s = [mp.mpf(0)] + [v / t for v in s[1:]]

    H = [[mp.mpf(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        if i <= n - 1:
            H[i][i] = s[i + 1] / s[i]
        for j in range(1, i):
            H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1])

    # Exact integer change-of-basis matrix: column i of B holds the integer
    # combination whose residual is y[i]*t.
    B = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        B[i][i] = 1

    # Full initial Hermite reduction.
    for i in range(2, n + 1):
        for j in range(i - 1, 0, -1):
            if H[j][j] == 0:
                continue
            q = ctx.nint(H[i][j] / H[j][j])
            if q:
                y[j] += q * y[i]
                for k in range(1, j + 1):
                    H[i][k] -= q * H[j][k]
                for k in range(1, n + 1):
                    B[k][j] += q * B[k][i]

    def candidate(i):
        vec = _canonical([B[k][i] for k in range(1, n + 1)])
        if not any(vec):
            return None
        confirm = get_ctx(ctx.digits + 20, ctx.guard_digits)
        resid = check_relation(vec, x, confirm)
        scale = t
        if resid < tol * scale:
            return RelationResult("found", vec, round_out(ctx.mpf(resid), ctx), None)
        return None

    # A relation may already be exposed by the initial reduction.
    for i in range(1, n + 1):
        if abs(y[i]) < tol:
            res = candidate(i)
            if res is not None:
                return res

    for _ in range(max_iterations):
        # Row selection: maximize gamma^i |H_ii|.
        m_row = 1
        best = mp.mpf(0)
        g_pow = mp.mpf(1)
        for i in range(1, n):
            g_pow *= gamma
            size = g_pow * abs(H[i][i])
            if size > best:
                best = size
                m_row = i
        # Swap rows m, m+1.
        y[m_row], y[m_row + 1] = y[m_row + 1], y[m_row]
        H[m_row], H[m_row + 1] = H[m_row + 1], H[m_row]
        for k in range(1, n + 1):
            B[k][m_row], B[k][m_row + 1] = B[k][m_row + 1], B[k][m_row]
        # Corner transformation.
        if m_row <= n - 2:
            h_mm, h_mm1 = H[m_row][m_row], H[m_row][m_row + 1]
            t0 = ctx.sqrt(h_mm * h_mm + h_mm1 * h_mm1)
            if t0 == 0:
                raise InsufficientPrecision("H developed a zero corner")
            c0, s0 = h_mm / t0, h_mm1 / t0
            for i in range(m_row, n + 1):
                a_, b_ = H[i][m_row], H[i][m_row + 1]
                H[i][m_row] = c0 * a_ + s0 * b_
                H[i][m_row + 1] = -s0 * a_ + c0 * b_
        # Hermite reduction below the swapped rows.
        for i in range(m_row + 1, n + 1):
            for j in range(min(i - 1, m_row + 1), 0, -1):
                if H[j][j] == 0:
                    raise InsufficientPrecision("H developed a zero diagonal")
                q = ctx.nint(H[i][j] / H[j][j])
                if q:
                    y[j] += q * y[i]
                    for k in range(1, j + 1):
                        H[i][k] -= q * H[j][k]
                    for k in range(1, n + 1):
                        B[k][j] += q * B[k][i]
        # Detection.
        y_min = min(abs(y[i]) for i in range(1, n + 1))
        if y_min < tol:
            for i in range(1, n + 1):
                if abs(y[i]) < tol:
                    res = candidate(i)
                    if res is not None:
                        return res
            if y_min < noise_floor:
                raise InsufficientPrecision(
                    "residual at the noise floor but candidate failed confirmation")
        # Exclusion bound: every relation has norm >= 1/max|H_jj|.
        h_max = mp.mpf(0)
        for j in range(1, n):
            h_abs = abs(H[j][j])
            if h_abs > h_max:
                h_max = h_abs
        if h_max == 0:
            raise InsufficientPrecision("H diagonal vanished")
        bound = 1 / h_max
        if bound > max_norm:
            return RelationResult("none_found", None, None, round_out(bound, ctx))

    raise InsufficientPrecision(
        "no verdict after %d iterations at %d digits" % (max_iterations, ctx.digits))


def read_value_file(path, ctx: PrecisionCtx):
    """Read one decimal value per line; '#' starts a comment; blanks ignored."""
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(ctx.mpf(line))
            except ValueError as exc:
                raise ValueError("%s:%d: not a decimal number: %r" % (path, lineno, line)) from exc
    return values
