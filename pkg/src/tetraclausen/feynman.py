"""The two-mass tetrahedral vacuum integral C(a,b) by three routes.

``c_direct`` integrates the defining pair of one-dimensional integrals

    C(a,b) = -16/b [ int_2^{2+b} arctanh((w^2-4-2b)/(w sqrt(w^2+b^2-4)))
                                  dw / (w (w+a) sqrt(w^2+b^2-4))
             + int_{2+b}^inf arctanh(b/sqrt(w^2+b^2-4))
                                  dw / (w (w+a) sqrt(w^2+b^2-4)) ]

by double-exponential quadrature (the first integrand has a logarithmic
endpoint singularity at w = 2 where the arctanh argument reaches -1).

``stepwise`` reproduces the reduction chain: partial fractions split the
mass-dependent factor 1/(w(w+a)) so that C = 16/(ab) (I3 + I4 - (I1+I2)),
the four pieces are evaluated both by quadrature and by their Clausen
closed forms, and the intermediate q/r/s Clausen-value vectors are exposed
together with the relations among them.

``c_closed`` evaluates the eight-term closed form

    C(a,b) = 8/(ab sqrt(4-a^2-b^2)) { Cl2(4phi) + Cl2(2phi_a+2phi_b-2phi)
             + Cl2(2phi_a-2phi) + Cl2(2phi_b-2phi) - Cl2(2phi_a+2phi_b-4phi)
             - Cl2(2phi_a) - Cl2(2phi_b) - Cl2(2phi) }

with phi = arctan(d/p), phi_a = arctan(d/a), phi_b = arctan(d/b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mpcore import DomainError, PrecisionCtx, round_out, to_decimal
from .polylog import cl2
from .quad import QuadratureResult, integrate

__all__ = [
    "MassPair",
    "DerivedAngles",
    "ClausenSum",
    "StepReport",
    "RouteMismatchError",
    "derive",
    "c_direct",
    "c_closed",
    "stepwise",
    "q_vector",
    "r_vector",
    "s_vector",
    "R_RELATIONS",
    "RS_RELATIONS",
    "Q_RELATIONS",
]


@dataclass(frozen=True)
class MassPair:
    """Masses on the two non-adjacent lines; valid for a, b > 0, a^2+b^2 < 4."""

    a: object
    b: object

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError("masses must be positive")
        if not (self.a * self.a + self.b * self.b < 4):
            raise DomainError("region requires a^2 + b^2 < 4")


@dataclass(frozen=True)
class ClausenSum:
    """Formal integer/rational-weighted sum of Cl2 values times a prefactor."""

    prefactor: object
    terms: tuple  # of (Fraction coefficient, angle)

    def evaluate(self, ctx: PrecisionCtx):
        total = ctx._mp.mpf(0)
        for coeff, angle in self.terms:
            total += ctx.mpf(coeff) * cl2(angle, ctx)
        return round_out(self.prefactor * total, ctx)


@dataclass(frozen=True)
class DerivedAngles:
    """Every derived quantity of the reduction chain for one mass pair."""

    a: object
    b: object
    c: object          # sqrt(4 - b^2)
    d: object          # sqrt(4 - a^2 - b^2)
    p: object          # a + b + 2
    f: object          # sqrt((2+b)/(2-b))
    u1: object         # f
    u2: object         # f + sqrt(2b/(2-b))
    alpha1: object
    alpha2: object
    alpha3: object
    alpha4: object
    alpha6: object
    alpha7: object
    delta1: object
    delta2: object
    delta3: object
    delta4: object
    delta7: object
    delta8: object
    delta9: object
    delta10: object
    delta11: object
    phi: object
    phi_a: object
    phi_b: object


class RouteMismatchError(ArithmeticError):
    """A Clausen closed form and its quadrature counterpart disagree."""

    def __init__(self, integral: str, closed, quadrature, difference, tolerance):
        self.integral = integral
        self.closed = closed
        self.quadrature = quadrature
        self.difference = difference
        self.tolerance = tolerance
        super().__init__(
            "%s: closed form and quadrature differ by %s (tolerance %s)"
            % (integral, difference, tolerance)
        )


def _validate_region(a, b, ctx: PrecisionCtx):
    margin = ctx.pow10(-(ctx.digits // 2))
    if a <= 0 or b <= 0:
        raise DomainError("masses must be positive")
    if a < margin or b < margin:
        raise DomainError("mass within %s of 0 is ill-conditioned at %d digits" % (margin, ctx.digits))
    gap = 4 - (a * a + b * b)
    if gap <= 0:
        raise DomainError("region requires a^2 + b^2 < 4")
    if gap < margin:
        raise DomainError("a^2 + b^2 within %s of 4 is ill-conditioned at %d digits" % (margin, ctx.digits))


def derive(m: MassPair, ctx: PrecisionCtx) -> DerivedAngles:
    """All derived angles and auxiliary quantities for a mass pair.

    Every defining relation and the seven cross-identities among the angles
    are asserted at construction to 10^(-digits+5).
    """
    a, b = ctx.mpf(m.a), ctx.mpf(m.b)
    _validate_region(a, b, ctx)
    c = ctx.sqrt(4 - b * b)
    d = ctx.sqrt(4 - a * a - b * b)
    p = a + b + 2
    f = ctx.sqrt((2 + b) / (2 - b))
    u2 = f + ctx.sqrt(2 * b / (2 - b))
    root_b = ctx.sqrt(2 * b * b + 4 * b)

    ang = DerivedAngles(
        a=a, b=b, c=c, d=d, p=p, f=f, u1=f, u2=u2,
        alpha1=ctx.asin(ctx.sqrt((2 - b) / (2 + b))),
        alpha2=ctx.atan(c / b),
        alpha3=ctx.asin(a / c),
        alpha4=ctx.asin(a / c + d * d / (c * p)),
        alpha6=ctx.atan(p / d),
        alpha7=ctx.atan((p + root_b) / d),
        delta1=2 * ctx.atan((c * d - a * b) / (2 * d + b * c)),
        delta2=2 * ctx.atan((c * d - a * b) / (2 * d - b * c)),
        delta3=2 * ctx.atan((c * d + a * b) / (2 * d - b * c)),
        delta4=2 * ctx.atan((c * d + a * b) / (2 * d + b * c)),
        delta7=ctx.atan(a / d),
        delta8=ctx.atan(p / d),
        delta9=ctx.atan((a - b - 2) / d),
        delta10=ctx.atan((a - b + 2) / d),
        delta11=ctx.atan((a + b - 2) / d),
        phi=ctx.atan(d / p),
        phi_a=ctx.atan(d / a),
        phi_b=ctx.atan(d / b),
    )
    _assert_angle_invariants(ang, ctx)
    return ang


def _wrap_residual(x, ctx: PrecisionCtx):
    """Reduce an angle difference into (-pi, pi]."""
    two_pi = 2 * ctx.pi
    k = ctx.nint(x / two_pi)
    return x - k * two_pi if k else x


def angle_identity_residuals(ang: DerivedAngles, ctx: PrecisionCtx) -> dict:
    """The seven identities tying the reduction angles to phi, phi_a, phi_b.

    delta2/delta3 use the principal branch of 2*arctan, so where 2d - bc < 0
    (which does happen inside the region, e.g. near b -> 2) they differ from
    the identity right-hand sides by exactly 2pi; since every use is inside
    the 2pi-periodic Cl2, the identities are stated and checked modulo 2pi.
    """
    half_pi = ctx.pi / 2
    raw = {
        "alpha3": ang.alpha3 - (half_pi - ang.phi_a),
        "alpha6": ang.alpha6 - (half_pi - ang.phi),
        "delta1": ang.delta1 - (-2 * ang.phi + ang.phi_a + 2 * ang.phi_b - half_pi),
        "delta3": ang.delta3 - (2 * ang.phi - ang.phi_a - 2 * ang.phi_b + 3 * half_pi),
        "delta7": ang.delta7 - (half_pi - ang.phi_a),
        "delta9": ang.delta9 - (-ang.phi + ang.phi_b - half_pi),
        "delta11": ang.delta11 - (half_pi + ang.phi - ang.phi_a - ang.phi_b),
    }
    return {k: _wrap_residual(v, ctx) for k, v in raw.items()}


def _assert_angle_invariants(ang: DerivedAngles, ctx: PrecisionCtx):
    tol = ctx.pow10(-ctx.digits + 5)
    a, b, c, d, p = ang.a, ang.b, ang.c, ang.d, ang.p
    checks = {
        "sin(alpha1)": ctx.sin(ang.alpha1) - ctx.sqrt((2 - b) / (2 + b)),
        "tan(alpha2)": ctx.tan(ang.alpha2) - c / b,
        "sin(alpha3)": ctx.sin(ang.alpha3) - a / c,
        "sin(alpha4)": ctx.sin(ang.alpha4) - (a / c + d * d / (c * p)),
        "tan(alpha6)": ctx.tan(ang.alpha6) - p / d,
        "tan(alpha7)": ctx.tan(ang.alpha7) - (p + ctx.sqrt(2 * b * b + 4 * b)) / d,
        "delta8=alpha6": ang.delta8 - ang.alpha6,
        "closure": (4 - a * a) * (4 - b * b) - a * a * b * b - 4 * d * d,
    }
    checks.update(angle_identity_residuals(ang, ctx))
    for name, residual in checks.items():
        if abs(residual) > tol:
            raise DomainError("angle invariant %s violated: residual %s"
                              % (name, to_decimal(abs(residual), ctx)))


# ---------------------------------------------------------------------------
# Clausen-value vectors and relations.
# ---------------------------------------------------------------------------

def q_vector(ang: DerivedAngles, ctx: PrecisionCtx) -> dict:
    """q1..q13: named (angle, value) pairs from the mass-independent pieces."""
    pi = ctx.pi
    a1, a2 = ang.alpha1, ang.alpha2
    angles = {
        "q1": 2 * a1 + 2 * a2, "q2": 2 * a1 - 2 * a2, "q3": 2 * a2,
        "q4": a2 - a1, "q5": a2 + a1, "q6": 2 * a2, "q7": pi - 2 * a2,
        "q8": pi - a1 - a2, "q9": pi + a1 - a2, "q10": a2, "q11": a1,
        "q12": pi - a2, "q13": pi - a1,
    }
    return {k: (v, cl2(v, ctx)) for k, v in angles.items()}


def r_vector(ang: DerivedAngles, ctx: PrecisionCtx) -> dict:
    """r1..r19: the Clausen values of the two mass-dependent integrals."""
    pi = ctx.pi
    angles = {
        "r1": ang.delta2 - ang.alpha4, "r2": ang.delta2 - ang.alpha3,
        "r3": ang.delta1 + ang.alpha3, "r4": ang.delta1 + ang.alpha4,
        "r5": ang.delta4 - ang.alpha4, "r6": ang.delta4 - ang.alpha3,
        "r7": ang.delta3 + ang.alpha3, "r8": ang.delta3 + ang.alpha4,
        "r9": 2 * ang.alpha6 - 2 * ang.delta7, "r10": 2 * ang.alpha7 - 2 * ang.delta7,
        "r11": 2 * ang.alpha7 - 2 * ang.delta8, "r12": 2 * ang.alpha6 - 2 * ang.delta9,
        "r13": 2 * ang.alpha7 - 2 * ang.delta9, "r14": 2 * ang.alpha6 - 2 * ang.delta10,
        "r15": 2 * ang.alpha7 - 2 * ang.delta10, "r16": 2 * ang.alpha6 - 2 * ang.delta11,
        "r17": 2 * ang.alpha7 - 2 * ang.delta11, "r18": pi - 2 * ang.alpha6,
        "r19": pi - 2 * ang.alpha7,
    }
    return {k: (v, cl2(v, ctx)) for k, v in angles.items()}


def s_vector(ang: DerivedAngles, ctx: PrecisionCtx) -> dict:
    """s1..s8: the Clausen values of the eight-term closed form."""
    ph, pa, pb = ang.phi, ang.phi_a, ang.phi_b
    angles = {
        "s1": 4 * ph, "s2": 2 * pa + 2 * pb - 2 * ph, "s3": 2 * pa - 2 * ph,
        "s4": 2 * pb - 2 * ph, "s5": 2 * pa + 2 * pb - 4 * ph,
        "s6": 2 * pa, "s7": 2 * pb, "s8": 2 * ph,
    }
    return {k: (v, cl2(v, ctx)) for k, v in angles.items()}


# Relations discovered by integer-relation search on {r1..r19}; each maps a
# name to (coefficients over the named values).  All vanish identically on
# the whole region a^2 + b^2 < 4.
R_RELATIONS = (
    ("r2-r9", (("r2", 1), ("r9", -1))),
    ("r5-r11", (("r5", 1), ("r11", -1))),
    ("r4+r13", (("r4", 1), ("r13", 1))),
    ("r1-r15", (("r1", 1), ("r15", -1))),
    ("r8+r17", (("r8", 1), ("r17", 1))),
    ("r6-r18", (("r6", 1), ("r18", -1))),
)

RS_RELATIONS = (
    ("r3-s4", (("r3", 1), ("s4", -1))),
    ("r7+s2", (("r7", 1), ("s2", 1))),
    ("r9-s3", (("r9", 1), ("s3", -1))),
    ("r12+s7", (("r12", 1), ("s7", 1))),
    ("r16-s5", (("r16", 1), ("s5", -1))),
    ("r18-s8", (("r18", 1), ("s8", -1))),
    ("bridge", (("r10", -2), ("r11", -2), ("r14", -1), ("r15", 2), ("r19", -2),
                ("s1", -1), ("s6", 1), ("s8", 4))),
)

# Consequences of the duplication formula among the q values.
Q_RELATIONS = (
    ("q1-2q5+2q8", (("q1", 1), ("q5", -2), ("q8", 2))),
    ("q2-2q9+2q4", (("q2", 1), ("q9", -2), ("q4", 2))),
    ("q3-q6", (("q3", 1), ("q6", -1))),
)


def relation_residual(values: dict, combo) -> object:
    total = None
    for name, coeff in combo:
        term = coeff * values[name][1]
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# Closed forms of the four reduced integrals.
# ---------------------------------------------------------------------------

def _closed_sums(ang: DerivedAngles, ctx: PrecisionCtx) -> dict:
    pi = ctx.pi
    a1, a2 = ang.alpha1, ang.alpha2
    fr = Fraction
    i1 = ClausenSum(1 / (4 * ang.c), (
        (fr(-1), 2 * a1 + 2 * a2), (fr(1), 2 * a1 - 2 * a2), (fr(2), 2 * a2)))
    i2 = ClausenSum(1 / (2 * ang.c), (
        (fr(-1), a2 - a1), (fr(1), a2 + a1), (fr(-1), 2 * a2), (fr(-1), pi - 2 * a2),
        (fr(1), pi - a1 - a2), (fr(-1), pi + a1 - a2), (fr(2), a2), (fr(-2), a1),
        (fr(2), pi - a2), (fr(-2), pi - a1)))
    i3 = ClausenSum(1 / (2 * ang.d), (
        (fr(1), ang.delta2 - ang.alpha4), (fr(-1), ang.delta2 - ang.alpha3),
        (fr(1), ang.delta1 + ang.alpha3), (fr(-1), ang.delta1 + ang.alpha4),
        (fr(-1), ang.delta4 - ang.alpha4), (fr(1), ang.delta4 - ang.alpha3),
        (fr(-1), ang.delta3 + ang.alpha3), (fr(1), ang.delta3 + ang.alpha4)))
    # I4 comes from applying the log(tan x - tan delta) closed form to the
    # five linear factors of its integrand with weights +2,+1,+1,-1,-1 for
    # delta7, delta8, delta9, delta10, delta11; the pure-log parts cancel
    # identically and the 2alpha6-2delta8 term is Cl2(0) = 0.
    i4 = ClausenSum(1 / (2 * ang.d), (
        (fr(2), 2 * ang.alpha6 - 2 * ang.delta7), (fr(-2), 2 * ang.alpha7 - 2 * ang.delta7),
        (fr(-1), 2 * ang.alpha7 - 2 * ang.delta8), (fr(1), 2 * ang.alpha6 - 2 * ang.delta9),
        (fr(-1), 2 * ang.alpha7 - 2 * ang.delta9), (fr(-1), 2 * ang.alpha6 - 2 * ang.delta10),
        (fr(1), 2 * ang.alpha7 - 2 * ang.delta10), (fr(-1), 2 * ang.alpha6 - 2 * ang.delta11),
        (fr(1), 2 * ang.alpha7 - 2 * ang.delta11), (fr(2), pi - 2 * ang.alpha6),
        (fr(-2), pi - 2 * ang.alpha7)))
    return {"I1": i1, "I2": i2, "I3": i3, "I4": i4}


# ---------------------------------------------------------------------------
# Quadrature forms of the four reduced integrals (and the defining pair).
#
# All four integrands contain sqrt(w^2+b^2-4) = sqrt(w^2-c^2); the finite
# panels [2, 2+b] are integrated in the shifted variable v = w - 2 and the
# semi-infinite ones in v = w - (2+b), so that distances to the singular or
# boundary endpoint enter exactly.  Near w = 2 the arctanh argument tends to
# -1; arctanh is expanded as log((1+r)/(1-r))/2 with

#   1 + r = (A+B)/A,  A = w sqrt(S), B = w^2-4-2b,
#   A + B = (b+2)^2 v (v+4) / (A - B),
#
# which is exact up to rounding (A - B never cancels on the panel).
# ---------------------------------------------------------------------------

def _finite_panel_integrand(a, b, ctx, weight):
    """Integrand of the [2, 2+b] panel in v = w-2; weight in {'w(w+a)','w','w+a'}."""
    mp = ctx._mp
    bp2 = (b + 2) ** 2

    def f(v):
        w = v + 2
        s_val = v * (v + 4) + b * b          # w^2 + b^2 - 4
        root = mp.sqrt(s_val)
        big_a = w * root
        big_b = v * (v + 4) - 2 * b          # w^2 - 4 - 2b
        diff = big_a - big_b
        atanh_term = mp.log(bp2 * v * (v + 4) / (diff * diff)) / 2
        if weight == "w(w+a)":
            den = w * (w + a) * root
        elif weight == "w":
            den = w * root
        else:
            den = (w + a) * root
        return atanh_term / den

    return f


def _tail_panel_integrand(a, b, ctx, weight):
    """Integrand of the [2+b, inf) panel in v = w-(2+b)."""
    mp = ctx._mp

    def f(v):
        w = v + 2 + b
        s_val = v * (v + 2 * (2 + b)) + 2 * b * (b + 2)   # w^2 + b^2 - 4
        root = mp.sqrt(s_val)
        t = b / root
        atanh_term = mp.log((1 + t) / (1 - t)) / 2
        if weight == "w(w+a)":
            den = w * (w + a) * root
        elif weight == "w":
            den = w * root
        else:
            den = (w + a) * root
        return atanh_term / den

    return f


def c_direct(m: MassPair, tol, ctx: PrecisionCtx) -> QuadratureResult:
    """C(a,b) by quadrature of the defining pair of integrals."""
    a, b = ctx.mpf(m.a), ctx.mpf(m.b)
    _validate_region(a, b, ctx)
    tol = ctx.mpf(tol)
    prefactor = 16 / b
    panel_tol = tol / (2 * prefactor)
    floor = ctx.pow10(-ctx.digits + 5)
    if panel_tol < floor:
        panel_tol = floor
    r1 = integrate(_finite_panel_integrand(a, b, ctx, "w(w+a)"), (0, b), panel_tol, ctx)
    r2 = integrate(_tail_panel_integrand(a, b, ctx, "w(w+a)"), (0, ctx.inf), panel_tol, ctx)
    value = -prefactor * (r1.value + r2.value)
    err = prefactor * (r1.error_estimate + r2.error_estimate)
    result = QuadratureResult(round_out(value, ctx), round_out(err, ctx),
                              r1.evaluations + r2.evaluations)
    if err > tol:
        # Possible when the per-panel tolerance clamps at the quadrature floor
        # (small b inflates the 16/b prefactor); never report silent success.
        from .quad import QuadratureError

        raise QuadratureError(
            "combined panel error %s exceeds requested tol; raise digits"
            % to_decimal(err, ctx), result=result)
    return result


def c_closed(m: MassPair, ctx: PrecisionCtx):
    """C(a,b) from the eight-term Clausen closed form."""
    ang = derive(m, ctx)
    sv = s_vector(ang, ctx)
    total = (sv["s1"][1] + sv["s2"][1] + sv["s3"][1] + sv["s4"][1]
             - sv["s5"][1] - sv["s6"][1] - sv["s7"][1] - sv["s8"][1])
    return round_out(8 / (ang.a * ang.b * ang.d) * total, ctx)


# ---------------------------------------------------------------------------
# Stepwise reduction report.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StepReport:
    """Everything the reduction chain produces for one mass pair."""

    angles: DerivedAngles
    i_quad: dict          # name -> QuadratureResult
    i_closed: dict        # name -> mpf
    q: dict               # name -> (angle, value)
    r: dict
    s: dict
    c_from_steps: object  # 16/(ab) (I3+I4), closed forms
    i1_plus_i2_closed: object
    i1_plus_i2_quad: object
    match_residuals: dict  # name -> |closed - quad|

    def to_dict(self, ctx: PrecisionCtx) -> dict:
        def dec(x):
            return to_decimal(x, ctx)

        out = {
            "masses": {"a": dec(self.angles.a), "b": dec(self.angles.b)},
            "integrals": {},
            "vectors": {},
            "c_from_steps": dec(self.c_from_steps),
            "i1_plus_i2": {
                "closed": dec(self.i1_plus_i2_closed),
                "quadrature": dec(self.i1_plus_i2_quad),
            },
        }
        for name in ("I1", "I2", "I3", "I4"):
            qres = self.i_quad[name]
            out["integrals"][name] = {
                "closed": dec(self.i_closed[name]),
                "quadrature": dec(qres.value),
                "quadrature_error": dec(qres.error_estimate),
                "evaluations": qres.evaluations,
                "match_residual": dec(self.match_residuals[name]),
            }
        for label, vec in (("q", self.q), ("r", self.r), ("s", self.s)):
            out["vectors"][label] = {
                name: {"angle": dec(angle), "value": dec(value)}
                for name, (angle, value) in vec.items()
            }
        return out


def stepwise(m: MassPair, ctx: PrecisionCtx, tol=None) -> StepReport:
    """Evaluate I1..I4 by quadrature and closed form, with the q/r/s vectors.

    Raises :class:`RouteMismatchError` naming the integral if any closed form
    disagrees with its quadrature beyond 10^(-digits+10) plus the quadrature's
    own error estimate.
    """
    a, b = ctx.mpf(m.a), ctx.mpf(m.b)
    _validate_region(a, b, ctx)
    ang = derive(m, ctx)
    match_tol = ctx.pow10(-ctx.digits + 10)
    if tol is None:
        tol = match_tol / 4
    tol = ctx.mpf(tol)

    integrands = {
        "I1": (_tail_panel_integrand(a, b, ctx, "w"), (0, ctx.inf)),
        "I2": (_finite_panel_integrand(a, b, ctx, "w"), (0, b)),
        "I3": (_tail_panel_integrand(a, b, ctx, "w+a"), (0, ctx.inf)),
        "I4": (_finite_panel_integrand(a, b, ctx, "w+a"), (0, b)),
    }
    i_quad = {name: integrate(f, dom, tol, ctx) for name, (f, dom) in integrands.items()}
    i_closed = {name: cs.evaluate(ctx) for name, cs in _closed_sums(ang, ctx).items()}

    residuals = {}
    for name in ("I1", "I2", "I3", "I4"):
        diff = abs(i_closed[name] - i_quad[name].value)
        residuals[name] = round_out(diff, ctx)
        if diff > match_tol + i_quad[name].error_estimate:
            raise RouteMismatchError(name, i_closed[name], i_quad[name].value,
                                     diff, match_tol)

    c_steps = round_out(16 / (a * b) * (i_closed["I3"] + i_closed["I4"]), ctx)
    return StepReport(
        angles=ang,
        i_quad=i_quad,
        i_closed=i_closed,
        q=q_vector(ang, ctx),
        r=r_vector(ang, ctx),
        s=s_vector(ang, ctx),
        c_from_steps=c_steps,
        i1_plus_i2_closed=round_out(i_closed["I1"] + i_closed["I2"], ctx),
        i1_plus_i2_quad=round_out(i_quad["I1"].value + i_quad["I2"].value, ctx),
        match_residuals=residuals,
    )
