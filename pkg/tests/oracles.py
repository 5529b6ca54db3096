"""Independent numeric oracles used by the test suite.

These deliberately share no code with the implementation paths they check:
Catalan's constant comes from Chebyshev-accelerated summation of the
defining alternating series, and brute-force series evaluators are written
directly from the definitions.
"""

from tetraclausen.mpcore import PrecisionCtx


def catalan_alternating(ctx: PrecisionCtx):
    """Catalan = sum_{k>=0} (-1)^k/(2k+1)^2 by Chebyshev acceleration.

    Cohen-Rodriguez Villegas-Zagier algorithm 1: for a totally monotone term
    sequence the error after n steps is below (3+sqrt(8))^-n, so n is chosen
    for a tail under 10^-(digits+6).
    """
    mp = ctx._mp
    n = int((ctx.digits + 8) / 0.7645) + 3
    d = (3 + ctx.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    total = mp.mpf(0)
    for k in range(n):
        c = b - c
        total += c / (2 * k + 1) ** 2
        b = (k + n) * (k - n) * b / ((k + mp.mpf(1) / 2) * (k + 1))
    return total / d


def li2_brute(x, ctx: PrecisionCtx, terms=4000):
    """Defining dilogarithm series, no transformations; needs |x| well below 1."""
    mp = ctx._mp
    total = mp.mpf(0)
    power = mp.mpf(1)
    for n in range(1, terms + 1):
        power *= x
        total += power / (n * n)
    return total
