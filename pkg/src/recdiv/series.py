"""Floating-point side of the toolkit.

Evaluates the Riemann zeta function at real s > 1 by Euler-Maclaurin
summation with a rigorous truncation bound, forms compensated partial
sums of tabulated sequences' Dirichlet series, locates the real point
rho where zeta crosses 2 (the pole of the closed forms below), and
cross-checks the sieve output for the recursive divisor sum against its
closed form zeta(s - x) / (2 - zeta(s)).

All of this is double precision.  Requested tolerances below the
double-precision floor (about 1e-13) are clamped to it; the reported
error bound is always honest for the value actually returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .sequences import ArithSeq, gen_builtin

__all__ = [
    "ZetaValue",
    "SeriesPoint",
    "ClosedFormReport",
    "DivergenceError",
    "SingularityDomainError",
    "zeta",
    "dirichlet_partial_sum",
    "verify_closed_form",
    "find_singularity",
]

# tolerances below this are unattainable in IEEE doubles
TOL_FLOOR = 1e-13

# Bernoulli correction coefficients B_{2j}/(2j)! for j = 1..3, then the
# j = 4 coefficient used only for the truncation bound.
_BERN_COEFFS = (1.0 / 12, -1.0 / 720, 1.0 / 30240)
_BERN_BOUND_COEFF = 1.0 / 1209600


class DivergenceError(ValueError):
    """The requested series value diverges at this s."""


class SingularityDomainError(ValueError):
    """s is at or below the pole where zeta(s) = 2.

    Carries the pole location as .rho so callers can explain the domain.
    """

    def __init__(self, s: float, rho: float):
        self.s = s
        self.rho = rho
        super().__init__(
            f"s = {s:g} is at or below the series pole rho = {rho:.7f} "
            f"(zeta(s) >= 2); partial sums do not converge there"
        )


@dataclass(frozen=True)
class ZetaValue:
    s: float
    value: float
    abs_error_bound: float


@dataclass(frozen=True)
class SeriesPoint:
    s: float
    n_terms: int
    partial_sum: float
    tail_note: str


@dataclass(frozen=True)
class ClosedFormReport:
    """Partial sum of the recursive divisor series vs its closed form.

    checkpoint_gaps holds the relative gap at each checkpoint length in
    ascending order (the last one is `gap`); gap_shrinks says whether
    they strictly decrease.
    """

    x: int
    s: float
    n_max: int
    tol: float
    partial_sum: float
    closed_form: float
    gap: float
    checkpoint_lengths: tuple[int, ...]
    checkpoint_gaps: tuple[float, ...]
    gap_shrinks: bool
    passed: bool


def _euler_maclaurin(s: float, m: int) -> tuple[float, float]:
    """Zeta estimate with cutoff m and a bound on its truncation error.

    Direct sum to m - 1, half term at m, the tail integral, and three
    Bernoulli corrections.  For real s > 1 the remainder is bounded in
    magnitude by the first omitted correction term.
    """
    direct = math.fsum(n ** -s for n in range(1, m))
    pieces = [direct, 0.5 * m**-s, m ** (1.0 - s) / (s - 1.0)]
    poch = s  # running product s (s+1) ... (s + 2j - 2)
    for j, coeff in enumerate(_BERN_COEFFS, start=1):
        pieces.append(coeff * poch * m ** (-s - 2 * j + 1))
        poch *= (s + 2 * j - 1) * (s + 2 * j)
    bound = abs(_BERN_BOUND_COEFF * poch * m ** (-s - 7))
    return math.fsum(pieces), bound


def zeta(s: float, tol: float = 1e-12) -> ZetaValue:
    """Riemann zeta at real s > 1 to within tol (floored at 1e-13).

    The cutoff doubles until the Euler-Maclaurin truncation bound drops
    under half the tolerance; the other half of the budget covers
    floating-point roundoff, which at these cutoffs is far smaller.
    """
    s = float(s)
    if not math.isfinite(s):
        raise ValueError("s must be a finite real number")
    if s <= 1.0:
        raise DivergenceError(f"zeta diverges at s = {s:g} (requires s > 1)")
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    tol = max(float(tol), TOL_FLOOR)

    m = 8
    while True:
        value, bound = _euler_maclaurin(s, m)
        # cushion for roundoff in the direct sum and corrections
        roundoff = 8.0 * math.ulp(abs(value) + 1.0) * math.sqrt(m)
        if bound + roundoff <= tol:
            return ZetaValue(s, value, bound + roundoff)
        if m > 1 << 26:  # unreachable for tol >= TOL_FLOOR, s > 1
            raise ArithmeticError(
                f"zeta cutoff grew past {m} without meeting tol={tol:g}"
            )
        m *= 2


def dirichlet_partial_sum(f: ArithSeq, s: float) -> SeriesPoint:
    """Compensated sum of f(n) / n^s over n = 1 .. f.n_max.

    The result is the correctly rounded sum of the computed terms
    (math.fsum); convergence across growing n_max is the caller's
    concern, so no domain restriction is placed on s.
    """
    s = float(s)
    if not math.isfinite(s):
        raise ValueError("s must be a finite real number")
    n_max = f.n_max
    total = math.fsum(v * n**-s for n, v in enumerate(f, start=1))
    last = f[n_max] * n_max**-s
    note = f"truncated at n = {n_max}; last term {last:.3e}"
    return SeriesPoint(s, n_max, total, note)


@lru_cache(maxsize=None)
def _rho_reference() -> float:
    return find_singularity(1e-12)


def verify_closed_form(
    x: int, s: float, n_max: int, tol: float = 1e-3
) -> ClosedFormReport:
    """Check the recursive divisor sum's series against zeta(s-x)/(2-zeta(s)).

    The sequence is sieved once to n_max; partial sums at n_max // 4,
    n_max // 2, and n_max are compared with the closed form, and the
    report records whether the relative gap strictly shrinks across
    those checkpoints and lands within tol at the full length.
    """
    if not isinstance(x, int) or x < 0:
        raise ValueError("x must be a nonnegative integer")
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    s = float(s)
    if not math.isfinite(s):
        raise ValueError("s must be a finite real number")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    # domain guard: the denominator 2 - zeta(s) must be positive
    if s <= 1.0 or zeta(s).value >= 2.0:
        raise SingularityDomainError(s, _rho_reference())
    if s - x <= 1.0:
        raise DivergenceError(
            f"numerator zeta(s - x) diverges at s - x = {s - x:g} (requires > 1)"
        )

    closed = zeta(s - x).value / (2.0 - zeta(s).value)

    f = gen_builtin("kappa", n_max, x=x)
    terms = f.terms()
    lengths = sorted({max(1, n_max // 4), max(1, n_max // 2), n_max})
    gaps = []
    for length in lengths:
        prefix = ArithSeq(terms[:length], label=f.label)
        point = dirichlet_partial_sum(prefix, s)
        gaps.append(abs(point.partial_sum - closed) / abs(closed))
    shrinks = all(a > b for a, b in zip(gaps, gaps[1:]))
    final_point = dirichlet_partial_sum(f, s)
    gap = gaps[-1]
    return ClosedFormReport(
        x=x,
        s=s,
        n_max=n_max,
        tol=tol,
        partial_sum=final_point.partial_sum,
        closed_form=closed,
        gap=gap,
        checkpoint_lengths=tuple(lengths),
        checkpoint_gaps=tuple(gaps),
        gap_shrinks=shrinks,
        passed=bool(gap <= tol and shrinks),
    )


def find_singularity(tol: float = 1e-10) -> float:
    """Real point rho in (1.5, 2.0) with zeta(rho) = 2, by bisection.

    zeta is strictly decreasing on (1, oo), zeta(1.5) > 2 > zeta(2), so
    the bracket is valid; bisection stops at width tol.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    tol = max(float(tol), 1e-13)
    lo, hi = 1.5, 2.0
    inner = max(min(tol * 1e-2, 1e-12), TOL_FLOOR)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if zeta(mid, inner).value > 2.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
