"""Root finding for the transcendental equations behind the piecewise bound.

Provides the bracketed hybrid root finder, the two critical overlaps

  * c_star:   root of c ln((1+c)/(1-c)) = 2, where the asymmetric stationary
              pair merges into the symmetric one;
  * c_dagger: root of f_bound(c) = b_mu(c) inside the small-overlap region,
              above which the symmetric stationary value exceeds -2 ln c;

the asymmetric-branch bound h1_bound, the full piecewise bound b_vs with
region classification, and the scan that reproduces the spurious solutions of
the trigonometric stationarity equation in the angle variable alpha (where
P_A = cos^2(alpha), P_B = cos^2(theta - alpha)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional

from .core import (
    INV_SQRT2,
    admissible_interval,
    b_mu,
    binary_entropy,
    e_function,
    eqc_overlap,
    f_bound,
    p_b_of_p_a,
)
from .errors import BracketError, ConvergenceError, DomainError, SingularValueError

__all__ = [
    "RootResult",
    "RegionTag",
    "Region",
    "BoundReport",
    "CritiqueRoot",
    "CritiqueReport",
    "find_root",
    "c_star",
    "c_dagger",
    "classify_region",
    "h1_bound",
    "h1_witness",
    "b_vs",
    "eqsin_residual",
    "eqsin_roots",
    "critique_report",
]

# Relative inset used when bracketing roots away from singular endpoints.
BRACKET_INSET = 1e-6


@dataclass(frozen=True)
class RootResult:
    root: float
    bracket: tuple[float, float]
    residual: float
    iterations: int


class RegionTag(Enum):
    MU = "MuRegion"
    H1 = "H1Region"
    F = "FRegion"

    def __str__(self) -> str:  # CSV/CLI label
        return self.value


@dataclass(frozen=True)
class Region:
    tag: RegionTag
    c_star: float

    @property
    def boundaries(self) -> tuple[float, float]:
        return (INV_SQRT2, self.c_star)


@dataclass(frozen=True)
class BoundReport:
    c: float
    nats: float
    region: Region
    witness: Optional[tuple[float, float]]  # extremizing (P_A, P_B) if any


@dataclass(frozen=True)
class CritiqueRoot:
    alpha: float
    p_a: float
    p_b: float
    residual: float
    admissible: bool
    violated_constraint: Optional[str]


@dataclass(frozen=True)
class CritiqueReport:
    c: float
    theta: float
    interval: tuple[float, float]
    roots: tuple[CritiqueRoot, ...]

    @property
    def inadmissible_count(self) -> int:
        return sum(1 for r in self.roots if not r.admissible)


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    abs_tol: float = 1e-13,
    max_iter: int = 200,
) -> RootResult:
    """Bracketed root of a continuous scalar function.

    Brent-style iteration: bisection safeguarded by secant / inverse quadratic
    interpolation.  The bracket may be given in either sign orientation; it
    must enclose a sign change.  Stops when the bracket shrinks below
    max(abs_tol, a few ulps) or an exact zero is hit.
    """
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return RootResult(a, (lo, hi), 0.0, 0)
    if fb == 0.0:
        return RootResult(b, (lo, hi), 0.0, 0)
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise BracketError(f"f({lo}) = {fa} and f({hi}) = {fb} have the same sign")

    c_, fc = a, fa
    d = e = b - a
    eps = math.ulp(1.0)
    for it in range(1, max_iter + 1):
        if math.copysign(1.0, fb) == math.copysign(1.0, fc):
            c_, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c_ = b, c_, b
            fa, fb, fc = fb, fc, fb
        tol = 2.0 * eps * abs(b) + 0.5 * abs_tol
        m = 0.5 * (c_ - b)
        if abs(m) <= tol or fb == 0.0:
            return RootResult(b, (lo, hi), abs(fb), it)
        if abs(e) < tol or abs(fa) <= abs(fb):
            d = e = m  # bisection
        else:
            s = fb / fa
            if a == c_:
                p = 2.0 * m * s  # secant
                q = 1.0 - s
            else:
                q = fa / fc  # inverse quadratic
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            if 2.0 * p < 3.0 * m * q - abs(tol * q) and p < abs(0.5 * e * q):
                e, d = d, p / q
            else:
                d = e = m
        a, fa = b, fb
        b += d if abs(d) > tol else math.copysign(tol, m)
        fb = f(b)
    raise ConvergenceError(f"no convergence within {max_iter} iterations on [{lo}, {hi}]")


def _c_star_equation(c: float) -> float:
    return c * math.log((1.0 + c) / (1.0 - c)) - 2.0


@lru_cache(maxsize=1)
def c_star() -> RootResult:
    """Critical overlap solving c ln((1+c)/(1-c)) = 2, equivalently
    c artanh(c) = 1; approximately 0.8336.  Computed once per process."""
    return find_root(_c_star_equation, INV_SQRT2, 1.0 - 1e-9, abs_tol=1e-15)


@lru_cache(maxsize=1)
def c_dagger() -> RootResult:
    """Overlap where the symmetric stationary value f_bound crosses the
    -2 ln c bound inside (0, 1/sqrt(2)); approximately 0.611."""
    return find_root(lambda c: f_bound(c) - b_mu(c), 0.1, INV_SQRT2, abs_tol=1e-15)


def classify_region(c: float) -> Region:
    """Branch of the piecewise bound containing c.  Boundary ties: exactly
    1/sqrt(2) classifies as H1Region, exactly c_star as FRegion."""
    if not (0.0 < c <= 1.0) or math.isnan(c):
        raise DomainError(f"overlap must lie in (0, 1], got {c!r}")
    cs = c_star().root
    if c < INV_SQRT2:
        tag = RegionTag.MU
    elif c < cs:
        tag = RegionTag.H1
    else:
        tag = RegionTag.F
    return Region(tag, cs)


def _h1_solution(c: float) -> tuple[float, tuple[float, float]]:
    """Minimum of the unit-multiplicity entropy sum on the asymmetric branch,
    with its extremizing (P_A, P_B).

    Brackets the lower zero of e_function between the inset lower endpoint
    (where the limit is negative) and the symmetric point (just below which
    the function is positive).  Degenerate cases: at c = 1/sqrt(2) the zero
    merges into the lower endpoint, at c = c_star into the symmetric point;
    both are detected by the bracket signs and answered with the endpoint /
    symmetric closed forms.
    """
    iv = admissible_interval(c)
    mid = 0.5 * (1.0 + c)
    delta = BRACKET_INSET * (mid - iv.lo)
    a, b = iv.lo + delta, mid - delta
    ea = e_function(a, c)
    eb = e_function(b, c)
    if ea >= 0.0:
        # zero merged with the lower endpoint (c at or within noise of 1/sqrt(2)):
        # P_B -> 1 contributes nothing
        return binary_entropy(iv.lo), (iv.lo, 1.0)
    if eb <= 0.0:
        # zero merged with the symmetric point (c at or beyond c_star)
        return f_bound(c), (mid, mid)
    rr = find_root(lambda p: e_function(p, c), a, b)
    r = rr.root
    pb = p_b_of_p_a(r, c)
    value = binary_entropy(r) + binary_entropy(pb)
    mirrored = binary_entropy(pb) + binary_entropy(p_b_of_p_a(pb, c))
    if abs(value - mirrored) > 1e-10:
        raise ConvergenceError(
            f"mirrored stationary values disagree at c = {c}: {value} vs {mirrored}"
        )
    return value, (r, pb)


def h1_bound(c: float) -> float:
    """Entropy-sum minimum over the asymmetric stationary pair, defined for
    1/sqrt(2) <= c <= c_star.  Equals ln 2 at the left edge and f_bound(c_star)
    at the right edge."""
    return _h1_solution(_check_h1_domain(c))[0]


def h1_witness(c: float) -> tuple[float, float]:
    """Extremizing (P_A, P_B) behind h1_bound; the swapped pair attains the
    same value."""
    return _h1_solution(_check_h1_domain(c))[1]


def _check_h1_domain(c: float) -> float:
    cs = c_star().root
    if math.isnan(c) or not (INV_SQRT2 - 1e-12 <= c <= cs + 1e-12):
        raise DomainError(f"h1_bound requires 1/sqrt(2) <= c <= c_star ({cs:.6f}), got {c!r}")
    return min(max(c, INV_SQRT2), cs)


def b_vs(c: float) -> BoundReport:
    """Piecewise entropy-sum lower bound:

        -2 ln c            for c <  1/sqrt(2)   (MuRegion)
        h1_bound(c)        for 1/sqrt(2) <= c < c_star   (H1Region)
        f_bound(c)         for c >= c_star      (FRegion)

    The report carries the region and, outside MuRegion, the extremizing
    (P_A, P_B) pair.
    """
    region = classify_region(c)
    if region.tag is RegionTag.MU:
        return BoundReport(c, b_mu(c), region, None)
    if region.tag is RegionTag.H1:
        value, witness = _h1_solution(c)
        return BoundReport(c, value, region, witness)
    mid = 0.5 * (1.0 + c)
    return BoundReport(c, f_bound(c), region, (mid, mid))


# --- trigonometric stationarity equation in the angle variable ------------

_EXCLUSION_RADIUS = 1e-6  # around the removable points theta/2, theta/2 + pi/4


def _excluded_points(theta: float) -> tuple[float, float]:
    return (0.5 * theta, 0.5 * theta + 0.25 * math.pi)


def eqsin_residual(alpha: float, theta: float) -> float:
    """Residual of the angle-variable stationarity equation

        sin(2a) ln((1+cos 2a)/(1-cos 2a))
          + sin(2(a-t)) ln((1+cos 2(a-t)) / (2(1-cos^2(a-t)))) = 0

    for a = alpha, t = theta.  The points alpha = theta/2 and
    alpha = theta/2 + pi/4 satisfy it identically (they carry P_A = P_B and
    P_A + P_B = 1 respectively) and are rejected as inputs.
    """
    for pt in _excluded_points(theta):
        if abs(alpha - pt) < 1e-12:
            raise DomainError(f"alpha = {alpha!r} is an excluded identical-zero point")
    cos2a = math.cos(2.0 * alpha)
    d = alpha - theta
    cos2d = math.cos(2.0 * d)
    sin_d = math.sin(d)
    num1, den1 = 1.0 + cos2a, 1.0 - cos2a
    num2, den2 = 1.0 + cos2d, 2.0 * sin_d * sin_d  # 2(1 - cos^2) = 2 sin^2
    if num1 <= 0.0 or den1 <= 0.0 or num2 <= 0.0 or den2 <= 0.0:
        raise SingularValueError(f"nonpositive log argument at alpha = {alpha!r}")
    return math.sin(2.0 * alpha) * math.log(num1 / den1) + math.sin(2.0 * d) * math.log(
        num2 / den2
    )


def eqsin_roots(theta: float, scan_step: float = 1e-4) -> list[float]:
    """All distinct zeros of eqsin_residual over alpha in (-pi/4, pi/2).

    Scans at scan_step, refines each sign change with find_root, skips the
    identical-zero points and their 1e-6 neighborhoods, and merges refined
    roots closer than scan_step.  The scan window covers one full period of
    the cos^2 parametrization.
    """
    if not (0.0 < theta < 0.5 * math.pi):
        raise DomainError(f"theta must lie in (0, pi/2), got {theta!r}")
    if scan_step <= 0.0:
        raise DomainError("scan_step must be positive")
    lo, hi = -0.25 * math.pi, 0.5 * math.pi
    excl = _excluded_points(theta)

    n = int((hi - lo) / scan_step)
    roots: list[float] = []
    prev: Optional[tuple[float, float]] = None
    for k in range(1, n + 1):
        x = lo + k * scan_step
        if x >= hi:
            break
        if min(abs(x - e) for e in excl) <= _EXCLUSION_RADIUS:
            prev = None
            continue
        try:
            v = eqsin_residual(x, theta)
        except (DomainError, SingularValueError):
            prev = None
            continue
        if v == 0.0:
            roots.append(x)
            prev = None
            continue
        if prev is not None and math.copysign(1.0, prev[1]) != math.copysign(1.0, v):
            try:
                rr = find_root(lambda a: eqsin_residual(a, theta), prev[0], x, abs_tol=1e-12)
            except (DomainError, SingularValueError):
                pass  # crossing sits on a removable point; the filter below drops it anyway
            else:
                roots.append(rr.root)
        prev = (x, v)

    roots = [r for r in roots if min(abs(r - e) for e in excl) > _EXCLUSION_RADIUS]
    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if not deduped or r - deduped[-1] >= scan_step:
            deduped.append(r)
    return deduped


_CHECK_ORDER = ("multiplicity_range", "admissible_interval", "overlap_identity")
_EQC_TOL = 1e-9


def critique_report(c: float, scan_step: float = 1e-4) -> CritiqueReport:
    """Constraint audit of every angle-equation root for c < 1/sqrt(2).

    Maps each root alpha to (P_A, P_B) = (cos^2 alpha, cos^2(theta - alpha))
    and checks, in fixed order: (1) both probabilities in (1/2, 1] (unit
    multiplicity), (2) P_A inside the admissible interval, (3) the saturated
    overlap identity sqrt(P_A P_B) - sqrt((1-P_A)(1-P_B)) = c.  Each root is
    labeled admissible or with the first check it violates.
    """
    if not (0.0 < c < INV_SQRT2) or math.isnan(c):
        raise DomainError(f"critique_report requires 0 < c < 1/sqrt(2), got {c!r}")
    theta = math.acos(c)
    iv = admissible_interval(c)
    entries = []
    for alpha in eqsin_roots(theta, scan_step):
        p_a = math.cos(alpha) ** 2
        p_b = math.cos(theta - alpha) ** 2
        violated: Optional[str] = None
        if not (0.5 < p_a <= 1.0 and 0.5 < p_b <= 1.0):
            violated = _CHECK_ORDER[0]
        elif not iv.contains(p_a, tol=1e-12):
            violated = _CHECK_ORDER[1]
        elif abs(eqc_overlap(p_a, p_b) - c) > _EQC_TOL:
            violated = _CHECK_ORDER[2]
        entries.append(
            CritiqueRoot(
                alpha=alpha,
                p_a=p_a,
                p_b=p_b,
                residual=abs(eqsin_residual(alpha, theta)),
                admissible=violated is None,
                violated_constraint=violated,
            )
        )
    return CritiqueReport(c, theta, (iv.lo, iv.hi), tuple(entries))
