"""Closed-form bound functions and auxiliary curves for entropy-sum minimization.

Everything here is a pure function of scalar inputs, in natural-log units
(nats).  The single physical parameter is the overlap c in (0, 1], the largest
absolute inner product between the eigenbases of two observables; theta =
arccos(c) is the associated angle.  The curves evaluated here describe the
minimum of H(A) + H(B) over probability pairs (P_A, P_B) whose maxima are
linked by the Landau-Pollak inequality

    arccos(sqrt(P_A)) + arccos(sqrt(P_B)) >= arccos(c).

Conventions:
  * 0 * ln 0 = 0, implemented by explicit branches (never NaN propagation).
  * Values "at an endpoint" of an admissible interval come from the dedicated
    closed-form limit functions; raw evaluation inside a 1e-9-relative
    neighborhood of an endpoint raises DomainError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularValueError

INV_SQRT2 = math.sqrt(0.5)

# Relative inset below which raw evaluation near an interval endpoint is
# refused (singular logs; use the *_limit functions instead).
ENDPOINT_GUARD = 1e-9

__all__ = [
    "INV_SQRT2",
    "Overlap",
    "AdmissibleInterval",
    "binary_entropy",
    "multiplicity_of",
    "h_min",
    "b_mu",
    "f_bound",
    "g_bound",
    "lattice_bound",
    "p_b_of_p_a",
    "admissible_interval",
    "m1_objective",
    "e_function",
    "e_limit_lo",
    "e_limit_hi",
    "k_function",
    "k_max_value",
    "k_endpoint_value",
    "n_function",
    "r_function",
    "m_inf",
    "eqc_overlap",
    "ineq_c_max",
    "ineq_c_max_single",
    "kkt_multiplier",
    "nats_to_bits",
]


@dataclass(frozen=True)
class Overlap:
    """Overlap c in (0, 1] with its derived angle theta = arccos(c)."""

    c: float

    def __post_init__(self) -> None:
        _check_overlap(self.c)

    @property
    def theta(self) -> float:
        return math.acos(self.c)


@dataclass(frozen=True)
class AdmissibleInterval:
    """Open interval (lo, hi) of P_A values compatible with a saturated
    Landau-Pollak constraint at unit multiplicity."""

    lo: float
    hi: float

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, p: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= p <= self.hi + tol

    def strict_interior(self, p: float, guard: float = ENDPOINT_GUARD) -> bool:
        d = guard * self.width
        return self.lo + d < p < self.hi - d


def _check_overlap(c: float) -> None:
    if not (0.0 < c <= 1.0) or math.isnan(c):
        raise DomainError(f"overlap must lie in (0, 1], got {c!r}")


def _check_prob(p: float, name: str = "p") -> None:
    if not (0.0 < p <= 1.0) or math.isnan(p):
        raise DomainError(f"{name} must lie in (0, 1], got {p!r}")


def _xlnx(x: float) -> float:
    # 0 ln 0 = 0 by explicit branch
    if x <= 0.0:
        return 0.0
    return x * math.log(x)


def binary_entropy(p: float) -> float:
    """Shannon entropy -p ln p - (1-p) ln(1-p) of a two-outcome distribution.

    Symmetric under p -> 1-p; maximal (ln 2) at p = 1/2; zero at p in {0, 1}.
    """
    if not (0.0 <= p <= 1.0) or math.isnan(p):
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")
    return -_xlnx(p) - _xlnx(1.0 - p)


def multiplicity_of(p: float) -> int:
    """Unique positive integer m with 1/(m+1) < p <= 1/m.

    Exact reciprocals p = 1/m map to m, which keeps h_min continuous across
    the boundary.
    """
    _check_prob(p)
    m = max(1, int(math.floor(1.0 / p)))
    # floor(1/p) can undershoot by one when 1/p rounds down across an integer
    if p * (m + 1) <= 1.0:
        m += 1
    return m


def h_min(p: float) -> float:
    """Least Shannon entropy of any distribution whose largest probability is p.

    Attained by m copies of p plus one remainder 1 - m*p, m = multiplicity_of(p).
    Equals binary_entropy(p) for p >= 1/2 and ln m at exact reciprocals.
    """
    _check_prob(p)
    m = multiplicity_of(p)
    rem = 1.0 - m * p
    if rem < 0.0:  # ulp-level overshoot at reciprocal boundaries
        rem = 0.0
    return -m * p * math.log(p) - _xlnx(rem)


def b_mu(c: float) -> float:
    """Universal entropy-sum lower bound -2 ln c (Maassen-Uffink)."""
    _check_overlap(c)
    return -2.0 * math.log(c)


def f_bound(c: float) -> float:
    """Entropy sum at the symmetric stationary pair P_A = P_B = (1+c)/2:

        F(c) = -(1+c) ln((1+c)/2) - (1-c) ln((1-c)/2).

    Equals 2 * binary_entropy((1+c)/2).  For c >= 1/2 the difference 1-c is
    computed exactly in doubles, so there is no cancellation near c = 1;
    inputs within 1e-12 of 1 simply lose resolution in c itself.
    """
    _check_overlap(c)
    return -_xlnx_half(1.0 + c) - _xlnx_half(1.0 - c)


def _xlnx_half(x: float) -> float:
    # x ln(x/2) with the 0 ln 0 convention
    if x <= 0.0:
        return 0.0
    return x * math.log(0.5 * x)


def g_bound(c: float) -> float:
    """Entropy sum of the boundary candidate (P_A, P_B) = (1, c^2).

    With k = floor(1/c^2) this is -c^2 k ln(c^2) - (1 - c^2 k) ln(1 - c^2 k);
    for c > 1/sqrt(2), k = 1 and the value is the binary entropy of c^2.
    Identical to h_min(c^2).
    """
    _check_overlap(c)
    c2 = c * c
    k = max(1, int(math.floor(1.0 / c2)))
    if c2 * (k + 1) <= 1.0:
        k += 1
    rem = 1.0 - k * c2
    if rem < 0.0:
        rem = 0.0
    return -k * c2 * math.log(c2) - _xlnx(rem)


def lattice_bound(c: float) -> float:
    """Entropy sum ln(M_A * M_B) minimized over reciprocal pairs P_I = 1/M_I.

    Returns 0 at c = 1, else ln M for the unique integer M >= 2 with
    1/sqrt(M) <= c < 1/sqrt(M-1).
    """
    _check_overlap(c)
    if c == 1.0:
        return 0.0
    m = math.ceil(1.0 / (c * c))
    return math.log(m)


def p_b_of_p_a(p_a: float, c: float) -> float:
    """Partner maximum probability on the saturated Landau-Pollak curve:

        P_B(P_A) = (sqrt((1-c^2)(1-P_A)) + c sqrt(P_A))^2.

    Requires P_A >= c^2 (below that the defining square root of 1-P_B would
    be negative).  The map is an involution on [c^2, 1].
    """
    _check_overlap(c)
    if math.isnan(p_a) or p_a > 1.0:
        raise DomainError(f"p_a must lie in [c^2, 1], got {p_a!r}")
    c2 = c * c
    if p_a < c2:
        raise DomainError(f"p_a must be >= c^2 = {c2!r}, got {p_a!r}")
    root = math.sqrt((1.0 - c2) * (1.0 - p_a)) + c * math.sqrt(p_a)
    val = root * root
    return 1.0 if val > 1.0 else val  # clip ulp overshoot at the fixed point


def admissible_interval(c: float) -> AdmissibleInterval:
    """Range (P_A^-, P_A^+) of P_A compatible with unit multiplicity on both
    sides of a saturated Landau-Pollak constraint.

    (1/2, (c + sqrt(1-c^2))^2 / 2) for c < 1/sqrt(2), else (c^2, 1); the two
    branches agree at c = 1/sqrt(2), which is assigned to the second branch.
    """
    _check_overlap(c)
    if c < INV_SQRT2:
        hi = (c + math.sqrt(1.0 - c * c)) ** 2 / 2.0
        return AdmissibleInterval(0.5, min(hi, 1.0))
    return AdmissibleInterval(c * c, 1.0)


def _require_interior(p_a: float, c: float) -> AdmissibleInterval:
    iv = admissible_interval(c)
    if not iv.strict_interior(p_a):
        raise DomainError(
            f"p_a = {p_a!r} is not strictly inside ({iv.lo!r}, {iv.hi!r}); "
            "use the closed-form limit functions at the endpoints"
        )
    return iv


def m1_objective(p_a: float, c: float) -> float:
    """Entropy sum binary_entropy(P_A) + binary_entropy(P_B(P_A)) along the
    saturated constraint at unit multiplicity.

    Symmetric under P_A -> P_B(P_A); equals f_bound(c) at P_A = (1+c)/2.
    """
    iv = admissible_interval(c)
    if not iv.contains(p_a):
        raise DomainError(f"p_a = {p_a!r} outside admissible interval ({iv.lo!r}, {iv.hi!r})")
    return binary_entropy(p_a) + binary_entropy(p_b_of_p_a(p_a, c))


def _log_ratio(num: float, den: float) -> float:
    if num <= 0.0 or den <= 0.0:
        raise SingularValueError(f"nonpositive log argument: {num!r}/{den!r}")
    return math.log(num / den)


def e_function(p_a: float, c: float, m: int = 1) -> float:
    """Scaled slope of the constrained entropy sum in P_A, with the B side
    carrying multiplicity m:

        E_m = m sqrt(P_B(1-P_B)) ln(P_B / (1 - m P_B))
                - sqrt(P_A(1-P_A)) ln(P_A / (1-P_A)).

    Shares the sign of d(m1_objective)/dP_A when m = 1, where it is also
    antisymmetric under P_A -> P_B(P_A).  Zeros are the stationary points of
    the constrained minimization.
    """
    if m < 1:
        raise DomainError(f"multiplicity must be a positive integer, got {m!r}")
    _require_interior(p_a, c)
    p_b = p_b_of_p_a(p_a, c)
    term_b = m * math.sqrt(p_b * (1.0 - p_b)) * _log_ratio(p_b, 1.0 - m * p_b)
    term_a = math.sqrt(p_a * (1.0 - p_a)) * _log_ratio(p_a, 1.0 - p_a)
    return term_b - term_a


def e_limit_lo(c: float) -> float:
    """Limit of e_function(., c, 1) at the lower admissible endpoint.

    For c < 1/sqrt(2) (endpoint P_A = 1/2) the limit is

        (1 - 2c^2) ln((sqrt(1-c^2) + c) / (sqrt(1-c^2) - c)) > 0,

    for c >= 1/sqrt(2) (endpoint P_A = c^2, where P_B -> 1) it is

        -c sqrt(1-c^2) ln(c^2 / (1-c^2)) <= 0.
    """
    _check_overlap(c)
    s = math.sqrt(1.0 - c * c)
    if c < INV_SQRT2:
        return (1.0 - 2.0 * c * c) * math.log((s + c) / (s - c))
    if c == 1.0:
        return 0.0
    return -c * s * math.log(c * c / (1.0 - c * c))


def e_limit_hi(c: float) -> float:
    """Limit of e_function(., c, 1) at the upper admissible endpoint; equal to
    -e_limit_lo(c) by the involution antisymmetry."""
    return -e_limit_lo(c)


def k_function(p_a: float, c: float) -> float:
    """Curvature control for e_function:

        K = (1-2P_B) ln(P_B/(1-P_B)) + (1-2P_A) ln(P_A/(1-P_A)) + 4,

    with P_B = p_b_of_p_a(P_A).  -K shares the sign of dE_1/dP_A.  K is
    symmetric under P_A -> P_B(P_A), rises to its maximum at P_A = (1+c)/2
    and falls beyond it.
    """
    _require_interior(p_a, c)
    p_b = p_b_of_p_a(p_a, c)
    return (
        (1.0 - 2.0 * p_b) * _log_ratio(p_b, 1.0 - p_b)
        + (1.0 - 2.0 * p_a) * _log_ratio(p_a, 1.0 - p_a)
        + 4.0
    )


def k_max_value(c: float) -> float:
    """Peak of k_function, attained at P_A = (1+c)/2:

        K_max = -2c ln((1+c)/(1-c)) + 4.

    Positive below the critical overlap solving c ln((1+c)/(1-c)) = 2,
    negative above it.
    """
    _check_overlap(c)
    if c == 1.0:
        return -math.inf
    return -2.0 * c * math.log((1.0 + c) / (1.0 - c)) + 4.0


def k_endpoint_value(c: float) -> float:
    """Common limit of k_function at both admissible endpoints for
    c < 1/sqrt(2):

        -2c sqrt(1-c^2) ln((1 + 2c sqrt(1-c^2)) / (1 - 2c sqrt(1-c^2))) + 4,

    decreasing from 4 (c -> 0) to -inf (c -> 1/sqrt(2)).  Returns -inf once
    2c sqrt(1-c^2) >= 1 - 1e-15.
    """
    if not (0.0 < c < INV_SQRT2) or math.isnan(c):
        raise DomainError(f"k_endpoint_value requires 0 < c < 1/sqrt(2), got {c!r}")
    s = 2.0 * c * math.sqrt(1.0 - c * c)
    if s >= 1.0 - 1e-15:
        return -math.inf
    return -s * math.log((1.0 + s) / (1.0 - s)) + 4.0


def n_function(p_a: float, c: float) -> float:
    """Slope control for k_function:

        N = 2 sqrt(P_B(1-P_B)) ln(P_B/(1-P_B)) - (1-2P_B)/sqrt(P_B(1-P_B))
          - 2 sqrt(P_A(1-P_A)) ln(P_A/(1-P_A)) + (1-2P_A)/sqrt(P_A(1-P_A)).

    Shares the sign of dK/dP_A; strictly decreasing on the admissible
    interval with its unique zero at P_A = (1+c)/2.
    """
    _require_interior(p_a, c)
    p_b = p_b_of_p_a(p_a, c)
    sa = math.sqrt(p_a * (1.0 - p_a))
    sb = math.sqrt(p_b * (1.0 - p_b))
    if sa == 0.0 or sb == 0.0:
        raise SingularValueError("n_function undefined at probability 0 or 1")
    return (
        2.0 * sb * _log_ratio(p_b, 1.0 - p_b)
        - (1.0 - 2.0 * p_b) / sb
        - 2.0 * sa * _log_ratio(p_a, 1.0 - p_a)
        + (1.0 - 2.0 * p_a) / sa
    )


def r_function(x: float) -> float:
    """ln(x/(1-x)) + (1-2x)/(2x(1-x)); negative on (1/2, 1), antisymmetric
    about x = 1/2.  Drives the monotonicity of n_function."""
    if not (0.0 < x < 1.0) or math.isnan(x):
        raise DomainError(f"r_function requires 0 < x < 1, got {x!r}")
    return math.log(x / (1.0 - x)) + (1.0 - 2.0 * x) / (2.0 * x * (1.0 - x))


def m_inf(c: float) -> float:
    """Infimum of the unit-multiplicity entropy sum for c < 1/sqrt(2),
    attained in the limit at the admissible-interval endpoints.

    With s = 2c sqrt(1-c^2):

        M_inf = -((1+s)/2) ln((1+s)/4) - ((1-s)/2) ln((1-s)/4)
              = ln 2 + binary_entropy((1+s)/2).

    Evaluation is permitted up to c = 1/sqrt(2) inclusive, where the value is
    ln 2.
    """
    if not (0.0 < c <= INV_SQRT2) or math.isnan(c):
        raise DomainError(f"m_inf requires 0 < c <= 1/sqrt(2), got {c!r}")
    s = min(2.0 * c * math.sqrt(1.0 - c * c), 1.0)
    # ((1+-s)/2) ln((1+-s)/4) = x ln(x/2) with x = (1+-s)/2
    return -_xlnx_half(0.5 * (1.0 + s)) - _xlnx_half(0.5 * (1.0 - s))


def eqc_overlap(p_a: float, p_b: float) -> float:
    """Overlap implied by a saturated Landau-Pollak pair:

        sqrt(P_A P_B) - sqrt((1-P_A)(1-P_B)).
    """
    _check_prob(p_a, "p_a")
    _check_prob(p_b, "p_b")
    return math.sqrt(p_a * p_b) - math.sqrt((1.0 - p_a) * (1.0 - p_b))


def ineq_c_max(m_a: int, m_b: int) -> float:
    """Largest overlap compatible with multiplicities (m_a, m_b):

        (1 - (m_a - 1)(m_b - 1)) / sqrt(m_a m_b).

    Nonpositive as soon as both multiplicities exceed 1, which is what forces
    one of them to unity for any c > 0.
    """
    if m_a < 1 or m_b < 1:
        raise DomainError("multiplicities must be positive integers")
    return (1.0 - (m_a - 1) * (m_b - 1)) / math.sqrt(m_a * m_b)


def ineq_c_max_single(m_a: int, m_b: int) -> float:
    """Weaker corollary bound 1/sqrt(max(m_a, m_b)) once one multiplicity is 1."""
    if m_a < 1 or m_b < 1:
        raise DomainError("multiplicities must be positive integers")
    return 1.0 / math.sqrt(max(m_a, m_b))


def kkt_multiplier(p_a: float) -> float:
    """Lagrange multiplier of the saturated Landau-Pollak constraint
    recovered from the stationarity condition at unit multiplicity:

        lambda = 2 sqrt(P_A(1-P_A)) ln(P_A/(1-P_A)),

    positive on (1/2, 1).  At a zero of e_function(., c, 1) the A-side and
    B-side recoveries agree.
    """
    if not (0.5 < p_a < 1.0) or math.isnan(p_a):
        raise DomainError(f"kkt_multiplier requires 1/2 < p_a < 1, got {p_a!r}")
    return 2.0 * math.sqrt(p_a * (1.0 - p_a)) * math.log(p_a / (1.0 - p_a))


def nats_to_bits(x: float) -> float:
    """Display-time conversion of an entropy value from nats to bits."""
    return x / math.log(2.0)
