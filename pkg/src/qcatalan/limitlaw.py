"""Finite-n diagnostics for the normal limit of coefficient distributions.

The standardized coefficient law of a quotient of binomial products tends
to a standard normal as the exponent sums grow.  The engine behind that is
the exact expansion of the log moment generating function: with
S_k = sum(a_i^{2k} - b_i^{2k}) and sigma^2 = S_1 / 12,

    ln E[e^{tX*}] = sum_{k>=1} B_{2k} S_k / (2k (2k)! sigma^{2k}) * t^{2k},

whose k = 1 term is exactly t^2/2.  Everything in the tail (k >= 2) is a
finite-n correction, and the functions here measure it three ways:

  * condition_ratio / geco_bound_check: the ratios S_k / S_1^k that must be
    small for the tail to vanish, tested against an explicit envelope
    alpha, beta, gamma with  ratio < n^gamma (alpha n^beta)^{2k}.
  * log_mgf_truncated / tail_series: the expansion itself, exact rationals
    until a single final float conversion per term.
  * exact_standardized_mgf / ks_distance_to_normal: direct comparison of
    the finite-n law against the standard normal, no series involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exactnum import BernoulliTable
from .moments import QuotientSpec, dist_summary, general_moments_closed, preset
from .polyq import IntPoly, q_catalan

__all__ = [
    "GecoParams",
    "GecoViolation",
    "GecoReport",
    "TailReport",
    "catalan_geco_params",
    "mcatalan_geco_params",
    "power_sum_diff",
    "condition_ratio",
    "geco_bound_check",
    "log_mgf_truncated",
    "exact_standardized_mgf",
    "tail_series",
    "ks_distance_to_normal",
]


@dataclass(frozen=True)
class GecoParams:
    """Envelope parameters: ratios must stay below n^gamma (alpha n^beta)^{2k}."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if not self.beta < 0:
            raise ValueError(f"beta must be negative, got {self.beta}")
        if not self.gamma < 0:
            raise ValueError(f"gamma must be negative, got {self.gamma}")

    def bound(self, n: int, k: int) -> float:
        return n ** self.gamma * (self.alpha * n ** self.beta) ** (2 * k)


def catalan_geco_params() -> GecoParams:
    """Envelope certified for the q-Catalan family: alpha = 32 sqrt(3)/3."""
    return GecoParams(alpha=32.0 * math.sqrt(3.0) / 3.0, beta=-1 / 6, gamma=-1 / 3)


def mcatalan_geco_params(m: int) -> GecoParams:
    """Envelope certified for the m-Catalan family: alpha = 8 sqrt(2m)."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    return GecoParams(alpha=8.0 * math.sqrt(2.0 * m), beta=-1 / 6, gamma=-1 / 3)


@dataclass(frozen=True)
class GecoViolation:
    n: int
    k: int
    ratio: float
    bound: float


@dataclass(frozen=True)
class GecoReport:
    """Outcome of sweeping the ratio bound over a family and a k-range."""

    params: GecoParams
    checked: int
    violations: tuple[GecoViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class TailReport:
    """Truncated tail of the standardized log-MGF at one (n, t).

    tail_value sums the k = 2..K terms; leading_term is the k = 1 term
    (t^2/2 up to float rounding); ks_distance is filled on request with the
    distance of the exact law to normal; truncation_delta is how much the
    tail moves when K grows by 10, or None when the Bernoulli table cannot
    reach that far.  A tail_value far above truncation_delta is a real
    finite-n effect, not a truncation artifact.
    """

    n: int
    t: float
    K: int
    tail_value: float
    leading_term: float
    ks_distance: float | None
    truncation_delta: float | None


def power_sum_diff(spec: QuotientSpec, k: int) -> int:
    """S_k = sum(a_i^{2k}) - sum(b_i^{2k}), exact."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    e = 2 * k
    return sum(x ** e for x in spec.a) - sum(x ** e for x in spec.b)


def _power_sum_diffs(spec: QuotientSpec, k_max: int) -> list[int]:
    """S_1..S_k_max in one sweep; index 0 unused.

    Incremental squaring: each exponent list is walked once with one big-int
    multiply per k, which keeps 30-term sweeps over thousand-entry specs
    comfortably under a second.
    """
    out = [0] * (k_max + 1)
    for xs, sign in ((spec.a, 1), (spec.b, -1)):
        for x in xs:
            sq = x * x
            p = 1
            for k in range(1, k_max + 1):
                p *= sq
                out[k] += sign * p
    return out


def _int_ratio(num: int, den: int) -> float:
    try:
        return num / den
    except OverflowError:
        sign = -1.0 if (num < 0) != (den < 0) else 1.0
        return sign * math.exp(math.log(abs(num)) - math.log(abs(den)))


def condition_ratio(spec: QuotientSpec, k: int) -> float:
    """The normalized power-sum ratio S_k / S_1^k.

    Exact integer numerator and denominator, one float division at the end
    (falling back to log space if both overflow float range).  Requires
    S_1 > 0, i.e. positive variance.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    s1 = power_sum_diff(spec, 1)
    if s1 <= 0:
        raise ValueError(f"S_1 = {s1} <= 0; ratio undefined")
    return _int_ratio(power_sum_diff(spec, k), s1 ** k)


def geco_bound_check(
    family: Callable[[int], QuotientSpec],
    params: GecoParams,
    k_range: Iterable[int],
    n_list: Iterable[int],
) -> GecoReport:
    """Sweep condition ratios of family(n) against the params envelope.

    Records every (n, k) with S_k / S_1^k >= n^gamma (alpha n^beta)^{2k}.
    An empty violations tuple certifies the envelope over the sweep, which
    by the series expansion pins the normal limit for the family.
    """
    ks = sorted(set(k_range))
    if not ks or ks[0] < 2:
        raise ValueError(f"k_range must contain only integers >= 2, got {ks}")
    checked = 0
    violations: list[GecoViolation] = []
    for n in n_list:
        spec = family(n)
        sums = _power_sum_diffs(spec, ks[-1])
        s1 = sums[1]
        if s1 <= 0:
            raise ValueError(f"S_1 = {s1} <= 0 at n = {n}; ratio undefined")
        s1_pow = {k: s1 ** k for k in ks}
        for k in ks:
            ratio = _int_ratio(sums[k], s1_pow[k])
            bound = params.bound(n, k)
            checked += 1
            if not ratio < bound:
                violations.append(GecoViolation(n=n, k=k, ratio=ratio, bound=bound))
    return GecoReport(params=params, checked=checked, violations=tuple(violations))


def _log_mgf_terms(spec: QuotientSpec, t: float, K: int, table: BernoulliTable) -> list[float]:
    """Float values of the k = 1..K expansion terms; exact rational per term
    until the one float conversion."""
    if K < 1:
        raise ValueError(f"need K >= 1, got {K}")
    if 2 * K > table.max_index:
        raise ValueError(f"table holds B_0..B_{table.max_index}, need B_{2 * K}")
    sums = _power_sum_diffs(spec, K)
    if sums[1] <= 0:
        raise ValueError(f"S_1 = {sums[1]} <= 0; standardization undefined")
    var = Fraction(sums[1], 12)
    terms = []
    for k in range(1, K + 1):
        coeff = table[2 * k] * sums[k] / (2 * k * math.factorial(2 * k) * var ** k)
        terms.append(float(coeff) * t ** (2 * k))
    return terms


def log_mgf_truncated(spec: QuotientSpec, t: float, K: int, table: BernoulliTable) -> float:
    """Degree-2K truncation of ln E[e^{(t/sigma) X}]: the drift mu t/sigma
    plus the even series whose k = 1 term is exactly t^2/2.

    Subtracting the same drift mu t/sigma standardizes it, giving the
    series alone; everything past its k = 1 term is the finite-n
    correction.  Requires the table to hold B_2..B_{2K}.
    """
    terms = _log_mgf_terms(spec, t, K, table)
    mean, variance = general_moments_closed(spec)
    drift = float(mean) * t / math.sqrt(float(variance))
    return drift + math.fsum(terms)


def tail_series(
    n: int, t: float, K: int, table: BernoulliTable, with_ks: bool = False
) -> TailReport:
    """Tail (k >= 2) of the expansion for the q-Catalan family at size n.

    Sums the k = 2..K terms, and when the table reaches B_{2(K+10)} also
    reports how much the sum moves with 10 more terms, so convergence of
    the truncation is checked rather than assumed.  with_ks additionally
    builds q_catalan(n) and fills ks_distance (costly for large n).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if K < 2:
        raise ValueError(f"need K >= 2, got {K}")
    spec = preset("catalan", n)
    k_far = K + 10
    if 2 * k_far <= table.max_index:
        terms = _log_mgf_terms(spec, t, k_far, table)
        tail = math.fsum(terms[1:K])
        delta = abs(math.fsum(terms[1:]) - tail)
    else:
        terms = _log_mgf_terms(spec, t, K, table)
        tail = math.fsum(terms[1:])
        delta = None
    ks = ks_distance_to_normal(q_catalan(n)) if with_ks else None
    return TailReport(
        n=n,
        t=t,
        K=K,
        tail_value=tail,
        leading_term=terms[0],
        ks_distance=ks,
        truncation_delta=delta,
    )


def exact_standardized_mgf(p: IntPoly, t: float) -> float:
    """E[e^{tX*}] for the standardized coefficient law of p, no series.

    X* = (X - mean)/sigma with P(X = k) proportional to c_k.  Computed by
    log-sum-exp over the support: every exponential inside the sum is <= 1,
    so the only way to overflow is the final exp, which raises instead of
    returning inf.
    """
    summary = dist_summary(p)
    if summary.variance <= 0:
        raise ValueError("variance is zero; standardization undefined")
    mu = float(summary.mean)
    sigma = summary.sigma
    pairs = [(k, c) for k, c in enumerate(p.coeffs) if c > 0]
    logs = [t * (k - mu) / sigma + math.log(c) for k, c in pairs]
    top = max(logs)
    ln_e = top + math.log(math.fsum(math.exp(v - top) for v in logs)) - math.log(summary.mass)
    if ln_e > 709.0:
        raise OverflowError(f"standardized MGF exceeds float range (ln = {ln_e:.1f})")
    return math.exp(ln_e)


def _normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def ks_distance_to_normal(p: IntPoly) -> float:
    """Kolmogorov-Smirnov distance between the standardized coefficient law
    and the standard normal.

    The empirical CDF is a step function, so the supremum is attained at a
    jump: both the pre-jump and post-jump gaps are checked at every support
    point.  CDF values come from big-int partial sums divided by the mass,
    correctly rounded by int/int true division.
    """
    summary = dist_summary(p)
    if summary.variance <= 0:
        raise ValueError("variance is zero; standardization undefined")
    mu = float(summary.mean)
    sigma = summary.sigma
    mass = summary.mass
    best = 0.0
    cum = 0
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        phi = _normal_cdf((k - mu) / sigma)
        lo = cum / mass
        cum += c
        hi = cum / mass
        best = max(best, abs(phi - lo), abs(hi - phi))
    return best
