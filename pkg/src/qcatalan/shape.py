"""Unimodality and log-concavity scans over coefficient polynomials.

The q-Catalan coefficient sequences have ragged edges: the constant and
leading coefficients are 1 with a 0 right next to them, so the full vector
is never unimodal and never log-concave.  The interesting questions live in
the interior, hence two trimmed notions:

  * interior unimodality drops exactly the first and last coefficient and
    asks for a weak rise-then-fall in what remains;
  * level-t log-concavity drops the first t and last t coefficients and
    asks for c_k^2 >= c_{k-1} c_{k+1} throughout what remains.

min_logconcave_t finds the smallest working t by locating every violating
index once; min_logconcave_t_bruteforce re-derives it straight from the
definition and exists purely to keep the fast scanner honest.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .polyq import IntPoly, q_catalan, q_catalan_general, q_catalan_second

__all__ = [
    "ShapeReport",
    "interior_unimodal",
    "min_logconcave_t",
    "min_logconcave_t_bruteforce",
    "shape_report",
    "scan_family",
]

FAMILY_NAMES = ("catalan", "catalan2", "mcatalan")


@dataclass(frozen=True)
class ShapeReport:
    """Shape facts for one family member."""

    family: str
    n: int
    degree: int
    interior_unimodal: bool
    first_unimodality_violation: int | None
    min_logconcave_t: int | None
    first_lc_violation_at_t0: int | None


def interior_unimodal(p: IntPoly) -> tuple[bool, int | None]:
    """Weak unimodality of the coefficients with both endpoints dropped.

    Returns (True, None) when c_1..c_{d-1} weakly rises then weakly falls,
    else (False, k) with k the first index that strictly rises after a
    strict fall.  Needs degree >= 2 so the interior is nonempty.
    """
    if p.is_zero() or p.degree < 2:
        raise ValueError("interior unimodality needs degree >= 2")
    cs = p.coeffs
    falling = False
    for k in range(2, len(cs) - 1):
        if cs[k] > cs[k - 1]:
            if falling:
                return False, k
        elif cs[k] < cs[k - 1]:
            falling = True
    return True, None


def _validate_shape_input(p: IntPoly) -> None:
    if p.is_zero():
        raise ValueError("zero polynomial has no shape")
    if any(c < 0 for c in p.coeffs):
        raise ValueError("negative coefficient; shape scans expect a distribution")


def _lc_violations(p: IntPoly) -> list[int]:
    """All k in [1, d-1] with c_k^2 < c_{k-1} c_{k+1}."""
    cs = p.coeffs
    return [
        k for k in range(1, len(cs) - 1) if cs[k] * cs[k] < cs[k - 1] * cs[k + 1]
    ]


def min_logconcave_t(p: IntPoly) -> int | None:
    """Smallest trim depth t making the trimmed vector log-concave.

    The triple at index k survives trimming at level t exactly when
    t + 1 <= k <= d - t - 1, so each violating k forces t >= min(k, d - k);
    the answer is the largest such forcing, found from a single pass that
    collects the violating indices.  Candidate trims stop at
    t = floor((d - 2)/2), past which the trimmed range is empty; None means
    no candidate works.
    """
    _validate_shape_input(p)
    d = p.degree
    if d < 4:
        warnings.warn(f"degree {d} leaves little to trim; result is near-vacuous")
    if not p.is_palindromic():
        warnings.warn("input is not palindromic; trimming both ends is asymmetric here")
    cap = (d - 2) // 2
    needed = 0
    for k in _lc_violations(p):
        needed = max(needed, min(k, d - k))
    return needed if needed <= cap else None


def min_logconcave_t_bruteforce(p: IntPoly) -> int | None:
    """Same answer as min_logconcave_t, straight from the definition.

    Tries t = 0, 1, 2, ... and re-tests the whole trimmed range each time.
    Deliberately unclever; the independent oracle for the scanner.
    """
    _validate_shape_input(p)
    cs = p.coeffs
    d = p.degree
    for t in range((d - 2) // 2 + 1):
        if all(
            cs[k] * cs[k] >= cs[k - 1] * cs[k + 1] for k in range(t + 1, d - t)
        ):
            return t
    return None


def _build_family_member(family: str, n: int, m: int | None) -> IntPoly:
    if family == "catalan":
        return q_catalan(n)
    if family == "catalan2":
        return q_catalan_second(n)
    if family == "mcatalan":
        if m is None:
            raise ValueError("family 'mcatalan' needs m")
        return q_catalan_general(n, m)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILY_NAMES}")


def shape_report(p: IntPoly, family: str, n: int) -> ShapeReport:
    """Assemble the shape facts for one polynomial.

    Degree 0 and 1 inputs have an empty interior and are reported as
    vacuously unimodal rather than rejected, so family scans can start low.
    """
    _validate_shape_input(p)
    d = p.degree
    if d >= 2:
        uni, uni_viol = interior_unimodal(p)
    else:
        uni, uni_viol = True, None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        t = min_logconcave_t(p)
    viols = _lc_violations(p)
    return ShapeReport(
        family=family,
        n=n,
        degree=d,
        interior_unimodal=uni,
        first_unimodality_violation=uni_viol,
        min_logconcave_t=t,
        first_lc_violation_at_t0=viols[0] if viols else None,
    )


def _scan_one(job: tuple[str, int, int | None]) -> ShapeReport:
    family, n, m = job
    return shape_report(_build_family_member(family, n, m), family, n)


def scan_family(
    family: str,
    n_from: int,
    n_to: int,
    m: int | None = None,
    workers: int = 1,
) -> list[ShapeReport]:
    """Shape reports for family members n_from..n_to inclusive, in order.

    workers > 1 fans the per-n jobs out to a process pool; results come
    back in n order either way, so output is deterministic.
    """
    if n_from < 1 or n_to < n_from:
        raise ValueError(f"need 1 <= n_from <= n_to, got {n_from}..{n_to}")
    if family not in FAMILY_NAMES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILY_NAMES}")
    if family == "mcatalan" and m is None:
        raise ValueError("family 'mcatalan' needs m")
    jobs = [(family, n, m) for n in range(n_from, n_to + 1)]
    if workers <= 1 or len(jobs) == 1:
        return [_scan_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_scan_one, jobs, chunksize=4))
