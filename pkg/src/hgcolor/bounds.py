"""Analytic bounds for greedy coloring, evaluated robustly in log space.

Covers the two-color failure bound k(1-p)^n + k^2 p and its optimization,
expected counts of short edges and conflicting r-chains at p = 2 ln(n)/n,
exact per-structure probabilities, and the local-lemma feasibility search
over dependency degree D. Quantities like r^n and D^r dwarf the float range
at interesting n, so every product with such exponents is a sum of logs;
weights x = 1 - e^(-a/D) and y = 1 - e^(-b/(r D^r)) are handled through
(a, b) so that D log(1-x) = -a and r D^r log(1-y) = -b stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import exp, expm1, inf, isfinite, log, log1p

from scipy.integrate import quad
from scipy.special import betainc, betaln

from .errors import NumericRangeError

GOLDEN_TOL = 1e-12
SEARCH_TOL = 1e-9
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class AnalysisParams:
    """Symbols of the counting bounds: uniformity n, colors r, edge-count
    coefficient k (edge count = k 2^(n-1) for r=2, k r^(n-2) generally),
    middle-interval width p, and the scaling constant c in c sqrt(n/ln n)."""

    n: int
    r: int = 2
    k: float = 1.0
    p: float = 0.5
    c: float = 1.0

    def __post_init__(self):
        if self.n < 2 or self.r < 2 or self.k <= 0 or self.c <= 0:
            raise ValueError(f"invalid analysis parameters: {self}")
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"p must lie in (0,1), got {self.p}")

    @property
    def edge_count(self) -> float:
        if self.r == 2:
            return self.k * 2.0 ** (self.n - 1)
        return self.k * self.r ** (self.n - 2)


def reference_p(n: int) -> float:
    """The fixed interval width 2 ln(n)/n used by the r-coloring bounds."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return 2.0 * log(n) / n


def two_color_bound(k: float, p: float, n: int) -> float:
    """k (1-p)^n + k^2 p: failure-probability bound for greedy 2-coloring
    of an n-uniform hypergraph with k 2^(n-1) edges."""
    if k < 0 or n < 1 or not 0.0 <= p <= 1.0:
        raise ValueError(f"invalid arguments k={k}, p={p}, n={n}")
    first = 0.0 if p >= 1.0 else k * exp(n * log1p(-p))
    return first + k * k * p


def _golden_min(f, lo: float, hi: float, tol: float = GOLDEN_TOL) -> tuple[float, float]:
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    return x, f(x)


@dataclass(frozen=True)
class POptimum:
    """Both choices of the interval width: the closed form ln(n/k)/n (absent
    when k >= n) and the numeric minimizer of the two-color bound."""

    p_closed: float | None
    value_closed: float | None
    p_numeric: float
    value_numeric: float

    @property
    def best_p(self) -> float:
        if self.value_closed is not None and self.value_closed < self.value_numeric:
            return self.p_closed  # type: ignore[return-value]
        return self.p_numeric

    @property
    def best_value(self) -> float:
        if self.value_closed is not None:
            return min(self.value_closed, self.value_numeric)
        return self.value_numeric


def optimize_p(k: float, n: int) -> POptimum:
    """Minimize two_color_bound over p in (0,1); golden section to 1e-12."""
    if k <= 0 or n < 2:
        raise ValueError(f"invalid arguments k={k}, n={n}")
    p_num, v_num = _golden_min(lambda p: two_color_bound(k, p, n), 0.0, 1.0)
    p_closed = value_closed = None
    if k < n:
        pc = log(n / k) / n
        if 0.0 < pc < 1.0:
            p_closed = pc
            value_closed = two_color_bound(k, pc, n)
    return POptimum(p_closed, value_closed, p_num, v_num)


def min_two_color_bound(k: float, n: int) -> float:
    return optimize_p(k, n).value_numeric


def _max_feasible(feasible, lo: float = 0.0, hi0: float = 1.0, tol: float = SEARCH_TOL) -> float:
    """Largest x with feasible(x), for a predicate true on [0, x*)."""
    hi = hi0
    while feasible(hi):
        lo, hi = hi, hi * 2.0
        if hi > 1e18:
            raise NumericRangeError("feasibility search ran away")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo


def max_k_2col(n: int, tol: float = SEARCH_TOL) -> float:
    """Largest k with min_p k(1-p)^n + k^2 p < 1. Any n-uniform hypergraph
    with fewer than k 2^(n-1) edges is 2-colorable by greedy with positive
    probability."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return _max_feasible(lambda k: min_two_color_bound(k, n) < 1.0, tol=tol)


def pair_conflict_probability(n: int, lo: float, hi: float) -> float:
    """∫ x^(n-1) (1-x)^(n-1) dx over [lo, hi] by adaptive quadrature.

    This is the probability that a fixed dangerous pair conflicts with
    common-vertex birth time in [lo, hi], before the edge-count factor.
    """
    if n < 1 or not 0.0 <= lo <= hi <= 1.0:
        raise ValueError(f"invalid arguments n={n}, lo={lo}, hi={hi}")
    if lo == hi:
        return 0.0
    val, _err = quad(
        lambda x: x ** (n - 1) * (1.0 - x) ** (n - 1),
        lo,
        hi,
        epsabs=1e-300,
        epsrel=1e-12,
        limit=200,
    )
    return val


def pair_conflict_probability_closed(n: int, lo: float, hi: float) -> float:
    """Same integral through the regularized incomplete beta function.

    Uses the Beta(n, n) mirror symmetry to keep both evaluation points on
    the lower half, avoiding cancellation of regularized values near 1.
    """
    if n < 1 or not 0.0 <= lo <= hi <= 1.0:
        raise ValueError(f"invalid arguments n={n}, lo={lo}, hi={hi}")
    if lo >= 0.5:
        lo, hi = 1.0 - hi, 1.0 - lo
    elif hi > 0.5:
        return pair_conflict_probability_closed(
            n, lo, 0.5
        ) + pair_conflict_probability_closed(n, 0.5, hi)
    scale = exp(betaln(n, n))
    return scale * (betainc(n, n, hi) - betainc(n, n, lo))


def expected_short_edges(k: float, n: int, r: int, p: float) -> float:
    """k r^(n-2) n ((1-p)/r)^(n-1), evaluated as exp of a log sum.

    Bounds the expected number of edges whose birth-time span is below
    (1-p)/r among k r^(n-2) edges.
    """
    if k <= 0 or n < 2 or r < 2 or not 0.0 <= p < 1.0:
        raise ValueError(f"invalid arguments k={k}, n={n}, r={r}, p={p}")
    # r^(n-2) / r^(n-1) collapses to 1/r
    return exp(log(k) + log(n) - log(r) + (n - 1) * log1p(-p))


def prob_edge_short_exact(n: int, length: float) -> float:
    """Exact P(range of n iid uniforms < L) = n L^(n-1) - (n-1) L^n."""
    if n < 1 or not 0.0 <= length <= 1.0:
        raise ValueError(f"invalid arguments n={n}, L={length}")
    return n * length ** (n - 1) - (n - 1) * length**n


def expected_conflicting_chains(k: float, n: int, r: int, p: float) -> float:
    """(2/r!) (k r^(n-2))^r p^(r-1) r^(-r(n-2)) = (2/r!) k^r p^(r-1).

    Bounds the expected number of conflicting r-chains with no short edge.
    """
    if k <= 0 or n < 2 or r < 2 or not 0.0 <= p < 1.0:
        raise ValueError(f"invalid arguments k={k}, n={n}, r={r}, p={p}")
    if p == 0.0:
        return 0.0
    return exp(log(2.0) - math.lgamma(r + 1) + r * log(k) + (r - 1) * log(p))


def max_k_rcol(n: int, r: int, tol: float = SEARCH_TOL) -> float:
    """Largest k with E[short edges] + E[conflicting chains] < 1 at
    p = 2 ln(n)/n."""
    if n < 3 or r < 2:
        raise ValueError(f"need n >= 3 and r >= 2, got n={n}, r={r}")
    p = reference_p(n)

    def feasible(k: float) -> bool:
        if k <= 0:
            return True
        return (
            expected_short_edges(k, n, r, p) + expected_conflicting_chains(k, n, r, p)
            < 1.0
        )

    return _max_feasible(feasible, tol=tol)


# ---------------------------------------------------------------------------
# Local lemma feasibility
# ---------------------------------------------------------------------------


def log1mexp(log_u: float) -> float:
    """log(1 - e^(-u)) from log(u), stable for u from subnormal to huge."""
    if log_u == -inf:
        return -inf
    if log_u < -37.0:
        # 1 - e^(-u) = u (1 - u/2 + ...); the correction is below eps
        return log_u
    u = exp(log_u)
    if u <= math.log(2.0):
        return log(-expm1(-u))
    return log1p(-exp(-u))


@dataclass(frozen=True)
class LLLFeasibility:
    feasible: bool
    log_slack1: float  # log RHS1 - log P1
    log_slack2: float  # log RHS2 - log P2


def lll_feasible(
    p1: float, p2: float, D: float, r: int, x: float, y: float
) -> LLLFeasibility:
    """Check P1 <= x (1-x)^D (1-y)^(r D^r) and
    P2 <= y (1-x)^(r D) (1-y)^(r^2 D^r) for explicit weights.

    P1 bounds the short-edge event, P2 the conflicting-chain event; an edge
    meets at most D other edges and r D^r chains, a chain meets at most r D
    edges and r^2 D^r chains. Raises NumericRangeError when r^2 D^r leaves
    the float range (use lll_feasible_ab then).
    """
    if not (0.0 <= p1 <= 1.0 and 0.0 <= p2 <= 1.0):
        raise ValueError(f"probabilities outside [0,1]: P1={p1}, P2={p2}")
    if not (0.0 <= x < 1.0 and 0.0 <= y < 1.0):
        raise ValueError(f"weights must lie in [0,1): x={x}, y={y}")
    if D < 0 or r < 2:
        raise ValueError(f"invalid D={D} or r={r}")
    try:
        d_pow_r = D**r
    except OverflowError:
        d_pow_r = inf
    if not isfinite(d_pow_r) or not isfinite(r * r * d_pow_r):
        raise NumericRangeError(
            f"r^2 D^r overflows for D={D}, r={r}; use lll_feasible_ab"
        )
    log_x = log(x) if x > 0 else -inf
    log_y = log(y) if y > 0 else -inf
    log_rhs1 = log_x + D * log1p(-x) + r * d_pow_r * log1p(-y)
    log_rhs2 = log_y + r * D * log1p(-x) + r * r * d_pow_r * log1p(-y)
    log_p1 = log(p1) if p1 > 0 else -inf
    log_p2 = log(p2) if p2 > 0 else -inf
    return LLLFeasibility(
        log_p1 <= log_rhs1 and log_p2 <= log_rhs2,
        _slack(log_rhs1, log_p1),
        _slack(log_rhs2, log_p2),
    )


def _slack(log_rhs: float, log_p: float) -> float:
    # a zero-probability event is satisfied with infinite slack
    if log_p == -inf:
        return inf
    return log_rhs - log_p


def lll_feasible_ab(
    log_p1: float, log_p2: float, log_D: float, r: int, a: float, b: float
) -> LLLFeasibility:
    """Same check with x = 1-e^(-a/D), y = 1-e^(-b/(r D^r)), all in logs.

    With these weights (1-x)^D = e^(-a) and (1-y)^(r D^r) = e^(-b) exactly,
    so the right-hand sides are x e^(-(a+b)) and y e^(-r(a+b)).
    """
    if a <= 0 or b <= 0 or r < 2:
        raise ValueError(f"need a, b > 0 and r >= 2, got a={a}, b={b}, r={r}")
    log_x = log1mexp(log(a) - log_D)
    log_y = log1mexp(log(b) - log(r) - r * log_D)
    log_rhs1 = log_x - (a + b)
    log_rhs2 = log_y - r * (a + b)
    return LLLFeasibility(
        log_p1 <= log_rhs1 and log_p2 <= log_rhs2,
        _slack(log_rhs1, log_p1),
        _slack(log_rhs2, log_p2),
    )


@dataclass(frozen=True)
class LLLParams:
    """A certified local-lemma configuration at dependency degree D.

    Float fields can round to 0 or inf at the scales involved; log fields
    are authoritative.
    """

    log_D: float
    r: int
    log_p1: float
    log_p2: float
    a: float
    b: float
    log_slack1: float
    log_slack2: float

    @property
    def D(self) -> float:
        return exp(self.log_D)

    @property
    def p1(self) -> float:
        return exp(self.log_p1)

    @property
    def p2(self) -> float:
        return exp(self.log_p2)

    @property
    def x(self) -> float:
        return -expm1(-exp(log(self.a) - self.log_D))

    @property
    def y(self) -> float:
        return -expm1(-exp(log(self.b) - log(self.r) - self.r * self.log_D))

    @property
    def log_one_minus_x(self) -> float:
        return -exp(log(self.a) - self.log_D)

    @property
    def log_one_minus_y(self) -> float:
        return -exp(log(self.b) - log(self.r) - self.r * self.log_D)


_AB_GRID = tuple(2.0**e for e in range(-6, 5))


def _best_ab(log_p1: float, log_p2: float, log_D: float, r: int) -> tuple[float, float, float]:
    """Maximize the minimum log-slack over (a, b): coarse log grid then
    coordinate descent with multiplicative steps."""

    def score(a: float, b: float) -> float:
        res = lll_feasible_ab(log_p1, log_p2, log_D, r, a, b)
        return min(res.log_slack1, res.log_slack2)

    best_s, best_a, best_b = -inf, _AB_GRID[0], _AB_GRID[0]
    for a in _AB_GRID:
        for b in _AB_GRID:
            s = score(a, b)
            if s > best_s:
                best_s, best_a, best_b = s, a, b
    step = 0.5
    for _ in range(400):
        if step <= 1e-7:
            break
        moved = False
        for fa, fb in ((1 + step, 1), (1 / (1 + step), 1), (1, 1 + step), (1, 1 / (1 + step))):
            s = score(best_a * fa, best_b * fb)
            if s > best_s:
                best_s, best_a, best_b = s, best_a * fa, best_b * fb
                moved = True
        if not moved:
            step /= 2.0
    return best_s, best_a, best_b


def structure_log_probabilities(n: int, r: int, p: float | None = None) -> tuple[float, float]:
    """(log P1, log P2): per-edge short probability bound n ((1-p)/r)^(n-1)
    and per-chain conflict probability bound p^(r-1) r^(-r(n-2))."""
    if n < 3 or r < 2:
        raise ValueError(f"need n >= 3 and r >= 2, got n={n}, r={r}")
    if p is None:
        p = reference_p(n)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0,1), got {p}")
    log_p1 = log(n) + (n - 1) * (log1p(-p) - log(r))
    log_p2 = (r - 1) * log(p) - r * (n - 2) * log(r)
    return log_p1, log_p2


def max_degree_lll(
    n: int, r: int, p: float | None = None, tol: float = 1e-6
) -> LLLParams:
    """Largest dependency degree D certified colorable by the local lemma.

    Binary search on log D; at each candidate the weight parameters (a, b)
    are grid-searched and refined. The result re-certifies through
    lll_feasible_ab with nonnegative slack.
    """
    log_p1, log_p2 = structure_log_probabilities(n, r, p)
    lo, hi = 0.0, -log_p1 + 10.0
    s, a, b = _best_ab(log_p1, log_p2, lo, r)
    if s < 0:
        raise NumericRangeError(
            f"local lemma infeasible even at D=1 for n={n}, r={r}"
        )
    best = (lo, a, b, s)
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        s, a, b = _best_ab(log_p1, log_p2, mid, r)
        if s >= 0:
            lo = mid
            best = (mid, a, b, s)
        else:
            hi = mid
    log_D, a, b, _ = best
    res = lll_feasible_ab(log_p1, log_p2, log_D, r, a, b)
    return LLLParams(
        log_D=log_D,
        r=r,
        log_p1=log_p1,
        log_p2=log_p2,
        a=a,
        b=b,
        log_slack1=res.log_slack1,
        log_slack2=res.log_slack2,
    )
