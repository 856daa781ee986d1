"""Closed forms and bounds for independent-set counts, over exact integers.

Fibonacci/Pell families, the ladder-count sequences delta and delta-tilde,
well-based distance sets with their generating-function counts, and every
bound exposed by the verification layer.  Functions here only compute
values; comparing them against exact counts is the verify module's job.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .counting import count_is
from .graphs import (
    BitGraph,
    RiordanSpec,
    build_riordan,
    even_labels,
    is_io_decomposable,
    odd_labels,
)
from .series import evaluate

BigCount = int

WELL_BASED_LIMIT = 30


class BoundPreconditionError(ValueError):
    """A bound's hypothesis does not hold for the given spec."""


class CompletionNotFoundError(ValueError):
    """No well-based completion exists within the allowed ground set."""


def fibonacci(n: int) -> BigCount:
    """F(0) = F(1) = 1, F(n) = F(n-1) + F(n-2).

    Note the offset: this convention starts at 1, 1, 2, 3, 5, ...
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def k_fibonacci(k: int, n: int) -> BigCount:
    """k-generalized Fibonacci: first k values are 1, then
    F_k(n) = F_k(n-1) + F_k(n-k).  Satisfies F_2(n+1) = F(n)."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if n < 1:
        raise ValueError("n must be positive")
    vals = [1] * min(n, k)
    while len(vals) < n:
        vals.append(vals[-1] + vals[-k])
    return vals[n - 1]


def pell(n: int) -> BigCount:
    """P_0 = 0, P_1 = 1, P_n = 2*P_(n-1) + P_(n-2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def delta(n: int, variant: str = "plain") -> BigCount:
    """Independent-set count of the ladder graph on n vertices, in closed
    Pell form; both variants return 1 for n <= 0 (the convention used by
    the upper bounds below).

    plain: 2*P_((n+1)/2) for odd n, P_(n/2) + P_(n/2+1) for even n.
    tilde: P_((n-1)/2) + 2*P_((n+1)/2) for odd n, same even case.
    """
    if variant not in ("plain", "tilde"):
        raise ValueError(f"variant must be 'plain' or 'tilde', got {variant!r}")
    if n <= 0:
        return 1
    if n % 2 == 0:
        return pell(n // 2) + pell(n // 2 + 1)
    if variant == "plain":
        return 2 * pell((n + 1) // 2)
    return pell((n - 1) // 2) + 2 * pell((n + 1) // 2)


def delta_tilde(n: int) -> BigCount:
    return delta(n, "tilde")


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial; coeffs[k] multiplies x^k."""

    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, coeffs) -> IntPolynomial:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.make(self.coeff(k) + other.coeff(k) for k in range(size))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.make(self.coeff(k) - other.coeff(k) for k in range(size))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.make(out)


def rational_coeff(numer: IntPolynomial, denom: IntPolynomial, n: int) -> BigCount:
    """[x^n] of numer/denom via the linear recurrence the denominator
    induces; requires a unit constant term."""
    if denom.coeff(0) != 1:
        raise ValueError("denominator must have constant term 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    seq: list[int] = []
    for m in range(n + 1):
        val = numer.coeff(m)
        for j in range(1, min(m, denom.degree) + 1):
            val -= denom.coeff(j) * seq[m - j]
        seq.append(val)
    return seq[n]


def _validated_distances(distances) -> tuple[int, ...]:
    ds = tuple(sorted(set(distances)))
    if not ds:
        raise ValueError("distance set must be nonempty")
    if ds[0] < 1:
        raise ValueError(f"distances must be positive, got {ds}")
    if ds[-1] > WELL_BASED_LIMIT:
        raise ValueError(
            f"well-based checks are capped at elements <= {WELL_BASED_LIMIT}, got {ds[-1]}"
        )
    return ds


def _has_uncovered_composition(total: int, blocked) -> bool:
    """Can `total` be split into two or more positive parts avoiding
    `blocked` entirely?

    Writing the word 1 0^(total-1) 1 with some zeros flipped to ones, the
    gaps between consecutive ones form exactly such a split, and the word
    contains an earlier pattern as a factor exactly when some gap lies in
    the earlier distance set.
    """
    parts = [p for p in range(1, total) if p not in blocked]
    reach = [False] * (total + 1)  # reach[x]: x is a sum of >= 1 allowed parts
    for x in range(1, total + 1):
        for p in parts:
            if p > x:
                break
            if p == x or reach[x - p]:
                reach[x] = True
                break
    return any(reach[total - p] for p in parts if total - p >= 1)


def is_well_based(distances) -> bool:
    """Whether the distance set is well-based.

    The set must contain 1, and for each larger element a, every way of
    flipping zeros in 1 0^(a-1) 1 must create some smaller element's
    pattern as a factor.  A singleton {1} counts as well-based.
    """
    ds = _validated_distances(distances)
    if ds[0] != 1:
        return False
    blocked: set[int] = set()
    for a in ds:
        if blocked and _has_uncovered_composition(a, blocked):
            return False
        blocked.add(a)
    return True


@dataclass(frozen=True)
class WellBasedResult:
    """Outcome of completing a distance set to a well-based one."""

    is_well_based: bool
    completion: tuple[int, ...]
    combined: tuple[int, ...]


def well_based_completion(distances, n: int) -> WellBasedResult:
    """Smallest addition B from [n] making the set well-based.

    Candidates are searched by increasing cardinality and lexicographically
    within a cardinality, so the result is deterministic.  The completion
    is empty exactly when the input is already well-based.
    """
    ds = _validated_distances(distances)
    if ds[-1] > n - 1:
        raise ValueError(f"distances must lie within [1, {n - 1}], got {ds}")
    if is_well_based(ds):
        return WellBasedResult(True, (), ds)
    pool = [x for x in range(1, n + 1) if x not in set(ds)]
    need_one = 1 not in ds
    for size in range(1, len(pool) + 1):
        for extra in combinations(pool, size):
            if need_one and extra[0] != 1:
                continue  # every well-based set contains 1
            combined = tuple(sorted(ds + extra))
            if is_well_based(combined):
                return WellBasedResult(False, extra, combined)
    raise CompletionNotFoundError(f"no well-based completion of {ds} within [{n}]")


def well_based_series_count(distances, n: int) -> BigCount:
    """[x^n] of c(x) / ((1-x)c(x) - x) with c(x) = 1 + sum of x^t.

    This is the exact independent-set count of the Toeplitz graph on n
    vertices for a well-based distance set containing 1.
    """
    ds = _validated_distances(distances)
    if not is_well_based(ds):
        raise ValueError(f"distance set {ds} is not well-based")
    coeffs = [0] * (ds[-1] + 1)
    coeffs[0] = 1
    for t in ds:
        coeffs[t] = 1
    c = IntPolynomial.make(coeffs)
    one_minus_x = IntPolynomial.make([1, -1])
    x = IntPolynomial.make([0, 1])
    denom = one_minus_x * c - x
    return rational_coeff(c, denom, n)


def toeplitz_lower_bound(distances, n: int) -> BigCount:
    """Series count of the well-based completion; a lower bound for the
    Toeplitz graph's count, tight exactly when no completion was needed."""
    result = well_based_completion(distances, n)
    return well_based_series_count(result.combined, n)


def k_type_upper_bound(spec: RiordanSpec, k: int) -> BigCount:
    """F_k(n+k), valid when g starts with k-1 odd coefficients and f is
    z plus O(z^k) mod 2; equality exactly for the labeled graph
    T_n<1..k-1>."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    g = evaluate(spec.g_expr, k - 1)
    f = evaluate(spec.f_expr, k)
    for i in range(k - 1):
        if not g.coeff(i):
            raise BoundPreconditionError(f"[z^{i}]g = 0, expected 1 (mod 2)")
    if not f.coeff(1):
        raise BoundPreconditionError("[z^1]f = 0, expected 1 (mod 2)")
    for j in range(2, k):
        if f.coeff(j):
            raise BoundPreconditionError(f"[z^{j}]f = 1, expected 0 (mod 2)")
    return k_fibonacci(k, spec.n + k)


def _chordal_guard(k: int, t: int, n: int) -> None:
    if k < 1 or t < 1:
        raise ValueError("k and t must be positive")
    threshold = (2 * k - 1) * t + 1
    if n < threshold:
        raise ValueError(f"order {n} is below the threshold {threshold}")


def chordal_toeplitz_is(k: int, t: int, n: int) -> BigCount:
    """Exact count for T_n<t, 2t, ..., kt>: one (k+1)-Fibonacci factor per
    residue class, i.e. product over j = 1..t of
    F_(k+1)(floor((n-j)/t) + k + 2)."""
    _chordal_guard(k, t, n)
    out = 1
    for j in range(1, t + 1):
        out *= k_fibonacci(k + 1, (n - j) // t + k + 2)
    return out


def chordal_toeplitz_cliques(k: int, t: int, n: int) -> BigCount:
    """Clique count (empty clique included once) for T_n<t, 2t, ..., kt>:
    (n - (k-1)t) * 2^k - (t - 1).

    The graph splits into t components contributing
    (floor((n-j)/t) + 2 - k) * 2^k cliques each, every one of which
    includes the empty clique; the -(t-1) keeps it counted exactly once.
    Without the correction the closed form overshoots the true count for
    every t >= 2 (e.g. 20 vs 19 on the order-7 graph with distances 2, 4).
    """
    _chordal_guard(k, t, n)
    return ((n - (k - 1) * t) << k) - (t - 1)


def chordal_toeplitz_cliques_uncorrected(k: int, t: int, n: int) -> BigCount:
    """The closed form without the empty-clique correction, for reporting."""
    _chordal_guard(k, t, n)
    return (n - (k - 1) * t) << k


def fibonacci_upper_bound(n: int) -> BigCount:
    """F(n+1): counts 11-avoiding binary words of length n, an upper bound
    whenever 1 - 2 - ... - n is a path; equality only for the path graph."""
    if n < 1:
        raise ValueError("n must be positive")
    return fibonacci(n + 1)


def _upper_bound_level(n: int) -> int:
    # k with 2^k < n <= 2^(k+1); n >= 5 guarantees k >= 2
    return (n - 1).bit_length() - 1


def _alpha_product(i: int, k: int) -> BigCount:
    if i == k - 1:
        return 1
    out = 1
    for j in range(i + 1, k):
        out *= delta_tilde((1 << j) - 1)
    return out


def _correction_sum(k: int) -> BigCount:
    out = 0
    for i in range(1, k):
        out += (delta((1 << i) - 2) - 1) * delta_tilde((1 << i) - 3) * _alpha_product(i, k)
    return out


def io_upper_bound(n: int) -> BigCount:
    """Pell-family upper bound for io-decomposable Bell-type graphs, n >= 5.

    delta_n minus corrections for words that pick a vertex dominated by
    one of the cut vertices 3, 5, 9, ..., 2^k + 1.
    """
    if n < 5:
        raise ValueError("bound applies for n >= 5")
    k = _upper_bound_level(n)
    value = delta(n) - (delta((1 << k) - 2) - 1) * delta_tilde(n - (1 << k) - 3)
    return value - delta_tilde(n - (1 << k) - 1) * _correction_sum(k)


def pascal_upper_bound(n: int) -> BigCount:
    """Sharper upper bound for the Pascal graph, n >= 5; uses that vertex 1
    dominates everything and vertex 2 dominates the odd vertices."""
    if n < 5:
        raise ValueError("bound applies for n >= 5")
    k = _upper_bound_level(n)
    prod = 1
    for i in range(1, k):
        prod *= delta_tilde((1 << i) - 1)
    value = delta(n) + 1 + (1 << (n // 2 - 1))
    value -= (delta((1 << k) - 2) - 1) * delta_tilde(n - (1 << k) - 3)
    value -= delta_tilde(n - (1 << k) - 1) * (2 * prod + _correction_sum(k))
    return value


def io_independence_claims(n: int) -> tuple[int, int]:
    """(independence number, cap on the number of maximum independent sets)
    for io-decomposable graphs: (floor(n/2), 2 for even n else 4)."""
    if n < 2:
        raise ValueError("claims apply for n >= 2")
    return n // 2, 2 if n % 2 == 0 else 4


def odd_even_lower_bound(graph: BitGraph, as_printed: bool = False) -> BigCount:
    """Lower bound from the odd/even split:
    i(<V_o>) + i(<V_e>) - 1 + sigma0(B), where sigma0(B) counts the
    non-adjacent odd/even vertex pairs.

    The -1 removes the doubly counted empty set; without it the bound
    fails on small cases (it exceeds the exact count of the order-4
    Pascal graph).  Pass as_printed=True for the uncorrected value.
    """
    n = graph.n
    if n < 2:
        raise ValueError("bound applies for n >= 2")
    sub_o = graph.induced(odd_labels(n))
    sub_e = graph.induced(even_labels(n))
    sigma0 = ((n + 1) // 2) * (n // 2) - graph.edge_count + sub_o.edge_count + sub_e.edge_count
    value = count_is(sub_o) + count_is(sub_e) + sigma0
    return value if as_printed else value - 1


def io_dec_lower_bound(spec: RiordanSpec) -> BigCount:
    """The odd/even lower bound specialized to io-decomposable specs, with
    the same empty-set correction:
    i(G_ceil(n/2)) + 2^floor(n/2) - 1 + ceil(n/2)*floor(n/2)
    - |E(G_n)| + |E(G_ceil(n/2))|."""
    n = spec.n
    if n < 2:
        raise ValueError("bound applies for n >= 2")
    if not is_io_decomposable(spec):
        raise BoundPreconditionError("spec is not io-decomposable")
    whole = build_riordan(spec)
    half = build_riordan(spec.with_n((n + 1) // 2))
    value = count_is(half) + (1 << (n // 2)) - 1
    return value + ((n + 1) // 2) * (n // 2) - whole.edge_count + half.edge_count


def multipartite_lower_bound(n: int) -> BigCount:
    """Lower bound from the power-of-two multipartition of [n]:
    2 - ceil(log2 n) + sum over levels of (2^a_j + C(a_(j+1), 2))
    with a_j = floor((n - 1 + 2^(j-1)) / 2^j)."""
    if n < 2:
        raise ValueError("bound applies for n >= 2")
    levels = (n - 1).bit_length()

    def a(j: int) -> int:
        return (n - 1 + (1 << (j - 1))) >> j

    value = 2 - levels
    for j in range(1, levels + 1):
        nxt = a(j + 1)
        value += (1 << a(j)) + (nxt * nxt - nxt) // 2
    return value
