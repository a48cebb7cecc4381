"""Brute-force ground truth: exhaustive pair enumeration and verification.

This module never touches the counting recurrences.  It walks every
ordered pair of words directly, so its answers are trustworthy at small
sizes and serve as the reference the closed-form counts are tested
against.  Shortest overlaps are recomputed here from the definition
(smallest l with suffix_l(u) == prefix_l(v)) rather than through the
failure-chain machinery, except for the four-way census, which reuses the
linear-time profile helper from wordcore.

Every entry point that enumerates pairs refuses up front when the pair
count exceeds the budget (DEFAULT_PAIR_BUDGET unless overridden), so a
typo cannot start a multi-day loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .errors import BudgetExceededError, InvalidInputError
from .wordcore import Alphabet, Word, _overlap_lengths, _prefix_function

DEFAULT_PAIR_BUDGET = 1 << 34

# materialize the inner word list only when it is comfortably small
_MATERIALIZE_LIMIT = 1 << 20


@dataclass(frozen=True)
class PairCensus:
    """Four-way census of all ordered pairs (u, v) with |u| = m, |v| = n."""

    k: int
    m: int
    n: int
    mutually_bordered: int
    right_bordered: int
    left_bordered: int
    mutually_unbordered: int

    @property
    def total(self) -> int:
        return (
            self.mutually_bordered
            + self.right_bordered
            + self.left_bordered
            + self.mutually_unbordered
        )


@dataclass(frozen=True)
class ViolationReport:
    """Outcome of an exhaustive structural check.

    checked is the exact number of pairs examined.  violations holds up to
    the configured cap of (u, v, reason) triples; empty means the property
    held for every checked pair.
    """

    checked: int
    violations: tuple[tuple[Word, Word, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def ensure_within_budget(pair_count: int, budget: int | None = None) -> None:
    """Refuse an enumeration whose pair count exceeds the budget."""
    limit = DEFAULT_PAIR_BUDGET if budget is None else budget
    if pair_count > limit:
        raise BudgetExceededError(pair_count, limit)


def _validate_kn(k: int, n: int) -> None:
    if k < 1:
        raise InvalidInputError(f"alphabet size must be at least 1, got {k}")
    if n < 1:
        raise InvalidInputError(f"length must be at least 1, got {n}")


def _shortest_overlap(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    """lso(u, v) by direct comparison: smallest proper l, or 0."""
    last = len(u)
    for l in range(1, min(last, len(v))):
        if u[last - l :] == v[:l]:
            return l
    return 0


def _unbordered_checker() -> Callable[[tuple[int, ...]], bool]:
    cache: dict[tuple[int, ...], bool] = {}

    def check(w: tuple[int, ...]) -> bool:
        result = cache.get(w)
        if result is None:
            result = _prefix_function(w)[-1] == 0
            cache[w] = result
        return result

    return check


def enumerate_pair_census(
    k: int, m: int, n: int, *, budget: int | None = None
) -> PairCensus:
    """Classify every ordered pair with |u| = m, |v| = n by brute force."""
    _validate_kn(k, n)
    if m < 1:
        raise InvalidInputError(f"length must be at least 1, got {m}")
    ensure_within_budget(k ** (m + n), budget)
    mutual = right = left = neither = 0
    inner = list(product(range(k), repeat=n)) if k**n <= _MATERIALIZE_LIMIT else None
    for u in product(range(k), repeat=m):
        for v in inner if inner is not None else product(range(k), repeat=n):
            has_right = bool(_overlap_lengths(u, v, k))
            has_left = bool(_overlap_lengths(v, u, k))
            if has_right:
                if has_left:
                    mutual += 1
                else:
                    right += 1
            elif has_left:
                left += 1
            else:
                neither += 1
    return PairCensus(
        k=k,
        m=m,
        n=n,
        mutually_bordered=mutual,
        right_bordered=right,
        left_bordered=left,
        mutually_unbordered=neither,
    )


def verify_shortest_unbordered(
    k: int, n: int, *, budget: int | None = None, violation_cap: int = 16
) -> ViolationReport:
    """Check: a common overlap word is shortest exactly when unbordered.

    For every ordered pair of length-n words and every length l at which a
    suffix of u equals a prefix of v, the overlap word of length l must be
    unbordered if and only if l is the smallest such length.
    """
    _validate_kn(k, n)
    ensure_within_budget(k ** (2 * n), budget)
    alphabet = Alphabet(k)
    words = list(product(range(k), repeat=n))
    is_unb = _unbordered_checker()
    violations: list[tuple[Word, Word, str]] = []
    checked = 0
    for u in words:
        for v in words:
            checked += 1
            lengths = _overlap_lengths(u, v, k)
            if not lengths:
                continue
            shortest = lengths[0]
            for l in lengths:
                if (l == shortest) == is_unb(v[:l]):
                    continue
                if len(violations) < violation_cap:
                    side = (
                        "shortest overlap is bordered"
                        if l == shortest
                        else "longer overlap is unbordered"
                    )
                    violations.append(
                        (Word(u, alphabet), Word(v, alphabet), f"{side} at length {l}")
                    )
    return ViolationReport(checked=checked, violations=tuple(violations))


def verify_decomposition(
    k: int, n: int, *, budget: int | None = None, violation_cap: int = 16
) -> ViolationReport:
    """Check the decomposition laws on every mutually bordered pair.

    With i = lso(u, v), j = lso(v, u):

    * i + j <= n forces u = x s y and v = y t x, where y = so(u, v) and
      x = so(v, u) are both unbordered.
    * i + j > n forces n + 1 <= i + j <= floor(4n/3) and the interleaved
      shape u = x s y t x, v = y t x s y with |x| = |y| = i + j - n,
      x != y, (x, y) mutually unbordered, and x s y, y t x unbordered.
    """
    _validate_kn(k, n)
    ensure_within_budget(k ** (2 * n), budget)
    alphabet = Alphabet(k)
    words = list(product(range(k), repeat=n))
    is_unb = _unbordered_checker()
    bound = 4 * n // 3
    violations: list[tuple[Word, Word, str]] = []
    checked = 0

    def record(u: tuple[int, ...], v: tuple[int, ...], reason: str) -> None:
        if len(violations) < violation_cap:
            violations.append((Word(u, alphabet), Word(v, alphabet), reason))

    for u in words:
        for v in words:
            checked += 1
            right = _overlap_lengths(u, v, k)
            if not right:
                continue
            left = _overlap_lengths(v, u, k)
            if not left:
                continue
            i = right[0]
            j = left[0]
            if u[n - i :] != v[:i]:
                record(u, v, f"length-{i} right-border does not match")
                continue
            if u[:j] != v[n - j :]:
                record(u, v, f"length-{j} left-border does not match")
                continue
            if i + j <= n:
                if not is_unb(v[:i]):
                    record(u, v, f"disjoint case: so(u,v) of length {i} is bordered")
                if not is_unb(u[:j]):
                    record(u, v, f"disjoint case: so(v,u) of length {j} is bordered")
                continue
            if i + j > bound:
                record(u, v, f"overlap sum {i + j} exceeds floor(4n/3) = {bound}")
                continue
            p = i + j - n
            if i < 2 * p or j < 2 * p:
                record(u, v, f"interleaved case: ends of length {p} collide")
                continue
            x = u[:p]
            y = v[:p]
            s = u[p : j - p]
            t = u[j : n - p]
            shape_ok = (
                u == x + s + y + t + x
                and v == y + t + x + s + y
                and x != y
                and _shortest_overlap(x, y) == 0
                and _shortest_overlap(y, x) == 0
                and is_unb(x + s + y)
                and is_unb(y + t + x)
            )
            if not shape_ok:
                record(u, v, f"interleaved factorization failed for i={i}, j={j}")
    return ViolationReport(checked=checked, violations=tuple(violations))


def max_overlap_sum(k: int, n: int, *, budget: int | None = None) -> int:
    """Largest lso(u, v) + lso(v, u) over all pairs of length-n words.

    The sum is symmetric under swapping u and v, so only unordered pairs
    are scanned.  The result never exceeds floor(4n/3).
    """
    _validate_kn(k, n)
    ensure_within_budget(k ** (2 * n), budget)
    words = list(product(range(k), repeat=n))
    best = 0
    for a, u in enumerate(words):
        for b in range(a, len(words)):
            v = words[b]
            total = _shortest_overlap(u, v) + _shortest_overlap(v, u)
            if total > best:
                best = total
    return best


def census_by_lso(k: int, n: int, *, budget: int | None = None) -> dict[int, int]:
    """Histogram of lso(u, v) over all ordered pairs of length-n words.

    Keys run over 0..n-1 even when a bucket is empty.
    """
    _validate_kn(k, n)
    ensure_within_budget(k ** (2 * n), budget)
    words = list(product(range(k), repeat=n))
    histogram = {i: 0 for i in range(n)}
    for u in words:
        for v in words:
            histogram[_shortest_overlap(u, v)] += 1
    return histogram


def extremal_pair(n: int) -> tuple[Word, Word]:
    """Binary pair of length n whose overlap sum reaches floor(4n/3).

    Three-block construction: u = 0^m 1^mid 0^m and v = 1^mid 0^m 1^m,
    where m = n // 3 and the middle block absorbs the remainder.  The two
    shortest overlaps then have lengths mid + m and 2m.
    """
    if n < 3:
        raise InvalidInputError(f"extremal construction needs n >= 3, got {n}")
    m, r = divmod(n, 3)
    mid = m + r
    u = (0,) * m + (1,) * mid + (0,) * m
    v = (1,) * mid + (0,) * m + (1,) * m
    alphabet = Alphabet(2)
    return Word(u, alphabet), Word(v, alphabet)
