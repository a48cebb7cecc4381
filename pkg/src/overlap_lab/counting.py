"""Exact counts of unbordered words and of bordered or overlapping pairs.

Counts are plain Python integers, so they stay exact at any size;
expectations are fractions.Fraction values.  No floating point is used
anywhere in this module.

The building blocks:

* unbordered_count(k, n): Nielsen's recurrence for the number u_n of
  length-n unbordered words: u_0 = 1, u_n = k*u_(n-1) for odd n, and
  u_n = k*u_(n-1) - u_(n/2) for even n > 0.
* bordered_count(k, n): classify bordered words by the length i of their
  shortest border, which is itself unbordered and at most n/2 long, then
  sum u_i * k^(n-2i).  The total equals k^n - u_n.
* g_count(k, t, n): length-n unbordered words whose length-t prefix and
  suffix realize a fixed mutually unbordered pair of distinct words.  The
  count depends only on t, not on the pair chosen: it is zero below
  n = 2t and otherwise k^(n-2t) minus the words whose shortest border
  keeps the same ends.
* mutually_bordered_count(k, n) and friends split all ordered pairs by
  i + j, with i = lso(u, v) and j = lso(v, u).  Pairs with i + j <= n
  factor as u = x s y, v = y t x where x, y are unbordered of lengths j
  and i, giving a double sum of u_i * u_j * k^(2n - 2(i+j)).  Pairs with
  i + j > n are forced into the interleaved shape u = x s y t x,
  v = y t x s y, seeded by a mutually unbordered pair of distinct words
  of length p = i + j - n <= n/3 and counted through g_count.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import InvalidInputError


class CountCache:
    """Memoized count tables for one alphabet size.

    Memoization is semantically transparent: a warm cache returns exactly
    what a cold one would.  Instances may be shared between threads; table
    fills happen under an internal lock.
    """

    def __init__(self, k: int):
        if k < 1:
            raise InvalidInputError(f"alphabet size must be at least 1, got {k}")
        self.k = k
        self._lock = threading.RLock()
        self._unbordered: list[int] = [1]
        self._g_tables: dict[int, list[int]] = {}
        self._mutual: dict[int, int] = {}
        self._right: dict[int, int] = {}
        self._neither: dict[int, int] = {}

    def unbordered(self, n: int) -> int:
        if n < 0:
            raise InvalidInputError(f"length must be non-negative, got {n}")
        with self._lock:
            return self._unbordered_locked(n)

    def g(self, t: int, n: int) -> int:
        if t < 1 or n < t:
            raise InvalidInputError(f"need 1 <= t <= n, got t={t}, n={n}")
        with self._lock:
            return self._g_locked(t, n)

    def mutually_bordered(self, n: int) -> int:
        with self._lock:
            self._ensure_pairs_locked(n)
            return self._mutual[n]

    def right_bordered(self, n: int) -> int:
        with self._lock:
            self._ensure_pairs_locked(n)
            return self._right[n]

    def mutually_unbordered(self, n: int) -> int:
        with self._lock:
            self._ensure_pairs_locked(n)
            return self._neither[n]

    def _unbordered_locked(self, n: int) -> int:
        tbl = self._unbordered
        k = self.k
        while len(tbl) <= n:
            m = len(tbl)
            value = k * tbl[m - 1]
            if m % 2 == 0:
                value -= tbl[m // 2]
            tbl.append(value)
        return tbl[n]

    def _g_locked(self, t: int, n: int) -> int:
        # index by n; entries below 2t are zero because a shorter word
        # cannot hold both ends of a mutually unbordered pair
        tbl = self._g_tables.setdefault(t, [0] * (2 * t))
        k = self.k
        while len(tbl) <= n:
            m = len(tbl)
            value = k ** (m - 2 * t)
            for i in range(2 * t, m // 2 + 1):
                value -= tbl[i] * k ** (m - 2 * i)
            tbl.append(value)
        return tbl[n]

    def _ensure_pairs_locked(self, n: int) -> None:
        if n < 1:
            raise InvalidInputError(f"length must be at least 1, got {n}")
        k = self.k
        for j in range(1, n + 1):
            if j in self._mutual:
                continue
            # close pairs: overlap lengths a = lso(u,v), b = lso(v,u) with
            # a + b <= j; the two shortest overlaps are disjoint unbordered
            # blocks and the middles are free
            close = 0
            for a in range(1, j):
                u_a = self._unbordered_locked(a)
                for b in range(1, j - a + 1):
                    close += u_a * self._unbordered_locked(b) * k ** (2 * j - 2 * (a + b))
            # far pairs: a + b > j; seeded by an ordered mutually unbordered
            # pair of distinct length-p words sitting at both ends
            far = 0
            for p in range(1, j // 3 + 1):
                seeds = self._neither[p] - self._unbordered_locked(p)
                if seeds == 0:
                    continue
                halves = 0
                for l in range(2 * p, j - p + 1):
                    halves += self._g_locked(p, l) * self._g_locked(p, j - l + p)
                far += seeds * halves
            mutual = close + far
            with_right = sum(
                k ** (2 * j - 2 * i) * self._unbordered_locked(i) for i in range(1, j)
            )
            self._mutual[j] = mutual
            self._right[j] = with_right - mutual
            self._neither[j] = k ** (2 * j) - 2 * self._right[j] - mutual


def _resolve_cache(k: int, cache: CountCache | None) -> CountCache:
    if cache is None:
        return CountCache(k)
    if cache.k != k:
        raise InvalidInputError(f"cache was built for k={cache.k}, called with k={k}")
    return cache


def _require_positive_length(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"length must be at least 1, got {n}")


def unbordered_count(k: int, n: int, *, cache: CountCache | None = None) -> int:
    """Number u_n of length-n unbordered words over k symbols."""
    return _resolve_cache(k, cache).unbordered(n)


def bordered_count(k: int, n: int, *, cache: CountCache | None = None) -> int:
    """Number of length-n bordered words, summed over the shortest border.

    Evaluates sum_i u_i * k^(n-2i) for 1 <= i <= n/2, which also equals
    k^n - unbordered_count(k, n).
    """
    _require_positive_length(n)
    c = _resolve_cache(k, cache)
    return sum(c.unbordered(i) * k ** (n - 2 * i) for i in range(1, n // 2 + 1))


def g_count(k: int, t: int, n: int, *, cache: CountCache | None = None) -> int:
    """Length-n unbordered words with both ends pinned to a seed pair.

    Counts unbordered words whose length-t prefix and length-t suffix are
    the two halves of a fixed mutually unbordered pair of distinct words.
    The result depends only on t: zero when n < 2t (the ends would overlap
    and border each other), k^(n-2t) minus the bordered completions after.
    """
    return _resolve_cache(k, cache).g(t, n)


def mutually_bordered_count(k: int, n: int, *, cache: CountCache | None = None) -> int:
    """Ordered pairs of length-n words with a right- and a left-border."""
    _require_positive_length(n)
    return _resolve_cache(k, cache).mutually_bordered(n)


def right_bordered_count(k: int, n: int, *, cache: CountCache | None = None) -> int:
    """Ordered pairs of length-n words with a right-border but no left-border."""
    _require_positive_length(n)
    return _resolve_cache(k, cache).right_bordered(n)


def mutually_unbordered_count(k: int, n: int, *, cache: CountCache | None = None) -> int:
    """Ordered pairs of length-n words with no border in either direction."""
    _require_positive_length(n)
    return _resolve_cache(k, cache).mutually_unbordered(n)


def s_count(k: int, i: int, n: int, *, cache: CountCache | None = None) -> int:
    """Ordered pairs of length-n words with lso(u, v) exactly i.

    The shortest right-border is an unbordered word of length i shared by
    u's tail and v's head, and the remaining symbols are free, giving
    u_i * k^(2(n-i)).  Only proper overlaps qualify, so 1 <= i <= n - 1.
    """
    _require_positive_length(n)
    if not 1 <= i <= n - 1:
        raise InvalidInputError(f"overlap length must be in 1..{n - 1}, got {i}")
    c = _resolve_cache(k, cache)
    return c.unbordered(i) * k ** (2 * (n - i))


def expected_lso_finite(k: int, n: int, *, cache: CountCache | None = None) -> Fraction:
    """Exact mean of lso(u, v) over uniform ordered pairs of length n."""
    _require_positive_length(n)
    c = _resolve_cache(k, cache)
    total = sum(i * c.unbordered(i) * k ** (2 * (n - i)) for i in range(1, n))
    return Fraction(total, k ** (2 * n))
