"""Exact enumerative combinatorics: partitions, binomials, descents, Eulerian numbers.

All arithmetic is exact (unbounded ints, ``fractions.Fraction``).  Partitions are
plain tuples of weakly decreasing positive ints; permutations are one-line tuples
over 1..n.  Everything here is pure and safe for concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache, reduce
from typing import Iterator

Partition = tuple[int, ...]
PermutationWord = tuple[int, ...]


def binom(u: int, v: int) -> int:
    """Binomial coefficient with the vanishing convention: 0 unless u >= v >= 0."""
    if v < 0 or v > u:
        return 0
    return math.comb(u, v)


def sign_pow(e: int) -> int:
    """(-1)**e as an exact int, valid for negative e as well."""
    return -1 if e % 2 else 1


def is_partition(parts: tuple) -> bool:
    """True if ``parts`` is a weakly decreasing tuple of positive integers."""
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: Partition, n: int | None = None) -> Partition:
    """Validate a partition (optionally of a given total) and return it as a tuple."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    if n is not None and sum(parts) != n:
        raise ValueError(f"partition {parts!r} does not sum to {n}")
    return parts


def partitions(n: int) -> list[Partition]:
    """All partitions of n in canonical order: reverse-lexicographic, (n) first, (1^n) last."""
    return list(_iter_partitions(n))


@cache
def _iter_partitions(n: int) -> tuple[Partition, ...]:
    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(gen(n, n))


def partitions_by_length(n: int, k: int) -> list[Partition]:
    """Partitions of n with exactly k parts, canonical (reverse-lex) order."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return [lam for lam in _iter_partitions(n) if len(lam) == k]


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part value -> number of parts of that value."""
    counts: dict[int, int] = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    return counts


def multiplicity_multinomial(lam: Partition) -> int:
    """len(lam)! / prod_k m_k!, the number of distinct orderings of the parts."""
    result = math.factorial(len(lam))
    for m in multiplicities(lam).values():
        result //= math.factorial(m)
    return result


def multinomial_gcd(n: int, k: int, verify: bool = False) -> int:
    """gcd of multiplicity multinomials over all partitions of n with exactly k parts.

    The closed form is k // gcd(n, k).  With ``verify=True`` the gcd is also
    computed by direct enumeration and the two are required to agree.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    d = k // math.gcd(n, k)
    if verify:
        enumerated = reduce(
            math.gcd, (multiplicity_multinomial(lam) for lam in partitions_by_length(n, k))
        )
        if enumerated != d:
            raise AssertionError(
                f"multinomial gcd mismatch at n={n}, k={k}: enumerated {enumerated}, closed form {d}"
            )
    return d


@cache
def _eulerian_row(n: int) -> tuple[int, ...]:
    # A(n, i) = (i+1) A(n-1, i) + (n-i) A(n-1, i-1)
    if n == 1:
        return (1,)
    prev = _eulerian_row(n - 1)

    def at(i: int) -> int:
        return prev[i] if 0 <= i <= n - 2 else 0

    return tuple((i + 1) * at(i) + (n - i) * at(i - 1) for i in range(n))


def eulerian(n: int, i: int) -> int:
    """Number of permutations of S_n with exactly i descents; 0 outside 0 <= i <= n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    if i < 0 or i > n - 1:
        return 0
    return _eulerian_row(n)[i]


def check_permutation(word: PermutationWord) -> PermutationWord:
    """Validate one-line notation over 1..n."""
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word!r}")
    return word


def descent_count(word: PermutationWord) -> int:
    """Number of positions i with word[i] > word[i+1]."""
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def cycle_type(word: PermutationWord) -> Partition:
    """Cycle type of a one-line permutation, as a canonical partition."""
    n = len(word)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = word[j] - 1
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def cycle_count(word: PermutationWord) -> int:
    """Number of cycles, fixed points included."""
    return len(cycle_type(word))


def floor_frac(r: Fraction | int) -> tuple[int, Fraction]:
    """Split r = floor + frac with frac in [0, 1); floor is taken toward -infinity."""
    r = Fraction(r)
    fl = math.floor(r)
    return fl, r - fl


def frac(r: Fraction | int) -> Fraction:
    """Fractional part in [0, 1), also for negative r."""
    return floor_frac(r)[1]
