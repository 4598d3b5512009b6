"""Products of Foulkes characters and the expected-intersection inner product.

The structure constants of the pointwise product come from three routes that
must agree: an explicit double alternating sum, a literal count over pairs of
permutations with prescribed descent numbers, and re-expanding the pointwise
product through the character-table oracle.  The permutation count is the only
quadratic-in-n! piece, so it is vectorized with numpy and capped by default.

Convention for composing permutations: (x @ y)(t) = x(y(t)).  The brute-force
count checks that the result is the same for every target permutation with the
given descent number, which also makes the convention choice unobservable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

import numpy as np

from .basis import LengthVector, phi_coords, phi_vector
from .characters import character_table, class_size
from .combinatorics import Partition, binom, partitions, sign_pow

BRUTE_CAP_DEFAULT = 7


@dataclass(frozen=True)
class StructureConstants:
    """Tensor c[i][j][k] with phi_i * phi_j = sum_k c[i][j][k] phi_k."""

    n: int
    tensor: tuple[tuple[tuple[int, ...], ...], ...]

    def vector(self, i: int, j: int) -> tuple[int, ...]:
        return self.tensor[i][j]


def product_constants_formula(n: int, i: int, j: int) -> tuple[int, ...]:
    """Closed-form structure constants of phi_i * phi_j, as a vector over k."""
    _check_pair(n, i, j)
    out = []
    for k in range(n):
        total = 0
        for u in range(i + 1):
            cu = sign_pow(i - u) * binom(n + 1, i - u)
            if cu == 0:
                continue
            for v in range(j + 1):
                cv = sign_pow(j - v) * binom(n + 1, j - v)
                if cv == 0:
                    continue
                total += cu * cv * binom(u * v + u + v + n - k, n)
        if total < 0:
            raise AssertionError(f"negative structure constant at n={n}, ({i},{j},{k})")
        out.append(total)
    return tuple(out)


def product_constants_from_values(n: int, i: int, j: int) -> tuple[int, ...]:
    """Structure constants read off the pointwise product via oracle coordinates."""
    _check_pair(n, i, j)
    a, b = phi_vector(n, i), phi_vector(n, j)
    product = LengthVector(n, tuple(x * y for x, y in zip(a.values, b.values)))
    coords = phi_coords(product).coords
    if any(c.denominator != 1 for c in coords):
        raise AssertionError(f"product coordinates not integral at n={n}, ({i},{j})")
    return tuple(int(c) for c in coords)


def _check_pair(n: int, i: int, j: int):
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        raise ValueError(f"indices must be in 0..{n - 1}, got ({i}, {j})")


@cache
def _brute_tensor(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Full (i, j, k) tensor from literal enumeration of all n! * n! products.

    For every pair (x, y) with descents (i, j), the product x @ y lands on some
    z; the count of pairs landing on a fixed z must be the same for every z with
    the same descent number, which is asserted before collapsing.
    """
    perms = list(itertools.permutations(range(n)))
    count = len(perms)
    words = np.array(perms, dtype=np.int16)
    descents = (words[:, :-1] > words[:, 1:]).sum(axis=1).astype(np.int64)
    index_of = {p: idx for idx, p in enumerate(perms)}
    inverse_index = np.empty(count, dtype=np.int64)
    for idx, p in enumerate(perms):
        inv = [0] * n
        for t, v in enumerate(p):
            inv[v] = t
        inverse_index[idx] = index_of[tuple(inv)]

    # pair_counts[z, i, j] = #{(x, y) : des x = i, des y = j, x @ y = z}
    pair_counts = np.zeros((count, n, n), dtype=np.int64)
    rows = np.arange(count)
    for w in range(count):
        # x = z @ w with w = y^{-1} ranges over all solutions of x @ y = z
        composed = words[:, words[w]]
        des_x = (composed[:, :-1] > composed[:, 1:]).sum(axis=1)
        des_y = descents[inverse_index[w]]
        pair_counts[rows, des_x, des_y] += 1

    tensor = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = []
            for k in range(n):
                values = pair_counts[descents == k, i, j]
                if values.size and (values != values[0]).any():
                    raise AssertionError(
                        f"pair count depends on the target at n={n}, (i,j,k)=({i},{j},{k})"
                    )
                vec.append(int(values[0]) if values.size else 0)
            row.append(tuple(vec))
        tensor.append(tuple(row))
    return tuple(tensor)


def product_constants_brute(
    n: int, i: int, j: int, cap: int = BRUTE_CAP_DEFAULT
) -> tuple[int, ...]:
    """Structure constants by exhaustive pair counting; refuses n above the cap."""
    _check_pair(n, i, j)
    if n > cap:
        raise ValueError(f"brute force bounded to n <= {cap} (asked for n={n})")
    return _brute_tensor(n)[i][j]


def structure_constants(n: int, method: str = "formula") -> StructureConstants:
    builder = {
        "formula": product_constants_formula,
        "values": product_constants_from_values,
        "brute": product_constants_brute,
    }[method]
    tensor = tuple(
        tuple(builder(n, i, j) for j in range(n)) for i in range(n)
    )
    return StructureConstants(n=n, tensor=tensor)


@dataclass(frozen=True)
class ClassProductDistribution:
    """Distribution of the cycle type of a product of two uniform elements drawn
    from a pair of cycle-count classes."""

    n: int
    source_counts: tuple[int, int]
    probabilities: dict[Partition, Fraction]

    def total(self) -> Fraction:
        return sum(self.probabilities.values(), Fraction(0))


@cache
def _pair_product_class_counts(n: int, mu_a: Partition, mu_b: Partition) -> dict[Partition, Fraction]:
    """N(g) = #{(a, b) in C_mu_a x C_mu_b : ab = g}, keyed by the class of g.

    Classical class-algebra evaluation through the character table; the result
    depends only on the class of g.
    """
    table = character_table(n)
    size_a, size_b = class_size(mu_a), class_size(mu_b)
    col_a = table.parts.index(mu_a)
    col_b = table.parts.index(mu_b)
    identity = table.parts.index((1,) * n)
    out = {}
    for g_idx, g in enumerate(table.parts):
        acc = Fraction(0)
        for row in table.rows:
            acc += Fraction(row[col_a] * row[col_b] * row[g_idx], row[identity])
        out[g] = Fraction(size_a * size_b, math.factorial(n)) * acc
    return out


def _length_class_members(n: int, count: int) -> list[Partition]:
    return [mu for mu in partitions(n) if len(mu) == count]


def class_product_distribution(n: int, counts: tuple[int, int] = (1, 1)) -> ClassProductDistribution:
    """Exact distribution of the class of s*t for independent uniform s, t drawn
    from the cycle-count classes given by ``counts`` (default: both full cycles)."""
    i, j = counts
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"cycle counts must be in 1..{n}, got {counts}")
    members_i = _length_class_members(n, i)
    members_j = _length_class_members(n, j)
    size_i = sum(class_size(mu) for mu in members_i)
    size_j = sum(class_size(mu) for mu in members_j)
    probabilities = {g: Fraction(0) for g in partitions(n)}
    for mu_a in members_i:
        for mu_b in members_j:
            for g, ways in _pair_product_class_counts(n, mu_a, mu_b).items():
                probabilities[g] += ways * class_size(g)
    probabilities = {g: p / (size_i * size_j) for g, p in probabilities.items()}
    dist = ClassProductDistribution(n=n, source_counts=(i, j), probabilities=probabilities)
    if dist.total() != 1:
        raise AssertionError(f"probabilities sum to {dist.total()} at n={n}")
    return dist


@cache
def expected_intersections(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix E[i-1][j-1] = expected size of the coset intersection s*C_i meet t*C_j
    over independent uniform full cycles s, t.

    Equals the expected number of factorizations of t^{-1} s through C_i x C_j,
    and t^{-1} s is distributed like a product of two independent full cycles.
    """
    dist = class_product_distribution(n, (1, 1))
    matrix = []
    for i in range(1, n + 1):
        members_i = _length_class_members(n, i)
        row = []
        for j in range(1, n + 1):
            members_j = _length_class_members(n, j)
            expectation = Fraction(0)
            for w, p in dist.probabilities.items():
                if p == 0:
                    continue
                ways = Fraction(0)
                for mu_a in members_i:
                    for mu_b in members_j:
                        ways += _pair_product_class_counts(n, mu_a, mu_b)[w]
                expectation += p * ways
            row.append(expectation)
        matrix.append(tuple(row))
    return tuple(matrix)


def intersection_inner_product(theta: LengthVector, other: LengthVector) -> Fraction:
    """Inner product (1/n!) sum_{i,j} theta(C_i) other(C_j) E|sC_i meet tC_j|.

    The Foulkes characters are orthonormal for this pairing.
    """
    if theta.n != other.n:
        raise ValueError("mismatched n")
    n = theta.n
    expectations = expected_intersections(n)
    total = Fraction(0)
    for i in range(n):
        if theta.values[i] == 0:
            continue
        for j in range(n):
            if other.values[j] == 0:
                continue
            total += theta.values[i] * other.values[j] * expectations[i][j]
    return total / math.factorial(n)


def expected_intersections_brute(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Same expectation matrix by literally averaging over all pairs of full cycles.

    Only sensible for small n; used to certify the class-algebra route.
    """
    elements = list(itertools.permutations(range(n)))

    def compose(x, y):
        return tuple(x[y[t]] for t in range(n))

    def invert(x):
        inv = [0] * n
        for t, v in enumerate(x):
            inv[v] = t
        return tuple(inv)

    def count_cycles(x) -> int:
        seen = [False] * n
        cycles = 0
        for s in range(n):
            if not seen[s]:
                cycles += 1
                t = s
                while not seen[t]:
                    seen[t] = True
                    t = x[t]
        return cycles

    full_cycles = [g for g in elements if count_cycles(g) == 1]
    totals = [[0] * n for _ in range(n)]
    for s in full_cycles:
        s_inv = invert(s)
        for t in full_cycles:
            t_inv = invert(t)
            for g in elements:
                i = count_cycles(compose(s_inv, g))
                j = count_cycles(compose(t_inv, g))
                totals[i - 1][j - 1] += 1
    pairs = len(full_cycles) ** 2
    return tuple(
        tuple(Fraction(totals[i][j], pairs) for j in range(n)) for i in range(n)
    )
