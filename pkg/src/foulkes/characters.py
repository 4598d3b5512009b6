"""Ground-truth character theory for S_n.

Irreducible characters come from the Murnaghan-Nakayama recursion on beta-number
sets; permutation characters induced from Young subgroups come from a cycle
assignment count.  Nothing in this module knows about the Foulkes basis, so the
rest of the package can be certified against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .combinatorics import (
    Partition,
    binom,
    check_partition,
    multiplicities,
    partitions,
)


def class_size(mu: Partition) -> int:
    """Size of the conjugacy class with cycle type mu: n! / prod(k^m_k * m_k!)."""
    mu = check_partition(mu)
    n = sum(mu)
    z = 1
    for k, m in multiplicities(mu).items():
        z *= k**m * math.factorial(m)
    return math.factorial(n) // z


def _beta_numbers(lam: Partition) -> tuple[int, ...]:
    r = len(lam)
    return tuple(lam[i] + (r - 1 - i) for i in range(r))


def _partition_from_betas(betas: tuple[int, ...]) -> Partition:
    betas = tuple(sorted(betas, reverse=True))
    r = len(betas)
    parts = tuple(b - (r - 1 - i) for i, b in enumerate(betas))
    return tuple(p for p in parts if p > 0)


def _strip_removals(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    """Shapes obtained by removing a border strip of size k, with the strip's sign."""
    betas = set(_beta_numbers(lam))
    out = []
    for b in betas:
        lower = b - k
        if lower < 0 or lower in betas:
            continue
        height = sum(1 for x in betas if lower < x < b)
        new = (betas - {b}) | {lower}
        out.append((_partition_from_betas(tuple(new)), (-1) ** height))
    return out


@cache
def irreducible_character(lam: Partition, mu: Partition) -> int:
    """Value of the irreducible character indexed by lam at cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: {lam!r} vs {mu!r}")
    if not mu:
        return 1
    total = 0
    for shape, sign in _strip_removals(lam, mu[0]):
        total += sign * irreducible_character(shape, mu[1:])
    return total


@dataclass(frozen=True)
class CharacterTable:
    """Square array of irreducible character values, rows and columns in canonical order."""

    n: int
    parts: tuple[Partition, ...]
    rows: tuple[tuple[int, ...], ...]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.rows[self.parts.index(lam)][self.parts.index(mu)]

    def row(self, lam: Partition) -> dict[Partition, int]:
        vals = self.rows[self.parts.index(lam)]
        return dict(zip(self.parts, vals))

    def degrees(self) -> dict[Partition, int]:
        identity = self.parts.index((1,) * self.n)
        return {lam: self.rows[i][identity] for i, lam in enumerate(self.parts)}


@cache
def character_table(n: int) -> CharacterTable:
    parts = tuple(partitions(n))
    rows = tuple(
        tuple(irreducible_character(lam, mu) for mu in parts) for lam in parts
    )
    return CharacterTable(n=n, parts=parts, rows=rows)


@dataclass
class ClassFunction:
    """Rational-valued function on the conjugacy classes of S_n, keyed by cycle type."""

    n: int
    values: dict[Partition, Fraction]

    def __post_init__(self):
        expected = partitions(self.n)
        if sorted(self.values) != sorted(expected):
            raise ValueError(f"need exactly one value per partition of {self.n}")
        self.values = {mu: Fraction(v) for mu, v in self.values.items()}

    def __call__(self, mu: Partition) -> Fraction:
        return self.values[tuple(mu)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("mismatched n")
        return ClassFunction(self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __rmul__(self, scalar) -> "ClassFunction":
        scalar = Fraction(scalar)
        return ClassFunction(self.n, {mu: scalar * v for mu, v in self.values.items()})

    def depends_only_on_cycle_count(self) -> bool:
        by_count: dict[int, Fraction] = {}
        for mu, v in self.values.items():
            if by_count.setdefault(len(mu), v) != v:
                return False
        return True


def zero_class_function(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: Fraction(0) for mu in partitions(n)})


def irreducible_class_function(lam: Partition) -> ClassFunction:
    lam = check_partition(lam)
    n = sum(lam)
    return ClassFunction(n, {mu: Fraction(irreducible_character(lam, mu)) for mu in partitions(n)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Standard inner product (1/n!) sum_mu |C_mu| f(mu) g(mu).

    All character values of S_n are rational, so no conjugation is involved.
    """
    if f.n != g.n:
        raise ValueError("mismatched n")
    total = sum(class_size(mu) * f.values[mu] * g.values[mu] for mu in f.values)
    return Fraction(total, math.factorial(f.n))


def _hooks_and_contents(lam: Partition) -> list[tuple[int, int]]:
    col_heights = [0] * (lam[0] if lam else 0)
    for row_len in lam:
        for c in range(row_len):
            col_heights[c] += 1
    cells = []
    for r, row_len in enumerate(lam):
        for c in range(row_len):
            arm = row_len - c - 1
            leg = col_heights[c] - r - 1
            cells.append((arm + leg + 1, c - r))
    return cells


def gamma_multiplicity(i: int, lam: Partition) -> int:
    """Multiplicity of the irreducible lam in the rank-(i+1) tensor-power character.

    Computed as the hook/content product over the diagram of lam: prod (i+1+c)/h.
    The result is guaranteed (and checked) to be a non-negative integer.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if not 0 <= i <= n - 1:
        raise ValueError(f"need 0 <= i <= n-1, got i={i}")
    value = Fraction(1)
    for hook, content in _hooks_and_contents(lam):
        value *= Fraction(i + 1 + content, hook)
    if value.denominator != 1 or value < 0:
        raise AssertionError(f"hook-content product not a non-negative integer: {value}")
    return int(value)


@cache
def _assignment_count(cycle_mults: tuple[tuple[int, int], ...], parts: Partition) -> int:
    # Number of ways to distribute cycles (grouped as (length, count) pairs) among
    # the parts so that the lengths assigned to part i sum to parts[i].
    if not parts:
        return 1 if all(m == 0 for _, m in cycle_mults) else 0
    total = 0

    def fill_first_part(idx: int, remaining: int, ways: int, picked: tuple[int, ...]):
        nonlocal total
        if remaining == 0:
            padded = picked + (0,) * (len(cycle_mults) - len(picked))
            rest = tuple((k, m - c) for (k, m), c in zip(cycle_mults, padded))
            total += ways * _assignment_count(rest, parts[1:])
            return
        if idx >= len(cycle_mults):
            return
        k, m = cycle_mults[idx]
        for c in range(min(m, remaining // k) + 1):
            fill_first_part(idx + 1, remaining - k * c, ways * binom(m, c), picked + (c,))

    fill_first_part(0, parts[0], 1, ())
    return total


def induced_trivial(lam: Partition) -> ClassFunction:
    """Character of S_n permuting the cosets of the Young subgroup of shape lam.

    The value at cycle type mu counts the ways to split the cycles of a permutation
    of type mu into an ordered tuple of groups with total lengths lam.
    """
    lam = check_partition(lam)
    n = sum(lam)
    values = {}
    for mu in partitions(n):
        mults = tuple(sorted(multiplicities(mu).items()))
        values[mu] = Fraction(_assignment_count(mults, lam))
    return ClassFunction(n, values)


@dataclass
class HCombination:
    """Formal rational combination of complete homogeneous symmetric functions h_lam."""

    n: int
    coeffs: dict[Partition, Fraction]

    def __post_init__(self):
        for lam in self.coeffs:
            check_partition(lam, self.n)
        self.coeffs = {lam: Fraction(c) for lam, c in self.coeffs.items()}

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs.values())


def h_to_class_function(comb: HCombination) -> ClassFunction:
    """Class function corresponding to an h-combination (inverse Frobenius characteristic)."""
    result = zero_class_function(comb.n)
    for lam, c in sorted(comb.coeffs.items(), reverse=True):
        if c:
            result = result + c * induced_trivial(lam)
    return result


def _class_representative(mu: Partition) -> tuple[int, ...]:
    # One-line word made of concatenated cycles of the given lengths, 0-based.
    word = []
    start = 0
    for part in mu:
        word.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(word)


def _ordered_set_partitions(items: tuple[int, ...], sizes: Partition):
    if not sizes:
        yield ()
        return
    import itertools as _it

    first, rest = sizes[0], sizes[1:]
    for block in _it.combinations(items, first):
        remaining = tuple(x for x in items if x not in block)
        for tail in _ordered_set_partitions(remaining, rest):
            yield (frozenset(block),) + tail


@cache
def brute_force_character_table(n: int) -> CharacterTable:
    """Character table built without the border-strip recursion.

    Traces of the actions on tabloids (ordered set partitions with row sizes lam)
    are computed by literal fixed-point counting, then irreducibles are peeled
    off in canonical order; the leading multiplicity is always 1.  Factorial
    cost, intended only as the small-n certification of ``character_table``.
    """
    parts = tuple(partitions(n))
    reps = {mu: _class_representative(mu) for mu in parts}
    sizes = {mu: class_size(mu) for mu in parts}
    n_fact = math.factorial(n)

    def tabloid_trace(lam: Partition, word: tuple[int, ...]) -> int:
        fixed = 0
        for blocks in _ordered_set_partitions(tuple(range(n)), lam):
            if all(frozenset(word[x] for x in block) == block for block in blocks):
                fixed += 1
        return fixed

    def ip(f: dict, g: dict) -> Fraction:
        return Fraction(sum(sizes[mu] * f[mu] * g[mu] for mu in parts), n_fact)

    extracted: list[dict[Partition, int]] = []
    for lam in parts:
        current = {mu: Fraction(tabloid_trace(lam, reps[mu])) for mu in parts}
        for prior in extracted:
            m = ip(current, prior)
            if m:
                current = {mu: current[mu] - m * prior[mu] for mu in parts}
        if ip(current, current) != 1:
            raise AssertionError(f"peeling did not isolate an irreducible at {lam}")
        extracted.append({mu: int(v) for mu, v in current.items()})

    rows = tuple(tuple(row[mu] for mu in parts) for row in extracted)
    return CharacterTable(n=n, parts=parts, rows=rows)


@dataclass(frozen=True)
class CharacterCertificate:
    """Outcome of the genuine-character test, with the full multiplicity list."""

    ok: bool
    multiplicities: tuple[tuple[Partition, Fraction], ...]

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.multiplicities)

    def failing(self) -> list[tuple[Partition, Fraction]]:
        return [(lam, m) for lam, m in self.multiplicities if m.denominator != 1 or m < 0]


def is_genuine_character(f: ClassFunction) -> CharacterCertificate:
    """Decide whether f decomposes into irreducibles with non-negative integer multiplicities."""
    mults = []
    ok = True
    for lam in partitions(f.n):
        m = inner_product(f, irreducible_class_function(lam))
        mults.append((lam, m))
        if m.denominator != 1 or m < 0:
            ok = False
    return CharacterCertificate(ok=ok, multiplicities=tuple(mults))
