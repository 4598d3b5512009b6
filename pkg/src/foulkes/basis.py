"""The four bases of the space of class functions of S_n that depend only on cycle count.

Tags used throughout (and in serialized output):

* ``phi``   - the Foulkes characters, indexed 0..n-1;
* ``gamma`` - the tensor-power characters, value (k+1)**L at cycle count L;
* ``psi``   - the alternating-sum basis with h-expansion supported on a single length;
* ``omega`` - psi divided by the elementary divisor, an integral basis of the
  lattice of virtual characters depending only on cycle count.

Coordinates convert through explicit binomial matrices; ``phi_coords`` instead
goes through the character-table oracle so the two routes stay independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .characters import (
    ClassFunction,
    HCombination,
    character_table,
    inner_product,
    irreducible_class_function,
)
from .combinatorics import (
    Partition,
    binom,
    multiplicity_multinomial,
    partitions,
    partitions_by_length,
    sign_pow,
)

BASIS_TAGS = ("phi", "gamma", "psi", "omega")


@dataclass(frozen=True)
class LengthVector:
    """Element of the n-dimensional space of class functions depending only on cycle count.

    ``values[L-1]`` is the value at any permutation with L cycles.
    """

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.n:
            raise ValueError(f"need {self.n} values, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def at_count(self, length: int) -> Fraction:
        if not 1 <= length <= self.n:
            raise ValueError(f"cycle count must be in 1..{self.n}")
        return self.values[length - 1]

    def lift(self) -> ClassFunction:
        """Expand to a function on all conjugacy classes."""
        return ClassFunction(
            self.n, {mu: self.values[len(mu) - 1] for mu in partitions(self.n)}
        )

    def __add__(self, other: "LengthVector") -> "LengthVector":
        if self.n != other.n:
            raise ValueError("mismatched n")
        return LengthVector(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "LengthVector") -> "LengthVector":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "LengthVector":
        scalar = Fraction(scalar)
        return LengthVector(self.n, tuple(scalar * v for v in self.values))


def length_vector_from_class_function(f: ClassFunction) -> LengthVector:
    """Inverse of ``lift``; rejects functions that do not depend only on cycle count."""
    if not f.depends_only_on_cycle_count():
        raise ValueError("class function does not depend only on cycle count")
    values = [Fraction(0)] * f.n
    for mu, v in f.values.items():
        values[len(mu) - 1] = v
    return LengthVector(f.n, tuple(values))


@dataclass(frozen=True)
class BasisCoords:
    """Coordinates of a length-dependent class function in one of the four bases."""

    n: int
    basis: str
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if self.basis not in BASIS_TAGS:
            raise ValueError(f"unknown basis tag {self.basis!r}")
        if len(self.coords) != self.n:
            raise ValueError(f"need {self.n} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))


def elementary_divisor(n: int, k: int) -> int:
    """k // gcd(n, k): the order of the k-th cyclic factor of the quotient of the
    integral lattice by the Foulkes lattice (1-based k)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    return k // math.gcd(n, k)


def _check_index(n: int, i: int):
    if not 0 <= i <= n - 1:
        raise ValueError(f"basis index must be in 0..{n - 1}, got {i}")


def gamma_vector(n: int, k: int) -> LengthVector:
    """The character with value (k+1)**L at cycle count L."""
    _check_index(n, k)
    return LengthVector(n, tuple(Fraction((k + 1) ** L) for L in range(1, n + 1)))


def phi_vector(n: int, i: int) -> LengthVector:
    """Foulkes character: sum_j (-1)^(i-j) C(n+1, i-j) (j+1)**L."""
    _check_index(n, i)
    return LengthVector(
        n,
        tuple(
            Fraction(
                sum(sign_pow(i - j) * binom(n + 1, i - j) * (j + 1) ** L for j in range(n))
            )
            for L in range(1, n + 1)
        ),
    )


def psi_vector(n: int, i: int) -> LengthVector:
    """Basis vector sum_j (-1)^(i-j) C(i+1, i-j) (j+1)**L."""
    _check_index(n, i)
    return LengthVector(
        n,
        tuple(
            Fraction(
                sum(sign_pow(i - j) * binom(i + 1, i - j) * (j + 1) ** L for j in range(n))
            )
            for L in range(1, n + 1)
        ),
    )


def omega_vector(n: int, k: int) -> LengthVector:
    """psi_k divided by the (k+1)-st elementary divisor; integral and genuine."""
    _check_index(n, k)
    return Fraction(1, elementary_divisor(n, k + 1)) * psi_vector(n, k)


def basis_vector(n: int, tag: str, i: int) -> LengthVector:
    return {
        "phi": phi_vector,
        "gamma": gamma_vector,
        "psi": psi_vector,
        "omega": omega_vector,
    }[tag](n, i)


def regular_vector(n: int) -> LengthVector:
    """The regular character: n! at cycle count n, zero elsewhere."""
    vals = [Fraction(0)] * n
    vals[n - 1] = Fraction(math.factorial(n))
    return LengthVector(n, tuple(vals))


# Expansion coefficients E[i][j] with basis_vector(src, i) = sum_j E[i][j] * basis_vector(dst, j).
# Coordinates then transform by the transpose.
def _expansion(n: int, src: str, dst: str):
    if src == dst:
        return [[Fraction(i == j) for j in range(n)] for i in range(n)]
    pair = (src, dst)
    if pair == ("phi", "gamma"):
        return [[Fraction(sign_pow(i - j) * binom(n + 1, i - j)) for j in range(n)] for i in range(n)]
    if pair == ("gamma", "phi"):
        return [[Fraction(binom(n + i - j, i - j)) for j in range(n)] for i in range(n)]
    if pair == ("psi", "gamma"):
        return [[Fraction(sign_pow(i - j) * binom(i + 1, i - j)) for j in range(n)] for i in range(n)]
    if pair == ("gamma", "psi"):
        return [[Fraction(binom(i + 1, i - j)) for j in range(n)] for i in range(n)]
    if pair == ("phi", "psi"):
        return [[Fraction(sign_pow(i - j) * binom(n - j - 1, i - j)) for j in range(n)] for i in range(n)]
    if pair == ("psi", "phi"):
        return [[Fraction(binom(n - j - 1, i - j)) for j in range(n)] for i in range(n)]
    if src == "omega":
        # omega_i = psi_i / d_{i+1}
        scaled = _expansion(n, "psi", dst)
        return [
            [row_val / elementary_divisor(n, i + 1) for row_val in scaled[i]] for i in range(n)
        ]
    if dst == "omega":
        expanded = _expansion(n, src, "psi")
        return [
            [expanded[i][j] * elementary_divisor(n, j + 1) for j in range(n)] for i in range(n)
        ]
    raise AssertionError(f"unhandled conversion {src} -> {dst}")


@cache
def change_of_basis(n: int, src: str, dst: str) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix M with (coords in dst) = M @ (coords in src)."""
    if src not in BASIS_TAGS or dst not in BASIS_TAGS:
        raise ValueError(f"unknown basis tag in {src!r} -> {dst!r}")
    exp = _expansion(n, src, dst)
    return tuple(tuple(exp[i][j] for i in range(n)) for j in range(n))


def convert_coords(coords: BasisCoords, dst: str) -> BasisCoords:
    matrix = change_of_basis(coords.n, coords.basis, dst)
    new = tuple(
        sum((row[i] * coords.coords[i] for i in range(coords.n)), Fraction(0)) for row in matrix
    )
    return BasisCoords(coords.n, dst, new)


def coords_to_vector(coords: BasisCoords) -> LengthVector:
    """Evaluate the coordinate combination as a concrete length vector."""
    total = LengthVector(coords.n, tuple(Fraction(0) for _ in range(coords.n)))
    for i, c in enumerate(coords.coords):
        if c:
            total = total + c * basis_vector(coords.n, coords.basis, i)
    return total


def hook_partition(n: int, i: int) -> Partition:
    """The hook shape (n-i, 1, ..., 1) with i trailing ones."""
    _check_index(n, i)
    return (n - i,) + (1,) * i


def phi_coords(theta: LengthVector) -> BasisCoords:
    """Coordinates in the Foulkes basis, computed through the character-table oracle.

    The i-th coordinate is the multiplicity of the hook irreducible (n-i, 1^i)
    divided by its degree C(n-1, i); this reconstructs theta exactly.
    """
    n = theta.n
    lifted = theta.lift()
    coords = []
    for i in range(n):
        hook = irreducible_class_function(hook_partition(n, i))
        coords.append(inner_product(lifted, hook) / binom(n - 1, i))
    return BasisCoords(n, "phi", tuple(coords))


def psi_h_expansion(n: int, k: int) -> HCombination:
    """h-expansion of psi_k: multiplicity multinomial times h_lam over partitions
    with exactly k+1 parts."""
    _check_index(n, k)
    coeffs = {
        lam: Fraction(multiplicity_multinomial(lam))
        for lam in partitions_by_length(n, k + 1)
    }
    return HCombination(n, coeffs)


def gamma_h_expansion(n: int, j: int) -> HCombination:
    """h-expansion of gamma_j: C(j+1, len(lam)) * multinomial over all partitions."""
    _check_index(n, j)
    coeffs = {}
    for lam in partitions(n):
        c = binom(j + 1, len(lam)) * multiplicity_multinomial(lam)
        if c:
            coeffs[lam] = Fraction(c)
    return HCombination(n, coeffs)


def restrict_length(theta: LengthVector) -> LengthVector:
    """Restriction to S_{n-1}: dropping a fixed point raises the cycle count by one."""
    if theta.n < 2:
        raise ValueError("restriction needs n >= 2")
    return LengthVector(theta.n - 1, theta.values[1:])


@cache
def phi_multiplicity_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer matrix T with T[r][i] = multiplicity of the r-th irreducible
    (canonical order) in phi_i.  Backs the bulk genuine-character checks."""
    table = character_table(n)
    lifted = [phi_vector(n, i).lift() for i in range(n)]
    out = []
    for lam in table.parts:
        chi = irreducible_class_function(lam)
        row = []
        for i in range(n):
            m = inner_product(lifted[i], chi)
            if m.denominator != 1:
                raise AssertionError(f"non-integral Foulkes multiplicity at n={n}: {m}")
            row.append(int(m))
        out.append(tuple(row))
    return tuple(out)


def phi_coords_multiplicities(coords: BasisCoords) -> list[tuple[Partition, Fraction]]:
    """Irreducible multiplicities of a vector given in Foulkes coordinates.

    Same numbers ``is_genuine_character`` would produce on the lifted vector, but
    via one cached integer matrix per n, so domain-sized sweeps stay fast.
    """
    if coords.basis != "phi":
        coords = convert_coords(coords, "phi")
    matrix = phi_multiplicity_matrix(coords.n)
    parts = character_table(coords.n).parts
    return [
        (lam, sum((Fraction(row[i]) * coords.coords[i] for i in range(coords.n)), Fraction(0)))
        for lam, row in zip(parts, matrix)
    ]


def is_genuine_phi_coords(coords: BasisCoords) -> bool:
    return all(
        m.denominator == 1 and m >= 0 for _, m in phi_coords_multiplicities(coords)
    )
