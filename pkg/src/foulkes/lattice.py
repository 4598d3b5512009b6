"""Lattice structure of the length-dependent characters.

Three nested lattices are in play: the integer span of the Foulkes characters,
the virtual characters depending only on cycle count, and all virtual
characters.  The quotient of the middle one by the Foulkes span is a product of
cyclic groups of orders ``elementary_divisor(n, k)``; enumerating coset
representatives inside the half-open fundamental box yields every genuine
character that depends only on cycle count, via the floor/fractional-part
parametrization implemented here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .basis import (
    BasisCoords,
    LengthVector,
    convert_coords,
    elementary_divisor,
    is_genuine_phi_coords,
    phi_coords_multiplicities,
)
from .characters import (
    HCombination,
    gamma_multiplicity,
    h_to_class_function,
    inner_product,
    irreducible_class_function,
    is_genuine_character,
)
from .combinatorics import (
    Partition,
    binom,
    floor_frac,
    frac,
    multiplicity_multinomial,
    partitions,
    sign_pow,
)

ParamVector = tuple[int, ...]


def check_params(n: int, a) -> ParamVector:
    a = tuple(int(x) for x in a)
    if len(a) != n:
        raise ValueError(f"need {n} parameters, got {len(a)}")
    if any(x < 0 for x in a):
        raise ValueError(f"parameters must be non-negative: {a!r}")
    return a


def theta_from_params(n: int, a) -> BasisCoords:
    """Foulkes coordinates of the character attached to a non-negative integer vector.

    Coordinate k is floor(a_k / d_{k+1}) plus the fractional part of
    sum_j C(n-k-1, j-k) a_j / d_{j+1}.  Distinct parameter vectors give distinct
    characters, and every genuine length-dependent character arises this way.
    """
    a = check_params(n, a)
    scaled = [Fraction(a[j], elementary_divisor(n, j + 1)) for j in range(n)]
    coords = []
    for k in range(n):
        whole = a[k] // elementary_divisor(n, k + 1)
        mix = sum((binom(n - k - 1, j - k) * scaled[j] for j in range(n)), Fraction(0))
        coords.append(whole + frac(mix))
    return BasisCoords(n, "phi", tuple(coords))


def params_from_theta(theta: BasisCoords) -> ParamVector:
    """Invert the parametrization on a genuine length-dependent character.

    Split off the floor of each Foulkes coordinate, express the fractional
    remainder in the omega basis (integer coordinates there), and reduce those
    integers modulo the elementary divisors.  The quotient lattice is a direct
    product of cyclic groups in omega coordinates, so the reduction is
    componentwise.  Inputs that fail the genuine-character oracle are rejected.
    """
    if theta.basis != "phi":
        theta = convert_coords(theta, "phi")
    n = theta.n
    bad = [
        (lam, m)
        for lam, m in phi_coords_multiplicities(theta)
        if m.denominator != 1 or m < 0
    ]
    if bad:
        lam, m = bad[0]
        raise ValueError(f"not a genuine character: multiplicity {m} at {lam}")
    floors, fracs = zip(*(floor_frac(r) for r in theta.coords))
    omega = convert_coords(BasisCoords(n, "phi", fracs), "omega")
    a = []
    for k in range(n):
        c = omega.coords[k]
        if c.denominator != 1:
            raise AssertionError(f"fractional part has non-integral omega coordinate {c}")
        d = elementary_divisor(n, k + 1)
        a.append(d * floors[k] + int(c) % d)
    return tuple(a)


@dataclass(frozen=True)
class ConeDecomposition:
    """Split of a genuine length-dependent character into a non-negative integer
    Foulkes combination plus a fundamental-box character."""

    whole: BasisCoords
    fractional: BasisCoords

    def recompose(self) -> BasisCoords:
        return BasisCoords(
            self.whole.n,
            "phi",
            tuple(w + f for w, f in zip(self.whole.coords, self.fractional.coords)),
        )


def cone_decompose(theta: BasisCoords) -> ConeDecomposition:
    """Floor/fractional split of Foulkes coordinates; both parts are certified."""
    if theta.basis != "phi":
        theta = convert_coords(theta, "phi")
    if not is_genuine_phi_coords(theta):
        raise ValueError("input is not a genuine character")
    floors, fracs = zip(*(floor_frac(r) for r in theta.coords))
    if any(f < 0 for f in floors):
        raise AssertionError("genuine character with a negative Foulkes coordinate floor")
    whole = BasisCoords(theta.n, "phi", tuple(Fraction(f) for f in floors))
    fractional = BasisCoords(theta.n, "phi", fracs)
    if not is_genuine_phi_coords(fractional):
        raise AssertionError("fractional part failed the character oracle")
    return ConeDecomposition(whole=whole, fractional=fractional)


def lattice_index(n: int) -> int:
    """Number of lattice cosets: product of the elementary divisors,
    equal to n! / prod_k gcd(k, n)."""
    if n < 1:
        raise ValueError("n must be positive")
    index = 1
    for k in range(1, n + 1):
        index *= elementary_divisor(n, k)
    return index


def fundamental_domain(n: int) -> list[BasisCoords]:
    """All genuine length-dependent characters with Foulkes coordinates in [0, 1).

    Enumerated as the parametrized characters over the restricted box
    0 <= a_k < d_{k+1}, in lexicographic order of the parameter vectors.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ranges = [range(elementary_divisor(n, k + 1)) for k in range(n)]
    return [theta_from_params(n, a) for a in itertools.product(*ranges)]


def clearing_factor(n: int, verify: bool = False) -> int:
    """Smallest positive integer clearing every coordinate denominator: lcm(1..n)/n.

    With ``verify=True``, checks minimality against the fundamental domain: the
    factor clears every member, and each proper divisor fails on some member.
    """
    if n < 1:
        raise ValueError("n must be positive")
    sigma = math.lcm(*(elementary_divisor(n, k) for k in range(1, n + 1)))
    if sigma != math.lcm(*range(1, n + 1)) // n:
        raise AssertionError(f"clearing factor closed form failed at n={n}")
    if verify:
        domain = fundamental_domain(n)
        for theta in domain:
            if any((sigma * c).denominator != 1 for c in theta.coords):
                raise AssertionError(f"{sigma} does not clear {theta.coords}")
        for m in _proper_divisors(sigma):
            if all(
                all((m * c).denominator == 1 for c in theta.coords) for theta in domain
            ):
                raise AssertionError(f"proper divisor {m} already clears all denominators")
    return sigma


def _proper_divisors(m: int) -> list[int]:
    return [d for d in range(1, m) if m % d == 0]


def is_virtual_length_character(theta: LengthVector) -> bool:
    """True when every irreducible multiplicity of theta is an integer (any sign)."""
    lifted = theta.lift()
    return all(
        inner_product(lifted, irreducible_class_function(lam)).denominator == 1
        for lam in partitions(theta.n)
    )


def geometric_character(n: int) -> tuple[LengthVector, HCombination]:
    """The character with value (n-1)**(L-1) at cycle count L, plus its h-expansion.

    The h-coefficient at lam is C(n-1, len(lam)) * multinomial(lam) / (n-1); the
    quotients are verified to be non-negative integers and the expansion is
    checked against the oracle before returning.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    vector = LengthVector(n, tuple(Fraction((n - 1) ** (L - 1)) for L in range(1, n + 1)))
    coeffs = {}
    for lam in partitions(n):
        c = Fraction(binom(n - 1, len(lam)) * multiplicity_multinomial(lam), n - 1)
        if c:
            coeffs[lam] = c
    expansion = HCombination(n, coeffs)
    if not expansion.is_nonnegative_integral():
        raise AssertionError(f"h-expansion not a non-negative integer combination at n={n}")
    recomposed = h_to_class_function(expansion)
    if recomposed.values != vector.lift().values:
        raise AssertionError(f"h-expansion does not recompose the character at n={n}")
    if not is_genuine_character(vector.lift()).ok:
        raise AssertionError(f"geometric character failed the oracle at n={n}")
    return vector, expansion


def pinch_partition(n: int) -> Partition:
    """The shape (2, 2, 1, ..., 1) used as the obstruction detector."""
    if n < 4:
        raise ValueError("n must be at least 4")
    return (2, 2) + (1,) * (n - 4)


def _tensor_multiplicity_closed_form(n: int, j: int) -> Fraction:
    # Multiplicity of the pinch irreducible in gamma_j, in closed form.
    if j <= n - 4:
        return Fraction(0)
    if j == n - 3:
        return Fraction((n - 2) * (n - 3), 2)
    if j == n - 2:
        return Fraction(n * (n - 1) * (n - 3), 2)
    if j == n - 1:
        return Fraction(n * n * (n + 1) * (n - 3), 4)
    raise ValueError(f"need 0 <= j <= n-1, got {j}")


def obstruction_witness(n: int) -> Fraction:
    """Non-integer multiplicity showing that no rescaled Foulkes family generates
    all length-dependent characters.

    Decomposing the geometric character over the Foulkes basis puts coefficient
    C(n, n)/(n-1) = 1/(n-1) on index n-2; pairing that summand with the pinch
    irreducible gives (n-3)/(n-1), never an integer for n >= 4.  The value is
    computed twice (closed forms vs. hook-content products through the basis
    matrices) and both routes must agree and be non-integral.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    coefficient = Fraction(binom(2 * n - 2 - (n - 2), n), n - 1)

    closed = coefficient * sum(
        (
            sign_pow(n - 2 - j)
            * binom(n + 1, n - 2 - j)
            * _tensor_multiplicity_closed_form(n, j)
            for j in range(n)
        ),
        Fraction(0),
    )

    nu = pinch_partition(n)
    unit = BasisCoords(n, "phi", tuple(Fraction(i == n - 2) for i in range(n)))
    gamma_expansion = convert_coords(unit, "gamma")

    recomputed = coefficient * sum(
        (gamma_expansion.coords[j] * gamma_multiplicity(j, nu) for j in range(n)),
        Fraction(0),
    )

    if closed != recomputed:
        raise AssertionError(
            f"witness routes disagree at n={n}: closed {closed}, recomputed {recomputed}"
        )
    if closed.denominator == 1:
        raise AssertionError(f"witness unexpectedly integral at n={n}: {closed}")
    return closed
