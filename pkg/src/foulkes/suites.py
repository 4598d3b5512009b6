"""Named verification suites driving every invariant the package promises.

Each suite produces a ``VerificationReport`` whose checks are deterministically
ordered.  A failed check always carries a concrete counterexample payload.
Checks may run on a thread pool (``FOULKES_THREADS``); the report order does not
depend on completion order.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import basis, characters, combinatorics, lattice, products

SUITES = (
    "properties-a-h",
    "theorem-1",
    "theorem-2",
    "theorem-3",
    "theorem-4",
    "prop-gcd",
    "lemma-special",
    "all",
)


@dataclass(frozen=True)
class BruteCaps:
    """Default ceilings for the factorial-cost cross-checks."""

    pair_products: int = 7  # exhaustive descent-pair counting
    inner_product: int = 5  # literal expectation over full-cycle pairs
    permutation_module: int = 5  # tabloid-trace character table


@dataclass
class CheckResult:
    name: str
    scope: str
    passed: bool
    seconds: float
    witness: str | None = None

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "scope": self.scope,
            "passed": self.passed,
            "seconds": round(self.seconds, 6),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


class CheckFailure(Exception):
    """Raised inside a check with a printable counterexample."""


def _run_checks(suite: str, n_max: int, named_checks) -> VerificationReport:
    report = VerificationReport(suite=suite, n_max=n_max)
    workers = max(1, int(os.environ.get("FOULKES_THREADS", "1")))

    def execute(item):
        name, scope, fn = item
        start = time.perf_counter()
        try:
            fn()
            return CheckResult(name, scope, True, time.perf_counter() - start)
        except CheckFailure as exc:
            return CheckResult(name, scope, False, time.perf_counter() - start, str(exc))
        except Exception as exc:  # noqa: BLE001 - a crash is a failed check with context
            return CheckResult(
                name, scope, False, time.perf_counter() - start, f"{type(exc).__name__}: {exc}"
            )

    if workers == 1:
        report.checks = [execute(item) for item in named_checks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            report.checks = list(pool.map(execute, named_checks))
    return report


def _require(condition: bool, payload: str):
    if not condition:
        raise CheckFailure(payload)


# ---------------------------------------------------------------- properties


def _check_degrees(n_max: int):
    for n in range(1, n_max + 1):
        for i in range(n):
            got = basis.phi_vector(n, i).at_count(n)
            want = combinatorics.eulerian(n, i)
            _require(got == want, f"degree mismatch n={n}, i={i}: {got} != {want}")


def _check_regular_sum(n_max: int):
    for n in range(1, n_max + 1):
        total = basis.LengthVector(n, tuple(Fraction(0) for _ in range(n)))
        for i in range(n):
            total = total + basis.phi_vector(n, i)
        _require(
            total.values == basis.regular_vector(n).values,
            f"sum of Foulkes characters is not the regular character at n={n}: {total.values}",
        )


def _check_branching(n_max: int):
    for n in range(2, n_max + 1):
        for i in range(n):
            got = basis.restrict_length(basis.phi_vector(n, i))
            want = basis.LengthVector(n - 1, tuple(Fraction(0) for _ in range(n - 1)))
            if 0 <= i - 1 <= n - 2:
                want = want + (n - i) * basis.phi_vector(n - 1, i - 1)
            if i <= n - 2:
                want = want + (i + 1) * basis.phi_vector(n - 1, i)
            _require(
                got.values == want.values,
                f"branching identity fails at n={n}, i={i}: {got.values} != {want.values}",
            )


def _check_basis_matrices(n_max: int):
    for n in range(1, n_max + 1):
        for src in basis.BASIS_TAGS:
            for dst in basis.BASIS_TAGS:
                fwd = basis.change_of_basis(n, src, dst)
                back = basis.change_of_basis(n, dst, src)
                for i in range(n):
                    for j in range(n):
                        entry = sum(fwd[i][k] * back[k][j] for k in range(n))
                        _require(
                            entry == (1 if i == j else 0),
                            f"{src}->{dst}->{src} is not the identity at n={n}, entry ({i},{j})={entry}",
                        )
        # coordinate conversion must evaluate to the same length vector
        for src in basis.BASIS_TAGS:
            for i in range(n):
                unit = basis.BasisCoords(n, src, tuple(Fraction(i == t) for t in range(n)))
                direct = basis.basis_vector(n, src, i)
                via_phi = basis.coords_to_vector(basis.convert_coords(unit, "phi"))
                _require(
                    direct.values == via_phi.values,
                    f"conversion changes the vector: n={n}, {src}_{i}",
                )


def _check_antidiagonal_symmetry(n_max: int):
    # Transposing the psi<->phi expansion matrices across the antidiagonal turns
    # them into the mutually inverse unitriangular Pascal pair, so inversion
    # commutes with the flip on this pair of closed forms.
    for n in range(1, n_max + 1):
        # expansion E[i][j]: basis vector i of src written in dst; coords matrices
        # are the transposes
        exp_psi_in_phi = basis.change_of_basis(n, "psi", "phi")  # E^T with E[i][j]=C(n-j-1,i-j)
        exp_phi_in_psi = basis.change_of_basis(n, "phi", "psi")

        def flip(coord_matrix, i, j):
            # coord_matrix[a][b] = E[b][a]; flipped expansion entry E[n-1-j][n-1-i]
            return coord_matrix[n - 1 - i][n - 1 - j]

        for i in range(n):
            for j in range(n):
                pascal = flip(exp_psi_in_phi, i, j)
                _require(
                    pascal == combinatorics.binom(i, i - j),
                    f"flipped expansion is not the Pascal matrix at n={n}, ({i},{j}): {pascal}",
                )
                signed = flip(exp_phi_in_psi, i, j)
                _require(
                    signed
                    == combinatorics.sign_pow(i - j) * combinatorics.binom(i, i - j),
                    f"flipped inverse is not the signed Pascal matrix at n={n}, ({i},{j}): {signed}",
                )


def _check_genuine_families(n_max: int):
    for n in range(1, n_max + 1):
        for tag in basis.BASIS_TAGS:
            for i in range(n):
                vec = basis.basis_vector(n, tag, i)
                cert = characters.is_genuine_character(vec.lift())
                _require(
                    cert.ok,
                    f"{tag}_{i} fails the character oracle at n={n}: {cert.failing()[:1]}",
                )


def _check_phi_coords_reconstruction(n_max: int):
    for n in range(1, n_max + 1):
        samples = [basis.regular_vector(n)]
        samples += [basis.basis_vector(n, tag, i) for tag in basis.BASIS_TAGS for i in range(n)]
        for vec in samples:
            coords = basis.phi_coords(vec)
            again = basis.coords_to_vector(coords)
            _require(
                again.values == vec.values,
                f"Foulkes-coordinate reconstruction fails at n={n}: {vec.values}",
            )


def _check_oracle_selftest(n_max: int):
    for n in range(1, n_max + 1):
        brute = characters.brute_force_character_table(n)
        table = characters.character_table(n)
        _require(
            brute.rows == table.rows,
            f"border-strip recursion disagrees with the tabloid decomposition at n={n}",
        )


def _check_column_orthogonality(n_max: int):
    for n in range(1, n_max + 1):
        table = characters.character_table(n)
        for a, mu in enumerate(table.parts):
            for b, nu in enumerate(table.parts):
                s = sum(row[a] * row[b] for row in table.rows)
                want = math.factorial(n) // characters.class_size(mu) if a == b else 0
                _require(
                    s == want,
                    f"column orthogonality fails at n={n}, classes {mu} and {nu}: {s} != {want}",
                )


def _check_products_triple(n_max: int, caps: BruteCaps):
    for n in range(2, n_max + 1):
        for i in range(n):
            for j in range(i, n):
                closed = products.product_constants_formula(n, i, j)
                values = products.product_constants_from_values(n, i, j)
                _require(
                    closed == values,
                    f"product constants disagree at n={n}, ({i},{j}): {closed} != {values}",
                )
                if n <= caps.pair_products:
                    brute = products.product_constants_brute(n, i, j, cap=caps.pair_products)
                    _require(
                        closed == brute,
                        f"pair counting disagrees at n={n}, ({i},{j}): {closed} != {brute}",
                    )
                total = sum(
                    closed[k] * combinatorics.eulerian(n, k) for k in range(n)
                )
                want = combinatorics.eulerian(n, i) * combinatorics.eulerian(n, j)
                _require(
                    total == want,
                    f"pair count totals fail at n={n}, ({i},{j}): {total} != {want}",
                )


def _check_gram(n_max: int, caps: BruteCaps):
    for n in range(2, n_max + 1):
        for a in range(n):
            for b in range(a, n):
                got = products.intersection_inner_product(
                    basis.phi_vector(n, a), basis.phi_vector(n, b)
                )
                _require(
                    got == (1 if a == b else 0),
                    f"Foulkes Gram matrix is not the identity at n={n}: [{a},{b}] = {got}",
                )
        if n <= caps.inner_product:
            _require(
                products.expected_intersections_brute(n) == products.expected_intersections(n),
                f"literal and class-algebra intersection expectations differ at n={n}",
            )


def _check_omega_integrality(n_max: int):
    # Virtual characters depending only on cycle count have integer omega coords.
    for n in range(1, n_max + 1):
        samples = []
        for lam in combinatorics.partitions(n):
            f = characters.irreducible_class_function(lam)
            if f.depends_only_on_cycle_count():
                samples.append(basis.length_vector_from_class_function(f))
        samples.append(basis.regular_vector(n))
        for i in range(n):
            samples.append(basis.phi_vector(n, i) - basis.phi_vector(n, 0))
        for theta in fundamental_members(n):
            samples.append(basis.coords_to_vector(theta))
        for vec in samples:
            if not lattice.is_virtual_length_character(vec):
                continue
            omega = basis.convert_coords(basis.phi_coords(vec), "omega")
            _require(
                all(c.denominator == 1 for c in omega.coords),
                f"integral vector with fractional omega coordinates at n={n}: {omega.coords}",
            )


def fundamental_members(n: int) -> list[basis.BasisCoords]:
    return lattice.fundamental_domain(n)


def _properties_checks(n_max: int, caps: BruteCaps):
    cap9 = min(n_max, 9)
    cap7 = min(n_max, 7)
    cap8 = min(n_max, 8)
    cap6 = min(n_max, 6)
    return [
        ("degrees-eulerian", f"n=1..{cap9}", lambda: _check_degrees(cap9)),
        ("regular-sum", f"n=1..{cap9}", lambda: _check_regular_sum(cap9)),
        ("branching", f"n=2..{cap9}", lambda: _check_branching(cap9)),
        ("basis-matrices-invert", f"n=1..{cap9}", lambda: _check_basis_matrices(cap9)),
        ("antidiagonal-symmetry", f"n=1..{cap9}", lambda: _check_antidiagonal_symmetry(cap9)),
        ("families-genuine", f"n=1..{cap7}", lambda: _check_genuine_families(cap7)),
        ("phi-coords-reconstruction", f"n=1..{cap7}", lambda: _check_phi_coords_reconstruction(cap7)),
        (
            "oracle-tabloid-selftest",
            f"n=1..{min(n_max, caps.permutation_module)}",
            lambda: _check_oracle_selftest(min(n_max, caps.permutation_module)),
        ),
        ("column-orthogonality", f"n=1..{cap8}", lambda: _check_column_orthogonality(cap8)),
        (
            "product-constants-triple",
            f"n=2..{min(n_max, 12)} (pairs to {min(n_max, caps.pair_products)})",
            lambda: _check_products_triple(min(n_max, 12), caps),
        ),
        (
            "gram-orthonormal",
            f"n=2..{cap6} (literal to {min(n_max, caps.inner_product)})",
            lambda: _check_gram(cap6, caps),
        ),
        ("omega-integrality", f"n=1..{cap7}", lambda: _check_omega_integrality(cap7)),
    ]


# ---------------------------------------------------------------- theorems


def _check_witness(n_max: int):
    for n in range(4, n_max + 1):
        value = lattice.obstruction_witness(n)
        _require(
            value.denominator != 1,
            f"obstruction witness became integral at n={n}: {value}",
        )
        _require(
            value == Fraction(n - 3, n - 1),
            f"witness closed form failed at n={n}: {value}",
        )


def _check_roundtrip(n_max: int):
    for n in range(1, n_max + 1):
        box = [range(2 * basis.elementary_divisor(n, k + 1)) for k in range(n)]
        seen = {}
        for a in itertools.product(*box):
            coords = lattice.theta_from_params(n, a)
            back = lattice.params_from_theta(coords)
            _require(back == a, f"roundtrip fails at n={n}: {a} -> {coords.coords} -> {back}")
            key = coords.coords
            _require(
                key not in seen,
                f"parametrization collides at n={n}: {seen.get(key)} and {a}",
            )
            seen[key] = a


def _check_completeness(n_max: int):
    import numpy as np

    for n in range(1, n_max + 1):
        sigma = lattice.clearing_factor(n)
        matrix = np.array(basis.phi_multiplicity_matrix(n), dtype=np.int64)
        axes = [np.arange(2 * sigma)] * n
        grid = np.array(np.meshgrid(*axes, indexing="ij")).reshape(n, -1).T
        mults = grid @ matrix.T
        accepted = ((mults % sigma) == 0).all(axis=1) & (mults >= 0).all(axis=1)
        accepted_coords = {
            tuple(Fraction(int(x), sigma) for x in row) for row in grid[accepted]
        }
        box = [range(2 * basis.elementary_divisor(n, k + 1)) for k in range(n)]
        parametrized = {
            lattice.theta_from_params(n, a).coords for a in itertools.product(*box)
        }
        _require(
            parametrized == accepted_coords,
            f"parametrized set differs from oracle sweep at n={n}: "
            f"{len(parametrized)} vs {len(accepted_coords)}",
        )


def _check_domain_counts(n_max: int):
    for n in range(1, n_max + 1):
        domain = lattice.fundamental_domain(n)
        want = math.factorial(n)
        for k in range(1, n + 1):
            want //= math.gcd(k, n)
        _require(
            len(domain) == lattice.lattice_index(n) == want,
            f"domain size mismatch at n={n}: {len(domain)} vs index {lattice.lattice_index(n)} vs {want}",
        )
        distinct = {c.coords for c in domain}
        _require(len(distinct) == len(domain), f"domain has duplicate members at n={n}")
        for coords in domain:
            mults = basis.phi_coords_multiplicities(coords)
            bad = [(lam, m) for lam, m in mults if m.denominator != 1 or m < 0]
            _require(
                not bad,
                f"domain member fails the oracle at n={n}, a-coords {coords.coords}: {bad[:1]}",
            )


def _check_cone_additivity(n_max: int):
    for n in range(1, n_max + 1):
        domain = lattice.fundamental_domain(n)
        sample = domain[: min(len(domain), 8)]
        for left in sample:
            for right in sample:
                summed = basis.BasisCoords(
                    n, "phi", tuple(a + b for a, b in zip(left.coords, right.coords))
                )
                decomp = lattice.cone_decompose(summed)
                back = decomp.recompose()
                _require(
                    back.coords == summed.coords,
                    f"cone decomposition does not recompose at n={n}",
                )
                _require(
                    all(c.denominator == 1 and c >= 0 for c in decomp.whole.coords),
                    f"integer component not a non-negative combination at n={n}",
                )


def _check_clearing(n_max: int, minimality_max: int):
    for n in range(1, n_max + 1):
        sigma = lattice.clearing_factor(n, verify=n <= minimality_max)
        want = math.lcm(*range(1, n + 1)) // n
        _require(sigma == want, f"clearing factor mismatch at n={n}: {sigma} != {want}")


def _check_gcd(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            combinatorics.multinomial_gcd(n, k, verify=True)


def _check_schoenemann_cauchy(n_max: int):
    for n in range(1, n_max + 1):
        for lam in combinatorics.partitions(n):
            m = combinatorics.multiplicity_multinomial(lam)
            mults = combinatorics.multiplicities(lam)
            g = math.gcd(*mults.values())
            length = len(lam)
            _require(
                g * m % length == 0,
                f"multiplicity-gcd divisibility fails at {lam}: {g}*{m} not divisible by {length}",
            )
            _require(
                n * m % length == 0,
                f"size divisibility fails at {lam}: {n}*{m} not divisible by {length}",
            )


def _check_geometric(n_max: int):
    for n in range(2, n_max + 1):
        vector, expansion = lattice.geometric_character(n)
        _require(
            expansion.is_nonnegative_integral(),
            f"h-expansion of the geometric character is not integral at n={n}",
        )
        _require(
            characters.is_genuine_character(vector.lift()).ok,
            f"geometric character fails the oracle at n={n}",
        )
    if n_max >= 3:
        _, expansion = lattice.geometric_character(3)
        _require(
            expansion.coeffs == {(3,): Fraction(1), (2, 1): Fraction(1)},
            f"unexpected expansion at n=3: {expansion.coeffs}",
        )


def _theorem1_checks(n_max: int):
    cap = min(n_max, 10)
    return [
        ("witness-non-integral", f"n=4..{cap}", lambda: _check_witness(cap)),
        ("geometric-ingredient", f"n=2..{min(n_max, 8)}", lambda: _check_geometric(min(n_max, 8))),
    ]


def _theorem2_checks(n_max: int):
    cap6 = min(n_max, 6)
    cap5 = min(n_max, 5)
    return [
        ("params-roundtrip-injective", f"n=1..{cap6}", lambda: _check_roundtrip(cap6)),
        ("params-complete-sweep", f"n=1..{cap5}", lambda: _check_completeness(cap5)),
    ]


def _theorem3_checks(n_max: int):
    cap9 = min(n_max, 9)
    return [
        ("domain-count-and-oracle", f"n=1..{cap9}", lambda: _check_domain_counts(cap9)),
        ("cone-additivity", f"n=1..{min(n_max, 6)}", lambda: _check_cone_additivity(min(n_max, 6))),
    ]


def _theorem4_checks(n_max: int):
    cap12 = min(n_max, 12)
    cap9 = min(n_max, 9)
    return [
        (
            "clearing-factor-minimal",
            f"n=1..{cap12} (minimality to {cap9})",
            lambda: _check_clearing(cap12, cap9),
        ),
    ]


def _prop_gcd_checks(n_max: int):
    cap = min(n_max, 20)
    return [
        ("multinomial-gcd-enumerated", f"n=1..{cap}", lambda: _check_gcd(cap)),
        (
            "divisibility-classical",
            f"n=1..{min(n_max, 20)}",
            lambda: _check_schoenemann_cauchy(min(n_max, 20)),
        ),
    ]


def _lemma_special_checks(n_max: int):
    cap = min(n_max, 8)
    return [
        ("geometric-character-integral", f"n=2..{cap}", lambda: _check_geometric(cap)),
    ]


def run_suite(suite: str, n_max: int, caps: BruteCaps | None = None) -> VerificationReport:
    """Run one named suite up to n_max and return the ordered report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    caps = caps or BruteCaps()
    builders = {
        "properties-a-h": lambda: _properties_checks(n_max, caps),
        "theorem-1": lambda: _theorem1_checks(n_max),
        "theorem-2": lambda: _theorem2_checks(n_max),
        "theorem-3": lambda: _theorem3_checks(n_max),
        "theorem-4": lambda: _theorem4_checks(n_max),
        "prop-gcd": lambda: _prop_gcd_checks(n_max),
        "lemma-special": lambda: _lemma_special_checks(n_max),
    }
    if suite == "all":
        checks = []
        for name in SUITES[:-1]:
            checks.extend(builders[name]())
        return _run_checks(suite, n_max, checks)
    return _run_checks(suite, n_max, builders[suite]())
