from fractions import Fraction
from itertools import permutations

import pytest

from foulkes.basis import phi_vector
from foulkes.combinatorics import descent_count, eulerian
from foulkes.products import (
    class_product_distribution,
    expected_intersections,
    expected_intersections_brute,
    intersection_inner_product,
    product_constants_brute,
    product_constants_formula,
    product_constants_from_values,
    structure_constants,
)


def _constants_by_literal_loops(n, i, j):
    # plain-python oracle, independent of the vectorized implementation
    words = list(permutations(range(n)))
    per_target = {}
    for x in words:
        if descent_count(x) != i:
            continue
        for y in words:
            if descent_count(y) != j:
                continue
            z = tuple(x[y[t]] for t in range(n))
            per_target[z] = per_target.get(z, 0) + 1
    out = []
    for k in range(n):
        values = {per_target.get(z, 0) for z in words if descent_count(z) == k}
        assert len(values) == 1, f"target dependence at k={k}"
        out.append(values.pop())
    return tuple(out)


def test_spot_value_and_literal_oracle():
    assert product_constants_formula(3, 1, 1) == (4, 2, 4)
    assert product_constants_from_values(3, 1, 1) == (4, 2, 4)
    assert product_constants_brute(3, 1, 1) == (4, 2, 4)
    for n in range(2, 5):
        for i in range(n):
            for j in range(n):
                literal = _constants_by_literal_loops(n, i, j)
                assert product_constants_formula(n, i, j) == literal
                assert product_constants_brute(n, i, j) == literal


def test_identity_element_row():
    for n in range(2, 7):
        for j in range(n):
            assert product_constants_formula(n, 0, j) == tuple(
                int(k == j) for k in range(n)
            )
    assert product_constants_formula(2, 0, 0) == (1, 0)


def test_triple_agreement_and_row_sums():
    for n in range(2, 7):
        for i in range(n):
            for j in range(i, n):
                closed = product_constants_formula(n, i, j)
                assert closed == product_constants_from_values(n, i, j)
                assert closed == product_constants_brute(n, i, j)
                assert closed == product_constants_formula(n, j, i)
                total = sum(closed[k] * eulerian(n, k) for k in range(n))
                assert total == eulerian(n, i) * eulerian(n, j)


def test_brute_cap_is_enforced():
    with pytest.raises(ValueError):
        product_constants_brute(8, 0, 0, cap=7)


def test_structure_constants_container():
    constants = structure_constants(3, method="formula")
    assert constants.vector(1, 1) == (4, 2, 4)
    assert constants.tensor == structure_constants(3, method="brute").tensor


def _full_cycle_pairs_distribution(n):
    # literal enumeration oracle
    words = list(permutations(range(n)))

    def cycles(w):
        seen = [False] * n
        total = 0
        for s in range(n):
            if not seen[s]:
                total += 1
                t = s
                while not seen[t]:
                    seen[t] = True
                    t = w[t]
        return total

    def ctype(w):
        seen = [False] * n
        parts = []
        for s in range(n):
            if not seen[s]:
                size = 0
                t = s
                while not seen[t]:
                    seen[t] = True
                    t = w[t]
                    size += 1
                parts.append(size)
        return tuple(sorted(parts, reverse=True))

    full = [w for w in words if cycles(w) == 1]
    counts = {}
    for s in full:
        for t in full:
            product = tuple(s[t[x]] for x in range(n))
            key = ctype(product)
            counts[key] = counts.get(key, 0) + 1
    pairs = len(full) ** 2
    return {k: Fraction(v, pairs) for k, v in counts.items()}


def test_class_product_distribution():
    dist = class_product_distribution(2)
    assert dist.probabilities[(1, 1)] == 1
    dist = class_product_distribution(3)
    assert dist.probabilities[(1, 1, 1)] == Fraction(1, 2)
    assert dist.probabilities[(3,)] == Fraction(1, 2)
    assert dist.probabilities[(2, 1)] == 0
    for n in range(2, 6):
        dist = class_product_distribution(n)
        assert dist.total() == 1
        literal = _full_cycle_pairs_distribution(n)
        for mu, p in dist.probabilities.items():
            assert p == literal.get(mu, Fraction(0)), (n, mu)


def test_distribution_total_mass_up_to_8():
    for n in range(2, 9):
        assert class_product_distribution(n).total() == 1


def test_gram_matrix_identity():
    assert intersection_inner_product(phi_vector(2, 0), phi_vector(2, 0)) == 1
    for n in range(2, 7):
        for a in range(n):
            for b in range(n):
                value = intersection_inner_product(phi_vector(n, a), phi_vector(n, b))
                assert value == (1 if a == b else 0), (n, a, b)


def test_intersection_expectations_brute_agreement():
    for n in range(2, 6):
        assert expected_intersections_brute(n) == expected_intersections(n)


def test_gamma_gram_matches_change_of_basis_product():
    from foulkes.basis import change_of_basis, gamma_vector

    for n in range(2, 6):
        conv = change_of_basis(n, "gamma", "phi")
        for a in range(n):
            for b in range(n):
                got = intersection_inner_product(gamma_vector(n, a), gamma_vector(n, b))
                want = sum(conv[k][a] * conv[k][b] for k in range(n))
                assert got == want
