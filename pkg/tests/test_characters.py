import math
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from foulkes.basis import LengthVector
from foulkes.characters import (
    HCombination,
    brute_force_character_table,
    character_table,
    class_size,
    gamma_multiplicity,
    h_to_class_function,
    induced_trivial,
    inner_product,
    irreducible_character,
    irreducible_class_function,
    is_genuine_character,
    zero_class_function,
)
from foulkes.combinatorics import binom, cycle_type, partitions


def test_class_sizes():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2
    for n in range(1, 9):
        assert sum(class_size(mu) for mu in partitions(n)) == math.factorial(n)


def _class_sizes_by_enumeration(n):
    counts = {}
    for w in permutations(range(1, n + 1)):
        t = cycle_type(w)
        counts[t] = counts.get(t, 0) + 1
    return counts


def test_class_sizes_against_enumeration():
    for n in range(1, 7):
        assert _class_sizes_by_enumeration(n) == {mu: class_size(mu) for mu in partitions(n)}


def test_border_strip_values():
    assert irreducible_character((2, 1), (1, 1, 1)) == 2
    assert irreducible_character((2, 1), (3,)) == -1
    assert irreducible_character((2, 1), (2, 1)) == 0
    assert irreducible_character((2, 2), (2, 2)) == 2
    for n in range(1, 9):
        for mu in partitions(n):
            assert irreducible_character((n,), mu) == 1


def _standard_rep_trace(mu):
    # permutation-matrix trace minus 1: another route to the (n-1, 1) row
    n = sum(mu)
    fixed = sum(1 for p in mu if p == 1)
    return fixed - 1


def test_standard_representation_row():
    for n in range(2, 9):
        lam = (n - 1, 1)
        for mu in partitions(n):
            assert irreducible_character(lam, mu) == _standard_rep_trace(mu)


def _hook_length_degree(lam):
    n = sum(lam)
    cols = [0] * lam[0]
    for row_len in lam:
        for c in range(row_len):
            cols[c] += 1
    product = 1
    for r, row_len in enumerate(lam):
        for c in range(row_len):
            product *= (row_len - c - 1) + (cols[c] - r - 1) + 1
    return math.factorial(n) // product


def test_degrees_match_hook_length_formula():
    for n in range(1, 9):
        degrees = character_table(n).degrees()
        for lam in partitions(n):
            assert degrees[lam] == _hook_length_degree(lam)


def test_table_against_tabloid_decomposition():
    for n in range(1, 6):
        assert brute_force_character_table(n).rows == character_table(n).rows


def test_row_and_column_orthogonality():
    for n in range(1, 9):
        table = character_table(n)
        parts = table.parts
        for a in range(len(parts)):
            for b in range(a, len(parts)):
                s = sum(
                    class_size(mu) * table.rows[a][i] * table.rows[b][i]
                    for i, mu in enumerate(parts)
                )
                assert s == (math.factorial(n) if a == b else 0)
        for a, mu in enumerate(parts):
            for b in range(a, len(parts)):
                s = sum(row[a] * row[b] for row in table.rows)
                want = math.factorial(n) // class_size(mu) if a == b else 0
                assert s == want


def test_inner_product_orthonormality():
    for n in range(1, 7):
        for lam in partitions(n):
            chi = irreducible_class_function(lam)
            assert inner_product(chi, chi) == 1
    chi_a = irreducible_class_function((2, 1))
    chi_b = irreducible_class_function((3,))
    assert inner_product(chi_a, chi_b) == 0


def test_regular_character_multiplicities():
    n = 4
    reg = zero_class_function(n)
    for lam in partitions(n):
        chi = irreducible_class_function(lam)
        reg = reg + Fraction(character_table(n).degrees()[lam]) * chi
    trivial = irreducible_class_function((n,))
    assert inner_product(reg, trivial) == 1
    assert reg.values[(1,) * n] == math.factorial(n)


def _coset_fixed_points(lam, word):
    # literal count of ordered set partitions with blocks preserved by the word
    n = sum(lam)
    items = tuple(range(n))

    def blocks_of(sizes, pool):
        if not sizes:
            yield ()
            return
        for block in combinations(pool, sizes[0]):
            rest = tuple(x for x in pool if x not in block)
            for tail in blocks_of(sizes[1:], rest):
                yield (frozenset(block),) + tail

    count = 0
    for blocks in blocks_of(lam, items):
        if all(frozenset(word[x] for x in block) == block for block in blocks):
            count += 1
    return count


def _word_of_type(mu):
    word = []
    start = 0
    for part in mu:
        word.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(word)


def test_induced_trivial_examples_and_coset_oracle():
    it = induced_trivial((2, 1))
    assert [it(mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [3, 1, 0]
    assert induced_trivial((3,)).values == {mu: 1 for mu in partitions(3)}
    regular = induced_trivial((1, 1, 1))
    assert [regular(mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [6, 0, 0]
    for n in range(1, 6):
        for lam in partitions(n):
            produced = induced_trivial(lam)
            for mu in partitions(n):
                assert produced(mu) == _coset_fixed_points(lam, _word_of_type(mu)), (lam, mu)


def test_induced_trivial_decomposition_is_kostka_positive():
    for n in range(1, 7):
        for lam in partitions(n):
            cert = is_genuine_character(induced_trivial(lam))
            assert cert.ok
            assert cert.as_dict()[lam] == 1  # leading Kostka number


def test_h_combination_examples():
    comb = HCombination(3, {(2, 1): Fraction(1), (3,): Fraction(1)})
    values = h_to_class_function(comb)
    assert [values(mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [4, 2, 1]
    assert h_to_class_function(HCombination(3, {(3,): Fraction(1)})).values == {
        mu: 1 for mu in partitions(3)
    }
    empty = h_to_class_function(HCombination(3, {}))
    assert all(v == 0 for v in empty.values.values())


def test_gamma_multiplicity_spec_values():
    assert gamma_multiplicity(5 - 3, (2, 2, 1)) == 3
    assert gamma_multiplicity(4 - 2, (2, 2)) == 6
    for n in range(1, 8):
        for j in range(n):
            hook = (n - j,) + (1,) * j
            assert gamma_multiplicity(j, hook) == binom(n - 1, j)


def test_gamma_multiplicity_agrees_with_inner_product():
    for n in range(1, 8):
        for lam in partitions(n):
            for i in range(n):
                power = LengthVector(
                    n, tuple(Fraction((i + 1) ** L) for L in range(1, n + 1))
                ).lift()
                assert gamma_multiplicity(i, lam) == inner_product(
                    power, irreducible_class_function(lam)
                )


def test_is_genuine_character_certificates():
    cert = is_genuine_character(irreducible_class_function((2, 1)))
    assert cert.ok and cert.as_dict()[(2, 1)] == 1
    half = Fraction(1, 2) * irreducible_class_function((3,))
    cert = is_genuine_character(half)
    assert not cert.ok
    assert ((3,), Fraction(1, 2)) in cert.failing()
    # length-vector lift (values 2, 0, -1 at cycle counts 3, 2, 1) is the 2-dim irreducible
    vec = LengthVector(3, (Fraction(-1), Fraction(0), Fraction(2)))
    cert = is_genuine_character(vec.lift())
    assert cert.ok
    assert cert.as_dict() == {(3,): 0, (2, 1): 1, (1, 1, 1): 0}


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        irreducible_character((2, 1), (4,))
