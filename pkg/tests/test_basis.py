import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from foulkes.basis import (
    BASIS_TAGS,
    BasisCoords,
    LengthVector,
    basis_vector,
    change_of_basis,
    convert_coords,
    coords_to_vector,
    elementary_divisor,
    gamma_h_expansion,
    gamma_vector,
    is_genuine_phi_coords,
    length_vector_from_class_function,
    omega_vector,
    phi_coords,
    phi_coords_multiplicities,
    phi_vector,
    psi_h_expansion,
    psi_vector,
    regular_vector,
    restrict_length,
)
from foulkes.characters import (
    h_to_class_function,
    induced_trivial,
    irreducible_class_function,
    is_genuine_character,
)
from foulkes.combinatorics import eulerian


def test_elementary_divisors():
    assert [elementary_divisor(3, k) for k in (1, 2, 3)] == [1, 2, 1]
    assert [elementary_divisor(4, k) for k in (1, 2, 3, 4)] == [1, 1, 3, 1]
    assert elementary_divisor(4, 3) == 3
    assert elementary_divisor(7, 7) == 1
    with pytest.raises(ValueError):
        elementary_divisor(4, 5)


def test_frozen_vectors_n3():
    # values stored at cycle counts 1, 2, 3 in that order
    assert phi_vector(3, 0).values == (1, 1, 1)
    assert phi_vector(3, 1).values == (-2, 0, 4)
    assert phi_vector(3, 2).values == (1, -1, 1)
    assert gamma_vector(3, 0).values == (1, 1, 1)
    assert gamma_vector(3, 1).values == (2, 4, 8)
    assert psi_vector(3, 0).values == (1, 1, 1)
    assert psi_vector(3, 1).values == (0, 2, 6)
    assert psi_vector(3, 2).values == (0, 0, 6)
    assert omega_vector(3, 0).values == (1, 1, 1)
    assert omega_vector(3, 1).values == (0, 1, 3)
    assert omega_vector(3, 2).values == (0, 0, 6)


def test_omega_vectors_match_induced_and_regular():
    lifted = omega_vector(3, 1).lift()
    assert lifted.values == induced_trivial((2, 1)).values
    assert omega_vector(3, 2).values == regular_vector(3).values


def test_degrees_are_eulerian_numbers():
    for n in range(1, 10):
        for i in range(n):
            assert phi_vector(n, i).at_count(n) == eulerian(n, i)


def test_foulkes_sum_is_regular_character():
    for n in range(1, 10):
        total = LengthVector(n, tuple(Fraction(0) for _ in range(n)))
        for i in range(n):
            total = total + phi_vector(n, i)
        assert total.values == regular_vector(n).values


def test_branching_rule():
    got = restrict_length(phi_vector(3, 1))
    want = 2 * phi_vector(2, 0) + 2 * phi_vector(2, 1)
    assert got.values == want.values == (0, 4)
    for n in range(2, 10):
        assert restrict_length(phi_vector(n, 0)).values == phi_vector(n - 1, 0).values
        reg = restrict_length(regular_vector(n))
        assert reg.values == (n * regular_vector(n - 1)).values
        for i in range(n):
            got = restrict_length(phi_vector(n, i))
            want = LengthVector(n - 1, tuple(Fraction(0) for _ in range(n - 1)))
            if i >= 1:
                want = want + (n - i) * phi_vector(n - 1, i - 1)
            if i <= n - 2:
                want = want + (i + 1) * phi_vector(n - 1, i)
            assert got.values == want.values
    with pytest.raises(ValueError):
        restrict_length(phi_vector(1, 0))


def test_change_of_basis_round_trips():
    for n in range(1, 9):
        for src in BASIS_TAGS:
            for dst in BASIS_TAGS:
                fwd = change_of_basis(n, src, dst)
                back = change_of_basis(n, dst, src)
                for i in range(n):
                    for j in range(n):
                        entry = sum(fwd[i][k] * back[k][j] for k in range(n))
                        assert entry == (1 if i == j else 0)


def test_conversion_preserves_the_vector():
    for n in range(1, 7):
        for src in BASIS_TAGS:
            for i in range(n):
                unit = BasisCoords(n, src, tuple(Fraction(i == t) for t in range(n)))
                direct = basis_vector(n, src, i)
                for dst in BASIS_TAGS:
                    converted = convert_coords(unit, dst)
                    assert coords_to_vector(converted).values == direct.values


def test_psi_unit_in_phi_basis():
    unit = BasisCoords(3, "psi", (0, 0, 1))
    assert convert_coords(unit, "phi").coords == (1, 1, 1)


def test_phi_coords_examples():
    assert phi_coords(regular_vector(3)).coords == (1, 1, 1)
    chi = length_vector_from_class_function(irreducible_class_function((2, 1)))
    assert phi_coords(chi).coords == (0, Fraction(1, 2), 0)
    for n in range(1, 7):
        for i in range(n):
            assert phi_coords(phi_vector(n, i)).coords == tuple(
                Fraction(i == j) for j in range(n)
            )


def test_phi_coords_reconstruction():
    for n in range(1, 7):
        for tag in BASIS_TAGS:
            for i in range(n):
                vec = basis_vector(n, tag, i)
                assert coords_to_vector(phi_coords(vec)).values == vec.values


def test_h_expansions():
    assert psi_h_expansion(3, 1).coeffs == {(2, 1): 2}
    assert psi_h_expansion(3, 0).coeffs == {(3,): 1}
    assert gamma_h_expansion(3, 0).coeffs == {(3,): 1}
    assert gamma_h_expansion(3, 1).coeffs == {(3,): 2, (2, 1): 2}
    coeffs = psi_h_expansion(6, 3).coeffs
    assert math.gcd(*(int(c) for c in coeffs.values())) == elementary_divisor(6, 4)
    for n in range(1, 8):
        for k in range(n):
            assert length_vector_from_class_function(
                h_to_class_function(psi_h_expansion(n, k))
            ).values == psi_vector(n, k).values
            assert length_vector_from_class_function(
                h_to_class_function(gamma_h_expansion(n, k))
            ).values == gamma_vector(n, k).values


def test_gamma_expansions_recombine_to_psi():
    from foulkes.combinatorics import binom, sign_pow

    for n in range(1, 8):
        for k in range(n):
            combined = {}
            for j in range(n):
                c = sign_pow(k - j) * binom(k + 1, k - j)
                if c == 0:
                    continue
                for lam, coeff in gamma_h_expansion(n, j).coeffs.items():
                    combined[lam] = combined.get(lam, Fraction(0)) + c * coeff
            combined = {lam: c for lam, c in combined.items() if c}
            assert combined == psi_h_expansion(n, k).coeffs


def test_families_are_genuine_characters():
    for n in range(1, 7):
        for tag in BASIS_TAGS:
            for i in range(n):
                assert is_genuine_character(basis_vector(n, tag, i).lift()).ok


def test_fast_multiplicities_match_oracle():
    for n in range(1, 7):
        for i in range(n):
            coords = BasisCoords(n, "phi", tuple(Fraction(i == j) for j in range(n)))
            fast = dict(phi_coords_multiplicities(coords))
            slow = is_genuine_character(phi_vector(n, i).lift()).as_dict()
            assert fast == slow
            assert is_genuine_phi_coords(coords)


@settings(deadline=None, max_examples=30)
@given(
    st.integers(2, 6),
    st.data(),
)
def test_nonnegative_integer_combinations_have_nonnegative_coords(n, data):
    coeffs = data.draw(
        st.lists(st.integers(0, 4), min_size=n, max_size=n), label="coefficients"
    )
    vec = LengthVector(n, tuple(Fraction(0) for _ in range(n)))
    for i, c in enumerate(coeffs):
        vec = vec + c * phi_vector(n, i)
    coords = phi_coords(vec)
    assert coords.coords == tuple(Fraction(c) for c in coeffs)
    assert all(c >= 0 for c in coords.coords)


def test_lift_round_trip():
    for n in range(1, 6):
        vec = psi_vector(n, n - 1)
        assert length_vector_from_class_function(vec.lift()).values == vec.values
    chi = irreducible_class_function((2, 1, 1))
    with pytest.raises(ValueError):
        length_vector_from_class_function(chi)  # depends on more than the cycle count


def test_depends_only_on_cycle_count_detection():
    trivial = irreducible_class_function((4,))
    assert trivial.depends_only_on_cycle_count()
    std = irreducible_class_function((3, 1))
    assert not std.depends_only_on_cycle_count()
