import itertools
from fractions import Fraction
from math import factorial

import pytest

from schuralg.basis import (
    SchurElement,
    basis_element,
    enumerate_basis,
    identity_element,
    is_diagonal,
    matrix_from_pair,
)
from schuralg.centre import (
    centre_basis_element,
    centre_dimension,
    class_coefficient,
    is_central,
    primitive_idempotent,
)
from schuralg.multiplication import multiply
from schuralg.partitions import (
    character,
    class_size,
    cycle_type,
    partitions_of,
    permute_positions,
    tableaux_count,
)
from schuralg.verification import check_action_convention


def _m(a, b, c, d):
    return ((a, b), (c, d))


# class-sum expansions at n=2, d=4, frozen coefficient for coefficient
EXPECTED_CLASS_SUMS = {
    (4,): {
        _m(4, 0, 0, 0): 6, _m(2, 1, 1, 0): 2, _m(1, 1, 1, 1): 1,
        _m(0, 2, 2, 0): 2, _m(0, 1, 1, 2): 2, _m(0, 0, 0, 4): 6,
    },
    (3, 1): {
        _m(4, 0, 0, 0): 8, _m(3, 0, 0, 1): 2, _m(2, 1, 1, 0): 2,
        _m(1, 1, 1, 1): 2, _m(1, 0, 0, 3): 2, _m(0, 1, 1, 2): 2,
        _m(0, 0, 0, 4): 8,
    },
    (2, 2): {
        _m(4, 0, 0, 0): 3, _m(2, 1, 1, 0): 1, _m(2, 0, 0, 2): 1,
        _m(0, 2, 2, 0): 2, _m(0, 1, 1, 2): 1, _m(0, 0, 0, 4): 3,
    },
    (2, 1, 1): {
        _m(4, 0, 0, 0): 6, _m(3, 0, 0, 1): 3, _m(2, 1, 1, 0): 1,
        _m(2, 0, 0, 2): 2, _m(1, 1, 1, 1): 1, _m(1, 0, 0, 3): 3,
        _m(0, 1, 1, 2): 1, _m(0, 0, 0, 4): 6,
    },
    (1, 1, 1, 1): {
        _m(4, 0, 0, 0): 1, _m(3, 0, 0, 1): 1, _m(2, 0, 0, 2): 1,
        _m(1, 0, 0, 3): 1, _m(0, 0, 0, 4): 1,
    },
}


def brute_class_coefficient(shape, D):
    """Independent count: raw scan of S_d against the canonical word pair."""
    from schuralg.basis import canonical_pair

    top, bottom = canonical_pair(D)
    d = sum(shape)
    return sum(
        1
        for w in itertools.permutations(range(1, d + 1))
        if cycle_type(w) == shape and permute_positions(w, bottom) == top
    )


# --------------------------------------------------------- coefficients

def test_class_coefficient_identity_type():
    for D in enumerate_basis(2, 3):
        expected = 1 if is_diagonal(D) else 0
        assert class_coefficient((1, 1, 1), D) == expected


def test_class_coefficient_worked_values():
    assert class_coefficient((4,), _m(2, 1, 1, 0)) == 2
    assert class_coefficient((2, 2), _m(2, 0, 0, 2)) == 1


def test_class_coefficient_obstruction():
    # unequal row and column sums force zero for every cycle type
    D = ((0, 2), (0, 0))
    for shape in partitions_of(2):
        assert class_coefficient(shape, D) == 0


def test_class_coefficient_weight_mismatch():
    with pytest.raises(ValueError):
        class_coefficient((2, 1), _m(2, 0, 0, 2))


def test_class_coefficient_matches_raw_scan():
    for shape in partitions_of(4):
        for D in enumerate_basis(2, 4):
            assert class_coefficient(shape, D) == brute_class_coefficient(shape, D)


def test_row_sum_law_small():
    n, d = 2, 3
    words = list(itertools.product(range(1, n + 1), repeat=d))
    for shape in partitions_of(d):
        for bottom in words:
            total = sum(
                class_coefficient(shape, matrix_from_pair(top, bottom, n))
                for top in words
            )
            assert total == class_size(shape)


def test_action_convention_equivalence():
    for (n, d) in [(2, 4), (2, 5), (3, 3)]:
        assert check_action_convention(n, d).status == "pass"


# ----------------------------------------------------------- class sums

def test_class_sum_expansions_two_four():
    for shape, expected in EXPECTED_CLASS_SUMS.items():
        z = centre_basis_element(shape, 2, 4)
        assert z.label == shape
        assert z.element == SchurElement(2, 4, expected)


def test_identity_type_class_sum_is_identity():
    assert centre_basis_element((1, 1, 1, 1), 2, 4).element == identity_element(2, 4)


def test_class_sums_are_central():
    for (n, d) in [(2, 3), (3, 3)]:
        for shape in partitions_of(d):
            assert is_central(centre_basis_element(shape, n, d).element)


def test_class_sum_central_three_one():
    assert is_central(centre_basis_element((3, 1), 2, 4).element)


def test_is_central_identity():
    assert is_central(identity_element(2, 2))


def test_is_central_rejects_offdiagonal_basis_elements():
    for D in enumerate_basis(2, 2):
        if not is_diagonal(D):
            assert not is_central(basis_element(D))


# ---------------------------------------------------------- idempotents

def test_single_row_idempotent():
    for (n, d) in [(1, 3), (2, 4), (3, 3)]:
        e = primitive_idempotent((d,), n, d).element
        assert not e.is_zero()
        assert multiply(e, e) == e


def test_idempotent_vanishes_beyond_letter_count():
    assert primitive_idempotent((2, 1, 1), 2, 4).element.is_zero()
    assert primitive_idempotent((1, 1, 1, 1), 2, 4).element.is_zero()


def test_resolution_of_identity_two_four():
    total = SchurElement.zero(2, 4)
    for shape in [(4,), (3, 1), (2, 2)]:
        total = total + primitive_idempotent(shape, 2, 4).element
    assert total == identity_element(2, 4)


def test_idempotents_orthogonal_two_four():
    shapes = partitions_of(4)
    eps = {s: primitive_idempotent(s, 2, 4).element for s in shapes}
    for s in shapes:
        for t in shapes:
            product = multiply(eps[s], eps[t])
            assert product == (eps[s] if s == t else SchurElement.zero(2, 4))


def test_class_sums_reconstructed_from_idempotents():
    # Z_mu = sum over shapes of |class mu| chi_shape(mu) / f_shape * eps_shape
    for (n, d) in [(2, 3), (2, 4), (3, 3)]:
        eps = {
            s: primitive_idempotent(s, n, d).element
            for s in partitions_of(d)
            if len(s) <= n
        }
        for mu in partitions_of(d):
            expected = SchurElement.zero(n, d)
            for s, e in eps.items():
                weight = Fraction(class_size(mu) * character(s, mu), tableaux_count(s))
                expected = expected + e.scale(weight)
            assert expected == centre_basis_element(mu, n, d).element


# ------------------------------------------------------------- dimension

def test_centre_dimension_square_case():
    assert centre_dimension(4, 4) == 5


def test_centre_dimension_single_letter():
    for d in range(5):
        assert centre_dimension(1, d) == 1


def test_centre_dimension_two_four():
    # the five class-sum vectors span only a 3-dimensional space here
    assert centre_dimension(2, 4) == 3


def brute_commutant_dimension(n, d):
    """Independent route: dimension of {x : x g = g x for all basis g},
    computed by intersecting nullspaces over the rationals."""
    B = enumerate_basis(n, d)
    m = len(B)
    mult_table = {}
    for Dx in B:
        for Dy in B:
            mult_table[(Dx, Dy)] = multiply(basis_element(Dx), basis_element(Dy)).terms
    basis_vecs = [[Fraction(1 if r == c else 0) for c in range(m)] for r in range(m)]
    for G in B:
        cols = []
        for vec in basis_vecs:
            acc = {}
            for k, coeff in enumerate(vec):
                if not coeff:
                    continue
                for P, c in mult_table[(B[k], G)].items():
                    acc[P] = acc.get(P, Fraction(0)) + coeff * c
                for P, c in mult_table[(G, B[k])].items():
                    acc[P] = acc.get(P, Fraction(0)) - coeff * c
            cols.append({k: v for k, v in acc.items() if v})
        keys = sorted(set().union(*[set(c) for c in cols]))
        if not keys:
            continue
        rows = [[cols[r].get(key, Fraction(0)) for r in range(len(basis_vecs))] for key in keys]
        pivots, rank = [], 0
        ncols = len(basis_vecs)
        for col in range(ncols):
            p = next((rr for rr in range(rank, len(rows)) if rows[rr][col]), None)
            if p is None:
                continue
            rows[rank], rows[p] = rows[p], rows[rank]
            lead = rows[rank][col]
            rows[rank] = [v / lead for v in rows[rank]]
            for rr in range(len(rows)):
                if rr != rank and rows[rr][col]:
                    f = rows[rr][col]
                    rows[rr] = [a - f * b for a, b in zip(rows[rr], rows[rank])]
            pivots.append(col)
            rank += 1
        free = [c for c in range(ncols) if c not in pivots]
        new_basis = []
        for fc in free:
            t = [Fraction(0)] * ncols
            t[fc] = Fraction(1)
            for rr, pc in enumerate(pivots):
                t[pc] = -rows[rr][fc]
            new_basis.append(
                [sum(t[r] * basis_vecs[r][c] for r in range(ncols)) for c in range(m)]
            )
        basis_vecs = new_basis
        if not basis_vecs:
            break
    return len(basis_vecs)


def test_centre_dimension_matches_commutant():
    for (n, d) in [(2, 2), (2, 3), (2, 4)]:
        assert centre_dimension(n, d) == brute_commutant_dimension(n, d)


def test_centre_dimension_counts_short_partitions():
    for (n, d) in [(2, 2), (2, 3), (2, 4), (3, 3), (4, 4), (1, 5)]:
        expected = sum(1 for s in partitions_of(d) if len(s) <= n)
        assert centre_dimension(n, d) == expected


def test_degenerate_weight_zero():
    assert partitions_of(0) == ((),)
    assert centre_dimension(2, 0) == 1
    z = centre_basis_element((), 2, 0)
    assert z.element == identity_element(2, 0)
    e = primitive_idempotent((), 2, 0)
    assert e.element == identity_element(2, 0)
    assert multiply(e.element, e.element) == e.element
