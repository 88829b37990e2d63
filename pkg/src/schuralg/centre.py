"""The centre of S(n,d): class-sum images, centrality, primitive idempotents.

Each conjugacy class of the symmetric group, summed inside the algebra,
lands in the centre.  The expansion coefficient of a class sum on a basis
index D is a permutation count: with (top, bottom) the canonical word pair
of D, it is the number of permutations of the prescribed cycle type
carrying bottom to top under the position action.

The stored action convention is w . word = (word[w[1]-1], ..., word[w[d]-1]).
Counting with w or with its inverse gives the same coefficients because
cycle type is inversion invariant; the tests assert that equality instead
of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .basis import (
    Matrix,
    SchurElement,
    canonical_pair,
    check_matrix,
    col_sums,
    enumerate_basis,
    row_sums,
)
from .linalg import rational_rank
from .multiplication import multiply
from .partitions import (
    Partition,
    character,
    check_partition,
    partitions_of,
    permutations_by_type,
    permute_positions,
    tableaux_count,
)


@dataclass(frozen=True)
class CentreElement:
    """An element of the centre together with the partition that indexes it."""

    label: Partition
    element: SchurElement


@lru_cache(maxsize=None)
def _pair_count(shape: Partition, top: tuple[int, ...], bottom: tuple[int, ...]) -> int:
    return sum(
        1
        for w in permutations_by_type(sum(shape)).get(shape, ())
        if permute_positions(w, bottom) == top
    )


def class_coefficient(shape: Partition, entries: Matrix) -> int:
    """Number of permutations of cycle type ``shape`` carrying the canonical
    bottom word of the matrix to its top word.

    Zero whenever the row sums differ from the column sums: a position
    permutation preserves letter content.
    """
    shape = check_partition(shape)
    _, d = check_matrix(entries)
    if sum(shape) != d:
        raise ValueError(f"partition weight {sum(shape)} != matrix entry sum {d}")
    if row_sums(entries) != col_sums(entries):
        return 0
    top, bottom = canonical_pair(entries)
    return _pair_count(shape, top, bottom)


def centre_basis_element(shape: Partition, n: int, d: int) -> CentreElement:
    """Image of the class sum of cycle type ``shape`` inside S(n,d)."""
    shape = check_partition(shape)
    if sum(shape) != d:
        raise ValueError(f"partition weight {sum(shape)} != d = {d}")
    terms = {}
    for D in enumerate_basis(n, d):
        c = class_coefficient(shape, D)
        if c:
            terms[D] = c
    return CentreElement(label=shape, element=SchurElement(n, d, terms))


def is_central(x: SchurElement) -> bool:
    """True iff x commutes with every basis element."""
    for D in enumerate_basis(x.n, x.d):
        g = SchurElement(x.n, x.d, {D: 1})
        if multiply(x, g) != multiply(g, x):
            return False
    return True


def primitive_idempotent(shape: Partition, n: int, d: int) -> CentreElement:
    """The minimal central idempotent indexed by ``shape``:

        (f / d!) * sum over classes mu of chi_shape(mu) * Z_mu,

    with f the standard tableau count of ``shape``.  For shapes with more
    than n parts the combination collapses to the zero element.
    """
    shape = check_partition(shape)
    if sum(shape) != d:
        raise ValueError(f"partition weight {sum(shape)} != d = {d}")
    f = tableaux_count(shape)
    scale = Fraction(f, factorial(d))
    total = SchurElement.zero(n, d)
    for mu in partitions_of(d):
        ch = character(shape, mu)
        if ch == 0:
            continue
        total = total + centre_basis_element(mu, n, d).element.scale(scale * ch)
    return CentreElement(label=shape, element=total)


def centre_dimension(n: int, d: int) -> int:
    """Rank of the class-sum images as vectors in the basis.

    The class sums always span the centre but are linearly dependent when
    n < d, so the rank is computed, not assumed.
    """
    B = enumerate_basis(n, d)
    index_of = {D: k for k, D in enumerate(B)}
    rows = []
    for shape in partitions_of(d):
        vec = [Fraction(0)] * len(B)
        for D, c in centre_basis_element(shape, n, d).element.terms.items():
            vec[index_of[D]] = Fraction(c)
        rows.append(vec)
    return rational_rank(rows)
