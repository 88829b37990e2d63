"""Named self-checks over a chosen ambient (n, d).

Each check returns a CheckResult so the CLI can print one line per check
and exit nonzero when anything fails.  The acceptance test suite drives
the same functions at pinned sizes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, factorial

from .basis import (
    SchurElement,
    basis_count,
    canonical_pair,
    col_sums,
    enumerate_basis,
    identity_element,
    matrix_from_pair,
    row_sums,
)
from .centre import (
    centre_basis_element,
    class_coefficient,
    is_central,
    primitive_idempotent,
)
from .multiplication import _basis_product, multiply, structure_constant
from .oracle import TensorDimensionError, find_product_mismatch
from .partitions import (
    character,
    class_size,
    inverse_permutation,
    partitions_of,
    permutations_by_type,
    permute_positions,
    tableaux_count,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _result(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, detail)


def check_dimension_law(n: int, d: int) -> CheckResult:
    expected = comb(n * n + d - 1, d)
    actual = len(enumerate_basis(n, d))
    return _result(
        "dimension-law",
        actual == expected == basis_count(n, d),
        f"|M({n},{d})| = {actual}, formula {expected}",
    )


def check_pair_roundtrip(n: int, d: int) -> CheckResult:
    for D in enumerate_basis(n, d):
        top, bottom = canonical_pair(D)
        if matrix_from_pair(top, bottom, n) != D:
            return _result("pair-roundtrip", False, f"failed at {D}")
    return _result("pair-roundtrip", True)


def check_identity_neutral(n: int, d: int) -> CheckResult:
    e = identity_element(n, d)
    for D in enumerate_basis(n, d):
        x = SchurElement(n, d, {D: 1})
        if multiply(e, x) != x or multiply(x, e) != x:
            return _result("identity-neutral", False, f"failed at {D}")
    return _result("identity-neutral", True)


def check_oracle_equivalence(n: int, d: int, max_dim: int | None = None) -> CheckResult:
    try:
        mismatch = find_product_mismatch(n, d, max_dim)
    except TensorDimensionError as exc:
        return CheckResult("oracle-equivalence", SKIP, str(exc))
    if mismatch is not None:
        return _result("oracle-equivalence", False, f"pair {mismatch}")
    pairs = len(enumerate_basis(n, d)) ** 2
    return _result("oracle-equivalence", True, f"{pairs} ordered pairs")


def check_structure_constants(
    n: int, d: int, exhaustive_limit: int = 200_000, sample: int = 300, seed: int = 0
) -> CheckResult:
    B = enumerate_basis(n, d)
    total = len(B) ** 3
    if total <= exhaustive_limit:
        triples = (
            (Dx, Dy, Dt) for Dx in B for Dy in B for Dt in B
        )
        scope = f"all {total} triples"
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(B), rng.choice(B), rng.choice(B)) for _ in range(sample))
        scope = f"{sample} sampled triples"
    for Dx, Dy, Dt in triples:
        table = dict(_basis_product(Dx, Dy))
        if structure_constant(Dx, Dy, Dt) != table.get(Dt, 0):
            return _result("structure-constants", False, f"triple {(Dx, Dy, Dt)}")
    return _result("structure-constants", True, scope)


def check_content_margins(n: int, d: int, limit_pairs: int = 10_000, seed: int = 0) -> CheckResult:
    """Products inherit column sums from the left factor and row sums from
    the right factor."""
    B = enumerate_basis(n, d)
    if len(B) ** 2 <= limit_pairs:
        pairs = [(Dx, Dy) for Dx in B for Dy in B]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(B), rng.choice(B)) for _ in range(limit_pairs)]
    for Dx, Dy in pairs:
        for P, _ in _basis_product(Dx, Dy):
            if col_sums(P) != col_sums(Dx) or row_sums(P) != row_sums(Dy):
                return _result("content-margins", False, f"pair {(Dx, Dy)} -> {P}")
    return _result("content-margins", True, f"{len(pairs)} pairs")


def check_centrality(n: int, d: int) -> CheckResult:
    for shape in partitions_of(d):
        if not is_central(centre_basis_element(shape, n, d).element):
            return _result("centrality", False, f"class sum {shape} not central")
    return _result("centrality", True, f"{len(partitions_of(d))} class sums")


def check_row_sum_law(n: int, d: int) -> CheckResult:
    """Summing class coefficients over all output words of a fixed input word
    recovers the class size: each class member contributes exactly one word."""
    words = list(itertools.product(range(1, n + 1), repeat=d))
    for shape in partitions_of(d):
        expected = class_size(shape)
        for bottom in words:
            got = sum(
                class_coefficient(shape, matrix_from_pair(top, bottom, n))
                for top in words
            )
            if got != expected:
                return _result(
                    "row-sum-law", False, f"shape {shape}, word {bottom}: {got}"
                )
    return _result("row-sum-law", True)


def check_action_convention(n: int, d: int) -> CheckResult:
    """Counting with w or with w^{-1} yields the same class coefficients."""
    if d > 5:
        return CheckResult("action-convention", SKIP, "exhaustive only for d <= 5")
    by_type = permutations_by_type(d)
    for D in enumerate_basis(n, d):
        top, bottom = canonical_pair(D)
        for shape, ws in by_type.items():
            direct = sum(1 for w in ws if permute_positions(w, bottom) == top)
            inverse = sum(
                1
                for w in ws
                if permute_positions(inverse_permutation(w), bottom) == top
            )
            if direct != inverse:
                return _result("action-convention", False, f"{shape} at {D}")
            if direct != class_coefficient(shape, D):
                return _result("action-convention", False, f"stored count off at {D}")
    return _result("action-convention", True)


def check_idempotents(n: int, d: int) -> CheckResult:
    shapes = partitions_of(d)
    eps = {s: primitive_idempotent(s, n, d).element for s in shapes}
    for s in shapes:
        if len(s) > n and not eps[s].is_zero():
            return _result("idempotents", False, f"{s} has >{n} parts but is nonzero")
    for s in shapes:
        for t in shapes:
            product = multiply(eps[s], eps[t])
            if s == t and product != eps[s]:
                return _result("idempotents", False, f"{s} not idempotent")
            if s != t and not product.is_zero():
                return _result("idempotents", False, f"{s},{t} not orthogonal")
    total = SchurElement.zero(n, d)
    for s in shapes:
        if len(s) <= n:
            total = total + eps[s]
    if total != identity_element(n, d):
        return _result("idempotents", False, "resolution of identity failed")
    return _result("idempotents", True, f"{sum(1 for s in shapes if len(s) <= n)} idempotents")


def check_characters(d: int) -> CheckResult:
    shapes = partitions_of(d)
    for shape in shapes:
        if character(shape, (1,) * d) != tableaux_count(shape):
            return _result("characters", False, f"identity column off at {shape}")
    if sum(class_size(mu) for mu in shapes) != factorial(d):
        return _result("characters", False, "class sizes do not sum to d!")
    for a in shapes:
        for b in shapes:
            s = sum(
                class_size(mu) * character(a, mu) * character(b, mu) for mu in shapes
            )
            if s != (factorial(d) if a == b else 0):
                return _result("characters", False, f"orthogonality off at {a},{b}")
    return _result("characters", True, f"{len(shapes)} irreducibles")


def check_associativity(n: int, d: int, count: int = 50, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    B = enumerate_basis(n, d)
    for _ in range(count):
        x, y, z = (SchurElement(n, d, {rng.choice(B): 1}) for _ in range(3))
        if multiply(multiply(x, y), z) != multiply(x, multiply(y, z)):
            return _result("associativity", False, f"{x!r}, {y!r}, {z!r}")
    return _result("associativity", True, f"{count} random triples")


def run_suite(n: int, d: int, max_tensor_dim: int | None = None) -> list[CheckResult]:
    """Every check that applies at (n, d), in a fixed order."""
    results = [
        check_dimension_law(n, d),
        check_pair_roundtrip(n, d),
        check_identity_neutral(n, d),
        check_oracle_equivalence(n, d, max_tensor_dim),
        check_structure_constants(n, d),
        check_content_margins(n, d),
        check_centrality(n, d),
        check_row_sum_law(n, d),
        check_action_convention(n, d),
        check_idempotents(n, d),
        check_characters(d),
        check_associativity(n, d),
    ]
    return results
