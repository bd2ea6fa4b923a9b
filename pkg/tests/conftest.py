"""Shared fixtures and independent brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
import math

import pytest

from lppkit import DegreeList, HilbertFunction, Monomial, MonomialIdeal
from lppkit.monomials import monomials_of_degree


def all_degree_lists(n_max: int, a_max: int, a_min: int = 1):
    """Every non-decreasing degree list with n <= n_max and entries <= a_max."""
    for n in range(1, n_max + 1):
        for degs in itertools.combinations_with_replacement(
            range(a_min, a_max + 1), n
        ):
            yield DegreeList(degs)


def hf_by_inclusion_exclusion(ideal: MonomialIdeal) -> HilbertFunction:
    """Independent Hilbert function oracle via inclusion-exclusion over
    generator subsets: counts degree-d multiples of each lcm directly."""
    n = ideal.n
    gens = [g.exps for g in ideal.gens]
    assert len(gens) <= 20, "oracle is exponential in the generator count"
    subsets = []
    for bits in itertools.product((0, 1), repeat=len(gens)):
        chosen = [g for g, b in zip(gens, bits) if b]
        if not chosen:
            continue
        lcm_deg = sum(max(g[k] for g in chosen) for k in range(n))
        subsets.append((len(chosen), lcm_deg))

    def in_ideal_count(d: int) -> int:
        total = 0
        for size, ldeg in subsets:
            if ldeg <= d:
                total += (-1) ** (size + 1) * math.comb(n - 1 + d - ldeg, n - 1)
        return total

    values = []
    d = 0
    while True:
        h = math.comb(n - 1 + d, n - 1) - in_ideal_count(d)
        values.append(h)
        if h == 0:
            return HilbertFunction(tuple(values))
        d += 1
        assert d < 200, "ideal does not look Artinian"


def brute_colon(j: MonomialIdeal, i: MonomialIdeal, degree_bound: int) -> MonomialIdeal:
    """Colon oracle: scan all monomials up to degree_bound for membership."""
    kept = []
    for d in range(degree_bound + 1):
        for m in monomials_of_degree(j.n, d):
            if any(k.divides(m) for k in kept):
                continue
            if all(j.contains(m * g) for g in i.gens):
                kept.append(m)
    return MonomialIdeal.from_gens(j.n, kept)


@pytest.fixture
def remark_ideal_234() -> MonomialIdeal:
    """Degree-list (2,3,4) lex-plus-powers ideal with H = 1 3 5 3 1 0."""
    return MonomialIdeal.from_gens(
        3,
        [
            Monomial((2, 0, 0)),
            Monomial((0, 3, 0)),
            Monomial((0, 0, 4)),
            Monomial((1, 2, 0)),
            Monomial((1, 1, 1)),
            Monomial((1, 0, 2)),
            Monomial((0, 2, 2)),
        ],
    )


@pytest.fixture
def remark_ideal_233() -> MonomialIdeal:
    """Degree-list (2,3,3) lex-plus-powers ideal with H = 1 3 5 3 1 0."""
    return MonomialIdeal.from_gens(
        3,
        [
            Monomial((2, 0, 0)),
            Monomial((0, 3, 0)),
            Monomial((0, 0, 3)),
            Monomial((1, 2, 0)),
            Monomial((1, 1, 1)),
        ],
    )
