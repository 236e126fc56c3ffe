"""Closed-form orders and counts over finite fields, the flag-count quotient,
and the exact chain identity connecting nested flag types."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbit_entropy.entropy import CoarseMap, ProbVec
from orbit_entropy.exact import exact_div, q_multinomial
from orbit_entropy.symplectic import (
    FlagType,
    gl_order,
    ig_count,
    isotropic_flag_count,
    normalized_logq_quotient,
    sp_order,
    sp_quotient_closed,
    symplectic_chain_identity_check,
    unipotent_radical_order,
)

HALF = ProbVec(("1/2", "1/2"))


def test_gl_order_values():
    assert gl_order(0, 2) == 1
    assert gl_order(1, 2) == 1
    assert gl_order(2, 2) == 6
    assert gl_order(3, 2) == 168
    assert gl_order(4, 2) == 20160
    assert gl_order(2, 3) == 48


def test_sp_order_values():
    assert sp_order(0, 2) == 1
    assert sp_order(1, 2) == 6
    assert sp_order(2, 2) == 720
    assert sp_order(1, 3) == 24
    assert sp_order(2, 3) == 51840


def test_unipotent_radical_order_values():
    assert unipotent_radical_order(0, 5, 3) == 1
    assert unipotent_radical_order(1, 2, 2) == 2 ** 3
    assert unipotent_radical_order(2, 2, 2) == 2 ** 3
    assert unipotent_radical_order(1, 1, 2) == 2


def test_ig_count_values():
    assert ig_count(0, 4, 2) == 1
    assert ig_count(1, 1, 2) == 3
    assert ig_count(1, 2, 2) == 15
    assert ig_count(2, 2, 2) == 15
    assert ig_count(1, 3, 2) == 63


def test_ig_count_rejects_bad_dimension():
    with pytest.raises(ValueError):
        ig_count(3, 2, 2)
    with pytest.raises(ValueError):
        ig_count(-1, 2, 2)


def test_lagrangian_specialization():
    for q in (2, 3):
        for n in range(1, 16):
            expected = 1
            for j in range(1, n + 1):
                expected *= q ** j + 1
            assert ig_count(n, n, q) == expected


def test_line_specialization():
    for q in (2, 3, 5):
        for n in range(1, 16):
            assert ig_count(1, n, q) == exact_div(q ** (2 * n) - 1, q - 1)


def test_stabilizer_factorization_medium_grid():
    for q in (2, 3, 5):
        for n in range(13):
            total = sp_order(n, q)
            for s in range(n + 1):
                product = (
                    ig_count(s, n, q)
                    * unipotent_radical_order(s, n, q)
                    * gl_order(s, q)
                    * sp_order(n - s, q)
                )
                assert product == total


def test_flag_type_validation():
    ft = FlagType([1, 1], 2, 2)
    assert ft.increments == (1, 1)
    with pytest.raises(ValueError):
        FlagType((0, 1), 2, 2)
    with pytest.raises(ValueError):
        FlagType((2, 1), 2, 2)
    assert isotropic_flag_count(FlagType((), 3, 2)) == 1


def test_isotropic_flag_count_values():
    assert isotropic_flag_count(FlagType((1, 1), 2, 2)) == 45
    assert isotropic_flag_count(FlagType((2,), 2, 2)) == 15
    assert isotropic_flag_count(FlagType((1,), 2, 2)) == 15
    # refining a subspace into a full flag multiplies by the q-multinomial
    assert isotropic_flag_count(FlagType((1, 1), 2, 2)) == isotropic_flag_count(
        FlagType((2,), 2, 2)
    ) * q_multinomial(2, (1, 1), 2)


def test_sp_quotient_closed_values():
    assert sp_quotient_closed(2, HALF, 2) == 15
    assert sp_quotient_closed(2, HALF, 3) == 40
    # the final block is not an isotropic step, so a point mass stabilizes
    # everything and the quotient collapses
    assert sp_quotient_closed(1, ProbVec(("1",)), 2) == 1


def test_sp_quotient_matches_partial_flag_count():
    cases = [
        (2, HALF, 2),
        (4, HALF, 3),
        (6, ProbVec(("1/3", "1/3", "1/3")), 2),
        (5, ProbVec(("1",)), 4),
    ]
    for n, dist, q in cases:
        counts = dist.scaled_counts(n)
        assert sp_quotient_closed(n, dist, q) == isotropic_flag_count(
            FlagType(counts[:-1], n, q)
        )


def test_normalized_logq_quotient_value():
    got = normalized_logq_quotient(2, HALF, 2)
    assert got == pytest.approx(math.log(15) / (4 * math.log(2)), abs=1e-15)


def test_normalized_logq_error_shrinks():
    from orbit_entropy.entropy import symplectic_entropy

    limit = float(symplectic_entropy(HALF))
    errors = [
        abs(normalized_logq_quotient(n, HALF, 2) - limit) for n in (8, 16, 32)
    ]
    assert errors == sorted(errors, reverse=True)


def test_chain_identity_worked_example():
    dist = ProbVec(("1/4", "1/4", "1/2"))
    report = symplectic_chain_identity_check(4, dist, CoarseMap((2, 1)), 2)
    assert report.holds
    assert report.lhs == 16065
    assert report.residual == 0


@st.composite
def chain_case(draw):
    weights = draw(st.lists(st.integers(1, 4), min_size=1, max_size=5))
    d = sum(weights)
    mult = draw(st.integers(1, max(1, 16 // d)))
    n = d * mult
    dist = ProbVec(Fraction(w, d) for w in weights)
    k = len(weights)
    if k > 1:
        cuts = draw(st.sets(st.integers(1, k - 1), max_size=k - 1))
    else:
        cuts = set()
    bounds = [0, *sorted(cuts), k]
    cmap = CoarseMap(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    q = draw(st.sampled_from((2, 3, 4, 5)))
    return n, dist, cmap, q


@given(chain_case())
@settings(max_examples=200, deadline=None)
def test_chain_identity_randomized(case):
    n, dist, cmap, q = case
    report = symplectic_chain_identity_check(n, dist, cmap, q)
    assert report.holds, (n, dist.probs, cmap.blocks, q, report)


@given(chain_case())
@settings(max_examples=100, deadline=None)
def test_quotient_counts_are_positive_and_divide_group_related_products(case):
    n, dist, _, q = case
    count = sp_quotient_closed(n, dist, q)
    assert count >= 1
    # the count times the flag stabilizer order equals the full group order;
    # the stabilizer order is recoverable as an exact division
    exact_div(sp_order(n, q), count)
