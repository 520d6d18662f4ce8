"""Closed-form builders against frozen values, oracles and cross-checks.

The heavyweight exhaustive comparisons (full battery, order 14/20) live in
test_acceptance.py; these tests keep to small orders so the module suite
stays fast.
"""

import pytest

from comppat.genfun import (avoidance_sequence, build_gf, choose, d_series,
                            gf_111, gf_112, gf_123, gf_123_recursive,
                            gf_221, gf_peak, gf_peak_recursive, gf_valley,
                            m_poly, m_poly_prefix, n_poly, nat_closed_forms,
                            qpochhammer_inverse, t_poly)
from comppat.patterns import (PartSet, PatternId, brute_force_tables,
                              count_occurrences, enumerate_compositions)
from comppat.series import Grading, make_monomial, one

P = PatternId
NAT = PartSet.naturals()

# published avoidance sequences over the naturals (n = 0, 1, ...)
SEQ_111 = [1, 1, 2, 3, 7, 13, 24, 46, 89, 170, 324, 618, 1183]
SEQ_112 = [1, 1, 2, 4, 7, 13, 24, 43, 78, 142, 256, 463, 838]
SEQ_221 = [1, 1, 2, 4, 8, 15, 30, 58, 113, 220, 429, 835, 1627]
SEQ_123 = [1, 1, 2, 4, 8, 16, 31, 61, 119, 232, 453, 883, 1721]
SEQ_PEAK = [1, 1, 2, 4, 7, 13, 22, 38, 64, 107, 177, 293, 481]
SEQ_VALLEY = [1, 1, 2, 4, 8, 15, 28, 52, 96, 177, 326, 600, 1104]


def xz(order, a):
    return make_monomial(Grading.X, order, a, 1, 0, 1)


def test_choose_contract():
    assert choose(5, 2) == 10
    assert choose(5, -1) == 0
    assert choose(3, 7) == 0
    assert choose(0, 0) == 1


# -- t polynomials -----------------------------------------------------------

def test_t1_two_parts():
    assert t_poly((1, 2), 1, 10) == xz(10, 1) + xz(10, 2)


def test_t2_three_parts():
    # pairs of distinct parts from {1,2,3}: sums 3, 4, 5
    got = t_poly((1, 2, 3), 2, 10)
    assert got.coeffs == {(3, 2, 0): 1, (4, 2, 0): 1, (5, 2, 0): 1}


def test_t0_and_beyond():
    assert t_poly((1, 2), 0, 10) == one(Grading.X, 10)
    assert t_poly((1, 2), 3, 10).is_zero()


@pytest.mark.parametrize("p", range(6))
def test_t_nat_closed_form(p):
    assert t_poly(NAT, p, 15) == nat_closed_forms("T", p, 15)


# -- gf_111 ------------------------------------------------------------------

def test_gf_111_avoiders_prefix():
    assert avoidance_sequence(P.P111, NAT, 12) == SEQ_111


def test_gf_111_unit_coefficients():
    s = gf_111(NAT, 6)
    assert s.coefficient(0, 0, 0) == 1
    assert s.coefficient(3, 3, 1) == 1  # the composition 111


# -- gf_112 / gf_221 ---------------------------------------------------------

def test_gf_112_avoiders_prefix():
    assert avoidance_sequence(P.P112, NAT, 12) == SEQ_112


def test_gf_221_avoiders_prefix():
    assert avoidance_sequence(P.P221, NAT, 12) == SEQ_221


def test_gf_112_221_oracle_134():
    A = PartSet.of(1, 3, 4)
    oracles = brute_force_tables(A, 10, patterns=(P.P112, P.P221))
    assert gf_112(A, 10).coeffs == oracles[P.P112].counts
    assert gf_221(A, 10).coeffs == oracles[P.P221].counts


# -- gf_123 ------------------------------------------------------------------

def test_gf_123_avoiders_prefix():
    assert avoidance_sequence(P.P123, NAT, 12) == SEQ_123


def test_gf_123_first_occurrence_at_6():
    s = gf_123(NAT, 7)
    for n in range(6):
        assert all(r == 0 for (nn, m, r) in s.coeffs if nn == n)
    assert s.coefficient(6, 3, 1) == 1  # the composition 123


def test_gf_123_oracle_123set():
    A = PartSet.of(1, 2, 3)
    oracle = brute_force_tables(A, 10, patterns=(P.P123,))[P.P123]
    assert gf_123(A, 10).coeffs == oracle.counts


def test_gf_123_recursive_agrees():
    assert gf_123_recursive((), 8) == one(Grading.X, 8)
    for A in (PartSet.of(1, 2), PartSet.of(2, 3, 5), NAT):
        assert gf_123(A, 12) == gf_123_recursive(A, 12)


# -- d_series ----------------------------------------------------------------

def test_d_series_degenerate():
    assert d_series((), 8) == one(Grading.X, 8)
    geo = (1 - xz(9, 3)).reciprocal()
    assert d_series((3,), 9) == geo


def test_d_series_sentinel_oracle():
    # prepending any part smaller than min(A) realizes the "extends on the
    # left" weight; 1 works as the sentinel for A = {2,3}
    A = PartSet.of(2, 3)
    table = {}
    for n in range(11):
        for comp in enumerate_compositions(n, A):
            r = count_occurrences((1,) + comp, P.P123)
            key = (n, len(comp), r)
            table[key] = table.get(key, 0) + 1
    assert d_series(A, 10).coeffs == table


# -- M/N polynomials ---------------------------------------------------------

def test_m1_is_part_sum():
    assert m_poly((1, 3, 4), 1, 10) == xz(10, 1) + xz(10, 3) + xz(10, 4)
    assert n_poly((1, 3, 4), 1, 10) == xz(10, 1) + xz(10, 3) + xz(10, 4)


def test_m2_three_parts():
    got = m_poly((1, 2, 3), 2, 10)
    assert got.coeffs == {(3, 2, 0): 1, (4, 2, 0): 1, (5, 2, 0): 1}


def test_n2_allows_repeats():
    got = n_poly((1, 2), 2, 10)
    assert got.coeffs == {(2, 2, 0): 1, (3, 2, 0): 1, (4, 2, 0): 1}


def test_base_cases_empty_set():
    assert m_poly((), 0, 5) == one(Grading.X, 5)
    assert m_poly((), 2, 5).is_zero()
    assert n_poly((), 3, 5).is_zero()


@pytest.mark.parametrize("A", [(1, 2), (1, 3, 4), (2, 3, 5), NAT])
def test_prefix_suffix_agree(A):
    for s in range(6):
        assert m_poly(A, s, 12) == m_poly_prefix(A, s, 12), (A, s)


@pytest.mark.parametrize("s", range(4))
def test_mn_nat_closed_forms(s):
    assert m_poly(NAT, 2 * s, 15) == nat_closed_forms("M_even", s, 15)
    assert m_poly(NAT, 2 * s + 1, 15) == nat_closed_forms("M_odd", s, 15)
    assert n_poly(NAT, 2 * s + 1, 15) == nat_closed_forms("N_odd", s, 15)


def test_nat_closed_forms_rejects_unknown_kind():
    with pytest.raises(ValueError):
        nat_closed_forms("M_all", 1, 10)


# -- gf_peak / gf_valley -----------------------------------------------------

def test_gf_peak_avoiders_prefix():
    assert avoidance_sequence(P.PEAK, NAT, 12) == SEQ_PEAK


def test_gf_valley_avoiders_prefix():
    assert avoidance_sequence(P.VALLEY, NAT, 12) == SEQ_VALLEY


def test_gf_peak_valley_oracle_12():
    A = PartSet.of(1, 2)
    oracles = brute_force_tables(A, 12, patterns=(P.PEAK, P.VALLEY))
    assert gf_peak(A, 12).coeffs == oracles[P.PEAK].counts
    assert gf_valley(A, 12).coeffs == oracles[P.VALLEY].counts


def test_gf_peak_first_peak():
    assert gf_peak(NAT, 6).coefficient(4, 3, 1) == 1  # the composition 121


def test_gf_peak_recursive_agrees():
    geo = (1 - xz(10, 2)).reciprocal()
    assert gf_peak_recursive((2,), 10) == geo
    for A in (PartSet.of(1, 2), PartSet.of(1, 2, 3), NAT):
        assert gf_peak(A, 12) == gf_peak_recursive(A, 12)


def test_gf_peak_recursive_y1_collapse():
    plain = (1 - xz(10, 1) - xz(10, 2)).reciprocal()
    assert gf_peak_recursive((1, 2), 10).substitute_y1() == plain


# -- shared builder properties ------------------------------------------------

@pytest.mark.parametrize("p", list(P))
def test_y1_collapse_forgets_statistic(p):
    # summing over r must leave the plain composition series
    for A in (PartSet.of(1, 2), PartSet.of(2, 3, 5)):
        order = 10
        parts_sum = sum((xz(order, a) for a in A.parts),
                        start=make_monomial(Grading.X, order, 0, 0, 0, 0))
        plain = (1 - parts_sum).reciprocal()
        assert build_gf(p, A, order).substitute_y1() == plain, (p, A)


@pytest.mark.parametrize("p", list(P))
def test_truncation_consistency_small(p):
    for A in (PartSet.of(1, 3), NAT):
        assert build_gf(p, A, 12).truncate(6) == build_gf(p, A, 6)


@pytest.mark.parametrize("p", list(P))
def test_builder_support_bounds(p):
    s = build_gf(p, NAT, 10)
    assert all(m <= n and r <= max(0, m - 2) for (n, m, r) in s.coeffs)


@pytest.mark.parametrize("p", list(P))
def test_specialization_chain_matches_collapsed_path(p):
    full = build_gf(p, NAT, 12).substitute_y0().substitute_z1()
    assert [full.coefficient(n, 0, 0) for n in range(13)] == \
        avoidance_sequence(p, NAT, 12)


def test_nat_materialization_stable_under_enlargement():
    # coefficients with n <= 10 do not change when the part set grows
    small = gf_peak(tuple(range(1, 11)), 10)
    large = gf_peak(tuple(range(1, 30)), 10)
    assert small == large


# -- q-Pochhammer ------------------------------------------------------------

def test_qpochhammer_inverse_round_trip():
    for p in (1, 2, 5):
        inv = qpochhammer_inverse(p, 20)
        prod = one(Grading.X, 20)
        for j in range(1, p + 1):
            prod = prod * (1 - make_monomial(Grading.X, 20, j, 0, 0, 1))
        assert inv.series * prod == one(Grading.X, 20)
        assert all(c >= 0 for c in inv.series.coeffs.values())


def test_qpochhammer_inverse_counts_partitions():
    # 1/(x;x)_2 counts partitions into parts <= 2
    inv = qpochhammer_inverse(2, 8).series
    assert [inv.coefficient(n, 0, 0) for n in range(9)] == \
        [1, 1, 2, 2, 3, 3, 4, 4, 5]
