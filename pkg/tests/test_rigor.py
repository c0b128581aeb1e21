"""Exactness and soundness of the arithmetic core."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fptrace.rigor import (
    Certainty,
    DomainError,
    Enclosure,
    binom,
    certainty_all,
    certify_compare,
    certify_int_le,
    certify_less,
    entropy_enclosure,
    floor_log2,
    log2_e_enclosure,
    log2_enclosure,
    sqrt_enclosure,
)

from tests.helpers import binom_product, log2_bit_expansion, pascal_table


# ---------------------------------------------------------------------------
# binom
# ---------------------------------------------------------------------------


def test_binom_examples():
    assert binom(31, 7) == binom_product(31, 7) == 2629575
    assert binom(5, 0) == 1
    assert binom(4, 5) == 0


def test_binom_pascal_exhaustive():
    table = pascal_table(64)
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)
            assert binom(n, k) == table[n][k]


def test_binom_rejects_negative():
    with pytest.raises(DomainError):
        binom(-1, 2)
    with pytest.raises(DomainError):
        binom(3, -2)


# ---------------------------------------------------------------------------
# log2 enclosures
# ---------------------------------------------------------------------------


def test_log2_exact_powers_of_two():
    assert log2_enclosure(64) == Enclosure.point(6)
    assert log2_enclosure(1) == Enclosure.point(0)
    assert log2_enclosure(F(1, 8)) == Enclosure.point(-3)
    assert log2_enclosure(F(32, 4)) == Enclosure.point(3)


def test_log2_of_three_against_expansion_oracle():
    # 20 exact bits from the digit-extraction oracle, plus the huge-power
    # check floor(2^20 * log2 3) = bitlength(3^(2^20)) - 1
    lo20, hi20 = log2_bit_expansion(F(3), 20)
    power = pow(3, 2**20)
    assert (power.bit_length() - 1) == int(lo20 * 2**20)
    enc = log2_enclosure(3, 40)
    assert enc.width <= F(1, 2**40)
    assert enc.lo < hi20 and enc.hi > lo20
    # decimal reference 1.5849625007...
    assert enc.lo > F("1.5849625007") and enc.hi < F("1.5849625008")


def test_log2_domain_errors():
    with pytest.raises(DomainError):
        log2_enclosure(0)
    with pytest.raises(DomainError):
        log2_enclosure(F(-3, 7))
    with pytest.raises(DomainError):
        log2_enclosure(1.5)  # floats are refused as inexact


def test_log2_soundness_mass_sample():
    """Spec-scale soundness sweep: the exact binary expansion window of
    log2(x) intersects the enclosure at every tested precision."""
    rng = random.Random(20080815)
    oracle_bits = 12
    for _ in range(10_000):
        x = F(rng.randint(1, 1000), rng.randint(1, 1000))
        o_lo, o_hi = log2_bit_expansion(x, oracle_bits)
        prev = None
        for p in (8, 16, 32, 64):
            enc = log2_enclosure(x, p)
            assert enc.width <= F(1, 2**p)
            assert enc.lo <= o_hi and enc.hi >= o_lo, (x, p)
            if prev is not None:
                # monotone refinement: narrower, and still overlapping the
                # previous round (so no certified side can flip)
                assert enc.width <= prev.width
                assert enc.intersects(prev)
            prev = enc


def test_floor_log2():
    assert floor_log2(F(1)) == 0
    assert floor_log2(F(3)) == 1
    assert floor_log2(F(1, 3)) == -2
    assert floor_log2(F(1023, 1)) == 9
    assert floor_log2(F(1024)) == 10


# ---------------------------------------------------------------------------
# entropy
# ---------------------------------------------------------------------------


def test_entropy_exact_cases():
    assert entropy_enclosure(F(1, 2)) == Enclosure.point(1)
    assert entropy_enclosure(0) == Enclosure.point(0)
    assert entropy_enclosure(1) == Enclosure.point(0)


def test_entropy_sixteenth_against_log_oracle():
    # H(1/16) = 1/4 + (15/16) * log2(16/15), assembled from the log
    # enclosure as an independent route
    enc = entropy_enclosure(F(1, 16), 40)
    assert enc.width <= F(1, 2**40)
    via_log = log2_enclosure(F(16, 15), 44) * F(15, 16) + F(1, 4)
    assert enc.intersects(via_log)
    assert enc.lo >= F(3372899, 10**7) and enc.hi <= F(3372901, 10**7)


def test_entropy_domain():
    with pytest.raises(DomainError):
        entropy_enclosure(F(3, 2))
    with pytest.raises(DomainError):
        entropy_enclosure(F(-1, 2))


def test_entropy_symmetry_intersection():
    for num in range(1, 40):
        x = F(num, 41)
        a = entropy_enclosure(x, 48)
        b = entropy_enclosure(1 - x, 48)
        assert a.intersects(b)


# ---------------------------------------------------------------------------
# sqrt
# ---------------------------------------------------------------------------


def test_sqrt_exact_and_enclosed():
    assert sqrt_enclosure(169) == Enclosure.point(13)
    assert sqrt_enclosure(0) == Enclosure.point(0)
    assert sqrt_enclosure(F(9, 4)) == Enclosure.point(F(3, 2))
    enc = sqrt_enclosure(F(697, 4), 40)
    assert enc.width <= F(1, 2**40)
    # independent two-sided oracle: squares of the endpoints bracket x
    assert enc.lo * enc.lo <= F(697, 4) <= enc.hi * enc.hi
    assert enc.lo > F("13.2003") and enc.hi < F("13.2004")


def test_sqrt_random_endpoint_squares():
    rng = random.Random(7)
    for _ in range(300):
        x = F(rng.randint(0, 10**6), rng.randint(1, 10**4))
        enc = sqrt_enclosure(x, 50)
        assert enc.lo >= 0
        assert enc.lo * enc.lo <= x <= enc.hi * enc.hi


def test_sqrt_domain():
    with pytest.raises(DomainError):
        sqrt_enclosure(F(-1, 4))


# ---------------------------------------------------------------------------
# log2(e)
# ---------------------------------------------------------------------------


def test_log2_e():
    enc = log2_e_enclosure(64)
    assert enc.width <= F(1, 2**64)
    assert enc.lo > F("1.4426950408889634") and enc.hi < F("1.4426950408889635")


# ---------------------------------------------------------------------------
# certified comparison
# ---------------------------------------------------------------------------


def test_certify_compare_trivial():
    assert certify_compare(Enclosure.point(2), Enclosure.point(3)).is_true
    assert certify_compare(Enclosure.point(3), Enclosure.point(2)).is_false
    assert certify_compare(Enclosure.point(5), Enclosure.point(5)).is_unresolved


def test_certify_compare_huge_exponents():
    # 2^45 vs 2^33 carried as log enclosures: [45,45] vs [33,33]
    a = Enclosure.point(45)
    b = log2_enclosure(8589934590, 64)
    assert certify_compare(a, b).is_false
    assert certify_compare(b, a).is_true


def test_certify_refinement_escalates():
    # log2(3) = 1.5849625... vs 317/200 = 1.585: the 3.7e-5 gap needs ~15
    # bits, forcing escalation from the 1-bit start precision
    target = F(317, 200)
    cert = certify_less(
        lambda bits: log2_enclosure(3, bits),
        lambda bits: Enclosure.point(target),
        precision_bits=1,
    )
    assert cert.is_true
    assert certify_less(
        lambda bits: Enclosure.point(target),
        lambda bits: log2_enclosure(3, bits),
        precision_bits=1,
    ).is_false


def test_certify_equal_values_unresolved_with_cap():
    cert = certify_compare(
        Enclosure.point(7),
        Enclosure.point(7),
        refine=(lambda b: Enclosure.point(7), lambda b: Enclosure.point(7)),
        max_bits=256,
        start_bits=64,
    )
    assert cert.is_unresolved and cert.precision_bits == 256


@given(
    st.fractions(min_value=-100, max_value=100),
    st.fractions(min_value=0, max_value=2),
    st.fractions(min_value=-100, max_value=100),
    st.fractions(min_value=0, max_value=2),
)
@settings(max_examples=300, deadline=None)
def test_certify_compare_antisymmetric(alo, awidth, blo, bwidth):
    a = Enclosure(alo, alo + awidth)
    b = Enclosure(blo, blo + bwidth)
    ab = certify_compare(a, b)
    ba = certify_compare(b, a)
    assert not (ab.is_true and ba.is_true)


def test_certify_int_le_boundaries():
    assert certify_int_le(1, lambda b: Enclosure.point(1)).is_true
    assert certify_int_le(1, lambda b: Enclosure.point(F(1, 2))).is_false
    assert certify_int_le(2, lambda b: log2_enclosure(5, b)).is_true
    assert certify_int_le(3, lambda b: log2_enclosure(5, b)).is_false


def test_certainty_all():
    t, f, u = Certainty.true(), Certainty.false(), Certainty.unresolved(64)
    assert certainty_all(t, t).is_true
    assert certainty_all(t, f, u).is_false
    assert certainty_all(t, u).is_unresolved
    assert certainty_all().is_true


# ---------------------------------------------------------------------------
# Enclosure algebra
# ---------------------------------------------------------------------------


def test_enclosure_validation_and_ops():
    with pytest.raises(ValueError):
        Enclosure(F(2), F(1))
    e = Enclosure(F(1, 2), F(3, 4))
    assert (e + 1).lo == F(3, 2)
    assert (-e).hi == F(-1, 2)
    assert (e * 2).hi == F(3, 2)
    assert (e * -2).lo == F(-3, 2)
    prod = e * Enclosure(F(-1), F(2))
    assert prod.lo == F(-3, 4) and prod.hi == F(3, 2)
    quot = Enclosure(F(1), F(2)) / Enclosure(F(2), F(4))
    assert quot.lo == F(1, 4) and quot.hi == F(1)
    with pytest.raises(DomainError):
        e / Enclosure(F(-1), F(1))
    with pytest.raises(DomainError):
        e / 0


def test_enclosure_intersection():
    a = Enclosure(F(0), F(2))
    b = Enclosure(F(1), F(3))
    assert a.intersect(b) == Enclosure(F(1), F(2))
    with pytest.raises(ValueError):
        a.intersect(Enclosure(F(5), F(6)))


def test_decimal_rendering():
    assert Enclosure.point(45).decimal_str() == "45.000000000000 ± 0"
    e = Enclosure(F(1, 3), F(1, 3) + F(1, 10**20))
    s = e.decimal_str()
    assert s.startswith("0.333333333333") and "e-21" in s
