from fractions import Fraction

import pytest

from conftest import partitions_upto, schur_oracle

from macdaha.combinat import (GTPattern, format_signature, gt_enumerate,
                              gt_weight, interlaces, interlacing_signatures,
                              parse_signature, rho, rho_tilde, shift,
                              shifted_chain_enumerate)
from macdaha.npoly import NPoly
from macdaha.qfield import CR_ONE
from macdaha.sympoly import from_npoly


def weyl_dim(lam):
    n = len(lam)
    r = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            r *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(r)


def test_interlaces():
    assert interlaces((1,), (2, 0))
    assert not interlaces((3,), (2, 0))
    assert interlaces((1, 0), (1, 1, 0))
    with pytest.raises(ValueError):
        interlaces((1, 0), (2, 0))


def test_gt_enumerate_counts():
    assert len(gt_enumerate((1, 0))) == 2
    assert len(gt_enumerate((2, 0))) == 3
    assert len(gt_enumerate((1, 1, 0))) == 3


def test_gt_counts_match_weyl_dimension():
    for n in (2, 3, 4):
        for lam in partitions_upto(6 if n < 4 else 4, n):
            assert len(gt_enumerate(lam)) == weyl_dim(lam), lam


def test_patterns_interlace_and_order_is_deterministic():
    pats = gt_enumerate((2, 1, 0))
    for p in pats:
        for l in range(len(p.rows) - 1):
            assert interlaces(p.rows[l], p.rows[l + 1])
    keys = [p.sort_key() for p in pats]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_gt_weight_values():
    up, down = gt_enumerate((1, 0))
    weights = {gt_weight(p) for p in (up, down)}
    assert weights == {(1, 0), (0, 1)}


def test_gt_weight_sum_is_schur():
    for lam in [(1, 0), (2, 0), (2, 1), (2, 1, 0), (3, 1, 0)]:
        n = len(lam)
        acc = NPoly.zero(n)
        for p in gt_enumerate(lam):
            acc = acc + NPoly.monomial(gt_weight(p), CR_ONE)
        assert from_npoly(acc) == schur_oracle(lam, n)


def test_shifts():
    assert rho(3) == (1, 0, -1)
    assert rho(2) == (Fraction(1, 2), Fraction(-1, 2))
    assert rho_tilde(4) == (0, -1, -2, -3)
    assert shift((2, 0), 2, "bar") == (2, -2)
    assert shift((2, 0), 3, "tilde") == (2, -2)
    with pytest.raises(ValueError):
        shift((1, 0), 2, "hat")


def test_chains_at_k1_are_gt_patterns():
    for lam in [(1, 0), (2, 0, 0), (2, 1, 0)]:
        chains = shifted_chain_enumerate(lam, 1)
        pats = gt_enumerate(lam)
        assert sorted(chains) == sorted(tuple(p.rows) for p in pats)


def test_chain_window_example():
    chains = shifted_chain_enumerate((0, 0), 2)
    assert sorted(c[0] for c in chains) == [(-1,), (0,)]


def test_chain_count_equals_shifted_gt_count():
    for (lam, k) in [((1, 0), 2), ((2, 0), 2), ((1, 1, 0), 2), ((1, 0, 0), 3)]:
        shifted_top = shift(lam, k, "tilde")
        assert len(shifted_chain_enumerate(lam, k)) == \
            len(gt_enumerate(shifted_top))


def test_chain_rows_interlace_in_tilde_coordinates():
    for chain in shifted_chain_enumerate((2, 1, 0), 2):
        tilded = [shift(row, 2, "tilde") for row in chain]
        for a, b in zip(tilded, tilded[1:]):
            assert interlaces(a, b)


def test_signature_text_roundtrip():
    assert parse_signature("2,1,0") == (2, 1, 0)
    assert parse_signature("1,-1") == (1, -1)
    assert parse_signature("") == ()
    assert format_signature((1, -1)) == "1,-1"
    with pytest.raises(ValueError):
        parse_signature("1,2")
    with pytest.raises(ValueError):
        parse_signature("a,b")


def test_gtpattern_validation():
    with pytest.raises(ValueError):
        GTPattern(rows=((3,), (2, 0)))
    with pytest.raises(ValueError):
        GTPattern(rows=((1, 0),))
