"""Betti tables for free multiplicities and their Euler-characteristic check."""
import pytest

from multibraid import classifier
from multibraid.model import AnnWitness
from multibraid.resolution import (
    BettiTable,
    EulerCheck,
    NotFreeError,
    TableUnavailableError,
    betti_table_free,
    euler_hf_check,
    minimality_probe,
)


def test_constant_even_tables():
    for k in (1, 2):
        t = betti_table_free((2 * k,) * 6)
        assert t.step0 == (2 * k,) * 6
        assert t.step1 == (3 * k,) * 8
        assert t.step2 == (4 * k,) * 3


def test_constant_odd_tables():
    for k in (1, 2):
        t = betti_table_free((2 * k + 1,) * 6)
        assert t.step0 == (2 * k + 1,) * 6
        assert t.step1 == (3 * k + 1,) * 4 + (3 * k + 2,) * 4
        assert t.step2 == (4 * k + 1, 4 * k + 2, 4 * k + 3)


def test_vertex_weight_tables():
    # m_ij = n_i + n_j with n = (1, 1, 1, 1) coincides with the constant-2 table
    assert betti_table_free((2,) * 6) == betti_table_free(
        tuple(1 + 1 for _ in range(6))
    )
    # n = (1, 2, 3, 4): two syzygies of degree n_i + n_j + n_k per triangle,
    # top step at the total weight
    t = betti_table_free((3, 4, 5, 5, 6, 7))
    assert t.step0 == (3, 4, 5, 5, 6, 7)
    assert t.step1 == (6, 6, 7, 7, 8, 8, 9, 9)
    assert t.step2 == (10, 10, 10)


def test_euler_check_passes_and_catches_corruption():
    for m, dmax in [((2,) * 6, 8), ((3,) * 6, 10), ((3, 4, 5, 5, 6, 7), 18)]:
        t = betti_table_free(m)
        assert euler_hf_check(m, t, dmax) == EulerCheck(True)
    t = betti_table_free((2,) * 6)
    bumped = BettiTable(t.step0, t.step1, (3, 4, 5))
    res = euler_hf_check((2,) * 6, bumped, 8)
    assert not res.ok and res.failed_degree is not None


def test_table_shape_validation():
    with pytest.raises(ValueError):
        BettiTable((2,) * 5, (3,) * 8, (4,) * 3)
    with pytest.raises(ValueError):
        BettiTable((2,) * 6, (3,) * 7, (4,) * 3)


def test_alternating_degree_sum_vanishes():
    for m in [(2,) * 6, (3,) * 6, (3, 4, 5, 5, 6, 7), (5, 5, 5, 2, 2, 2)]:
        t = betti_table_free(m)
        assert sum(t.step0) - sum(t.step1) + sum(t.step2) == 0
        assert sum(t.step2) == sum(m)  # exponent-sum rule carried by the top step


def test_witness_must_match():
    good = classifier.ann_free((2,) * 6)
    witness = AnnWitness(good[0], good[1])
    with pytest.raises(ValueError):
        betti_table_free((3,) * 6, witness)


def test_minimality_probe():
    t = betti_table_free((2,) * 6)
    assert minimality_probe((2,) * 6, t) is True
    m = (1, 1, 1, 3, 1, 1)  # (x-y)^3 lies in <x, y>
    t2 = betti_table_free(m)
    assert minimality_probe(m, t2) is False
    t3 = betti_table_free((1,) * 6)
    assert minimality_probe((1,) * 6, t3) is False


def test_not_free_and_unavailable_errors():
    with pytest.raises(NotFreeError):
        betti_table_free((3, 2, 3, 3, 2, 3))
    # free through a free vertex, but no additive presentation exists
    m = (1, 1, 1, 1, 1, 4)
    assert classifier.free_vertex(m) is not None
    assert classifier.ann_free(m) is None
    with pytest.raises(TableUnavailableError):
        betti_table_free(m)


def test_euler_check_on_free_range():
    import itertools

    checked = 0
    for m in itertools.product((1, 2, 3), repeat=6):
        found = classifier.ann_free(m)
        if found is None:
            continue
        t = betti_table_free(m, AnnWitness(found[0], found[1]))
        res = euler_hf_check(m, t, 2 * max(m) + 4)
        assert res.ok, (m, res)
        checked += 1
        if checked >= 40:  # the acceptance suite covers entries <= 4 in full
            break


def test_text_rendering_is_deterministic():
    t = betti_table_free((3,) * 6)
    text = t.to_text()
    assert "S(-4)^4" in text and "S(-5)" in text
    assert text == betti_table_free((3,) * 6).to_text()
    assert t.to_json() == {
        "step0": [3] * 6,
        "step1": [4, 4, 4, 4, 5, 5, 5, 5],
        "step2": [5, 6, 7],
    }
