"""Exact syzygy oracle: Hilbert functions, local generation, verdicts."""
import itertools

import pytest

from multibraid import obstruction
from multibraid.model import TRIANGLES, ZeroMultiplicityError
from multibraid.oracle import (
    PowerIdeal,
    default_degree_bound,
    hf_ideal,
    hf_locally_generated,
    hf_quotient,
    hf_syz_global,
    is_locally_generated,
    local_syzygy_generators,
    oracle_classify,
    syzygy_gap,
    verify_syzygy,
)


def test_hf_ideal_examples():
    assert hf_ideal(PowerIdeal.full((1,) * 6), 1) == 3
    assert hf_ideal(PowerIdeal.triangle((1,) * 6, (0, 1, 2)), 1) == 2
    assert hf_ideal(PowerIdeal.full((2,) * 6), 2) == 6


def test_power_ideal_validation():
    with pytest.raises(ValueError):
        PowerIdeal((((1, 0, 0), 1), ((2, 0, 0), 3)))  # proportional forms
    with pytest.raises(ValueError):
        PowerIdeal((((1, 0, 0), 0),))
    with pytest.raises(ValueError):
        PowerIdeal((((0, 0, 0), 1),))


def test_hf_syz_global_examples():
    assert hf_syz_global((1,) * 6, 1) == 3
    assert hf_syz_global((2,) * 6, 3) == 8
    assert hf_syz_global((1,) * 6, 0) == 0


def test_local_syzygy_generator_profiles():
    gens = local_syzygy_generators((1,) * 6)
    assert gens.degrees(0) == (1, 2)
    # the degree-1 generator is proportional to (1, -1, -1) on (x, y, x-y)
    first = min(gens.per_triangle[0], key=lambda g: g.degree)
    coeffs = []
    for poly in first.coefficients:
        assert len(poly) == 1
        coeffs.append(poly[0][1])
    c = coeffs[0]
    assert coeffs == [c, -c, -c] and c != 0

    assert local_syzygy_generators((2,) * 6).degrees(0) == (3, 3)
    m = (1, 1, 2, 3, 2, 2)  # triangle 012 carries (1, 1, 3)
    assert local_syzygy_generators(m).degrees(0) == (2, 3)


def test_local_syzygy_generators_contract_to_zero():
    for m in [(1,) * 6, (2,) * 6, (1, 2, 3, 2, 1, 2), (3, 1, 4, 2, 2, 1)]:
        gens = local_syzygy_generators(m)
        for tri in range(4):
            for gen in gens.per_triangle[tri]:
                assert verify_syzygy(m, tri, gen), (m, tri, gen.degree)


def test_profile_matches_closed_form_small():
    # entries <= 4 here; the acceptance suite sweeps {1..8}^3
    for mi, mj, mk in itertools.product((1, 2, 3, 4), repeat=3):
        m = (mi, mj, 4, mk, 4, 4)
        got = local_syzygy_generators(m).degrees(0)
        want = obstruction.local_syzygy_structure(mi, mj, mk).gen_degrees
        assert got == want, (mi, mj, mk)


def test_hf_local_syz_matches_span_dimensions():
    from multibraid.exactalg import binom2

    for mi, mj, mk in [(1, 1, 1), (2, 2, 2), (1, 1, 3), (3, 2, 3), (2, 1, 4)]:
        m = (mi, mj, 4, mk, 4, 4)
        tri_ideal = PowerIdeal.triangle(m, (0, 1, 2))
        for d in range(mi + mj + mk + 1):
            # syzygy dimension = sum of block dims - ideal dimension
            blocks = sum(binom2(d - mv + 2) for mv in (mi, mj, mk))
            dim_syz = blocks - hf_ideal(tri_ideal, d)
            assert dim_syz == obstruction.hf_local_syz(mi, mj, mk, d), (mi, mj, mk, d)


def test_hf_locally_generated_examples():
    assert hf_locally_generated((2,) * 6, 3) == 8
    m = (3, 2, 3, 3, 2, 3)
    assert hf_locally_generated(m, 4) == hf_syz_global(m, 4) - 1
    assert hf_locally_generated((2,) * 6, 1) == 0


def test_is_locally_generated_examples():
    assert is_locally_generated((2,) * 6) == (True, None)
    ok, gap = is_locally_generated((3, 2, 3, 3, 2, 3))
    assert not ok and gap == (4, 1)
    assert is_locally_generated((1,) * 6) == (True, None)


def test_oracle_classify_examples():
    assert oracle_classify((2, 2, 1, 5, 3, 3)).free
    assert not oracle_classify((2, 2, 3, 3, 2, 1)).free
    assert oracle_classify((5, 5, 5, 2, 2, 2)).free
    with pytest.raises(ZeroMultiplicityError):
        oracle_classify((0, 1, 1, 1, 1, 1))


def test_hf_quotient_examples():
    assert hf_quotient(PowerIdeal.triangle((1,) * 6, (0, 1, 2)), 0) == 1
    # three independent quadrics in degree 2: quotient has dimension 6 - 3;
    # equivalently (1, 2, 0) from the two-variable quotient times the free
    # variable, matching the eventual polynomial value 3
    assert hf_quotient(PowerIdeal.triangle((2,) * 6, (0, 1, 2)), 2) == 3
    assert hf_quotient(PowerIdeal.full((2,) * 6), 3) == 0


def test_local_contained_in_global():
    for m in [(1, 2, 1, 3, 2, 1), (2, 2, 2, 2, 2, 2), (4, 1, 3, 1, 3, 1)]:
        for d in range(default_degree_bound(m) + 1):
            assert hf_locally_generated(m, d) <= hf_syz_global(m, d), (m, d)


def test_global_lower_bound():
    from multibraid.exactalg import binom2

    for m in [(1,) * 6, (2, 1, 3, 1, 2, 4), (3, 3, 2, 2, 3, 3)]:
        for d in range(default_degree_bound(m) + 1):
            floor = sum(binom2(d + 2 - mv) for mv in m) - binom2(d + 2)
            assert hf_syz_global(m, d) >= floor


def test_prescreen_matches_exact():
    sample = [
        (1, 1, 1, 1, 1, 1), (2, 2, 3, 3, 2, 1), (3, 2, 3, 3, 2, 3),
        (4, 1, 3, 1, 3, 1), (2, 4, 1, 3, 2, 4), (1, 3, 2, 4, 1, 2),
    ]
    for m in sample:
        for d in range(default_degree_bound(m) + 1):
            assert syzygy_gap(m, d, prescreen=True) == syzygy_gap(m, d, prescreen=False)
        assert (is_locally_generated(m, prescreen=True)
                == is_locally_generated(m, prescreen=False))


def test_degree_bound_probe_sample():
    for m in [(1,) * 6, (2,) * 6, (2, 2, 1, 5, 3, 3), (5, 5, 5, 2, 2, 2)]:
        bound = default_degree_bound(m)
        ok, _ = is_locally_generated(m, max_degree=bound + 3)
        assert ok


def test_syzygy_tables():
    from multibraid.oracle import syzygy_tables

    glob, loc = syzygy_tables((2,) * 6)
    assert glob.bound == 5 and glob.values == loc.values
    assert glob[3] == 8
    m = (3, 2, 3, 3, 2, 3)
    glob, loc = syzygy_tables(m)
    assert [d for d, (g, l) in enumerate(zip(glob.values, loc.values)) if g != l] == [4]
    assert dict(loc.items())[4] == glob[4] - 1


def test_negative_degree_and_empty_blocks():
    assert hf_ideal(PowerIdeal.full((2,) * 6), -1) == 0
    assert hf_syz_global((2,) * 6, 0) == 0
    assert hf_locally_generated((2,) * 6, 0) == 0
    assert syzygy_gap((2,) * 6, 0) == 0
