import random
from dataclasses import FrozenInstanceError

import pytest

from layercalc import dim_value
from rootsystem import WeightError, classical_weyl_order, root_system, sub_weights
from weylgroup import (
    GroupTooLargeError,
    dominant_weights_below,
    dominantize,
    enumerate_group,
    longest_element_length,
    orbit,
    orbit_size,
    shifted_action,
    shifted_resolve,
    simple_reflection,
)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "A4"])
def test_group_order_and_lengths(name):
    rs = root_system(name)
    table = enumerate_group(rs)
    assert table.order == classical_weyl_order(rs.lie_type)
    assert max(table.lengths) == longest_element_length(rs) == len(rs.positive_roots)
    assert sum(table.sign(i) for i in range(table.order)) == 0


@pytest.mark.slow
def test_f4_group_order():
    rs = root_system("F4")
    assert enumerate_group(rs).order == 1152


def test_group_guard():
    with pytest.raises(GroupTooLargeError) as err:
        enumerate_group(root_system("E8"))
    assert err.value.order == 696_729_600
    with pytest.raises(GroupTooLargeError) as err:
        enumerate_group(root_system("B3"), max_order=10)
    assert err.value.order == 48
    assert err.value.max_order == 10


def test_words_match_lengths(g2):
    table = enumerate_group(g2)
    for idx in range(table.order):
        assert len(table.word(idx)) == table.lengths[idx]
    assert table.word(0) == []


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "G2", pytest.param("F4", marks=pytest.mark.slow)])
def test_images_are_distinct(name):
    table = enumerate_group(root_system(name))
    assert len(set(table.images)) == table.order
    assert all(table.index[image] == idx for idx, image in enumerate(table.images))


def test_group_table_is_frozen(g2):
    table = enumerate_group(g2)
    with pytest.raises(FrozenInstanceError):
        table.images = ()
    with pytest.raises(TypeError):
        table.index[(0, 0)] = 0


def test_shifted_action_of_zero(g2):
    table = enumerate_group(g2)
    for idx in range(table.order):
        assert shifted_action(g2, table, idx, g2.zero()) == sub_weights(table.images[idx], g2.rho)


def test_simple_reflection(g2):
    assert simple_reflection(g2, 1, (1, 0)) == (-1, 3)
    assert simple_reflection(g2, 2, (0, 1)) == (1, -1)
    with pytest.raises(WeightError):
        simple_reflection(g2, 3, (0, 1))


@pytest.mark.parametrize("name,w,size", [
    ("A2", (1, 1), 6), ("A2", (1, 0), 3), ("A2", (0, 1), 3), ("A2", (0, 0), 1),
    ("B2", (1, 1), 8), ("B2", (1, 0), 4), ("B2", (0, 1), 4), ("B2", (0, 0), 1),
    ("G2", (1, 1), 12), ("G2", (1, 0), 6), ("G2", (0, 1), 6), ("G2", (0, 0), 1),
    ("A3", (1, 1, 1), 24), ("A3", (1, 1, 0), 12), ("A3", (1, 0, 1), 12), ("A3", (0, 1, 1), 12),
    ("A3", (0, 1, 0), 6), ("A3", (1, 0, 0), 4), ("A3", (0, 0, 1), 4), ("A3", (0, 0, 0), 1),
])
def test_orbit_sizes(name, w, size):
    rs = root_system(name)
    assert len(orbit(rs, w)) == size
    assert orbit_size(rs, w) == size


def test_orbit_size_of_non_dominant(g2):
    assert orbit_size(g2, (-1, 3)) == 6


def test_dominantize(g2):
    for w in orbit(g2, (1, 1)):
        dom, parity = dominantize(g2, w)
        assert dom == (1, 1)
        assert parity in (1, -1)
    assert dominantize(g2, (-1, 0))[0] == (1, 0)


@pytest.mark.parametrize("name,seed", [
    ("A2", 21), ("B3", 22), ("C3", 23), ("G2", 24), pytest.param("F4", 25, marks=pytest.mark.slow),
])
def test_orbit_size_divides_group_order(name, seed):
    rs = root_system(name)
    order = classical_weyl_order(rs.lie_type)
    rng = random.Random(seed)
    for _ in range(10):
        w = tuple(rng.randint(0, 2) for _ in range(rs.rank))
        assert order % orbit_size(rs, w) == 0, w


def test_dominantize_counts_every_reflection():
    # s2 then s1: two reflections, so the parity is even
    assert dominantize(root_system("A2"), (0, -1)) == ((1, 0), 1)
    assert dominantize(root_system("A2"), (-1, 1)) == ((1, 0), -1)


def test_shifted_resolve_a1():
    rs = root_system("A1")
    assert shifted_resolve(rs, (-1,)).is_zero
    res = shifted_resolve(rs, (-2,))
    assert (res.sign, res.dominant) == (-1, (0,))
    res = shifted_resolve(rs, (3,))
    assert (res.sign, res.dominant) == (1, (3,))
    assert str(shifted_resolve(rs, (-4,))) == "-ch(2)"


@pytest.mark.parametrize("name,seed", [("A2", 1), ("B2", 2), ("G2", 3), ("A3", 4), ("C3", 5)])
def test_dimension_sign_law(name, seed):
    rs = root_system(name)
    table = enumerate_group(rs)
    rng = random.Random(seed)
    for _ in range(5):
        lam = tuple(rng.randint(0, 4) for _ in range(rs.rank))
        base = dim_value(rs, lam)
        for idx in range(table.order):
            moved = shifted_action(rs, table, idx, lam)
            assert dim_value(rs, moved) == table.sign(idx) * base


@pytest.mark.parametrize("name,seed", [("A2", 11), ("G2", 12), ("B3", 13)])
def test_shifted_resolve_agrees_with_group(name, seed):
    rs = root_system(name)
    table = enumerate_group(rs)
    rng = random.Random(seed)
    for _ in range(20):
        lam = tuple(rng.randint(0, 3) for _ in range(rs.rank))
        idx = rng.randrange(table.order)
        res = shifted_resolve(rs, shifted_action(rs, table, idx, lam))
        assert (res.sign, res.dominant) == (table.sign(idx), lam)


@pytest.mark.parametrize("lam,expected", [
    ((3, -6), "+ch(0,1)"),
    ((-4, 4), "-ch(0,0)"),
    ((-3, 1), "0"),
])
def test_g2_auxiliary_resolutions(g2, lam, expected):
    assert str(shifted_resolve(g2, lam)) == expected


@pytest.mark.slow
@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"])
def test_dimension_sign_law_sweep(name):
    rs = root_system(name)
    table = enumerate_group(rs)
    rng = random.Random(name)
    for _ in range(100):
        lam = tuple(rng.randint(-10, 10) for _ in range(rs.rank))
        base = dim_value(rs, lam)
        for idx in range(table.order):
            assert dim_value(rs, shifted_action(rs, table, idx, lam)) == table.sign(idx) * base


@pytest.mark.parametrize("name,seed", [("A3", 31), ("B3", 32), ("G2", 33)])
def test_resolution_vanishes_exactly_with_dimension(name, seed):
    rs = root_system(name)
    rng = random.Random(seed)
    for _ in range(500):
        lam = tuple(rng.randint(-8, 8) for _ in range(rs.rank))
        assert shifted_resolve(rs, lam).is_zero == (dim_value(rs, lam) == 0), lam


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_dominant_weights_resolve_to_themselves(name):
    rs = root_system(name)
    rng = random.Random(name)
    for _ in range(100):
        lam = tuple(rng.randint(0, 8) for _ in range(rs.rank))
        res = shifted_resolve(rs, lam)
        assert (res.sign, res.dominant) == (1, lam)


def test_dominant_weights_below(g2):
    assert dominant_weights_below(g2, (1, 0)) == {(1, 0), (0, 1), (0, 0)}
    with pytest.raises(WeightError):
        dominant_weights_below(g2, (0, -1))
