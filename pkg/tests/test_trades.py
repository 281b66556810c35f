import itertools

import pytest
from hypothesis import given, strategies as st

from latin_intersection.core import MuWayTrade, trade_problems
from latin_intersection.trades import (
    ParameterViolation,
    ShapeTooSmall,
    Verdict,
    compose,
    full_trade,
    gear_trade,
    gear_trade_params,
    gear_volume,
    place_in_frame,
    trade_of_volume,
)

IMPOSSIBLE = frozenset(range(1, 16)) | {17, 18, 19, 21, 22, 26}


def assert_trade(t, mu, volume):
    assert isinstance(t, MuWayTrade)
    assert trade_problems(t.layers) == []
    assert t.mu == mu and t.volume == volume


def test_square_full_trade():
    t = full_trade(4, 4, 4)
    assert_trade(t, 4, 16)
    assert all(len(t.row_content(i)) == 4 for i in range(4))


def test_rectangular_full_trade():
    assert_trade(full_trade(4, 5, 6), 4, 30)


def test_tall_full_trade_is_stored_wide():
    t = full_trade(4, 7, 5)
    assert_trade(t, 4, 35)
    assert t.rows <= t.n


def test_full_trade_too_small():
    with pytest.raises(ShapeTooSmall):
        full_trade(4, 3, 7)


@given(st.integers(2, 5), st.integers(0, 4), st.integers(0, 5))
def test_full_trades_are_cellwise_distinct(mu, dm, dn):
    m, n = mu + dm, mu + dm + dn
    t = full_trade(mu, m, n)
    assert_trade(t, mu, m * n)


@pytest.mark.parametrize("a,b,x,y,volume", [(8, 4, 1, 4, 56), (5, 3, 1, 4, 37), (4, 4, 1, 4, 36)])
def test_gear_trade_volumes(a, b, x, y, volume):
    t = gear_trade(4, a, b, x, y)
    assert_trade(t, 4, volume)
    assert gear_volume(a, b, x, y) == volume


def test_rotation_with_a_equal_to_x_plus_three_and_three_b_columns_has_no_base():
    """The first four rows of the A columns form a latin square on 1..4, so the
    fifth row would need four distinct symbols from 5..7."""
    with pytest.raises(ParameterViolation, match="no base rectangle"):
        gear_trade(4, 4, 3, 1, 4)
    assert_trade(trade_of_volume(4, 32), 4, 32)


@pytest.mark.parametrize(
    "args,needle",
    [((4, 3, 3, 1, 4), "a >= x+mu-1"), ((4, 4, 2, 1, 4), "b >= mu-1"), ((4, 4, 3, 1, 3), "y >= mu"), ((4, 4, 3, 0, 4), "x >= 1")],
)
def test_gear_trade_names_the_failed_inequality(args, needle):
    with pytest.raises(ParameterViolation, match=needle.replace("+", r"\+")):
        gear_trade(*args)


def test_gear_parameters_have_the_requested_volume():
    for s in (23, 32, 37, 50):
        for a, b, x, y in gear_trade_params(4, s):
            assert gear_volume(a, b, x, y) == s
            assert a >= x + 3 and b >= 3 and x >= 1 and y >= 4 and x + y <= a + b


def test_gear_parameters_are_ordered_by_order_then_a():
    params = gear_trade_params(4, 60)
    keys = [(a + b, a) for a, b, _, _ in params]
    assert keys == sorted(keys)


@pytest.mark.parametrize("i", range(5))
def test_volume_bands_from_rotations_of_order_eleven_minus_i(i):
    # x = 1, y = 4, a + b = 11 - i: volume 4(12 - i) + (a - 4) for a = 4 .. 8 - i.
    band = set()
    for a in range(4, 9 - i):
        b = 11 - i - a
        volume = 4 * (12 - i) + a - 4
        assert gear_volume(a, b, 1, 4) == volume
        band.add(volume)
        if b >= a or a > 4:
            assert_trade(gear_trade(4, a, b, 1, 4), 4, volume)
    assert band == set(range(4 * (12 - i), 4 * (12 - i) + 4 - i + 1))


def test_empty_volume():
    t = trade_of_volume(4, 0)
    assert isinstance(t, MuWayTrade) and t.volume == 0


@pytest.mark.parametrize("s", [7, 17, 26])
def test_impossible_volumes(s):
    assert trade_of_volume(4, s) is Verdict.INFEASIBLE


@pytest.mark.parametrize("s", [23, 44, 45, 47, 100])
def test_admissible_volumes(s):
    assert_trade(trade_of_volume(4, s), 4, s)


def test_volume_in_a_given_frame():
    t = trade_of_volume(4, 23, shape=(6, 10))
    assert (t.rows, t.n) == (6, 10)
    assert_trade(t, 4, 23)
    with pytest.raises(ShapeTooSmall):
        place_in_frame(t, 5, 9)


def test_negative_volume():
    with pytest.raises(ValueError):
        trade_of_volume(4, -1)


SEEDS = [16, 20, 23, 24, 25, 27, 28, 30, 32, 44]


@pytest.fixture(scope="module")
def seed_set():
    return {s: trade_of_volume(4, s) for s in SEEDS}


def test_compose_adds_volumes_over_all_seed_pairs(seed_set):
    for s1, s2 in itertools.product(SEEDS, repeat=2):
        t = compose(seed_set[s1], seed_set[s2])
        assert_trade(t, 4, s1 + s2)


def test_compose_rejects_mixed_mu():
    with pytest.raises(ValueError):
        compose(full_trade(4, 4, 4), full_trade(3, 3, 3))


@given(st.integers(27, 160))
def test_every_sampled_admissible_volume_builds(s):
    if s in IMPOSSIBLE:
        return
    assert_trade(trade_of_volume(4, s), 4, s)
