import functools
import itertools
import random

import pytest
from hypothesis import given, strategies as st

from latin_intersection import fixtures as fx
from latin_intersection.constructions import (
    AlphabetCollision,
    ConstructionError,
    EmbedTooLarge,
    GearParams,
    back_circulant_without_diagonal,
    double_construction,
    embed_construction,
    frame_square,
    gear1_square,
    gear2_square,
    pad_rectangle,
    trade_into_trade,
    two_n_plus_one,
    two_n_plus_one_set,
)
from latin_intersection.core import Grid, MuWayRectangle, MuWaySquare, extract_trade
from latin_intersection.trades import ParameterViolation, full_trade

from _corpus import cyclic_rows, identical_square


def zero_square(n, mu=4):
    return MuWaySquare(full_trade(mu, n, n).layers)


@functools.lru_cache(maxsize=None)
def order5_corpus():
    return (
        identical_square(5),
        zero_square(5),
        fx.find(5, 1).square(),
        fx.example("doubling_base_order5").obj,
    )


def test_doubling_identical_squares():
    sq = double_construction([identical_square(4)] * 4)
    assert (sq.n, sq.k) == (8, 64)


def test_doubling_mixed_inputs():
    sq = double_construction([identical_square(4), identical_square(4), zero_square(4), zero_square(4)])
    assert (sq.n, sq.k) == (8, 32)


def test_doubling_adds_fixed_cells_over_all_quadruples():
    corpus = order5_corpus()
    for quad in itertools.product(range(len(corpus)), repeat=4):
        sq = double_construction([corpus[i] for i in quad])
        assert sq.k == sum(corpus[i].k for i in quad)


def test_doubling_rejects_mixed_orders():
    with pytest.raises(ConstructionError):
        double_construction([identical_square(4)] * 3 + [identical_square(5)])
    with pytest.raises(ConstructionError):
        double_construction([identical_square(4)] * 3)


@pytest.mark.parametrize(
    "inner,order,k",
    [(lambda: zero_square(4), 9, 65), (lambda: fx.find(5, 1).square(), 10, 76), (lambda: identical_square(3), 7, 49)],
)
def test_embedding(inner, order, k):
    sq = embed_construction(inner(), order)
    assert (sq.n, sq.k) == (order, k)


def test_embedding_order_one_into_two():
    g = Grid.from_rows([[1]])
    sq = embed_construction(MuWaySquare((g, g, g, g)), 2)
    assert sq.k == 4


def test_embedding_too_large():
    with pytest.raises(EmbedTooLarge):
        embed_construction(zero_square(5), 9)


def test_order_nine_assembly_of_the_worked_example():
    a = fx.example("doubling_base_order5").obj
    sq = two_n_plus_one(a, identical_square(4))
    assert (sq.mu, sq.n, sq.k) == (4, 9, 17)


def test_order_2n_plus_1_with_identical_inputs_counts_directly():
    n = 5
    a, b = identical_square(n + 1), identical_square(n)
    sq = two_n_plus_one(a, b)
    fixed = sum(
        1 for i in range(sq.n) for j in range(sq.n) if len(set(sq.cell(i, j))) == 1
    )
    assert sq.k == fixed
    # A and B contribute all their cells; the hollow block contributes none off the diagonal.
    assert sq.k == n * n + 2 * n * (n + 1) + (n + 1)


def test_order_2n_plus_1_errors():
    with pytest.raises(ConstructionError):
        two_n_plus_one(identical_square(4), identical_square(4))
    hollow = list(back_circulant_without_diagonal(4, 4))
    filled = [list(r) for r in hollow[0].cells]
    filled[0][0] = 1
    hollow[0] = Grid.from_rows(filled, 5)
    with pytest.raises(ConstructionError):
        two_n_plus_one(fx.example("doubling_base_order5").obj, identical_square(4), hollow)


def naive_two_n_plus_one(i_n, n, smaller):
    """Direct triple loop over the promised sums, independent of the set helpers."""
    mults = list(range(0, n - 3)) + [n]
    extra = {0, 1, 2}
    for t in range(1, n - 2):
        extra |= {2 * t * n, 2 * t * n - t, 2 * t * n - n}
    for m in list(range(0, n - 2)) + [n + 1]:
        extra.add((2 * n + 1) * m)
    for m in list(range(1, 2 * n - 6)) + list(range(n + 1, 2 * n - 2)):
        extra.add((n + 1) * m)
    out = set()
    for v in i_n:
        for m in mults:
            for e in extra:
                out.add(v + (n + 1) * m + e)
    spectra = dict(smaller)
    spectra[n] = i_n
    for i in range(1, n + 1):
        for v in spectra.get(i, ()):
            out.add(v + (2 * n + 1) ** 2 - i * i)
    return out


@pytest.mark.parametrize("n", [4, 5, 6])
def test_order_2n_plus_1_set_matches_triple_loops(n):
    rng = random.Random(n)
    for _ in range(20):
        i_n = frozenset(rng.sample(range(n * n + 1), rng.randint(0, 8)))
        smaller = {i: frozenset(rng.sample(range(i * i + 1), rng.randint(0, i))) for i in range(1, n)}
        assert two_n_plus_one_set(i_n, n, smaller) == naive_two_n_plus_one(i_n, n, smaller)


def test_order_2n_plus_1_set_from_order_four():
    smaller = {1: frozenset({1}), 2: frozenset({4}), 3: frozenset({9})}
    got = two_n_plus_one_set(frozenset({0, 16}), 4, smaller)
    assert {1, 5, 16, 17, 20, 21, 25, 29, 37, 41, 61, 65} <= got
    assert got == naive_two_n_plus_one({0, 16}, 4, smaller)


def test_order_2n_plus_1_set_with_empty_base():
    smaller = {1: frozenset({1})}
    assert two_n_plus_one_set(frozenset(), 4, smaller) == {81 - 1 + 1}
    with pytest.raises(ValueError):
        two_n_plus_one_set(frozenset({0}), 3)


def test_product_of_the_two_way_host():
    host = fx.example("host_2way_order4").obj
    assert (host.mu, host.n, host.k) == (2, 4, 9)
    plug = full_trade(2, 2, 2)
    sq = trade_into_trade(host, [plug, plug])
    assert (sq.mu, sq.n, sq.k) == (4, 8, 36)


def test_product_of_a_fixed_host():
    g = Grid.from_rows(cyclic_rows(3))
    host = MuWaySquare((g, g))
    plug = full_trade(2, 2, 2)
    sq = trade_into_trade(host, [plug, plug])
    assert (sq.n, sq.k) == (6, 36)


def test_product_with_colliding_alphabets():
    host = fx.example("host_2way_order4").obj
    plug = full_trade(2, 2, 2)
    alphabets = {1: (1, 2), 2: (2, 3), 3: (5, 6), 4: (7, 8)}
    with pytest.raises(AlphabetCollision):
        trade_into_trade(host, [plug, plug], alphabets)


def designated_cells(p):
    """Cells that rotate: the B block rows x..x+y-1, the A block rows 0..x+y-1."""
    c, b, n = p.c, p.b, p.n
    cells = {(i, j) for i in range(p.x, p.x + p.y) for j in range(c, c + b)}
    cells |= {(i, j) for i in range(p.x + p.y) for j in range(c + b, n)}
    return cells


def assert_layers_differ_exactly_on(sq, cells):
    for s, t in itertools.combinations(range(sq.mu), 2):
        diff = {
            (i, j)
            for i in range(sq.n)
            for j in range(sq.n)
            if sq.layers[s].cells[i][j] != sq.layers[t].cells[i][j]
        }
        assert diff == cells, (s, t)


def test_gear1_three_way_order_nine():
    p = GearParams(3, 4, 5, 2, 3)
    sq = gear1_square(p, fx.example("gear1_base_mu3_order9"))
    assert (sq.mu, sq.n, sq.k) == (3, 9, 46)
    assert_layers_differ_exactly_on(sq, designated_cells(p))


def test_gear1_order_ten_with_44_fixed():
    p = GearParams(4, 6, 4, 1, 5)
    sq = gear1_square(p)
    assert (sq.n, sq.k) == (10, 44) == (p.n, p.k)
    assert_layers_differ_exactly_on(sq, designated_cells(p))


def test_gear1_parameter_violation():
    with pytest.raises(ParameterViolation, match="y >= mu"):
        gear1_square(GearParams(4, 6, 4, 1, 3))


def test_gear2_order_thirteen():
    p = GearParams(4, 5, 4, 1, 4, 4)
    sq = gear2_square(p, fx.example("gear2_base_order13"))
    assert (sq.n, sq.k) == (13, 128)
    assert_layers_differ_exactly_on(sq, designated_cells(p))
    assert gear2_square(p).k == 128


def test_gear2_layout_fixture_with_129():
    entry = fx.find(13, 129)
    assert entry.kind == "layout"
    assert entry.square().k == 129


def test_gear2_parameter_violation():
    with pytest.raises(ParameterViolation, match="c >= y"):
        gear2_square(GearParams(4, 5, 4, 1, 5, 4))


@given(st.integers(3, 4), st.integers(0, 2), st.integers(0, 2), st.integers(1, 2), st.integers(0, 1))
def test_gear1_formula_and_rotation_property(mu, da, db, x, dy):
    p = GearParams(mu, x + mu - 1 + da, x + mu - 1 + db, x, mu + dy)
    sq = gear1_square(p)
    assert sq.k == p.k
    assert_layers_differ_exactly_on(sq, designated_cells(p))


@pytest.mark.parametrize("n,k,order,expected", [(10, 77, 15, 202), (12, 117, 17, 262)])
def test_padding_rectangles(n, k, order, expected):
    rect = fx.find(n, k).obj
    assert isinstance(rect, MuWayRectangle) and rect.rows < rect.n
    sq = pad_rectangle(rect, order)
    assert (sq.n, sq.k) == (order, expected)


def test_padding_identical_rectangle():
    top = Grid.from_rows(cyclic_rows(6)[:2], 6)
    sq = pad_rectangle(MuWayRectangle((top, top, top, top)), 9)
    assert sq.k == 81


def test_frame_of_a_full_trade():
    sq = frame_square(full_trade(4, 4, 7), 11)
    assert (sq.n, sq.k) == (11, 93)


def test_frame_of_the_ten_by_five_trade():
    sq = frame_square(extract_trade(fx.find(10, 77).obj), 11)
    assert (sq.n, sq.k) == (11, 98)


def test_frame_too_small():
    with pytest.raises(ConstructionError):
        frame_square(full_trade(4, 4, 7), 6)
