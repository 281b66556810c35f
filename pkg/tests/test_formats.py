import pytest
from hypothesis import given, strategies as st

from latin_intersection import fixtures as fx
from latin_intersection.core import Grid, MuWayRectangle, MuWaySquare, MuWayTrade
from latin_intersection.formats import (
    FormatError,
    parse_compact,
    parse_mwls,
    parse_skeleton,
    render_compact,
    render_layout,
    render_mwls,
    render_skeleton,
)
from latin_intersection.trades import full_trade, trade_of_volume

from _corpus import corpus_squares, cyclic_rows


def test_grid_round_trip_with_holes():
    g = Grid.from_rows([[1, 0, 3], [0, 2, 0]], 3)
    assert parse_mwls(render_mwls(g)) == g


def test_mwls_round_trip_over_the_corpus():
    for name, sq in corpus_squares():
        back = parse_mwls(render_mwls(sq))
        assert isinstance(back, MuWaySquare), name
        assert back == sq and back.skeleton == sq.skeleton, name


def test_compact_round_trip_over_the_corpus():
    for name, sq in corpus_squares(20):
        block = parse_compact(render_compact(sq))
        assert block.obj == sq and block.k == sq.k, name


def test_rectangle_round_trips():
    rect = fx.find(10, 77).obj
    assert parse_mwls(render_mwls(rect)) == rect
    assert parse_compact(render_compact(rect)).obj == rect


@pytest.mark.parametrize("volume", [16, 23, 30, 47])
def test_trade_round_trip(volume):
    t = trade_of_volume(4, volume)
    back = parse_mwls(render_mwls(t))
    assert isinstance(back, MuWayTrade)
    assert back == t


def test_full_trade_header_keeps_its_kind():
    t = full_trade(4, 4, 4)
    text = render_mwls(t)
    assert text.splitlines()[0] == "4 4 4 trade"
    assert isinstance(parse_mwls(text), MuWayTrade)


def test_skeleton_round_trip():
    sq = fx.example("figure1").obj
    assert parse_skeleton(render_skeleton(sq.skeleton)) == sq.skeleton


def test_layout_round_trip_preserves_marks():
    entry = fx.find(9, 22)
    assert entry.kind == "layout"
    text = render_layout(entry.block.layout, entry.k)
    again = parse_compact(text)
    assert again.layout == entry.block.layout
    assert again.obj.rows == 7 and again.obj.n == 9 and again.obj.label_k == 22


def test_large_orders_use_decimal_tokens():
    n = 40
    g = Grid.from_rows(cyclic_rows(n))
    sq = MuWaySquare((g, g))
    text = render_mwls(sq)
    assert "40" in text.split("\n")[1].split()
    assert parse_mwls(text) == sq


def test_truncated_file_is_a_syntax_error():
    text = render_mwls(MuWaySquare(full_trade(4, 4, 4).layers))
    cut = "\n".join(text.splitlines()[:-2])
    with pytest.raises(FormatError) as info:
        parse_mwls(cut)
    assert info.value.line is not None


def test_bad_symbol_reports_line_and_column():
    with pytest.raises(FormatError) as info:
        parse_mwls("2 3 3\n1 2 3\n2 3 1\n3 1 z\n\n1 2 3\n2 3 1\n3 1 2\n")
    assert (info.value.line, info.value.col) == (4, 3)


@pytest.mark.parametrize(
    "text",
    ["", "2 3\n", "2 3 4\n", "compact 4 3 0\n1 2\n", "compact 4 2 0\n123 21\n21 12\n"],
)
def test_malformed_inputs(text):
    with pytest.raises(FormatError):
        parse_mwls(text) if not text.startswith("compact") else parse_compact(text)


def test_compact_cell_with_three_symbols_for_four_layers():
    with pytest.raises(FormatError):
        parse_compact("compact 4 4 0\n1234 2143 3412 432\n")


@given(st.integers(2, 12), st.integers(2, 5), st.integers(0, 11))
def test_identical_layers_round_trip(n, mu, shift):
    g = Grid.from_rows(cyclic_rows(n, shift))
    sq = MuWaySquare((g,) * mu)
    assert parse_mwls(render_mwls(sq)) == sq
    assert parse_compact(render_compact(sq)).obj == sq


@given(st.integers(1, 3), st.integers(4, 9))
def test_partial_rectangle_round_trip(rows, n):
    g = Grid.from_rows(cyclic_rows(n)[:rows], n)
    rect = MuWayRectangle((g, g, g))
    assert parse_mwls(render_mwls(rect)) == rect
