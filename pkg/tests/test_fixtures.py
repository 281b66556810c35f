import io
import shutil

import pytest

from latin_intersection import fixtures as fx
from latin_intersection.cli import run_command
from latin_intersection.core import extract_trade


def verify_cli(directory):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(["fixtures", "verify", str(directory)], out, err)
    return code, out.getvalue()


def test_whole_corpus_validates_with_its_labels():
    results = fx.fixtures_verify()
    assert len(results) == 114
    assert [r.name for r in results if not r.ok] == []


@pytest.mark.parametrize("entry", fx.appendix_entries(), ids=lambda e: e.name)
def test_entry_label_matches_completed_square(entry):
    sq = entry.square()
    assert (sq.n, sq.k) == (entry.n, entry.k)
    assert extract_trade(sq).volume == entry.n * entry.n - entry.k


def test_single_corrupted_symbol_names_the_cell(tmp_path):
    for p in fx.APPENDIX_DIR.glob("*.mwls"):
        shutil.copy(p, tmp_path)
    target = tmp_path / "n05_k001.mwls"
    lines = target.read_text().splitlines()
    lines[1] = lines[1].replace("1 2345", "1 3245", 1)
    target.write_text("\n".join(lines) + "\n")
    code, out = verify_cli(tmp_path)
    assert code == 1
    failures = [l for l in out.splitlines() if l.startswith("FAIL")]
    assert failures == [
        "FAIL n05_k001.mwls layer 0 is not latin; first violation (row, col, symbol) = (0, 2, 3)"
    ]
    assert out.splitlines()[-1] == "114 fixtures, 1 failed"


def test_label_mismatch_is_reported(tmp_path):
    src = fx.APPENDIX_DIR / "n05_k001.mwls"
    (tmp_path / "n05_k002.mwls").write_text(src.read_text())
    [res] = fx.fixtures_verify(tmp_path)
    assert not res.ok and "header says n=5 k=1" in res.detail


def test_badly_named_file_is_reported(tmp_path):
    (tmp_path / "square.mwls").write_text("compact 4 1 1\n1\n")
    [res] = fx.fixtures_verify(tmp_path)
    assert not res.ok and "name" in res.detail


def test_empty_directory_warns_but_passes(tmp_path):
    code, out = verify_cli(tmp_path)
    assert code == 0
    assert out == f"warning: no fixtures in {tmp_path}\n0 fixtures, 0 failed\n"


def test_quarantined_blocks_still_fail():
    results = fx.fixtures_verify(fx.QUARANTINE_DIR)
    assert sorted(r.name for r in results) == ["n17_k215.r5.mwls", "n19_k268.r6.mwls"]
    assert not any(r.ok for r in results)


def test_lookup_helpers():
    assert fx.find(10, 77).rows == 5
    with pytest.raises(KeyError):
        fx.find(5, 2)
    assert fx.example("figure1").mu == 3
    seeds = fx.seed_trades()
    assert all(t.volume == v for v, t in seeds.items())
    assert fx.seed_trades(3) == {}
