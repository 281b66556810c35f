import io
import subprocess
import sys

import pytest

from latin_intersection.cli import run_command
from latin_intersection.formats import parse_mwls


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_validate_three_way_example():
    code, out, _ = run("validate", "figure1")
    assert code == 0
    assert out == "valid 3-way n=8 k=35\n"


def test_validate_tsv():
    code, out, _ = run("validate", "figure1", "--format", "tsv")
    assert out.splitlines() == ["kind\tmu\trows\tn\tk\tvolume", "square\t3\t8\t8\t35\t29"]


def test_validate_rejects_a_broken_file(tmp_path):
    f = tmp_path / "bad.mwls"
    f.write_text("2 3 3\n1 2 3\n2 3 1\n3 1 2\n\n1 2 3\n3 1 2\n2 1 3\n")
    code, out, err = run("validate", str(f))
    assert code == 1 and out == ""
    assert "not latin" in err


def test_intersect_reports_line_sums():
    code, out, _ = run("intersect", "figure1")
    assert code == 0
    assert out.startswith("k=35\n")
    code, out, _ = run("intersect", "figure1", "--format", "tsv")
    assert out.splitlines()[0] == "n\tk\trow_seq\tcol_seq"


def test_search_prints_a_certificate():
    code, out, _ = run("search", "--mu", "4", "--n", "5", "--k", "2", "--mode", "exhaustive")
    assert code == 0
    first, *rest = out.splitlines()
    assert first.startswith("NONEXISTENT mu=4 n=5 k=2")
    assert "certificate mu=4 n=5 k=2 mode=exhaustive" in rest


def test_search_budget_exhaustion_is_a_domain_failure():
    code, out, _ = run("search", "--n", "5", "--k", "2", "--budget", "10", "--format", "tsv")
    assert code == 1
    assert out.splitlines()[1].startswith("BUDGET_EXCEEDED\t4\t5\t2")


def test_search_witness_is_printed():
    code, out, _ = run("search", "--n", "4", "--k", "16", "--mode", "first-witness")
    assert code == 0
    text = out[out.index("4 4 4"):]
    assert parse_mwls(text).k == 16


def test_search_unknown_prune():
    code, _, err = run("search", "--n", "4", "--k", "0", "--no-prune", "magic")
    assert code == 1 and "unknown prune" in err


def test_search_certificate_file(tmp_path):
    path = tmp_path / "cert.txt"
    run("search", "--n", "4", "--k", "0", "--certificate-out", str(path))
    assert path.read_text().startswith("certificate mu=4 n=4 k=0")


def test_spectrum_order_seven_lists_the_undecided_value():
    code, out, _ = run("spectrum", "--mu", "4", "--n", "7")
    assert code == 0
    assert "table undecided R   {18}" in out
    assert "undecided here      {18}" in out


def test_spectrum_tsv_has_one_line_per_value():
    code, out, _ = run("spectrum", "--n", "4", "--report", "tsv")
    lines = out.splitlines()
    assert lines[0] == "n\tk\tclass\tdetail" and len(lines) == 18


def test_spectrum_unknown_ingredient():
    code, _, err = run("spectrum", "--n", "4", "--ingredients", "trivial,magic")
    assert code == 1 and "magic" in err


def test_trade_infeasible_volume():
    code, out, _ = run("trade", "--volume", "17")
    assert code == 1
    assert out == "infeasible mu=4 volume=17\n"


def test_trade_output_round_trips():
    code, out, _ = run("trade", "--volume", "23", "--shape", "6x10")
    assert code == 0
    t = parse_mwls(out)
    assert t.volume == 23 and (t.rows, t.n) == (6, 10)
    code, out, _ = run("trade", "--volume", "30", "--format", "tsv")
    assert out.splitlines()[1].startswith("4\t5\t6\t30")


def test_trade_bad_shape():
    code, _, err = run("trade", "--volume", "23", "--shape", "big")
    assert code == 1 and "RxC" in err


@pytest.mark.parametrize(
    "argv,k",
    [
        (["construct", "product"], 36),
        (["construct", "two-n-plus-one"], 17),
        (["construct", "gear2", "--a", "5", "--b", "4", "--c", "4", "--x", "1", "--y", "4"], 128),
        (["construct", "gear1", "--a", "6", "--b", "4", "--x", "1", "--y", "5"], 44),
        (["construct", "full", "--n", "6", "--rows", "4"], 12),
        (["construct", "frame", "--volume", "28", "--order", "11"], 93),
    ],
)
def test_construct(argv, k):
    code, out, _ = run(*argv, "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1].split("\t")[-1] == str(k)


def test_construct_from_files(tmp_path):
    code, out, _ = run("construct", "double", "figure1", "figure1", "figure1", "figure1")
    assert code == 0 and "3-way n=16 k=140" in out
    code, out, _ = run("construct", "embed", "doubling_base_order5", "--order", "10", "--format", "tsv")
    assert out.splitlines()[1] == "embed\t4\t10\t76"
    code, out, _ = run("construct", "pad", "n10_k077.r5", "--order", "15", "--format", "tsv")
    assert out.splitlines()[1] == "pad\t4\t15\t202"


def test_construct_missing_parameters_is_a_usage_error():
    code, _, err = run("construct", "gear1", "--a", "6")
    assert code == 2 and "--b" in err


def test_construct_parameter_violation():
    code, _, err = run("construct", "gear1", "--a", "6", "--b", "4", "--x", "1", "--y", "3")
    assert code == 1 and "y >= mu" in err


def test_fixtures_verify_and_list():
    code, out, _ = run("fixtures", "verify")
    assert code == 0 and out.endswith("114 fixtures, 0 failed\n")
    code, out, _ = run("fixtures", "list", "--format", "tsv")
    assert out.splitlines()[0] == "file\tn\tk\trows\tkind"
    assert len(out.splitlines()) == 115


def test_fixtures_verify_missing_directory(tmp_path):
    code, _, err = run("fixtures", "verify", str(tmp_path / "nope"))
    assert code == 1 and "not a directory" in err


def test_convert_between_formats():
    code, out, _ = run("convert", "figure1", "--to", "compact")
    assert out.startswith("compact 3 8 35")
    code, out, _ = run("convert", "figure1", "--to", "skeleton")
    assert out.splitlines()[0] == "skeleton 8 8"
    code, out, _ = run("convert", "figure1", "--format", "tsv")
    assert len(out.splitlines()) == 1 + 3 * 64


def test_usage_errors():
    assert run("frobnicate")[0] == 2
    assert run("search", "--n", "4")[0] == 2
    assert run()[0] == 2


def test_missing_input_file():
    code, _, err = run("validate", "no_such_file.mwls")
    assert code == 1 and "no such file" in err


def test_output_is_byte_identical_across_runs():
    argv = ["search", "--n", "5", "--k", "5"]
    assert run(*argv) == run(*argv)
    argv = ["spectrum", "--n", "8"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "latin_intersection", "validate", "figure1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "valid 3-way n=8 k=35\n"
