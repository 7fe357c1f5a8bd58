import io

import pytest

from squarelab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_all_ones(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("111\n111\n111\n")
    code, out, _ = run(capsys, "solve", str(path))
    assert code == 0
    assert out == "side=3 area=9\n"


@pytest.mark.parametrize("algo", ["freq", "dp", "dp2d", "brute"])
def test_solve_algorithms_agree(tmp_path, capsys, algo):
    path = tmp_path / "m.txt"
    path.write_text("1101\n1111\n1111\n0110\n")
    code, out, _ = run(capsys, "solve", str(path), "--algo", algo)
    assert code == 0
    assert out == "side=2 area=4\n"


def test_solve_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("")
    code, out, _ = run(capsys, "solve", str(path))
    assert code == 0
    assert out == "side=0 area=0\n"


def test_solve_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("11\n11\n"))
    code, out, _ = run(capsys, "solve")
    assert code == 0
    assert out == "side=2 area=4\n"


def test_solve_parse_error_names_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("111\n1x1\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2
    assert "line 2" in err


def test_solve_missing_file(capsys):
    code, _, err = run(capsys, "solve", "/no/such/file")
    assert code == 2
    assert err


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_unknown_flag(capsys):
    assert main(["solve", "--bogus"]) == 2
    capsys.readouterr()


def test_gen_density_one(capsys):
    code, out, _ = run(capsys, "gen", "--rows", "2", "--cols", "2",
                       "--density", "1")
    assert code == 0
    assert out == "11\n11\n"


def test_gen_deterministic(capsys):
    args = ["gen", "--rows", "6", "--cols", "5", "--density", "0.4",
            "--seed", "9"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_gen_rejects_out_of_range_density(capsys):
    code, _, err = run(capsys, "gen", "--rows", "2", "--cols", "2",
                       "--density", "1.5")
    assert code == 2
    assert "density" in err


def test_gen_writes_file(tmp_path, capsys):
    out_path = tmp_path / "gen.txt"
    code, out, _ = run(capsys, "gen", "--rows", "3", "--cols", "3",
                       "--density", "1", "--out", str(out_path))
    assert code == 0
    assert out == ""
    assert out_path.read_text() == "111\n111\n111\n"


def test_gen_depth_emits_volume(capsys):
    code, out, _ = run(capsys, "gen", "--rows", "2", "--cols", "2",
                       "--density", "1", "--depth", "2")
    assert code == 0
    assert out == "11\n11\n\n11\n11\n"


def test_gen_volume_feeds_cube(tmp_path, capsys):
    path = tmp_path / "v.txt"
    main(["gen", "--rows", "3", "--cols", "3", "--density", "1",
          "--depth", "3", "--out", str(path)])
    capsys.readouterr()
    code, out, _ = run(capsys, "cube", str(path))
    assert code == 0
    assert out == "side=3\n"


def test_verify_small_clean(capsys):
    code, out, err = run(capsys, "verify", "--exhaustive-max", "2",
                         "--random-count", "50", "--max-dim", "8",
                         "--seed", "3")
    assert code == 0
    assert "[exhaustive]" in out
    assert "cases_run=26" in out
    assert "[random]" in out
    assert "[edges]" in out
    assert "mismatches=0" in out
    assert "elapsed" in err


def test_verify_deterministic_stdout(capsys):
    args = ["verify", "--exhaustive-max", "2", "--random-count", "40",
            "--max-dim", "8", "--seed", "5"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_cap_exceeded_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--exhaustive-max", "99")
    assert code == 2
    assert "enumerations" in err


def test_verify_rejects_nonpositive_flags(capsys):
    code, _, _ = run(capsys, "verify", "--exhaustive-max", "0")
    assert code == 2


def test_bench_markdown_cardinality(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "10,20",
                       "--densities", "0.1,0.9", "--runs", "3",
                       "--trim", "0.1", "--format", "md")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 + 4
    assert lines[0].startswith("| Size |")


def test_bench_csv_header(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "8", "--densities", "0.5",
                       "--runs", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "size,density,std_ms,user_ms,speedup,same_result"


def test_bench_edge_cases_four_rows(capsys):
    code, out, _ = run(capsys, "bench", "--edge-cases", "--runs", "2",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "case,std_ms,user_ms,speedup,same_result"
    assert len(lines) == 5


def test_bench_edge_cases_md_notes_skip(capsys):
    code, out, _ = run(capsys, "bench", "--edge-cases", "--runs", "2")
    assert code == 0
    assert "Skipped (empty matrix)" in out


def test_bench_plot_series(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "8,12",
                       "--densities", "0.2,0.8", "--runs", "2",
                       "--plot", "speedup_vs_density")
    assert code == 0
    assert out.splitlines()[0] == "size,density,speedup"


def test_bench_plot_time_at_size(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "8,12",
                       "--densities", "0.2,0.8", "--runs", "2",
                       "--plot", "time_vs_density_at_size",
                       "--plot-size", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "density,std_ms,user_ms"
    assert len(lines) == 3


def test_bench_bad_sizes_list(capsys):
    code, _, _ = run(capsys, "bench", "--sizes", "10,abc")
    assert code == 2


def test_bench_baseline_flag(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "8", "--densities", "0.5",
                       "--runs", "2", "--baseline", "dp", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].endswith("true")


def test_cube_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("11\n11\n\n11\n11\n"))
    code, out, _ = run(capsys, "cube")
    assert code == 0
    assert out == "side=2\n"


def test_cube_all_zeros(tmp_path, capsys):
    path = tmp_path / "v.txt"
    path.write_text("00\n00\n\n00\n00\n")
    code, out, _ = run(capsys, "cube", str(path))
    assert code == 0
    assert out == "side=0\n"


def test_cube_algos_agree(tmp_path, capsys):
    main(["gen", "--rows", "5", "--cols", "5", "--density", "0.6",
          "--depth", "5", "--seed", "13", "--out",
          str(tmp_path / "v.txt")])
    capsys.readouterr()
    code1, out1, _ = run(capsys, "cube", str(tmp_path / "v.txt"),
                         "--algo", "freq")
    code2, out2, _ = run(capsys, "cube", str(tmp_path / "v.txt"),
                         "--algo", "brute")
    assert code1 == code2 == 0
    assert out1 == out2


def test_cube_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("11\n1\n")
    code, _, err = run(capsys, "cube", str(path))
    assert code == 2
    assert "line 2" in err


def test_rect_examples(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("111\n110\n")
    code, out, _ = run(capsys, "rect", str(path))
    assert code == 0
    assert out == "area=4 h=2 w=2\n"


def test_rect_all_ones(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("111\n111\n111\n")
    code, out, _ = run(capsys, "rect", str(path))
    assert code == 0
    assert out == "area=9 h=3 w=3\n"


def test_rect_all_zeros(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("000\n000\n")
    code, out, _ = run(capsys, "rect", str(path))
    assert code == 0
    assert out == "area=0 h=0 w=0\n"
