"""End-to-end command tests: exit codes, schemas, determinism."""

import json
import subprocess
import sys

import pytest

from latticechains.cli import (
    CSV_COLUMNS,
    PolygonRecord,
    main,
    records_for,
    records_from_csv,
    records_from_json,
    records_to_csv,
    records_to_json,
)
from latticechains.geometry import TriangleSpec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_single_pair(capsys):
    code, out, _ = run(capsys, "verify", "--i", "2", "--n", "5")
    assert code == 0
    assert "q^(3/2)" in out
    assert "PASS" in out


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--all-up-to", "8")
    assert code == 0
    assert "28/28 pairs pass" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--i", "3", "--n", "3")[0] == 2
    assert run(capsys, "verify", "--i", "2")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--i", "1", "--n", "2", "--all-up-to", "5")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_enumerate_json_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--i", "2", "--j", "3", "--format", "json")
    assert code == 0
    records = records_from_json(out)
    assert len(records) == 2
    assert records == records_for(TriangleSpec(2, 3))
    assert json.loads(out)[0]["vertices"] == [[0, 0], [2, 3]]


def test_enumerate_csv_schema(capsys):
    code, out, _ = run(capsys, "enumerate", "--i", "3", "--j", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,vCount,iP,bP,area2,u,exponentDoubled,vertices"
    assert len(lines) == 1 + 4
    assert records_from_csv(out) == records_for(TriangleSpec(3, 4))


def test_enumerate_single_polygon(capsys):
    code, out, _ = run(capsys, "enumerate", "--i", "1", "--j", "1")
    assert code == 0
    assert len(records_from_json(out)) == 1


def test_enumerate_rejects_unknown_format(capsys):
    assert run(capsys, "enumerate", "--i", "2", "--j", "3", "--format", "xml")[0] == 2


def test_record_validation_catches_tampering():
    record = records_for(TriangleSpec(2, 3))[1]
    broken = PolygonRecord(
        record.vertices, record.k, record.v_count,
        record.i_p + 1, record.b_p, record.area2, record.u,
        record.exponent_doubled,
    )
    with pytest.raises(ValueError):
        broken.validate()
    text = records_to_json([broken])
    with pytest.raises(ValueError):
        records_from_json(text)


def test_csv_loader_rejects_wrong_header():
    good = records_to_csv(records_for(TriangleSpec(2, 3)))
    with pytest.raises(ValueError):
        records_from_csv(good.replace("vCount", "vcount"))


def test_simulate_small_run(capsys):
    code, out, _ = run(
        capsys, "simulate", "--i", "1", "--j", "1", "--x", "1/3", "--trials", "10"
    )
    assert code == 0
    assert "1.000000" in out
    assert "exact probabilities sum to 1: yes" in out


def test_simulate_rejects_bad_fractions(capsys):
    assert run(capsys, "simulate", "--i", "2", "--j", "3", "--x", "3/2",
               "--trials", "10")[0] == 2
    assert run(capsys, "simulate", "--i", "2", "--j", "3", "--x", "abc",
               "--trials", "10")[0] == 2
    assert run(capsys, "simulate", "--i", "2", "--j", "3", "--x", "0/5",
               "--trials", "10")[0] == 2


def test_simulate_z_violation_exits_one(capsys):
    # 101 trials over 2 polygons cannot both sit exactly on 1/2
    code, out, _ = run(
        capsys, "simulate", "--i", "2", "--j", "3", "--x", "1/2",
        "--trials", "101", "--seed", "7", "--z-threshold", "0.000001",
    )
    assert code == 1
    assert "beyond |z|" in out


def test_simulate_deterministic_output(capsys):
    argv = ["simulate", "--i", "3", "--j", "4", "--x", "1/3",
            "--trials", "500", "--seed", "11"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0


def test_simulate_parallel_output_matches_serial(capsys):
    base = ["simulate", "--i", "3", "--j", "4", "--x", "1/2",
            "--trials", "300", "--seed", "5"]
    serial = run(capsys, *base, "--jobs", "1")
    parallel = run(capsys, *base, "--jobs", "3")
    assert serial == parallel


def test_explore_small_bounds(capsys):
    code, out, _ = run(capsys, "explore", "--max-a", "1", "--max-b", "1",
                       "--max-size", "2", "--max-m", "4", "--max-n", "4")
    assert code == 0
    assert "found 1 unit multiset(s)" in out
    assert "{(1,0),(0,1)}" in out
    assert "(2,3)" in out and "(3,2)" in out


def test_explore_empty_result(capsys):
    code, out, _ = run(capsys, "explore", "--max-a", "0", "--max-b", "1",
                       "--max-size", "1", "--max-m", "2", "--max-n", "2")
    assert code == 0
    assert "found 0 unit multiset(s)" in out


def test_explore_cap_reports_and_exits_two(capsys):
    code, _, err = run(capsys, "explore", "--max-a", "3", "--max-b", "3",
                       "--max-size", "5", "--node-cap", "10")
    assert code == 2
    assert "search cap hit" in err


def test_explore_collapse_sets_flag(capsys):
    code, out, _ = run(capsys, "explore", "--max-a", "3", "--max-b", "1",
                       "--max-size", "4", "--max-m", "4", "--max-n", "4",
                       "--collapse-sets")
    assert code == 0
    assert "{(3,0),(2,1),(1,1),(0,1)}" in out


def test_render_writes_one_svg_per_polygon(tmp_path, capsys):
    out_dir = tmp_path / "figs"
    code, out, _ = run(capsys, "render", "--i", "3", "--j", "4",
                       "--out-dir", str(out_dir))
    assert code == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == ["poly_0.svg", "poly_1.svg", "poly_2.svg", "poly_3.svg"]
    body = (out_dir / "poly_1.svg").read_text()
    assert body.startswith("<svg ")
    assert body.count("<circle") == 3 + 3  # interior dots + chain vertices
    assert 'stroke-width="3"' in body  # emphasized hypotenuse


def test_render_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "render", "--i", "2", "--j", "3", "--out-dir", str(a))
    run(capsys, "render", "--i", "2", "--j", "3", "--out-dir", str(b))
    for name in ["poly_0.svg", "poly_1.svg"]:
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_render_reports_io_failure(tmp_path, capsys):
    blocker = tmp_path / "blocked"
    blocker.write_text("not a directory")
    code, _, err = run(capsys, "render", "--i", "1", "--j", "1",
                       "--out-dir", str(blocker))
    assert code == 1
    assert "blocked" in err


def test_enumerate_byte_identical_across_runs(capsys):
    for fmt in ["json", "csv"]:
        argv = ["enumerate", "--i", "4", "--j", "5", "--format", fmt]
        assert run(capsys, *argv) == run(capsys, *argv)


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "latticechains", "verify", "--i", "1", "--n", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "q^(1/2)" in proc.stdout
