import json
import subprocess
import sys

import pytest

from magicpolygon import document
from magicpolygon.cli import main
from magicpolygon.core import Labeling


@pytest.fixture
def hexagon_file(tmp_path, hexagon):
    path = tmp_path / "hexagon.json"
    document.write(hexagon, path)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_to_stdout(capsys, lo_shu):
    code, out, _ = run(capsys, "construct", 4)
    assert code == 0
    assert document.loads(out) == lo_shu


def test_construct_to_file(capsys, tmp_path):
    target = tmp_path / "h.json"
    code, out, _ = run(capsys, "construct", 6, "-o", target)
    assert code == 0 and out == ""
    assert document.read(target).n == 6


def test_construct_odd_is_negative(capsys):
    code, out, err = run(capsys, "construct", 5)
    assert code == 1 and out == ""
    assert "no magic 5-gon exists (odd n)" in err


def test_construct_usage_errors(capsys, tmp_path):
    assert run(capsys, "construct", 2)[0] == 2
    assert run(capsys, "construct", "six")[0] == 2
    code, _, err = run(capsys, "construct", 6, "-o", tmp_path / "missing" / "x.json")
    assert code == 2 and "cannot write" in err


def test_verify_magic_document(capsys, hexagon_file):
    code, out, _ = run(capsys, "verify", hexagon_file)
    report = json.loads(out)
    assert code == 0 and out.endswith("\n")
    assert report["is_magic"] and report["common_sum"] == 21


def test_verify_swapped_values(capsys, tmp_path, hexagon):
    flat = list(hexagon.as_tuple())
    flat[1], flat[2] = flat[2], flat[1]
    path = tmp_path / "swapped.json"
    document.write(Labeling.from_tuple(6, flat), path)
    code, out, _ = run(capsys, "verify", path)
    report = json.loads(out)
    assert code == 1 and not report["is_magic"]
    assert report["violations"]


def test_verify_truncated_and_invalid(capsys, tmp_path, hexagon_file):
    truncated = tmp_path / "cut.json"
    truncated.write_text(hexagon_file.read_text()[:30])
    code, out, err = run(capsys, "verify", truncated)
    assert code == 2 and out == "" and "invalid JSON" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "center": 4, "vertices": [1, 2], "midpoints": [5, 6, 70]}')
    code, _, err = run(capsys, "verify", bad)
    assert code == 2
    assert "vertices" in err and "midpoints[3]" in err
    assert run(capsys, "verify", tmp_path / "nope.json")[0] == 2


def test_enumerate_triangle_exhaustive(capsys):
    code, out, err = run(capsys, "enumerate", 3, "--mode", "exhaustive")
    assert code == 1 and json.loads(out)["total_count"] == 0
    assert "wall time" in err


def test_enumerate_square_up_to_symmetry(capsys):
    code, out, _ = run(capsys, "enumerate", 4, "--mode", "exhaustive", "--up-to-symmetry", "--emit")
    result = json.loads(out)
    assert code == 0
    assert result["class_count"] == 1 and result["total_count"] == 8
    assert result["solutions"][0]["center"] == 5


def test_enumerate_hexagon_is_repeatable(capsys):
    first = run(capsys, "enumerate", 6, "--emit")
    second = run(capsys, "enumerate", 6, "--emit", "--workers", 2)
    assert first[0] == second[0] == 0
    assert first[1] == second[1]


def test_enumerate_over_cap(capsys):
    code, out, err = run(capsys, "enumerate", 9, "--mode", "exhaustive")
    assert code == 2 and out == "" and "--mode pruned" in err
    assert run(capsys, "enumerate", 6, "--workers", 0)[0] == 2
    assert run(capsys, "enumerate", 6, "--mode", "random")[0] == 2


def test_prove_odd_variants(capsys):
    code, out, _ = run(capsys, "prove-odd", "--sweep-max", 10)
    report = json.loads(out)
    assert code == 0
    assert report["sweep"]["k_range"] == [1, 10]
    assert all(c["e_equals_g"] for c in report["cases"])
    code, out, _ = run(capsys, "prove-odd", "--sweep-max", 0)
    assert code == 0 and json.loads(out)["sweep"]["systems_checked"] == 0


@pytest.mark.slow
def test_prove_odd_default(capsys):
    code, out, _ = run(capsys, "prove-odd")
    assert code == 0
    assert json.loads(out)["sweep"]["k_range"] == [1, 10_000]


def test_render(capsys, tmp_path, hexagon_file):
    code, out, _ = run(capsys, "render", hexagon_file)
    assert code == 0 and out.count("<circle") == 13
    target = tmp_path / "h.svg"
    assert run(capsys, "render", hexagon_file, target)[0] == 0
    assert target.read_text() == out
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert run(capsys, "render", bad)[0] == 2


def test_check_ranges(capsys):
    code, out, _ = run(capsys, "check-ranges", 8)
    assert code == 0 and json.loads(out)["n"] == 8
    code, out, _ = run(capsys, "check-ranges", 8, "--to", 60)
    summary = json.loads(out)
    assert code == 0 and summary["passed"] and summary["checked"] == 27
    assert run(capsys, "check-ranges", 6)[0] == 2
    assert run(capsys, "check-ranges", 9)[0] == 2
    assert run(capsys, "check-ranges", 20, "--to", 10)[0] == 2


def test_no_command_is_usage_error(capsys):
    assert run(capsys)[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "magicpolygon", "construct", "8"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    lab = document.loads(proc.stdout)
    assert lab.n == 8 and lab.center == 9
