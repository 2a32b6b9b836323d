import json
import math
import os
import re
import subprocess
import sys

import numpy as np
import pytest

from weyltile.cli import main
from weyltile.render import RenderStyle, patch_to_svg, write_atomic
from weyltile.tiling import shadow_tiling_of_cell


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def polygon_count(svg_text):
    return len(re.findall(r"<polygon\b", svg_text))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_verify_passes(capsys, n):
    code, out, _ = run(capsys, "verify", "--n", str(n))
    assert code == 0
    assert f"n={n}: PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    by_name = {c["name"]: c for c in rep["checks"]}
    assert by_name["vertex count (n+1)!"]["actual"] == 720
    assert by_name["N_1 enumeration vs surjection formula"]["actual"] == 1800
    assert all({"name", "expected", "actual", "pass"} == set(c) for c in rep["checks"])


def test_verify_rank4_census(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--format", "json")
    rep = json.loads(out)
    assert {"name": "census N_0..N_3", "expected": [120, 240, 150, 30], "actual": [120, 240, 150, 30],
            "pass": True} in rep["checks"]


def test_verify_rank_cap(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "8"])
    assert exc.value.code == 2


def test_verify_nonzero_exit_on_failure(monkeypatch, capsys):
    import weyltile.cli as cli
    from weyltile.verify import Check

    monkeypatch.setattr(cli, "report", lambda n: {"n": n, "passed": False,
                                                  "checks": [Check("x", 1, 2).as_dict()]})
    code, out, _ = run(capsys, "verify", "--n", "4")
    assert code == 1
    assert "FAIL" in out


def test_project_cell_svg(tmp_path, capsys):
    out = tmp_path / "cell.svg"
    code, _, _ = run(capsys, "project-cell", "--out", str(out))
    assert code == 0
    text = out.read_text()
    assert text.startswith('<?xml version="1.0"')
    assert 'version="1.1"' in text
    assert polygon_count(text) == 20
    assert "#d62728" in text and "#1f77b4" in text


def test_project_cell_types_only(capsys):
    code, out, _ = run(capsys, "project-cell", "--types-only")
    assert code == 0
    assert json.loads(out) == {"ThinHexagon": 5, "ThickHexagon": 5, "ThinRhombus": 5, "ThickRhombus": 5}


def test_project_cell_custom_w(capsys):
    code, out, _ = run(capsys, "project-cell", "--types-only", "--w=-2/5,3/11")
    assert code == 0 and set(json.loads(out).values()) == {5}


def test_project_cell_bad_path(tmp_path, capsys):
    target = tmp_path / "missing" / "cell.svg"
    code, _, err = run(capsys, "project-cell", "--out", str(target))
    assert code != 0
    assert "missing" in err
    assert not target.exists()
    assert list(tmp_path.iterdir()) == []


def test_project_cell_nongeneric_w(capsys):
    code, _, err = run(capsys, "project-cell", "--types-only", "--w=-1,0,0,0,0")
    assert code == 3
    assert "perturb" in err


def test_patch_symmetric_rotation_on_json(tmp_path, capsys):
    js = tmp_path / "p.json"
    svg = tmp_path / "p.svg"
    code, _, _ = run(capsys, "patch", "--gamma", "symmetric", "--radius", "6", "--json", str(js), "--out", str(svg))
    assert code == 0
    data = json.loads(js.read_text())
    assert polygon_count(svg.read_text()) == len(data["tiles"])
    center = np.array(data["center"])
    ang = 2 * math.pi / 5
    rot = np.array([[math.cos(ang), -math.sin(ang)], [math.sin(ang), math.cos(ang)]])
    tiles = [(t["type"], np.array(t["vertices"])) for t in data["tiles"]]
    cents = np.array([v.mean(axis=0) for _, v in tiles])
    for kind, v in tiles:
        img = (v - center) @ rot.T + center
        j = int(np.argmin(np.linalg.norm(cents - img.mean(axis=0), axis=1)))
        other_kind, other = tiles[j]
        assert other_kind == kind and len(other) == len(img)
        d = np.linalg.norm(img[:, None] - other[None], axis=2)
        assert d.min(axis=1).max() < 1e-6


def test_patch_no_color(tmp_path, capsys):
    svg = tmp_path / "p.svg"
    code, _, _ = run(capsys, "patch", "--radius", "2", "--no-color", "--out", str(svg))
    assert code == 0
    text = svg.read_text()
    fills = set(re.findall(r'fill="([^"]*)"', text))
    assert fills == {"none"}
    assert polygon_count(text) > 0


def test_patch_radius_zero(capsys):
    code, out, _ = run(capsys, "patch", "--radius", "0", "--center", "0,0,0,0,0", "--gamma", "1/300,1/700",
                       "--json", "-")
    assert code == 0
    data = json.loads(out)
    assert len(data["tiles"]) == 20
    assert {tuple(t["translate"]) for t in data["tiles"]} == {("0",) * 5}


def test_patch_nongeneric_gamma(capsys):
    code, _, err = run(capsys, "patch", "--radius", "1", "--gamma", "0,0", "--types-only")
    assert code == 3
    assert "boundary" in err


def test_patch_bad_radius(capsys):
    with pytest.raises(SystemExit):
        main(["patch", "--radius", "-1", "--types-only"])
    with pytest.raises(SystemExit):
        main(["patch", "--radius", "x/y", "--types-only"])


def test_patch_json_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["patch", "--gamma=-3/11,1/13", "--radius", "4", "--json", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_facets_rank4(capsys):
    code, out, _ = run(capsys, "facets", "--n", "4", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    hexa = rep["center_orbits"]["hexagon"]
    assert "(1/5)(-2k4 - 3k5)" in hexa["centers"]
    assert [g["orbit_size"] for g in hexa["generators"]] == [20, 20, 20]
    assert [g["orbit_size"] for g in rep["center_orbits"]["square"]["generators"]] == [30, 30, 30]
    assert rep["face_counts"] == [120, 240, 150, 30]
    row = next(r for r in rep["faces"] if r["blocks"] == [[1, 2, 3], [4], [5]])
    assert row["center"] == "(1/5)(-2k4 - 3k5)"


def test_facets_rank3(capsys):
    code, out, _ = run(capsys, "facets", "--n", "3", "--format", "json")
    rep = json.loads(out)
    two = [r for r in rep["census"] if r["dimension"] == 2]
    assert sum(r["count"] for r in two) == 14
    assert {tuple(r["block_sizes"]): r["count"] for r in two} == {(3, 1): 8, (2, 2): 6}


def test_facets_table(capsys):
    code, out, _ = run(capsys, "facets", "--n", "4")
    assert code == 0
    assert "(1/5)(-2k4 - 3k5)" in out


def test_svg_deterministic_modulo_header():
    s = shadow_tiling_of_cell()
    a, b = patch_to_svg(s), patch_to_svg(s)
    strip = lambda t: re.sub(r"<!--.*?-->", "", t)
    assert strip(a) == strip(b)
    assert polygon_count(patch_to_svg(s, RenderStyle(colored=False))) == 20


def test_svg_scale():
    s = shadow_tiling_of_cell()
    text = patch_to_svg(s, RenderStyle(margin=0))
    width = float(re.search(r'width="([^"]+)"', text).group(1))
    xs = [p[0] for t in s.tiles for p in t.vertices]
    from weyltile.render import UNIT_EDGE
    assert width == pytest.approx((max(xs) - min(xs)) / UNIT_EDGE * 100, abs=1e-3)


def test_write_atomic(tmp_path):
    target = tmp_path / "x.txt"
    write_atomic(target, "hello")
    assert target.read_text() == "hello"
    write_atomic(target, "again")
    assert target.read_text() == "again"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["x.txt"]
    with pytest.raises(FileNotFoundError):
        write_atomic(tmp_path / "nope" / "y.txt", "z")


def test_module_entry_point_byte_identical():
    cmd = [sys.executable, "-m", "weyltile", "verify", "--n", "4", "--format", "json"]
    env = dict(os.environ)
    first = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    assert first == second
    assert json.loads(first)["passed"] is True
