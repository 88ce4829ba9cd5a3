import json
from fractions import Fraction
from pathlib import Path

import pytest

from schmidt_cone.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_map_transpose(capsys):
    code, out = run_cli(capsys, "classify-map", "--d", "4", "--p", "0", "--q", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["max_k"] == 1
    assert payload["mode"] == "float"


def test_classify_map_identity(capsys):
    code, out = run_cli(capsys, "classify-map", "--d", "4", "--p", "1", "--q", "0")
    assert code == 0
    assert json.loads(out)["max_k"] == 4


def test_classify_map_exact_boundary(capsys):
    code, out = run_cli(capsys, "classify-map", "--d", "4", "--p", "-1/11", "--q", "0", "--exact")
    assert code == 0
    payload = json.loads(out)
    assert payload["mode"] == "exact"
    assert payload["max_k"] == 3
    assert payload["per_k"][2] == {"k": 3, "margin": "0", "status": "boundary"}


def test_classify_state_basic(capsys):
    code, out = run_cli(capsys, "classify-state", "--d", "4", "--a", "0", "--b", "0")
    assert code == 0
    assert json.loads(out)["schmidt_number"] == 1
    code, out = run_cli(capsys, "classify-state", "--d", "4", "--a", "1", "--b", "0")
    assert json.loads(out)["schmidt_number"] == 4


def test_classify_state_not_a_state(capsys):
    code, out = run_cli(capsys, "classify-state", "--d", "4", "--a", "2", "--b", "0")
    assert code == 0
    assert json.loads(out)["schmidt_number"] == "not_a_state"


def test_classify_state_matches_witness_search(capsys):
    code, out = run_cli(capsys, "classify-state", "--d", "6", "--a", "0.4", "--b", "-0.12")
    sn = json.loads(out)["schmidt_number"]
    assert 1 <= sn <= 6
    code, out = run_cli(
        capsys, "witness", "--d", "6", "--a", "0.4", "--b", "-0.12", "--k", str(sn - 1)
    )
    assert json.loads(out)["found"] is True
    code, out = run_cli(
        capsys, "witness", "--d", "6", "--a", "0.4", "--b", "-0.12", "--k", str(sn)
    )
    assert json.loads(out)["found"] is False


def test_region_json_piece_counts(capsys):
    code, out = run_cli(capsys, "region", "map", "--d", "4", "--k", "4")
    payload = json.loads(out)
    assert len(payload["vertices"]) == 3 and payload["arcs"] == []
    code, out = run_cli(capsys, "region", "state", "--d", "3", "--k", "1")
    payload = json.loads(out)
    assert len(payload["vertices"]) == 4 and payload["arcs"] == []


def test_region_csv_rhombus_matches_golden(capsys, tmp_path):
    out_file = tmp_path / "s1.csv"
    code, out = run_cli(
        capsys, "region", "state", "--d", "3", "--k", "1", "--format", "csv", "--out", str(out_file)
    )
    assert code == 0
    rows = out_file.read_text().strip().splitlines()
    assert rows[0] == "kind,index,x,y"
    assert len(rows) == 5  # header + 4 vertices
    assert out_file.read_bytes() == (GOLDEN / "state_d3_k1.csv").read_bytes()


def test_region_json_matches_golden(capsys):
    code, out = run_cli(capsys, "region", "map", "--d", "4", "--k", "3", "--samples", "16")
    assert code == 0
    assert out == (GOLDEN / "map_d4_k3.json").read_text()


def test_region_svg_requires_out(capsys):
    code = main(["region", "map", "--d", "4", "--k", "3", "--format", "svg"])
    assert code == 2


@pytest.mark.parametrize("kind", ["map", "state"])
@pytest.mark.parametrize("d", [3, 4])
def test_region_svg_matches_golden(capsys, tmp_path, kind, d):
    for k in range(1, d + 1):
        out_file = tmp_path / f"{kind}_d{d}_k{k}.svg"
        code, _ = run_cli(
            capsys, "region", kind, "--d", str(d), "--k", str(k),
            "--format", "svg", "--out", str(out_file),
        )
        assert code == 0
        golden = (GOLDEN / f"{kind}_d{d}_k{k}.svg").read_bytes()
        assert out_file.read_bytes() == golden


def test_region_svg_style_override(capsys, tmp_path):
    style = tmp_path / "style.cfg"
    style.write_text("edge.stroke=#00ff00\n")
    out_file = tmp_path / "styled.svg"
    code, _ = run_cli(
        capsys, "region", "map", "--d", "3", "--k", "1",
        "--format", "svg", "--out", str(out_file), "--style", str(style),
    )
    assert code == 0
    text = out_file.read_text()
    assert "#00ff00" in text and 'class="arc"' not in text


def test_cli_byte_identical_across_runs(capsys):
    _, out1 = run_cli(capsys, "classify-state", "--d", "5", "--a", "0.3", "--b", "-0.1")
    _, out2 = run_cli(capsys, "classify-state", "--d", "5", "--a", "0.3", "--b", "-0.1")
    assert out1 == out2
    _, w1 = run_cli(capsys, "witness", "--d", "5", "--a", "0.9", "--b", "0", "--k", "2")
    _, w2 = run_cli(capsys, "witness", "--d", "5", "--a", "0.9", "--b", "0", "--k", "2")
    assert w1 == w2


def test_conic_remark_classifications(capsys):
    _, out = run_cli(capsys, "conic", "--d", "5", "--k", "3")
    assert json.loads(out)["classification"] == "hyperbola"
    _, out = run_cli(capsys, "conic", "--d", "5", "--k", "4")
    assert json.loads(out)["classification"] == "ellipse"


def test_conic_dual_payload(capsys):
    _, out = run_cli(capsys, "conic", "--d", "4", "--k", "3", "--dual")
    payload = json.loads(out)
    assert payload["classification"] == "ellipse"
    A, B, C, D, E, F = payload["coefficients"]
    for xs, ys in payload["tangency_points"]:
        x, y = Fraction(xs), Fraction(ys)
        assert A * x * x + B * x * y + C * y * y + D * x + E * y + F == 0
    assert len(payload["tangent_lines"]) == 5


def test_verify_frames_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "frames", "--d", "7", "--seed", "1")
    assert code == 0
    rep = json.loads(out)["reports"]["frames"]
    assert rep["verdict"] == "consistent"
    minima = rep["details"]["minima"]
    for k in range(1, 8):
        assert abs(minima[str(k)] - max(2 * k - 7, 0)) < 1e-6


def test_verify_twirl_suite(capsys):
    code, out = run_cli(
        capsys, "verify", "--suite", "twirl", "--d", "3", "--seed", "1", "--samples", "50000"
    )
    assert code == 0
    rep = json.loads(out)["reports"]["twirl"]
    assert rep["verdict"] == "consistent"
    assert rep["details"]["max_frobenius_error"] <= 1e-2


def test_verify_tomiyama_suite_small(capsys):
    code, out = run_cli(
        capsys, "verify", "--suite", "tomiyama", "--d", "3", "--seed", "1",
        "--grid", "30", "--frames", "30", "--workers", "1",
    )
    assert code == 0
    rep = json.loads(out)["reports"]["tomiyama"]
    assert rep["verdict"] == "consistent"
    assert rep["details"]["disagreements"] == 0


def test_verify_witness_and_duality_suites(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "witness", "--d", "4", "--grid", "50")
    assert code == 0
    assert json.loads(out)["reports"]["witness"]["verdict"] == "consistent"
    code, out = run_cli(capsys, "verify", "--suite", "duality", "--d", "3", "--seed", "2")
    assert code == 0
    assert json.loads(out)["reports"]["duality"]["verdict"] == "consistent"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify-map", "--d", "4", "--p", "zzz", "--q", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["region", "map", "--d", "4"])
    assert exc.value.code == 2


def test_internal_error_exit_code(capsys):
    assert main(["classify-map", "--d", "1", "--p", "0", "--q", "0"]) == 3
