"""End-to-end tests for the command line interface."""

import json

import pytest

from slopesmith.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_corpus_entry(capsys):
    code, out, err = run(capsys, "analyze", "--poly", "fig8-sister")
    assert code == 0
    assert err == ""
    assert "newton polygon vertices: (0, 2) (1, 0) (4, 2) (3, 4)" in out
    assert "boundary slopes: -1/2, 3/2" in out
    assert "slope diameter: 2" in out
    assert "seminorm functionals (q, p, weight): (2, 1, 1); (2, -3, 1)" in out
    assert "norm ball radius: 4" in out
    assert "norm ball vertices: (3/2, 1) (-1/2, 1) (-3/2, -1) (1/2, -1)" in out
    assert "fundamental-domain check: pass" in out
    assert "filling parameters (p, q): (1, 2)" in out
    assert "symmetries: negate-second" in out


def test_analyze_reports_failed_fundamental_check_but_exits_zero(capsys):
    code, out, err = run(capsys, "analyze", "--poly", "fig8-knot")
    assert code == 0
    assert "slope diameter: 8" in out
    assert "fundamental-domain check: fail" in out
    assert "reason: area is 1, not 4" in out
    assert "symmetries: negate-first" in out


def test_analyze_accepts_file_path(tmp_path, capsys):
    f = tmp_path / "mine.poly"
    f.write_text("vars: m b\nm^2*b - b + 2*m - 2*m*b^2\n")
    code, out, _ = run(capsys, "analyze", "--poly", str(f))
    assert code == 0
    assert "analyze: mine" in out


def test_analyze_vars_override(tmp_path, capsys):
    f = tmp_path / "mv.poly"
    f.write_text("vars: m b\nm - b\n")
    code, out, _ = run(capsys, "analyze", "--poly", str(f), "--vars", "m,l")
    assert code == 0
    assert "vars: m, l" in out


def test_analyze_unknown_entry_exits_two(capsys):
    code, out, err = run(capsys, "analyze", "--poly", "no-such-entry")
    assert code == 2
    assert err.startswith("error:")
    assert "no corpus entry" in err


def test_analyze_bad_file_exits_two(tmp_path, capsys):
    f = tmp_path / "empty.poly"
    f.write_text("")
    code, _, err = run(capsys, "analyze", "--poly", str(f))
    assert code == 2
    assert "vars header" in err


def test_obstruct_cyclic_contradiction_exit_three(capsys):
    code, out, _ = run(capsys, "obstruct", "cyclic", "--c", "2")
    assert code == 3
    assert "verdict: contradiction-established" in out
    assert "tangent-cone] 2*m - b" in out
    assert "ord_first=1, ord_second=1" in out
    assert "boundary_components=2" in out
    assert "not a root of unity" in out


def test_obstruct_cyclic_unit_ratio_consistent(capsys):
    code, out, _ = run(capsys, "obstruct", "cyclic", "--c", "1")
    assert code == 0
    assert "verdict: consistent" in out


def test_obstruct_cyclic_accepts_rational_c(capsys):
    code, out, _ = run(capsys, "obstruct", "cyclic", "--c", "5/2")
    assert code == 3


def test_obstruct_diameter_exit_codes(capsys):
    code12, out12, _ = run(capsys, "obstruct", "diameter", "--p", "1", "--q", "2")
    assert code12 == 3
    assert "verdict: contradiction-established" in out12
    code23, out23, _ = run(capsys, "obstruct", "diameter", "--p", "2", "--q", "3")
    assert code23 == 0
    assert "verdict: consistent" in out23


def test_obstruct_diameter_invalid_pair_exits_two(capsys):
    code, _, err = run(capsys, "obstruct", "diameter", "--p", "2", "--q", "4")
    assert code == 2
    assert "error:" in err


def test_volume_lobachevsky_accepts_pi_fractions(capsys):
    code, out, _ = run(capsys, "volume", "lobachevsky", "--theta", "pi/3")
    assert code == 0
    assert "0.338313868803" in out
    code2, out2, _ = run(capsys, "volume", "lobachevsky", "--theta", "0.5")
    assert code2 == 0
    assert "theta: 0.5" in out2


def test_volume_lobachevsky_bad_angle_exits_two(capsys):
    code, _, err = run(capsys, "volume", "lobachevsky", "--theta", "bogus")
    assert code == 2
    assert err.startswith("error:")


def test_volume_tet_ideal_regular(capsys):
    code, out, _ = run(capsys, "volume", "tet", "--ideal-regular", "--tol", "1e-4")
    assert code == 0
    assert "maximal volume: 1.01494160641" in out
    assert "defect:" in out


def test_volume_tet_side(capsys):
    code, out, _ = run(capsys, "volume", "tet", "--side", "2", "--tol", "1e-6")
    assert code == 0
    assert "0.399338" in out


def test_volume_tet_needs_exactly_one_shape(capsys):
    code, _, err = run(capsys, "volume", "tet")
    assert code == 2


def test_volume_decay_table(capsys):
    code, out, _ = run(
        capsys, "volume", "decay", "--from", "4", "--to", "6", "--step", "2",
        "--tol", "1e-6",
    )
    assert code == 0
    assert "side" in out and "ratio" in out
    assert "fitted decay rate" in out


def test_volume_eta_small_loop(capsys):
    code, out, _ = run(capsys, "volume", "eta", "--poly", "fig8-knot", "--loop", "small")
    assert code == 0
    assert "samples: 73" in out
    assert "volume change" in out


def test_volume_eta_explicit_path(capsys):
    code, out, _ = run(
        capsys, "volume", "eta", "--poly", "fig8-knot",
        "--m-path", "1.15,1.25+0.1j,1.35", "--step", "0.01",
    )
    assert code == 0
    assert "volume change" in out


def test_out_writes_byte_stable_report_pair(tmp_path, capsys):
    base_a = tmp_path / "a"
    base_b = tmp_path / "b"
    code_a, out_a, _ = run(capsys, "analyze", "--poly", "fig8-sister", "--out", str(base_a))
    code_b, out_b, _ = run(capsys, "analyze", "--poly", "fig8-sister", "--out", str(base_b))
    assert code_a == code_b == 0
    ta, ja = base_a.with_suffix(".txt"), base_a.with_suffix(".json")
    tb, jb = base_b.with_suffix(".txt"), base_b.with_suffix(".json")
    assert ta.read_bytes() == tb.read_bytes()
    assert ja.read_bytes() == jb.read_bytes()
    # the text file mirrors stdout
    assert ta.read_text() == out_a
    payload = json.loads(ja.read_text())
    assert payload["command"] == "analyze"
    assert payload["boundary_slopes"] == ["-1/2", "3/2"]
    assert payload["schema_version"] == 1


def test_out_for_obstruct_json_carries_verdict(tmp_path, capsys):
    base = tmp_path / "cyc"
    code, _, _ = run(capsys, "obstruct", "cyclic", "--c", "2", "--out", str(base))
    assert code == 3
    payload = json.loads(base.with_suffix(".json").read_text())
    assert payload["verdict"] == "contradiction-established"
    assert len(payload["evidence"]) == 8


def test_corpus_env_override(tmp_path, monkeypatch, capsys):
    (tmp_path / "local_toy.poly").write_text("vars: m b\nm^2 - b^2 + 1 + m^2*b^2\n")
    monkeypatch.setenv("SLOPESMITH_CORPUS", str(tmp_path))
    code, out, _ = run(capsys, "analyze", "--poly", "local-toy")
    assert code == 0
    assert "analyze: local-toy" in out


def test_cli_entry_point_installed():
    import shutil

    assert shutil.which("slopesmith") is not None
