import json
import subprocess
import sys

from conftest import FIXTURES

AGQ = [sys.executable, "-m", "agq.cli"]


def run(*args, **kw):
    return subprocess.run(AGQ + [str(a) for a in args],
                          capture_output=True, text=True, **kw)


def test_validate_ok():
    out = run("validate", FIXTURES / "fig1.agq")
    assert out.returncode == 0
    assert "valid almost gentle pair" in out.stdout


def test_validate_failure_exit_code():
    out = run("validate", FIXTURES / "loop_norel.agq")
    assert out.returncode == 1
    assert "NonzeroCycle" in out.stdout


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.agq"
    bad.write_text("arrow a 1 -> 2\n")
    out = run("gldim", bad)
    assert out.returncode == 1
    assert "error" in out.stderr


def test_gldim_fig1():
    out = run("gldim", FIXTURES / "fig1.agq")
    assert out.returncode == 0
    assert out.stdout == "4\n"


def test_gldim_witness():
    out = run("gldim", FIXTURES / "fig1.agq", "--witness")
    assert "witness: a_1_2 a_2_3 a_3_4 a_4_5" in out.stdout


def test_injdim_cyc2():
    out = run("injdim", FIXTURES / "cyc2.agq")
    assert out.stdout.splitlines()[0] == "0"


def test_pdim_flags():
    assert run("pdim", FIXTURES / "fig1.agq", "--simple", "1").stdout == "4\n"
    assert run("pdim", FIXTURES / "fig1.agq", "--injective", "2R").stdout == "4\n"
    assert run("pdim", FIXTURES / "fig1.agq", "--string", "a_1_2").stdout == "2\n"
    assert run("pdim", FIXTURES / "fig1.agq", "--simple", "zz").returncode == 1


def test_forbidden_report():
    out = run("forbidden", FIXTURES / "cyc2e.agq")
    assert "1: sup infinite" in out.stdout
    cycles = run("forbidden", FIXTURES / "cyc2e.agq", "--cycles")
    assert cycles.stdout == "a b\n"


def test_resolve_with_oracle():
    out = run("resolve", FIXTURES / "fig1.agq", "--string", "a_1_2", "--oracle")
    assert "terminated: projective (length 2)" in out.stdout
    assert "oracle pdim: 2" in out.stdout
    assert "P2 = P(3L) + P(3R)" in out.stdout


def test_gorenstein_text_and_json():
    out = run("gorenstein", FIXTURES / "cyc2e.agq")
    assert "gorenstein: no" in out.stdout
    data = json.loads(run("gorenstein", FIXTURES / "fig1.agq", "--json").stdout)
    assert data["global_dimension"] == {
        "finite": True, "value": 4,
        "witness": ["a_1_2", "a_2_3", "a_3_4", "a_4_5"]}
    assert data["gorenstein"] is True
    assert data["per_vertex"]["2R"]["gentle"] is True
    assert data["per_vertex"]["2"]["invalid"] is True


def test_json_infinite_encoding():
    data = json.loads(run("gldim", FIXTURES / "cyc2.agq", "--json").stdout)
    assert data["global_dimension"]["finite"] is False
    assert data["global_dimension"]["value"] is None
    assert data["self_injective_dimension"]["finite"] is True
    assert data["self_injective_dimension"]["value"] == 0


def test_check_ok():
    out = run("check", FIXTURES / "fig1.agq", "--cutoff", "20")
    assert out.returncode == 0
    assert "agree with the oracle" in out.stdout


def test_random_emit(tmp_path):
    out = run("random", "--seed", "3", "--count", "2", "--emit", tmp_path)
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["random_3.agq", "random_4.agq"]
    assert out.returncode == 0


def test_dot_output():
    out = run("dot", FIXTURES / "a3r.agq")
    assert out.stdout.startswith('digraph "a3r" {')
    assert '"mid_a" -> "mid_b" [style=dashed' in out.stdout


def test_determinism_byte_identical():
    for args in (("gldim", FIXTURES / "fig1.agq"),
                 ("gorenstein", FIXTURES / "fig1.agq", "--json"),
                 ("random", "--seed", "1"),
                 ("forbidden", FIXTURES / "cyc2e.agq")):
        first = run(*args)
        second = run(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode


def test_check_mismatch_exit_code(monkeypatch, capsys):
    # exercised with a stubbed disagreement: the honest pipeline has none
    from agq import cli as climod
    from agq.oracle import AgreementReport, Mismatch

    monkeypatch.setattr(climod, "check_against_formulas",
                        lambda pair, cutoff: AgreementReport(
                            (Mismatch("v", "pdim_simple", "1", "2"),), 1))
    code = climod.main(["check", str(FIXTURES / "a2.agq")])
    out = capsys.readouterr().out
    assert code == 2
    assert "mismatch at v" in out


def test_check_color_env(monkeypatch, capsys):
    from agq import cli as climod
    monkeypatch.setenv("AGQ_COLOR", "1")
    code = climod.main(["check", str(FIXTURES / "a2.agq")])
    out = capsys.readouterr().out
    assert code == 0
    assert "\x1b[32m" in out


def test_single_vertex_json():
    data = json.loads(run("gorenstein", FIXTURES / "single.agq", "--json").stdout)
    assert data["global_dimension"] == {"finite": True, "value": 0}
    assert data["self_injective_dimension"]["value"] == 0
    assert data["gorenstein"] is True


def test_check_on_generated_file(tmp_path):
    emitted = run("random", "--seed", "7", "--emit", tmp_path)
    assert emitted.returncode == 0
    path = emitted.stdout.strip()
    out = run("check", path, "--cutoff", "25")
    assert out.returncode == 0, out.stdout + out.stderr


def test_unknown_flag_exits_one():
    out = run("gldim", FIXTURES / "fig1.agq", "--nope")
    assert out.returncode == 1
    assert "usage" in out.stderr
    out = run("frobnicate")
    assert out.returncode == 1
