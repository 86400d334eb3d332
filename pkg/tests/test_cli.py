import json

import pytest

from dentedhex.cli import main
from dentedhex.engines import count_axis, qcount_axis
from dentedhex.harness import DEMO_SPEC_JSON, demo_spec


@pytest.fixture
def demo_file(tmp_path):
    p = tmp_path / "demo.json"
    p.write_text(json.dumps(DEMO_SPEC_JSON))
    return str(p)


def _spec_file(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_count(demo_file, capsys):
    assert main(["count", "--spec", demo_file]) == 0
    out = capsys.readouterr().out.strip()
    assert out == str(count_axis(demo_spec()))


def test_count_brute_small(tmp_path, capsys):
    spec = _spec_file(tmp_path, "hex.json", {"x": 1, "y": 1, "U": [], "D": [], "B": []})
    assert main(["count", "--spec", spec, "--engine", "brute"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_qcount_and_at_one(demo_file, capsys):
    assert main(["qcount", "--spec", demo_file]) == 0
    poly_text = capsys.readouterr().out.strip()
    assert poly_text == qcount_axis(demo_spec()).render()
    assert main(["qcount", "--spec", demo_file, "--at-one"]) == 0
    at_one = capsys.readouterr().out.strip()
    assert at_one == str(count_axis(demo_spec()))


def test_ratio_identity(tmp_path, capsys):
    a = _spec_file(tmp_path, "a.json", {"x": 1, "y": 1, "U": [1, 3], "D": [2], "B": []})
    assert main(["ratio", "--thm", "1", "--spec-a", a, "--spec-b", a]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_ratio_swap(tmp_path, capsys):
    a = _spec_file(tmp_path, "a.json", {"x": 1, "y": 1, "U": [1, 3], "D": [2], "B": []})
    b = _spec_file(tmp_path, "b.json", {"x": 1, "y": 1, "U": [2, 3], "D": [1], "B": []})
    assert main(["ratio", "--thm", "1", "--spec-a", a, "--spec-b", b, "--check"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["ratio", "--thm", "3", "--spec-a", a, "--spec-b", b, "--check"]) == 0


def test_ratio_flips(tmp_path, capsys):
    a = _spec_file(tmp_path, "a.json", {"x": 2, "y": 1, "U": [1, 2], "D": [], "B": []})
    b = _spec_file(tmp_path, "b.json", {"x": 2, "y": 1, "U": [1], "D": [2], "B": []})
    assert main(["ratio", "--thm", "2", "--spec-a", a, "--spec-b", b, "--check"]) == 0
    assert capsys.readouterr().out.strip() == "1/2"


def test_bad_input_exit_code(tmp_path, capsys):
    bad = _spec_file(tmp_path, "bad.json", {"x": 0, "y": 0, "B": [1]})
    assert main(["count", "--spec", bad]) == 1
    assert "error" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    assert main(["count"]) == 1  # missing --spec
    capsys.readouterr()
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_render_tiling_respects_brute_limit(demo_file, capsys):
    # the demo region is far beyond the enumeration budget
    assert main(["render", "--spec", demo_file, "--tiling", "0"]) == 1
    assert "error" in capsys.readouterr().err


def test_verify_small(capsys):
    rc = main(["verify", "--suite", "thm1", "--count", "4", "--seed", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[-1].startswith("SUITE thm1:")
    for line in lines[:-1]:
        assert json.loads(line)["pass"] is True


def test_verify_jobs_deterministic(capsys):
    assert main(["verify", "--suite", "thm3", "--count", "3", "--jobs", "1"]) == 0
    out1 = capsys.readouterr().out
    assert main(["verify", "--suite", "thm3", "--count", "3", "--jobs", "2"]) == 0
    out2 = capsys.readouterr().out
    assert out1 == out2


def test_asym_csv(tmp_path, capsys):
    c = _spec_file(tmp_path, "c.json",
                   {"clusters": [["up", "down", "up"], ["down"]], "gaps": [2]})
    c2 = _spec_file(tmp_path, "c2.json",
                    {"clusters": [["up", "up", "down"], ["down"]], "gaps": [2]})
    rc = main(["asym", "--clusters", c, "--clusters-alt", c2,
               "--x", "1", "--y", "1", "--nmax", "3"])
    assert rc == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[0].split(",")[:4] == ["N", "ratio", "limit", "deviation"]
    assert rows[1].split(",")[1] == "8/3"
    assert all(r.split(",")[2] == "2" for r in rows[1:])


def test_render_cli(demo_file, tmp_path, capsys):
    out = tmp_path / "r.svg"
    assert main(["render", "--spec", demo_file, "--out", str(out)]) == 0
    assert out.read_text().startswith("<svg")
    hexf = _spec_file(tmp_path, "hex.json", {"x": 1, "y": 1, "U": [], "D": [], "B": []})
    assert main(["render", "--spec", hexf, "--tiling", "0"]) == 0
    assert "loz" in capsys.readouterr().out
    assert main(["render", "--spec", hexf, "--tiling", "5"]) == 1


def test_verify_exit_code_on_failure(monkeypatch, capsys):
    # exit 2 iff any check fails (forced here by corrupting a report)
    import dentedhex.cli as cli_mod
    real = cli_mod.run_suite

    def sabotaged(*a, **kw):
        reports = real(*a, **kw)
        reports[0].passed = False
        return reports

    monkeypatch.setattr(cli_mod, "run_suite", sabotaged)
    assert main(["verify", "--suite", "thm1", "--count", "2"]) == 2
    out = capsys.readouterr().out
    assert "FIRST-FAILURE" in out


def test_spec_json_type_strictness(tmp_path, capsys):
    bad = _spec_file(tmp_path, "bad.json", {"x": 1.5, "y": 1})
    assert main(["count", "--spec", bad]) == 1
    capsys.readouterr()
    bad2 = _spec_file(tmp_path, "bad2.json", {"x": 1, "y": 1, "U": ["1"]})
    assert main(["count", "--spec", bad2]) == 1
    capsys.readouterr()


def test_corpus_deterministic(capsys):
    assert main(["corpus", "--seed", "7", "--size", "25"]) == 0
    out1 = capsys.readouterr().out
    assert main(["corpus", "--seed", "7", "--size", "25"]) == 0
    out2 = capsys.readouterr().out
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 25
    json.loads(out1.strip().splitlines()[0])
