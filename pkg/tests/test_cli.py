import json

import pytest

from hopfhc.cli import main
from hopfhc.config import parse_config
from hopfhc.errors import ParseError, ValidationError


def test_parse_examples():
    cfg = parse_config("algebra = sweedler4\ncoefficient = trivial\ntheory = check\nmax_degree = 3\n")
    assert (cfg.algebra, cfg.coefficient, cfg.theory, cfg.max_degree) == ("sweedler4", "trivial", "check", 3)
    cfg = parse_config("algebra = uq_sl2\nalgebra.q = 2\nalgebra.cap = 3\ntheory = uq_vanishing\nmax_degree = 1\n")
    assert cfg.algebra_params == {"q": "2", "cap": "3"}


@pytest.mark.parametrize(
    "text,key",
    [
        ("algebra = kC2\ntheory = frobnicate\n", "theory"),
        ("algebra = kC2\ncolour = red\n", "colour"),
        ("algebra = kC2\nalgebra.zeta = 1\n", "algebra.zeta"),
        ("algebra = kC2\ntheory = uq_vanishing\n", "theory"),
        ("algebra = kC2\nmax_degree = -1\n", "max_degree"),
        ("algebra = uq_sl2\nalgebra.q = 1\n", "algebra.q"),
        ("algebra = nope\n", "algebra"),
        ("theory = check\n", "algebra"),
    ],
)
def test_validation_errors(text, key):
    with pytest.raises(ValidationError) as exc:
        parse_config(text)
    assert exc.value.key == key


def test_parse_error_line_number():
    with pytest.raises(ParseError) as exc:
        parse_config("# header\nalgebra = kC2\n\nthis is not a pair\n")
    assert exc.value.line == 4


def run(tmp_path, text, *extra):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(text)
    out = tmp_path / "report.json"
    code = main([str(cfg), "--output", str(out), *extra])
    return code, (json.loads(out.read_text()) if out.exists() else None), out


def test_check_kc2(tmp_path):
    code, rep, _ = run(tmp_path, "algebra = kC2\ncoefficient = trivial\ntheory = check\nmax_degree = 3\n")
    assert code == 0
    assert rep["schema"] == 1
    assert all(e["pass"] for e in rep["ledger"])


def test_cyclic_point(tmp_path):
    code, rep, _ = run(tmp_path, "algebra = k\ntheory = cyclic\nmax_degree = 3\n")
    assert code == 0
    assert [r["rank"] for r in rep["ranks"]] == [1, 0, 1, 0]


def test_check_sweedler_self_informational(tmp_path):
    code, rep, _ = run(tmp_path, "algebra = sweedler4\ncoefficient = coalgebra_self\ntheory = check\n", "--max-degree", "1")
    assert code == 0
    e = {x["name"]: x for x in rep["ledger"]}
    assert not e["aYD"]["pass"] and e["aYD"]["witness"]["h"] == "g" and e["aYD"]["witness"]["y"] == "x"
    assert e["t^(n+1)=id on CM"]["pass"]
    assert rep["config_echo"]["max_degree"] == "1"


def test_exit_codes(tmp_path):
    code, rep, _ = run(tmp_path, "algebra = kC2\ntheory = frobnicate\n")
    assert code == 2 and rep is None
    assert main([str(tmp_path / "missing.cfg")]) == 2
    code, rep, _ = run(tmp_path, "algebra = uq_sl2\nalgebra.cap = 3\ntheory = uq_vanishing\nmax_degree = 1\n")
    assert code == 1
    assert any(not e["pass"] and "witness" in e for e in rep["ledger"])


def test_report_deterministic(tmp_path):
    text = "algebra = sweedler4\ncoefficient = modular_pair\ncoefficient.sigma = g\ntheory = hochschild\nmax_degree = 2\n"
    outs = []
    for _ in range(2):
        code, rep, path = run(tmp_path, text)
        assert code == 0
        rep.pop("wall_time_ms")
        outs.append(json.dumps(rep, sort_keys=True))
    assert outs[0] == outs[1]


def test_threads_env(tmp_path, monkeypatch):
    monkeypatch.setenv("HOPFHC_THREADS", "zero")
    code, _, _ = run(tmp_path, "algebra = k\n")
    assert code == 2
    monkeypatch.setenv("HOPFHC_THREADS", "2")
    code, _, _ = run(tmp_path, "algebra = k\nmax_degree = 1\n")
    assert code == 0
