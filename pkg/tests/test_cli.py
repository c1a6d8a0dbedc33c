"""
命令行与验证图的端到端测试
"""
import json

import pytest

from supervirasoro.algebra.basis import Variant
from supervirasoro.config.settings import reset_settings
from supervirasoro.main import SessionVerifier, build_parser, main
from supervirasoro.utils.file_utils import read_json


SESSION = {
    "d": 2,
    "gamma_generators": ["1"],
    "s": "1/2",
    "variant": "sv",
    "window": {"degree_coord_bound": 2, "i_max": 1},
    "seed": 7,
}


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False), encoding="utf-8")
    return str(path)


@pytest.fixture
def config(tmp_path):
    return write(tmp_path, "session.json", SESSION)


def run(command, config, tmp_path, data=None, extra=()):
    out = str(tmp_path / f"{command}.json")
    argv = [command, "--config", config, "--out", out, "--quiet", *extra]
    if data is not None:
        argv += ["--input", write(tmp_path, f"{command}-input.json", data)]
    code = main(argv)
    return code, read_json(out).data


def test_check_axioms(config, tmp_path):
    code, report = run("check-axioms", config, tmp_path)
    assert code == 0
    assert report["status"] == "pass"
    assert report["details"]["triples"] == "exhaustive"
    assert report["details"]["basis_size"] == 10


def test_check_generators(config, tmp_path):
    code, report = run("check-generators", config, tmp_path)
    assert code == 0 and report["violations"] == []


def test_check_center_element(config, tmp_path):
    element = {"terms": [{"basis": "L(0, 0)", "coeff": "1"}]}
    code, report = run("check-center", config, tmp_path, element)
    assert code == 1
    assert report["violations"][0]["args"] == ["L(1, 0)"]


def test_aut_check_rejects_scaling(config, tmp_path):
    """c = 2 不保持 Ω = (1/2)Z：参数非法，退出码 2"""
    code, report = run("aut-check", config, tmp_path, {"c": "2", "r": "sqrt(2)"})
    assert code == 2
    assert "scaling does not preserve lattice" in report["error"]
    assert report["details"]["witness"] == "1/4"


def test_aut_check_involution(config, tmp_path):
    code, report = run("aut-check", config, tmp_path, {"c": "1", "r": "1", "sign": -1})
    assert code == 0
    assert report["details"]["inverse"]["sign"] == -1


def test_aut_compose(config, tmp_path):
    data = {"p1": {"tau": {"1/2": "2"}, "c": "1", "r": "1"}, "p2": {"tau": {"1/2": "3"}, "c": "-1", "r": None}}
    session = dict(SESSION, variant="w")
    code, report = run("aut-compose", write(tmp_path, "w.json", session), tmp_path, data)
    assert code == 0
    assert report["details"]["composed"]["tau"] == {"1/2": "3/2"}


def test_cocycle_trivialize(config, tmp_path):
    code, report = run("cocycle-trivialize", config, tmp_path, {"kind": "coboundary", "g": {"L(0,0)": "1"}})
    assert code == 0
    assert report["details"]["f"] == {"L(0, 0)": "1"}
    assert set(report["details"]["sectors"]) == {"LL", "LG", "GG"}


def test_cocycle_check_svir_central(tmp_path):
    session = dict(SESSION, variant="svir0", window={"degree_coord_bound": 4, "i_max": 0})
    code, report = run("cocycle-check", write(tmp_path, "svir0.json", session), tmp_path, {"kind": "svir-central"})
    assert code == 0
    assert report["details"]["cocycle"] == "TableCocycle"


def test_bad_literal_is_located(config, tmp_path):
    """非法字面量：退出码 2，错误里带文件与行号"""
    data = {"kind": "coboundary", "g": {"L(0,0)": "1 2"}}
    path = write(tmp_path, "bad.json", data)
    out = str(tmp_path / "bad-report.json")
    code = main(["cocycle-check", "--config", config, "--input", path, "--out", out, "--quiet"])
    assert code == 2
    error = read_json(out).data["error"]
    assert f"{path}:4" in error
    assert "'1 2'" in error


def test_bad_config(tmp_path):
    config = write(tmp_path, "bad-session.json", dict(SESSION, d=4))
    out = str(tmp_path / "report.json")
    assert main(["check-axioms", "--config", config, "--out", out, "--quiet"]) == 2
    assert read_json(out).data["status"] == "error"


def test_missing_input(config, tmp_path):
    out = str(tmp_path / "report.json")
    assert main(["derivation-check", "--config", config, "--out", out, "--quiet"]) == 2


def test_derivation_check_hom(config, tmp_path):
    code, report = run("derivation-check", config, tmp_path, {"kind": "hom", "phi": {"1/2": "3"}})
    assert code == 0
    assert report["skipped"] == 0


def test_derivation_check_failure(config, tmp_path):
    data = {
        "kind": "table",
        "images": [{"basis": "L(0,0)", "image": {"terms": [{"basis": "L(1,0)", "coeff": "1"}]}}],
    }
    code, report = run("derivation-check", config, tmp_path, data)
    assert code == 1
    assert ["L(0, 0)", "L(-1, 0)"] in [v["args"] for v in report["violations"]]


def test_derivation_reduce_element(config, tmp_path):
    code, report = run("derivation-reduce", config, tmp_path, {"terms": [{"basis": "L(0,1)"}]})
    assert code == 0


def test_report_is_deterministic(config, tmp_path):
    outputs = []
    for name, jobs in (("a.json", "1"), ("b.json", "1"), ("c.json", "2")):
        out = str(tmp_path / name)
        assert main(["check-axioms", "--config", config, "--out", out, "--quiet", "--jobs", jobs]) == 0
        outputs.append((tmp_path / name).read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]


def test_summary_printed(config, tmp_path, capsys):
    out = str(tmp_path / "r.json")
    main(["check-axioms", "--config", config, "--out", out])
    assert "状态: pass" in capsys.readouterr().out
    main(["check-axioms", "--config", config, "--out", out, "--quiet"])
    assert capsys.readouterr().out == ""


def test_default_report_location(config, tmp_path):
    report = SessionVerifier().run("check-axioms", config_path=config)
    assert report.status == "pass"
    assert list((tmp_path / "reports").glob("check-axioms_*.json"))


def test_unknown_command():
    with pytest.raises(SystemExit):
        main(["no-such-command"])


def test_reports_follow_output_dir(config, tmp_path, monkeypatch):
    """未设置 reports_dir 时报告写到 output_dir/reports"""
    monkeypatch.delenv("SVIR_REPORTS_DIR")
    monkeypatch.setenv("SVIR_OUTPUT_DIR", str(tmp_path / "outputs"))
    reset_settings()
    report = SessionVerifier().run("check-axioms", config_path=config)
    assert report.status == "pass"
    (path,) = (tmp_path / "outputs" / "reports").glob("check-axioms_*.json")
    assert read_json(str(path)).data["status"] == "pass"


def test_parser_describes_algebras():
    """--help 里的描述说明这是 super-Virasoro 型代数；SVir 带中心 C，SVir0 不带"""
    assert "super-Virasoro" in build_parser().description
    assert Variant.SVIR.has_center and not Variant.SVIR0.has_center
