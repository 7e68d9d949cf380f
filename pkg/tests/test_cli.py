import csv
import io
import json
import re

import pytest

from zetalab.cli import FIELDS, RunConfig, UsageError, main, read_config, render


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    rows = out.strip().splitlines()
    assert code == 0
    assert len(rows) == 23
    lerch = next(r for r in rows if r.startswith("lerch "))
    assert "m odd positive" in lerch
    code, out, _ = run(capsys, "list", "--filter", "odd_*")
    assert len(out.strip().splitlines()) == 2


def test_verify_examples(capsys):
    assert run(capsys, "verify", "--id", "sech_chi4", "--prec", "40")[0] == 0
    code, _, err = run(capsys, "verify", "--id", "lerch", "--param", "m=2")
    assert code == 2 and "odd" in err
    code, out, _ = run(capsys, "verify", "--id", "ram_odd_zeta", "--param", "m=-2", "--param", "alpha=1.3")
    assert code == 0 and out.startswith("PASS")


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "nope"], ["verify", "--id", "lerch", "--param", "m"],
    ["verify", "--id", "lerch", "--param", "q=1"], ["verify", "--id", "lerch", "--prec", "5"],
    ["suite", "--filter", "zzz*"], ["zeta-odd", "--m", "3", "--method", "kappa"],
    ["zeta-odd", "--m", "2", "--method", "lerch"], ["rp", "--m", "0"],
    ["asym", "--m", "0", "--r", "1"], ["verify", "--id", "lerch", "--jobs", "0"],
    ["verify", "--id", "lerch", "--format", "xml"],
])
def test_usage_and_domain_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2


def test_failure_exit_1(capsys, monkeypatch):
    from zetalab import cli

    class Bad:
        def to_dict(self):
            return {"id": "x", "params": {}, "lhs": "1", "rhs": "2", "abs_residual": "1",
                    "rel_residual": "0.5", "pass": False, "terms_used": 0, "wall_ms": 0}

    monkeypatch.setattr(cli, "evaluate_identity", lambda *a: Bad())
    assert run(capsys, "verify", "--id", "lerch")[0] == 1


def test_suite_filter_json(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "suite", "--filter", "pv_*", "--format", "json", "--out", str(out), "--jobs", "1")
    assert code == 0
    doc = json.loads(out.read_text())
    assert set(doc) == {"version", "generated", "digits", "guard", "records"}
    assert doc["version"] == 1 and doc["digits"] == 30 and doc["guard"] == 10
    assert {r["id"] for r in doc["records"]} == {"pv_transform", "pv_transform_a"}
    for r in doc["records"]:
        assert list(r) == list(FIELDS)
        assert all(isinstance(v, str) for v in r["params"].values())
        for k in ("lhs", "rhs", "abs_residual", "rel_residual"):
            assert isinstance(r[k], str)
        assert r["pass"] is True


def test_suite_csv_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path, jobs in ((a, "1"), (b, "2")):
        assert run(capsys, "suite", "--filter", "quasi_e2", "--format", "csv", "--out", str(path),
                   "--jobs", jobs)[0] == 0
    rows = list(csv.reader(io.StringIO(a.read_text())))
    assert tuple(rows[0]) == FIELDS
    assert len(rows) == 4 and all(r[6] == "true" for r in rows[1:])
    strip = lambda t: [r[:-1] for r in csv.reader(io.StringIO(t))]
    assert strip(a.read_text()) == strip(b.read_text())


def test_json_determinism(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "suite", "--filter", "eta_equiv", "--format", "json", "--jobs", "1")
        doc = json.loads(out)
        doc.pop("generated")
        for r in doc["records"]:
            r.pop("wall_ms")
        outs.append(json.dumps(doc))
    assert outs[0] == outs[1]


def test_render_fixed_timestamp():
    rec = {"id": "x", "params": {"m": "1"}, "lhs": "1", "rhs": "1", "abs_residual": "0",
           "rel_residual": "0", "pass": True, "terms_used": 3, "wall_ms": 1}
    cfg = RunConfig(format="json")
    assert render([rec], cfg, "T") == render([rec], cfg, "T")
    text = render([rec], RunConfig())
    assert text.splitlines()[-1] == "1/1 passed at digits=30 guard=10"


def test_config_file_and_env(capsys, tmp_path, monkeypatch):
    cfgfile = tmp_path / "z.cfg"
    cfgfile.write_text("# sample\ndigits = 35\nguard=6\nfilter=lerch\n")
    assert read_config(cfgfile) == {"digits": "35", "guard": "6", "filter": "lerch"}
    code, out, _ = run(capsys, "suite", "--config", str(cfgfile), "--jobs", "1")
    assert code == 0 and "digits=35 guard=6" in out and out.count("PASS") == 4
    monkeypatch.setenv("ZETALAB_CONFIG", str(cfgfile))
    code, out, _ = run(capsys, "suite", "--prec", "31", "--jobs", "1")
    assert "digits=31 guard=6" in out
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour=blue\n")
    with pytest.raises(UsageError):
        read_config(bad)
    assert run(capsys, "list", "--config", str(bad))[0] == 2
    assert run(capsys, "list", "--config", str(tmp_path / "missing"))[0] == 2


def test_zeta_odd(capsys):
    code, out, _ = run(capsys, "zeta-odd", "--m", "1", "--method", "lerch")
    assert code == 0 and "1.2020569031595942853997381615" in out
    code, out, _ = run(capsys, "zeta-odd", "--m", "4", "--method", "kappa", "--prec", "40", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and float(doc["deviation"]) < 1e-20
    code, out, _ = run(capsys, "zeta-odd", "--m", "2", "--method", "osullivan", "--z", "1+1j")
    assert code == 0 and "j" not in out.splitlines()[0]
    assert run(capsys, "zeta-odd", "--m", "2", "--method", "osullivan", "--z", "1j")[0] == 2


def test_rp_and_asym(capsys):
    code, out, _ = run(capsys, "rp", "--m", "4")
    assert code == 0 and "unimodular zeros in the upper half-plane: 2" in out
    code, out, _ = run(capsys, "rp", "--m", "1", "--format", "json")
    assert json.loads(out)["unimodular_zeros"] == []
    code, out, _ = run(capsys, "asym", "--m", "1", "--r", "1", "--y", "0.2", "--prec", "40")
    order = float(re.search(r"order_estimate: (\S+)", out).group(1))
    assert code == 0 and 4.5 <= order <= 5.5
