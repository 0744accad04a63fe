import json
import time

import pytest

import layerlie
from charcalc import ConjectureViolation


@pytest.fixture
def cli(capsys, tmp_path):
    def run(*argv, cache=False):
        extra = ["--cache-dir", str(tmp_path)] if cache else ["--no-cache"]
        status = layerlie.main(list(argv) + extra + ["--quiet"])
        out, err = capsys.readouterr()
        return status, out, err

    return run


@pytest.mark.parametrize("argv,expected", [
    (["dim", "G2", "1,1"], "64"),
    (["dim", "G2", "2,2"], "729"),
    (["dim", "E8", "0,0,0,0,0,0,0,1"], "248"),
    (["dim", "G2", "0,-1"], "0"),
    (["count", "G2", "2,2"], "109"),
    (["count", "A2", "1,1", "--method", "shift"], "7"),
    (["dimpoly", "A1"], "1 + l1"),
    (["layerpoly", "A2"], "1 + 3/2*l1 + 3/2*l2 + 1/2*l1**2 + 2*l1*l2 + 1/2*l2**2"),
    (["layerpoly", "G2"], "1 + 3*l1 + 3*l2 + 9*l1**2 + 12*l1*l2 + 3*l2**2"),
    (["orbit-sum", "B2", "0,2"], "m_{2w2} = ch_{2w2} - ch_{w1} - ch_{0}"),
    (["char", "G2", "1,1"], "ch_{w1+w2} = m_{w1+w2} + 2 m_{2w2} + 2 m_{w1} + 4 m_{w2} + 4 m_{0}"),
    (["decompose", "G2", "1,1"], "ch_{w1+w2} = L_{w1+w2} + L_{2w2} + 2 L_{w2}"),
    (["layer-sum", "G2", "1,1"], "L_{w1+w2} = ch_{w1+w2} - ch_{2w2} - ch_{w2} + ch_{0}"),
])
def test_text_output(cli, argv, expected):
    status, out, _ = cli(*argv)
    assert status == 0
    assert out.strip() == expected


def test_count_brute(cli):
    status, out, _ = cli("count", "G2", "2,2", "--brute")
    assert status == 0
    assert out.strip() == "109 (enumerated: 109)"


def test_count_brute_mismatch(cli, monkeypatch):
    monkeypatch.setattr(layerlie, "count_weights_bruteforce", lambda rs, lam: 0)
    status, out, _ = cli("count", "G2", "1,1", "--brute", "--format", "json")
    assert status == 1
    doc = json.loads(out)
    assert doc["agree"] is False and doc["brute"] == 0 and doc["value"] == "31"


def test_layerpoly_json(cli):
    status, out, _ = cli("layerpoly", "B2", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["polynomial"]["vars"] == ["l1", "l2"]
    assert doc["polynomial"]["terms"][0] == {"exp": [0, 0], "coef": "1"}
    assert doc["report"]["passed"] is True
    assert doc["method"] == "operator"


def test_layerpoly_latex(cli):
    status, out, _ = cli("layerpoly", "G2", "--format", "latex")
    assert status == 0
    assert "\\lambda_{1}" in out


def test_table_csv_default(cli):
    status, out, _ = cli("table", "G2", "2,2")
    lines = out.strip().splitlines()
    assert status == 0
    assert lines[0] == "weight,0,w2,w1,2w2,w1+w2,3w2,2w1,w1+2w2,4w2,2w1+w2,w1+3w2,3w1,5w2,2w1+2w2"
    assert lines[-1] == "2w1+2w2,21,19,16,15,11,9,7,6,4,3,2,1,1,1"
    assert len(lines) == 15


def test_table_layers_csv(cli):
    status, out, _ = cli("table", "G2", "2,2", "--matrix", "layers")
    assert out.strip().splitlines()[-1] == "2w1+2w2,2,3,1,4,2,2,1,2,1,1,1,0,0,1"


def test_table_json(cli):
    status, out, _ = cli("table", "G2", "1,1", "--format", "json")
    doc = json.loads(out)
    assert doc["order"] == [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1]]
    assert doc["r_values"] == ["1", "7", "13", "19", "31"]
    assert doc["orbit_inverse"][-1] == [2, 0, 0, -2, 1]
    assert doc["layers"][-1] == [0, 2, 0, 1, 1]


def test_table_text_and_latex(cli):
    _, out, _ = cli("table", "G2", "1,1", "--format", "text", "--matrix", "dominance")
    lines = out.rstrip("\n").splitlines()
    assert lines[0].split() == ["R", "1", "7", "13", "19", "31"]
    assert lines[-1].split() == ["w1+w2", "1", "1", "1", "1", "1"]
    _, out, _ = cli("table", "G2", "1,1", "--format", "latex")
    assert out.startswith("\\begin{pmatrix}")


def test_expansion_json(cli):
    _, out, _ = cli("decompose", "G2", "2,2", "--format", "json")
    doc = json.loads(out)
    assert doc["lhs"] == "ch" and doc["rhs"] == "L"
    assert doc["weights"][0] == [2, 2]
    assert dict(zip(map(tuple, doc["weights"]), doc["coeffs"]))[(0, 2)] == 4


def test_verify_sweep_passes(cli, monkeypatch):
    monkeypatch.setattr(layerlie, "FIXTURE_ALGEBRAS", ("A2",))
    status, out, _ = cli("verify", "G2", "--upto", "1,1")
    assert status == 0
    assert out.strip().splitlines()[-1] == "all checks passed"


def test_verify_json(cli):
    status, out, _ = cli("verify", "B2", "1,1", "--checks", "sumW,freudenthal", "--format", "json")
    doc = json.loads(out)
    assert status == 0 and doc["passed"] is True
    assert [c["name"] for c in doc["checks"]] == ["sumW", "freudenthal"]
    assert all(c["weight"] == [1, 1] for c in doc["checks"])


def test_verify_fixture_subset(cli, monkeypatch):
    monkeypatch.setattr(layerlie, "FIXTURE_ALGEBRAS", ("A2", "G2"))
    status, out, _ = cli("verify", "G2", "--checks", "fixtures", "--format", "csv")
    assert status == 0
    assert out.splitlines()[1:] == [",fixtures:A2,pass", ",fixtures:G2,pass"]


def test_verify_failure_exits_one(cli, monkeypatch):
    def failing(rs, lam, checks, table):
        return [{"algebra": rs.name, "weight": list(lam), "passed": False,
                 "checks": [{"name": "sumW", "status": "fail", "witness": {"sum": "0", "order": 12}}]}]

    monkeypatch.setattr(layerlie, "verify_sweep", failing)
    status, out, _ = cli("verify", "G2", "--upto", "0,1", "--checks", "sumW")
    assert status == 1
    assert out.strip().endswith("1 check(s) failed")


def test_violation_exits_one(cli, monkeypatch):
    def violated(rs, args, lam):
        raise ConjectureViolation("layer-nonnegativity", rs.name, lam, "synthetic")

    monkeypatch.setattr(layerlie, "compute", violated)
    status, out, _ = cli("decompose", "G2", "1,1")
    assert status == 1
    assert json.loads(out) == {
        "conjecture": "layer-nonnegativity",
        "algebra": "G2",
        "weight": [1, 1],
        "detail": "synthetic",
    }


@pytest.mark.parametrize("argv", [
    ["dim", "H2", "1,1"],
    ["dim", "G2", "1,2,3"],
    ["dim", "G2", "x,y"],
    ["char", "G2", "0,-1"],
    ["char", "G2"],
    ["verify", "G2", "--checks", "bogus"],
    ["verify", "E8", "--checks", "sumW"],
    ["orbit-sum", "B3", "1,0,0", "--max-order", "10"],
    ["dim", "G2", "1,1", "--fix", "1=0"],
    ["layerpoly", "A2", "--fix", "3=0"],
    ["layerpoly", "A2", "--fix", "1"],
])
def test_usage_errors_exit_two(cli, argv):
    status, out, err = cli(*argv)
    assert status == 2
    assert out == ""
    assert "error" in err


def test_rho_and_roots(cli):
    _, out, _ = cli("rho", "G2")
    assert "root basis: 5/2, 9/2" in out
    assert "labels: 1/2, 3/2" in out
    _, out, _ = cli("roots", "G2", "--format", "json")
    doc = json.loads(out)
    assert len(doc["roots"]) == 6
    assert doc["roots"][-1]["coeffs"] == [2, 3]


def test_cache_is_used(cli, tmp_path, monkeypatch):
    status, out, _ = cli("dim", "G2", "1,1", cache=True)
    assert (status, out.strip()) == (0, "64")
    assert len(list(tmp_path.glob("*.json"))) == 1

    def unreachable(*args):
        raise AssertionError("recomputed despite a cached document")

    monkeypatch.setattr(layerlie, "compute", unreachable)
    status, out, _ = cli("dim", "G2", "1,1", cache=True)
    assert (status, out.strip()) == (0, "64")


def test_corrupt_cache_recomputes(cli, tmp_path):
    cli("dim", "G2", "1,1", cache=True)
    entry = next(tmp_path.glob("*.json"))
    entry.write_text("{}", encoding="utf-8")
    status, out, _ = cli("dim", "G2", "1,1", cache=True)
    assert (status, out.strip()) == (0, "64")


def test_e6_orbit_sum_skips_layer_polynomial(cli, monkeypatch):
    def unreachable(*args):
        raise AssertionError("orbit sums are ordered without R")

    monkeypatch.setattr(layerlie, "ordered_upto", unreachable)
    start = time.monotonic()
    status, out, _ = cli("orbit-sum", "E6", "1,0,0,0,0,0")
    assert time.monotonic() - start < 60
    assert status == 0
    assert out.strip() == "m_{w1} = ch_{w1}"


@pytest.mark.parametrize("argv", [
    ["layerpoly", "E6"],
    ["count", "E7", "1,0,0,0,0,0,0"],
    ["char", "E6", "1,0,0,0,0,0"],
    ["count", "A7", "1,0,0,0,0,0,0"],
    ["layerpoly", "A6", "--max-layer-roots", "5"],
    ["shifts", "E6"],
])
def test_layer_polynomial_refusal_exits_two(cli, argv):
    status, out, err = cli(*argv)
    assert status == 2
    assert out == ""
    assert "--max-layer-roots" in err


def test_cache_respects_max_order(cli):
    status, _, _ = cli("char", "G2", "1,1", cache=True)
    assert status == 0
    status, out, err = cli("char", "G2", "1,1", "--max-order", "5", cache=True)
    assert status == 2
    assert "--max-order" in err


def test_roots_marks_highest(cli):
    _, out, _ = cli("roots", "G2")
    lines = out.strip().splitlines()
    assert lines[-1].endswith("highest")
    assert sum(line.endswith("highest") for line in lines) == 1


@pytest.mark.parametrize("fix,expected", [
    ("2=0", "1 + 3/2*l1 + 1/2*l1**2"),
    ("2=1", "3 + 7/2*l1 + 1/2*l1**2"),
    ("1=0,2=0", "1"),
])
def test_layerpoly_fixed_labels(cli, fix, expected):
    status, out, _ = cli("layerpoly", "A2", "--fix", fix)
    assert status == 0
    assert out.strip() == expected


def test_layerpoly_fixed_labels_json(cli):
    status, out, _ = cli("layerpoly", "A3", "--fix", "2=0,3=0", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["fixed"] == {"2": 0, "3": 0}
    assert all(term["exp"][1:] == [0, 0] for term in doc["polynomial"]["terms"])
    assert doc["report"]["passed"] is True


# printed G2 table: shift -(n1 alpha_1 + n2 alpha_2) keyed by (n1, n2)
G2_SHIFTS = {
    (0, 0): 1, (5, 9): 1, (1, 1): -1, (4, 8): -1, (1, 2): -1, (4, 7): -1,
    (1, 3): -1, (4, 6): -1, (2, 4): 1, (3, 5): 1, (3, 4): 1, (2, 5): 1,
}


def test_shifts_pairs_g2(cli):
    status, out, _ = cli("shifts", "G2", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["total"] == [5, 9]
    assert len(doc["pairs"]) == 6
    for pair in doc["pairs"]:
        shift, partner = tuple(pair["shift"]), tuple(pair["partner"])
        assert partner == (5 - shift[0], 9 - shift[1])
        assert G2_SHIFTS[shift] == pair["count"] == G2_SHIFTS[partner]
    covered = {tuple(p["shift"]) for p in doc["pairs"]} | {tuple(p["partner"]) for p in doc["pairs"]}
    assert covered == set(G2_SHIFTS)


def test_shifts_a2_text_and_csv(cli):
    status, out, _ = cli("shifts", "A2")
    assert status == 0
    assert out.split() == ["+1", "0,0", "1,1"]
    _, out, _ = cli("shifts", "A2", "--format", "csv")
    assert out.splitlines() == ["count,shift,partner", "1,\"0,0\",\"1,1\""]
