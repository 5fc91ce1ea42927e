import io
import json

import pytest

from smallknots.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_cf_eval():
    assert call("cf", "eval", "2,4,-2") == (0, "16/7\n", "")


def test_cf_simple():
    code, out, _ = call("cf", "simple", "16/7")
    assert code == 0 and out.strip() == "[2, 3, 2]"
    code, out, _ = call("--json", "cf", "simple", "8/3")
    assert json.loads(out) == {"fraction": "8/3", "simple": [2, 1, 2]}


def test_link_equiv():
    code, out, _ = call("link", "equiv", "3,2", "2,3")
    assert code == 1 and out.startswith("not equivalent")
    code, out, _ = call("link", "equiv", "3,2", "2,3", "--mirror")
    assert code == 0
    code, out, _ = call("link", "equiv", "2,6,-2", "2,5,2", "--json")
    doc = json.loads(out)
    assert doc["equivalent"] and doc["diagnostic"] == "equal simple forms"


def test_table():
    code, out, _ = call("table", "--k", "2")
    assert code == 0 and "(2/t, 2t)" in out and "(-8/1, empty)" in out
    code, out, _ = call("table", "--k", "1", "--json")
    assert len(json.loads(out)["rows"]) == 8
    assert call("table", "--k", "0")[0] == 2


def test_check_pair_nonmember_with_trace():
    code, out, _ = call("check-pair", "--k", "2", "--pair", "(inf,-5/1)", "--trace")
    assert code == 1
    assert out.splitlines()[0] == "non-member"
    assert "row 5 [listed, pair as given]: cross-coordinate at 0/1" in out


def test_check_pair_member():
    for k in ("1", "2", "9"):
        code, out, _ = call("check-pair", "--k", k, "--pair", "(inf,0)", "--json")
        doc = json.loads(out)
        assert code == 0 and doc["verdict"] == "member"
        assert doc["witness"]["label"] == "(2t^-1, 2t)" and doc["witness"]["value"] == "0/1"
    code, out, _ = call("check-pair", "--k", "2", "--pair", "(empty,-8)")
    assert code == 0 and out.startswith("member: row 3")


def test_certify_lens():
    code, out, _ = call("certify", "lens", "--p", "5", "--q", "1", "--k", "2")
    assert code == 0 and out.startswith("L(5,1): certified")
    code, out, _ = call("certify", "lens", "--p", "8", "--q", "1", "--k", "2")
    assert code == 2 and "4k != ±p/q" in out
    code, out, _ = call("--json", "certify", "lens", "--p", "8", "--q", "1")
    assert code == 0 and json.loads(out)["knot"]["k"] == 3
    code, out, err = call("certify", "lens", "--p", "4", "--q", "2")
    assert code == 2 and "gcd" in err


def test_certify_spherical():
    code, out, _ = call("certify", "spherical", "--a3", "2", "--b3", "3", "--trace")
    assert code == 0 and "certified" in out and "cross-coordinate at 2/1" in out
    code, out, err = call("certify", "spherical", "--a3", "1", "--b3", "3")
    assert code == 2 and "1/m" in err and out == ""
    code, out, err = call("--json", "certify", "spherical", "--a3", "1", "--b3", "3")
    assert code == 2 and json.loads(out)["kind"] == "ExcludedCase"


def test_json_round_trip_and_verify(tmp_path):
    code, out, _ = call("certify", "spherical", "--a3", "-7", "--b3", "5", "--json")
    path = tmp_path / "cert.json"
    path.write_text(out)
    assert call("verify", str(path))[0] == 0
    doc = json.loads(out)
    doc["manifold"]["a3"] = 7
    path.write_text(json.dumps(doc))
    code, out, _ = call("verify", str(path))
    assert code == 1 and "DIFFERS" in out


@pytest.mark.parametrize("argv", [
    ("cf", "eval", "2,0,1"),
    ("cf", "simple", "-3/2"),
    ("check-pair", "--k", "2", "--pair", "(inf;0)"),
    ("certify", "spherical", "--a3", "2", "--b3", "7"),
    ("nonsense",),
    ("cf",),
    ("sweep", "/nonexistent/config.json"),
])
def test_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2 and err.startswith("error:") and len(err.strip().splitlines()) == 1
    code, out, _ = call("--json", *argv)
    assert code == 2 and "error" in json.loads(out)


def test_parse_error_position():
    _, _, err = call("cf", "eval", "2,4,x")
    assert "column 5" in err


def test_determinism():
    argv = ("--json", "certify", "lens", "--p", "13", "--q", "-5", "--trace")
    assert call(*argv) == call(*argv)


def test_sweep(tmp_path):
    cfg = tmp_path / "sweep.json"
    cfg.write_text(json.dumps({
        "identities": {"k_max": 50, "w_max": 5, "u_min": -6},
        "claim": {"k_max": 30},
        "table_laws": {"k_values": [1, 3], "samples": 20},
        "lens": {"p_max": 6, "q_max": 3, "k_max": 3},
        "spherical": {"a3_max": 5},
    }))
    code, out, _ = call("sweep", str(cfg))
    assert code == 0 and out.strip().endswith("sweep: ok")
    code, out, _ = call("--json", "sweep", str(cfg))
    assert json.loads(out)["ok"] is True
    cfg.write_text("{}")
    code, out, _ = call("--json", "sweep", str(cfg))
    assert code == 0 and json.loads(out) == {"ok": True, "sections": []}
    cfg.write_text('{"lens": {"p_maxx": 3}}')
    assert call("sweep", str(cfg))[0] == 2
