import json
import subprocess
import sys

import pytest

from grouplat.cli import run


def test_construct_json():
    out, code = run(["construct", "proj:2,7,PGL", "--emit", "json"])
    rec = json.loads(out)
    assert code == 0 and rec["degree"] == 8 and rec["order"] == 336


def test_construct_text_and_errors():
    out, code = run(["construct", "agl:3,2"])
    assert code == 0 and "order 1344" in out
    assert run(["construct", "nonsense:3"])[1] == 2
    assert run(["construct", "sym:4", "--emit", "dot"])[1] == 2
    assert run(["construct"])[1] == 2


def test_interval_dot_is_m2():
    out, code = run(["interval", "--ambient", "alt:8", "--sub", "eqpart-even:8,2", "--emit", "dot"])
    assert code == 0
    assert out.startswith("digraph {") and out.count('[label="order=1344"]') == 2
    assert out.count("->") == 4


def test_interval_json_shape():
    out, code = run(["interval", "--ambient", "sym:4", "--sub", "gens:4:(0 1)(2 3);(0 2)(1 3)", "--emit", "json"])
    rec = json.loads(out)
    assert code == 0 and rec["shape"] == {"tag": "Mr", "r": 4} and len(rec["nodes"]) == 6


def test_interval_rejects_non_subgroups():
    assert run(["interval", "--ambient", "alt:5", "--sub", "sym:5"])[1] == 2


@pytest.mark.parametrize("args", [
    ["interval", "--ambient", "alt:8", "--sub", "eqpart-even:8,2", "--emit", "dot"],
    ["interval", "--ambient", "sym:5", "--sub", "young:5,2+3", "--emit", "json"],
    ["goursat", "--left", "sym:3", "--right", "sym:3", "--op", "maximals", "--emit", "json"],
    ["construct", "wr:sym:3/sym:2/product", "--emit", "json"],
])
def test_output_is_byte_identical(args):
    first = run(args)
    assert run(args) == first
    proc = subprocess.run([sys.executable, "-m", "grouplat.cli"] + args, capture_output=True, text=True)
    assert proc.returncode == first[1] and proc.stdout == first[0]


def test_marks():
    out, code = run(["hm", "--ambient", "sym:4", "--k", "gens:4:(0 1)", "--l", "young:4,3+1", "--emit", "json"])
    rec = json.loads(out)
    assert code == 0 and rec["hm_K_L"] == 3 and rec["hm_L_K"] == 2 and rec["identity_holds"]
    assert run(["hm", "--ambient", "alt:4", "--k", "sym:4", "--l", "alt:4"])[1] == 2


def test_parity():
    out, code = run(["parity", "--law", "powerset", "--params", "5,2,1"])
    assert code == 0 and "odd" in out
    out, code = run(["parity", "--law", "diagonal", "--params", "3,3,1", "--witness", "--emit", "json"])
    rec = json.loads(out)
    assert code == 0 and rec["predicted"] == rec["witness"] == 1 and rec["agree"]
    out, code = run(["parity", "--law", "frobenius", "--params", "2,2", "--witness"])
    assert code == 0 and "agrees" in out
    assert run(["parity", "--law", "powerset", "--params", "4,4,1"])[1] == 2
    assert run(["parity", "--law", "nope", "--params", "1"])[1] == 2


def test_goursat_operations():
    rec = json.loads(run(["goursat", "--left", "sym:3", "--right", "sym:3", "--op", "maximals", "--emit", "json"])[0])
    assert rec["count"] == 9
    full, inner = "full", "gens:6:(0 1 2);(3 4 5)(0 1)"
    out, code = run(["goursat", "--left", "sym:3", "--right", "sym:3", "--op", "classify",
                     "--inner", "gens:6:(0 1 2);(0 1)(3 4)", "--outer", full, "--emit", "json"])
    rec = json.loads(out)
    assert code == 0 and rec["maximal"] is False
    out, code = run(["goursat", "--left", "sym:3", "--right", "sym:3", "--op", "shortcut",
                     "--inner", "gens:6:(3 4 5);(3 4)", "--outer", full, "--emit", "json"])
    rec = json.loads(out)
    assert code == 0 and rec["shortcut_tags"] == ["2L-2L"] and not rec["is_novelty"]
    assert run(["goursat", "--left", "sym:3", "--right", "sym:3", "--op", "classify"])[1] == 2
    assert run(["goursat", "--left", "sym:3", "--right", "sym:3", "--op", "classify",
                "--inner", full, "--outer", inner])[1] == 2


def test_verify_selection_and_unknown_suite():
    out, code = run(["verify", "thesis-core", "--only", "marks-s4,order-hol-c5", "--emit", "json"])
    rec = json.loads(out)
    assert code == 0 and [c["status"] for c in rec["checks"]] == ["pass", "pass"]
    assert run(["verify", "no-such-suite"])[1] == 2


def test_order_budget_marks_checks_skipped():
    out, code = run(["verify", "thesis-core", "--only", "cycle-overgroups-11,order-hol-c5",
                     "--order-budget", "1000", "--emit", "json"])
    rec = json.loads(out)
    status = {c["id"]: c for c in rec["checks"]}
    assert code == 0
    assert status["cycle-overgroups-11"]["status"] == "skipped" and status["cycle-overgroups-11"]["reason"]
    assert status["order-hol-c5"]["status"] == "pass"


def test_element_budget_refusal_is_an_input_error():
    out, code = run(["interval", "--ambient", "sym:9", "--sub", "cyc:9", "--element-budget", "10"])
    assert code == 2 and "budget" in out


@pytest.mark.slow
def test_thesis_core_suite():
    out, code = run(["verify", "thesis-core", "--emit", "json"])
    rec = json.loads(out)
    passed = sum(1 for c in rec["checks"] if c["status"] == "pass")
    assert code == 0 and passed >= 25
    assert all(c["status"] != "fail" for c in rec["checks"])
    skipped = [c for c in rec["checks"] if c["status"] == "skipped"]
    assert all(c["reason"] for c in skipped)


@pytest.mark.parametrize("suite", ["parity", "appendix-a", "feit-palffy"])
def test_named_suites(suite):
    out, code = run(["verify", suite])
    assert code == 0 and f"{suite}:" in out and "0 failed" in out
