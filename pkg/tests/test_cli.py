import json
import re
import subprocess
import sys

import pytest

from singclass.cli import LABELS, EQUALS_KEYS, run, text_value

COMMANDS = [
    ["triple", "2", "3", "5"],
    ["triple", "2", "3", "7", "--mmax", "6"],
    ["triple", "--sweep", "8"],
    ["ci", "--weights", "21,14,6", "--degrees", "42"],
    ["ci", "--weights", "1,1,1,1", "--degrees", "3"],
    ["veronese", "2", "3", "7", "--d", "2"],
    ["hypersurface", "3,3,3,3"],
    ["cone", "3", "2", "--form", "1,0,0,1"],
    ["schwartz", "tetrahedral"],
    ["schwartz", "octahedral"],
    ["trivial", "--exponents", "2,3,6", "--f", "s^2+1"],
    ["cyclic", "7", "3"],
    ["lnd", "verify", "X -> 0; Y -> X"],
    ["lnd", "flow", "X -> 0; Y -> X", "--start", "X=1,Y=0", "--relation", "X - 1"],
    ["lnd", "suspend", "x1^2", "--start", "u=1,v=1,x1=1"],
]


def test_triple_text():
    res = run(["triple", "2", "3", "5"])
    assert res.exit_code == 0
    assert "Platonic type: icosahedral" in res.stdout
    assert "rational: yes" in res.stdout
    assert "N = -1" in res.stdout


def test_schwartz_exit_codes():
    assert run(["schwartz", "icosahedral"]).exit_code == 0
    assert "holds: yes" in run(["schwartz", "icosahedral"]).stdout
    literal = run(["schwartz", "octahedral", "--json"])
    variant = run(["schwartz", "octahedral-variant", "--json"])
    assert literal.exit_code == 1
    assert variant.exit_code == 0
    assert json.loads(literal.stdout)["identities"][0]["holds"] is False
    assert json.loads(variant.stdout)["identities"][0]["holds"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        [],
        ["triple", "2", "x", "5"],
        ["triple", "1", "3", "5"],
        ["ci", "--weights", "1,a"],
        ["cyclic", "6", "4"],
        ["schwartz", "cubic"],
        ["trivial", "--exponents", "2,3,5", "--f", "s", "--constants", "1,1,1"],
        ["lnd", "verify", "x -> $"],
        ["triple", "2", "3", "5", "--mmax", "0"],
    ],
)
def test_usage_errors(argv):
    res = run(argv)
    assert res.exit_code == 2
    assert res.error


def test_json_schema_and_strings():
    doc = json.loads(run(["schwartz", "icosahedral", "--json"]).stdout)
    assert doc["schema"] == "singclass/1"
    ident = doc["identities"][0]
    assert ident["components"][2][0] == "-1728"
    assert ident["exponents"] == ["2", "3", "5"]
    doc = json.loads(run(["triple", "2", "3", "5", "--json"]).stdout)
    assert doc["N"] == "-1" and doc["log_kodaira"] == "-inf"


def _expected_lines(doc, indent=""):
    lines = []
    for key, value in doc.items():
        if key in ("schema", "command"):
            continue
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(f"{indent}  -")
                lines += _expected_lines(item, indent + "    ")
            continue
        label = LABELS.get(key, key)
        if key in EQUALS_KEYS:
            lines.append(f"{indent}{label} = {text_value(value)}")
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{indent}{label}:")
            lines += [f"{indent}  {row}" for row in value.splitlines()]
        else:
            lines.append(f"{indent}{label}: {text_value(value)}")
    return lines


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_text_and_json_agree(argv):
    text = run(argv)
    js = run(argv + ["--json"])
    assert text.exit_code == js.exit_code
    doc = json.loads(js.stdout)
    assert text.stdout.splitlines() == _expected_lines(doc)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_json_idempotent(argv):
    assert run(argv + ["--json"]).stdout == run(argv + ["--json"]).stdout


def _no_raw_ints(node):
    if isinstance(node, dict):
        return all(_no_raw_ints(v) for v in node.values())
    if isinstance(node, list):
        return all(_no_raw_ints(v) for v in node)
    return not isinstance(node, (int, float)) or isinstance(node, bool)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_json_has_no_numbers(argv):
    assert _no_raw_ints(json.loads(run(argv + ["--json"]).stdout))


def test_lnd_outputs():
    res = run(["lnd", "verify", "X -> 0; Y -> Y", "--json"])
    assert res.exit_code == 1
    assert json.loads(res.stdout)["status"] == "not-nilpotent"
    res = run(["lnd", "suspend", "x1^2", "--start", "u=1,v=1,x1=1", "--json"])
    doc = json.loads(res.stdout)
    assert res.exit_code == 0
    assert doc["relation_annihilated"] and doc["on_variety"] and doc["avoids"]
    # orbit through a fixed point that equals the avoided point
    res = run(["lnd", "suspend", "x1^2", "--start", "u=0,v=0,x1=0"])
    assert res.exit_code == 1


def test_lnd_from_file(tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("X -> 0\nY -> X^2\n")
    res = run(["lnd", "flow", f"@{path}", "--json"])
    assert json.loads(res.stdout)["flow"] == "X -> X\nY -> X^2*t + Y"


def test_cyclic_payload():
    doc = json.loads(run(["cyclic", "3", "2", "--json"]).stdout)
    assert doc["hj_string"] == ["2", "2"]
    assert doc["generators"] == [["3", "0"], ["1", "1"], ["0", "3"]]
    assert doc["derivation"] == "u -> 0\nw -> u\nv -> 3*w^2"


def test_veronese_payload():
    doc = json.loads(run(["veronese", "2", "3", "7", "--d", "2", "--json"]).stdout)
    assert doc["is_rational"] is True
    assert doc["is_quotient"] is False
    assert doc["log_kodaira"] == "1"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "singclass", "triple", "2", "3", "7"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert re.search(r"^N = 1$", proc.stdout, re.M)
    proc = subprocess.run([sys.executable, "-m", "singclass", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == "" and "error" in proc.stderr
