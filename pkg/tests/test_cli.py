import json
import subprocess
import sys
from pathlib import Path

import pytest

from ordlab.cli import main, parse_order
from ordlab.groups import lex_orders_equal
from ordlab.orders import LatticeOrder, orders_equal

EXAMPLES = Path(__file__).resolve().parents[1] / "cli_examples"
sys.path.insert(0, str(EXAMPLES))
from regenerate import run  # noqa: E402

CASES = json.loads((EXAMPLES / "cases.json").read_text())


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_checked_in_examples(case):
    code, out, err = run(case["argv"])
    assert code == case["exit"]
    expected = (EXAMPLES / "expected" / f"{case['name']}.json").read_text()
    assert (out or err) == expected
    if code in (2, 3):
        assert out == "" and json.loads(err)["error"] in ("schema", "domain")


def _orders_in(doc):
    if isinstance(doc, dict):
        if "vectors" in doc and "rank" in doc or "factors" in doc:
            yield doc
        else:
            for v in doc.values():
                yield from _orders_in(v)
    elif isinstance(doc, list):
        for v in doc:
            yield from _orders_in(v)


@pytest.mark.parametrize("case", [c for c in CASES if c["exit"] == 0], ids=lambda c: c["name"])
def test_outputs_revalidate(case):
    text = (EXAMPLES / "expected" / f"{case['name']}.json").read_text()
    doc = json.loads(text)
    assert json.dumps(doc, sort_keys=True, indent=2) + "\n" == text
    for sub in _orders_in(doc):
        O = parse_order(sub)
        again = parse_order(json.loads(json.dumps(sub)))
        same = orders_equal if isinstance(O, LatticeOrder) else lex_orders_equal
        assert same(O, again)


def test_certificate_contents():
    doc = json.loads((EXAMPLES / "expected" / "probe_discrete_z2.json").read_text())
    assert sorted(map(tuple, doc["witnesses"])) == [(-2, 3), (2, -1)]
    doc = json.loads((EXAMPLES / "expected" / "probe_condense_fifth.json").read_text())
    assert doc["samples"][0]["shift"] == [-5, 4]
    doc = json.loads((EXAMPLES / "expected" / "orbit_y_powers.json").read_text())
    assert doc["count"] == 11 == len(doc["orders"])


def test_deterministic(tmp_path):
    argv = ["probe", "condense", "--count", "2"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["--out", str(a)] + argv) == 0
    assert main(["--out", str(b)] + argv) == 0
    assert a.read_bytes() == b.read_bytes()


def test_inline_json(capsys):
    assert main(["classify", '{"rank": 2, "vectors": [[1, 1], [1, 0]]}', "[1, -1]"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["verdict"], doc["level"]) == ("positive", 1)


@pytest.mark.parametrize("argv", [
    ["classify", "{bad", "[1]"],
    ["classify", '{"rank": 2, "vectors": [[1, 1], [1, 0]]}', "[1, 2, 3]"],
    ["classify", '{"schema": "ordlab/9", "rank": 1, "vectors": [[1]]}', "[1]"],
    ["act", '{"rank": 2, "vectors": [[1, 1], [1, 0]]}', "[[1, 2], [3]]"],
    ["nonsense"],
    ["classify", "/nonexistent/file.json", "[1]"],
])
def test_schema_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "schema"


def test_domain_errors_exit_3(capsys):
    assert main(["act", '{"rank": 2, "vectors": [[1, 1], [1, 0]]}', "[[2, 0], [0, 1]]"]) == 3
    assert main(["classify", '{"rank": 2, "vectors": [[1, 1]]}', "[1, 0]"]) == 3
    assert main(["classify", '{"rank": 2, "vectors": [[1, 1], [2, 2]]}', "[1, 0]"]) == 3
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ordlab", "group", "mul",
                           '{"group": "N", "m": [1, 0], "k": [0, 0, 0]}',
                           '{"group": "N", "m": [0, 1], "k": [0, 0, 0]}'],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["product"]["m"] == [1, 1]
