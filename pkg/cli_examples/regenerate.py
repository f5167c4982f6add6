"""Rewrite expected/ from cases.json.  Review the diff before committing."""

import contextlib
import io
import json
import os
from pathlib import Path

from ordlab.cli import main

HERE = Path(__file__).resolve().parent


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(HERE)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
    finally:
        os.chdir(cwd)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    (HERE / "expected").mkdir(exist_ok=True)
    for case in json.loads((HERE / "cases.json").read_text()):
        code, out, err = run(case["argv"])
        assert code == case["exit"], (case["name"], code, err)
        (HERE / "expected" / f"{case['name']}.json").write_text(out or err)
