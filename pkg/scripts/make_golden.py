"""Regenerate tests/golden/*.out from tests/golden/invocations.txt.

Run after an intentional output change, then review the diff.
"""
import contextlib
import io
import pathlib
import shlex

from lorentz_optics.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden"

for line in (GOLDEN / "invocations.txt").read_text().splitlines():
    name, *argv = shlex.split(line)
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    assert code == 0, (name, code)
    (GOLDEN / f"{name}.out").write_text(buf.getvalue())
    print(f"wrote {name}.out")
