#!/usr/bin/env python3
"""Rewrite the expected outputs in tests/golden from the current rlw binary."""
import os
import pathlib
import subprocess
import sys

root = pathlib.Path(__file__).resolve().parent.parent
rlw = sys.argv[1] if len(sys.argv) > 1 else str(root / "build" / "rlw")
golden = root / "tests" / "golden"
env = {k: v for k, v in os.environ.items() if k != "RLW_FUEL"}

for line in (golden / "cases.tsv").read_text().splitlines():
    if not line or line.startswith("#"):
        continue
    name, *args = line.split("\t")
    r = subprocess.run([rlw, *args], capture_output=True, text=True, env=env)
    err = f"[stderr]\n{r.stderr}" if r.stderr else ""
    (golden / f"{name}.out").write_text(f"{r.stdout}{err}[exit {r.returncode}]\n")
