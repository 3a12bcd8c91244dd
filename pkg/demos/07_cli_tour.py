"""The command-line interface, driven end to end.

Every library capability is exposed as a ``posetprod`` subcommand emitting
one JSON report on stdout.  Posets come from the built-in fixture registry
or from JSON files; exit codes are 0 (ok), 1 (a verification the command
performs came out false) and 2 (bad input).

Run with ``python3 demos/07_cli_tour.py``.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CMD = [sys.executable, "-m", "posetprod.cli"]


def run(*args, expect=0):
    print("$ posetprod", " ".join(args))
    proc = subprocess.run(CMD + list(args), capture_output=True, text=True)
    if proc.returncode != expect:
        print(proc.stderr, file=sys.stderr)
        raise SystemExit(f"expected exit {expect}, got {proc.returncode}")
    out = json.loads(proc.stdout) if proc.stdout.strip() else {}
    print(json.dumps(out.get("results", out), indent=2)[:600])
    print(f"(exit {proc.returncode})\n")
    return out


# Classification, with assertions that flip the exit code when unmet.
run("check", "fix-c", "--expect", "polyhedral", "--expect", "regular")

# Reduction returns the reduced poset and the projection on objects.
run("reduce", "fix-a")

# Face counts and the simplicial transform (prediction included when the
# input is regular).
run("fvector", "cube-3")
run("stransform", "fix-c")

# Hilbert function of the limit ring, by presentation (with the built-in
# quotient-vs-limit comparison), directly from the limit, or from the
# f-vector formula.
run("hilbert", "fix-c", "--max-degree", "4", "--method", "presentation")
run("hilbert", "simplex-2", "--max-degree", "4", "--method", "fvector")

# Higher limits of an indicator diagram on an up-set.
run("limits", "fix-a", "--upset", "3", "--upset", "4")

# Tensor diagram limits for a named collection, with the reduction
# invariance check.
run("tensor", "fix-c", "--collection", "circle", "--max-degree", "3", "--check-reduction")

# Polyhedral-product homology with the algebraic comparison.
run("homology", "fix-e", "--pair", "disk2-circle", "--max-dim", "3")

# The one-shot consistency suite.
run("suite", "fix-c")

# Files work anywhere a fixture name does; reports then carry the file's
# digest.  This poset makes the hilbert presentation check fail honestly
# (two minimal upper bounds of mixed degrees), hence exit code 1.
two_branch = {
    "objects": ["*", "v1", "v2", "v3", "e", "t"],
    "base": "*",
    "covers": [
        ["*", "v1"], ["*", "v2"], ["*", "v3"],
        ["v1", "e"], ["v2", "e"],
        ["v1", "t"], ["v2", "t"], ["v3", "t"],
    ],
}
with tempfile.TemporaryDirectory() as td:
    path = Path(td) / "two_branch.json"
    path.write_text(json.dumps(two_branch))
    run("check", str(path), "--expect", "polyhedral")
    run("hilbert", str(path), "--max-degree", "4", "--method", "presentation", expect=1)

print("done")
