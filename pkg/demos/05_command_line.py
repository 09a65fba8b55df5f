# %% [markdown]
# # The command line
#
# The same operations are available as `ndautonomy <command>`; here the
# commands are run through `python -m ndautonomy`.

# %%
import subprocess
import sys
import tempfile
from pathlib import Path

tmp = Path(tempfile.mkdtemp())
(tmp / "point.txt").write_text("2 1 2\ns1 - 1\ns2 - 1\n")
(tmp / "plant.txt").write_text("2 1 1\ns1 - 1\n")
(tmp / "ctrl.txt").write_text("2 1 1\ns2 - 1\n")


def cli(*args):
    res = subprocess.run([sys.executable, "-m", "ndautonomy", *map(str, args)], capture_output=True, text=True)
    print(f"$ ndautonomy {' '.join(map(str, args))}   (exit {res.returncode})")
    print(res.stdout or res.stderr)


# %%
cli("analyze", "--input", tmp / "point.txt", "--format", "text")
cli("strength", "--plant", tmp / "plant.txt", "--controller", tmp / "ctrl.txt", "--format", "text")
cli("restrict", "--input", tmp / "point.txt", "--keep", "2", "--format", "text")
cli("oracle", "--input", tmp / "point.txt")
cli("sample", "--n", 2, "--k", 1, "--rows", 2, "--degree", 1, "--trials", 5, "--seed", 42, "--coeff-range=-3..3")

# %% [markdown]
# Errors map to exit codes: 1 for malformed input, 2 for unsupported
# requests, 3 when the Groebner step budget runs out.

# %%
(tmp / "bad.txt").write_text("2 1 1\ns1 +\n")
cli("analyze", "--input", tmp / "bad.txt")
cli("oracle", "--input", tmp / "bad.txt")
