"""Solve exported flow LPs with HiGHS and compare against the bundled simplex."""

import re
import subprocess
import sys
import tempfile
from pathlib import Path

import highspy


def highs_objective(mps: Path) -> float:
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.readModel(str(mps))
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        raise RuntimeError(f"{mps}: HiGHS status {h.modelStatusToString(h.getModelStatus())}")
    return h.getInfo().objective_function_value


def export(cli: str, instance: Path, mps: Path) -> tuple[int, float]:
    done = subprocess.run([cli, "export-lp", str(instance), "--solve", "-o", str(mps)],
                          capture_output=True, text=True, check=True)
    cols = int(re.search(r"columns (\d+)", done.stderr).group(1))
    obj = float(re.search(r"objective (\S+)", done.stderr).group(1))
    return cols, obj


def main() -> int:
    cli = sys.argv[1]
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        cases = [("example5", ["gen", "example5"])]
        for seed in range(1, 9):
            cases.append((f"decoupled-{seed}", ["--seed", str(seed), "gen", "decoupled", "--n", "5", "--m", "7",
                                                 "--max-length", "2"] + (["--directed"] if seed % 2 else [])))
        for name, args in cases:
            inst = tmp / f"{name}.json"
            subprocess.run([cli, *args, "-o", str(inst)], check=True)
            mps = tmp / f"{name}.mps"
            cols, ours = export(cli, inst, mps)
            theirs = highs_objective(mps)
            ok = abs(ours - theirs) <= 1e-6
            if name == "example5":
                ok = ok and cols == 54 and abs(theirs - 2.0) <= 1e-6
            print(f"{'ok' if ok else 'FAIL'} {name}: columns {cols}, bundled {ours:.9f}, HiGHS {theirs:.9f}")
            failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
