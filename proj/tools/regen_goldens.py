#!/usr/bin/env python3
"""Re-record the expected-output sidecars under data/.

Each sidecar <name>.expected.json lists CLI runs with their exit code and
exact output. "{data}" in an argument stands for the data directory. Review
the diff before committing: the acceptance test treats these as goldens.

usage: regen_goldens.py BUILD/tools/dimstruct
"""

import json
import pathlib
import subprocess
import sys

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

F = "{data}/fixtures/"
G = "{data}/gallery/"
I = "{data}/inputs/"

RUNS = {
    "fixtures/sync_example": [
        ["check", F + "sync_example.json"],
        ["sync", F + "sync_example.json", "--alpha", "2"],
        ["sync", F + "sync_example.json", "--alpha", "1"],
        ["classify", F + "sync_example.json"],
        *[["dim", F + "sync_example.json", "--point", p] for p in "xyzw"],
        *[["order", F + "sync_example.json", "--points", p] for p in ["x,y", "y,w", "x,z", "z,w", "y,z", "w,x"]],
        ["mu", F + "sync_example.json", "--point", "y", "--at", "b"],
        ["map-verify", "--kind", "iso", F + "sync_example.json", F + "sync_example.json", F + "swap.map.json"],
        ["map-verify", "--kind", "morphism", F + "sync_example.json", F + "sync_example.json", F + "reverse.map.json"],
        ["combine", "--op", "product", F + "sync_example.json", F + "csic_counterexample.json"],
    ],
    "fixtures/ax3_failure": [
        ["check", F + "ax3_failure.json"],
        ["check", "--quiet", F + "ax3_failure.json"],
        ["extend", F + "ax3_failure.json"],
        ["embed", F + "ax3_failure.json", F + "ax3_failure.extended.json", F + "embed_target.json"],
        ["dim", F + "ax3_failure.json", "--point", "x"],
    ],
    "fixtures/nonprincipal": [
        ["check", F + "nonprincipal.json"],
        ["classify", F + "nonprincipal.json"],
        ["dim", F + "nonprincipal.json", "--point", "x"],
    ],
    "fixtures/embed_target": [["check", F + "embed_target.json"]],
    "fixtures/normalization_counterexample": [
        ["check", F + "normalization_counterexample.json"],
        ["combine", "--op", "normalize", F + "normalization_counterexample.json"],
    ],
    "fixtures/csic_counterexample": [
        ["check", F + "csic_counterexample.json"],
        ["dim", F + "csic_counterexample.json", "--point", "x"],
        ["classify", F + "csic_counterexample.json"],
    ],
    "fixtures/extension_failure": [
        ["check", F + "extension_failure.json"],
        ["extend", F + "extension_failure.json"],
    ],
    "inputs/unreduced": [["format", I + "unreduced.json"]],
    "inputs/missing_row": [["check", I + "missing_row.json"]],
    "inputs/unknown_name": [["check", I + "unknown_name.json"]],
    "inputs/bad_value": [["check", I + "bad_value.json"]],
    "inputs/truncated": [["check", I + "truncated.json"]],
    "inputs/cyclic": [["check", I + "cyclic.json"]],
    "inputs/usage": [
        [],
        ["check"],
        ["frobnicate"],
        ["dim", F + "sync_example.json", "--point", "nobody"],
        ["sync", F + "embed_target.json"],
        ["combine", "--op", "product", F + "sync_example.json"],
        ["gallery", "ranked", G + "tower.json"],
    ],
    "suite/seed42": [
        ["suite", "--seed", "42", "--count", "1000"],
        ["suite", "--seed", "7", "--count", "50", "--shrink"],
    ],
    "gallery/ranked": [["gallery", "ranked", G + "ranked.json"]],
    "gallery/growth": [["gallery", "growth", G + "growth.json"]],
    "gallery/nlogn": [["gallery", "evenodd", G + "nlogn.json"]],
    "gallery/evenodd": [["gallery", "evenodd", G + "evenodd.json"]],
    "gallery/scale": [["gallery", "scale", G + "scale.json"]],
    "gallery/leb": [["gallery", "leb", G + "leb.json"]],
    "gallery/pleb": [["gallery", "pleb", G + "pleb.json"]],
    "gallery/tower": [["gallery", "tower", G + "tower.json"]],
    "gallery/iterate_halving": [["gallery", "iterate", G + "iterate_halving.json"]],
}


def record(binary, args):
    real = [a.replace("{data}", str(DATA)) for a in args]
    p = subprocess.run([binary, *real], capture_output=True, text=True)
    out = json.loads(p.stdout) if p.stdout.strip() else ""
    return {"args": args, "exit": p.returncode, "stdout": out,
            "stderr": p.stderr.replace(str(DATA), "{data}")}


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    for stem, runs in RUNS.items():
        doc = {"runs": [record(sys.argv[1], r) for r in runs]}
        path = DATA / (stem + ".expected.json")
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(path.relative_to(DATA), [r["exit"] for r in doc["runs"]])


if __name__ == "__main__":
    main()
