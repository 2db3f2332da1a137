"""Runs the greenbox CLI, validates JSON output against the shipped schemas,
checks exit codes and byte-identical reruns."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

greenbox, schema_dir = sys.argv[1], Path(sys.argv[2])
failures = []


def run(args):
    return subprocess.run([greenbox, *args], capture_output=True, text=True, timeout=300)


def schema(name):
    return json.loads((schema_dir / f"{name}.schema.json").read_text())


json_cases = [
    ("enumerate", ["enumerate", "--family", "tl", "--n", "4", "--format", "json"]),
    ("enumerate", ["enumerate", "--family", "p", "--n", "3", "--count", "--format", "json"]),
    ("eggbox", ["cells", "--family", "br", "--n", "4", "--format", "json"]),
    ("eggbox", ["eggbox", "--family", "t", "--n", "3", "--delta", "0", "--format", "json"]),
    ("eggbox", ["dihedral", "cells", "--n", "4", "--format", "json"]),
    ("gram", ["gram", "--family", "tl", "--n", "5", "--lambda", "3", "--format", "json"]),
    ("gram", ["gram", "--family", "pt", "--n", "3", "--lambda", "2", "--delta", "3/2", "--format", "json"]),
    ("simples", ["simples", "--family", "t", "--n", "4", "--format", "json"]),
    ("simples", ["simples", "--family", "tl", "--n", "6", "--delta", "0", "--format", "json"]),
    ("simples", ["simples", "--family", "br", "--n", "4", "--p", "2", "--format", "json"]),
    ("counts", ["counts", "--family", "robr", "--n", "4", "--format", "json"]),
    ("rsk", ["rsk", "2,3,1", "--format", "json"]),
    ("check", ["check", "--suite", "rsk", "--suite", "characters", "--format", "json"]),
    ("dihedral_mult", ["dihedral", "mult", "--n", "6", "1212", "21212", "--format", "json"]),
    ("dihedral_mult", ["dihedral", "mult", "1212", "121212", "--format", "json"]),
    ("dihedral_simples", ["dihedral", "simples", "--n", "5", "--v", "1"]),
    ("dihedral_ranks", ["dihedral", "ranks", "--n", "7", "--format", "json"]),
]

for name, args in json_cases:
    first, second = run(args), run(args)
    label = " ".join(args)
    if first.returncode != 0:
        failures.append(f"{label}: exit {first.returncode}: {first.stderr.strip()}")
        continue
    if first.stdout != second.stdout:
        failures.append(f"{label}: output differs between runs")
    try:
        jsonschema.validate(json.loads(first.stdout), schema(name))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{label}: {e}")

dot = run(["eggbox", "--family", "mo", "--n", "3", "--format", "dot"])
if dot.returncode != 0 or not dot.stdout.startswith("digraph") or dot.stdout.count("{") != dot.stdout.count("}"):
    failures.append("eggbox dot output malformed")

text_cases = [
    (["gram", "--family", "tl", "--n", "5", "--lambda", "3", "--delta", "generic"], "(d^2+d-1)*(d^2-d-1)"),
    (["gram", "--family", "tl", "--n", "5", "--lambda", "3", "--delta", "generic"], "rank at delta=generic: 4"),
    (["simples", "--family", "t", "--n", "5"], "counts: 7,5,3,2,1"),
    (["rsk", "231"], "P=[[1,3],[2]] Q=[[1,2],[3]]"),
    (["dihedral", "mult", "--n", "6", "1212", "21212"], "[2]b12 + ([2]_3+2[2])b121212"),
]
for args, needle in text_cases:
    r = run(args)
    if r.returncode != 0 or needle not in r.stdout:
        failures.append(f"{' '.join(args)}: expected '{needle}'")

exit_cases = [
    (["gram", "--family", "nope", "--n", "3", "--lambda", "1"], 2),
    (["gram", "--family", "tl", "--n", "3", "--lambda", "1", "--delta", "1/x"], 2),
    (["enumerate", "--family", "p", "--n", "40"], 2),
    (["simples", "--family", "tl", "--n", "4", "--format", "dot"], 2),
    (["dihedral", "ranks", "--n", "6"], 2),
    (["rsk", "2,2,1"], 2),
    (["frobnicate"], 2),
    (["--help"], 0),
]
for args, code in exit_cases:
    r = run(args)
    if r.returncode != code:
        failures.append(f"{' '.join(args)}: exit {r.returncode}, expected {code}")

for f in failures:
    print("FAIL", f)
print(f"{len(json_cases) + len(text_cases) + len(exit_cases) + 1 - len(failures)} cli checks passed, {len(failures)} failed")
sys.exit(1 if failures else 0)
