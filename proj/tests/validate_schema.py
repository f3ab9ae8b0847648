"""Validate the CLI's JSON output against the shipped schema.

usage: validate_schema.py NIVEN_BINARY SCHEMA_FILE
"""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["psi", "1"],
    ["psi", "15"],
    ["cyclotomic", "105"],
    ["iterate", "3", "--c", "1/4"],
    ["dynatomic", "3"],
    ["dynatomic", "2", "--c", "-3/7"],
    ["factor-iterate", "6"],
    ["factor", "--poly", "-12,0,6,0,0,0,-6"],
    ["factor", "--poly", "7"],
    ["classify", "1"],
    ["classify", "3", "--angles", "rpi"],
    ["membership", "--poly", "-1,-1,1"],
    ["membership", "--poly", "0,1"],
    ["membership", "--poly", "1,0,-4,0,1"],
    ["bound", "6"],
    ["verify", "3"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL  {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if doc.get("command") != args[0]:
            errors.append(f"command field is {doc.get('command')!r}")
        if errors:
            failures += 1
            print(f"FAIL  {label}")
            for e in errors:
                print(f"      {getattr(e, 'message', e)}")
        else:
            print(f"ok    {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
