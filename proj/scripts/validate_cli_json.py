#!/usr/bin/env python3
"""Validate the JSON output of every CLI command against the shipped schemas.

Usage: validate_cli_json.py <cli-binary> <schemas-dir>

Exits 0 when every sampled invocation validates, 1 on any validation or
invocation failure, and 77 (skip) when the jsonschema package is missing.
"""

import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not available; skipping schema validation")
    sys.exit(77)

INVOCATIONS = [
    ("limits", ["--limits"]),
    ("matrix", ["matrix", "--n", "3", "--b", "10", "--power", "2"]),
    ("matrix", ["matrix", "--n", "1", "--b", "2"]),
    ("foulkes", ["foulkes", "--n", "5", "--check", "all"]),
    ("foulkes", ["foulkes", "--n", "1"]),
    ("verify", ["verify", "--n", "3", "--b", "10", "--suite", "eigen"]),
    ("verify", ["verify", "--n", "4", "--suite", "all"]),
    (
        "simulate",
        ["simulate", "--mode", "carries", "--n", "3", "--b", "10",
         "--r", "1", "--samples", "500", "--seed", "1"],
    ),
    (
        "simulate",
        ["simulate", "--mode", "shuffles", "--n", "4", "--b", "2",
         "--r", "2", "--samples", "500", "--seed", "2"],
    ),
    ("tv", ["tv", "--n", "3", "--b", "10", "--kmax", "2"]),
]


def main() -> int:
    if len(sys.argv) != 3:
        print(__doc__)
        return 1
    cli, schema_dir = sys.argv[1], sys.argv[2]

    failures = 0
    for schema_name, args in INVOCATIONS:
        with open(f"{schema_dir}/{schema_name}.schema.json") as fh:
            schema = json.load(fh)
        proc = subprocess.run(
            [cli, *args], capture_output=True, text=True, check=False
        )
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit code {proc.returncode}")
            failures += 1
            continue
        try:
            document = json.loads(proc.stdout)
            jsonschema.validate(
                document,
                schema,
                cls=jsonschema.Draft202012Validator,
            )
        except Exception as exc:  # noqa: BLE001 - report any validation error
            print(f"FAIL {label}: {exc}")
            failures += 1
            continue
        print(f"ok   {label}")

    if failures:
        print(f"{failures} invocation(s) failed schema validation")
        return 1
    print("all sampled CLI outputs validate against the schemas")
    return 0


if __name__ == "__main__":
    sys.exit(main())
