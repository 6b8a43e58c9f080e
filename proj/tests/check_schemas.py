#!/usr/bin/env python3
"""Validate CLI JSON outputs against the published schemas."""

import json
import subprocess
import sys
import tempfile

import jsonschema


def main():
    cli, srcdir = sys.argv[1], sys.argv[2]

    report_schema = json.load(open(srcdir + "/docs/report.schema.json"))
    profile_schema = json.load(open(srcdir + "/docs/profile.schema.json"))

    out = subprocess.run(
        [cli, "verdict", "--r", "1.5", "--c1", "1", "--c2", "1", "--depth", "10"],
        capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    jsonschema.validate(json.loads(out.stdout), report_schema)

    profiles = [
        {"kind": "power", "r": 2.0, "c1": 1.0, "c2": 1.0},
        {"kind": "constant", "length": 0.7},
        {"kind": "table", "lengths": {"0:1": 0.5, "1:1": 0.4, "1:2": 0.4,
                                      "1:3": 0.4, "1:4": 0.4}},
    ]
    for prof in profiles:
        jsonschema.validate(prof, profile_schema)
        with tempfile.NamedTemporaryFile("w", suffix=".json") as f:
            json.dump(prof, f)
            f.flush()
            run = subprocess.run([cli, "dirichlet", "--profile", f.name,
                                  "--depth", "1"],
                                 capture_output=True, text=True)
            assert run.returncode == 0, run.stderr
            jsonschema.validate(json.loads(run.stdout), report_schema)

    print("schema validation passed")


if __name__ == "__main__":
    main()
