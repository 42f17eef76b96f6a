"""Validate the example jobs and their reports against the JSON schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
job_schema = json.loads((root / "schemas" / "job.schema.json").read_text())
report_schema = json.loads((root / "schemas" / "report.schema.json").read_text())

failures = 0
for path in sorted((root / "jobs").glob("*.json")):
    job = json.loads(path.read_text())
    jsonschema.validate(job, job_schema)
    outputs = []
    for workers in ("1", "3"):
        proc = subprocess.run([cli, "run", str(path), "--jobs", workers], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"{path.name}: exit {proc.returncode}: {proc.stderr}")
            failures += 1
            break
        outputs.append(proc.stdout)
    else:
        report = json.loads(outputs[0])
        jsonschema.validate(report, report_schema)
        if outputs[0] != outputs[1]:
            print(f"{path.name}: output depends on worker count")
            failures += 1
        s = report["summary"]
        if s["total"] != len(report["reports"]) or s["total"] != s["pass"] + s["fail"] + s["skip"] + s["invalid"]:
            print(f"{path.name}: summary does not add up")
            failures += 1
        print(f"{path.name}: ok ({s['total']} reports)")

sys.exit(1 if failures else 0)
