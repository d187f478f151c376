#!/usr/bin/env python3
"""Validate JSON reports against docs/report.schema.json and compare them with text output.

usage: check_schema.py <tracecodes> <schema>
"""

import json
import re
import subprocess
import sys

import jsonschema

RUNS = [
    (0, ["field", "--p", "7", "--m", "3"]),
    (0, ["field", "--p", "2", "--m", "23"]),
    (0, ["periods", "--p", "2", "--m", "6", "--N", "7"]),
    (0, ["periods", "--p", "3", "--m", "3", "--N", "2", "--method", "closed"]),
    (0, ["periods", "--p", "5", "--m", "4", "--N", "4"]),
    (0, ["code", "--variant", "c1", "--p", "5", "--m", "2", "--N", "2"]),
    (0, ["code", "--variant", "c1", "--p", "2", "--s", "2", "--m", "3", "--N", "9", "--method", "oracle"]),
    (0, ["code", "--variant", "c2", "--p", "3", "--m", "2", "--N", "2", "--method", "table"]),
    (0, ["code", "--variant", "c2", "--p", "5", "--m", "2", "--N", "4"]),
    (0, ["code", "--variant", "c1", "--p", "5", "--m", "4", "--N", "4"]),
    (0, ["verify", "--max-r", "81"]),
    (2, ["code", "--variant", "c1", "--p", "6", "--m", "2", "--N", "5"]),
    (3, ["code", "--variant", "c1", "--p", "5", "--m", "2", "--N", "2", "--method", "oracle", "--max-pairs", "10"]),
]


def run(exe, args):
    proc = subprocess.run([exe, *args], capture_output=True, text=True, check=False,
                          env={"TRACECODES_MAX_PAIRS": ""})
    return proc.returncode, proc.stdout


def text_value(text, key):
    m = re.search(rf"^{re.escape(key)}: (\S+)", text, re.MULTILINE)
    return m.group(1) if m else None


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = []
    for expected, args in RUNS:
        name = " ".join(args)
        rc, out = run(exe, [*args, "--output", "json"])
        if rc != expected:
            failures.append(f"{name}: exit {rc}, expected {expected}")
            continue
        report = json.loads(out)
        for err in validator.iter_errors(report):
            failures.append(f"{name}: {err.json_path}: {err.message}")
        if json.loads(json.dumps(report)) != report:
            failures.append(f"{name}: JSON does not round-trip")
        if args[0] == "verify" and (rc == 0) != (not report["mismatches"]):
            failures.append(f"{name}: exit code disagrees with the mismatch list")

        if rc != 0:
            continue
        _, text = run(exe, args)
        if args[0] == "code":
            pairs = [("enumerator", report["enumerator"]), ("dimension", str(report["code"]["dimension"]))]
            if "parity_check" in report:
                pairs.append(("parity check", report["parity_check"]))
        elif args[0] == "field":
            pairs = [("modulus", report["field"]["modulus_text"])]
        else:
            pairs = []
        for key, value in pairs:
            if text_value(text, key) != value:
                failures.append(f"{name}: text {key} {text_value(text, key)!r} != JSON {value!r}")
        if args[0] == "code":
            for row in report["weight_distribution"]:
                if row["weight"] > 0 and f"{row['codeword_count']}x^{row['weight']}" not in text:
                    failures.append(f"{name}: weight {row['weight']} missing from the text report")

    for f in failures:
        print("FAIL", f)
    print(f"{len(RUNS)} reports checked, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
