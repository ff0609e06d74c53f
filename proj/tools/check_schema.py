"""Run the stab binary over a fixed set of invocations and validate every record against docs/schema.json."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

INVOCATIONS = [
    (["stable", "exp(x^2)"], 0),
    (["stable", "x^3*exp(2*x)"], 0),
    (["stable", "--depth", "4", "log(x)/x"], 0),
    (["stable", "--derivation", "euler", "x + 1/x"], 0),
    (["stable", "--derivation", "euler", "1+x"], 0),
    (["stable", "--field", "rational", "1/x^2"], 0),
    (["stable", "log(log(x))"], 1),
    (["stable", "log(x)*exp(x)"], 1),
    (["stable", "x +"], 2),
    (["witness", "-k", "3", "exp(2*x)"], 0),
    (["witness", "exp(x^2)"], 0),
    (["moments", "-N", "5", "1/x^2"], 0),
    (["moments", "-N", "5", "x^3+2"], 0),
    (["integrable", "1/x^2"], 0),
    (["integrable", "--derivation", "euler", "1"], 0),
    (["lh", "1/x"], 0),
    (["lh", "1/(x-1)"], 0),
    (["dred", "2*x/(x^2+1)"], 0),
    (["risch", "1", "2*x", "1", "--m", "0"], 0),
    (["risch", "x", "2*x", "1"], 0),
    (["skolem", "--max", "12", "exp(x^2)"], 0),
    (["ore", "mul", "D", "x"], 0),
    (["ore", "divmod", "D^2", "D-1"], 0),
    (["ore", "lclm", "D-1", "D-2"], 0),
    (["ore", "apply", "S-1", "0,1,4,9", "--kind", "shift"], 0),
    (["ore", "normalize", "(n+1)*S - n - 1", "--kind", "shift"], 0),
    (["dfinite", "guess", "exp", "-T", "40"], 0),
    (["dfinite", "certify", "geom"], 0),
    (["dfinite", "certify", "exp", "--max-m", "0"], 1),
    (["dfinite", "convert", "d2s", "D-1"], 0),
    (["dfinite", "convert", "s2d", "(n+1)*S-1", "exp"], 0),
    (["dynsys", "godelle", "-N", "3", "-M", "2"], 0),
    (["dynsys", "godelle", "-N", "0", "-M", "2"], 2),
    (["bogus"], 2),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0

    def check(args, expected_exit, parse_lines=False):
        nonlocal failures
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        if expected_exit is not None and proc.returncode != expected_exit:
            print(f"FAIL exit {proc.returncode} != {expected_exit}: {args}")
            failures += 1
        records = [json.loads(line) for line in proc.stdout.splitlines() if line] if parse_lines else [json.loads(proc.stdout)]
        for record in records:
            errors = sorted(validator.iter_errors(record), key=lambda e: e.path)
            for err in errors:
                print(f"FAIL schema {args}: {err.message}")
                failures += 1
        return records

    for args, code in INVOCATIONS:
        check(args, code)

    with tempfile.TemporaryDirectory() as tmp:
        system = Path(tmp, "sys.json")
        system.write_text(json.dumps({"elements": ["a", "b", "c"], "map": {"a": "b", "b": "a", "c": "a"}}))
        check(["dynsys", "analyze", str(system)], 0)
        check(["dynsys", "check", str(system)], 0)
        lines = Path(tmp, "batch.txt")
        lines.write_text("x^2\nx +\nlog(log(x))\nexp(x^2)\n")
        records = check(["batch", str(lines)], 0, parse_lines=True)
        if [r.get("line") for r in records] != [1, 2, 3, 4]:
            print("FAIL batch line numbering")
            failures += 1

    print("schema check:", "FAIL" if failures else "PASS")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
