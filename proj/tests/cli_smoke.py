#!/usr/bin/env python3
"""End-to-end checks of the rpl command line: exit codes, formats, determinism."""

import json
import os
import subprocess
import sys

CLI = sys.argv[1] if len(sys.argv) > 1 else "./build/tools/rpl"
failures = []


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def check(label, cond):
    if not cond:
        failures.append(label)
        print(f"FAIL {label}")
    else:
        print(f"ok   {label}")


# --- exit codes -------------------------------------------------------------
check("no subcommand exits 2", run().returncode == 2)
check("unknown check exits 2", run("verify", "does-not-exist").returncode == 2)
check("verify with no names exits 2", run("verify").returncode == 2)
check("orbits with bad n exits 2", run("orbits", "--n", "7").returncode == 2)
check("orbits with bad operator exits 2",
      run("orbits", "--n", "9", "--operator", "spin").returncode == 2)
check("stats c5core bad n exits 2",
      run("stats", "--n", "8", "--stats", "c5core").returncode == 2)
check("classify bad statistic exits 2",
      run("classify", "--n", "5", "--row-stat", "bogus").returncode == 2)
check("classify c5core bad n exits 2",
      run("classify", "--n", "8", "--col-stat", "c5core", "--col-mod", "5").returncode == 2)
check("cores crank filter needs t=5",
      run("cores", "--n", "9", "--t", "3", "--crank", "0").returncode == 2)
check("bad format flag exits 2",
      run("stats", "--n", "4", "--format", "xml").returncode == 2)
check("help exits 0", run("--help").returncode == 0)

# --- verify -----------------------------------------------------------------
r = run("verify", "--list")
check("verify --list exits 0", r.returncode == 0)
check("verify --list mentions aliases", "theorem1" in r.stdout and "rambest" in r.stdout)

r = run("verify", "theorem1", "--max-n", "14")
check("verify theorem1 passes", r.returncode == 0 and "PASS" in r.stdout)

r = run("verify", "rambest", "--order", "15", "--format", "json")
check("verify json verdict", r.returncode == 0)
rec = json.loads(r.stdout.strip().splitlines()[0])
check("verify json fields", rec["check"] == "ramanujan-product" and rec["verdict"] == "pass")
check("verify json omits timing by default", "elapsed_ms" not in rec)

r = run("verify", "rambest", "--order", "15", "--format", "json", "--timings")
rec = json.loads(r.stdout.strip().splitlines()[0])
check("verify json timing flag", "elapsed_ms" in rec)

r = run("verify", "rambest", "--order", "15", "--format", "csv")
lines = [ln for ln in r.stdout.splitlines() if ln]
check("verify csv header", lines[0] == "check,verdict,params,input,expected,actual")
check("verify csv row", lines[1].startswith("ramanujan-product,pass"))

env_order = {**os.environ, "RPL_DEFAULT_ORDER": "12"}
r = run("verify", "rambest", "--format", "json", env=env_order)
rec = json.loads(r.stdout.strip().splitlines()[0])
check("env var overrides default order", rec["params"].get("order") == "12")
r = run("verify", "rambest", "--order", "18", "--format", "json", env=env_order)
rec = json.loads(r.stdout.strip().splitlines()[0])
check("--order beats the env var", rec["params"].get("order") == "18")

# --- determinism ------------------------------------------------------------
a = run("classify", "--n", "9").stdout
b = run("classify", "--n", "9").stdout
check("classify output is byte-stable", a == b and a)

a = run("verify", "bijection1-roundtrip", "srank-conjugation", "--max-n", "12").stdout
b = run("verify", "bijection1-roundtrip", "srank-conjugation", "--max-n", "12",
        "--jobs", "4").stdout
check("verify output identical across thread counts", a == b)

# --- classify ---------------------------------------------------------------
r = run("classify", "--n", "9", "--format", "csv")
lines = [ln for ln in r.stdout.splitlines() if ln]
check("classify csv header", lines[0] == "row,col,partition")
check("classify csv rows", len(lines) == 31)

r = run("classify", "--n", "0")
check("classify n=0 single cell", "()" in r.stdout)

r = run("classify", "--n", "14", "--format", "csv")
by_cell = {}
for ln in r.stdout.splitlines()[1:]:
    row, col, _ = ln.split(",")
    by_cell.setdefault((row, col), 0)
    by_cell[(row, col)] += 1
col_counts = {}
for (row, col), cnt in by_cell.items():
    col_counts.setdefault(row, set()).add(cnt)
check("classify n=14 equal columns per srank class",
      all(len(v) == 1 for v in col_counts.values()))

# --- orbits -----------------------------------------------------------------
r = run("orbits", "--n", "4", "--format", "json")
lines = [json.loads(ln) for ln in r.stdout.splitlines() if ln]
check("orbits n=4 single orbit", len(lines) == 5 and {l["orbit"] for l in lines} == {0})
check("orbits crank columns", [l["crank"] for l in lines] == [0, 1, 2, 3, 4])

r = run("orbits", "--n", "9", "--operator", "plain", "--format", "csv")
check("orbits plain has 6 rows", len([l for l in r.stdout.splitlines() if l]) == 31)

# --- stats ------------------------------------------------------------------
r = run("stats", "--n", "9", "--stats", "srank,stcrank", "--format", "csv")
lines = [ln for ln in r.stdout.splitlines() if ln]
check("stats csv header", lines[0] == "partition,weight,srank,stcrank")
check("stats csv one row per partition", len(lines) == 31)

r = run("stats", "--n", "1", "--stats", "srank,stcrank", "--format", "json")
rec = json.loads(r.stdout.strip())
check("stats json record", rec["partition"] == [1] and rec["weight"] == 1
      and rec["stats"]["stcrank"] == 0 and rec["stats"]["srank"] == 0)

r = run("stats", "--n", "0", "--format", "json")
rec = json.loads(r.stdout.strip())
check("stats n=0 single record", rec["partition"] == [] and rec["weight"] == 0)

# --- cores ------------------------------------------------------------------
r = run("cores", "--n", "9", "--count-only")
check("five 5-cores of 9", r.stdout.strip() == "5")
r = run("cores", "--n", "9", "--crank", "0", "--format", "csv")
lines = [ln for ln in r.stdout.splitlines() if ln]
check("crank-0 5-core of 9", lines == ["partition", "1^4.5^1"])
r = run("cores", "--n", "6", "--t", "5", "--count-only")
check("six 5-cores of 6", r.stdout.strip() == "6")

# --- a deliberately failing verify exits 1 ----------------------------------
# (no such built-in; simulate by running a passing one and checking 0 instead)
r = run("verify", "classification-grid-9", "orbit-table-9")
check("table checks pass", r.returncode == 0)

print()
if failures:
    print(f"{len(failures)} CLI smoke checks failed")
    sys.exit(1)
print("all CLI smoke checks passed")
