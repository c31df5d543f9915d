#!/usr/bin/env python3
"""End-to-end checks for the command-line tool: exit codes, formats,
determinism, and the no-partial-output guarantee."""

import json
import math
import os
import subprocess
import sys
import tempfile

CLI = os.environ["SYMCAP_CLI"]
FIXTURES = os.environ["SYMCAP_FIXTURES"]

passed = 0


def fixture(name):
    return os.path.join(FIXTURES, name)


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def ok(label, cond, detail=""):
    global passed
    if not cond:
        print(f"FAIL: {label} {detail}")
        sys.exit(1)
    passed += 1
    print(f"ok: {label}")


# --- capacity ---------------------------------------------------------------
r = run("capacity", fixture("omega0.json"), "--format", "json")
ok("capacity omega0 exit", r.returncode == 0, r.stderr)
rep = json.loads(r.stdout)
ok("capacity omega0 c1", abs(rep["c1"] - 4.0) <= 1e-6, rep)
ok("capacity omega0 c_inf", abs(rep["c_infinity"] - 2.0) <= 1e-6, rep)
ok("capacity omega0 method", rep["method"] == "simplex_min_gauge", rep)

r = run("capacity", fixture("cube_n3.json"), "--format", "json")
rep = json.loads(r.stdout)
ok("capacity cube closed form", rep["c1"] == 1.0 and rep["c_infinity"] == 1.0, rep)
ok("capacity cube method", rep["method"] == "closed_form", rep)
ok("capacity cube exact", rep["error_bound"] == 0.0, rep)

r = run("capacity", fixture("lp_ball_p2_n2.json"))
ok("capacity pretty exit", r.returncode == 0, r.stderr)
ok("capacity pretty text", "c1          = 1" in r.stdout, r.stdout)

r = run("capacity", fixture("box_2x1.json"), "--format", "csv")
ok("capacity csv header", r.stdout.startswith("c1,c_infinity,method,error_bound\n"), r.stdout)
ok("capacity csv row", r.stdout.splitlines()[1].startswith("1,1,closed_form"), r.stdout)

# a region with neither convexity flag has no capacity path: domain failure
r = run("capacity", fixture("gauge_table.json"))
ok("capacity unflagged exit 4", r.returncode == 4, f"rc={r.returncode} {r.stderr}")
ok("capacity unflagged silent", r.stdout == "", r.stdout)

# --- embed ------------------------------------------------------------------
r = run("embed", fixture("lp_ball_p1_r4_n2.json"), fixture("omega0.json"))
ok("embed simplex->bidisk exit 0", r.returncode == 0, f"rc={r.returncode} {r.stderr}")
ok("embed simplex->bidisk verdict", "Embeds" in r.stdout, r.stdout)

r = run("embed", fixture("lp_ball_p1_r4_n2.json"), fixture("omega0.json"), "--format", "json")
v = json.loads(r.stdout)
ok("embed json verdict", v["verdict"] == "Embeds", v)
ok("embed json case", v["case"] == "i", v)
ok("embed json certificate", v["certificate"]["type"] == "inclusion", v)
ok("embed json normalization", v["certificate"]["normalization"] == 4.0, v)
ok("embed json inclusion status", v["certificate"]["inclusion"]["status"] == "Included", v)

r = run("embed", fixture("lp_ball_p2_n2.json"), fixture("lp_ball_p2_r09_n2.json"), "--format", "json")
ok("embed shrink exit 3", r.returncode == 3, f"rc={r.returncode} {r.stderr}")
v = json.loads(r.stdout)
ok("embed shrink verdict", v["verdict"] == "NotEmbeds", v)

r = run("embed", fixture("omega0.json"), fixture("lp_ball_p2_n2.json"), "--format", "json")
ok("embed unmatched exit 4", r.returncode == 4, f"rc={r.returncode} {r.stderr}")
v = json.loads(r.stdout)
ok("embed unmatched verdict", v["verdict"] == "OutOfScope", v)
ok("embed unmatched case", v["case"] == "none", v)
ok("embed unmatched cert", v["certificate"]["type"] == "scope", v)
ok("embed unmatched obstruction",
   v["certificate"]["obstruction"]["capacity"] == "c1"
   and v["certificate"]["obstruction"]["inner_value"] > v["certificate"]["obstruction"]["outer_value"],
   v)

# --- bad input: exit 2, nothing on stdout ------------------------------------
r = run("capacity", fixture("malformed.json"))
ok("malformed exit 2", r.returncode == 2, f"rc={r.returncode}")
ok("malformed silent", r.stdout == "", r.stdout)
ok("malformed stderr", r.stderr != "", r.stderr)

r = run("capacity", fixture("bad_schema.json"))
ok("bad schema exit 2", r.returncode == 2, f"rc={r.returncode}")
ok("bad schema silent", r.stdout == "", r.stdout)

r = run("embed", fixture("malformed.json"), fixture("omega0.json"), "--format", "json")
ok("embed malformed exit 2", r.returncode == 2, f"rc={r.returncode}")
ok("embed malformed silent", r.stdout == "", r.stdout)

r = run("capacity", fixture("omega0.json"), "--format", "yaml")
ok("unknown format exit 2", r.returncode == 2, f"rc={r.returncode}")

r = run("capacity")
ok("missing argument exit 2", r.returncode == 2, f"rc={r.returncode}")

# --- validate -----------------------------------------------------------------
r = run("validate", fixture("lp_ball_p2_n2.json"))
ok("validate honest exit 0", r.returncode == 0, f"rc={r.returncode} {r.stderr}")
ok("validate honest text", "all passed: yes" in r.stdout, r.stdout)

r = run("validate", fixture("false_claim.json"), "--format", "json")
ok("validate false claim exit 2", r.returncode == 2, f"rc={r.returncode}")
v = json.loads(r.stdout)
ok("validate false claim report", v["all_passed"] is False, v)
failed = [c for c in v["checks"] if c["claimed"] and not c["passed"]]
ok("validate false claim flag", any(c["flag"] == "balanced" for c in failed), v)
ok("validate counterexample", any(c["counterexample"] for c in failed), v)

# --- action -------------------------------------------------------------------
r = run("action", "--epsilon", "0,1", "--c", "0.5,1", "--format", "csv")
ok("action exit", r.returncode == 0, r.stderr)
lines = r.stdout.splitlines()
ok("action csv header", lines[0] == "epsilon,c,I,err", lines)
rows = [ln.split(",") for ln in lines[1:]]
ok("action csv rows", len(rows) == 4, lines)
limit_half = next(row for row in rows if row[0] == "0" and row[1] == "0.5")
ok("action limit c=0.5", abs(float(limit_half[2]) - 4.0) <= 1e-15, limit_half)
limit_one = next(row for row in rows if row[0] == "0" and row[1] == "1")
ok("action limit c=1", abs(float(limit_one[2]) - 5.6568542494923802) <= 1e-15, limit_one)
zero_row = next(row for row in rows if row[0] == "1" and row[1] == "0.5")
ok("action pinned zero", float(zero_row[2]) == 0.0, zero_row)
eps1_row = next(row for row in rows if row[0] == "1" and row[1] == "1")
ok("action eps=1 c=1", abs(float(eps1_row[2]) - 2.3962804694711854) <= 1e-9, eps1_row)

# energy below the well bottom cannot be integrated: the row is flagged, not fatal
r = run("action", "--epsilon", "1", "--c", "0.25", "--format", "csv")
ok("action below-bottom exit", r.returncode == 0, f"rc={r.returncode}")
ok("action below-bottom row", "nan" in r.stdout.splitlines()[1], r.stdout)
ok("action below-bottom note", "skipped" in r.stderr, r.stderr)

# --- bidisk --------------------------------------------------------------------
r = run("bidisk", "--samples", "8", "--format", "csv")
lines = r.stdout.splitlines()
ok("bidisk csv header", lines[0] == "alpha,x,y", lines)
ok("bidisk csv rows", len(lines) == 10, lines)
first = [float(t) for t in lines[1].split(",")]
last = [float(t) for t in lines[-1].split(",")]
two_pi = 2.0 * math.pi
ok("bidisk first point", abs(first[1]) <= 1e-12 and abs(first[2] - two_pi) <= 1e-12, first)
ok("bidisk last point", abs(last[1] - two_pi) <= 1e-12 and abs(last[2]) <= 1e-12, last)
xs = [float(ln.split(",")[1]) for ln in lines[1:]]
ok("bidisk x increasing", all(a < b for a, b in zip(xs, xs[1:])), xs)

r = run("bidisk", "--samples", "4", "--format", "json")
v = json.loads(r.stdout)
ok("bidisk json count", len(v["samples"]) == 5, v)
mid = v["samples"][2]
ok("bidisk json corner", abs(mid["x"] - 2.0) <= 1e-12 and abs(mid["y"] - 2.0) <= 1e-12, mid)

# --- rigidity --------------------------------------------------------------------
r = run("rigidity", "--format", "csv")
lines = r.stdout.splitlines()
ok("rigidity csv lines", len(lines) == 82, len(lines))
ok("rigidity csv header", lines[0] == "p,q,r,s,verdict", lines[0])
ok("rigidity csv flexible count", sum(ln.endswith("NotRigid") for ln in lines) == 4, lines)
ok("rigidity csv known row", "1,inf,2,2,NotRigid" in lines, None)

r = run("rigidity", "--format", "json")
v = json.loads(r.stdout)
ok("rigidity json rows", len(v["rows"]) == 81, len(v["rows"]))
ok("rigidity json verdicts", all(row["verdict"] in ("Rigid", "NotRigid") for row in v["rows"]), None)

# --- determinism: identical invocations give identical bytes ----------------------
for args in (
    ("capacity", fixture("omega0.json"), "--format", "json"),
    ("embed", fixture("lp_ball_p1_r4_n2.json"), fixture("omega0.json"), "--format", "json"),
    ("action", "--epsilon", "1", "--c", "1,2,3", "--format", "csv"),
    ("validate", fixture("omega0.json"), "--format", "json"),
    ("rigidity", "--format", "csv"),
):
    a = run(*args)
    b = run(*args)
    ok(f"deterministic {args[0]}", a.stdout == b.stdout and a.returncode == b.returncode, args)

# --- --out writes the file and keeps stdout empty ----------------------------------
with tempfile.TemporaryDirectory() as tmp:
    out_path = os.path.join(tmp, "report.json")
    direct = run("capacity", fixture("omega0.json"), "--format", "json")
    r = run("capacity", fixture("omega0.json"), "--format", "json", "--out", out_path)
    ok("--out exit", r.returncode == 0, r.stderr)
    ok("--out silent stdout", r.stdout == "", r.stdout)
    with open(out_path, "r", encoding="utf-8") as f:
        ok("--out content", f.read() == direct.stdout, out_path)

    # failure before output: the file must not be created
    missing = os.path.join(tmp, "never.json")
    r = run("capacity", fixture("malformed.json"), "--out", missing)
    ok("--out no partial file", r.returncode == 2 and not os.path.exists(missing), missing)

print(f"all {passed} cli checks passed")
