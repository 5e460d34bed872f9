#!/usr/bin/env python3
"""Golden checks for the qmon command line tool.

Usage: run_golden.py <qmon-binary> <data-dir>

Each case runs the binary once and checks exit code and selected output.
Exits nonzero if any case fails.
"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
DATA = sys.argv[2]

failures = []
ran = 0


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def check(name, cond, extra=""):
    global ran
    ran += 1
    if cond:
        print(f"ok   {name}")
    else:
        failures.append(name)
        print(f"FAIL {name}  {extra}")


def jout(result):
    return json.loads(result.stdout)


def main():
    tmp = tempfile.mkdtemp(prefix="qmon_golden_")
    e1 = os.path.join(DATA, "e1.json")
    conic = os.path.join(DATA, "conic.json")
    cover3 = os.path.join(DATA, "cover3.json")

    # ---- validate ----
    r = run("validate", e1)
    check("validate twist tuple", r.returncode == 0 and r.stdout.strip().endswith("valid"),
          f"rc={r.returncode} out={r.stdout!r}")

    r = run("validate", e1, "--json")
    j = jout(r)
    check("validate twist tuple json",
          r.returncode == 0 and j["valid"] is True and j["mode"] == "lefschetz"
          and len(j["checks"]) > 0 and all(c["passed"] for c in j["checks"]),
          r.stdout)

    r = run("validate", conic, "--projective", "--json")
    j = jout(r)
    names = [c["name"] for c in j["checks"]]
    check("validate conic projective",
          r.returncode == 0 and j["valid"] is True and "closing exponent is 1" in names,
          r.stdout)

    r = run("validate", cover3, "--simple", "--connected", "--json")
    j = jout(r)
    names = [c["name"] for c in j["checks"]]
    check("validate cover simple connected",
          r.returncode == 0 and j["valid"] is True
          and "entries are transpositions" in names
          and "entries act transitively" in names,
          r.stdout)

    bad_cover = os.path.join(tmp, "open_cover.json")
    with open(bad_cover, "w") as f:
        json.dump({"format": 1, "mode": "cover", "base": "sphere",
                   "d_or_strands": 3, "entries": ["(1 2)"]}, f)
    r = run("validate", bad_cover)
    check("validate non-closing cover fails",
          r.returncode == 1 and r.stdout.strip().endswith("invalid"),
          f"rc={r.returncode} out={r.stdout!r}")

    garbage = os.path.join(tmp, "garbage.json")
    with open(garbage, "w") as f:
        f.write("{")
    r = run("validate", garbage)
    check("validate garbage is structural", r.returncode == 2 and "error" in r.stderr,
          f"rc={r.returncode} err={r.stderr!r}")

    r = run("validate", os.path.join(tmp, "missing.json"))
    check("validate missing file is structural", r.returncode == 2,
          f"rc={r.returncode}")

    # ---- axioms ----
    r = run("axioms", "dihedral:3")
    check("axioms dihedral",
          r.returncode == 0 and "3 elements" in r.stdout and "axioms: PASS" in r.stdout,
          r.stdout)

    r = run("axioms", "genus2-quotient", "--json")
    j = jout(r)
    check("axioms genus2 json",
          r.returncode == 0 and j["passed"] is True and j["size"] == 17,
          r.stdout)

    broken = os.path.join(tmp, "broken_table.json")
    with open(broken, "w") as f:
        json.dump({"n": 2, "rhd": [[1, 1], [0, 0]]}, f)
    r = run("axioms", broken)
    check("axioms broken table fails",
          r.returncode == 1 and "violation:" in r.stdout and "axioms: FAIL" in r.stdout,
          f"rc={r.returncode} out={r.stdout!r}")

    lopsided = os.path.join(tmp, "lopsided_table.json")
    with open(lopsided, "w") as f:
        json.dump({"n": 2, "rhd": [[0, 0], [0, 1]]}, f)
    r = run("axioms", lopsided)
    check("axioms non-bijective column is structural",
          r.returncode == 2 and "error" in r.stderr,
          f"rc={r.returncode} err={r.stderr!r}")

    r = run("axioms", "torus-dehn", "--seed", "5")
    check("axioms sampled infinite carrier",
          r.returncode == 0 and "seed 5" in r.stdout and "axioms: PASS" in r.stdout,
          r.stdout)

    # ---- homs ----
    r = run("homs", "dihedral:3", "dihedral:3", "--json")
    j = jout(r)
    check("homs dihedral endomorphisms", r.returncode == 0 and j["count"] == 9, r.stdout)

    r = run("homs", "trivial:2", "trivial:3", "--list")
    lines = [l for l in r.stdout.splitlines() if l.startswith("[")]
    check("homs trivial pairs listed",
          r.returncode == 0 and "homs: 9" in r.stdout and len(lines) == 9,
          r.stdout)

    # ---- generate / table roundtrip ----
    table = os.path.join(tmp, "dihedral5.json")
    r = run("generate", "dihedral:5", "-o", table)
    check("generate writes a table", r.returncode == 0 and os.path.exists(table))
    with open(table) as f:
        j = json.load(f)
    check("generated table shape",
          j["n"] == 5 and len(j["rhd"]) == 5 and all(len(row) == 5 for row in j["rhd"]))
    r = run("axioms", table)
    check("generated table passes axioms",
          r.returncode == 0 and "axioms: PASS" in r.stdout, r.stdout)

    # ---- orbit ----
    r = run("orbit", "--carrier", "transposition:3", "--tuple", "0,1,0,1", "--json")
    j = jout(r)
    check("orbit plain", r.returncode == 0 and j["size"] == 27 and j["truncated"] is False,
          r.stdout)

    r = run("orbit", "--carrier", "transposition:3", "--tuple", "0,1,0,1",
            "--cyclic", "--json")
    j = jout(r)
    check("orbit cyclic closure", r.returncode == 0 and j["size"] == 54, r.stdout)

    r = run("orbit", "--carrier", "transposition:3", "--tuple", "0,1,0,1",
            "--max-orbit", "5")
    check("orbit truncation",
          r.returncode == 0 and "orbit size: 5 (truncated)" in r.stdout, r.stdout)

    r = run("orbit", "--carrier", "dihedral:3", "--tuple", "0,0", "--conj", "--json")
    j = jout(r)
    check("orbit conjugation closure", r.returncode == 0 and j["size"] == 3, r.stdout)

    r = run("orbit", "--file", e1, "--max-orbit", "30", "--json")
    j = jout(r)
    check("orbit twist tuple truncated",
          r.returncode == 0 and j["size"] == 30 and j["truncated"] is True, r.stdout)

    r = run("orbit", "--file", conic, "--members", "--json")
    j = jout(r)
    check("orbit conic is rigid",
          r.returncode == 0 and j["size"] == 1 and len(j["members"]) == 1, r.stdout)

    r = run("orbit")
    check("orbit without input is structural", r.returncode == 2, f"rc={r.returncode}")

    # ---- invariant ----
    r = run("invariant", cover3, "transposition:3", "--json")
    j = jout(r)
    check("invariant cover into transpositions",
          r.returncode == 0 and j["count"] == 27 and j["length"] == 4
          and j["base"] == "sphere" and j["closure"] == "permutation product",
          r.stdout)

    r = run("invariant", cover3, "transposition:3", "--connected", "--json")
    j = jout(r)
    check("invariant connected assignments", r.returncode == 0 and j["count"] == 24,
          r.stdout)

    r = run("invariant", cover3, "dihedral:3", "--json")
    j = jout(r)
    check("invariant cover into generic target",
          r.returncode == 0 and j["count"] == 27 and j["closure"] == "inner", r.stdout)

    r = run("invariant", conic, "trivial:3", "--json")
    j = jout(r)
    check("invariant braid tuple counts freely",
          r.returncode == 0 and j["count"] == 9 and j["closure"] == "none", r.stdout)

    r = run("invariant", e1, "dihedral:3", "--json")
    j = jout(r)
    check("invariant twist tuple", r.returncode == 0 and j["count"] == 177147, r.stdout)

    r = run("invariant", e1, "torus-dehn")
    check("invariant needs a finite target", r.returncode == 2, f"rc={r.returncode}")

    r = run("invariant", cover3, "dihedral:3", "--connected")
    check("invariant connected needs permutations", r.returncode == 2,
          f"rc={r.returncode}")

    # ---- homology ----
    r = run("homology", "dihedral:3", "3", "--json")
    j = jout(r)
    check("homology degree three torsion",
          r.returncode == 0 and j["free_rank"] == 0 and j["torsion"] == ["3"]
          and j["group"] == "Z/3",
          r.stdout)

    r = run("homology", "dihedral:3", "2")
    check("homology degree two text",
          r.returncode == 0 and "H_2 (quandle) of dihedral:3 = 0" in r.stdout, r.stdout)

    r = run("homology", "trivial:2", "4", "--theory", "rack", "--bound", "5", "--json")
    j = jout(r)
    check("homology rack theory",
          r.returncode == 0 and j["free_rank"] == 16 and j["torsion"] == [], r.stdout)

    r = run("homology", "dihedral:3", "4")
    check("homology over the degree bound",
          r.returncode == 2 and "capacity" in r.stderr, f"rc={r.returncode} err={r.stderr!r}")

    r = run("homology", "dihedral:3", "2", "--theory", "braid")
    check("homology unknown theory is structural", r.returncode == 2,
          f"rc={r.returncode}")

    # ---- catalog ----
    r = run("catalog")
    check("catalog lists families",
          r.returncode == 0 and "dihedral" in r.stdout and "torus-dehn" in r.stdout
          and len(r.stdout.splitlines()) >= 8,
          r.stdout)

    r = run("catalog", "genus2-quotient", "--json")
    j = jout(r)
    r2 = run("homology", "genus2-quotient", "1", "--json")
    j2 = jout(r2)
    check("catalog orbits match degree-one rank",
          r.returncode == 0 and j["size"] == 17 and r2.returncode == 0
          and j2["free_rank"] == j["orbits"] and j2["torsion"] == [],
          r.stdout + r2.stdout)

    r = run("catalog", "torus-dehn")
    check("catalog infinite carrier",
          r.returncode == 0 and "infinite carrier" in r.stdout, r.stdout)

    r = run("catalog", "nonsense:7")
    check("catalog unknown family is structural", r.returncode == 2,
          f"rc={r.returncode}")

    # ---- argument handling ----
    r = run()
    check("no subcommand is a usage error", r.returncode == 2, f"rc={r.returncode}")
    r = run("frobnicate")
    check("unknown subcommand is a usage error", r.returncode == 2, f"rc={r.returncode}")

    print(f"\n{ran - len(failures)}/{ran} golden checks passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
