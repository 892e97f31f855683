#!/usr/bin/env python3
"""Solve the emitted LP with scipy and compare with `popmax mincost`.

usage: lp_check.py <popmax-cli> [instances]
"""
import re
import subprocess
import sys

import numpy as np
from scipy.optimize import linprog

TERM = re.compile(r"([+-])?\s*(\d+)?\s*(xs?\([^)]*\))")


def parse_lp(text):
    """Minimal reader for the emitter's CPLEX LP subset."""
    section = None
    objective = {}
    rows = []
    current = []
    for raw in text.splitlines():
        if raw.startswith("\\"):
            continue
        word = raw.strip()
        if word in ("Minimize", "Subject To", "Bounds", "Generals", "End"):
            section = word
            continue
        if section == "Minimize":
            current.append(raw)
        elif section == "Subject To":
            # Rows start with one space; wrapped continuations with three.
            if raw.startswith("   "):
                rows[-1] += " " + raw.strip()
            else:
                rows.append(raw)
    obj_text = " ".join(current).split(":", 1)[1]
    for sign, coef, var in TERM.findall(obj_text):
        value = int(coef) if coef else 1
        objective[var] = -value if sign == "-" else value
    constraints = []
    for row in rows:
        body = row.split("): ", 1)[1]
        m = re.match(r"(.*)\s(>=|<=|=)\s(-?\d+)$", body)
        lhs, sense, rhs = m.group(1), m.group(2), int(m.group(3))
        terms = {}
        for sign, coef, var in TERM.findall(lhs):
            value = int(coef) if coef else 1
            terms[var] = terms.get(var, 0) + (-value if sign == "-" else value)
        constraints.append((terms, sense, rhs))
    return objective, constraints


def solve(text):
    objective, constraints = parse_lp(text)
    names = sorted(set(objective) | {v for t, _, _ in constraints for v in t})
    index = {v: i for i, v in enumerate(names)}
    c = np.zeros(len(names))
    for v, w in objective.items():
        c[index[v]] = w
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for terms, sense, rhs in constraints:
        row = np.zeros(len(names))
        for v, w in terms.items():
            row[index[v]] = w
        if sense == "=":
            a_eq.append(row)
            b_eq.append(rhs)
        elif sense == "<=":
            a_ub.append(row)
            b_ub.append(rhs)
        else:
            a_ub.append(-row)
            b_ub.append(-rhs)
    result = linprog(
        c,
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=b_ub or None,
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=b_eq or None,
        bounds=(0, None),
        method="highs",
    )
    if result.status != 0:
        raise RuntimeError(result.message)
    return result.fun


def main():
    cli = sys.argv[1]
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 60
    failures = 0
    for seed in range(1, count + 1):
        size = 6 if seed % 10 == 0 else 2 + seed % 3
        density = "1.0" if size == 6 else "0.6"
        inst = subprocess.run(
            [cli, "gen-random", "--na", str(size), "--nb", str(size + seed % 2),
             "--density", density, "--max-cost", "9", "--seed", str(seed)],
            check=True, capture_output=True, text=True).stdout
        lp = subprocess.run([cli, "emit-lp", "-"], input=inst, check=True,
                            capture_output=True, text=True).stdout
        mincost = subprocess.run([cli, "mincost", "-"], input=inst, check=True,
                                 capture_output=True, text=True).stdout
        want = int(re.search(r"^cost (-?\d+)$", mincost, re.M).group(1))
        got = solve(lp)
        if abs(got - want) > 1e-6:
            failures += 1
            print(f"seed {seed}: LP optimum {got} but min cost {want}")
    print(f"{count} instances, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
