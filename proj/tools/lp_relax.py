#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Solve the LP relaxation of an emitted model file.

Reads the LP text produced by the `mip` subcommand, drops integrality
(variables relax to [0, 1]), solves with scipy, and prints a single line
`objective: <value>` as expected by the external-solver adapter.
"""

import re
import sys

from scipy.optimize import linprog


def parse_terms(text):
    """Return {var_index: coefficient} for one linear expression."""
    coeffs = {}
    sign = 1
    pending = 1
    for tok in text.split():
        if tok == "+":
            sign, pending = 1, 1
        elif tok == "-":
            sign, pending = -1, 1
        elif re.fullmatch(r"\d+", tok):
            pending = int(tok)
        else:
            m = re.fullmatch(r"x(\d+)", tok)
            if not m:
                raise ValueError(f"unexpected token {tok!r}")
            idx = int(m.group(1))
            coeffs[idx] = coeffs.get(idx, 0) + sign * pending
            sign, pending = 1, 1
    return coeffs


def main():
    if len(sys.argv) != 2:
        print("usage: lp_relax.py MODEL.lp", file=sys.stderr)
        return 1
    objective = {}
    rows = []  # (coeffs, sense, rhs)
    section = None
    var_count = 0
    with open(sys.argv[1], encoding="ascii") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("\\"):
                continue
            if line in ("Maximize", "Subject To", "Binaries", "End"):
                section = line
                continue
            if section == "Maximize":
                objective = parse_terms(line.split(":", 1)[1])
            elif section == "Subject To":
                head, rest = line.split(":", 1)
                del head
                if "<=" in rest:
                    lhs, rhs = rest.split("<=")
                    sense = "<="
                else:
                    lhs, rhs = rest.split("=")
                    sense = "="
                rows.append((parse_terms(lhs), sense, float(rhs)))
            elif section == "Binaries":
                for tok in line.split():
                    var_count = max(var_count, int(tok[1:]))

    for coeffs in [objective] + [r[0] for r in rows]:
        for idx in coeffs:
            var_count = max(var_count, idx)

    def dense(coeffs):
        row = [0.0] * var_count
        for idx, c in coeffs.items():
            row[idx - 1] = float(c)
        return row

    if var_count == 0:
        print("objective: 0")
        return 0

    c = [-v for v in dense(objective)]  # linprog minimizes
    a_ub = [dense(r[0]) for r in rows if r[1] == "<="]
    b_ub = [r[2] for r in rows if r[1] == "<="]
    a_eq = [dense(r[0]) for r in rows if r[1] == "="]
    b_eq = [r[2] for r in rows if r[1] == "="]
    res = linprog(
        c,
        A_ub=a_ub or None,
        b_ub=b_ub or None,
        A_eq=a_eq or None,
        b_eq=b_eq or None,
        bounds=[(0, 1)] * var_count,
        method="highs",
    )
    if not res.success:
        print(f"relaxation failed: {res.message}", file=sys.stderr)
        return 1
    print(f"objective: {-res.fun}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
