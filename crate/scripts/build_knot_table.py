#!/usr/bin/env python3
"""Regenerate crates/core/data/knots.csv from the KnotInfo database.

Requires the `database_knotinfo` package (pip install database_knotinfo).
Rows listed in scripts/extra_knots.csv are appended verbatim.
"""
import csv
import os
import sys

import sympy
from database_knotinfo import link_list

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "crates", "core", "data", "knots.csv")
EXTRA = os.path.join(HERE, "extra_knots.csv")

NAMED = {
    "11n_8", "11n_121", "11n_131",
    "12n_20", "12n_24", "12n_65", "12n_119", "12n_358", "12n_362", "12n_403",
}

T = sympy.Symbol("t")


def laurent(text):
    """Parse a KnotInfo polynomial string into (min_degree, coefficients)."""
    expr = sympy.sympify(text.replace("^", "**"), locals={"t": T})
    expr = sympy.expand(expr)
    terms = sympy.Poly(sympy.expand(expr * T**200), T).all_coeffs()[::-1]
    coeffs = [int(c) for c in terms]
    lo = next(i for i, c in enumerate(coeffs) if c != 0)
    hi = max(i for i, c in enumerate(coeffs) if c != 0)
    return lo - 200, coeffs[lo:hi + 1]


def normalize_alexander(lo, coeffs):
    span = len(coeffs) - 1
    assert span % 2 == 0, "knot Alexander polynomials have even span"
    lo = -span // 2
    if sum(coeffs) < 0:
        coeffs = [-c for c in coeffs]
    assert sum(coeffs) == 1
    return lo, coeffs


def fmt(lo, coeffs):
    return "%d;%s" % (lo, ",".join(str(c) for c in coeffs))


def first_braid(notation):
    notation = notation.strip()
    if notation.startswith("[["):
        notation = notation[1:notation.index("]") + 1]
    notation = notation.strip("[]{} ")
    if not notation:
        return []
    return [int(x) for x in notation.split(",")]


def main():
    rows = []
    for d in link_list()[1:]:
        name = d["name"]
        try:
            crossings = int(d["crossing_number"])
        except ValueError:
            continue
        if crossings > 10 and name not in NAMED:
            continue
        braid_index = int(d["braid_index"])
        letters = first_braid(d["braid_notation"])
        strands = max([braid_index] + [abs(x) + 1 for x in letters])
        word = "B%d:%s" % (strands, ",".join(str(x) for x in letters))
        if crossings == 0:
            alex, jones = (0, [1]), (0, [1])
        else:
            alex = normalize_alexander(*laurent(d["alexander_polynomial"]))
            jones = laurent(d["jones_polynomial"])
        rows.append({
            "name": name,
            "crossings": crossings,
            "braid_index": braid_index,
            "genus": int(d["three_genus"]),
            "word": word,
            "alexander": fmt(*alex),
            "jones": fmt(*jones),
            "braid_length": d["braid_length"].strip(),
            "braid_positive": "true" if d["positive_braid"].strip() == "Y" else "false",
            "prime": "false" if crossings == 0 else "true",
            "index_length": "",
        })
    fields = list(rows[0].keys())
    with open(OUT, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        if os.path.exists(EXTRA):
            with open(EXTRA, newline="") as g:
                for r in csv.DictReader(g):
                    w.writerow(r)
    print("wrote %d rows to %s" % (len(rows), OUT), file=sys.stderr)


if __name__ == "__main__":
    main()
