#!/usr/bin/env python3
"""Print the transform tables for the three worked example sequences.

Usage: python scripts/reproduce_tables.py [--mode {float64,bigfloat,rational}]
"""

import argparse

from seqaccel.cli import main as cli_main

RUNS = [
    ("pi from doubling sines", [
        "transform", "--family", "archimedes_pi", "--count", "13",
        "--k-max", "4", "--col-digits", "5,10,10,10,10",
    ], {"rational": None, "float64": "float64", "bigfloat": "bigfloat"}),
    ("ln 2 from the alternating harmonic series", [
        "transform", "--family", "alt_harmonic", "--count", "18",
        "--k-max", "5", "--col-digits", "5,5,5,10,10,10",
    ], {}),
    ("zeta(2) partial sums (logarithmic, no acceleration)", [
        "transform", "--family", "zeta2", "--count", "26",
        "--k-max", "7", "--digits", "5",
    ], {}),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--mode", default="float64",
                    choices=["float64", "bigfloat", "rational"])
    args = ap.parse_args()
    for title, argv, overrides in RUNS:
        mode = overrides.get(args.mode, args.mode) if overrides else args.mode
        if mode is None:
            print(f"\n== {title}: skipped (irrational values) ==")
            continue
        print(f"\n== {title} ({mode}) ==")
        cli_main(argv + ["--mode", mode])


if __name__ == "__main__":
    main()
