#!/usr/bin/env python3
"""Export rational newforms of trivial character from PARI/GP as JSON fixtures.

Usage: gen_corpus.py OUTDIR

Requires cypari2. Only newforms with rational Hecke eigenvalues are exported;
the sign comes from the Fricke eigenvalue, stored so the C++ side can cross-check its
own sign detection.
"""
import json
import os
import sys

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9)

COUNT = 600

# (weight, wanted sign, starting levels); for each start the first level at or
# above it carrying a rational newform of the wanted sign is exported.
QUERIES = [
    (4, 1, [5, 11, 23, 47, 97, 193]),
    (4, -1, [13, 17]),
    (6, -1, [7, 11]),
    (6, 1, [3, 5, 30]),
    (8, -1, [5]),
    (8, 1, [2, 3]),
]


def rational_newforms(level, weight):
    mf = pari.mfinit([level, weight], 0)
    if pari.mfdim(mf) == 0:
        return
    fields = pari.mffields(mf)
    basis = pari.mfeigenbasis(mf)
    atkin = pari.mfatkineigenvalues(mf, level)
    for idx, pol in enumerate(fields):
        if pari.poldegree(pol) != 1:
            continue
        form = basis[idx]
        coeffs = pari.mfcoefs(form, COUNT)
        an = [int(c) for c in coeffs[1:]]
        # root number from the Fricke eigenvalue: eps = (-1)^(k/2) * w_N
        fricke = int(atkin[idx][0])
        sign = (-1) ** (weight // 2) * fricke
        yield idx, an, sign


def main():
    outdir = sys.argv[1]
    os.makedirs(outdir, exist_ok=True)
    seen = set()
    for weight, want, starts in QUERIES:
        for start in starts:
            level = start
            while not export_first(outdir, level, weight, want, seen):
                level += 1


def export_first(outdir, level, weight, want, seen):
    if (level, weight) in seen:
        return False
    for idx, an, sign in rational_newforms(level, weight):
        if sign != want:
            continue
        seen.add((level, weight))
        label = f"{level}.{weight}.{idx}"
        doc = {"label": label, "level": level, "weight": weight,
               "sign": sign, "an": an}
        path = os.path.join(outdir, f"{label}.json")
        with open(path, "w") as fh:
            json.dump(doc, fh)
        print(path, sign)
        return True
    return False


if __name__ == "__main__":
    main()
