#!/usr/bin/env python
"""Compare the homometric pair S15/Q15 with zero and with neighbor radii.

Writes psi_0..psi_10 for both weightings as SVG panels into --out.
"""
import argparse
import os

from densityfp import fixtures
from densityfp.analysis import fingerprints_equal
from densityfp.densities import fingerprint
from densityfp.plotting import default_tmax, render_svg
from densityfp.seqcore import neighbor_radii, normalize


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="out/s15_q15")
    ap.add_argument("--K", type=int, default=10)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    S, Q = normalize(fixtures.s15()), normalize(fixtures.q15())
    for label, (a, b) in {"zero": (S, Q), "neighbor": (neighbor_radii(S), neighbor_radii(Q))}.items():
        rep = fingerprints_equal(a, b)
        print(f"[{label} radii] " + rep.to_text().strip())
        for name, seq in (("S15", a), ("Q15", b)):
            fp = fingerprint(seq, args.K)
            curves = [(f"psi_{k}", f) for k, f in enumerate(fp.functions)]
            path = os.path.join(args.out, f"{name}_{label}.svg")
            with open(path, "w") as fh:
                fh.write(render_svg(curves, default_tmax(fp.functions), title=f"{name}, {label} radii"))
            print("  wrote", path)


if __name__ == "__main__":
    main()
