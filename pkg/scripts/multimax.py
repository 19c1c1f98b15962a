#!/usr/bin/env python
"""Count local maxima of every psi_k for the multi-maximum fixtures."""
from densityfp import fixtures, pwl
from densityfp.densities import psi
from densityfp.seqcore import normalize

for name in ("multimax2", "multimax3", "multimax5"):
    S = normalize(fixtures.FIXTURES[name]())
    counts = [len(pwl.local_maxima(psi(S, k))) for k in range(S.m + 1)]
    print(f"{name:10s} m={S.m}  maxima per k={counts}")
    for k, c in enumerate(counts):
        if c > 1:
            for a, b, v in pwl.local_maxima(psi(S, k)):
                span = f"{a}" if a == b else f"[{a}, {b}]"
                print(f"    psi_{k}: t={span} value={v}")
