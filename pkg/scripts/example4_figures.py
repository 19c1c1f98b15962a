#!/usr/bin/env python
"""Regenerate the worked three-interval example: psi_0..psi_9, trapezoids, densigram."""
import os
import sys

from densityfp.cli import main

out = sys.argv[1] if len(sys.argv) > 1 else "out/example4"
os.makedirs(out, exist_ok=True)
main(["compute", "example4", "--k", "0..9", "--out", out])
main(["compute", "example4", "--k", "1..2", "--format", "svg", "--trapezoids", "--out", out])
main(["compute", "example4", "--k", "0..9", "--format", "svg", "--out", out])
main(["densigram", "example4", "--k", "1..6", "--format", "svg", "--out", out])
