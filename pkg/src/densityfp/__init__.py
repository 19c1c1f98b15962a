"""Exact density functions of periodic sequences of weighted points on the line."""

from .analysis import ComparisonReport, fingerprints_equal, isometric, smi_family
from .densities import (DensityFingerprint, Trapezoid, densigram, fingerprint, psi, psi0,
                        psi_via_periodicity, trapezoid1, trapezoid_k, trapezoids)
from .oracle import CoverageProfile, coverage, sample_check
from .pwl import PiecewiseLinear, evaluate, from_corners, local_maxima, pwl_sum
from .seqcore import (GapVector, PeriodicSequence, gaps, neighbor_radii, normalize, reflect,
                      translate)

__version__ = "0.1.0"
