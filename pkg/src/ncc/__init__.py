"""Coding toolkit for asymmetric magnitude-1 errors on q-ary alphabets.

The core object is the non-consecutive constraint (NCC) code: words over
{0, ..., q-1} whose histogram never occupies two adjacent levels.  The
package bundles the enumerative encoder and optimal histogram decoder,
baseline schemes (even/odd, all-even, LSB constructions), analytic
failure-probability bounds, a q-ary Z-channel information-theory toolkit,
and a reproducible Monte Carlo harness.
"""

from ncc.codec import NccCode, UndecodableError
from ncc.histograms import histogram_of, is_ncc

__all__ = ["NccCode", "UndecodableError", "histogram_of", "is_ncc"]

__version__ = "0.1.0"
