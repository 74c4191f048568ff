"""Exact computation of Hilbert polynomials of projective varieties by
independent, cross-validated routes, plus the Schubert/transversality
and counting-reduction machinery around them.

Modules
-------
arith           exact polynomials and truncated power series over Q
linalg          exact rational linear algebra
partitions      partitions, containment, jump sequences
symfun          Delta determinants, Todd/Chern polynomials, delta tables
grobner         Buchberger bases, Hilbert series/polynomials, zero counting
chern           complete-intersection Chern/Todd pipeline and characters
transversality  Schubert cells, charts, and the tangency rank tests
reductions      #SAT encodings, membership via Hilbert data, interpolation
cli             batch command-line front end
"""

from .arith import MultiPoly, TruncSeries, UniPoly, binom_poly, parse_poly
from .partitions import Partition, parse_partition

__all__ = [
    "MultiPoly",
    "TruncSeries",
    "UniPoly",
    "binom_poly",
    "parse_poly",
    "Partition",
    "parse_partition",
]
