"""Exact and numerical experiments in algebraic combinatorics.

Covers Littlewood-Richardson coefficients (two independent algorithms),
saturation scans, Horn inequality systems, Hall polynomials on finite
abelian p-groups, coinvariant algebras and derivative spans, diagonal
coinvariants via an exact Groebner engine, longest increasing subsequence
statistics, and the Tracy-Widom distribution computed from Painleve II.
"""

__version__ = "0.1.0"
