"""Exact sparse row echelon over integer coefficients.

Rows are dicts mapping hashable column keys to integers. Reduction is
fraction-free (cross-multiplication followed by content stripping), so
dimension counts never touch floating point. A total order on column
keys picks the pivot; any fixed order works.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _content(row):
    g = 0
    for c in row.values():
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def make_primitive(row):
    g = _content(row)
    if g > 1:
        return {k: c // g for k, c in row.items()}
    return dict(row)


class IntEchelon:
    """Incremental echelon basis of an integer row space.

    key_order maps a column key to a sortable value; the pivot of a row
    is its maximal column under this order.
    """

    def __init__(self, key_order=None):
        self.key_order = key_order or (lambda k: k)
        self.rows = {}  # pivot key -> primitive integer row

    def __len__(self):
        return len(self.rows)

    def _pivot(self, row):
        return max(row, key=self.key_order)

    def reduce(self, row):
        """Remainder of row modulo the current row space (scaled, primitive)."""
        row = dict(row)
        while row:
            piv = self._pivot(row)
            base = self.rows.get(piv)
            if base is None:
                break
            a, b = row[piv], base[piv]
            g = gcd(a, b)
            ra, rb = b // g, a // g
            row = {k: c * ra for k, c in row.items()}
            for k, c in base.items():
                v = row.get(k, 0) - c * rb
                if v:
                    row[k] = v
                else:
                    row.pop(k, None)
        return make_primitive(row) if row else {}

    def add(self, row):
        """Reduce and insert; returns the stored primitive row or None."""
        rem = self.reduce(row)
        if not rem:
            return None
        self.rows[self._pivot(rem)] = rem
        return rem

    def coordinates(self, row):
        """Express a row in the echelon basis, exactly.

        Returns dict pivot-key -> Fraction such that
        row = sum coeff * rows[pivot]. Raises ValueError if the row is
        not in the span.
        """
        work = {k: Fraction(c) for k, c in row.items()}
        coeffs = {}
        while work:
            piv = max(work, key=self.key_order)
            base = self.rows.get(piv)
            if base is None:
                raise ValueError("row is not in the span")
            c = work[piv] / base[piv]
            coeffs[piv] = c
            for k, v in base.items():
                s = work.get(k, 0) - c * v
                if s:
                    work[k] = s
                else:
                    work.pop(k, None)
        return coeffs
