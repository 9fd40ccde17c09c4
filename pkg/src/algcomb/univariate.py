"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from fractions import Fraction


class IntPolynomial:
    """Polynomial in one variable with exact integer coefficients.

    Coefficients are stored low degree first with no trailing zeros.
    Used both for q-analogues (polynomials in q) and Hall polynomials
    (polynomials in t).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self[i] + other[i] for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift_variable(self, a=1):
        """Substitute t -> t + a, expanding exactly."""
        result = IntPolynomial()
        base = IntPolynomial([a, 1])
        power = IntPolynomial([1])
        for c in self.coeffs:
            result = result + c * power
            power = power * base
        return result

    @classmethod
    def interpolate(cls, points):
        """Lagrange interpolation through (x, y) integer points.

        Raises ValueError if the interpolant has a non-integer coefficient.
        """
        xs = [Fraction(x) for x, _ in points]
        ys = [Fraction(y) for _, y in points]
        n = len(points)
        # Newton divided differences.
        table = list(ys)
        for level in range(1, n):
            for i in range(n - 1, level - 1, -1):
                table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
        coeffs = [Fraction(0)] * n
        # Expand Newton form back to the monomial basis.
        poly = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            # poly = poly * (x - xs[i]) + table[i]
            new = [Fraction(0)] * n
            for j in range(n - 1):
                new[j + 1] += poly[j]
                new[j] -= poly[j] * xs[i]
            new[0] += table[i]
            poly = new
        coeffs = poly
        out = []
        for c in coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer interpolation coefficient {c}")
            out.append(int(c))
        return cls(out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)
