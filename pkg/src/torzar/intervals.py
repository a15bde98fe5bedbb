"""Rational interval enclosures for fractional-power comparisons.

Directed rounding is emulated exactly: an n-th root of a nonnegative
rational is sandwiched between two rationals at a requested decimal
precision via exact integer root extraction.  No floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import integer_root


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval with lo > hi")

    @staticmethod
    def exact(x):
        x = Fraction(x)
        return Interval(x, x)

    def __add__(self, other):
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        other = _coerce(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        other = _coerce(other)
        prods = [self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi]
        return Interval(min(prods), max(prods))

    __radd__ = __add__
    __rmul__ = __mul__

    def pow_int(self, k):
        if k == 0:
            return Interval.exact(1)
        if k == 1:
            return self
        if self.lo >= 0:
            return Interval(self.lo ** k, self.hi ** k)
        if self.hi <= 0:
            lo, hi = self.lo ** k, self.hi ** k
            return Interval(min(lo, hi), max(lo, hi))
        if k % 2 == 0:
            return Interval(Fraction(0), max(self.lo ** k, self.hi ** k))
        return Interval(self.lo ** k, self.hi ** k)

    def width(self):
        return self.hi - self.lo


def _coerce(x):
    return x if isinstance(x, Interval) else Interval.exact(x)


def root_enclosure(x, k, digits):
    """Interval of width <= 10^-digits around x^(1/k) for rational x >= 0."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Interval.exact(0)
    scale = 10 ** digits
    big = (x.numerator * scale ** k) // x.denominator
    r = integer_root(big, k)
    return Interval(Fraction(r, scale), Fraction(r + 1, scale))


def power_enclosure(x, num, den, digits):
    """Enclosure of x^(num/den) for rational x >= 0 and positive num/den."""
    x = Fraction(x)
    if num % den == 0:
        return Interval.exact(x ** (num // den))
    return root_enclosure(x ** num, den, digits)


def decimal_str(x, digits=12):
    """Fixed-point decimal rendering of a rational, exact truncation."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole = x.numerator // x.denominator
    frac = x - whole
    scaled = (frac.numerator * 10 ** digits) // frac.denominator
    return f"{sign}{whole}.{scaled:0{digits}d}"
