"""Exact rational intervals and complex disks.

All certification in the toolkit bottoms out here: endpoints and centers are
`fractions.Fraction`, square roots are bounded through `math.isqrt` on scaled
integers, and logarithms through an atanh series with an explicit rational
tail bound.  Nothing in this module touches machine floats, so enclosures are
sound by construction and identical on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def dyadic_floor(x: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2**-bits that is <= x."""
    n = x.numerator << bits
    return Fraction(n // x.denominator, 1 << bits)


def dyadic_ceil(x: Fraction, bits: int) -> Fraction:
    n = x.numerator << bits
    return Fraction(-((-n) // x.denominator), 1 << bits)


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer."""
    if n < 0:
        raise ValueError("iroot of negative integer")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << (-(-n.bit_length() // k) + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x


def sqrt_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(q) <= hi with hi - lo <= 2**-bits."""
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return _ZERO, _ZERO
    n, d = q.numerator, q.denominator
    # sqrt(n/d) = sqrt(n*d) / d; scale by 4**bits for the gap bound
    s = isqrt(n * d << (2 * bits))
    den = d << bits
    lo = Fraction(s, den)
    if lo * lo == q:
        return lo, lo
    return lo, Fraction(s + 1, den)


def nthroot_bounds(q: Fraction, k: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds on q**(1/k) for q >= 0, gap <= 2**-bits."""
    if q < 0:
        raise ValueError("root of negative rational")
    if q == 0:
        return _ZERO, _ZERO
    n, d = q.numerator, q.denominator
    # q**(1/k) = (n * d**(k-1))**(1/k) / d
    s = iroot(n * d ** (k - 1) << (k * bits), k)
    den = d << bits
    lo = Fraction(s, den)
    if lo ** k == q:
        return lo, lo
    return lo, Fraction(s + 1, den)


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def exact(x) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval") -> "Interval":
        return self + (-other)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def scale(self, c) -> "Interval":
        c = Fraction(c)
        if c >= 0:
            return Interval(self.lo * c, self.hi * c)
        return Interval(self.hi * c, self.lo * c)

    def square(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(_ZERO, max(self.lo * self.lo, self.hi * self.hi))

    def sqrt(self, bits: int) -> "Interval":
        if self.lo < 0:
            raise ValueError("sqrt of interval reaching below zero")
        lo, _ = sqrt_bounds(self.lo, bits)
        _, hi = sqrt_bounds(self.hi, bits)
        return Interval(lo, hi)

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"


# ---------------------------------------------------------------------------
# Certified logarithm.
#
# log q is reduced to log m + e*log 2 with m in [1, 2), then
# log m = 2*atanh(t) with t = (m-1)/(m+1) in [0, 1/3), evaluated by the odd
# series with tail bound 2 t^(2K+3) / ((2K+3)(1 - t^2)).

_LOG2_CACHE: dict[int, tuple[Fraction, Fraction]] = {}


def _atanh_bounds(t_lo: Fraction, t_hi: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    # 0 <= t_lo <= t_hi < 1/2; series is monotone in t
    lo = _ZERO
    p = t_lo
    t2 = t_lo * t_lo
    for k in range(terms):
        lo += p / (2 * k + 1)
        p *= t2
    hi = _ZERO
    p = t_hi
    t2 = t_hi * t_hi
    for k in range(terms):
        hi += p / (2 * k + 1)
        p *= t2
    tail = p / ((2 * terms + 1) * (1 - t2))
    return 2 * lo, 2 * (hi + tail)


def _log2_bounds(bits: int) -> tuple[Fraction, Fraction]:
    if bits not in _LOG2_CACHE:
        t = Fraction(1, 3)
        terms = bits // 3 + 6
        _LOG2_CACHE[bits] = _atanh_bounds(t, t, terms)
    return _LOG2_CACHE[bits]


def log_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= log(q) <= hi for rational q > 0."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log of nonpositive rational")
    if q == 1:
        return _ZERO, _ZERO
    if q < 1:
        lo, hi = log_bounds(1 / q, bits)
        return -hi, -lo
    # q >= 1: find e with q / 2**e in [1, 2)
    e = q.numerator.bit_length() - q.denominator.bit_length()
    if e > 0 and q < Fraction(1 << e):
        e -= 1
    m = q / (1 << e)
    assert 1 <= m < 2
    work = bits + 16 + max(e, 1).bit_length()
    lo2, hi2 = _log2_bounds(work)
    if m == 1:
        return dyadic_floor(e * lo2, bits + 8), dyadic_ceil(e * hi2, bits + 8)
    t = (m - 1) / (m + 1)
    t_lo = dyadic_floor(t, work)
    t_hi = dyadic_ceil(t, work)
    terms = work // 3 + 6
    s_lo, s_hi = _atanh_bounds(t_lo, t_hi, terms)
    lo = e * lo2 + s_lo
    hi = e * hi2 + s_hi
    return dyadic_floor(lo, bits + 8), dyadic_ceil(hi, bits + 8)


def log_interval(iv: Interval, bits: int) -> Interval:
    if iv.lo <= 0:
        raise ValueError("log of interval reaching below zero")
    lo, _ = log_bounds(iv.lo, bits)
    _, hi = log_bounds(iv.hi, bits)
    return Interval(lo, hi)


def pow_interval(iv: Interval, exponent: Fraction, bits: int) -> Interval:
    """x**exponent over a positive interval, rational exponent."""
    if iv.lo <= 0:
        raise ValueError("pow_interval requires a strictly positive interval")
    exponent = Fraction(exponent)
    p, q = exponent.numerator, exponent.denominator
    if p < 0:
        inner = pow_interval(iv, -exponent, bits)
        return Interval(1 / inner.hi, 1 / inner.lo)
    if p == 0:
        return Interval.exact(1)
    lo_p, hi_p = iv.lo ** p, iv.hi ** p
    lo = nthroot_bounds(lo_p, q, bits)[0]
    hi = nthroot_bounds(hi_p, q, bits)[1]
    return Interval(lo, hi)


# ---------------------------------------------------------------------------
# Complex disks with rational centers and radii.

_ABS_BITS = 24  # slack bits for modulus upper bounds inside products


@dataclass(frozen=True)
class Disk:
    """Closed disk { z : |z - (re + i*im)| <= rad } with rational data."""

    re: Fraction
    im: Fraction
    rad: Fraction

    def __post_init__(self):
        if self.rad < 0:
            raise ValueError("negative disk radius")

    @staticmethod
    def exact(re, im=0) -> "Disk":
        return Disk(Fraction(re), Fraction(im), _ZERO)

    @property
    def center_norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def abs_interval(self, bits: int = _ABS_BITS) -> Interval:
        lo, hi = sqrt_bounds(self.center_norm2, bits)
        return Interval(max(_ZERO, lo - self.rad), hi + self.rad)

    def abs_upper(self, bits: int = _ABS_BITS) -> Fraction:
        return sqrt_bounds(self.center_norm2, bits)[1] + self.rad

    def __add__(self, other: "Disk") -> "Disk":
        return Disk(self.re + other.re, self.im + other.im, self.rad + other.rad)

    def __neg__(self) -> "Disk":
        return Disk(-self.re, -self.im, self.rad)

    def __sub__(self, other: "Disk") -> "Disk":
        return self + (-other)

    def __mul__(self, other: "Disk") -> "Disk":
        re = self.re * other.re - self.im * other.im
        im = self.re * other.im + self.im * other.re
        rad = (
            self.abs_upper() * other.rad
            + other.abs_upper() * self.rad
            + self.rad * other.rad
        )
        return Disk(re, im, rad)

    def conjugate(self) -> "Disk":
        return Disk(self.re, -self.im, self.rad)

    def contains_zero(self) -> bool:
        return self.center_norm2 <= self.rad * self.rad

    def inverse(self) -> "Disk":
        """Exact image of the disk under z -> 1/z (a Moebius map sends disks
        to disks, so no over-estimation occurs here)."""
        d = self.center_norm2 - self.rad * self.rad
        if d <= 0:
            raise ZeroDivisionError("disk contains zero")
        return Disk(self.re / d, -self.im / d, self.rad / d)

    def ipow(self, n: int) -> "Disk":
        if n < 0:
            return self.inverse().ipow(-n)
        result = Disk.exact(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Disk":
        c = Fraction(c)
        return Disk(self.re * c, self.im * c, self.rad * abs(c))

    def dist2(self, other: "Disk") -> Fraction:
        dre = self.re - other.re
        dim = self.im - other.im
        return dre * dre + dim * dim

    def contains_disk(self, other: "Disk") -> bool:
        """Certified other subset-of self."""
        gap = self.rad - other.rad
        if gap < 0:
            return False
        return self.dist2(other) <= gap * gap

    def contains_point(self, re, im=0) -> bool:
        dre = self.re - Fraction(re)
        dim = self.im - Fraction(im)
        return dre * dre + dim * dim <= self.rad * self.rad

    def disjoint_from(self, other: "Disk") -> bool:
        """Certified empty intersection (strict separation of closed disks)."""
        s = self.rad + other.rad
        return self.dist2(other) > s * s

    def real_part(self) -> Interval:
        return Interval(self.re - self.rad, self.re + self.rad)

    def imag_part(self) -> Interval:
        return Interval(self.im - self.rad, self.im + self.rad)

    def __repr__(self):
        return f"Disk({self.re}, {self.im}; {self.rad})"


def mpf_to_fraction(x) -> Fraction:
    """Exact conversion of an mpmath mpf (binary float) to a Fraction."""
    sign, man, exp, _ = x._mpf_
    if man == 0 and exp != 0:
        raise ValueError("cannot convert non-finite mpf")
    value = Fraction(man, 1)
    if exp >= 0:
        value *= 1 << exp
    else:
        value /= 1 << (-exp)
    return -value if sign else value
