"""Exact and rigorously enclosed arithmetic.

Integers and rationals are exact (``int`` and ``fractions.Fraction``).
Irrational quantities (base-2 logarithms, binary entropy, square roots) are
carried as *enclosures*: rational intervals guaranteed to contain the true
value.  Soundness comes from directed rounding at every internal step, never
from post-hoc error estimates, so a strict comparison of enclosure endpoints
is a machine-checked proof of the corresponding strict inequality.

The transcendental routines work in dyadic fixed point: an integer ``n`` at
working precision ``W`` stands for ``n / 2**W``.  Lower endpoints round down,
upper endpoints round up.  The working precision is raised until the returned
interval width is at most ``2**-precision_bits``, so callers get a hard width
guarantee rather than a heuristic one.

Quantities of the form ``r * 2**e`` that appear in bound comparisons are kept
as base-2 logarithms, so an exactly-representable exponent like 45 is the
point interval [45, 45] instead of a 46-bit integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Tuple, Union

Rational = Union[int, Fraction]

DEFAULT_PRECISION_BITS = 64
MAX_PRECISION_BITS = 4096


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


def _as_fraction(x) -> Fraction:
    """Coerce to an exact rational.  Floats are refused: they are inexact."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise DomainError("floats are not exact; pass an int, Fraction, or 'p/q' string")
    raise DomainError(f"expected an exact rational, got {type(x).__name__}")


def _check_precision(precision_bits: int) -> None:
    if not isinstance(precision_bits, int) or precision_bits < 1:
        raise DomainError("precision_bits must be a positive integer")


# ---------------------------------------------------------------------------
# Certainty: three-valued outcome of a certified comparison
# ---------------------------------------------------------------------------

_LABELS = ("CertifiedTrue", "CertifiedFalse", "Unresolved")


@dataclass(frozen=True)
class Certainty:
    """Verdict of a certified comparison.

    ``CertifiedTrue`` / ``CertifiedFalse`` are only ever produced when
    interval endpoints strictly separate; equality of the underlying real
    values therefore stays ``Unresolved`` forever, by design.
    ``precision_bits`` records the precision at which resolution was
    abandoned (``None`` when the notion does not apply, e.g. sampling).
    """

    label: str
    precision_bits: Optional[int] = None

    def __post_init__(self):
        if self.label not in _LABELS:
            raise ValueError(f"bad certainty label {self.label!r}")

    @staticmethod
    def true() -> "Certainty":
        return _CERTIFIED_TRUE

    @staticmethod
    def false() -> "Certainty":
        return _CERTIFIED_FALSE

    @staticmethod
    def unresolved(precision_bits: Optional[int] = None) -> "Certainty":
        return Certainty("Unresolved", precision_bits)

    @property
    def is_true(self) -> bool:
        return self.label == "CertifiedTrue"

    @property
    def is_false(self) -> bool:
        return self.label == "CertifiedFalse"

    @property
    def is_unresolved(self) -> bool:
        return self.label == "Unresolved"

    def __str__(self) -> str:
        if self.is_unresolved and self.precision_bits is not None:
            return f"Unresolved(precision_bits={self.precision_bits})"
        return self.label


_CERTIFIED_TRUE = Certainty("CertifiedTrue")
_CERTIFIED_FALSE = Certainty("CertifiedFalse")


def certainty_all(*items: Certainty) -> Certainty:
    """Conjunction: any CertifiedFalse wins, else any Unresolved, else true."""
    for c in items:
        if c.is_false:
            return c
    for c in items:
        if c.is_unresolved:
            return c
    return Certainty.true()


# ---------------------------------------------------------------------------
# Enclosure: a rational interval certified to contain a real value
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval [lo, hi] containing a real value.

    Arithmetic between enclosures is exact interval arithmetic on rational
    endpoints (no rounding is ever needed for +, -, *, /), so combining sound
    enclosures yields sound enclosures.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"inverted enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Rational) -> "Enclosure":
        v = _as_fraction(value)
        return cls(v, v)

    # -- inspection ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Rational) -> bool:
        v = _as_fraction(value)
        return self.lo <= v <= self.hi

    def intersects(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Enclosure") -> "Enclosure":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("disjoint enclosures cannot both be sound")
        return Enclosure(lo, hi)

    def certainly_lt(self, other: "Enclosure") -> bool:
        """Endpoint proof that every value here is below every value there."""
        return self.hi < other.lo

    # -- exact interval arithmetic -------------------------------------------

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __add__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo + other.lo, self.hi + other.hi)
        r = _as_fraction(other)
        return Enclosure(self.lo + r, self.hi + r)

    __radd__ = __add__

    def __sub__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo - other.hi, self.hi - other.lo)
        return self + (-_as_fraction(other))

    def __rsub__(self, other) -> "Enclosure":
        return (-self) + _as_fraction(other)

    def __mul__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            products = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return Enclosure(min(products), max(products))
        r = _as_fraction(other)
        if r >= 0:
            return Enclosure(self.lo * r, self.hi * r)
        return Enclosure(self.hi * r, self.lo * r)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            if other.lo <= 0 <= other.hi:
                raise DomainError("division by an enclosure containing zero")
            quotients = (
                self.lo / other.lo,
                self.lo / other.hi,
                self.hi / other.lo,
                self.hi / other.hi,
            )
            return Enclosure(min(quotients), max(quotients))
        r = _as_fraction(other)
        if r == 0:
            raise DomainError("division by zero")
        return self * (Fraction(1) / r)

    def __rtruediv__(self, other) -> "Enclosure":
        return Enclosure.point(_as_fraction(other)) / self

    # -- rendering ------------------------------------------------------------

    def decimal_str(self, digits: int = 12) -> str:
        """Midpoint to ``digits`` decimals, with an explicit half-width."""
        half = self.width / 2
        return f"{decimal_fixed(self.midpoint, digits)} ± {decimal_sci(half)}"

    def __str__(self) -> str:
        if self.is_point:
            return f"[{self.lo}]"
        return f"[{self.lo}, {self.hi}]"


def decimal_fixed(x: Fraction, digits: int) -> str:
    """Deterministic fixed-point decimal string (round half away from zero)."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = x * 10**digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    s = str(q).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}" if digits else f"{sign}{s}"


def decimal_sci(x: Fraction) -> str:
    """Two-significant-digit scientific string for a nonnegative rational."""
    if x < 0:
        raise ValueError("expected a nonnegative value")
    if x == 0:
        return "0"
    e = len(str(x.numerator)) - len(str(x.denominator))
    while x < Fraction(10) ** e:
        e -= 1
    while x >= Fraction(10) ** (e + 1):
        e += 1
    m = x / Fraction(10) ** e  # in [1, 10)
    n2_num = m * 10
    n2 = n2_num.numerator // n2_num.denominator
    if 2 * (n2_num.numerator - n2 * n2_num.denominator) >= n2_num.denominator:
        n2 += 1
    if n2 == 100:
        n2 = 10
        e += 1
    return f"{n2 // 10}.{n2 % 10}e{e:+d}"


# ---------------------------------------------------------------------------
# Exact combinatorics
# ---------------------------------------------------------------------------


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero when k > n."""
    if not isinstance(n, int) or not isinstance(k, int):
        raise DomainError("binom takes integers")
    if n < 0 or k < 0:
        raise DomainError("binom requires nonnegative arguments")
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Dyadic fixed-point internals (directed rounding)
# ---------------------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _scale_floor(x: Fraction, w: int) -> int:
    return (x.numerator << w) // x.denominator


def _scale_ceil(x: Fraction, w: int) -> int:
    return _ceil_div(x.numerator << w, x.denominator)


def _ge_pow2(num: int, den: int, e: int) -> bool:
    """num/den >= 2**e, by exact shifted comparison."""
    if e >= 0:
        return num >= (den << e)
    return (num << -e) >= den


def floor_log2(x: Fraction) -> int:
    """Exact floor of log2 for a positive rational."""
    if x <= 0:
        raise DomainError("floor_log2 requires a positive argument")
    num, den = x.numerator, x.denominator
    e = num.bit_length() - den.bit_length()
    while not _ge_pow2(num, den, e):
        e -= 1
    while _ge_pow2(num, den, e + 1):
        e += 1
    return e


def _atanh_dyadic(z: Fraction, w: int) -> Tuple[int, int]:
    """Dyadic interval for atanh(z) = sum z^(2k+1)/(2k+1), needs 0 <= z <= 1/2.

    Every multiplication and division rounds down on the lower track and up
    on the upper track; the dropped series tail is covered by one final ulp
    (the geometric tail is below half an ulp at the break point).
    """
    if z < 0 or 2 * z > 1:
        raise DomainError("series argument out of range")
    z_lo, z_hi = _scale_floor(z, w), _scale_ceil(z, w)
    zz_lo = (z_lo * z_lo) >> w
    zz_hi = _ceil_div(z_hi * z_hi, 1 << w)
    p_lo, p_hi = z_lo, z_hi
    s_lo = s_hi = 0
    k = 0
    while True:
        d = 2 * k + 1
        s_lo += p_lo // d
        s_hi += _ceil_div(p_hi, d)
        p_lo = (p_lo * zz_lo) >> w
        p_hi = _ceil_div(p_hi * zz_hi, 1 << w)
        k += 1
        # tail <= z^(2k+1)/((2k+1)(1-z^2)) <= 2*p_hi/(2k+1), one scaled ulp
        if 2 * p_hi < 2 * k + 1:
            s_hi += 1
            break
    return s_lo, s_hi


def _ln_dyadic(m: Fraction, w: int) -> Tuple[int, int]:
    """Dyadic interval for ln(m), m in [1, 2]:  ln(m) = 2*atanh((m-1)/(m+1))."""
    z = (m - 1) / (m + 1)
    lo, hi = _atanh_dyadic(z, w)
    return 2 * lo, 2 * hi


@lru_cache(maxsize=64)
def _ln2_dyadic(w: int) -> Tuple[int, int]:
    return _ln_dyadic(Fraction(2), w)


def _log2_dyadic(x: Fraction, w: int) -> Tuple[int, int, int]:
    """(e, lo, hi): log2(x) lies in [e + lo/2**w, e + hi/2**w]."""
    e = floor_log2(x)
    m = x / Fraction(2) ** e
    ln_lo, ln_hi = _ln_dyadic(m, w)
    l2_lo, l2_hi = _ln2_dyadic(w)
    lo = (ln_lo << w) // l2_hi
    hi = _ceil_div(ln_hi << w, l2_lo)
    return e, lo, hi


# ---------------------------------------------------------------------------
# Enclosure producers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _log2_enclosure_cached(x: Fraction, precision_bits: int) -> Enclosure:
    num, den = x.numerator, x.denominator
    if num & (num - 1) == 0 and den & (den - 1) == 0:
        # exact power of two
        return Enclosure.point(num.bit_length() - den.bit_length())
    w = precision_bits + 16
    target = Fraction(1, 1 << precision_bits)
    while True:
        e, lo, hi = _log2_dyadic(x, w)
        if Fraction(hi - lo, 1 << w) <= target:
            scale = Fraction(1, 1 << w)
            return Enclosure(e + lo * scale, e + hi * scale)
        w *= 2


def log2_enclosure(x: Rational, precision_bits: int = DEFAULT_PRECISION_BITS) -> Enclosure:
    """Enclosure of log2(x) for rational x > 0, width <= 2**-precision_bits.

    Exact point interval whenever x is a power of two (of either sign of
    exponent), e.g. log2(1/64) = [-6, -6].
    """
    x = _as_fraction(x)
    if x <= 0:
        raise DomainError(f"log2 requires a positive argument, got {x}")
    _check_precision(precision_bits)
    return _log2_enclosure_cached(x, precision_bits)


@lru_cache(maxsize=1 << 14)
def _entropy_enclosure_cached(x: Fraction, precision_bits: int) -> Enclosure:
    inner = precision_bits + 2
    lx = log2_enclosure(x, inner)
    ly = log2_enclosure(1 - x, inner)
    return lx * (-x) + ly * (x - 1)


def entropy_enclosure(x: Rational, precision_bits: int = DEFAULT_PRECISION_BITS) -> Enclosure:
    """Enclosure of the binary entropy H(x) = -x log2 x - (1-x) log2(1-x).

    H(0) = H(1) = 0 by the limit convention; the result is the exact point
    [1, 1] at x = 1/2 because log2(1/2) is exact.
    """
    x = _as_fraction(x)
    if not 0 <= x <= 1:
        raise DomainError(f"entropy requires 0 <= x <= 1, got {x}")
    _check_precision(precision_bits)
    if x == 0 or x == 1:
        return Enclosure.point(0)
    return _entropy_enclosure_cached(x, precision_bits)


def sqrt_enclosure(x: Rational, precision_bits: int = DEFAULT_PRECISION_BITS) -> Enclosure:
    """Enclosure of sqrt(x) for rational x >= 0; exact for perfect squares."""
    x = _as_fraction(x)
    if x < 0:
        raise DomainError(f"sqrt requires a nonnegative argument, got {x}")
    _check_precision(precision_bits)
    if x == 0:
        return Enclosure.point(0)
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Enclosure.point(Fraction(rn, rd))
    w = precision_bits + 8
    target = Fraction(1, 1 << precision_bits)
    while True:
        lo = math.isqrt((num << (2 * w)) // den)
        hi = math.isqrt(_ceil_div(num << (2 * w), den)) + 1
        scale = Fraction(1, 1 << w)
        if (hi - lo) * scale <= target:
            return Enclosure(lo * scale, hi * scale)
        w *= 2


def log2_e_enclosure(precision_bits: int = DEFAULT_PRECISION_BITS) -> Enclosure:
    """Enclosure of log2(e) = 1/ln(2), width <= 2**-precision_bits."""
    _check_precision(precision_bits)
    return _log2_e_cached(precision_bits)


@lru_cache(maxsize=64)
def _log2_e_cached(precision_bits: int) -> Enclosure:
    w = precision_bits + 16
    target = Fraction(1, 1 << precision_bits)
    while True:
        l2_lo, l2_hi = _ln2_dyadic(w)
        lo = (1 << (2 * w)) // l2_hi
        hi = _ceil_div(1 << (2 * w), l2_lo)
        scale = Fraction(1, 1 << w)
        if (hi - lo) * scale <= target:
            return Enclosure(lo * scale, hi * scale)
        w *= 2


# ---------------------------------------------------------------------------
# Certified comparison with precision escalation
# ---------------------------------------------------------------------------

Refiner = Callable[[int], Enclosure]


def certify_compare(
    a: Enclosure,
    b: Enclosure,
    refine: Optional[Tuple[Refiner, Refiner]] = None,
    max_bits: int = MAX_PRECISION_BITS,
    start_bits: int = DEFAULT_PRECISION_BITS,
) -> Certainty:
    """Certainty of the strict inequality a < b.

    Doubles the precision and re-derives both enclosures (intersecting with
    the previous round, so refinement can only shrink) until the endpoints
    separate or ``max_bits`` is exceeded.  Equal underlying values are never
    certified in either direction.
    """
    bits = start_bits
    while True:
        if a.certainly_lt(b):
            return Certainty.true()
        if b.certainly_lt(a):
            return Certainty.false()
        if refine is None:
            return Certainty.unresolved(bits)
        next_bits = bits * 2
        if next_bits > max_bits:
            return Certainty.unresolved(bits)
        bits = next_bits
        refine_a, refine_b = refine
        a = a.intersect(refine_a(bits))
        b = b.intersect(refine_b(bits))


def certify_less(
    make_a: Refiner,
    make_b: Refiner,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    max_bits: int = MAX_PRECISION_BITS,
) -> Certainty:
    """Certainty that the value enclosed by make_a is strictly below make_b's."""
    return certify_compare(
        make_a(precision_bits),
        make_b(precision_bits),
        refine=(make_a, make_b),
        max_bits=max_bits,
        start_bits=precision_bits,
    )


def certify_int_le(
    n: int,
    make_enc: Refiner,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    max_bits: int = MAX_PRECISION_BITS,
) -> Certainty:
    """Certainty of n <= v for the enclosed value v.

    Unlike :func:`certify_compare` the comparison is non-strict on the left:
    an exact point enclosure equal to n certifies true, which matters when
    the enclosed expression collapses to a rational.
    """
    bits = precision_bits
    enc = make_enc(bits)
    while True:
        if enc.lo >= n:
            return Certainty.true()
        if enc.hi < n:
            return Certainty.false()
        next_bits = bits * 2
        if next_bits > max_bits:
            return Certainty.unresolved(bits)
        bits = next_bits
        enc = enc.intersect(make_enc(bits))
