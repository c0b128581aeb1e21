"""Certified evaluation of contested codeword/decoder-count bounds.

Two claimed lower bounds of the form n > q^(1-delta) * 2^((H(1/c)-sigma)*l)
(with c squared inside the entropy for the traceability variant) are
evaluated as base-2 logarithm enclosures and compared against established
upper bounds: n <= c*(s^ceil(l/c) - 1) for c-frame-proof codes and
n <= C(l,t)/C(k-1,t-1), t = ceil(k/c), for c-traceability schemes.

A contradiction is certified when the upper bound's log2 enclosure lies
strictly below the lower bound's, which is exactly the shape of the
"upper < lower" refutation: parameters satisfying all stated hypotheses
whose claimed lower bound exceeds a proven upper bound.

The sigma constraint, log(l)/l < sigma and l > (13 + sqrt(169 + 48*sigma))
/ (12*sigma), is checked with certified enclosures; reports evaluate the
bounds even when it fails and flag ``sigma_ok`` accordingly so the
parameter space can be explored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .rigor import (
    Certainty,
    DomainError,
    Enclosure,
    DEFAULT_PRECISION_BITS,
    certainty_all,
    certify_compare,
    certify_less,
    entropy_enclosure,
    log2_enclosure,
    sqrt_enclosure,
)
from .tascheme import SWBoundReport, sw_upper_bound

PRIME_POWER_LIMIT = 1 << 32


def is_prime_power(q: int) -> bool:
    """Trial-factorization prime-power test for 1 < q <= 2**32."""
    if not isinstance(q, int):
        raise DomainError("q must be an integer")
    if q > PRIME_POWER_LIMIT:
        raise DomainError(f"prime-power check supports q <= {PRIME_POWER_LIMIT}")
    if q < 2:
        return False
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1 if d == 2 else 2
    if p is None:
        return True
    while q % p == 0:
        q //= p
    return q == 1


def _validate_common(q: int, delta: int, c: int, sigma: Fraction, l: int) -> None:
    if not is_prime_power(q):
        raise DomainError(f"q = {q} is not a prime power")
    if delta < 1:
        raise DomainError("delta must be >= 1")
    if c < 2:
        raise DomainError("c must be >= 2")
    if sigma <= 0:
        raise DomainError("sigma must be positive")
    if l < 1:
        raise DomainError("l must be >= 1")
    if l > q:
        raise DomainError(f"the hypotheses require l <= q, got l={l} > q={q}")


@dataclass(frozen=True)
class Thm6Params:
    """Frame-proof setting: constant weight w with c = l/w and l <= q."""

    q: int
    delta: int
    c: int
    sigma: Fraction
    l: int
    w: int

    def __post_init__(self):
        object.__setattr__(self, "sigma", Fraction(self.sigma))
        _validate_common(self.q, self.delta, self.c, self.sigma, self.l)
        if self.w < 1:
            raise DomainError("w must be >= 1")
        if self.c * self.w != self.l:
            raise DomainError(
                f"the relation c = l/w fails: {self.c} * {self.w} != {self.l}"
            )


@dataclass(frozen=True)
class Thm7Params:
    """Traceability setting: k keys per decoder with c^2 = 2l/k and l <= q."""

    q: int
    delta: int
    c: int
    sigma: Fraction
    l: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sigma", Fraction(self.sigma))
        _validate_common(self.q, self.delta, self.c, self.sigma, self.l)
        if self.k < 1:
            raise DomainError("k must be >= 1")
        if self.c * self.c * self.k != 2 * self.l:
            raise DomainError(
                f"the relation c^2 = 2l/k fails: {self.c}^2 * {self.k} != 2 * {self.l}"
            )


def sigma_constraint(
    l: int, sigma: Union[int, Fraction, str], precision_bits: int = DEFAULT_PRECISION_BITS
) -> Certainty:
    """Certify log2(l)/l < sigma and l > (13 + sqrt(169 + 48*sigma))/(12*sigma)."""
    sigma = Fraction(sigma)
    if sigma <= 0:
        raise DomainError("sigma must be positive")
    if l < 1:
        raise DomainError("l must be >= 1")
    first = certify_less(
        lambda bits: log2_enclosure(l, bits),
        lambda bits: Enclosure.point(sigma * l),
        precision_bits,
    )
    radicand = Fraction(169) + 48 * sigma
    second = certify_less(
        lambda bits: (sqrt_enclosure(radicand, bits) + 13) / (12 * sigma),
        lambda bits: Enclosure.point(l),
        precision_bits,
    )
    return certainty_all(first, second)


def thm6_lower(p: Thm6Params, precision_bits: int = DEFAULT_PRECISION_BITS) -> Enclosure:
    """log2 of the claimed frame-proof lower bound:
    (H(1/c) - sigma)*l - (delta-1)*log2(q).

    Exact point enclosure when c = 2 and q is a power of two, since
    H(1/2) = 1 is exact.
    """
    return _lower_log2(p.q, p.delta, Fraction(1, p.c), p.sigma, p.l, precision_bits)


def thm7_lower(p: Thm7Params, precision_bits: int = DEFAULT_PRECISION_BITS) -> Enclosure:
    """log2 of the claimed traceability lower bound; entropy argument 1/c^2."""
    return _lower_log2(
        p.q, p.delta, Fraction(1, p.c * p.c), p.sigma, p.l, precision_bits
    )


def _lower_log2(
    q: int, delta: int, x: Fraction, sigma: Fraction, l: int, precision_bits: int
) -> Enclosure:
    inner = precision_bits + l.bit_length() + delta.bit_length() + 4
    h = entropy_enclosure(x, inner)
    lq = log2_enclosure(q, inner)
    return (h - sigma) * l - lq * (delta - 1)


def ssw_upper(l: int, c: int, s: int = 2) -> int:
    """Exact codeword-count upper bound c * (s^ceil(l/c) - 1)."""
    if s < 2:
        raise DomainError("alphabet size s must be >= 2")
    if c < 1:
        raise DomainError("c must be >= 1")
    if l < 1:
        raise DomainError("l must be >= 1")
    return c * (s ** (-(-l // c)) - 1)


def rejected_upper_bound_variant(l: int, c: int, s: int = 2) -> int:
    """Reference only: the variant bound s^ceil(l/c) + 2c - 2.

    Recorded because it circulates alongside the bound used here, but it is
    not sound for c-frame-proof codes, so no contradiction logic consumes it.
    """
    return s ** (-(-l // c)) + 2 * c - 2


@dataclass(frozen=True)
class BoundReport:
    """Side-by-side certified comparison of a claimed lower bound and a
    proven upper bound, in log2 space."""

    theorem: str
    params: Union[Thm6Params, Thm7Params]
    lower_log2: Enclosure
    upper_log2: Enclosure
    upper_exact: Fraction
    sigma_certainty: Certainty
    contradiction: Certainty
    s: Optional[int] = None
    sw_detail: Optional[SWBoundReport] = None

    @property
    def sigma_ok(self) -> bool:
        return self.sigma_certainty.is_true


def contradiction_report_thm6(
    p: Thm6Params, s: int = 2, precision_bits: int = DEFAULT_PRECISION_BITS
) -> BoundReport:
    """Certify (or refute) upper < lower for the frame-proof setting."""
    sigma_cert = sigma_constraint(p.l, p.sigma, precision_bits)
    upper_exact = Fraction(ssw_upper(p.l, p.c, s))

    def make_lower(bits: int) -> Enclosure:
        return thm6_lower(p, bits)

    def make_upper(bits: int) -> Enclosure:
        return log2_enclosure(upper_exact, bits)

    contradiction = certify_compare(
        make_upper(precision_bits),
        make_lower(precision_bits),
        refine=(make_upper, make_lower),
        start_bits=precision_bits,
    )
    return BoundReport(
        theorem="thm6",
        params=p,
        lower_log2=make_lower(precision_bits),
        upper_log2=make_upper(precision_bits),
        upper_exact=upper_exact,
        sigma_certainty=sigma_cert,
        contradiction=contradiction,
        s=s,
    )


def contradiction_report_thm7(
    p: Thm7Params, precision_bits: int = DEFAULT_PRECISION_BITS
) -> BoundReport:
    """Certify (or refute) upper < lower for the traceability setting."""
    sigma_cert = sigma_constraint(p.l, p.sigma, precision_bits)
    sw = sw_upper_bound(p.l, p.k, p.c)

    def make_lower(bits: int) -> Enclosure:
        return thm7_lower(p, bits)

    def make_upper(bits: int) -> Enclosure:
        return log2_enclosure(sw.value, bits)

    contradiction = certify_compare(
        make_upper(precision_bits),
        make_lower(precision_bits),
        refine=(make_upper, make_lower),
        start_bits=precision_bits,
    )
    return BoundReport(
        theorem="thm7",
        params=p,
        lower_log2=make_lower(precision_bits),
        upper_log2=make_upper(precision_bits),
        upper_exact=sw.value,
        sigma_certainty=sigma_cert,
        contradiction=contradiction,
        sw_detail=sw,
    )
