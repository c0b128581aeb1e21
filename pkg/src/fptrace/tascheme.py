"""Key-based traceability schemes and their verification.

A scheme assigns each of n decoders a distinct k-subset of a base key set of
size l.  A coalition of decoder holders can assemble a pirate decoder from
any k keys drawn from the union of their key sets.  Tracing accuses the
decoder(s) sharing the most keys with the pirate; the scheme is c-traceable
when, for every coalition of size at most c and every pirate it can build,
every maximum-overlap decoder belongs to the coalition.  A tie with an
outsider already defeats tracing under this (conservative) rule.

Three verifiers are provided: exhaustive enumeration (exact, step-budgeted),
a structural proof for pairwise-disjoint decoders (a pirate's k keys force
some member overlap of at least ceil(k/c) >= 1 while every outsider overlaps
0), and seeded Monte-Carlo falsification for instances too large to exhaust.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Optional, Tuple

from .rigor import Certainty, DomainError, binom

DEFAULT_STEP_BUDGET = 10**9


class SchemeFormatError(ValueError):
    """Malformed scheme file; the message names the offending line."""


@dataclass(frozen=True)
class KeyScheme:
    """n distinct decoders, each a k-subset of the keys 0..l-1."""

    l: int
    decoders: Tuple[frozenset, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "decoders", tuple(frozenset(d) for d in self.decoders)
        )
        if self.l < 1:
            raise DomainError("key count l must be >= 1")
        if not self.decoders:
            raise DomainError("a scheme needs at least one decoder")
        k = len(self.decoders[0])
        if k < 1:
            raise DomainError("decoders must be nonempty")
        for d in self.decoders:
            if len(d) != k:
                raise DomainError("decoders must all contain the same number of keys")
            for key in d:
                if not 0 <= key < self.l:
                    raise DomainError(f"key {key} outside [0, {self.l - 1}]")
        if len(set(self.decoders)) != len(self.decoders):
            raise DomainError("decoders must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.decoders)

    @property
    def k(self) -> int:
        return len(self.decoders[0])

    @cached_property
    def _masks(self) -> Tuple[int, ...]:
        out = []
        for d in self.decoders:
            m = 0
            for key in d:
                m |= 1 << key
            out.append(m)
        return tuple(out)

    def decoder_lists(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(d)) for d in self.decoders)

    def __repr__(self) -> str:
        return f"KeyScheme(l={self.l}, n={self.n}, k={self.k})"


@dataclass(frozen=True)
class TraceResult:
    max_overlap: int
    argmax_decoders: Tuple[int, ...]


@dataclass(frozen=True)
class TAWitness:
    coalition: Tuple[int, ...]
    pirate: Tuple[int, ...]
    outsider: int


@dataclass(frozen=True)
class TAVerdict:
    verdict: Certainty
    witness: Optional[TAWitness] = None
    detail: str = ""


def _pirate_mask(scheme: KeyScheme, pirate: Iterable[int]) -> int:
    mask = 0
    for key in pirate:
        if not 0 <= key < scheme.l:
            raise DomainError(f"pirate key {key} outside [0, {scheme.l - 1}]")
        mask |= 1 << key
    if mask == 0:
        raise DomainError("pirate key set must be nonempty")
    return mask


def trace(scheme: KeyScheme, pirate: Iterable[int]) -> TraceResult:
    """Maximum-overlap accusation: all decoders sharing the most keys."""
    pmask = _pirate_mask(scheme, pirate)
    overlaps = [(pmask & dm).bit_count() for dm in scheme._masks]
    best = max(overlaps)
    argmax = tuple(i for i, o in enumerate(overlaps) if o == best)
    return TraceResult(best, argmax)


def _trace_violation(scheme: KeyScheme, coalition: Tuple[int, ...], pirate) -> Optional[int]:
    """Smallest outsider decoder attaining the maximum overlap, if any."""
    result = trace(scheme, pirate)
    members = set(coalition)
    for i in result.argmax_decoders:
        if i not in members:
            return i
    return None


def is_traceable_exact(
    scheme: KeyScheme, c: int, budget: int = DEFAULT_STEP_BUDGET
) -> TAVerdict:
    """Exhaustive verdict over every coalition of size <= c and every
    k-subset pirate from the coalition's key union.

    Enumeration is ascending in coalition size and lexicographic within, so
    the first witness is deterministic.  Instances whose step estimate
    exceeds ``budget`` return Unresolved instead of running forever.
    """
    if c < 1:
        raise DomainError("coalition bound c must be >= 1")
    n, k, l = scheme.n, scheme.k, scheme.l
    top = min(c, n)
    estimate = sum(
        comb(n, j) * comb(min(j * k, l), k) * n for j in range(1, top + 1)
    )
    if estimate > budget:
        return TAVerdict(
            Certainty.unresolved(),
            detail=f"step estimate {estimate} exceeds budget {budget}",
        )
    for size in range(1, top + 1):
        for coalition in itertools.combinations(range(n), size):
            union = sorted(frozenset().union(*(scheme.decoders[i] for i in coalition)))
            for pirate in itertools.combinations(union, k):
                outsider = _trace_violation(scheme, coalition, pirate)
                if outsider is not None:
                    return TAVerdict(
                        Certainty.false(),
                        TAWitness(coalition, pirate, outsider),
                        detail="exhaustive search found a tracing violation",
                    )
    return TAVerdict(Certainty.true(), detail="exhaustive search found no violation")


def is_traceable_structural_disjoint(scheme: KeyScheme, c: int) -> TAVerdict:
    """Structural verdict for pairwise-disjoint decoders.

    Any pirate's k keys come from at most c member decoders, so some member
    overlaps at least ceil(k/c) >= 1, while disjointness gives every outsider
    overlap 0.  The argument does not depend on c, so any c >= 1 certifies.
    """
    if c < 1:
        raise DomainError("coalition bound c must be >= 1")
    for i, j in itertools.combinations(range(scheme.n), 2):
        shared = scheme.decoders[i] & scheme.decoders[j]
        if shared:
            raise DomainError(
                f"decoders {i} and {j} share key {min(shared)}; "
                "the structural argument needs pairwise-disjoint decoders"
            )
    return TAVerdict(
        Certainty.true(),
        detail="pairwise-disjoint decoders: outsiders overlap 0, "
        "some member overlaps >= ceil(k/c) >= 1",
    )


def sample_traceability(
    scheme: KeyScheme, c: int, trials: int, seed: int
) -> TAVerdict:
    """Seeded Monte-Carlo falsifier.

    Per trial, drawing from one ``random.Random(seed)`` stream in a fixed
    order: coalition size uniform in [2, min(c, n)], then a uniform coalition
    of that size, then a uniform k-subset of the coalition's key union.  Any
    violation is re-checked by a direct :func:`trace` call before being
    emitted.  Sampling can only certify falsehood; with no violation found
    the verdict stays Unresolved.
    """
    if c < 1:
        raise DomainError("coalition bound c must be >= 1")
    if trials < 0:
        raise DomainError("trials must be nonnegative")
    n, k = scheme.n, scheme.k
    top = min(c, n)
    if trials == 0 or top < 2:
        return TAVerdict(
            Certainty.unresolved(), detail="0 violations in 0 effective trials"
        )
    rng = random.Random(seed)
    union_cache: dict = {}
    for t in range(trials):
        size = rng.randint(2, top)
        coalition = tuple(sorted(rng.sample(range(n), size)))
        union = union_cache.get(coalition)
        if union is None:
            union = sorted(frozenset().union(*(scheme.decoders[i] for i in coalition)))
            union_cache[coalition] = union
        pirate = tuple(sorted(rng.sample(union, k)))
        outsider = _trace_violation(scheme, coalition, pirate)
        if outsider is not None:
            recheck = trace(scheme, pirate)
            assert outsider in recheck.argmax_decoders
            return TAVerdict(
                Certainty.false(),
                TAWitness(coalition, pirate, outsider),
                detail=f"violation at trial {t} of {trials} (seed {seed})",
            )
    return TAVerdict(
        Certainty.unresolved(),
        detail=f"0 violations in {trials} trials (seed {seed})",
    )


def make_disjoint_scheme(l: int, n: int, k: int) -> KeyScheme:
    """Scheme whose decoder i holds keys i*k .. i*k + k - 1; needs n*k <= l."""
    if n < 1 or k < 1:
        raise DomainError("need n >= 1 and k >= 1")
    if n * k > l:
        raise DomainError(f"disjoint scheme needs n*k <= l, got {n * k} > {l}")
    decoders = tuple(frozenset(range(i * k, (i + 1) * k)) for i in range(n))
    return KeyScheme(l, decoders)


# ---------------------------------------------------------------------------
# Decoder-count upper bound for c-traceability
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SWBoundReport:
    """n <= C(l, t) / C(k-1, t-1) with t = ceil(k/c), evaluated exactly."""

    t: int
    numerator: int
    denominator: int
    value: Fraction


def sw_upper_bound(l: int, k: int, c: int) -> SWBoundReport:
    """Exact evaluation of the decoder-count upper bound."""
    if c < 1:
        raise DomainError("c must be >= 1")
    if k < 1 or k > l:
        raise DomainError("need 1 <= k <= l")
    t = -(-k // c)
    numerator = binom(l, t)
    denominator = binom(k - 1, t - 1)
    return SWBoundReport(t, numerator, denominator, Fraction(numerator, denominator))


# ---------------------------------------------------------------------------
# Text format: header "l n k", then one sorted decoder per line
# ---------------------------------------------------------------------------


def parse_scheme(text: str) -> KeyScheme:
    """Parse the scheme file format.

    First non-comment line is "l n k"; then n lines each listing k strictly
    increasing 0-based key indices.  '#' starts a comment.
    """
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise SchemeFormatError(f"line {lineno}: expected integers") from None
        if header is None:
            if len(values) != 3:
                raise SchemeFormatError(f"line {lineno}: header must be 'l n k'")
            header = (lineno, values)
            continue
        rows.append((lineno, values))
    if header is None:
        raise SchemeFormatError("missing 'l n k' header line")
    l, n, k = header[1]
    if len(rows) != n:
        raise SchemeFormatError(f"expected {n} decoder lines, found {len(rows)}")
    decoders = []
    for lineno, values in rows:
        if len(values) != k:
            raise SchemeFormatError(f"line {lineno}: expected {k} keys, found {len(values)}")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise SchemeFormatError(f"line {lineno}: keys must be strictly increasing")
        decoders.append(frozenset(values))
    try:
        return KeyScheme(l, tuple(decoders))
    except DomainError as exc:
        raise SchemeFormatError(str(exc)) from exc


def format_scheme(scheme: KeyScheme) -> str:
    """Inverse of :func:`parse_scheme`."""
    lines = [f"# scheme: l={scheme.l} n={scheme.n} k={scheme.k}"]
    lines.append(f"{scheme.l} {scheme.n} {scheme.k}")
    lines.extend(" ".join(str(key) for key in d) for d in scheme.decoder_lists())
    return "\n".join(lines) + "\n"
