"""Fixed-length codes, coalition feasible sets, and frame-proof verification.

Two definitions of a coalition's feasible (descendant) set circulate:

* unanimity: positions where all coalition codewords agree are pinned to the
  shared symbol; every other position may take any alphabet symbol.
* coordinate-set: each position may take exactly the symbols that some
  coalition codeword shows there.

The coordinate-set feasible set is always contained in the unanimity one and
the two coincide over a binary alphabet, where a disagreeing position already
realizes both symbols.  A code is c-frame-proof when no coalition of at most
c codeword holders has another user's codeword inside its feasible set.

Verification is exact: coalitions are enumerated in ascending size and
lexicographic order within a size, so a reported witness is deterministic.
Words are tuples of symbols with position 0 leftmost in the textual format.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from math import comb, prod
from typing import Iterable, Optional, Sequence, Tuple

from .rigor import DomainError

Word = Tuple[int, ...]

MAX_ALPHABET = 16
ENUMERATION_LIMIT = 1 << 20
DEFAULT_STEP_BUDGET = 10**9

_SYMBOLS = "0123456789abcdef"


class BudgetExceededError(RuntimeError):
    """The requested exact verification exceeds its step budget."""


class CodeFormatError(ValueError):
    """Malformed code file; the message names the offending line."""


class FeasibleDefinition(Enum):
    UNANIMITY = "unanimity"
    COORDINATE_SET = "coordset"


@dataclass(frozen=True)
class Code:
    """A code: n distinct words of equal length over the alphabet 0..s-1."""

    codewords: Tuple[Word, ...]
    s: int = 2

    def __post_init__(self):
        object.__setattr__(self, "codewords", tuple(tuple(w) for w in self.codewords))
        if not self.codewords:
            raise DomainError("a code needs at least one codeword")
        if not 2 <= self.s <= MAX_ALPHABET:
            raise DomainError(f"alphabet size must be in [2, {MAX_ALPHABET}]")
        length = len(self.codewords[0])
        if length < 1:
            raise DomainError("codewords must be nonempty")
        for w in self.codewords:
            if len(w) != length:
                raise DomainError("codewords must all have the same length")
            for sym in w:
                if not 0 <= sym < self.s:
                    raise DomainError(f"symbol {sym} outside alphabet of size {self.s}")
        if len(set(self.codewords)) != len(self.codewords):
            raise DomainError("codewords must be pairwise distinct")

    @classmethod
    def from_strings(cls, rows: Iterable[str], s: Optional[int] = None) -> "Code":
        words = tuple(tuple(int(ch, 16) for ch in row) for row in rows)
        if s is None:
            s = max(2, max((sym for w in words for sym in w), default=0) + 1)
        return cls(words, s)

    @property
    def n(self) -> int:
        return len(self.codewords)

    @property
    def length(self) -> int:
        return len(self.codewords[0])

    def __repr__(self) -> str:
        return f"Code(n={self.n}, l={self.length}, s={self.s})"


@dataclass(frozen=True)
class FeasiblePattern:
    """Per-position symbol constraints describing a coalition's feasible set."""

    allowed: Tuple[frozenset, ...]
    s: int
    definition: FeasibleDefinition

    @property
    def length(self) -> int:
        return len(self.allowed)

    def is_fixed(self, position: int) -> bool:
        return len(self.allowed[position]) == 1

    def size(self) -> int:
        """Number of words in the feasible set."""
        return prod(len(a) for a in self.allowed)

    def constraint_str(self) -> str:
        """Fixed symbol per position, '*' where more than one symbol fits."""
        return "".join(
            _SYMBOLS[next(iter(a))] if len(a) == 1 else "*" for a in self.allowed
        )


@dataclass(frozen=True)
class FrameWitness:
    coalition: Tuple[int, ...]
    framed: int


@dataclass(frozen=True)
class FrameproofVerdict:
    is_frameproof: bool
    witness: Optional[FrameWitness] = None


def _coalition_indices(code: Code, coalition: Iterable[int]) -> Tuple[int, ...]:
    idxs = tuple(sorted(set(coalition)))
    if not idxs:
        raise DomainError("coalition must be nonempty")
    if idxs[0] < 0 or idxs[-1] >= code.n:
        raise DomainError(f"coalition indices must lie in [0, {code.n - 1}]")
    return idxs


def feasible_pattern(
    code: Code,
    coalition: Iterable[int],
    definition: FeasibleDefinition = FeasibleDefinition.UNANIMITY,
) -> FeasiblePattern:
    """Constraint record for the words a coalition can assemble."""
    idxs = _coalition_indices(code, coalition)
    rows = [code.codewords[i] for i in idxs]
    full = frozenset(range(code.s))
    allowed = []
    for position in range(code.length):
        seen = frozenset(row[position] for row in rows)
        if definition is FeasibleDefinition.UNANIMITY and len(seen) > 1:
            allowed.append(full)
        else:
            allowed.append(seen)
    return FeasiblePattern(tuple(allowed), code.s, definition)


def feasible_contains(pattern: FeasiblePattern, word: Sequence[int]) -> bool:
    """Whether a word satisfies every per-position constraint."""
    if len(word) != pattern.length:
        raise DomainError(
            f"word length {len(word)} does not match pattern length {pattern.length}"
        )
    return all(sym in allowed for sym, allowed in zip(word, pattern.allowed))


def enumerate_feasible(
    code: Code,
    coalition: Iterable[int],
    definition: FeasibleDefinition = FeasibleDefinition.UNANIMITY,
    limit: int = ENUMERATION_LIMIT,
) -> set:
    """The full feasible set, as a set of words.  Brute-force oracle for
    :func:`feasible_contains`; guarded by ``limit`` on the set size."""
    pattern = feasible_pattern(code, coalition, definition)
    total = pattern.size()
    if total > limit:
        raise BudgetExceededError(f"feasible set has {total} words, limit is {limit}")
    choices = [sorted(a) for a in pattern.allowed]
    return set(itertools.product(*choices))


def is_frameproof(
    code: Code,
    c: int,
    definition: FeasibleDefinition = FeasibleDefinition.UNANIMITY,
    budget: int = DEFAULT_STEP_BUDGET,
) -> FrameproofVerdict:
    """Exact verdict: can any coalition of size <= c frame an outside user?

    Coalitions are checked in ascending size, lexicographically within each
    size, and the first violation found is returned as the witness.
    """
    if c < 1:
        raise DomainError("coalition bound c must be >= 1")
    n, length = code.n, code.length
    top = min(c, n)
    cost = sum(comb(n, j) for j in range(1, top + 1)) * n * length
    if cost > budget:
        raise BudgetExceededError(
            f"exact verification needs ~{cost} steps, budget is {budget}"
        )
    for size in range(1, top + 1):
        for coalition in itertools.combinations(range(n), size):
            pattern = feasible_pattern(code, coalition, definition)
            members = set(coalition)
            for x in range(n):
                if x in members:
                    continue
                if feasible_contains(pattern, code.codewords[x]):
                    return FrameproofVerdict(False, FrameWitness(coalition, x))
    return FrameproofVerdict(True)


def construct_identity_concat(
    m: int, ones: int, zeros: int, copies: int = 1
) -> Code:
    """Binary code of m words: ``copies`` identity blocks, then ``ones``
    all-one columns, then ``zeros`` all-zero columns.

    Every codeword has weight copies + ones; any two codewords differ in two
    positions per identity block, so the minimum distance is 2 * copies.
    """
    if m < 2:
        raise DomainError("identity construction needs m >= 2")
    if copies < 1:
        raise DomainError("copies must be >= 1")
    if ones < 0 or zeros < 0:
        raise DomainError("column counts must be nonnegative")
    rows = []
    for i in range(m):
        block = tuple(1 if j == i else 0 for j in range(m))
        rows.append(block * copies + (1,) * ones + (0,) * zeros)
    return Code(tuple(rows), 2)


def min_distance(code: Code) -> int:
    """Exact minimum pairwise Hamming distance; needs n >= 2."""
    if code.n < 2:
        raise DomainError("minimum distance needs at least two codewords")
    best = code.length
    for u, v in itertools.combinations(code.codewords, 2):
        d = sum(a != b for a, b in zip(u, v))
        if d < best:
            best = d
    return best


def weight_set(code: Code) -> set:
    """Set of Hamming weights; a singleton means the code is constant-weight."""
    return {sum(sym != 0 for sym in w) for w in code.codewords}


# ---------------------------------------------------------------------------
# Text format: one word per line, '#' comments, position 0 leftmost
# ---------------------------------------------------------------------------


def parse_code(text: str, s: Optional[int] = None) -> Code:
    """Parse the code file format.

    Lines hold equal-length words of symbols 0..s-1 (hex digits for s > 10);
    '#' starts a comment and blank lines are ignored.  When ``s`` is omitted
    it is inferred as one more than the largest symbol present (minimum 2).
    """
    rows = []
    length = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        symbols = []
        for ch in line:
            if ch.lower() not in _SYMBOLS:
                raise CodeFormatError(f"line {lineno}: invalid symbol {ch!r}")
            symbols.append(int(ch, 16))
        if length is None:
            length = len(symbols)
        elif len(symbols) != length:
            raise CodeFormatError(
                f"line {lineno}: length {len(symbols)} differs from previous {length}"
            )
        if s is not None:
            for sym in symbols:
                if sym >= s:
                    raise CodeFormatError(
                        f"line {lineno}: symbol {sym} outside alphabet of size {s}"
                    )
        rows.append(tuple(symbols))
    if not rows:
        raise CodeFormatError("no codewords found")
    if s is None:
        s = max(2, max(max(w) for w in rows) + 1)
    try:
        return Code(tuple(rows), s)
    except DomainError as exc:
        raise CodeFormatError(str(exc)) from exc


def format_code(code: Code) -> str:
    """Inverse of :func:`parse_code` (for codes that use their top symbol)."""
    lines = [f"# code: n={code.n} l={code.length} s={code.s}"]
    lines.extend("".join(_SYMBOLS[sym] for sym in w) for w in code.codewords)
    return "\n".join(lines) + "\n"
