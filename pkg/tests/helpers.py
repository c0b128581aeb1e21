"""Shared test utilities: independent oracles and seeded generators.

The oracles here deliberately avoid the library's own algorithms: the log2
oracle extracts binary digits by exact rational squaring (long division of
the exponent), the binomial oracles use the product formula and the Pascal
recurrence, and the frame-proof oracle decides by full feasible-set
enumeration instead of membership tests.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Tuple

from fptrace.fpcode import Code, FeasibleDefinition, enumerate_feasible


def log2_bit_expansion(x: Fraction, bits: int) -> Tuple[Fraction, Fraction]:
    """Exact dyadic window [K/2^bits, (K+1)/2^bits] containing log2(x).

    Classic digit extraction: normalize x into [1, 2) tracking the integer
    exponent, then square; each squaring yields one fractional bit.  All
    arithmetic is exact rational arithmetic, so the window is exact; the
    cost doubles per bit, which keeps ``bits`` small.
    """
    if x <= 0:
        raise ValueError("positive rationals only")
    # raw numerator/denominator arithmetic: squaring and halving need no
    # normalization, and skipping Fraction's gcd keeps the doubling-size
    # integers cheap
    num, den = x.numerator, x.denominator
    e = 0
    while num < den:
        num <<= 1
        e -= 1
    while num >= 2 * den:
        den <<= 1
        e += 1
    frac = 0
    for _ in range(bits):
        num *= num
        den *= den
        frac <<= 1
        if num >= 2 * den:
            frac |= 1
            den <<= 1
    scale = Fraction(1, 2**bits)
    return e + frac * scale, e + (frac + 1) * scale


def binom_product(n: int, k: int) -> int:
    """Product-formula binomial: prod(n-i, i<k) / k!."""
    if k < 0 or n < 0:
        raise ValueError
    if k > n:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    den = 1
    for i in range(1, k + 1):
        den *= i
    assert num % den == 0
    return num // den


def pascal_table(n_max: int):
    """Full Pascal triangle up to row n_max, by the additive recurrence."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [1]
        for k in range(1, n):
            row.append(prev[k - 1] + prev[k])
        row.append(1)
        rows.append(row)
    return rows


def random_code(rng: random.Random, n_max: int = 4, l_max: int = 8, s: int = 2) -> Code:
    """Uniform-ish random code with 2..n_max distinct words of length 1..l_max."""
    length = rng.randint(1, l_max)
    n_target = rng.randint(2, n_max)
    words = set()
    attempts = 0
    while len(words) < n_target and attempts < 200:
        words.add(tuple(rng.randrange(s) for _ in range(length)))
        attempts += 1
    return Code(tuple(sorted(words)), s)


def frameproof_by_enumeration(code: Code, c: int, definition: FeasibleDefinition) -> bool:
    """Frame-proof oracle: materialize every coalition's feasible set."""
    n = code.n
    for size in range(1, min(c, n) + 1):
        for coalition in itertools.combinations(range(n), size):
            feasible = enumerate_feasible(code, coalition, definition)
            for x in range(n):
                if x not in coalition and code.codewords[x] in feasible:
                    return False
    return True
