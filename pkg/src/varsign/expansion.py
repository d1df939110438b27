"""Digit words, exact prefix evaluation, and certified tail enclosures.

A digit word d_1..d_n picks one digit per position. Its exact partial value
is

    sum_k  term_sign(k) * weight(d_k, k) * product_{j<k} entry(d_j, j)

and the values of all infinite continuations fill a closed interval around
it. The continuation interval is certified by two nonnegative tail sums, one
per direction, built from the extremal (weight, entry) pairs: the tail at
position n sums a~_t * prod q~ over t > n. Tails are computed by the backward
recursion R(t) = a~_t + q~_t * R(t+1) from a seed enclosure past the
truncation depth; the seed is [0, 1] in general (giving the telescoping
remainder bound, width <= prod of extremal entries) and an exact point when
the structure beyond the depth is fully known (no contributing positions,
all-singleton columns, all-contributing with a vanishing product, or an
eventually periodic pattern solved by its fixed point).

All of this presumes a system whose columns validate; tails of invalid
systems are meaningless.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParameterError
from .numerics import Enclosure, ONE, ZERO
from .system import DigitSystem

DEFAULT_DEPTH = 40

_LOW = "low"
_HIGH = "high"


# ---------------------------------------------------------------------------
# Digit words


@dataclass(frozen=True)
class DigitWord:
    """A finite digit choice d_1..d_n bound to its system; may be empty."""

    system: DigitSystem
    digits: tuple

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        for pos, d in enumerate(self.digits, 1):
            if not self.system.digit_valid(d, pos):
                raise DomainError(f"digit {d} invalid at position {pos}")

    def __len__(self):
        return len(self.digits)

    @property
    def rank(self) -> int:
        return len(self.digits)

    def child(self, digit: int) -> "DigitWord":
        return DigitWord(self.system, self.digits + (digit,))

    def prefix(self, length: int) -> "DigitWord":
        return DigitWord(self.system, self.digits[:length])


def word(system: DigitSystem, digits) -> DigitWord:
    return DigitWord(system, tuple(digits))


# ---------------------------------------------------------------------------
# Exact evaluation (two independent routes)


def eval_prefix(w: DigitWord) -> Fraction:
    """Signed sum of digit weights times running entry products."""
    sys = w.system
    total = ZERO
    weight = ONE
    for pos, d in enumerate(w.digits, 1):
        col = sys.column(pos)
        total += sys.term_sign(pos) * col.weight(d) * weight
        weight *= col.entry(d)
    return total


def prefix_weight(w: DigitWord) -> Fraction:
    """Product of the chosen entries over the word (1 for the empty word)."""
    sys = w.system
    weight = ONE
    for pos, d in enumerate(w.digits, 1):
        weight *= sys.column(pos).entry(d)
    return weight


def eval_signed_product(w: DigitWord) -> Fraction:
    """Same value by the signed-column route: per-entry signed sums times
    signed running products. Must agree with eval_prefix exactly; the two
    routes share no sign logic."""
    sys = w.system
    total = ZERO
    signed_weight = ONE
    for pos, d in enumerate(w.digits, 1):
        cs = sys.column_sign(pos)
        col = sys.column(pos)
        step = ZERO
        for i in range(d):
            step += cs * col.entry(i)
        total += step * signed_weight
        signed_weight *= cs * col.entry(d)
    return total


# ---------------------------------------------------------------------------
# Tail enclosures


def _extremal(sys: DigitSystem, t: int, side: str) -> tuple:
    if side == _LOW:
        return sys.extremal_low(t)
    return sys.extremal_high(t)


def _tail_seed(sys: DigitSystem, depth: int, side: str) -> Enclosure:
    """Enclosure of the tail starting at position depth+1."""
    signs = sys.signs
    cols = sys.columns
    if side == _LOW:
        contributors_beyond = signs.has_members_beyond(depth)
        others_beyond = signs.has_nonmembers_beyond(depth)
    else:
        contributors_beyond = signs.has_nonmembers_beyond(depth)
        others_beyond = signs.has_members_beyond(depth)

    if not contributors_beyond:
        return Enclosure.point(0)
    if cols.all_singleton_beyond(depth):
        # Forced digits contribute weight 0 with entry 1: the tail is empty.
        return Enclosure.point(0)
    if not others_beyond and cols.claims_vanishing_product():
        # Every later position contributes 1 - entry; the sum telescopes to
        # 1 minus a vanishing product.
        return Enclosure.point(1)

    per = cols.periodicity()
    if per is not None:
        pre = max(per[0], signs.periodicity()[0])
        period = math.lcm(per[1], signs.periodicity()[1])
        if depth >= pre:
            partial = ZERO
            running = ONE
            for t in range(depth + 1, depth + period + 1):
                a, q = _extremal(sys, t, side)
                partial += running * a
                running *= q
            if running < 1:
                # R = partial + running * R over one period.
                return Enclosure.point(partial / (1 - running))
            if partial == 0:
                return Enclosure.point(0)

    return Enclosure(ZERO, ONE)


def _tail_magnitude(sys: DigitSystem, n: int, depth: int, side: str) -> Enclosure:
    """Enclosure of the nonnegative tail sum over positions > n."""
    memo = sys._tail_memo
    key = (side, n, depth)
    hit = memo.get(key)
    if hit is not None:
        return hit
    enc = _tail_seed(sys, depth, side)
    memo[(side, depth, depth)] = enc
    for t in range(depth, n, -1):
        a, q = _extremal(sys, t, side)
        enc = Enclosure(a + q * enc.lo, a + q * enc.hi)
        memo[(side, t - 1, depth)] = enc
    return memo[key]


def tail_bounds(sys: DigitSystem, n: int, depth: int = DEFAULT_DEPTH) -> tuple:
    """Signed tail enclosures at position n: (lo, hi) with lo enclosing the
    downward tail (-minimal sum, <= 0) and hi the upward tail (>= 0).

    Requires depth > n; each enclosure's width is at most the product of the
    extremal entries over positions n+1..depth (and is often exactly 0).
    """
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"position must be >= 0, got {n!r}")
    if not isinstance(depth, int) or depth <= n:
        raise ParameterError(f"tail depth must exceed position {n}, got {depth!r}")
    lo = _tail_magnitude(sys, n, depth, _LOW).neg()
    hi = _tail_magnitude(sys, n, depth, _HIGH)
    return (lo, hi)


def value_range(sys: DigitSystem, depth: int = DEFAULT_DEPTH) -> tuple:
    """Enclosures of the least and greatest representable values."""
    return tail_bounds(sys, 0, depth)


def eval_enclosure(w: DigitWord, depth: int = DEFAULT_DEPTH) -> Enclosure:
    """Enclosure of the set of values of all infinite continuations of w."""
    if not isinstance(depth, int) or depth <= len(w):
        raise ParameterError(
            f"tail depth must exceed word length {len(w)}, got {depth!r}"
        )
    base = eval_prefix(w)
    weight = prefix_weight(w)
    lo, hi = tail_bounds(w.system, len(w), depth)
    return Enclosure(base + weight * lo.lo, base + weight * hi.hi)
