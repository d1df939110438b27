"""Representability conditions and the greedy digit encoder.

theorem_check verifies, per position n and adjacent digit pair (i, i+1), the
inequality that makes consecutive cylinders cover the range without gaps:

    marked n:    entry(i) * (1 - omega2)  <=  entry(i+1) * omega1
    unmarked n:  entry(i) * (1 - omega1)  <=  entry(i+1) * omega2

with both sides as enclosures; "holds" and "fails" are only reported when
the enclosures separate, so a verdict is never an artifact of truncation.
For geometric columns both sides divide by entry(i), leaving a condition on
the constant ratio alone: one representative pair decides the whole column.

encode subdivides cylinders greedily: at each position it takes the smallest
digit whose cylinder enclosure contains the target. A digit may be chosen
whose cylinder only marginally contains the target; that is sound because the
final residual enclosure is what certifies convergence. If no digit's
enclosure contains the target the position is reported as a gap.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, RangeError
from .numerics import Enclosure, ONE, ZERO
from .expansion import (
    DEFAULT_DEPTH,
    DigitWord,
    _HIGH,
    _LOW,
    _tail_magnitude,
    eval_enclosure,
    tail_bounds,
    word,
)
from .system import DigitSystem

HOLDS = "holds"
FAILS = "fails"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class PairCheck:
    """One adjacent-pair condition: position, lower digit, verdict, sides.

    covers_column is True when this single check decides every pair of the
    column (constant-ratio infinite columns)."""

    position: int
    digit: int
    status: str
    left: Enclosure
    right: Enclosure
    covers_column: bool = False


@dataclass(frozen=True)
class TheoremVerdict:
    depth: int
    checks: tuple
    overall: str            # "holds-to-depth" | "fails-at" | "undecided"
    failure: "tuple | None"  # (position, digit) of the first failing pair


def _pair_status(left: Enclosure, right: Enclosure) -> str:
    if left.hi <= right.lo:
        return HOLDS
    if left.lo > right.hi:
        return FAILS
    return UNDECIDED


def theorem_check(sys: DigitSystem, depth: int,
                  tail_depth: int = DEFAULT_DEPTH) -> TheoremVerdict:
    """Check the covering conditions for all positions n <= depth."""
    if not isinstance(depth, int) or depth < 1:
        raise ParameterError(f"check depth must be >= 1, got {depth!r}")
    if not isinstance(tail_depth, int) or tail_depth <= depth:
        raise ParameterError(
            f"tail depth must exceed check depth {depth}, got {tail_depth!r}"
        )
    checks = []
    failure = None
    saw_undecided = False
    for n in range(1, depth + 1):
        omega1 = _tail_magnitude(sys, n, tail_depth, _HIGH)
        omega2 = _tail_magnitude(sys, n, tail_depth, _LOW)
        if sys.signs.contains(n):
            shrink, grow = omega2, omega1
        else:
            shrink, grow = omega1, omega2
        one_minus = Enclosure.point(1).sub(shrink)
        col = sys.column(n)
        if col.is_infinite:
            pairs = ((0, True),)
        else:
            pairs = tuple((i, False) for i in range(col.top_digit))
        for i, covers in pairs:
            left = one_minus.scale(col.entry(i))
            right = grow.scale(col.entry(i + 1))
            status = _pair_status(left, right)
            checks.append(PairCheck(n, i, status, left, right, covers))
            if status == FAILS and failure is None:
                failure = (n, i)
            elif status == UNDECIDED:
                saw_undecided = True
    if failure is not None:
        overall = "fails-at"
    elif saw_undecided:
        overall = UNDECIDED
    else:
        overall = "holds-to-depth"
    return TheoremVerdict(depth=depth, checks=tuple(checks),
                          overall=overall, failure=failure)


@dataclass(frozen=True)
class EncodeResult:
    digits: DigitWord
    residual: Enclosure
    status: str              # "converged" | "max-depth-reached" | "gap"
    gap_position: "int | None" = None

    def describe(self) -> str:
        if self.status == "gap":
            return f"gap({self.gap_position})"
        return self.status


def _step_depth(depth: int, n: int) -> int:
    # Keep the tail precondition depth > n satisfiable past the nominal depth.
    return max(depth, n + 2)


def encode(sys: DigitSystem, x, tolerance, max_len: int = 64,
           depth: int = DEFAULT_DEPTH) -> EncodeResult:
    """Greedy smallest-digit encoding of x with a certified residual."""
    x = Fraction(x)
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ParameterError(f"tolerance must be positive, got {tolerance}")
    if not isinstance(max_len, int) or max_len < 1:
        raise ParameterError(f"max_len must be >= 1, got {max_len!r}")
    if not isinstance(depth, int) or depth < 1:
        raise ParameterError(f"depth must be >= 1, got {depth!r}")

    lo0, hi0 = tail_bounds(sys, 0, _step_depth(depth, 0))
    if not (lo0.lo <= x <= hi0.hi):
        raise RangeError(f"{x} outside the representable range [{lo0.lo}, {hi0.hi}]")

    digits = []
    base = ZERO     # exact value of the chosen prefix
    weight = ONE    # product of chosen entries
    hull = Enclosure(lo0.lo, hi0.hi)

    for n in range(1, max_len + 1):
        eff = _step_depth(depth, n)
        lo_t, hi_t = tail_bounds(sys, n, eff)
        col = sys.column(n)
        sign = sys.term_sign(n)
        marked = sign < 0
        chosen = None
        chosen_hull = None

        def hull_of(c):
            child_base = base + sign * col.weight(c) * weight
            w = weight * col.entry(c)
            return Enclosure(child_base + w * lo_t.lo, child_base + w * hi_t.hi)

        # Digit hulls sweep toward one branch endpoint as the digit grows
        # (upward at unmarked positions, downward at marked ones).  Over an
        # infinite alphabet that endpoint is a limit no finite digit reaches.
        limit_point = hull.lo if marked else hull.hi
        if not (col.is_infinite and x == limit_point):
            c = 0
            while col.digit_valid(c):
                candidate = hull_of(c)
                if candidate.contains(x):
                    chosen, chosen_hull = c, candidate
                    # On an exact shared boundary, prefer the neighbour digit:
                    # the receding endpoint of this hull may only be attained
                    # in the limit, while the neighbour starts right on x.
                    receding = candidate.lo if marked else candidate.hi
                    if x == receding and col.digit_valid(c + 1):
                        neighbour = hull_of(c + 1)
                        if neighbour.contains(x):
                            chosen, chosen_hull = c + 1, neighbour
                    break
                if col.is_infinite:
                    # Every digit above c stays beyond base +/- weight*(1 -
                    # 2*tail(c)); once that line passes x, none can contain it.
                    reach = weight * (1 - 2 * col.tail(c))
                    if (not marked and base + reach > x) or \
                            (marked and base - reach < x):
                        break
                c += 1
        if chosen is None:
            residual = Enclosure(x - hull.hi, x - hull.lo)
            return EncodeResult(word(sys, digits), residual, "gap", n)
        digits.append(chosen)
        base += sign * col.weight(chosen) * weight
        weight *= col.entry(chosen)
        hull = chosen_hull
        residual = Enclosure(x - hull.hi, x - hull.lo)
        if residual.width <= tolerance:
            return EncodeResult(word(sys, digits), residual, "converged")

    residual = Enclosure(x - hull.hi, x - hull.lo)
    return EncodeResult(word(sys, digits), residual, "max-depth-reached")


def roundtrip_verify(sys: DigitSystem, x, result: EncodeResult,
                     depth: int = DEFAULT_DEPTH) -> bool:
    """True when the enclosure of the encoded word still contains x."""
    x = Fraction(x)
    eff = _step_depth(depth, len(result.digits))
    return eval_enclosure(result.digits, eff).contains(x)
