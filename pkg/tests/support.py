"""Shared generators and brute-force oracles for the test suite.

Random columns are always generated with non-increasing entries.  The
per-position extremal recipe used by the tail machinery realizes the true
infimum/supremum only on such columns, so brute-force comparisons stay
meaningful.  (With an increasing column, picking the locally extreme digit
can be globally suboptimal.)
"""
from fractions import Fraction
import random

from varsign import (
    DigitSystem,
    FiniteColumn,
    ListColumns,
    SignSet,
    uniform_column,
)


def random_column(rng: random.Random, max_digits: int = 4) -> FiniteColumn:
    k = rng.randint(2, max_digits)
    weights = sorted((rng.randint(1, 9) for _ in range(k)), reverse=True)
    total = sum(weights)
    return FiniteColumn(tuple(Fraction(w, total) for w in weights))


def random_signs(rng: random.Random, horizon: int = 12) -> SignSet:
    pick = rng.randrange(6)
    if pick == 0:
        return SignSet.none()
    if pick == 1:
        return SignSet.every()
    if pick == 2:
        return SignSet.odd()
    if pick == 3:
        return SignSet.even()
    if pick == 4:
        members = [n for n in range(1, horizon + 1) if rng.random() < 0.4]
        return SignSet.from_list(members) if members else SignSet.none()
    modulus = rng.randint(1, 4)
    count = rng.randint(1, modulus)
    residues = sorted({rng.randrange(modulus) for _ in range(count)})
    return SignSet.residue_classes(modulus, residues, start_k=rng.randint(0, 1))


def random_finite_system(rng: random.Random, support: int = 10,
                         max_digits: int = 4) -> DigitSystem:
    """Random system with real columns up to `support`, forced single-digit
    columns beyond.  Every value is an exact rational reached by rank
    `support`; all tail enclosures are exact points."""
    cols = tuple(random_column(rng, max_digits) for _ in range(support))
    cols += (FiniteColumn((Fraction(1),)),)
    return DigitSystem(random_signs(rng), ListColumns(cols, "repeat-last"))


def random_periodic_system(rng: random.Random, max_period: int = 3,
                           max_digits: int = 4) -> DigitSystem:
    cols = tuple(
        random_column(rng, max_digits)
        for _ in range(rng.randint(1, max_period))
    )
    return DigitSystem(random_signs(rng), ListColumns(cols, "cycle"))


def random_word_digits(rng: random.Random, system: DigitSystem,
                       length: int) -> tuple:
    digits = []
    for n in range(1, length + 1):
        col = system.column(n)
        if col.is_infinite:
            digits.append(rng.randint(0, 6))
        else:
            digits.append(rng.randint(0, col.top_digit))
    return tuple(digits)


def rational_between(rng: random.Random, lo: Fraction, hi: Fraction,
                     denominator: int = 2 ** 16) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randint(0, denominator), denominator)


def walk_prefix(system: DigitSystem, digits) -> tuple:
    """Exact (value, remaining weight) of a digit prefix, computed directly
    from column data: an independent route used for brute forcing."""
    value = Fraction(0)
    weight = Fraction(1)
    for n, d in enumerate(digits, 1):
        col = system.column(n)
        sign = -1 if system.sign_exponent(n) == 1 else 1
        value += sign * col.weight(d) * weight
        weight *= col.entry(d)
    return value, weight


def extension_values(system: DigitSystem, base, total_length: int) -> list:
    """Exact values of every digit word of length total_length that extends
    base.  Requires finite columns throughout."""
    start_value, start_weight = walk_prefix(system, base)
    out = []

    def rec(n, value, weight):
        if n > total_length:
            out.append(value)
            return
        col = system.column(n)
        sign = -1 if system.sign_exponent(n) == 1 else 1
        for i in range(col.top_digit + 1):
            rec(n + 1, value + sign * col.weight(i) * weight,
                weight * col.entry(i))

    rec(len(tuple(base)) + 1, start_value, start_weight)
    return out
