"""Exact descendent integrals over moduli of stable pointed curves.

``correlator_value`` computes the intersection numbers

    <tau_{a_1} ... tau_{a_n}>_g = integral of psi_1^{a_1}...psi_n^{a_n}

by the KdV / Virasoro recursion in its double-factorial form.  With
``k = a - 1`` for a chosen insertion ``tau_a`` with ``a >= 2``, and
``rest`` the remaining exponents::

    (2k+3)!! <tau_{k+1} prod tau_{a_i}>_g =
        sum_j [(2k+2a_j+1)!! / (2a_j-1)!!] <tau_{a_j+k} prod_{i != j}>_g
      + 1/2 sum_{a+b=k-1} (2a+1)!! (2b+1)!! [
            <tau_a tau_b prod tau_{a_i}>_{g-1}
          + sum_{g1+g2=g} sum_{I union J = rest}
                <tau_a tau_I>_{g1} <tau_b tau_J>_{g2} ]

with ordered ``(a, b)`` pairs and ordered ``(g1, I)`` splits; correlators
that are off-dimension, unstable, or carry a negative exponent vanish.
The string and dilaton equations are applied first when a 0 or 1
exponent is available (they are consequences of the same operator
family and keep the recursion shallow).  Everything rests on the two
seeds ``<tau_0^3>_0 = 1`` and ``<tau_1>_1 = 1/24``.

The recursion's correctness is pinned by exact agreement with the
closed forms it must reproduce: ``<tau_{3g-2}>_g = 1/(24^g g!)``, the
genus-0 multinomial formula, and the slope-bound ratio assembled in
:func:`pand_bound`, which must collapse to ``60/(g+4)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

__all__ = [
    "Correlator",
    "ResourceLimitError",
    "string_reduce",
    "psi_one_point",
    "correlator_value",
    "pand_numerator",
    "pand_denominator",
    "pand_bound",
]

# Guard against runaway recursion on adversarial inputs: reject moduli
# of complex dimension above this.
_MAX_DIMENSION = 200


class ResourceLimitError(RuntimeError):
    """Input exceeds the configured recursion size guard."""


@dataclass(frozen=True)
class Correlator:
    """A descendent correlator ``<tau_{a_1} ... tau_{a_n}>_g``.

    Exponents are stored sorted (correlators are symmetric).  The marked
    curve must be stable: ``2g - 2 + n > 0``.
    """

    genus: int
    exponents: tuple[int, ...]

    def __init__(self, genus: int, exponents: Iterable[int]) -> None:
        exps = tuple(sorted(int(a) for a in exponents))
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        if any(a < 0 for a in exps):
            raise ValueError("exponents must be nonnegative")
        if 2 * genus - 2 + len(exps) <= 0:
            raise ValueError(
                f"unstable correlator: genus {genus} with {len(exps)} insertions"
            )
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "exponents", exps)

    @property
    def dimension(self) -> int:
        return 3 * self.genus - 3 + len(self.exponents)

    def on_dimension(self) -> bool:
        return sum(self.exponents) == self.dimension


def string_reduce(c: Correlator) -> list[Correlator]:
    """Apply the string equation to one ``tau_0`` insertion.

    Returns the correlators obtained by deleting a ``tau_0`` and
    decrementing each remaining exponent in turn; decrements of zero
    exponents are dropped (those terms vanish).
    """
    if 0 not in c.exponents:
        raise ValueError("string_reduce needs a tau_0 insertion")
    if len(c.exponents) < 2:
        raise ValueError("string_reduce needs at least one other insertion")
    if 2 * c.genus - 2 + (len(c.exponents) - 1) <= 0:
        raise ValueError(
            "forgetting the tau_0 point leaves an unstable configuration; "
            "the string equation does not apply"
        )
    rest = list(c.exponents)
    rest.remove(0)
    out = []
    for j, a in enumerate(rest):
        if a == 0:
            continue
        out.append(Correlator(c.genus, rest[:j] + [a - 1] + rest[j + 1 :]))
    return out


def psi_one_point(g: int) -> Fraction:
    """The one-point integral ``<tau_{3g-2}>_g = 1/(24^g g!)``."""
    if g < 1:
        raise ValueError("one-point integrals need genus >= 1")
    return Fraction(1, 24**g * math.factorial(g))


_memo: dict[tuple[int, tuple[int, ...]], Fraction] = {}


def _double_factorial(n: int) -> int:
    """Odd double factorial with the convention ``(-1)!! = 1``."""
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def _value(g: int, exps: tuple[int, ...]) -> Fraction:
    """Recursion core; exps must be sorted.  Returns 0 off the cone."""
    n = len(exps)
    if g < 0 or any(a < 0 for a in exps):
        return Fraction(0)
    if 2 * g - 2 + n <= 0:
        return Fraction(0)
    if sum(exps) != 3 * g - 3 + n:
        return Fraction(0)
    if g == 0 and exps == (0, 0, 0):
        return Fraction(1)
    if g == 1 and exps == (1,):
        return Fraction(1, 24)

    key = (g, exps)
    cached = _memo.get(key)
    if cached is not None:
        return cached

    if exps[0] == 0 and n >= 2:
        # String equation.
        rest = exps[1:]
        total = Fraction(0)
        for j, a in enumerate(rest):
            if a == 0:
                continue
            total += _value(
                g, tuple(sorted(rest[:j] + (a - 1,) + rest[j + 1 :]))
            )
    elif exps[0] == 1 and n >= 2:
        # Dilaton equation (the remaining correlator is stable here).
        rest = exps[1:]
        total = (2 * g - 2 + n - 1) * _value(g, rest)
    else:
        # Full recursion on the insertion of smallest exponent (>= 2
        # here, since string/dilaton took exponents 0 and 1).  Choosing
        # the smallest keeps the genus-lowering term's new exponents
        # small, so they are absorbed by string/dilaton instead of
        # widening the correlator.
        a_pick = exps[0]
        rest = exps[1:]
        k = a_pick - 1
        total = Fraction(0)
        for j, a in enumerate(rest):
            weight = Fraction(
                _double_factorial(2 * k + 2 * a + 1),
                _double_factorial(2 * a - 1),
            )
            bumped = tuple(sorted(rest[:j] + (a + k,) + rest[j + 1 :]))
            total += weight * _value(g, bumped)
        pair_sum = Fraction(0)
        for a in range(k):
            b = k - 1 - a
            weight = _double_factorial(2 * a + 1) * _double_factorial(2 * b + 1)
            pair_sum += weight * _value(g - 1, tuple(sorted(rest + (a, b))))
            split_sum = Fraction(0)
            m = len(rest)
            for size in range(m + 1):
                for picked in combinations(range(m), size):
                    chosen = frozenset(picked)
                    left = tuple(rest[t] for t in picked)
                    right = tuple(
                        rest[t] for t in range(m) if t not in chosen
                    )
                    for g1 in range(g + 1):
                        lhs = _value(g1, tuple(sorted((a,) + left)))
                        if lhs == 0:
                            continue
                        split_sum += lhs * _value(
                            g - g1, tuple(sorted((b,) + right))
                        )
            pair_sum += weight * split_sum
        total += Fraction(1, 2) * pair_sum
        total /= _double_factorial(2 * k + 3)

    _memo[key] = total
    return total


def correlator_value(c: Correlator) -> Fraction:
    """Exact value of a stable correlator; 0 when off-dimension."""
    if c.dimension > _MAX_DIMENSION:
        raise ResourceLimitError(
            f"moduli dimension {c.dimension} exceeds the guard "
            f"({_MAX_DIMENSION})"
        )
    return _value(c.genus, c.exponents)


# ---------------------------------------------------------------------
# Slope bound for the one-point boundary ratio
# ---------------------------------------------------------------------


def pand_numerator(g: int) -> Fraction:
    """Boundary intersection of a maximal psi-power pencil.

    Equals half the one-point integral one genus down: the node of an
    irreducible boundary curve is separated into two of the three
    points on the normalization, and the string equation collapses them.
    """
    if g < 2:
        raise ValueError("the bound needs genus >= 2")
    return psi_one_point(g - 1) / 2


def pand_denominator(g: int) -> Fraction:
    """Hodge-class intersection via the Grothendieck-Riemann-Roch split.

    Assembled from the two-point correlator ``<tau_{3g-3} tau_2>_g``,
    the one-point integral at genus ``g``, and the collapsed three-point
    term one genus down.
    """
    if g < 2:
        raise ValueError("the bound needs genus >= 2")
    two_point = correlator_value(Correlator(g, (3 * g - 3, 2)))
    return (
        two_point / 12
        - psi_one_point(g) / 12
        + psi_one_point(g - 1) / 24
    )


def pand_bound(g: int) -> Fraction:
    """The slope lower bound ``delta/lambda`` ratio, exactly ``60/(g+4)``.

    The closed form is asserted against the assembled ratio on every
    call; a mismatch means the recursion or the GRR bookkeeping broke.
    """
    value = pand_numerator(g) / pand_denominator(g)
    expected = Fraction(60, g + 4)
    if value != expected:
        raise RuntimeError(
            f"assembled bound {value} differs from closed form {expected} "
            f"at genus {g}"
        )
    return value
