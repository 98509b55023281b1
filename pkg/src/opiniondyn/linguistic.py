"""Linguistic term sets and the nonlinear scale that maps terms to [0, 1].

A term set holds 2*phi + 1 ordered labels h_0 .. h_{2*phi}. Each label is
assigned a numeric value by a two-branch exponential scale parameterized by
``base``: values compress toward the midpoint 0.5 and are symmetric about it,
with the endpoints pinned to 0 and 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class LinguisticTermSet:
    """An ordered set of 2*phi + 1 linguistic terms with cached numeric values.

    Immutable after construction; safe to share between concurrent readers.
    Use :func:`build_term_set` rather than constructing directly.
    """

    phi: int
    base: float
    values: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return 2 * self.phi + 1


def build_term_set(phi: int, base: float) -> LinguisticTermSet:
    """Build a term set, evaluating the scale function once for every index.

    The value of term j is
        (base^phi - base^(phi-j)) / (2*(base^phi - 1))      for j <= phi
        (base^phi + base^(j-phi) - 2) / (2*(base^phi - 1))  for j > phi

    which is 0 at j=0, exactly 0.5 at j=phi, 1 at j=2*phi, strictly
    increasing, and symmetric: value[j] + value[2*phi - j] = 1.
    """
    if not isinstance(phi, (int, np.integer)) or phi < 1:
        raise ValueError(f"phi must be a positive integer, got {phi!r}")
    if not base > 1.0:
        # base = 1 collapses the denominator 2*(base^phi - 1) to zero
        raise ValueError(f"base must be > 1, got {base!r}")
    base = float(base)
    peak = base**phi
    # Denominator written as 2*(peak - 1) so that value[phi] divides out to
    # exactly 0.5 and value[2*phi] to exactly 1.0 in floating point.
    denom = 2.0 * (peak - 1.0)
    values = np.empty(2 * phi + 1)
    for j in range(2 * phi + 1):
        if j <= phi:
            values[j] = (peak - base ** (phi - j)) / denom
        else:
            values[j] = (peak + base ** (j - phi) - 2.0) / denom
    if not np.all(np.diff(values) > 0.0):
        raise ValueError(f"scale values are not strictly increasing for phi={phi}, base={base}")
    values.setflags(write=False)
    return LinguisticTermSet(phi=int(phi), base=base, values=values)


def _check_index(term_set: LinguisticTermSet, index: int) -> int:
    if not 0 <= index <= 2 * term_set.phi:
        raise ValueError(f"term index {index} out of range [0, {2 * term_set.phi}]")
    return int(index)


def term_value(term_set: LinguisticTermSet, index: int) -> float:
    """Numeric value of the term at ``index``."""
    return float(term_set.values[_check_index(term_set, index)])


def nearest_term(term_set: LinguisticTermSet, value: float) -> int:
    """Index of the term whose value is closest to ``value``.

    Exact ties go to the smaller index (argmin returns the first minimum).
    """
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"value {value!r} outside [0, 1]")
    return int(np.argmin(np.abs(term_set.values - value)))


def negate_term(term_set: LinguisticTermSet, index: int) -> int:
    """Negation: the term mirrored about the midpoint, index 2*phi - j."""
    return 2 * term_set.phi - _check_index(term_set, index)


def term_max(term_set: LinguisticTermSet, i: int, j: int) -> int:
    """The larger of two terms under the set's total order."""
    return max(_check_index(term_set, i), _check_index(term_set, j))


def term_min(term_set: LinguisticTermSet, i: int, j: int) -> int:
    """The smaller of two terms under the set's total order."""
    return min(_check_index(term_set, i), _check_index(term_set, j))
