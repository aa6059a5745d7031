"""Closed-form parameters of parameterized codes, as exact integers.

Everything here is pure integer arithmetic.  Divisions are checked: an
inexact one raises ``ArithmeticError`` instead of rounding.

For the even cycle ``C_{2k}`` over GF(q) the order-1 code has length
``(q-1)^(2k-2)``, dimension ``2k`` and minimum distance

    (q-1)^(2k-3) (q-2)                           if k = 4 and q > 3, or k >= 5
    ((q-1)^(2k) - q^k (q-2) - 1) / (q (q-1))     if k = 2, 3, or k = 4 and q = 3

The sign of ``delta(k, q) = (q-1)^(2k-2) - q^k (q-2)`` decides which of
the two maxima of zeros (incomplete vs. complete linear forms) wins.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .gfq import FiniteField

INCOMPLETE = "incomplete-dominates"
COMPLETE = "complete-dominates"


def _exact_div(num: int, den: int) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return quo


def _check(k: int, q: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if q < 3:
        raise ValueError(f"q must be >= 3, got {q}")


def cycle_length(k: int, q: int) -> int:
    _check(k, q)
    return (q - 1) ** (2 * k - 2)


def cycle_dimension(k: int, q: int) -> int:
    _check(k, q)
    return 2 * k


def theorem_branch(k: int, q: int) -> str:
    """The case split as stated, without looking at ``delta``."""
    _check(k, q)
    if (k == 4 and q > 3) or k >= 5:
        return INCOMPLETE
    return COMPLETE


def cycle_min_distance(k: int, q: int) -> int:
    if theorem_branch(k, q) == INCOMPLETE:
        return (q - 1) ** (2 * k - 3) * (q - 2)
    return _exact_div((q - 1) ** (2 * k) - q**k * (q - 2) - 1, q * (q - 1))


def delta(k: int, q: int) -> int:
    _check(k, q)
    return (q - 1) ** (2 * k - 2) - q**k * (q - 2)


def delta_recurrence_rhs(k: int, q: int) -> int:
    """``(q-1)^2 delta(k-1, q) + (q^2 - 3q + 1) q^(k-1) (q-2)``; equals ``delta(k, q)``."""
    return (q - 1) ** 2 * delta(k - 1, q) + (q * q - 3 * q + 1) * q ** (k - 1) * (q - 2)


def branch_predicate(k: int, q: int) -> str:
    return INCOMPLETE if delta(k, q) > 0 else COMPLETE


def path_zero_count(r: int, q: int, k: int) -> int:
    """Unit zeros in ``(F*)^(2k)`` of ``sum_{i<r} b_i x_i x_{i+1}``, all ``b_i != 0``."""
    _check(k, q)
    if not 2 <= r <= 2 * k:
        raise ValueError(f"r must lie in [2, {2 * k}], got {r}")
    return _exact_div(((q - 1) ** r + (-1) ** (r - 1) * (q - 1) ** 2) * (q - 1) ** (2 * k - r), q)


def incomplete_max(k: int, q: int) -> int:
    _check(k, q)
    return (q - 1) ** (2 * k - 3)


def complete_max(k: int, q: int) -> int:
    _check(k, q)
    return _exact_div((q - 1) ** (2 * k - 1) + q**k * (q - 2) + 1, q * (q - 1))


def equality_condition(alphas: Sequence, field: FiniteField) -> bool:
    """Whether ``a_1 a_3 ... a_{2k-1} == (-1)^k a_2 a_4 ... a_{2k}`` in the field.

    ``alphas`` may hold encodings or field elements.  These are exactly the
    complete linear forms with the most zeros on the even cycle's X.
    """
    vals = [field(a) for a in alphas]
    if len(vals) % 2 or not vals:
        raise ValueError("need an even, nonempty coefficient vector")
    if any(v == 0 for v in vals):
        raise ValueError("all coefficients must be nonzero")
    k = len(vals) // 2
    odd, even = field.one, field.one
    for a in vals[0::2]:
        odd = odd * a
    for a in vals[1::2]:
        even = even * a
    if k % 2:
        even = -even
    return odd == even


def torus_min_distance(s: int, q: int, d: int) -> int:
    """Minimum distance of the order-``d`` code on the torus ``T^(s-1)``.

    Writes ``d = k (q-2) + l`` with ``k >= 0`` and ``1 <= l <= q-2`` and
    returns ``(q-1)^(s-k-2) (q-1-l)``.  Valid for ``1 <= d <= (s-1)(q-2)``;
    at the upper end the code is the whole space and the value is 1.
    """
    if q < 3:
        raise ValueError(f"q must be >= 3, got {q}")
    if not 1 <= d <= (s - 1) * (q - 2):
        raise ValueError(f"d must lie in [1, {(s - 1) * (q - 2)}] for s={s}, q={q}")
    k, ell = divmod(d - 1, q - 2)
    ell += 1
    return (q - 1) ** (s - k - 2) * (q - 1 - ell)


def torus_regularity(s: int, q: int) -> int:
    return (s - 1) * (q - 2)


def even_cycle_regularity(k: int, q: int) -> int:
    """``(n + eps - 3)/2 * (q-2)`` with ``n = 2k`` vertices and one even ear."""
    _check(k, q)
    return _exact_div(2 * k + 1 - 3, 2) * (q - 2)


@dataclass(frozen=True)
class CyclePrediction:
    k: int
    q: int
    length: int
    dimension: int
    min_distance: int
    branch: str
    delta: int
    incomplete_max: int
    complete_max: int
    regularity: int

    def as_dict(self) -> dict:
        return asdict(self)


def predict_cycle(k: int, q: int) -> CyclePrediction:
    return CyclePrediction(
        k=k, q=q,
        length=cycle_length(k, q),
        dimension=cycle_dimension(k, q),
        min_distance=cycle_min_distance(k, q),
        branch=theorem_branch(k, q),
        delta=delta(k, q),
        incomplete_max=incomplete_max(k, q),
        complete_max=complete_max(k, q),
        regularity=even_cycle_regularity(k, q),
    )
