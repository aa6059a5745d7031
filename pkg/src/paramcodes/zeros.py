"""Zeros of forms on X and of their pullbacks on the unit torus.

A form ``F(t_1, ..., t_s)`` pulls back through the edge parameterization
to ``f(x_1, ..., x_n) = F(e_1(x), ..., e_s(x))``.  ``z_count`` counts the
common zeros of polynomials with every coordinate a unit; for an even
cycle each point of X has ``(q-1)^2`` preimages, which links the two
counts.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DEFAULT_BUDGET, check_budget
from .gfq import FiniteField, iter_unit_tuples
from .graph import Graph, edge_monomial_exponents
from .toricset import ToricSet, require_q_at_least_3


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial: exponent vector -> nonzero coefficient encoding."""

    field: FiniteField
    nvars: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_terms(cls, field: FiniteField, nvars: int, terms) -> Polynomial:
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or min(exps, default=0) < 0:
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            acc[exps] = field.add(acc.get(exps, 0), field(coeff).value)
        return cls(field, nvars, tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True)))

    @classmethod
    def linear(cls, coeffs: Sequence, field: FiniteField) -> Polynomial:
        """``sum coeffs[i] * t_i``."""
        s = len(coeffs)
        return cls.from_terms(
            field, s, [(tuple(int(i == j) for j in range(s)), c) for i, c in enumerate(coeffs)])

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def evaluate(self, values) -> np.ndarray | int:
        """Evaluate at each row of ``values`` (shape ``(N, nvars)``)."""
        F = self.field
        values = np.asarray(values, dtype=np.int64)
        single = values.ndim == 1
        values = np.atleast_2d(values)
        acc = np.zeros(len(values), dtype=np.int64)
        for exps, coeff in self.terms:
            term = np.full(len(values), coeff, dtype=np.int64)
            for v, e in enumerate(exps):
                if e:
                    term = F.mul(term, F.pow(values[:, v], e))
            acc = F.add(acc, term)
        return int(acc[0]) if single else acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.terms:
            mono = "*".join(f"x{v + 1}" + (f"^{e}" if e > 1 else "") for v, e in enumerate(exps) if e)
            if not mono:
                parts.append(str(coeff))
            else:
                parts.append(mono if coeff == 1 else f"{coeff}*{mono}")
        return " + ".join(parts)


def pullback(F: Polynomial, g: Graph) -> Polynomial:
    """Substitute ``t_k -> x_i x_j`` for every edge ``k = {i, j}``."""
    if F.nvars != g.s:
        raise ValueError(f"form has {F.nvars} variables, graph has {g.s} edges")
    if not F.is_homogeneous:
        raise ValueError("pullback needs a homogeneous form")
    inc = edge_monomial_exponents(g)
    terms = [(tuple(np.asarray(exps) @ inc), c) for exps, c in F.terms]
    return Polynomial.from_terms(F.field, g.n, terms)


def z_count(fs: Iterable[Polynomial], n: int, field: FiniteField,
            budget: int = DEFAULT_BUDGET) -> int:
    """Number of points of ``(F*)^n`` where every polynomial in ``fs`` vanishes."""
    require_q_at_least_3(field)
    fs = list(fs)
    for f in fs:
        if f.field != field or f.nvars != n:
            raise ValueError("polynomial does not live in F[x_1..x_n]")
    check_budget("unit tuples", (field.order - 1) ** n, budget)
    total = 0
    for chunk in iter_unit_tuples(field, n):
        mask = np.ones(len(chunk), dtype=bool)
        for f in fs:
            mask &= f.evaluate(chunk) == 0
        total += int(mask.sum())
    return total


def z_count_naive(fs: Iterable[Polynomial], n: int, field: FiniteField) -> int:
    """Reference count: one tuple at a time through :class:`FieldElement`."""
    fs = list(fs)
    units = field.units()
    count = 0
    for x in itertools.product(units, repeat=n):
        for f in fs:
            val = field.zero
            for exps, coeff in f.terms:
                term = field(coeff)
                for xi, e in zip(x, exps):
                    term = term * xi**e
                val = val + term
            if val:
                break
        else:
            count += 1
    return count


def zeros_on_X(F: Polynomial, X: ToricSet) -> int:
    """``|Z(F) ∩ X|`` by direct evaluation at the points of X."""
    if F.nvars != X.s:
        raise ValueError(f"form has {F.nvars} variables, X lives in P^{X.s - 1}")
    return int(np.count_nonzero(F.evaluate(X.points) == 0))


SUPPORT_CLASSES = ("incomplete", "complete", "all")


def projective_linear_forms(field: FiniteField, s: int, support: str = "all",
                            budget: int = DEFAULT_BUDGET):
    """Coefficient vectors of nonzero linear forms, first nonzero entry 1.

    Yields ``(rows, s)`` arrays.  ``support`` restricts to forms with some
    zero coefficient (``incomplete``) or none (``complete``).
    """
    if support not in SUPPORT_CLASSES:
        raise ValueError(f"support must be one of {SUPPORT_CLASSES}")
    q = field.order
    check_budget("projective linear forms", (q**s - 1) // (q - 1), budget)
    for lead in range(s):
        if support == "complete" and lead > 0:
            break
        rest = s - lead - 1
        digits = range(1, q) if support == "complete" else range(q)
        combos = list(itertools.product(digits, repeat=rest))
        tail = np.array(combos, dtype=np.int64).reshape(len(combos), rest)
        block = np.zeros((len(tail), s), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = tail
        if support == "incomplete":
            block = block[(block == 0).any(axis=1)]
        if len(block):
            yield block


@dataclass(frozen=True)
class MaxZeros:
    max: int
    maximizers: tuple[tuple[int, ...], ...]
    forms_checked: int


def max_zeros_search(X: ToricSet, support: str = "all", budget: int = DEFAULT_BUDGET) -> MaxZeros:
    """Largest ``|Z(F) ∩ X|`` over nonzero linear forms in a support class.

    Forms are enumerated projectively; ``maximizers`` lists every normalized
    coefficient vector attaining the maximum, in lexicographic order.
    """
    F = X.field
    pts = X.points
    best, winners, checked = -1, [], 0
    for block in projective_linear_forms(F, X.s, support, budget):
        values = np.zeros((len(block), X.m), dtype=np.int64)
        for i in range(X.s):
            values = F.add(values, F.mul(block[:, i, None], pts[None, :, i]))
        zeros = np.count_nonzero(values == 0, axis=1)
        checked += len(block)
        top = int(zeros.max())
        if top > best:
            best, winners = top, []
        if top == best:
            winners.extend(tuple(int(v) for v in row) for row in block[zeros == best])
    if best < 0:
        raise ValueError(f"no linear forms in class {support!r} for s={X.s}")
    return MaxZeros(best, tuple(sorted(winners)), checked)
