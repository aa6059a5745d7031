"""Parameterized codes C_X(d): generator matrices, dimension, distance.

A form ``f`` of degree ``d`` maps to ``(f/t_1^d)(P_1), ..., (f/t_1^d)(P_m)``.
Points of a :class:`~paramcodes.toricset.ToricSet` are normalized with
first coordinate 1, so this is plain evaluation at the stored points.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .errors import DEFAULT_BUDGET, check_budget
from .gfq import FiniteField
from .linalg import matmul, rank, row_reduce
from .toricset import ToricSet

_CHUNK_ENTRIES = 1 << 22


def monomials(s: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree ``d`` in ``s`` variables, graded lex order.

    ``t_1^d`` comes first and ``t_s^d`` last.
    """
    out = []
    for combo in itertools.combinations_with_replacement(range(s), d):
        e = [0] * s
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def evaluation_matrix(X: ToricSet, d: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Rows indexed by :func:`monomials`, columns by the points of X."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if X.m == 0:
        raise ValueError("empty point set")
    check_budget("matrix entries", comb(X.s + d - 1, d) * X.m, budget)
    F = X.field
    pts = X.points
    out = np.empty((comb(X.s + d - 1, d), X.m), dtype=np.int64)
    for r, combo in enumerate(itertools.combinations_with_replacement(range(X.s), d)):
        row = np.ones(X.m, dtype=np.int64)
        for v in combo:
            row = F.mul(row, pts[:, v])
        out[r] = row
    return out


@dataclass(eq=False)
class LinearCode:
    """A linear code stored through a reduced row echelon basis.

    ``generator`` has full row rank; its rows are the RREF of whatever
    spanning matrix built the code.
    """

    field: FiniteField
    generator: np.ndarray
    pivots: list[int]
    _cache: dict = dc_field(default_factory=dict, repr=False)

    @classmethod
    def from_matrix(cls, matrix, field: FiniteField) -> LinearCode:
        basis, pivots = row_reduce(matrix, field)
        basis.setflags(write=False)
        return cls(field, basis, pivots)

    @property
    def length(self) -> int:
        return self.generator.shape[1]

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    def encode(self, message) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64)
        return matmul(msg[None, :], self.generator, self.field)[0]

    def contains(self, word) -> bool:
        stacked = np.vstack([self.generator, np.asarray(word, dtype=np.int64)[None, :]])
        return rank(stacked, self.field) == self.dimension

    def singleton_ok(self, budget: int = DEFAULT_BUDGET) -> bool:
        return minimum_distance(self, budget) <= self.length - self.dimension + 1

    def to_json(self) -> str:
        return json.dumps({
            "field": self.field.spec,
            "length": self.length,
            "dimension": self.dimension,
            "generator": self.generator.tolist(),
        })

    def to_text(self) -> str:
        width = len(str(self.field.order - 1))
        return "\n".join(" ".join(f"{v:>{width}d}" for v in row) for row in self.generator) + "\n"


def code_from(X: ToricSet, d: int, budget: int = DEFAULT_BUDGET) -> LinearCode:
    """The code C_X(d)."""
    return LinearCode.from_matrix(evaluation_matrix(X, d, budget), X.field)


def _span(rows: np.ndarray, field: FiniteField) -> np.ndarray:
    """All ``q^len(rows)`` linear combinations; the last row varies fastest."""
    m = rows.shape[1]
    scalars = np.arange(field.order, dtype=np.int64)[:, None]
    table = np.zeros((1, m), dtype=np.int64)
    for row in rows:
        scaled = field.mul(scalars, row[None, :])
        table = field.add(table[:, None, :], scaled[None, :, :]).reshape(-1, m)
    return table


def iter_codewords(code: LinearCode, projective: bool = True):
    """Yield blocks of codewords as 2-d arrays.

    With ``projective`` set, every nonzero codeword is produced exactly once
    up to scalar multiples: the message's first nonzero entry is 1.
    Otherwise all ``q^k`` codewords are produced, the zero word first.
    """
    F, G = code.field, code.generator
    k, m = G.shape
    q = F.order
    if not projective:
        yield np.zeros((1, m), dtype=np.int64)
    for lead in range(k):
        tail = G[lead + 1:]
        j = 0
        while j < len(tail) and q ** (j + 1) * m <= _CHUNK_ENTRIES:
            j += 1
        outer, inner = tail[:len(tail) - j], tail[len(tail) - j:]
        table = _span(inner, F)
        leads = [1] if projective else range(1, q)
        for a in leads:
            first = F.mul(a, G[lead])
            for coeffs in itertools.product(range(q), repeat=len(outer)):
                base = first
                for c, row in zip(coeffs, outer):
                    if c:
                        base = F.add(base, F.mul(c, row))
                yield F.add(table, base[None, :])


def _projective_count(code: LinearCode) -> int:
    q = code.field.order
    return (q**code.dimension - 1) // (q - 1)


def minimum_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming weight over nonzero codewords.

    Runs over one representative per line of the code, since scalar
    multiples share a weight.  Stops early once weight 1 is seen.
    """
    if "min_distance" in code._cache:
        return code._cache["min_distance"]
    if code.dimension == 0:
        raise ValueError("the zero code has no minimum distance")
    check_budget("projective codewords", _projective_count(code), budget)
    best = code.length
    for block in iter_codewords(code):
        best = min(best, int(np.count_nonzero(block, axis=1).min()))
        if best == 1:
            break
    code._cache["min_distance"] = best
    return best


def weight_distribution(code: LinearCode, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """``{weight: number of codewords}`` over all ``q^k`` codewords."""
    if "weights" in code._cache:
        return dict(code._cache["weights"])
    check_budget("projective codewords", _projective_count(code), budget)
    counts = np.zeros(code.length + 1, dtype=np.int64)
    for block in iter_codewords(code):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=code.length + 1)
    counts *= code.field.order - 1
    counts[0] += 1
    dist = {w: int(c) for w, c in enumerate(counts) if c}
    code._cache["weights"] = dist
    nonzero = [w for w in dist if w]
    if nonzero:
        code._cache.setdefault("min_distance", min(nonzero))
    return dict(dist)


def hilbert_function(X: ToricSet, d: int, budget: int = DEFAULT_BUDGET) -> int:
    """``dim C_X(d)``, the rank of the degree-``d`` evaluation matrix."""
    if d == 0:
        return 1
    return rank(evaluation_matrix(X, d, budget), X.field)


def regularity_index(X: ToricSet, max_degree: int | None = None,
                     budget: int = DEFAULT_BUDGET) -> int:
    """Smallest ``d`` with ``hilbert_function(X, d) == |X|``."""
    d = 0
    while True:
        if max_degree is not None and d > max_degree:
            raise RuntimeError(f"Hilbert function did not reach {X.m} by degree {max_degree}")
        if hilbert_function(X, d, budget) == X.m:
            return d
        d += 1
