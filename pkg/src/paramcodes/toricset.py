"""The projective toric subset X parameterized by a graph.

X is the image of ``(F*)^n`` under ``x -> (e_1(x) : ... : e_s(x))`` with
``e_k(x) = x_i x_j`` for edge ``k = {i, j}``.  Every coordinate of a point
of X is a unit, so each point is stored normalized with first coordinate
1, and X is kept sorted lexicographically on encodings.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DEFAULT_BUDGET, check_budget
from .gfq import FiniteField, iter_unit_tuples
from .graph import Graph, component_profile

_KEY_LIMIT = 1 << 62


def require_q_at_least_3(field: FiniteField) -> None:
    if field.order < 3:
        raise ValueError(f"parameterized codes need q > 2, got {field!r}")


@dataclass(frozen=True, eq=False)
class ToricSet:
    """Points ``P_1, ..., P_m`` of X and, per point, how many unit tuples hit it."""

    graph: Graph
    field: FiniteField
    points: np.ndarray
    fiber: np.ndarray

    def __len__(self):
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def s(self) -> int:
        return self.points.shape[1]

    def as_tuples(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in row) for row in self.points]

    def to_json(self) -> str:
        return json.dumps({
            "field": self.field.spec,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "points": self.points.tolist(),
        })


def _edge_images(chunk: np.ndarray, edges, field: FiniteField) -> np.ndarray:
    cols = [field.mul(chunk[:, i], chunk[:, j]) for i, j in edges]
    coords = np.stack(cols, axis=1)
    return field.mul(coords, field.inv(coords[:, 0])[:, None])


def enumerate_points(g: Graph, field: FiniteField, budget: int = DEFAULT_BUDGET,
                     chunk_size: int = 1 << 16) -> ToricSet:
    """Enumerate X by running over every unit assignment of the vertices.

    Isolated vertices appear in no edge monomial and are left out of the
    enumeration, so the cost is ``(q-1)^n'`` with ``n'`` the number of
    non-isolated vertices.  Raises :class:`~paramcodes.errors.BudgetExceeded`
    when that exceeds ``budget``.
    """
    require_q_at_least_3(field)
    if g.s == 0:
        raise ValueError("graph has no edges; X would live in P^-1")
    active = sorted({v for e in g.edges for v in e})
    index = {v: i for i, v in enumerate(active)}
    edges = [(index[i], index[j]) for i, j in g.edges]
    q, s = field.order, g.s
    check_budget("unit tuples", (q - 1) ** len(active), budget)

    use_keys = q ** (s - 1) < _KEY_LIMIT
    place = q ** np.arange(s - 2, -1, -1, dtype=np.int64)
    found, counts = [], []
    for chunk in iter_unit_tuples(field, len(active), chunk_size):
        pts = _edge_images(chunk, edges, field)
        if use_keys:
            uniq, cnt = np.unique(pts[:, 1:] @ place, return_counts=True)
        else:
            uniq, cnt = np.unique(pts, axis=0, return_counts=True)
        found.append(uniq)
        counts.append(cnt)

    allfound = np.concatenate(found)
    allcounts = np.concatenate(counts)
    uniq, inverse = np.unique(allfound, axis=0 if not use_keys else None, return_inverse=True)
    fiber = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(fiber, inverse.reshape(-1), allcounts)
    if use_keys:
        points = np.ones((len(uniq), s), dtype=np.int64)
        points[:, 1:] = (uniq[:, None] // place[None, :]) % q
    else:
        points = uniq
    points.setflags(write=False)
    fiber.setflags(write=False)
    return ToricSet(g, field, points, fiber)


def expected_length(g: Graph, field: FiniteField) -> int:
    """Closed-form ``|X|`` from components and non-bipartite components.

    The exponent is ``n - b0 + gamma - 1`` when some component is
    non-bipartite and ``n - b0 - 1`` otherwise; for odd ``q`` the first case
    is divided by ``2^(gamma - 1)``.
    """
    prof = component_profile(g)
    n, b0, gamma, q = g.n, prof.b0, prof.gamma, field.order
    if gamma == 0:
        return (q - 1) ** (n - b0 - 1)
    value = (q - 1) ** (n - b0 + gamma - 1)
    if q % 2 == 1:
        den = 2 ** (gamma - 1)
        if value % den:
            raise ArithmeticError(f"(q-1)^{n - b0 + gamma - 1} not divisible by {den}")
        value //= den
    return value


@dataclass(frozen=True)
class LengthReport:
    expected: int
    enumerated: int

    @property
    def match(self) -> bool:
        return self.expected == self.enumerated


def verify_length(g: Graph, field: FiniteField, budget: int = DEFAULT_BUDGET) -> LengthReport:
    return LengthReport(expected_length(g, field), len(enumerate_points(g, field, budget)))
