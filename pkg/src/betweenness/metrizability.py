"""Deciding whether a betweenness structure is induced by some metric.

The decision is an exact linear program over the pairwise distances.  Every
3-subset ``{x, y, z}`` contributes three triangle constraints, one per
candidate middle:

* the middle recorded in the structure gives an equality
  ``d(x, z) = d(x, y) + d(y, z)``;
* every other middle gives ``d(x, z) + eps <= d(x, y) + d(y, z)``.

With all distances normalised to ``d >= 1`` and ``eps <= 1``, the structure is
metrizable exactly when the largest feasible ``eps`` is positive.  The
equalities are scale-invariant, so the normalisation loses nothing.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb

from . import lp
from .core import (
    BetweennessStructure,
    MetricSpace,
    Triple,
    _betweenness_from_matrix,
    betweenness_of_metric,
)
from .errors import TooLarge

# symmetry reduction is skipped above this size (n! relabelings)
_CANONICAL_MAX_N = 6
# matrices scanned by brute_force_metrizable
_BRUTE_FORCE_LIMIT = 2_000_000


def validate_candidate(triples: Iterable[Iterable[int]], n: int) -> BetweennessStructure:
    """Canonicalize a raw triple set, rejecting degenerate and trichotomy-violating input."""
    raw = [tuple(t) for t in triples]
    for t in raw:
        if len(t) != 3:
            raise ValueError(f"expected a triple, got {t}")
    return BetweennessStructure(n, frozenset(raw))


@dataclass(frozen=True)
class FeasibilityProblem:
    """Linear feasibility encoding of one candidate structure.

    Variables are the distances of ``pairs`` (in that order) followed by the
    slack ``eps``.  Each constraint row is ``(outer, left, right)``: the pair
    indices of ``d(x, z)``, ``d(x, y)`` and ``d(y, z)``.
    """

    n: int
    pairs: tuple[tuple[int, int], ...]
    equalities: tuple[tuple[int, int, int], ...]
    inequalities: tuple[tuple[int, int, int], ...]

    @property
    def num_variables(self) -> int:
        return len(self.pairs) + 1

    def lp_arrays(self):
        """Arrays for :func:`lp.maximize` in the shifted variables ``d - 1 >= 0``, ``eps >= 0``."""
        nv = self.num_variables
        eps = nv - 1

        def row(outer, left, right):
            r = [0] * nv
            r[outer] += 1
            r[left] -= 1
            r[right] -= 1
            return r

        # d_xz - d_xy - d_yz = 0 becomes d'_xz - d'_xy - d'_yz = 1 after the shift
        A_eq = [row(*c) for c in self.equalities]
        b_eq = [1] * len(A_eq)
        A_ub = []
        for c in self.inequalities:
            r = row(*c)
            r[eps] = 1
            A_ub.append(r)
        b_ub = [1] * len(A_ub)
        cap = [0] * nv
        cap[eps] = 1
        A_ub.append(cap)
        b_ub.append(1)
        c = [0] * nv
        c[eps] = 1
        return c, A_ub, b_ub, A_eq, b_eq


def build_problem(b: BetweennessStructure) -> FeasibilityProblem:
    n = b.n
    pairs = tuple(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}

    def pid(u, v):
        return index[(u, v) if u < v else (v, u)]

    eqs, ineqs = [], []
    for a, bb, c in combinations(range(n), 3):
        mid = b.middle(a, bb, c)
        for y in (a, bb, c):
            x, z = (p for p in (a, bb, c) if p != y)
            con = (pid(x, z), pid(x, y), pid(y, z))
            (eqs if y == mid else ineqs).append(con)
    return FeasibilityProblem(n, pairs, tuple(eqs), tuple(ineqs))


def _canonical_form(b: BetweennessStructure) -> tuple[tuple[int, ...], tuple[Triple, ...]]:
    """Lexicographically least relabeling of ``b`` and the permutation achieving it."""
    best = None
    for perm in permutations(range(b.n)):
        relabeled = []
        for x, y, z in b.triples:
            px, pz = perm[x], perm[z]
            relabeled.append((px, perm[y], pz) if px < pz else (pz, perm[y], px))
        key = tuple(sorted(relabeled))
        if best is None or key < best[1]:
            best = (perm, key)
    return best


@lru_cache(maxsize=None)
def _solve(n: int, triples: tuple[Triple, ...]) -> tuple[tuple[Fraction, ...], ...] | None:
    b = BetweennessStructure(n, frozenset(triples))
    if n <= 2:
        return tuple(tuple(Fraction(int(x != y)) for y in range(n)) for x in range(n))
    problem = build_problem(b)
    res = lp.maximize(*problem.lp_arrays())
    if res.status != lp.OPTIMAL or res.value <= 0:
        return None
    d = [[Fraction(0)] * n for _ in range(n)]
    for (u, v), val in zip(problem.pairs, res.x):
        d[u][v] = d[v][u] = val + 1
    return tuple(map(tuple, d))


def is_metrizable(b: BetweennessStructure) -> MetricSpace | None:
    """A metric inducing exactly ``b``, or ``None`` if no metric does."""
    if b.n <= _CANONICAL_MAX_N:
        perm, key = _canonical_form(b)
        d = _solve(b.n, key)
        if d is None:
            return None
        rows = tuple(tuple(d[perm[x]][perm[y]] for y in range(b.n)) for x in range(b.n))
    else:
        rows = _solve(b.n, tuple(sorted(b.triples)))
        if rows is None:
            return None
    witness = MetricSpace(b.n, rows)
    if betweenness_of_metric(witness) != b:
        raise RuntimeError(f"LP witness does not re-induce {sorted(b.triples)}")
    return witness


@lru_cache(maxsize=None)
def _integer_metric_table(n: int, max_entry: int) -> dict:
    """Every structure induced by an integer metric with entries ``1..max_entry``."""
    pairs = list(combinations(range(n), 2))
    triangles = list(combinations(range(n), 3))
    found = {}
    for values in product(range(1, max_entry + 1), repeat=len(pairs)):
        d = [[0] * n for _ in range(n)]
        for (u, v), val in zip(pairs, values):
            d[u][v] = d[v][u] = val
        if any(
            d[a][c] > d[a][b] + d[b][c]
            or d[a][b] > d[a][c] + d[c][b]
            or d[b][c] > d[b][a] + d[a][c]
            for a, b, c in triangles
        ):
            continue
        found.setdefault(_betweenness_from_matrix(n, d).triples, values)
    return found


def brute_force_metrizable(b: BetweennessStructure, max_entry: int = 6) -> MetricSpace | None:
    """Exhaustive search over integer metrics with entries in ``1..max_entry``.

    Independent of the LP; only feasible for tiny ``n``.
    """
    if b.n > 5:
        raise TooLarge(f"brute force search is limited to n <= 5, got {b.n}")
    if b.n == 1:
        return MetricSpace(1, ((0,),))
    if max_entry ** comb(b.n, 2) > _BRUTE_FORCE_LIMIT:
        raise TooLarge(f"max_entry={max_entry} is too large for n={b.n}")
    values = _integer_metric_table(b.n, max_entry).get(b.triples)
    if values is None:
        return None
    d = [[0] * b.n for _ in range(b.n)]
    for (u, v), val in zip(combinations(range(b.n), 2), values):
        d[u][v] = d[v][u] = val
    return MetricSpace(b.n, tuple(map(tuple, d)))
