"""Pareto dominance primitives, a bounded non-dominated archive, and
front-quality metrics for minimization problems.

All objective vectors are minimized. Dominance is the usual strict
relation: u dominates v when u is no worse in every objective and
strictly better in at least one.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial import cKDTree


def _as_objective(u) -> np.ndarray:
    v = np.asarray(u, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("objective vector must be a non-empty 1-D array")
    if not np.all(np.isfinite(v)):
        raise ValueError("objective vector must be finite")
    return v


def _check_pair(u, v) -> tuple[np.ndarray, np.ndarray]:
    a, b = _as_objective(u), _as_objective(v)
    if a.shape != b.shape:
        raise ValueError(f"objective vectors differ in length: {a.size} vs {b.size}")
    return a, b


def dominates(u, v) -> bool:
    """True when u dominates v: u <= v in every component, < in at least one.

    Both vectors must be finite and of equal length. The relation is
    irreflexive and antisymmetric; equal vectors do not dominate each other.
    """
    a, b = _check_pair(u, v)
    return bool(np.all(a <= b) and np.any(a < b))


def dominates_or_equal(u, v) -> bool:
    """True when u dominates v or u equals v.

    Equivalent to componentwise u <= v: if no component is strictly
    smaller the vectors are identical, which satisfies the relation.
    """
    a, b = _check_pair(u, v)
    return bool(np.all(a <= b))


def non_dominated_filter(points) -> np.ndarray:
    """Indices of the points not dominated by any other point.

    Args:
        points: (n, K) array-like of finite objective vectors, n >= 1.

    Returns:
        Ascending array of indices into ``points``. Duplicate rows are
        all kept: equal vectors never dominate one another.
    """
    F = np.asarray(points, dtype=float)
    if F.ndim != 2 or F.shape[0] == 0:
        raise ValueError("points must be a non-empty (n, K) array")
    if not np.all(np.isfinite(F)):
        raise ValueError("points must be finite")
    n = F.shape[0]
    dominated = np.zeros(n, dtype=bool)
    # row blocks bound the broadcast to ~order n*K floats per pass
    block = max(1, min(n, 2_000_000 // (n * F.shape[1]) + 1))
    for start in range(0, n, block):
        A = F[start:start + block, None, :]
        le = (F[None, :, :] <= A).all(axis=-1)
        lt = (F[None, :, :] < A).any(axis=-1)
        dominated[start:start + block] = (le & lt).any(axis=1)
    return np.nonzero(~dominated)[0]


def crowding_distances(objectives) -> np.ndarray:
    """Crowding distance of each point within a set of objective vectors.

    Per-objective extremes get +inf; interior points sum the normalized
    gap between their neighbours along each objective axis.
    """
    F = np.asarray(objectives, dtype=float)
    if F.ndim != 2 or F.shape[0] == 0:
        raise ValueError("objectives must be a non-empty (n, K) array")
    n, k = F.shape
    dist = np.zeros(n)
    if n <= 2:
        dist[:] = np.inf
        return dist
    for col in range(k):
        order = np.argsort(F[:, col], kind="stable")
        lo, hi = F[order[0], col], F[order[-1], col]
        dist[order[0]] = dist[order[-1]] = np.inf
        span = hi - lo
        if span == 0.0:
            continue
        gaps = (F[order[2:], col] - F[order[:-2], col]) / span
        dist[order[1:-1]] += gaps
    return dist


def select_by_crowding(objectives, capacity: int) -> np.ndarray:
    """Indices of at most ``capacity`` points kept by iterated crowding removal.

    Repeatedly drops the point with the smallest crowding distance,
    breaking ties by removing the largest index, until the set fits.
    Per-objective extremes carry infinite distance and are never dropped
    while any finite-distance point remains.
    """
    F = np.asarray(objectives, dtype=float)
    if capacity < 1:
        raise ValueError("capacity must be >= 1")
    keep = list(range(F.shape[0]))
    while len(keep) > capacity:
        d = crowding_distances(F[keep])
        worst = np.nonzero(d == d.min())[0].max()
        del keep[worst]
    return np.asarray(keep, dtype=int)


class ParetoArchive:
    """Bounded archive of mutually non-dominated (design, objectives) pairs.

    A candidate is rejected when any current entry dominates or equals
    its objectives, so duplicates by objectives never accumulate.
    An accepted candidate evicts every entry it dominates. When the
    archive then exceeds its capacity, the entry with the smallest
    crowding distance is removed (largest index on ties); per-objective
    extremes are protected by their infinite distance.
    """

    def __init__(self, capacity: int = 100):
        if int(capacity) != capacity or capacity < 1:
            raise ValueError("capacity must be a positive integer")
        self.capacity = int(capacity)
        self._designs: list[np.ndarray] = []
        self._F: np.ndarray | None = None  # (m, K) buffer rows 0..m-1 valid
        self._m = 0

    def __len__(self) -> int:
        return self._m

    def insert(self, design, objectives) -> bool:
        """Offer one candidate. Returns True when the archive changed."""
        x = np.array(design, dtype=float, copy=True)
        f = _as_objective(objectives)
        if f.size < 2:
            raise ValueError("objective vector must have at least 2 components")
        if not np.all(np.isfinite(x)):
            raise ValueError("design vector must be finite")
        if self._F is None:
            self._F = np.empty((self.capacity + 1, f.size), dtype=float)
        elif f.size != self._F.shape[1]:
            raise ValueError("objective length does not match archive entries")

        M = self._F[: self._m]
        if self._m:
            # dominates-or-equal reduces to componentwise <=
            if bool((M <= f).all(axis=1).any()):
                return False
            evict = (f <= M).all(axis=1) & (f < M).any(axis=1)
            if evict.any():
                survivors = np.nonzero(~evict)[0]
                self._F[: survivors.size] = M[survivors]
                self._designs = [self._designs[i] for i in survivors]
                self._m = survivors.size
        self._F[self._m] = f
        self._designs.append(x)
        self._m += 1
        if self._m > self.capacity:
            self._truncate_one()
        return True

    def _truncate_one(self) -> None:
        d = crowding_distances(self._F[: self._m])
        worst = int(np.nonzero(d == d.min())[0].max())
        self._F[worst : self._m - 1] = self._F[worst + 1 : self._m]
        del self._designs[worst]
        self._m -= 1

    def objectives_array(self) -> np.ndarray:
        """(m, K) copy of the stored objective vectors, insertion order."""
        if self._m == 0:
            return np.empty((0, 0))
        return self._F[: self._m].copy()

    def designs_array(self) -> np.ndarray:
        """(m, d) copy of the stored design vectors, insertion order."""
        if self._m == 0:
            return np.empty((0, 0))
        return np.vstack(self._designs)

    def entries(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return [
            (self._designs[i].copy(), self._F[i].copy()) for i in range(self._m)
        ]

    def design_at(self, index: int) -> np.ndarray:
        """Copy of the stored design vector at ``index`` (insertion order)."""
        if not 0 <= index < self._m:
            raise IndexError(f"archive index {index} out of range")
        return self._designs[index].copy()


def random_weights(k: int, rng: np.random.Generator) -> np.ndarray:
    """K uniform draws normalized to sum exactly to one.

    Redraws in the measure-zero event that every draw is zero.
    """
    if k < 2:
        raise ValueError("need at least 2 objectives to draw weights")
    while True:
        p = rng.uniform(size=k)
        s = p.sum()
        if s > 0.0:
            return p / s


def weighted_scalarize(objectives, weights) -> float:
    """Weighted sum of the objectives under the given weight vector."""
    f = np.asarray(objectives, dtype=float)
    w = np.asarray(weights, dtype=float)
    if f.shape != w.shape:
        raise ValueError("objectives and weights differ in length")
    return float(np.dot(w, f))


class ReferenceFrontMetrics:
    """Nearest-point error metrics against a fixed reference front.

    Builds the nearest-neighbour index once so repeated evaluations
    against the same reference (e.g. per-iteration traces) stay cheap.
    """

    def __init__(self, reference):
        R = np.asarray(reference, dtype=float)
        if R.ndim != 2 or R.shape[0] == 0:
            raise ValueError("reference front must be a non-empty (m, K) array")
        if not np.all(np.isfinite(R)):
            raise ValueError("reference front must be finite")
        self.reference = R
        self._tree = cKDTree(R)

    def _distances(self, estimated) -> np.ndarray:
        E = np.asarray(estimated, dtype=float)
        if E.ndim != 2 or E.shape[0] == 0:
            raise ValueError("estimated front must be a non-empty (n, K) array")
        if E.shape[1] != self.reference.shape[1]:
            raise ValueError("estimated and reference fronts differ in width")
        if not np.all(np.isfinite(E)):
            raise ValueError("estimated front must be finite")
        d, _ = self._tree.query(E, k=1)
        return np.atleast_1d(d)

    def front_error(self, estimated) -> float:
        d = self._distances(estimated)
        return float(np.sum(d * d))

    def generational_distance(self, estimated) -> float:
        d = self._distances(estimated)
        return float(np.sqrt(np.sum(d * d)) / d.size)


def front_error(estimated, reference) -> float:
    """Sum of squared distances from each estimated point to its nearest
    reference point."""
    return ReferenceFrontMetrics(reference).front_error(estimated)


def generational_distance(estimated, reference) -> float:
    """sqrt(front_error) / N with N the number of estimated points."""
    return ReferenceFrontMetrics(reference).generational_distance(estimated)
