"""Multiobjective firefly search engine.

One iteration sweeps every ordered pair of fireflies: a firefly moves
toward any firefly whose objectives dominate its own, with the move

    x_i <- x_i + beta0 * exp(-gamma * r^2) * (x_j - x_i) + alpha_t * s * eps

where r is the Euclidean distance between the pair, s is the
per-dimension walk amplitude and eps is i.i.d. standard Gaussian noise.
Fireflies dominated by nobody take a random walk around the best
solution of a randomly weighted scalarization, drawn fresh each
iteration. The randomness amplitude decays geometrically,
alpha_t = alpha0 * theta^t. Every feasible evaluation is offered to a
bounded non-dominated archive.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .pareto import ParetoArchive, ReferenceFrontMetrics, random_weights


class InitializationError(RuntimeError):
    """Raised when no feasible starting point can be drawn."""


@dataclass(frozen=True)
class BoundsBox:
    """Axis-aligned box of valid designs, lower[i] < upper[i] everywhere."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.lower, dtype=float))
        hi = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lo.shape != hi.shape or lo.ndim != 1 or lo.size == 0:
            raise ValueError("bounds must be matching non-empty 1-D arrays")
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
            raise ValueError("bounds must be finite")
        if not np.all(lo < hi):
            raise ValueError("every lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def dimension(self) -> int:
        return self.lower.size

    @property
    def lengths(self) -> np.ndarray:
        return self.upper - self.lower

    def clip(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)

    def contains(self, x) -> bool:
        v = np.asarray(x, dtype=float)
        return bool(np.all(v >= self.lower) and np.all(v <= self.upper))

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(self.lower, self.upper)


@dataclass(frozen=True)
class MofaConfig:
    """Engine parameters.

    ``walk_scale`` multiplies the per-dimension random-step amplitude,
    which tracks the swarm's current design spread (see
    ``adaptive_scales``); the decaying factor alpha0 * theta^t scales it
    every iteration. The default ``decay_theta`` keeps that factor alive
    for runs of a few thousand iterations; steeper decay freezes the
    search long before the archive settles. ``alpha_min`` optionally
    floors the factor (0 keeps the pure geometric decay).
    ``feasibility_retries`` bounds the uniform redraws taken when a move
    lands outside the feasible region of a constrained problem.
    """

    population_size: int = 50
    iterations: int = 2500
    alpha0: float = 0.25
    beta0: float = 1.0
    gamma_base: float = 1.0
    decay_theta: float = 0.985
    walk_scale: float = 1.0
    archive_capacity: int = 100
    feasibility_retries: int = 10
    seed: int = 0
    alpha_min: float = 0.0

    def __post_init__(self):
        if int(self.population_size) != self.population_size or self.population_size < 1:
            raise ValueError("population_size must be a positive integer")
        if int(self.iterations) != self.iterations or self.iterations < 0:
            raise ValueError("iterations must be a non-negative integer")
        if not 0.0 <= self.alpha0 <= 1.0:
            raise ValueError("alpha0 must lie in [0, 1]")
        if not 0.0 <= self.beta0 <= 1.0:
            raise ValueError("beta0 must lie in [0, 1]")
        if not self.gamma_base > 0.0:
            raise ValueError("gamma_base must be positive")
        if not 0.0 < self.decay_theta < 1.0:
            raise ValueError("decay_theta must lie in (0, 1)")
        if not self.walk_scale > 0.0:
            raise ValueError("walk_scale must be positive")
        if int(self.archive_capacity) != self.archive_capacity or self.archive_capacity < 1:
            raise ValueError("archive_capacity must be a positive integer")
        if int(self.feasibility_retries) != self.feasibility_retries or self.feasibility_retries < 0:
            raise ValueError("feasibility_retries must be a non-negative integer")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not 0.0 <= self.alpha_min <= 1.0:
            raise ValueError("alpha_min must lie in [0, 1]")


@dataclass
class Firefly:
    position: np.ndarray
    objectives: np.ndarray
    feasible: bool


@dataclass
class Diagnostics:
    evaluations: int = 0
    infeasible_moves: int = 0
    retry_draws: int = 0
    reverted_moves: int = 0
    nonfinite_evaluations: int = 0


@dataclass
class EngineState:
    population: list[Firefly]
    archive: ParetoArchive
    rng: np.random.Generator
    iteration: int = 0
    g_star: np.ndarray | None = None
    best_psi: float | None = None
    diagnostics: Diagnostics = field(default_factory=Diagnostics)


@dataclass
class RunResult:
    """Outcome of one seeded run.

    ``trace`` holds ``(iteration, generational_distance, front_error)``
    rows when the problem has a reference front and ``(iteration,
    best_psi)`` rows otherwise, as flagged by ``trace_kind``
    ("metrics" or "scalarized").
    """

    problem: str
    config: MofaConfig
    archive_designs: np.ndarray
    archive_objectives: np.ndarray
    trace: list[tuple]
    trace_kind: str
    diagnostics: Diagnostics
    wall_seconds: float


def attractiveness(r: float, beta0: float, gamma: float) -> float:
    """beta0 * exp(-gamma * r^2) for a pair at distance r >= 0."""
    if r < 0.0:
        raise ValueError("distance must be non-negative")
    if gamma < 0.0:
        raise ValueError("gamma must be non-negative")
    return beta0 * math.exp(-gamma * r * r)


def scale_params(bounds: BoundsBox, config: MofaConfig) -> tuple[np.ndarray, np.ndarray]:
    """Per-dimension walk amplitudes and absorption coefficients.

    alpha_vec[i] = walk_scale * L[i] and gamma_vec[i] = 0.5 / L[i]^2
    where L is the side length of the bounds box.
    """
    L = bounds.lengths
    return config.walk_scale * L, 0.5 / (L * L)


def effective_gamma(bounds: BoundsBox, config: MofaConfig) -> float:
    """Scalar absorption used in the attraction term: gamma_base times
    the mean of the per-dimension coefficients."""
    _, gamma_vec = scale_params(bounds, config)
    return config.gamma_base * float(np.mean(gamma_vec))


def adaptive_scales(archive: ParetoArchive, population: list[Firefly],
                    bounds: BoundsBox, config: MofaConfig) -> np.ndarray:
    """Per-dimension noise amplitudes tied to the swarm's design extent.

    A fixed fraction of the bounds box cannot serve every problem at once:
    a box thousands of units wide whose interesting region spans a few
    units needs far smaller steps than the box suggests, while a unit box
    needs the full width early on. The joint spread of the population and
    the best-so-far designs is the scale of the region worth searching:
    it starts near the box width and contracts as the swarm converges.
    Falls back to the box lengths below two points.
    """
    rows = [fly.position for fly in population]
    if len(archive):
        rows.append(archive.designs_array())
    if len(rows) < 2:
        return config.walk_scale * bounds.lengths
    X = np.vstack(rows)
    if X.shape[0] < 2:
        return config.walk_scale * bounds.lengths
    extent = X.max(axis=0) - X.min(axis=0)
    return config.walk_scale * extent


def decay_alpha(alpha0: float, t: int, theta: float) -> float:
    """Randomness amplitude at iteration t: alpha0 * theta^t."""
    if t < 0:
        raise ValueError("iteration index must be non-negative")
    if not 0.0 < theta < 1.0:
        raise ValueError("theta must lie in (0, 1)")
    return alpha0 * theta**t


def move_towards(
    xi: np.ndarray,
    xj: np.ndarray,
    alpha_t: float,
    alpha_vec: np.ndarray,
    gamma: float,
    beta0: float,
    rng: np.random.Generator,
    bounds: BoundsBox,
) -> np.ndarray:
    """Candidate position for a firefly at xi attracted by one at xj.

    Adds Gaussian noise scaled by alpha_t * alpha_vec per dimension and
    clamps the result to the bounds box.
    """
    if xi.shape != xj.shape:
        raise ValueError("positions must have matching shapes")
    r = float(np.linalg.norm(xi - xj))
    beta = attractiveness(r, beta0, gamma)
    eps = rng.standard_normal(xi.size)
    return bounds.clip(xi + beta * (xj - xi) + alpha_t * alpha_vec * eps)


def random_walk_best(
    g_star: np.ndarray,
    alpha_t: float,
    alpha_vec: np.ndarray,
    rng: np.random.Generator,
    bounds: BoundsBox,
) -> np.ndarray:
    """Gaussian step around the scalarized-best position, clamped to bounds."""
    eps = rng.standard_normal(g_star.size)
    return bounds.clip(g_star + alpha_t * alpha_vec * eps)


def _best_scalarized_index(population: list[Firefly], w: np.ndarray) -> tuple[int, float]:
    feasible = [i for i, f in enumerate(population) if f.feasible]
    candidates = feasible if feasible else range(len(population))
    best_i, best_psi = -1, math.inf
    for i in candidates:
        f = population[i].objectives
        psi = float(np.dot(w, f))
        if not math.isfinite(psi):
            continue
        if psi < best_psi:
            best_i, best_psi = i, psi
    if best_i < 0:
        # every candidate scalarized to non-finite; fall back to the first
        best_i = candidates[0] if feasible else 0
        best_psi = math.inf
    return best_i, best_psi


def find_best_scalarized(population: list[Firefly], w) -> np.ndarray:
    """Position of the firefly minimizing the weighted objective sum.

    Only feasible fireflies compete when any exist; ties keep the
    lowest index.
    """
    if not population:
        raise ValueError("population must be non-empty")
    weights = np.asarray(w, dtype=float)
    i, _ = _best_scalarized_index(population, weights)
    return population[i].position.copy()


def _evaluate(problem, x: np.ndarray, diag: Diagnostics) -> tuple[np.ndarray, bool, bool]:
    """Evaluate one design: (objectives, feasible, finite)."""
    diag.evaluations += 1
    f = problem.evaluate(x)
    if not np.all(np.isfinite(f)):
        diag.nonfinite_evaluations += 1
        return f, False, False
    g = problem.constraints(x)
    feasible = bool(g.size == 0 or np.all(g <= 0.0))
    return f, feasible, True


def _dominates_pair(fj: np.ndarray, fi: np.ndarray) -> bool:
    # unchecked fast path; engine objectives are validated on evaluation
    return bool(np.all(fj <= fi) and np.any(fj < fi))


def initialize(problem, config: MofaConfig, rng: np.random.Generator | None = None) -> EngineState:
    """Draw the starting population uniformly within bounds.

    Infeasible draws are redrawn up to ``feasibility_retries`` times per
    firefly and the last draw is kept either way. Raises
    InitializationError when not a single feasible point turns up in
    population_size * (feasibility_retries + 1) draws.
    """
    if rng is None:
        rng = np.random.default_rng(config.seed)
    diag = Diagnostics()
    population: list[Firefly] = []
    archive = ParetoArchive(config.archive_capacity)
    for _ in range(config.population_size):
        x = problem.bounds.sample(rng)
        f, feasible, finite = _evaluate(problem, x, diag)
        tries = 0
        while not feasible and tries < config.feasibility_retries:
            tries += 1
            diag.retry_draws += 1
            x = problem.bounds.sample(rng)
            f, feasible, finite = _evaluate(problem, x, diag)
        population.append(Firefly(x, f, feasible))
        if feasible and finite:
            archive.insert(x, f)
    if not any(fly.feasible for fly in population):
        draws = config.population_size * (config.feasibility_retries + 1)
        raise InitializationError(
            f"no feasible point found for '{problem.name}' in {draws} uniform draws"
        )
    state = EngineState(population=population, archive=archive, rng=rng)
    state.diagnostics = diag
    return state


def _dominates_tuple(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))


def step(state: EngineState, problem, config: MofaConfig) -> EngineState:
    """Advance the search by one iteration (see module docstring)."""
    if state.iteration >= config.iterations:
        raise ValueError("step called past the configured iteration count")
    pop = state.population
    n = len(pop)
    diag = state.diagnostics
    bounds = problem.bounds
    alpha_vec = adaptive_scales(state.archive, pop, bounds, config)
    gamma = effective_gamma(bounds, config)
    alpha_t = max(decay_alpha(config.alpha0, state.iteration, config.decay_theta),
                  config.alpha_min)

    # scalar caches keep the O(n^2) comparison sweep off numpy overhead
    objt: list[tuple] = [tuple(map(float, fly.objectives)) for fly in pop]
    feas: list[bool] = [fly.feasible for fly in pop]
    F = np.array(objt)
    feas_arr = np.array(feas)

    def settle(i: int, candidate: np.ndarray) -> None:
        """Accept the candidate, or retry uniformly, or revert."""
        fly = pop[i]
        if np.array_equal(candidate, fly.position):
            return  # no-op move: nothing new to evaluate or archive
        f, feasible, finite = _evaluate(problem, candidate, diag)
        if finite and feasible:
            fly.position, fly.objectives, fly.feasible = candidate, f, True
        else:
            if finite:
                diag.infeasible_moves += 1
            for _ in range(config.feasibility_retries):
                diag.retry_draws += 1
                x = bounds.sample(state.rng)
                f, feasible, finite = _evaluate(problem, x, diag)
                if finite and feasible:
                    fly.position, fly.objectives, fly.feasible = x, f, True
                    break
            else:
                diag.reverted_moves += 1
                return
        objt[i] = tuple(map(float, f))
        feas[i] = True
        F[i] = f
        feas_arr[i] = True
        state.archive.insert(fly.position, f)

    # pairwise attraction sweep; updates are visible to later pairs
    two = problem.objective_count == 2
    for i in range(n):
        for j in range(n):
            if i == j or not (feas[i] and feas[j]):
                continue
            a, b = objt[j], objt[i]
            if two:
                if not (a[0] <= b[0] and a[1] <= b[1] and (a[0] < b[0] or a[1] < b[1])):
                    continue
            elif not _dominates_tuple(a, b):
                continue
            candidate = move_towards(
                pop[i].position, pop[j].position, alpha_t, alpha_vec, gamma,
                config.beta0, state.rng, bounds,
            )
            settle(i, candidate)

    # fireflies no valid comparison dominates each walk around the best
    # solution of a freshly weighted scalarization
    if feas_arr.any():
        A = F[feas_arr]
        le = (A[:, None, :] <= F[None, :, :]).all(axis=-1)
        lt = (A[:, None, :] < F[None, :, :]).any(axis=-1)
        dominated = (le & lt).any(axis=0)
        walkers = ~(feas_arr & dominated)
    else:
        walkers = np.ones(n, dtype=bool)
    # one fresh scalarization per iteration; best-so-far means best over
    # everything seen, so the archive competes with the population for g*
    w = random_weights(problem.objective_count, state.rng)
    psis = F @ w
    if feas_arr.any():
        psis = np.where(feas_arr, psis, math.inf)
    psis = np.where(np.isfinite(psis), psis, math.inf)
    best_j = int(np.argmin(psis))
    psi = float(psis[best_j])
    g_star = pop[best_j].position
    arch_F = state.archive.objectives_array()
    if arch_F.size:
        arch_psis = arch_F @ w
        best_a = int(np.argmin(arch_psis))
        if float(arch_psis[best_a]) <= psi:
            psi = float(arch_psis[best_a])
            g_star = state.archive.design_at(best_a)
    state.g_star, state.best_psi = g_star.copy(), psi

    # walkers split duty: half walk around the best-so-far point of a
    # fresh per-walker scalarization (archive entries compete with the
    # population), a selection pressure that keeps descending toward the
    # front; half anchor on uniformly drawn archive entries, maintaining
    # every stored front region regardless of how the weights support it
    for i in range(n):
        if not walkers[i]:
            continue
        m = len(state.archive)
        if m and state.rng.random() < 0.5:
            anchor = state.archive.design_at(int(state.rng.integers(m)))
        else:
            wi = random_weights(problem.objective_count, state.rng)
            psis = F @ wi
            if feas_arr.any():
                psis = np.where(feas_arr, psis, math.inf)
            psis = np.where(np.isfinite(psis), psis, math.inf)
            best_j = int(np.argmin(psis))
            psi_i = float(psis[best_j])
            anchor = pop[best_j].position
            if m:
                arch_psis = state.archive.objectives_array() @ wi
                best_a = int(np.argmin(arch_psis))
                if float(arch_psis[best_a]) <= psi_i:
                    anchor = state.archive.design_at(best_a)
        candidate = random_walk_best(anchor, alpha_t, alpha_vec, state.rng, bounds)
        settle(i, candidate)

    state.iteration += 1
    return state


def _trace_point(t: int, final: int) -> bool:
    return t <= 1000 or t % 10 == 0 or t == final


def run(problem, config: MofaConfig, *, reference_samples: int = 1000,
        collect_trace: bool = True) -> RunResult:
    """Execute a full seeded run and return the archive plus a trace.

    The same (problem, config) pair always reproduces the same result;
    all randomness flows from one generator seeded with ``config.seed``.
    """
    start = time.perf_counter()
    state = initialize(problem, config)
    metrics = None
    if collect_trace and problem.reference_front is not None:
        metrics = ReferenceFrontMetrics(problem.reference_front(reference_samples))
    trace: list[tuple] = []
    trace_kind = "metrics" if metrics is not None else "scalarized"
    if metrics is not None:
        F = state.archive.objectives_array()
        trace.append((0, metrics.generational_distance(F), metrics.front_error(F)))
    for t in range(config.iterations):
        step(state, problem, config)
        if not collect_trace or not _trace_point(t + 1, config.iterations):
            continue
        if metrics is not None:
            F = state.archive.objectives_array()
            trace.append((t + 1, metrics.generational_distance(F), metrics.front_error(F)))
        else:
            trace.append((t + 1, state.best_psi))
    return RunResult(
        problem=problem.name,
        config=config,
        archive_designs=state.archive.designs_array(),
        archive_objectives=state.archive.objectives_array(),
        trace=trace,
        trace_kind=trace_kind,
        diagnostics=state.diagnostics,
        wall_seconds=time.perf_counter() - start,
    )
