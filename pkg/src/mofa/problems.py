"""Benchmark problem definitions: five bi-objective test functions with
analytic Pareto fronts and two constrained engineering designs.

Every evaluator is a pure function of the design vector and rejects
points outside the problem bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .engine import BoundsBox
from .pareto import non_dominated_filter

_EMPTY = np.empty(0)


def _no_constraints(x) -> np.ndarray:
    return _EMPTY


@dataclass(frozen=True)
class ProblemDefinition:
    """A problem the engine can search.

    ``constraints`` returns inequality values g(x); the design is
    feasible when every component is <= 0 (always true for the empty
    array of an unconstrained problem). ``reference_front`` samples the
    analytic Pareto front when one is known, or is None.
    """

    name: str
    dimension: int
    objective_count: int
    bounds: BoundsBox
    evaluate: Callable[[np.ndarray], np.ndarray]
    constraints: Callable[[np.ndarray], np.ndarray]
    reference_front: Callable[[int], np.ndarray] | None = None

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if self.objective_count < 2:
            raise ValueError("need at least two objectives")
        if self.bounds.dimension != self.dimension:
            raise ValueError("bounds dimension does not match problem dimension")

    def is_feasible(self, x) -> bool:
        g = self.constraints(np.asarray(x, dtype=float))
        return bool(g.size == 0 or np.all(g <= 0.0))


def _check_box(x, lower, upper, name: str, size: int | None = None) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"{name}: design vector must be 1-D")
    if size is not None and v.size != size:
        raise ValueError(f"{name}: expected {size} variables, got {v.size}")
    if np.any(v < lower) or np.any(v > upper):
        raise ValueError(f"{name}: design vector outside bounds")
    return v


def sch_evaluate(x) -> np.ndarray:
    """f1 = x^2, f2 = (x - 2)^2 on a single variable in [-1000, 1000]."""
    v = _check_box(x, -1000.0, 1000.0, "sch", size=1)
    t = v[0]
    return np.array([t * t, (t - 2.0) * (t - 2.0)])


def _zdt_tail(x) -> float:
    return 1.0 + 9.0 * float(np.sum(x[1:])) / (x.size - 1)


def _check_zdt(x, name: str) -> np.ndarray:
    v = _check_box(x, 0.0, 1.0, name)
    if v.size < 2:
        raise ValueError(f"{name}: need at least 2 variables")
    return v


def zdt1_evaluate(x) -> np.ndarray:
    """Convex front: f2 = g * (1 - sqrt(f1/g))."""
    v = _check_zdt(x, "zdt1")
    f1 = v[0]
    g = _zdt_tail(v)
    return np.array([f1, g * (1.0 - np.sqrt(f1 / g))])


def zdt2_evaluate(x) -> np.ndarray:
    """Concave front: f2 = g * (1 - (f1/g)^2)."""
    v = _check_zdt(x, "zdt2")
    f1 = v[0]
    g = _zdt_tail(v)
    return np.array([f1, g * (1.0 - (f1 / g) ** 2)])


def zdt3_evaluate(x) -> np.ndarray:
    """Disconnected front: f2 = g * (1 - sqrt(f1/g) - (f1/g) sin(10 pi f1))."""
    v = _check_zdt(x, "zdt3")
    f1 = v[0]
    g = _zdt_tail(v)
    h = 1.0 - np.sqrt(f1 / g) - (f1 / g) * np.sin(10.0 * np.pi * f1)
    return np.array([f1, g * h])


def lz_evaluate(x) -> np.ndarray:
    """Bi-objective problem whose Pareto set is the curved manifold
    x_j = sin(6 pi x_1 + j pi / d); odd-indexed deviations load f1,
    even-indexed ones load f2."""
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size < 3:
        raise ValueError("lz: need at least 3 variables")
    if not 0.0 <= v[0] <= 1.0 or np.any(v[1:] < -1.0) or np.any(v[1:] > 1.0):
        raise ValueError("lz: design vector outside bounds")
    d = v.size
    js = np.arange(2, d + 1)
    sq = (v[1:] - np.sin(6.0 * np.pi * v[0] + js * np.pi / d)) ** 2
    odd = js % 2 == 1
    f1 = v[0] + 2.0 * float(np.mean(sq[odd]))
    f2 = 1.0 - np.sqrt(v[0]) + 2.0 * float(np.mean(sq[~odd]))
    return np.array([f1, f2])


_BEAM_LOWER = np.array([0.125, 0.1, 0.1, 0.125])
_BEAM_UPPER = np.array([2.0, 10.0, 10.0, 2.0])


def _beam_quantities(v: np.ndarray) -> tuple[float, float, float]:
    """Shear stress, bending stress and buckling load of a welded beam
    design (w, L, d, h)."""
    w, length, depth, h = v
    sigma = 504000.0 / (h * depth**2)
    q = 6000.0 * (14.0 + length / 2.0)
    big_d = 0.5 * np.sqrt(length**2 + (w + depth) ** 2)
    j = np.sqrt(2.0) * w * length * (length**2 / 6.0 + (w + depth) ** 2 / 2.0)
    beta = q * big_d / j
    alpha = 6000.0 / (np.sqrt(2.0) * w * length)
    tau = np.sqrt(alpha**2 + alpha * beta * length / big_d + beta**2)
    p_crit = 0.61423e6 * (depth * h**3 / 6.0) * (1.0 - depth * np.sqrt(30.0 / 48.0) / 28.0)
    return float(tau), float(sigma), float(p_crit)


def welded_beam_evaluate(x) -> np.ndarray:
    """Fabrication cost and tip deflection of a welded beam (w, L, d, h)."""
    v = _check_box(x, _BEAM_LOWER, _BEAM_UPPER, "beam", size=4)
    w, length, depth, h = v
    cost = 1.10471 * w**2 * length + 0.04811 * depth * h * (14.0 + length)
    deflection = 65856.0 / (30000.0 * h * depth**3)
    return np.array([cost, deflection])


def welded_beam_constraints(x) -> np.ndarray:
    """Seven inequality constraints, feasible when all <= 0."""
    v = _check_box(x, _BEAM_LOWER, _BEAM_UPPER, "beam", size=4)
    w, length, depth, h = v
    tau, sigma, p_crit = _beam_quantities(v)
    deflection = 65856.0 / (30000.0 * h * depth**3)
    return np.array([
        w - h,
        deflection - 0.25,
        tau - 13600.0,
        sigma - 30000.0,
        0.10471 * w**2 + 0.04811 * h * depth * (14.0 + length) - 5.0,
        0.125 - w,
        6000.0 - p_crit,
    ])


_BRAKE_LOWER = np.array([55.0, 75.0, 1000.0, 2.0])
_BRAKE_UPPER = np.array([80.0, 110.0, 3000.0, 20.0])


def _brake_vars(x) -> tuple[float, float, float, float]:
    v = _check_box(x, _BRAKE_LOWER, _BRAKE_UPPER, "brake", size=4)
    # the disc count s is an integer quantity searched continuously
    return float(v[0]), float(v[1]), float(v[2]), float(np.rint(v[3]))


def disc_brake_evaluate(x) -> np.ndarray:
    """Brake mass and stopping time for (inner radius, outer radius,
    actuating force, disc count)."""
    r, rr, force, s = _brake_vars(x)
    a2 = rr**2 - r**2
    a3 = rr**3 - r**3
    mass = 4.9e-5 * a2 * (s - 1.0)
    stop_time = 9.82e6 * a2 / (force * s * a3)
    return np.array([mass, stop_time])


def disc_brake_constraints(x) -> np.ndarray:
    """Five inequality constraints, feasible when all <= 0."""
    r, rr, force, s = _brake_vars(x)
    a2 = rr**2 - r**2
    a3 = rr**3 - r**3
    return np.array([
        20.0 - (rr - r),
        2.5 * (s + 1.0) - 30.0,
        force / (3.14 * a2) - 0.4,
        2.22e-3 * force * a3 / a2**2 - 1.0,
        900.0 - 0.0266 * force * s * a3 / a2,
    ])


def _front_samples(m: int) -> int:
    if int(m) != m or m < 2:
        raise ValueError("samples must be an integer >= 2")
    return int(m)


def _sch_front(m: int) -> np.ndarray:
    xs = np.linspace(0.0, 2.0, _front_samples(m))
    return np.column_stack((xs**2, (xs - 2.0) ** 2))


def _convex_front(m: int) -> np.ndarray:
    f1 = np.linspace(0.0, 1.0, _front_samples(m))
    return np.column_stack((f1, 1.0 - np.sqrt(f1)))


def _zdt2_front(m: int) -> np.ndarray:
    f1 = np.linspace(0.0, 1.0, _front_samples(m))
    return np.column_stack((f1, 1.0 - f1**2))


def _zdt3_front(m: int) -> np.ndarray:
    x1 = np.linspace(0.0, 1.0, _front_samples(m))
    f2 = 1.0 - np.sqrt(x1) - x1 * np.sin(10.0 * np.pi * x1)
    pts = np.column_stack((x1, f2))
    return pts[non_dominated_filter(pts)]


def sample_reference_front(problem: ProblemDefinition, samples: int) -> np.ndarray:
    """Sample the analytic Pareto front of a problem that has one,
    sorted by the first objective."""
    if problem.reference_front is None:
        raise ValueError(f"'{problem.name}' has no analytic reference front")
    return problem.reference_front(samples)


def _unit_box(d: int) -> BoundsBox:
    return BoundsBox(np.zeros(d), np.ones(d))


def sch_problem() -> ProblemDefinition:
    return ProblemDefinition(
        name="sch", dimension=1, objective_count=2,
        bounds=BoundsBox(np.array([-1000.0]), np.array([1000.0])),
        evaluate=sch_evaluate, constraints=_no_constraints,
        reference_front=_sch_front,
    )


def zdt1_problem(dimension: int = 30) -> ProblemDefinition:
    return ProblemDefinition(
        name="zdt1", dimension=dimension, objective_count=2,
        bounds=_unit_box(dimension),
        evaluate=zdt1_evaluate, constraints=_no_constraints,
        reference_front=_convex_front,
    )


def zdt2_problem(dimension: int = 30) -> ProblemDefinition:
    return ProblemDefinition(
        name="zdt2", dimension=dimension, objective_count=2,
        bounds=_unit_box(dimension),
        evaluate=zdt2_evaluate, constraints=_no_constraints,
        reference_front=_zdt2_front,
    )


def zdt3_problem(dimension: int = 30) -> ProblemDefinition:
    return ProblemDefinition(
        name="zdt3", dimension=dimension, objective_count=2,
        bounds=_unit_box(dimension),
        evaluate=zdt3_evaluate, constraints=_no_constraints,
        reference_front=_zdt3_front,
    )


def lz_problem(dimension: int = 30) -> ProblemDefinition:
    lower = np.full(dimension, -1.0)
    lower[0] = 0.0
    return ProblemDefinition(
        name="lz", dimension=dimension, objective_count=2,
        bounds=BoundsBox(lower, np.ones(dimension)),
        evaluate=lz_evaluate, constraints=_no_constraints,
        reference_front=_convex_front,
    )


def welded_beam_problem() -> ProblemDefinition:
    return ProblemDefinition(
        name="beam", dimension=4, objective_count=2,
        bounds=BoundsBox(_BEAM_LOWER, _BEAM_UPPER),
        evaluate=welded_beam_evaluate, constraints=welded_beam_constraints,
    )


def disc_brake_problem() -> ProblemDefinition:
    return ProblemDefinition(
        name="brake", dimension=4, objective_count=2,
        bounds=BoundsBox(_BRAKE_LOWER, _BRAKE_UPPER),
        evaluate=disc_brake_evaluate, constraints=disc_brake_constraints,
    )


PROBLEMS: dict[str, Callable[[], ProblemDefinition]] = {
    "sch": sch_problem,
    "zdt1": zdt1_problem,
    "zdt2": zdt2_problem,
    "zdt3": zdt3_problem,
    "lz": lz_problem,
    "beam": welded_beam_problem,
    "brake": disc_brake_problem,
}


def available_problems() -> tuple[str, ...]:
    return tuple(PROBLEMS)


def get_problem(name: str) -> ProblemDefinition:
    try:
        factory = PROBLEMS[name]
    except KeyError:
        known = ", ".join(PROBLEMS)
        raise ValueError(f"unknown problem '{name}' (available: {known})") from None
    return factory()
