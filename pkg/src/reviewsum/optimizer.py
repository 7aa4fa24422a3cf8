"""0-1 sentence selection: exact branch-and-bound and a greedy fallback.

The problem maximizes  sum_i score_i x_i  -  lambda * sum_{i<j} sim_ij x_i x_j  -  C
subject to  sum_i l_i x_i <= L,  where C = |fp * sum_i m_i x_i - (1-fp) * sum_i f_i x_i|
penalizes deviation from the requested female/male mix. The pair sum runs
over unordered pairs; the ordered reading is identical with twice the
penalty weight.

Solvers share one canonical objective evaluation, so exact solver and
brute-force oracle produce bit-identical values and agree on the tie rule
(lexicographically smallest selected index set among optima).
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import DataError, InfeasibleError

TIE_EPS = 1e-12
ORACLE_LIMIT = 20
PROBLEM_MAGIC = "reviewsum-problem v1"


@dataclass
class SolverConfig:
    exact_limit: int = 40
    time_limit: float | None = 60.0


@dataclass
class SelectionProblem:
    """Immutable-by-convention instance of the selection program."""

    score: list[float]
    length: list[int]
    is_female: list[bool]
    sim: list[list[float]]
    budget: int
    female_ratio: float
    penalty_weight: float = 1.0
    fairness_enabled: bool = True

    def __post_init__(self):
        self.score = [float(s) for s in self.score]
        self.length = [int(l) for l in self.length]
        self.is_female = [bool(f) for f in self.is_female]
        self.sim = [[float(v) for v in row] for row in self.sim]
        n = len(self.score)
        if not (len(self.length) == len(self.is_female) == n):
            raise ValueError("score, length, is_female must have equal length")
        if len(self.sim) != n or any(len(row) != n for row in self.sim):
            raise ValueError(f"sim must be {n}x{n}")
        for i in range(n):
            if not 0.0 <= self.score[i] <= 1.0:
                raise ValueError(f"score[{i}]={self.score[i]} outside [0,1]")
            if self.length[i] < 1:
                raise ValueError(f"length[{i}]={self.length[i]} must be >= 1")
            if self.sim[i][i] != 0.0:
                raise ValueError(f"sim[{i}][{i}] must be 0")
            for j in range(i + 1, n):
                if abs(self.sim[i][j] - self.sim[j][i]) > 1e-12:
                    raise ValueError(f"sim not symmetric at ({i},{j})")
                if not 0.0 <= self.sim[i][j] <= 1.0:
                    raise ValueError(f"sim[{i}][{j}]={self.sim[i][j]} outside [0,1]")
        if self.budget < 0:
            raise ValueError(f"budget {self.budget} must be >= 0")
        if not 0.0 <= self.female_ratio <= 1.0:
            raise ValueError(f"female_ratio {self.female_ratio} outside [0,1]")
        if self.penalty_weight < 0:
            raise ValueError(f"penalty_weight {self.penalty_weight} must be >= 0")

    @property
    def n(self) -> int:
        return len(self.score)


@dataclass(frozen=True)
class Solution:
    selected: tuple[bool, ...]
    objective: float
    score_sum: float
    penalty_sum: float
    fairness_term: float
    total_length: int
    optimal: bool

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.selected) if x)


def _objective_parts(problem: SelectionProblem, indices: tuple[int, ...]):
    """Canonical evaluation used by every solver: ascending index order."""
    score_sum = 0.0
    total_length = 0
    females = 0
    for i in indices:
        score_sum += problem.score[i]
        total_length += problem.length[i]
        if problem.is_female[i]:
            females += 1
    penalty = 0.0
    for a in range(len(indices)):
        row = problem.sim[indices[a]]
        for b in range(a + 1, len(indices)):
            penalty += row[indices[b]]
    males = len(indices) - females
    fp = problem.female_ratio
    excess = fp * males - (1.0 - fp) * females
    fairness = abs(excess) if problem.fairness_enabled else 0.0
    objective = score_sum - problem.penalty_weight * penalty - fairness
    return score_sum, penalty, fairness, total_length, objective


def _solution(problem: SelectionProblem, indices: tuple[int, ...], optimal: bool) -> Solution:
    score_sum, penalty, fairness, total_length, objective = _objective_parts(problem, indices)
    selected = [False] * problem.n
    for i in indices:
        selected[i] = True
    sol = Solution(
        selected=tuple(selected),
        objective=objective,
        score_sum=score_sum,
        penalty_sum=penalty,
        fairness_term=fairness,
        total_length=total_length,
        optimal=optimal,
    )
    verify_solution(problem, sol)
    return sol


def verify_solution(problem: SelectionProblem, sol: Solution) -> None:
    """Post-hoc invariant check run on every solve.

    Asserts the length budget, that the fairness term equals max(e, -e) of
    the signed mix excess e (the linearized absolute value at its optimum),
    and that the objective decomposes as score - lambda*penalty - fairness.
    """
    if sol.total_length > problem.budget:
        raise InfeasibleError(
            f"selection length {sol.total_length} exceeds budget {problem.budget}"
        )
    indices = sol.indices
    females = sum(1 for i in indices if problem.is_female[i])
    males = len(indices) - females
    fp = problem.female_ratio
    excess = fp * males - (1.0 - fp) * females
    expected_fairness = max(excess, -excess) if problem.fairness_enabled else 0.0
    if abs(sol.fairness_term - expected_fairness) > 1e-9:
        raise AssertionError(
            f"fairness term {sol.fairness_term} != |excess| {expected_fairness}"
        )
    recomputed = sol.score_sum - problem.penalty_weight * sol.penalty_sum - sol.fairness_term
    if abs(sol.objective - recomputed) > 1e-9:
        raise AssertionError(f"objective {sol.objective} != decomposition {recomputed}")


def evaluate_objective(problem: SelectionProblem, selected: Sequence[bool]) -> Solution:
    """Exact objective of a given selection; rejects budget violations."""
    if len(selected) != problem.n:
        raise ValueError(f"selected has length {len(selected)}, expected {problem.n}")
    indices = tuple(i for i, x in enumerate(selected) if x)
    total_length = sum(problem.length[i] for i in indices)
    if total_length > problem.budget:
        raise InfeasibleError(
            f"selection length {total_length} exceeds budget {problem.budget}"
        )
    return _solution(problem, indices, optimal=False)


def _beats(objective: float, indices: tuple[int, ...], best_objective: float,
           best_indices: tuple[int, ...]) -> bool:
    """Tie rule: higher objective wins; near-ties prefer the lexicographically
    smallest index set."""
    if objective > best_objective + TIE_EPS:
        return True
    if objective < best_objective - TIE_EPS:
        return False
    return indices < best_indices


def brute_force_oracle(problem: SelectionProblem) -> Solution:
    """Exhaustive reference solver over all 2^n subsets (n <= 20)."""
    n = problem.n
    if n > ORACLE_LIMIT:
        raise ValueError(f"brute force limited to n <= {ORACLE_LIMIT}, got {n}")
    best_indices: tuple[int, ...] = ()
    best_objective = _objective_parts(problem, ())[4]
    for mask in range(1, 1 << n):
        indices = tuple(i for i in range(n) if mask >> i & 1)
        if sum(problem.length[i] for i in indices) > problem.budget:
            continue
        objective = _objective_parts(problem, indices)[4]
        if _beats(objective, indices, best_objective, best_indices):
            best_indices, best_objective = indices, objective
    return _solution(problem, best_indices, optimal=True)


def solve_exact(problem: SelectionProblem, config: SolverConfig | None = None) -> Solution:
    """Best-first branch and bound, exact up to the configured size limit.

    The node bound relaxes the remaining score term to a fractional
    knapsack and drops future redundancy and fairness penalties (both only
    lower the objective). Ties are broken like the oracle. On timeout the
    best incumbent is returned with optimal=False.
    """
    config = config or SolverConfig()
    n = problem.n
    if n > config.exact_limit:
        raise ValueError(
            f"instance size {n} exceeds exact_limit {config.exact_limit}; "
            "use solve_heuristic for large instances"
        )
    deadline = None if config.time_limit is None else time.monotonic() + config.time_limit

    # branch on items in density order; the tie rule acts on index sets, so
    # branching order is free to chase strong bounds first
    order = sorted(range(n), key=lambda i: (-problem.score[i] / problem.length[i], i))

    def bound(level: int, used: int, score_sum: float, penalty_sum: float) -> float:
        rem = problem.budget - used
        gain = 0.0
        for pos in range(level, n):
            if rem <= 0:
                break
            i = order[pos]
            s, l = problem.score[i], problem.length[i]
            if s <= 0.0:
                break
            if l <= rem:
                gain += s
                rem -= l
            else:
                gain += s * (rem / l)
                break
        return score_sum - problem.penalty_weight * penalty_sum + gain

    # greedy warm start tightens pruning from the first pop
    warm = solve_heuristic(problem, config)
    best_indices = warm.indices
    best_objective = warm.objective
    empty_objective = _objective_parts(problem, ())[4]
    if _beats(empty_objective, (), best_objective, best_indices):
        best_indices, best_objective = (), empty_objective
    optimal = True

    counter = 0
    heap = [(-bound(0, 0, 0.0, 0.0), counter, 0, (), 0, 0.0, 0.0)]
    while heap:
        if deadline is not None and time.monotonic() > deadline:
            optimal = False
            break
        neg_bound, _, level, chosen, used, score_sum, penalty_sum = heapq.heappop(heap)
        if -neg_bound < best_objective - TIE_EPS:
            continue
        if level == n:
            indices = tuple(sorted(chosen))
            objective = _objective_parts(problem, indices)[4]
            if _beats(objective, indices, best_objective, best_indices):
                best_indices, best_objective = indices, objective
            continue
        item = order[level]
        # exclude
        b = bound(level + 1, used, score_sum, penalty_sum)
        if b >= best_objective - TIE_EPS:
            counter += 1
            heapq.heappush(heap, (-b, counter, level + 1, chosen, used, score_sum, penalty_sum))
        # include when it fits
        l = problem.length[item]
        if used + l <= problem.budget:
            extra = sum(problem.sim[item][j] for j in chosen)
            inc_score = score_sum + problem.score[item]
            inc_penalty = penalty_sum + extra
            b = bound(level + 1, used + l, inc_score, inc_penalty)
            if b >= best_objective - TIE_EPS:
                counter += 1
                heapq.heappush(
                    heap,
                    (-b, counter, level + 1, chosen + (item,), used + l, inc_score, inc_penalty),
                )
    return _solution(problem, best_indices, optimal=optimal)


def solve_heuristic(problem: SelectionProblem, config: SolverConfig | None = None) -> Solution:
    """Greedy by marginal objective gain; always feasible, never claims optimality.

    Gain of adding i to selection S is
    score_i - lambda * sum_{j in S} sim_ij - (C(S + i) - C(S)); ties prefer
    the higher gain-to-length ratio, then the smaller index. Items are added
    while anything fits the budget (gains may dip negative: the first pick
    under fp=0.5 always pays the full fairness gap until a second one
    rebalances it), and the best prefix of the greedy sequence is returned.
    """
    n = problem.n
    fp = problem.female_ratio
    chosen = [False] * n
    picked: list[int] = []
    sim_to_selected = [0.0] * n
    used = 0
    females = 0
    current_fairness = 0.0
    running_objective = 0.0
    best_prefix_len = 0
    best_prefix_objective = 0.0
    while len(picked) < n:
        best_i = -1
        best_key: tuple[float, float, int] | None = None
        for i in range(n):
            if chosen[i] or used + problem.length[i] > problem.budget:
                continue
            if problem.fairness_enabled:
                nf = females + (1 if problem.is_female[i] else 0)
                nm = len(picked) + 1 - nf
                delta_fair = abs(fp * nm - (1.0 - fp) * nf) - current_fairness
            else:
                delta_fair = 0.0
            gain = problem.score[i] - problem.penalty_weight * sim_to_selected[i] - delta_fair
            key = (gain, gain / problem.length[i], -i)
            if best_key is None or key > best_key:
                best_i, best_key = i, key
        if best_i < 0:
            break
        chosen[best_i] = True
        picked.append(best_i)
        used += problem.length[best_i]
        running_objective += best_key[0]
        for j in range(n):
            sim_to_selected[j] += problem.sim[best_i][j]
        if problem.is_female[best_i]:
            females += 1
        if problem.fairness_enabled:
            males = len(picked) - females
            current_fairness = abs(fp * males - (1.0 - fp) * females)
        if running_objective > best_prefix_objective + TIE_EPS:
            best_prefix_len = len(picked)
            best_prefix_objective = running_objective
    return _solution(problem, tuple(sorted(picked[:best_prefix_len])), optimal=False)


def solve(problem: SelectionProblem, config: SolverConfig | None = None) -> Solution:
    """Exact when the instance fits under exact_limit, greedy otherwise."""
    config = config or SolverConfig()
    if problem.n <= config.exact_limit:
        return solve_exact(problem, config)
    return solve_heuristic(problem, config)


def penalty_from_indicators(problem: SelectionProblem, selected: Sequence[bool]) -> tuple[float, float]:
    """Pair penalty recomputed through explicit pairwise indicators.

    y_ij is the unique binary value satisfying y_ij >= x_i + x_j - 1 and
    y_ij <= (x_i + x_j)/2, i.e. the AND of the two selection variables.
    Returns (unordered_sum, ordered_sum); the ordered sum double-counts each
    pair, matching the unordered objective at twice the penalty weight.
    """
    n = problem.n
    unordered = 0.0
    ordered = 0.0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lower = max(0, selected[i] + selected[j] - 1)
            upper = (selected[i] + selected[j]) // 2
            y = lower
            assert lower == upper, "pairwise indicator constraints must pin y"
            ordered += problem.sim[i][j] * y
            if i < j:
                unordered += problem.sim[i][j] * y
    return unordered, ordered


# ---------------------------------------------------------------------------
# fixture / bug-report serialization

def save_problem(problem: SelectionProblem, path: str | Path) -> None:
    path = Path(path)
    lines = [PROBLEM_MAGIC]
    lines.append(
        f"{problem.n} {problem.budget} {problem.female_ratio!r} "
        f"{problem.penalty_weight!r} {int(problem.fairness_enabled)}"
    )
    for i in range(problem.n):
        gender = "F" if problem.is_female[i] else "M"
        lines.append(f"{problem.score[i]!r} {problem.length[i]} {gender}")
    for i in range(problem.n):
        for j in range(i + 1, problem.n):
            if problem.sim[i][j] != 0.0:
                lines.append(f"{i} {j} {problem.sim[i][j]!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_problem(path: str | Path) -> SelectionProblem:
    path = Path(path)
    lines = [l for l in path.read_text("utf-8").splitlines() if l.strip()]
    if not lines or lines[0] != PROBLEM_MAGIC:
        raise DataError(f"{path}: not a problem file (missing {PROBLEM_MAGIC!r} header)")
    header = lines[1].split()
    n, budget = int(header[0]), int(header[1])
    female_ratio, penalty_weight = float(header[2]), float(header[3])
    fairness = bool(int(header[4])) if len(header) > 4 else True
    score, length, is_female = [], [], []
    for line in lines[2 : 2 + n]:
        s, l, g = line.split()
        score.append(float(s))
        length.append(int(l))
        is_female.append(g.upper() == "F")
    sim = [[0.0] * n for _ in range(n)]
    for line in lines[2 + n :]:
        i, j, v = line.split()
        i, j, v = int(i), int(j), float(v)
        sim[i][j] = sim[j][i] = v
    return SelectionProblem(
        score=score,
        length=length,
        is_female=is_female,
        sim=sim,
        budget=budget,
        female_ratio=female_ratio,
        penalty_weight=penalty_weight,
        fairness_enabled=fairness,
    )
