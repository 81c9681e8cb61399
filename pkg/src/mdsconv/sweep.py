"""Free-distance sweeps over a grid of (q, n, delta)."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .codebuild import build_code, singleton_bound
from .distance import DEFAULT_EDGE_BUDGET, StateGraph, free_distance
from .errors import MdsConvError
from .gf import GF, find_element_of_order

DEFAULT_Q_SET = (4, 5, 7, 8, 9, 11, 13, 16)
DEFAULT_N_MAX = 7
POLICIES = ('mds', 'remark', 'all')


@dataclass
class SweepRow:
    q: int
    n: int
    delta: int
    alpha: list[int]
    alpha_order: int
    states: int
    free_distance: int | None
    bound: int
    is_mds: bool | None
    mds_guaranteed: bool
    seconds: float
    status: str = 'ok'

    @property
    def failed(self) -> bool:
        """An MDS assertion failure: a guaranteed cell whose distance misses the bound."""
        return self.mds_guaranteed and self.status == 'ok' and not self.is_mds


def deltas_for(n: int, policy: str) -> list[int]:
    """mds: 1..n-1; remark: n and n+1 (codes past the MDS range); all: 0..n+1."""
    if policy == 'mds':
        return list(range(1, n))
    if policy == 'remark':
        return [n, n + 1]
    if policy == 'all':
        return list(range(0, n + 2))
    raise ValueError(f'unknown delta policy {policy!r}')


def sweep_cells(q_set, n_max: int = DEFAULT_N_MAX, policy: str = 'mds') -> list[tuple[int, int, int]]:
    cells = []
    for q in sorted(set(q_set)):
        for n in range(2, min(q - 1, n_max) + 1):
            for d in deltas_for(n, policy):
                cells.append((q, n, d))
    return cells


def run_cell(q: int, n: int, delta: int, budget: int = DEFAULT_EDGE_BUDGET) -> SweepRow:
    F = GF(q)
    alpha = find_element_of_order(F, n, 'at_least')
    bound = singleton_bound(n, 1, delta)
    row = SweepRow(q, n, delta, list(alpha.rep), 0, q ** delta, None, bound, None, delta < n, 0.0)
    t0 = time.perf_counter()
    try:
        code = build_code(F, n, delta, alpha)
        row.alpha_order = code.alpha_order
        d = free_distance(code, StateGraph(code, budget))
    except MdsConvError as exc:
        row.status = exc.code
        row.seconds = time.perf_counter() - t0
        return row
    row.free_distance = d
    row.is_mds = d == bound
    row.seconds = round(time.perf_counter() - t0, 4)
    return row


def _run(args) -> SweepRow:
    return run_cell(*args)


def run_sweep(q_set=DEFAULT_Q_SET, n_max: int = DEFAULT_N_MAX, policy: str = 'mds',
              budget: int = DEFAULT_EDGE_BUDGET, jobs: int = 1) -> list[SweepRow]:
    """Rows sorted by (q, n, delta); cells over budget carry status ``BudgetExceeded``."""
    cells = [(q, n, d, budget) for q, n, d in sweep_cells(q_set, n_max, policy)]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run, cells))
    else:
        rows = [_run(c) for c in cells]
    return sorted(rows, key=lambda r: (r.q, r.n, r.delta))


def row_dict(row: SweepRow) -> dict:
    return asdict(row)
