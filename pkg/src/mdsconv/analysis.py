"""One report collecting distance, enumerator, parity and cyclicity results for a code."""
from __future__ import annotations

import math
import time

from .codebuild import ConvCode
from .distance import (
    DEFAULT_EDGE_BUDGET,
    StateGraph,
    brute_force_distance,
    extended_row_distances,
    free_distance,
    slope_lower_bound,
    weight_enumerator,
)
from .errors import MdsConvError
from .parity import build_H_general, verify_parity_pair
from .skewcyclic import cyclicity_decision


def analyze(code: ConvCode, max_l: int | None = None, row_distances: int | None = None,
            oracle: bool = False, budget: int = DEFAULT_EDGE_BUDGET) -> dict:
    timing = {}
    t0 = time.perf_counter()
    graph = StateGraph(code, budget)
    timing['state_graph'] = time.perf_counter() - t0

    t = time.perf_counter()
    d = free_distance(code, graph)
    timing['free_distance'] = time.perf_counter() - t
    bound = code.free_distance_bound
    report = {
        'code': {
            'q': code.q,
            'modulus': list(code.field.modulus),
            'n': code.n,
            'delta': code.delta,
            'alpha': list(code.alpha.rep),
            'alpha_order': code.alpha_order,
            'mds_guaranteed': code.mds_guaranteed,
        },
        'free_distance': d,
        'singleton_bound': bound,
        'is_mds': d == bound,
    }

    if row_distances is not None and code.delta >= 1:
        t = time.perf_counter()
        rd = extended_row_distances(code, row_distances, graph)
        rows = {}
        for j, v in rd.items():
            entry = {'distance': v}
            if code.delta < code.n:
                entry['slope_bound'] = slope_lower_bound(code, j)
            rows[str(j)] = entry
        report['row_distances'] = rows
        timing['row_distances'] = time.perf_counter() - t

    if max_l is not None:
        t = time.perf_counter()
        series = weight_enumerator(code, max_l, graph=graph)
        report['enumerator'] = series.to_json()
        timing['enumerator'] = time.perf_counter() - t

    if oracle:
        t = time.perf_counter()
        try:
            report['oracle_distance'] = brute_force_distance(code)
        except MdsConvError as exc:
            report['oracle_distance'] = {'skipped': exc.code}
        timing['oracle'] = time.perf_counter() - t

    if code.alpha_order == code.n and code.delta < code.n:
        H = build_H_general(code.field, code.n, code.delta, code.alpha, verify=False)
        report['parity'] = verify_parity_pair(code.G, H).to_json()

    if code.delta >= 1 and math.gcd(code.n, code.field.p) == 1:
        report['cyclicity'] = cyclicity_decision(code).to_json()

    report['timing'] = {k: round(v, 4) for k, v in timing.items()}
    return report
