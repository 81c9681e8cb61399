"""Free distance, extended row distances and weight enumerators.

Everything runs on the state diagram of a (n, 1, delta) code.  The state
before step i is the register (u_{i-1}, ..., u_{i-delta}) of the last delta
message symbols, indexed as the base-q number with u_{i-1} most significant.
Input u_i moves state s to (u_i, u_{i-1}, ..., u_{i-delta+1}) and emits

    v_i = u_i G_0 + u_{i-1} G_1 + ... + u_{i-delta} G_delta

whose Hamming weight labels the edge.  All edge weights are tabulated once
(a q^delta x q int8 array) and the dynamic programs below are vectorized
over all states.

Conventions for the relaxation: a state index splits as ``rest * q + x``
where x is the oldest symbol; its successor under input u is ``u * R + rest``
with R = q^(delta-1).  So the predecessors of (u, rest) are exactly the q
states (rest, x), which lets one relaxation step be a reshape plus a min.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .codebuild import ConvCode, weight as codeword_weight
from .errors import BudgetExceeded, JTooSmall, PreconditionNotMet
from .polyalg import DensePoly

DEFAULT_EDGE_BUDGET = 3 * 10**8
DEFAULT_SERIES_BUDGET = 2 * 10**8
DEFAULT_ORACLE_BUDGET = 10**7
_INF = 1 << 14
_CHUNK_BYTES = 1 << 26


class StateGraph:
    """Tabulated state diagram of a code.

    ``weights[s, u]`` is the weight of the output block on the edge leaving
    state ``s`` with input ``u`` (both as element codes / state indices).
    """

    def __init__(self, code: ConvCode, budget: int = DEFAULT_EDGE_BUDGET):
        q, delta = code.q, code.delta
        self.code = code
        self.q = q
        self.delta = delta
        self.num_states = q ** delta
        if self.num_states * q > budget:
            raise BudgetExceeded(f'{self.num_states * q} edges exceed the budget of {budget}')
        self.weights = self._edge_weights()

    @property
    def rest_count(self) -> int:
        return self.num_states // self.q

    def _edge_weights(self) -> np.ndarray:
        code, q, S = self.code, self.q, self.num_states
        add, mul, neg, inv = code.field.tables()
        A = code.blocks
        W = np.full((S, q), code.n, dtype=np.int8)
        rows = np.arange(S)
        for k in range(code.n):
            # c[s] = sum_{l >= 1} a_l * alpha^(l k), built one register cell at a time
            c = np.zeros(1, dtype=np.int64)
            for l in range(1, self.delta + 1):
                term = mul[:, A[l, k]]
                c = add[c[:, None], term[None, :]].reshape(-1)
            # coordinate k vanishes iff u * A[0, k] = -c
            killer = mul[neg[c], inv[A[0, k]]]
            W[rows, killer] -= 1
        return W

    def successor(self, s: int, u: int) -> int:
        if self.delta == 0:
            return 0
        return u * self.rest_count + s // self.q

    def state_tuple(self, s: int) -> tuple[int, ...]:
        """(u_{i-1}, ..., u_{i-delta}) as element codes."""
        out = []
        for _ in range(self.delta):
            out.append(s % self.q)
            s //= self.q
        return tuple(reversed(out))

    def state_index(self, symbols) -> int:
        s = 0
        for a in symbols:
            s = s * self.q + int(a)
        return s

    def output(self, s: int, u: int) -> list[int]:
        """Output block v_i (element codes) on edge (s, u), computed directly."""
        F, A = self.code.field, self.code.blocks
        window = (u,) + self.state_tuple(s)
        out = []
        for k in range(self.code.n):
            acc = 0
            for l, a in enumerate(window):
                acc = F.add(acc, F.mul(a, int(A[l, k])))
            out.append(acc)
        return out

    def relax(self, d: np.ndarray) -> np.ndarray:
        """One step: out[s'] = min over edges (s -> s') of d[s] + weight."""
        q, R = self.q, self.rest_count
        dv = d.reshape(R, q)
        Wv = self.weights.reshape(R, q, q)
        out = np.empty((q, R), dtype=d.dtype)
        step = max(1, _CHUNK_BYTES // (q * q * d.itemsize))
        for lo in range(0, R, step):
            blk = dv[lo:lo + step, :, None] + Wv[lo:lo + step]
            out[:, lo:lo + step] = blk.min(axis=1).T
        return out.reshape(-1)

    def relax_counting(self, d: np.ndarray, cnt: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Like :meth:`relax`, also summing the path counts that attain each minimum."""
        q, R = self.q, self.rest_count
        dv, cv = d.reshape(R, q), cnt.reshape(R, q)
        Wv = self.weights.reshape(R, q, q)
        out = np.empty((q, R), dtype=d.dtype)
        out_c = np.empty((q, R), dtype=cnt.dtype)
        step = max(1, _CHUNK_BYTES // (q * q * 8))
        for lo in range(0, R, step):
            blk = dv[lo:lo + step, :, None] + Wv[lo:lo + step]
            m = blk.min(axis=1)
            hit = blk == m[:, None, :]
            out[:, lo:lo + step] = m.T
            out_c[:, lo:lo + step] = (hit * cv[lo:lo + step, :, None]).sum(axis=1).T
        return out.reshape(-1), out_c.reshape(-1)


def _graph(code: ConvCode, graph: StateGraph | None) -> StateGraph:
    if graph is None:
        return StateGraph(code)
    if graph.code != code:
        raise ValueError('state graph belongs to a different code')
    return graph


def free_distance(code: ConvCode, graph: StateGraph | None = None) -> int:
    """Exact free distance by shortest-path search on the state diagram.

    Label-correcting search from the zero state with the zero state removed as
    an interior node; labels are capped at the weight of G itself, which is a
    codeword, so the integer labels can only decrease and the loop terminates.
    """
    g = _graph(code, graph)
    W, q = g.weights, g.q
    if g.delta == 0:
        return int(W[0, 1:].min())
    cap = codeword_weight(code.G)
    best = cap
    R = g.rest_count
    d = np.full(g.num_states, cap, dtype=np.int16)
    d[np.arange(1, q) * R] = np.minimum(W[0, 1:], cap)
    while True:
        # states (0, ..., 0, a) return to zero on input 0
        best = min(best, int((d[1:q] + W[1:q, 0]).min()))
        new = np.minimum(d, g.relax(d))
        new[0] = cap
        np.minimum(new, cap, out=new)
        if np.array_equal(new, d):
            return best
        d = new


def extended_row_distances(code: ConvCode, j_max: int,
                           graph: StateGraph | None = None) -> dict[int, int | None]:
    """Extended row distances for every length j = delta+1, ..., j_max.

    Layered dynamic program over paths that leave the zero state at step 0
    and avoid it until they return at step j.  ``None`` marks lengths with
    no such path.
    """
    if code.delta < 1:
        raise JTooSmall('extended row distances need delta >= 1')
    g = _graph(code, graph)
    W, q, R = g.weights, g.q, g.rest_count
    D = np.full(g.num_states, _INF, dtype=np.int16)
    D[np.arange(1, q) * R] = W[0, 1:]
    out: dict[int, int | None] = {}
    for t in range(1, j_max):
        j = t + 1
        if j >= code.delta + 1:
            val = int((D[1:q] + W[1:q, 0]).min())
            out[j] = val if val < _INF else None
        if j == j_max:
            break
        D = g.relax(D)
        D[0] = _INF
        np.minimum(D, _INF, out=D)
    return out


def extended_row_distance(code: ConvCode, j: int, graph: StateGraph | None = None) -> int | None:
    """Minimum weight of an atomic codeword of length j."""
    if code.delta < 1 or j < code.delta + 1:
        raise JTooSmall(f'need delta >= 1 and j >= delta + 1 = {code.delta + 1}, got j = {j}')
    return extended_row_distances(code, j, graph)[j]


def min_weight_census(code: ConvCode, j: int, graph: StateGraph | None = None) -> tuple[int | None, int]:
    """(minimum weight, number of atomic codewords attaining it) at length j."""
    if code.delta < 1 or j < code.delta + 1:
        raise JTooSmall(f'need delta >= 1 and j >= delta + 1 = {code.delta + 1}, got j = {j}')
    g = _graph(code, graph)
    W, q, R = g.weights, g.q, g.rest_count
    D = np.full(g.num_states, _INF, dtype=np.int16)
    C = np.zeros(g.num_states, dtype=np.int64)
    D[np.arange(1, q) * R] = W[0, 1:]
    C[np.arange(1, q) * R] = 1
    for _ in range(j - 2):
        D, C = g.relax_counting(D, C)
        D[0], C[0] = _INF, 0
        C[D >= _INF] = 0
        np.minimum(D, _INF, out=D)
    final = D[1:q] + W[1:q, 0]
    best = int(final.min())
    if best >= _INF:
        return None, 0
    return best, int(C[1:q][final == best].sum())


def slope_lower_bound(code: ConvCode, j: int) -> int:
    """(n - delta) j + delta (delta + 1), valid for delta < n and j >= delta + 1."""
    if code.delta >= code.n:
        raise PreconditionNotMet('bound only holds for delta < n')
    if j < code.delta + 1:
        raise JTooSmall(f'need j >= delta + 1 = {code.delta + 1}')
    return (code.n - code.delta) * j + code.delta * (code.delta + 1)


def is_atomic(u: DensePoly, delta: int) -> bool:
    """True iff u has no run of delta consecutive zero coefficients between its lowest and highest nonzero term."""
    if delta < 1:
        raise ValueError('delta must be >= 1')
    if u.is_zero():
        return False
    coeffs = u.coeffs
    start = next(i for i, c in enumerate(coeffs) if c)
    run = 0
    for c in coeffs[start:]:
        run = run + 1 if c == 0 else 0
        if run >= delta:
            return False
    return True


@dataclass
class WeightSeries:
    """Truncated weight enumerator: ``terms[j][w]`` atomic codewords of length j and weight w."""

    max_length: int
    terms: dict[int, dict[int, int]] = dc_field(default_factory=dict)

    def term(self, j: int) -> dict[int, int]:
        return self.terms.get(j, {})

    def min_weight(self, j: int) -> int | None:
        t = self.term(j)
        return min(t) if t else None

    def leading(self, j: int) -> tuple[int, int] | None:
        """(weight, count) of the lowest-weight monomial of L^j."""
        w = self.min_weight(j)
        return None if w is None else (w, self.terms[j][w])

    def total(self, j: int) -> int:
        return sum(self.term(j).values())

    def rows(self) -> list[tuple[int, int, int]]:
        return [(j, w, c) for j in sorted(self.terms) for w, c in sorted(self.terms[j].items())]

    def to_json(self) -> dict[str, dict[str, int]]:
        return {str(j): {str(w): int(c) for w, c in sorted(t.items())}
                for j, t in sorted(self.terms.items())}

    def __eq__(self, other):
        if not isinstance(other, WeightSeries):
            return NotImplemented
        return self.max_length == other.max_length and self.terms == other.terms


def _counts_to_term(row) -> dict[int, int]:
    return {int(w): int(c) for w, c in enumerate(row) if c}


def weight_enumerator(code: ConvCode, max_l: int, budget: int = DEFAULT_SERIES_BUDGET,
                      graph: StateGraph | None = None) -> WeightSeries:
    """Counts of atomic codewords by (length, weight) for all lengths <= max_l.

    Transfer-matrix accumulation: every nonzero state carries a
    weight-generating polynomial (a count vector indexed by weight) that is
    pushed along all edges one layer at a time; mass arriving at the zero
    state at layer j is the L^j term and is removed.
    """
    if max_l < code.delta + 1:
        raise JTooSmall(f'max_l must be >= delta + 1 = {code.delta + 1}')
    q, S = code.q, code.q ** code.delta
    max_w = code.n * max_l
    cost = S * max_l * (max_w + 1)
    if cost > budget:
        raise BudgetExceeded(f'enumerator cost {cost} exceeds the budget of {budget}')
    g = _graph(code, graph)
    W = g.weights
    series = WeightSeries(max_l)
    if code.delta == 0:
        term: dict[int, int] = {}
        for u in range(1, q):
            term[int(W[0, u])] = term.get(int(W[0, u]), 0) + 1
        series.terms[1] = term
        return series

    dtype = np.int64 if q ** max_l < 2**62 else object
    R = g.rest_count
    cur = np.zeros((S, max_w + 1), dtype=dtype)
    for u in range(1, q):
        cur[u * R, W[0, u]] += 1
    masks = {int(w): (W == w).reshape(R, q, q).astype(dtype) for w in np.unique(W)}
    for j in range(2, max_l + 1):
        new = np.zeros_like(cur)
        nv = new.reshape(q, R, max_w + 1)
        cv = cur.reshape(R, q, max_w + 1)
        for w, M in masks.items():
            if w > max_w:
                continue
            nv[:, :, w:] += np.einsum('rxw,rxu->urw', cv[:, :, :max_w + 1 - w], M)
        arrived = _counts_to_term(new[0])
        if arrived:
            series.terms[j] = arrived
        new[0] = 0
        cur = new
    return series


def expand_rational(num: dict[tuple[int, int], int], den: dict[tuple[int, int], int],
                    max_l: int) -> WeightSeries:
    """Power-series expansion in L of num(L, W) / den(L, W) with integer coefficients.

    Monomials are given as {(L exponent, W exponent): coefficient}; den must
    have constant term 1 in L, i.e. den(0, W) = 1.
    """
    def by_l(poly):
        out: dict[int, dict[int, int]] = {}
        for (i, w), c in poly.items():
            out.setdefault(i, {})
            out[i][w] = out[i].get(w, 0) + c
        return out

    N, D = by_l(num), by_l(den)
    if D.get(0) != {0: 1}:
        raise ValueError('denominator must satisfy den(0, W) = 1')
    A: dict[int, dict[int, int]] = {}
    for j in range(max_l + 1):
        acc = dict(N.get(j, {}))
        for i in range(1, j + 1):
            for dw, dc in D.get(i, {}).items():
                for aw, ac in A.get(j - i, {}).items():
                    acc[dw + aw] = acc.get(dw + aw, 0) - dc * ac
        A[j] = {w: c for w, c in acc.items() if c}
    return WeightSeries(max_l, {j: t for j, t in A.items() if t})


def default_degree_bound(code: ConvCode) -> int:
    n, d = code.n, code.delta
    if d >= n:
        return 2 * (d + 1)
    return math.ceil(n * (d + 1) / (n - d)) + d


def brute_force_distance(code: ConvCode, deg_bound: int | None = None,
                         budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """Minimum weight of u G over all nonzero messages u with deg u <= deg_bound.

    Plain polynomial multiplication over every message, independent of the
    state diagram.  For delta >= n the result is only an upper estimate of
    the free distance.
    """
    if deg_bound is None:
        deg_bound = default_degree_bound(code)
    q, L = code.q, deg_bound + 1
    total = q ** L
    if total > budget:
        raise BudgetExceeded(f'{total} messages exceed the oracle budget of {budget}')
    add, mul, _, _ = code.field.tables()
    A = code.blocks
    powers = q ** np.arange(L, dtype=np.int64)
    best = None
    chunk = 1 << 16
    for lo in range(1, total, chunk):
        idx = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        U = (idx[:, None] // powers[None, :]) % q
        wt = np.zeros(len(idx), dtype=np.int64)
        for k in range(code.n):
            V = np.zeros((len(idx), L + code.delta), dtype=np.int64)
            for nu in range(code.delta + 1):
                V[:, nu:nu + L] = add[V[:, nu:nu + L], mul[U, A[nu, k]]]
            wt += np.count_nonzero(V, axis=1)
        m = int(wt.min())
        best = m if best is None else min(best, m)
    return best
