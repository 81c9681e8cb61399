"""Vandermonde-type parity-check matrices for the codes with ord(alpha) = n.

Columns are 0-indexed; column c is attached to the root beta_c = alpha^(n-c),
so the columns run through alpha^n = 1, alpha^(n-1), ..., alpha.

* :func:`build_H_full` -- rows (z - beta_c)^j for j = 1..n-1 (delta = n-1).
* :func:`build_H_general` -- n-delta-1 constant rows alpha^(i c) followed by
  delta rows (z - beta_c)^i, for any 0 <= delta < n.
* :func:`build_H_min` -- rows beta_c^(j-1) z - beta_c^j, a minimal basis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codebuild import build_code
from .errors import (
    AllMinorsZero,
    BadDelta,
    DimensionMismatch,
    InternalInconsistency,
    OrderMismatch,
)
from .gf import FieldElement, FieldSpec, element_order
from .polyalg import (
    DensePoly,
    PolyMatrix,
    is_right_invertible,
    max_minor_degree,
)


def _check_order(n: int, alpha: FieldElement) -> None:
    o = element_order(alpha)
    if o != n:
        raise OrderMismatch(f'parity checks need ord(alpha) = n, got ord = {o}, n = {n}')


def _roots(field: FieldSpec, n: int, alpha: FieldElement) -> list[int]:
    return [field.pow(alpha.code, n - c) for c in range(n)]


def _linear_powers(field: FieldSpec, beta: int, j: int) -> DensePoly:
    return DensePoly(field, [field.neg(beta), field.one]) ** j


def build_H_full(field: FieldSpec, n: int, alpha: FieldElement, force: bool = False) -> PolyMatrix:
    """(n-1) x n matrix with entry (j, c) = (z - alpha^(n-c))^(j+1).

    ``force`` skips the ord(alpha) = n check (used for negative controls).
    """
    if not force:
        _check_order(n, alpha)
    roots = _roots(field, n, alpha)
    return PolyMatrix(field, [[_linear_powers(field, b, j) for b in roots] for j in range(1, n)])


def build_H_min(field: FieldSpec, n: int, alpha: FieldElement) -> PolyMatrix:
    """(n-1) x n matrix with entry (j, c) = beta_c^j z - beta_c^(j+1), j = 0..n-2."""
    _check_order(n, alpha)
    F = field
    rows = []
    for j in range(1, n):
        row = []
        for b in _roots(F, n, alpha):
            row.append(DensePoly(F, [F.neg(F.pow(b, j)), F.pow(b, j - 1)]))
        rows.append(row)
    return PolyMatrix(F, rows)


def h_min_parts(H: PolyMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Split a degree-1 matrix as H = H1 z - H0; returns the code matrices (H1, H0)."""
    F = H.field
    H1 = np.array([[e[1] for e in r] for r in H.entries], dtype=np.int64)
    H0 = np.array([[F.neg(e[0]) for e in r] for r in H.entries], dtype=np.int64)
    return H1, H0


def build_H_general(field: FieldSpec, n: int, delta: int, alpha: FieldElement,
                    verify: bool = True) -> PolyMatrix:
    """Mixed constant/linear-power matrix for 0 <= delta < n.

    The result is checked against the generator of the (n, 1, delta) code
    before it is returned.
    """
    _check_order(n, alpha)
    if not 0 <= delta < n:
        raise BadDelta(f'need 0 <= delta < n, got delta = {delta}')
    F = field
    rows = []
    for i in range(1, n - delta):
        rows.append([DensePoly.constant(F, F.pow(alpha.code, i * c)) for c in range(n)])
    roots = _roots(F, n, alpha)
    for i in range(1, delta + 1):
        rows.append([_linear_powers(F, b, i) for b in roots])
    H = PolyMatrix(F, rows)
    if verify:
        report = verify_parity_pair(build_code(F, n, delta, alpha).G, H)
        if not report.certified:
            raise InternalInconsistency(f'mixed parity check failed verification: {report}')
    return H


@dataclass(frozen=True)
class ParityReport:
    product_zero: bool
    right_invertible: bool
    degree_consistent: bool

    @property
    def certified(self) -> bool:
        return self.product_zero and self.right_invertible and self.degree_consistent

    def to_json(self) -> dict:
        return {'product_zero': self.product_zero, 'right_invertible': self.right_invertible,
                'degree_consistent': self.degree_consistent, 'certified': self.certified}


def verify_parity_pair(G: PolyMatrix, H: PolyMatrix) -> ParityReport:
    """Check G H^T = 0, right invertibility of H, and equal internal degrees."""
    n = G.cols
    if G.rows != 1 or H.shape != (n - 1, n) or G.field != H.field:
        raise DimensionMismatch(f'expected 1 x n and (n-1) x n, got {G.shape} and {H.shape}')
    product_zero = (G @ H.T).is_zero()
    right_inv = is_right_invertible(H)
    try:
        consistent = max_minor_degree(H, n - 1) == max_minor_degree(G, 1)
    except AllMinorsZero:
        consistent = False
    return ParityReport(product_zero, right_inv, consistent)
