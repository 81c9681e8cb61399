"""One-dimensional MDS convolutional codes built from powers of a field element.

For a field element alpha of order at least n, the generator is the 1 x n
polynomial row whose column j (0-indexed) is the geometric sum

    G_j(z) = 1 + (alpha^j z) + (alpha^j z)^2 + ... + (alpha^j z)^delta.

Equivalently G = sum_nu z^nu (1, alpha^nu, alpha^(2 nu), ..., alpha^((n-1) nu)),
so the coefficient rows ("blocks") of G form a Vandermonde matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import (
    BadParameters,
    LengthExceedsField,
    MdsConvError,
    NotRightInvertible,
    OrderTooSmall,
    ParseError,
    PreconditionNotMet,
)
from .gf import FieldElement, FieldSpec, element_order
from .polyalg import DensePoly, PolyMatrix, is_right_invertible, max_minor_degree


@dataclass(frozen=True)
class ConvCode:
    """A validated (n, 1, delta) code with generator ``G``."""

    field: FieldSpec
    n: int
    delta: int
    alpha: FieldElement
    G: PolyMatrix
    alpha_order: int
    mds_guaranteed: bool
    k: int = 1
    blocks: np.ndarray = dc_field(repr=False, compare=False, default=None)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def free_distance_bound(self) -> int:
        return singleton_bound(self.n, self.k, self.delta)

    def to_json(self) -> dict:
        return {
            'field': self.field.to_json(),
            'n': self.n,
            'k': self.k,
            'delta': self.delta,
            'alpha': self.alpha.to_json(),
            'alpha_order': self.alpha_order,
            'mds_guaranteed': self.mds_guaranteed,
            'G': self.G.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> ConvCode:
        try:
            F = FieldSpec.from_json(obj['field'])
            code = build_code(F, int(obj['n']), int(obj['delta']), F(obj['alpha']))
        except MdsConvError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f'bad code record: {exc!r}') from exc
        if 'G' in obj and PolyMatrix.from_json(F, obj['G']) != code.G:
            raise ParseError('stored G does not match the construction')
        return code


def generator_blocks(field: FieldSpec, n: int, delta: int, alpha: FieldElement) -> np.ndarray:
    """The (delta+1) x n matrix of codes with entry [nu, j] = alpha^(j nu)."""
    return np.array([[field.pow(alpha.code, j * nu) for j in range(n)]
                     for nu in range(delta + 1)], dtype=np.int64)


def build_code(field: FieldSpec, n: int, delta: int, alpha: FieldElement) -> ConvCode:
    """Construct and validate the code with parameters (n, 1, delta) for ``alpha``.

    For delta >= n the generator is still accepted provided it is right
    invertible (which requires that ord(alpha) does not divide delta + 1);
    such codes carry ``mds_guaranteed = False``.
    """
    if n < 2 or delta < 0:
        raise BadParameters(f'need n >= 2 and delta >= 0, got n={n}, delta={delta}')
    if n > field.q - 1:
        raise LengthExceedsField(f'n = {n} exceeds q - 1 = {field.q - 1}')
    if alpha.field != field:
        raise BadParameters('alpha is not an element of the given field')
    order = element_order(alpha)
    if order < n:
        raise OrderTooSmall(f'ord(alpha) = {order} < n = {n}')
    if delta >= n and (delta + 1) % order == 0:
        raise NotRightInvertible(f'ord(alpha) = {order} divides delta + 1 = {delta + 1}')
    blocks = generator_blocks(field, n, delta, alpha)
    G = PolyMatrix(field, [[DensePoly(field, blocks[:, j].tolist()) for j in range(n)]])
    if not is_right_invertible(G):
        raise NotRightInvertible('entries of G share a common factor')
    if max_minor_degree(G, 1) != delta:
        raise AssertionError('generator degree differs from delta')
    return ConvCode(field, n, delta, alpha, G, order, delta < n, blocks=blocks)


def singleton_bound(n: int, k: int, delta: int) -> int:
    """Generalized Singleton bound (n - k)(floor(delta/k) + 1) + delta + 1."""
    if not 1 <= k < n or delta < 0:
        raise BadParameters(f'need 1 <= k < n and delta >= 0, got n={n}, k={k}, delta={delta}')
    return (n - k) * (delta // k + 1) + delta + 1


def closed_form_entry(code: ConvCode, j: int) -> DensePoly:
    """Column j of G rebuilt as beta (z^n - 1) / (z - beta) with beta = alpha^(n - j).

    Only valid when ord(alpha) = n and delta = n - 1; the division is exact.
    """
    if code.alpha_order != code.n or code.delta != code.n - 1:
        raise PreconditionNotMet('closed form needs ord(alpha) = n = delta + 1')
    if not 0 <= j < code.n:
        raise BadParameters(f'column index {j} out of range')
    F = code.field
    beta = F.pow(code.alpha.code, code.n - j)
    num = DensePoly.monomial(F, code.n) - DensePoly.constant(F, F.one)
    den = DensePoly(F, [F.neg(beta), F.one])
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise AssertionError('z - beta must divide z^n - 1')
    return quo.scale(beta)


def encode(code: ConvCode, u: DensePoly) -> PolyMatrix:
    """The codeword u G."""
    return code.G.scale(u)


def weight(v: PolyMatrix) -> int:
    """Hamming weight of a polynomial vector, summed over all coefficients."""
    return sum(e.weight for r in v.entries for e in r)
