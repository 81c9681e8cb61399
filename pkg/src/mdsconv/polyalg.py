"""Univariate polynomials and polynomial matrices over a finite field.

Coefficients are element codes (see :mod:`mdsconv.gf`), stored ascending by
degree with no trailing zeros; the zero polynomial has no coefficients and
degree -1.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AllMinorsZero,
    BothZero,
    DimensionMismatch,
    ParseError,
    RankDeficient,
    ZeroRow,
)
from .gf import FieldElement, FieldSpec


def _codes(field: FieldSpec, coeffs: Iterable) -> list[int]:
    out = []
    for c in coeffs:
        if isinstance(c, FieldElement):
            if c.field != field:
                raise TypeError('coefficient from a different field')
            out.append(c.code)
        else:
            out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return out


class DensePoly:
    """Polynomial over ``field``; ``coeffs`` are element codes (or FieldElements)."""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        self.coeffs = tuple(_codes(field, coeffs))

    @classmethod
    def constant(cls, field: FieldSpec, c) -> DensePoly:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, c=None) -> DensePoly:
        c = field.one if c is None else c
        return cls(field, [0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient(self, i: int) -> FieldElement:
        return self.field.element(self[i])

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return sum(1 for c in self.coeffs if c)

    def _check(self, other: DensePoly) -> None:
        if not isinstance(other, DensePoly) or other.field != self.field:
            raise TypeError('polynomials over different fields')

    def __add__(self, other: DensePoly) -> DensePoly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DensePoly(F, [F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> DensePoly:
        return DensePoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: DensePoly) -> DensePoly:
        return self + (-other)

    def __mul__(self, other) -> DensePoly:
        if isinstance(other, FieldElement):
            return self.scale(other.code)
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DensePoly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return DensePoly(F, out)

    def __rmul__(self, other: FieldElement) -> DensePoly:
        if isinstance(other, FieldElement):
            return self.scale(other.code)
        return NotImplemented

    def scale(self, c: int) -> DensePoly:
        """Multiply by the scalar with code ``c``."""
        F = self.field
        return DensePoly(F, [F.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> DensePoly:
        """Multiply by z^k."""
        return DensePoly(self.field, [0] * k + list(self.coeffs)) if self.coeffs else self

    def __pow__(self, e: int) -> DensePoly:
        result = DensePoly.constant(self.field, self.field.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: DensePoly) -> tuple[DensePoly, DensePoly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        F = self.field
        r = list(self.coeffs)
        b = other.coeffs
        inv = F.inv(b[-1])
        qt = [0] * max(len(r) - len(b) + 1, 0)
        while len(r) >= len(b):
            c = F.mul(r[-1], inv)
            s = len(r) - len(b)
            qt[s] = c
            for i, y in enumerate(b):
                r[s + i] = F.sub(r[s + i], F.mul(c, y))
            while r and r[-1] == 0:
                r.pop()
        return DensePoly(F, qt), DensePoly(F, r)

    def __floordiv__(self, other: DensePoly) -> DensePoly:
        return divmod(self, other)[0]

    def __mod__(self, other: DensePoly) -> DensePoly:
        return divmod(self, other)[1]

    def monic(self) -> DensePoly:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def eval_code(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.field.element(self.eval_code(x.code))

    def __eq__(self, other):
        return isinstance(other, DensePoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return self.format('z')

    def format(self, var: str) -> str:
        if not self.coeffs:
            return '0'
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = self.field.element(c)
                mono = '' if i == 0 else (var if i == 1 else f'{var}^{i}')
                s = repr(e)
                if mono and c == self.field.one:
                    s = ''
                elif mono and ' + ' in s:
                    s = f'({s})'
                terms.append(s + ('*' if s and mono else '') + mono)
        return ' + '.join(terms)

    def to_json(self) -> list[list[int]]:
        return [list(self.field.rep_of(c)) for c in self.coeffs]

    @classmethod
    def from_json(cls, field: FieldSpec, obj) -> DensePoly:
        try:
            return cls(field, [field.code_of(rep) for rep in obj])
        except TypeError as exc:
            raise ParseError(f'bad polynomial: {obj!r}') from exc


def poly_xgcd(f: DensePoly, g: DensePoly) -> tuple[DensePoly, DensePoly, DensePoly]:
    """Monic d = gcd(f, g) together with s, t such that s f + t g = d."""
    if f.is_zero() and g.is_zero():
        raise BothZero('gcd(0, 0) is undefined')
    F = f.field
    one, zero = DensePoly.constant(F, F.one), DensePoly(F)
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while not r1.is_zero():
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    c = F.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def poly_gcd(f: DensePoly, g: DensePoly) -> DensePoly:
    """Monic gcd by Euclid's algorithm."""
    return poly_xgcd(f, g)[0]


class PolyMatrix:
    """Rectangular matrix of :class:`DensePoly` entries over one field."""

    __slots__ = ('field', 'entries')

    def __init__(self, field: FieldSpec, entries: Sequence[Sequence[DensePoly]]):
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise DimensionMismatch('empty matrix')
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch('ragged rows')
        for r in rows:
            for e in r:
                if not isinstance(e, DensePoly) or e.field != field:
                    raise TypeError('entries must be polynomials over the matrix field')
        self.field = field
        self.entries = rows

    @classmethod
    def constant(cls, field: FieldSpec, codes) -> PolyMatrix:
        return cls(field, [[DensePoly.constant(field, int(c)) for c in row] for row in codes])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> DensePoly:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[DensePoly, ...]:
        return self.entries[i]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.field, list(zip(*self.entries)))

    @property
    def T(self) -> PolyMatrix:
        return self.transpose()

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows or self.field != other.field:
            raise DimensionMismatch(f'cannot multiply {self.shape} by {other.shape}')
        zero = DensePoly(self.field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out)

    def scale(self, u: DensePoly) -> PolyMatrix:
        return PolyMatrix(self.field, [[u * e for e in r] for r in self.entries])

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        body = '; '.join(', '.join(repr(e) for e in r) for r in self.entries)
        return f'PolyMatrix[{body}]'

    def det_of(self, rows: Sequence[int], cols: Sequence[int]) -> DensePoly:
        """Determinant of the square submatrix on ``rows`` x ``cols`` (cofactor expansion)."""
        if len(rows) != len(cols):
            raise DimensionMismatch('minor must be square')
        F = self.field
        memo: dict[tuple[int, tuple[int, ...]], DensePoly] = {}

        def expand(r: int, avail: tuple[int, ...]) -> DensePoly:
            # expansion along row rows[r] over the remaining columns
            if r == len(rows):
                return DensePoly.constant(F, F.one)
            key = (r, avail)
            if key in memo:
                return memo[key]
            acc = DensePoly(F)
            for pos, c in enumerate(avail):
                e = self.entries[rows[r]][c]
                if e.is_zero():
                    continue
                term = e * expand(r + 1, avail[:pos] + avail[pos + 1:])
                acc = acc - term if pos % 2 else acc + term
            memo[key] = acc
            return acc

        return expand(0, tuple(cols))

    def minors(self, k: int):
        """Yield ((row_idx, col_idx), minor) for all k x k minors."""
        if not 1 <= k <= min(self.rows, self.cols):
            raise DimensionMismatch(f'no {k}-minors in a {self.rows}x{self.cols} matrix')
        for ri in itertools.combinations(range(self.rows), k):
            for ci in itertools.combinations(range(self.cols), k):
                yield (ri, ci), self.det_of(ri, ci)

    def to_json(self) -> list:
        return [[e.to_json() for e in r] for r in self.entries]

    @classmethod
    def from_json(cls, field: FieldSpec, obj) -> PolyMatrix:
        if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
            raise ParseError('matrix must be a nested list')
        return cls(field, [[DensePoly.from_json(field, e) for e in r] for r in obj])


def max_minor_degree(M: PolyMatrix, k: int) -> int:
    """Largest degree among the k x k minors of M."""
    best = -1
    for _, m in M.minors(k):
        best = max(best, m.degree)
    if best < 0:
        raise AllMinorsZero(f'all {k}-minors vanish')
    return best


def is_right_invertible(M: PolyMatrix) -> bool:
    """True iff the maximal minors of a wide matrix are coprime."""
    if M.rows > M.cols:
        raise DimensionMismatch('right inverse needs rows <= cols')
    g = None
    for _, m in M.minors(M.rows):
        if m.is_zero():
            continue
        g = m.monic() if g is None else poly_gcd(g, m)
        if g.degree == 0:
            return True
    return False


def row_degrees(M: PolyMatrix) -> list[int]:
    """Maximal entry degree of every row (-1 for a zero row)."""
    return [max(e.degree for e in r) for r in M.entries]


def leading_row_matrix(M: PolyMatrix) -> np.ndarray:
    """Codes of the coefficients sitting at each row's degree."""
    degs = row_degrees(M)
    if min(degs) < 0:
        raise ZeroRow('zero row has no leading coefficients')
    return np.array([[e[d] for e in r] for r, d in zip(M.entries, degs)], dtype=np.int64)


def rank_constant(field: FieldSpec, A) -> int:
    """Rank of a matrix of element codes, by Gaussian elimination."""
    rows = [list(map(int, r)) for r in A]
    F = field
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv(rows[rank][c])
        rows[rank] = [F.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def is_minimal_basis(M: PolyMatrix) -> bool:
    """Predictable-degree test: leading row matrix of full rank and row degrees summing to the internal degree."""
    if M.rows > M.cols:
        raise DimensionMismatch('minimal basis test needs rows <= cols')
    try:
        internal = max_minor_degree(M, M.rows)
    except AllMinorsZero:
        raise RankDeficient('matrix does not have full row rank') from None
    lead = leading_row_matrix(M)
    return rank_constant(M.field, lead) == M.rows and sum(row_degrees(M)) == internal


def module_membership(v: PolyMatrix, G: PolyMatrix) -> DensePoly | None:
    """Return u with u G = v for 1 x n matrices, or None if v is not in im G."""
    if v.rows != 1 or G.rows != 1 or v.cols != G.cols:
        raise DimensionMismatch('membership test needs two 1 x n matrices')
    if G.is_zero():
        raise ZeroRow('generator is zero')
    j = next(i for i, e in enumerate(G.row(0)) if not e.is_zero())
    u, r = divmod(v[0, j], G[0, j])
    if not r.is_zero():
        return None
    if all(u * g == w for g, w in zip(G.row(0), v.row(0))):
        return u
    return None
