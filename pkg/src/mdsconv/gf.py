"""Exact arithmetic in finite fields GF(p^m).

Elements are stored in polynomial basis: the element a_0 + a_1 x + ... +
a_{m-1} x^{m-1} (reduced modulo a monic irreducible ``modulus``) has the
representation vector ``rep = (a_0, ..., a_{m-1})``.

Internally every element is also identified with an integer *code*, the
position of ``rep`` in lexicographic order with the constant term most
significant::

    code = a_0 p^(m-1) + a_1 p^(m-2) + ... + a_{m-1}

Elements print with ``a`` for the basis variable, leaving ``x`` and ``z``
free for polynomial rings over the field.

Enumerating codes 0, 1, ..., q-1 is the fixed enumeration order used for
every "smallest element" search.  Code 0 is zero; code p^(m-1) is one.
Hot loops work on codes and the lookup tables of :class:`FieldSpec`;
:class:`FieldElement` is the user-facing wrapper.
"""
from __future__ import annotations

import functools
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    NoSuchOrder,
    NotPrime,
    ParseError,
    ReducibleModulus,
    ZeroElement,
)

TABLE_LIMIT = 256        # eager table cache
LAZY_TABLE_LIMIT = 4096  # largest q for which vectorized tables are built on request


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f'{q} is not a prime power')
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrime(f'{q} is not a prime power')
    return p, m


# polynomials over GF(p) as ascending int lists, used only for the modulus

def _gfp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _gfp_trim([c % p for c in a])
    b = _gfp_trim([c % p for c in b])
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _gfp_trim(a)
    return a


def _monic_polys(p: int, d: int) -> Iterator[list[int]]:
    """Monic degree-d polynomials over GF(p) in increasing integer value."""
    for k in range(p ** d):
        coeffs = []
        for _ in range(d):
            coeffs.append(k % p)
            k //= p
        yield coeffs + [1]


def _is_irreducible_gfp(f: Sequence[int], p: int) -> bool:
    d = len(f) - 1
    if d <= 1:
        return d == 1
    for e in range(1, d // 2 + 1):
        for g in _monic_polys(p, e):
            if not _gfp_rem(f, g, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m over GF(p), by integer value sum c_i p^i."""
    for f in _monic_polys(p, m):
        if _is_irreducible_gfp(f, p):
            return tuple(f)
    raise AssertionError('an irreducible polynomial of every degree exists')


class FieldSpec:
    """The finite field GF(p^m) = GF(p)[x]/(modulus).

    Construct with :func:`field_new` (validated, cached) rather than directly.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p ** m
        self._weights = [p ** (m - 1 - i) for i in range(m)]
        self.zero = 0
        self.one = p ** (m - 1)
        self._tables: tuple[np.ndarray, ...] | None = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # representation

    def rep_of(self, code: int) -> tuple[int, ...]:
        rep = []
        for w in self._weights:
            rep.append(code // w)
            code %= w
        return tuple(rep)

    def code_of(self, rep: Iterable[int]) -> int:
        rep = [int(c) % self.p for c in rep]
        if len(rep) > self.m:
            if any(rep[self.m:]):
                raise DegreeMismatch(f'representation {rep} too long for GF({self.q})')
            rep = rep[:self.m]
        rep += [0] * (self.m - len(rep))
        return sum(c * w for c, w in zip(rep, self._weights))

    # scalar arithmetic on codes (slow path, also used to fill the tables)

    def _add_rep(self, a: int, b: int) -> int:
        ra, rb = self.rep_of(a), self.rep_of(b)
        return self.code_of((x + y) % self.p for x, y in zip(ra, rb))

    def _mul_rep(self, a: int, b: int) -> int:
        ra, rb = self.rep_of(a), self.rep_of(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ra):
            if x:
                for j, y in enumerate(rb):
                    prod[i + j] += x * y
        if self.m > 1:
            prod = _gfp_rem(prod, self.modulus, self.p)
        return self.code_of(prod)

    def _build_tables(self) -> None:
        q = self.q
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                add[a, b] = add[b, a] = self._add_rep(a, b)
                mul[a, b] = mul[b, a] = self._mul_rep(a, b)
        neg = np.argmin(add, axis=1)  # add[a, neg[a]] == 0
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == self.one)[0])
        self._tables = (add, mul, neg, inv)
        self._add_l = add.tolist()
        self._mul_l = mul.tolist()
        self._neg_l = neg.tolist()
        self._inv_l = inv.tolist()

    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Lookup tables (add, mul, neg, inv) indexed by element codes."""
        if self._tables is None:
            if self.q > LAZY_TABLE_LIMIT:
                raise BudgetExceeded(f'no lookup tables for q = {self.q} > {LAZY_TABLE_LIMIT}')
            self._build_tables()
        return self._tables

    def add(self, a: int, b: int) -> int:
        if self._tables is not None:
            return self._add_l[a][b]
        return self._add_rep(a, b)

    def neg(self, a: int) -> int:
        if self._tables is not None:
            return self._neg_l[a]
        return self.code_of((-c) % self.p for c in self.rep_of(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._tables is not None:
            return self._mul_l[a][b]
        return self._mul_rep(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError('inverse of zero')
        if self._tables is not None:
            return self._inv_l[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def from_int(self, k: int) -> int:
        """Code of the image of the integer k under Z -> GF(p)."""
        return self.code_of([k % self.p])

    # element-level API

    def __call__(self, rep: Iterable[int] | int) -> FieldElement:
        """Element from a rep vector, or from an integer via Z -> GF(p)."""
        if isinstance(rep, int):
            return FieldElement(self, self.from_int(rep))
        return FieldElement(self, self.code_of(rep))

    def element(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise ValueError(f'code {code} out of range for GF({self.q})')
        return FieldElement(self, code)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in the fixed enumeration order."""
        return (FieldElement(self, c) for c in range(self.q))

    @property
    def gen(self) -> FieldElement:
        """The class of x (a primitive element only if the modulus is primitive)."""
        return self((0, 1)) if self.m > 1 else self(1)

    # comparison / serialization

    def _key(self):
        return self.p, self.m, self.modulus

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f'GF({self.q})'
        return f'GF({self.q}, modulus={list(self.modulus)})'

    def to_json(self) -> dict:
        return {'p': self.p, 'm': self.m, 'modulus': list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> FieldSpec:
        try:
            return field_new(int(obj['p']), int(obj['m']), obj.get('modulus'))
        except (KeyError, TypeError) as exc:
            raise ParseError(f'bad field description: {obj!r}') from exc


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def field_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated field GF(p^m).

    ``modulus`` is an ascending coefficient list of a monic degree-m
    polynomial over GF(p).  If omitted, the smallest monic irreducible is
    used.  For m = 1 the modulus is ignored and recorded as x.
    """
    if not is_prime(p):
        raise NotPrime(f'{p} is not prime')
    if m < 1:
        raise DegreeMismatch(f'extension degree must be >= 1, got {m}')
    if m == 1:
        return _field_cached(p, 1, (0, 1))
    if modulus is None:
        mod = smallest_irreducible(p, m)
    else:
        mod = tuple(_gfp_trim([int(c) % p for c in modulus]))
        if len(mod) != m + 1 or mod[-1] != 1:
            raise DegreeMismatch(f'modulus {list(modulus)} is not monic of degree {m}')
        if not _is_irreducible_gfp(mod, p):
            raise ReducibleModulus(f'modulus {list(modulus)} is reducible over GF({p})')
    return _field_cached(p, m, mod)


def GF(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Shorthand: the field of order q."""
    p, m = prime_power(q)
    return field_new(p, m, modulus)


class FieldElement:
    """An element of a :class:`FieldSpec`.

    Integer operands in arithmetic are mapped through Z -> GF(p), so
    ``3 * a`` means a + a + a.
    """

    __slots__ = ('field', 'code')

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    @property
    def rep(self) -> tuple[int, ...]:
        return self.field.rep_of(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError('elements of different fields')
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, code: int) -> FieldElement:
        return FieldElement(self.field, code)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.code))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.code))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.rep):
            if c:
                mono = '' if i == 0 else ('a' if i == 1 else f'a^{i}')
                coef = str(c) if (c != 1 or i == 0) else ''
                terms.append(coef + mono)
        return ' + '.join(terms) if terms else '0'

    def to_json(self) -> list[int]:
        return list(self.rep)


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def order_of_code(field: FieldSpec, a: int) -> int:
    if a == 0:
        raise ZeroElement('zero has no multiplicative order')
    for d in _divisors(field.q - 1):
        if field.pow(a, d) == field.one:
            return d
    raise AssertionError('Lagrange: a^(q-1) = 1')


def element_order(a: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    return order_of_code(a.field, a.code)


def find_element_of_order(field: FieldSpec, t: int, mode: str = 'exact') -> FieldElement:
    """First element (in enumeration order) with order t (``exact``) or >= t (``at_least``)."""
    if mode not in ('exact', 'at_least'):
        raise ValueError(f'unknown mode {mode!r}')
    if t < 1:
        raise NoSuchOrder(f'order must be positive, got {t}')
    if mode == 'exact' and (field.q - 1) % t:
        raise NoSuchOrder(f'{t} does not divide {field.q - 1}')
    if mode == 'at_least' and t > field.q - 1:
        raise NoSuchOrder(f'no element of order >= {t} in GF({field.q})')
    for code in range(1, field.q):
        o = order_of_code(field, code)
        if o == t or (mode == 'at_least' and o >= t):
            return field.element(code)
    raise NoSuchOrder(f'no element of order {t} in GF({field.q})')
