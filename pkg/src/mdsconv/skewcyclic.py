"""Cyclic structure: the ring A = F[x]/(x^n - 1) and skew polynomials over it.

A word (v_0, ..., v_{n-1}) in F^n is identified with v_0 + v_1 x + ... in A,
and a polynomial vector sum_nu z^nu v_nu with sum_nu z^nu p(v_nu) in the
skew polynomial ring A[z; sigma], where z does not commute with A but obeys

    a z = z sigma(a)        for all a in A,

so (z^i a)(z^j b) = z^(i+j) sigma^j(a) b.  Elements are written with the
coefficients to the right of the powers of z.

A code is sigma-cyclic when its image is a left ideal.  Since the image of
im G is the left F[z]-span of g = p(G), this holds iff a g lies in it for
every a in A, and it suffices to test a = x, x^2, ..., x^(n-1).
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .codebuild import ConvCode
from .errors import (
    DeltaZero,
    InternalInconsistency,
    LengthMismatch,
    NotAutomorphism,
    NotCoprime,
    PreconditionNotMet,
    RingMismatch,
)
from .gf import FieldElement, FieldSpec, element_order
from .polyalg import DensePoly, PolyMatrix, module_membership, poly_xgcd, rank_constant

DEFAULT_AUTOMORPHISM_BUDGET = 10**4


class RingElem:
    """Element of A, stored as its n coefficient codes."""

    __slots__ = ('ring', 'c')

    def __init__(self, ring: RingA, coeffs: Iterable[int]):
        c = tuple(coeffs)
        if len(c) != ring.n:
            raise LengthMismatch(f'expected {ring.n} coefficients, got {len(c)}')
        self.ring = ring
        self.c = c

    def _check(self, other: RingElem) -> None:
        if not isinstance(other, RingElem) or other.ring is not self.ring:
            raise RingMismatch('elements of different rings')

    def __add__(self, other: RingElem) -> RingElem:
        self._check(other)
        F = self.ring.field
        return RingElem(self.ring, (F.add(a, b) for a, b in zip(self.c, other.c)))

    def __neg__(self) -> RingElem:
        F = self.ring.field
        return RingElem(self.ring, (F.neg(a) for a in self.c))

    def __sub__(self, other: RingElem) -> RingElem:
        return self + (-other)

    def __mul__(self, other) -> RingElem:
        F, n = self.ring.field, self.ring.n
        if isinstance(other, FieldElement):
            return RingElem(self.ring, (F.mul(a, other.code) for a in self.c))
        self._check(other)
        out = [0] * n
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        k = (i + j) % n
                        out[k] = F.add(out[k], F.mul(a, b))
        return RingElem(self.ring, out)

    def __rmul__(self, other: FieldElement) -> RingElem:
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> RingElem:
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.c)

    def evaluate(self, point: int) -> int:
        """Value at a field element (code) whose n-th power is one."""
        return DensePoly(self.ring.field, self.c).eval_code(point)

    def to_poly(self) -> DensePoly:
        return DensePoly(self.ring.field, self.c)

    def __eq__(self, other):
        return isinstance(other, RingElem) and other.ring is self.ring and other.c == self.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return DensePoly(self.ring.field, self.c).format('x')


class RingA:
    """F[x]/(x^n - 1) for n coprime to the characteristic.

    ``factors`` are the distinct monic irreducible factors of x^n - 1 in
    ascending (degree, coefficient codes) order and ``idempotents[k]`` is the
    primitive idempotent that is 1 modulo ``factors[k]`` and 0 modulo the
    others.
    """

    def __init__(self, field: FieldSpec, n: int):
        self.field = field
        self.n = n
        F = field
        self.modulus = DensePoly.monomial(F, n) - DensePoly.constant(F, F.one)
        self.zero = RingElem(self, [0] * n)
        self.one = RingElem(self, [F.one] + [0] * (n - 1))
        self.x = self.monomial(1)
        self.factors = tuple(_factor_squarefree(self.modulus))
        self.idempotents = tuple(self._idempotent(p) for p in self.factors)
        self._automorphisms: list[Automorphism] | None = None

    def monomial(self, i: int, c: int | None = None) -> RingElem:
        coeffs = [0] * self.n
        coeffs[i % self.n] = self.field.one if c is None else c
        return RingElem(self, coeffs)

    def elem(self, coeffs: Sequence) -> RingElem:
        codes = [c.code if isinstance(c, FieldElement) else int(c) for c in coeffs]
        return RingElem(self, codes + [0] * (self.n - len(codes)))

    def reduce(self, f: DensePoly) -> RingElem:
        """Image of a polynomial in x under F[x] -> A."""
        F = self.field
        out = [0] * self.n
        for i, a in enumerate(f.coeffs):
            out[i % self.n] = F.add(out[i % self.n], a)
        return RingElem(self, out)

    def scalar(self, k: int) -> RingElem:
        """Image of the integer k."""
        return RingElem(self, [self.field.from_int(k)] + [0] * (self.n - 1))

    def _idempotent(self, pi: DensePoly) -> RingElem:
        m = self.modulus // pi
        _, s, _ = poly_xgcd(m % pi, pi)  # s * m = 1 mod pi
        return self.reduce(m * s)

    def crt(self, a: RingElem) -> list[DensePoly]:
        """Residues of a modulo every irreducible factor."""
        return [a.to_poly() % p for p in self.factors]

    def elements(self):
        q = self.field.q
        for codes in itertools.product(range(q), repeat=self.n):
            yield RingElem(self, codes)

    def linear_idempotents(self, alpha: FieldElement) -> list[RingElem]:
        """Idempotents eps_0, ..., eps_{n-1} with eps_k(alpha^i) = [k == i]."""
        F = self.field
        out = []
        for k in range(self.n):
            root = F.pow(alpha.code, k)
            hits = [e for e, p in zip(self.idempotents, self.factors)
                    if p.degree == 1 and p.eval_code(root) == 0]
            if len(hits) != 1:
                raise PreconditionNotMet('x^n - 1 does not split over the powers of alpha')
            out.append(hits[0])
        if len(set(out)) != self.n:
            raise PreconditionNotMet('powers of alpha are not n distinct roots')
        return out

    def __repr__(self):
        return f'A({self.field!r}, n={self.n})'


def _factor_squarefree(f: DensePoly) -> list[DensePoly]:
    """Trial division by monic polynomials of increasing degree.

    The first divisor met in each degree is irreducible because all smaller
    factors have already been removed; x^n - 1 is squarefree here.
    """
    F = f.field
    factors = []
    rest = f.monic()
    d = 1
    while 2 * d <= rest.degree:
        for low in itertools.product(range(F.q), repeat=d):
            g = DensePoly(F, list(reversed(low)) + [F.one])
            quo, rem = divmod(rest, g)
            if rem.is_zero():
                factors.append(g)
                rest = quo
                if 2 * d > rest.degree:
                    break
        d += 1
    if rest.degree >= 1:
        factors.append(rest)
    return sorted(factors, key=lambda p: (p.degree, p.coeffs))


@functools.lru_cache(maxsize=None)
def build_ring(field: FieldSpec, n: int) -> RingA:
    if n < 1:
        raise LengthMismatch('n must be positive')
    if math.gcd(n, field.p) != 1:
        raise NotCoprime(f'n = {n} and q = {field.q} are not coprime')
    return RingA(field, n)


class Automorphism:
    """F-algebra automorphism of A, determined by the image of x."""

    def __init__(self, ring: RingA, image: RingElem):
        self.ring = ring
        self.image = image
        pw = [ring.one]
        for _ in range(ring.n - 1):
            pw.append(pw[-1] * image)
        self._powers = pw
        self._pow_cache: dict[int, Automorphism] = {0: None, 1: self}

    def __call__(self, a: RingElem) -> RingElem:
        F = self.ring.field
        out = [0] * self.ring.n
        for ai, p in zip(a.c, self._powers):
            if ai:
                for k, b in enumerate(p.c):
                    if b:
                        out[k] = F.add(out[k], F.mul(ai, b))
        return RingElem(self.ring, out)

    def compose(self, other: Automorphism) -> Automorphism:
        """self o other."""
        return Automorphism(self.ring, self(other.image))

    def power(self, k: int) -> Automorphism:
        """sigma^k for k >= 0 (sigma^0 is the identity)."""
        if k not in self._pow_cache or self._pow_cache[k] is None:
            if k == 0:
                self._pow_cache[0] = Automorphism(self.ring, self.ring.x)
            else:
                self._pow_cache[k] = self.compose(self.power(k - 1))
        return self._pow_cache[k]

    def is_identity(self) -> bool:
        return self.image == self.ring.x

    def __eq__(self, other):
        return isinstance(other, Automorphism) and other.ring is self.ring and other.image == self.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f'sigma(x) = {self.image!r}'

    def to_json(self) -> list[list[int]]:
        return [list(self.ring.field.rep_of(c)) for c in self.image.c]


def _is_automorphism_image(ring: RingA, y: RingElem) -> bool:
    if y ** ring.n != ring.one:
        return False
    pw = [ring.one]
    for _ in range(ring.n - 1):
        pw.append(pw[-1] * y)
    return rank_constant(ring.field, [p.c for p in pw]) == ring.n


def make_automorphism(ring: RingA, image: RingElem) -> Automorphism:
    """Validated automorphism x -> image.

    x -> y extends to an algebra endomorphism iff y^n = 1, and it is bijective
    iff 1, y, ..., y^(n-1) are linearly independent over F.
    """
    if image.ring is not ring:
        raise RingMismatch('image lives in a different ring')
    if not _is_automorphism_image(ring, image):
        raise NotAutomorphism(f'x -> {image!r} is not an automorphism of {ring!r}')
    return Automorphism(ring, image)


def all_automorphisms(ring: RingA, budget: int = DEFAULT_AUTOMORPHISM_BUDGET) -> list[Automorphism]:
    """Every F-automorphism of A, by testing all q^n candidate images of x."""
    from .errors import BudgetExceeded

    if ring.field.q ** ring.n > budget:
        raise BudgetExceeded(f'{ring.field.q ** ring.n} candidates exceed the budget of {budget}')
    if ring._automorphisms is None:
        ring._automorphisms = [Automorphism(ring, y) for y in ring.elements()
                               if _is_automorphism_image(ring, y)]
    return list(ring._automorphisms)


def multiplication_automorphism(ring: RingA, alpha: FieldElement) -> Automorphism:
    """sigma(x) = alpha x."""
    return make_automorphism(ring, ring.monomial(1, alpha.code))


def sigma_on_idempotents(sigma: Automorphism, idempotents: Sequence[RingElem] | None = None) -> list[int]:
    """perm[k] = l where sigma(eps_k) = eps_l."""
    ring = sigma.ring
    eps = list(ring.idempotents if idempotents is None else idempotents)
    degree = {e: p.degree for e, p in zip(ring.idempotents, ring.factors)}
    perm = []
    for e in eps:
        image = sigma(e)
        try:
            l = eps.index(image)
        except ValueError:
            raise InternalInconsistency(f'sigma({e!r}) is not a primitive idempotent') from None
        if degree[e] != degree[eps[l]]:
            raise InternalInconsistency('sigma does not preserve factor degrees')
        perm.append(l)
    return perm


class SkewPoly:
    """Element sum_nu z^nu a_nu of A[z; sigma]."""

    __slots__ = ('ring', 'sigma', 'coeffs')

    def __init__(self, ring: RingA, sigma: Automorphism, coeffs: Iterable[RingElem] = ()):
        if sigma.ring is not ring:
            raise RingMismatch('automorphism of a different ring')
        c = list(coeffs)
        for a in c:
            if a.ring is not ring:
                raise RingMismatch('coefficient from a different ring')
        while c and c[-1].is_zero():
            c.pop()
        self.ring = ring
        self.sigma = sigma
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, sigma: Automorphism, a: RingElem) -> SkewPoly:
        return cls(sigma.ring, sigma, [a])

    @classmethod
    def one(cls, sigma: Automorphism) -> SkewPoly:
        return cls(sigma.ring, sigma, [sigma.ring.one])

    @classmethod
    def z_power(cls, sigma: Automorphism, k: int, a: RingElem | None = None) -> SkewPoly:
        ring = sigma.ring
        return cls(ring, sigma, [ring.zero] * k + [ring.one if a is None else a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, nu: int) -> RingElem:
        return self.coeffs[nu] if 0 <= nu < len(self.coeffs) else self.ring.zero

    def _check(self, other: SkewPoly) -> None:
        if not isinstance(other, SkewPoly) or other.ring is not self.ring or other.sigma != self.sigma:
            raise RingMismatch('skew polynomials over different rings or automorphisms')

    def __add__(self, other: SkewPoly) -> SkewPoly:
        self._check(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, self.sigma, [self[i] + other[i] for i in range(m)])

    def __neg__(self) -> SkewPoly:
        return SkewPoly(self.ring, self.sigma, [-a for a in self.coeffs])

    def __sub__(self, other: SkewPoly) -> SkewPoly:
        return self + (-other)

    def __mul__(self, other) -> SkewPoly:
        if isinstance(other, FieldElement):
            return SkewPoly(self.ring, self.sigma, [a * other for a in self.coeffs])
        return skew_mul(self, other)

    def __rmul__(self, other: FieldElement) -> SkewPoly:
        if isinstance(other, FieldElement):
            return self * other  # F is central
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, SkewPoly) and other.ring is self.ring
                and other.sigma == self.sigma and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for nu, a in enumerate(self.coeffs):
            if not a.is_zero():
                zpart = '' if nu == 0 else ('z' if nu == 1 else f'z^{nu}')
                terms.append(f'{zpart}({a!r})' if zpart else f'({a!r})')
        return ' + '.join(terms)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product under a z = z sigma(a): (z^i a)(z^j b) = z^(i+j) sigma^j(a) b."""
    f._check(g)
    ring, sigma = f.ring, f.sigma
    if not f.coeffs or not g.coeffs:
        return SkewPoly(ring, sigma)
    out = [ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for j, b in enumerate(g.coeffs):
        if b.is_zero():
            continue
        sj = sigma.power(j)
        for i, a in enumerate(f.coeffs):
            if not a.is_zero():
                out[i + j] = out[i + j] + sj(a) * b
    return SkewPoly(ring, sigma, out)


def p_map(v: PolyMatrix, sigma: Automorphism) -> SkewPoly:
    """sum_nu z^nu v_nu  ->  sum_nu z^nu (v_nu,0 + v_nu,1 x + ... + v_nu,n-1 x^(n-1))."""
    ring = sigma.ring
    if v.rows != 1 or v.cols != ring.n:
        raise LengthMismatch(f'expected a 1 x {ring.n} vector, got {v.shape}')
    if v.field != ring.field:
        raise RingMismatch('vector over a different field')
    top = max(e.degree for e in v.row(0))
    return SkewPoly(ring, sigma, [RingElem(ring, [e[nu] for e in v.row(0)]) for nu in range(top + 1)])


def p_inverse(f: SkewPoly) -> PolyMatrix:
    """Inverse of :func:`p_map`."""
    ring = f.ring
    cols = [DensePoly(ring.field, [a.c[i] for a in f.coeffs]) for i in range(ring.n)]
    return PolyMatrix(ring.field, [cols])


def _ring_for(code: ConvCode, sigma: Automorphism) -> RingA:
    ring = sigma.ring
    if ring.field != code.field or ring.n != code.n:
        raise RingMismatch('automorphism ring does not match the code')
    return ring


def is_sigma_cyclic(code: ConvCode, sigma: Automorphism) -> bool:
    """True iff p(im G) is a left ideal of A[z; sigma]."""
    ring = _ring_for(code, sigma)
    g = p_map(code.G, sigma)
    for m in range(1, ring.n):
        xm = SkewPoly.const(sigma, ring.monomial(m))
        if module_membership(p_inverse(xm * g), code.G) is None:
            return False
    return True


@dataclass(frozen=True)
class CyclicityReport:
    predicted: bool
    witnesses: tuple[Automorphism, ...]
    coverage: str
    candidates_tested: int
    images_searched: int
    alpha_x_witness: bool | None

    @property
    def agreement(self) -> bool:
        return self.predicted == bool(self.witnesses)

    def to_json(self) -> dict:
        return {
            'predicted': self.predicted,
            'witnesses': [w.to_json() for w in self.witnesses],
            'coverage': self.coverage,
            'candidates_tested': self.candidates_tested,
            'images_searched': self.images_searched,
            'alpha_x_witness': self.alpha_x_witness,
            'agreement': self.agreement,
        }


def cyclicity_decision(code: ConvCode, exhaustive: bool | None = None,
                       budget: int = DEFAULT_AUTOMORPHISM_BUDGET) -> CyclicityReport:
    """Compare "ord(alpha) = n" with a search for automorphisms making the code cyclic.

    With ``exhaustive=None`` all automorphisms are tried when q^n <= budget,
    otherwise only x -> alpha x (coverage ``partial``).
    """
    if code.delta == 0:
        raise DeltaZero('delta = 0 gives a cyclic block code for every alpha')
    ring = build_ring(code.field, code.n)
    predicted = code.alpha_order == code.n
    try:
        ax = multiplication_automorphism(ring, code.alpha)
    except NotAutomorphism:
        ax = None
    if exhaustive is None:
        exhaustive = code.q ** code.n <= budget
    if exhaustive:
        candidates = all_automorphisms(ring, budget=max(budget, code.q ** code.n))
        coverage, searched = 'exhaustive', code.q ** code.n
    else:
        candidates = [ax] if ax is not None else []
        coverage, searched = 'partial', 1
    witnesses = tuple(s for s in candidates if is_sigma_cyclic(code, s))
    ax_witness = None if ax is None else (ax in witnesses if exhaustive else bool(witnesses))
    return CyclicityReport(predicted, witnesses, coverage, len(candidates), searched, ax_witness)


def _alpha_of(sigma: Automorphism) -> FieldElement:
    c = sigma.image.c
    if c[1 % len(c)] == 0 or any(v for i, v in enumerate(c) if i != 1):
        raise PreconditionNotMet('sigma must be x -> alpha x')
    return sigma.ring.field.element(c[1])


def unit_factorization(ring: RingA, sigma: Automorphism, delta: int) -> tuple[SkewPoly, SkewPoly]:
    """u = n (1 + z eps_{n-1}) ... (1 + z eps_{n-delta}) and its inverse.

    Requires sigma(x) = alpha x with ord(alpha) = n and 1 <= delta <= n.
    """
    if sigma.ring is not ring:
        raise RingMismatch('automorphism of a different ring')
    alpha = _alpha_of(sigma)
    n = ring.n
    if element_order(alpha) != n:
        raise PreconditionNotMet('unit factorization needs ord(alpha) = n')
    if not 1 <= delta <= n:
        raise PreconditionNotMet(f'need 1 <= delta <= n, got {delta}')
    eps = ring.linear_idempotents(alpha)
    F = ring.field
    one = SkewPoly.one(sigma)
    nF = F.element(F.from_int(n))
    u = one * nF
    for k in range(1, delta + 1):
        u = u * SkewPoly(ring, sigma, [ring.one, eps[n - k]])
    u_inv = one * nF.inverse()
    for k in range(delta, 0, -1):
        u_inv = u_inv * SkewPoly(ring, sigma, [ring.one, -eps[n - k]])
    return u, u_inv


def expanded_unit(ring: RingA, sigma: Automorphism, delta: int) -> SkewPoly:
    """n (1 + sum_{i=1}^{delta} z^i (eps_{n-delta} + ... + eps_{n-i}))."""
    alpha = _alpha_of(sigma)
    eps = ring.linear_idempotents(alpha)
    n = ring.n
    coeffs = [ring.one]
    for i in range(1, delta + 1):
        acc = ring.zero
        for k in range(n - delta, n - i + 1):
            acc = acc + eps[k]
        coeffs.append(acc)
    F = ring.field
    return SkewPoly(ring, sigma, coeffs) * F.element(F.from_int(n))


def geometric_z_sum(sigma: Automorphism, delta: int) -> SkewPoly:
    """1 + z + ... + z^delta."""
    ring = sigma.ring
    return SkewPoly(ring, sigma, [ring.one] * (delta + 1))


def reed_solomon_form(code: ConvCode, sigma: Automorphism | None = None) -> SkewPoly:
    """(x - alpha)(x - alpha^2) ... (x - alpha^(n-1)) * (1 + z + ... + z^delta)."""
    if code.alpha_order != code.n:
        raise PreconditionNotMet('product form needs ord(alpha) = n')
    ring = build_ring(code.field, code.n)
    if sigma is None:
        sigma = multiplication_automorphism(ring, code.alpha)
    F = code.field
    prod = DensePoly.constant(F, F.one)
    for i in range(1, code.n):
        prod = prod * DensePoly(F, [F.neg(F.pow(code.alpha.code, i)), F.one])
    return SkewPoly.const(sigma, ring.reduce(prod)) * geometric_z_sum(sigma, code.delta)


def idempotent_form(code: ConvCode, sigma: Automorphism | None = None) -> SkewPoly:
    """n eps_0 (1 + z + ... + z^delta)."""
    if code.alpha_order != code.n:
        raise PreconditionNotMet('idempotent form needs ord(alpha) = n')
    ring = build_ring(code.field, code.n)
    if sigma is None:
        sigma = multiplication_automorphism(ring, code.alpha)
    eps0 = ring.linear_idempotents(code.alpha)[0]
    F = code.field
    return SkewPoly.const(sigma, eps0 * F.element(F.from_int(code.n))) * geometric_z_sum(sigma, code.delta)
