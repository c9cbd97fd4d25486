"""Rank-one Breuil-Kisin modules with tame descent data over a finite
coefficient field: validation, isomorphism, alpha invariants, associated
Galois characters, and the Hom criterion.

A module M(r, a, c) is stored as the integer vector r (Frobenius
u-exponents, entries in [0, e']), the coefficient vector a (nonzero field
elements), and the descent-character vector c (residues mod p^{f'} - 1),
all of length f' and periodic with period dividing f.
"""

from dataclasses import dataclass

from .errors import (CongruenceFailed, ContextMismatch, KindMismatch,
                     PeriodError, RangeError, ZeroCoefficient)
from .gfarith import FieldElem
from .tametypes import CUSPIDAL, LocalContext


@dataclass(frozen=True)
class RankOneBK:
    ctx: LocalContext
    kind: str
    r: tuple
    a: tuple
    c: tuple

    @property
    def fprime(self):
        return self.ctx.fprime(self.kind)

    @property
    def ekk(self):
        return self.ctx.ekk(self.kind)

    @property
    def eprime(self):
        return self.ctx.eprime(self.kind)

    @property
    def field(self):
        return self.ctx.coefficient_field(self.kind)

    def unram_product(self, span=None):
        """Product of the a_i over f consecutive indices (or f' if asked).

        Periodicity makes the f'-fold product the square of the f-fold one
        in cuspidal contexts; character comparisons use the f-fold product.
        """
        n = self.ctx.f if span is None else span
        prod = self.field.one()
        for i in range(n):
            prod = prod * self.a[i]
        return prod


@dataclass(frozen=True)
class GaloisChar:
    """Tame character exponent (normalised at index 0) plus unramified part."""

    ekk: int
    tame_exp: int
    unram: FieldElem


def validate(ctx, kind, r, a, c):
    """Check all structure invariants and return the module.

    Requires: entries r_i in [0, e']; a_i nonzero in GF(p^{f'}); c_i
    residues mod p^{f'} - 1; all three vectors periodic with period
    dividing f; and p*c_{i-1} = c_i + r_i mod p^{f'} - 1 for every i.
    """
    fp = ctx.fprime(kind)
    ekk = ctx.ekk(kind)
    ep = ctx.eprime(kind)
    field = ctx.coefficient_field(kind)
    r = tuple(int(x) for x in r)
    c = tuple(int(x) for x in c)
    a = tuple(field.elem(x) if isinstance(x, int) else x for x in a)
    if not (len(r) == len(a) == len(c) == fp):
        raise RangeError("vectors must have length f' = %d" % fp)
    for x in a:
        if not isinstance(x, FieldElem) or x.owner != field:
            raise ContextMismatch("coefficients must lie in %r" % field)
        if not x:
            raise ZeroCoefficient("coefficients must be nonzero")
    if any(not 0 <= x <= ep for x in r):
        raise RangeError("r entries must lie in [0, %d]" % ep)
    if any(not 0 <= x < ekk for x in c):
        raise RangeError("c entries must be residues mod %d" % ekk)
    f = ctx.f
    for i in range(fp):
        j = (i + f) % fp
        if r[i] != r[j] or c[i] != c[j] or a[i] != a[j]:
            raise PeriodError("vectors must be periodic with period dividing f")
    for i in range(fp):
        if (ctx.p * c[i - 1] - c[i] - r[i]) % ekk != 0:
            raise CongruenceFailed("p*c[%d] != c[%d] + r[%d] mod %d"
                                   % ((i - 1) % fp, i, i, ekk))
    return RankOneBK(ctx, kind, r, a, c)


def alpha(mod):
    """The unique integer solution of p*alpha_{i-1} - alpha_i = r_i.

    alpha_i = (p^{f'-1} r_{i-f'+1} + ... + r_i) / (p^{f'} - 1); the
    congruence checked at validation makes the division exact.
    """
    p, fp, ekk = mod.ctx.p, mod.fprime, mod.ekk
    out = []
    for i in range(fp):
        num = 0
        for t in range(fp):
            num += p ** (fp - 1 - t) * mod.r[(i - fp + 1 + t) % fp]
        if num % ekk != 0:
            raise AssertionError("alpha numerator not divisible (internal error)")
        out.append(num // ekk)
    for i in range(fp):
        assert p * out[i - 1] - out[i] == mod.r[i]
    return tuple(out)


def galois_char(mod):
    """Associated Galois character: tame exponent c_0 - alpha_0, unramified
    part the product of the a_i over i = 0..f-1."""
    al = alpha(mod)
    return GaloisChar(mod.ekk, (mod.c[0] - al[0]) % mod.ekk, mod.unram_product())


def _same_frame(m, n):
    if m.ctx != n.ctx or m.kind != n.kind:
        raise ContextMismatch("modules live over different contexts/kinds")


def same_generic_fibre(m, n):
    """Whether the two modules have equal associated Galois characters."""
    _same_frame(m, n)
    return galois_char(m) == galois_char(n)


def is_isomorphic(m, n):
    """r and c must agree on the nose; the a enter through their product."""
    _same_frame(m, n)
    return m.r == n.r and m.c == n.c and m.unram_product() == n.unram_product()


def hom_dim(m, n):
    """dim Hom(M, N) in {0, 1}: same character and alpha(M) >= alpha(N)."""
    _same_frame(m, n)
    if not same_generic_fibre(m, n):
        return 0
    am, an = alpha(m), alpha(n)
    return 1 if all(x >= y for x, y in zip(am, an)) else 0


def twist_conjugate(mod):
    """Index shift by f on all three vectors (unramified conjugate twist)."""
    if mod.kind != CUSPIDAL:
        raise KindMismatch("conjugate twist needs a cuspidal-kind context")
    f, fp = mod.ctx.f, mod.fprime
    shift = lambda v: tuple(v[(i + f) % fp] for i in range(fp))
    return RankOneBK(mod.ctx, mod.kind, shift(mod.r), shift(mod.a), shift(mod.c))
