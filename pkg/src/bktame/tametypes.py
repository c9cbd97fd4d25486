"""Local contexts, tame inertial types, their digit vectors, and type
enumeration.

A context fixes (p, f, e).  A type is an ordered pair of tame-inertia
character exponents (k0, k0p); principal series types take exponents mod
p^f - 1, cuspidal types mod p^{2f} - 1 with the second exponent the
q-power twist of the first.  The digit vector gamma encodes the ratio of
the two characters in base p.
"""

from dataclasses import dataclass

from .errors import BadResidue, CuspidalDegenerate, NotPrime, NotSupported
from .gfarith import build_field, is_prime

PS = "ps"
CUSPIDAL = "cusp"
KINDS = (PS, CUSPIDAL)

MAX_P = 13
MAX_F = 4
MAX_E = 6
MAX_FE = 24


@dataclass(frozen=True)
class LocalContext:
    """The arithmetic frame (p, f, e); f' and the ramification of the
    auxiliary extension depend on the type kind."""

    p: int
    f: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime("p = %d is not prime" % self.p)
        if self.p == 2:
            raise NotSupported("p must be odd")
        if not (self.p <= MAX_P and 1 <= self.f <= MAX_F and 1 <= self.e <= MAX_E
                and self.f * self.e <= MAX_FE):
            raise NotSupported("context (p=%d, f=%d, e=%d) beyond desk-scale caps"
                               % (self.p, self.f, self.e))

    @property
    def q(self):
        return self.p ** self.f

    def fprime(self, kind):
        _check_kind(kind)
        return self.f if kind == PS else 2 * self.f

    def ekk(self, kind):
        """Ramification of the auxiliary Kummer extension: p^{f'} - 1."""
        return self.p ** self.fprime(kind) - 1

    def eprime(self, kind):
        return self.e * self.ekk(kind)

    def coefficient_field(self, kind):
        """GF(p^{f'}); the coefficient field all module data lives in."""
        return build_field(self.p, self.fprime(kind))


def _check_kind(kind):
    if kind not in KINDS:
        raise NotSupported("unknown type kind %r" % (kind,))


@dataclass(frozen=True)
class TameType:
    """An ordered pair of inertial-character exponents over a context."""

    ctx: LocalContext
    kind: str
    k0: int
    k0p: int

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
    def is_scalar(self):
        return self.kind == PS and self.k0 == self.k0p

    @property
    def kvec(self):
        """k_i = p^i k0 mod p^{f'} - 1, for i = 0..f'-1."""
        return tuple(pow(self.p_, i, self.ekk) * self.k0 % self.ekk
                     for i in range(self.fprime))

    @property
    def kpvec(self):
        return tuple(pow(self.p_, i, self.ekk) * self.k0p % self.ekk
                     for i in range(self.fprime))

    @property
    def p_(self):
        return self.ctx.p

    def swap(self):
        """The same pair with the two characters exchanged."""
        return TameType(self.ctx, self.kind, self.k0p, self.k0)

    def label(self):
        if self.is_scalar:
            return "scalar:%d" % self.k0
        if self.kind == PS:
            return "ps:%d,%d" % (self.k0, self.k0p)
        return "cusp:%d" % self.k0


def make_type(ctx, kind, k0, k0p=None):
    """Validated tame type; cuspidal input supplies only k0."""
    _check_kind(kind)
    ekk = ctx.ekk(kind)
    if not 0 <= k0 < ekk:
        raise BadResidue("k0 = %d not reduced mod %d" % (k0, ekk))
    if kind == PS:
        if k0p is None:
            raise BadResidue("principal series types need both exponents")
        if not 0 <= k0p < ekk:
            raise BadResidue("k0p = %d not reduced mod %d" % (k0p, ekk))
        return TameType(ctx, PS, k0, k0p)
    if k0p is not None:
        raise BadResidue("cuspidal types derive the second exponent")
    derived = k0 * ctx.q % ekk
    if derived == k0:
        raise CuspidalDegenerate("k0 = %d is fixed by the q-power map" % k0)
    return TameType(ctx, CUSPIDAL, k0, derived)


@dataclass(frozen=True)
class GammaVector:
    """Base-p digit vector of the character ratio, length f'."""

    gamma: tuple

    def __post_init__(self):
        if not self.gamma:
            raise BadResidue("empty digit vector")

    def __iter__(self):
        return iter(self.gamma)

    def __getitem__(self, i):
        return self.gamma[i % len(self.gamma)]

    def __len__(self):
        return len(self.gamma)


def gamma_digits(tau):
    """Digit vector with sum_j p^j gamma[i-j] = [k_i - k'_i] for every i.

    The representative is the unique vector in [0, p-1]^{f'} that is not
    all p-1 (all zeros exactly for scalar types); since the j = 0 term is
    the only one prime to p, each digit is just [k_i - k'_i] mod p.
    """
    p, ekk, fp = tau.p_, tau.ekk, tau.fprime
    kv, kpv = tau.kvec, tau.kpvec
    gamma = tuple(((kv[i] - kpv[i]) % ekk) % p for i in range(fp))
    assert not all(g == p - 1 for g in gamma)
    assert tau.is_scalar == all(g == 0 for g in gamma)
    if tau.kind == CUSPIDAL:
        f = tau.ctx.f
        assert all(gamma[i] + gamma[(i + f) % fp] == p - 1 for i in range(fp))
    return GammaVector(gamma)


def _cuspidal_orbit_rep(ctx, k0):
    return min(k0, k0 * ctx.q % ctx.ekk(CUSPIDAL))


def enumerate_types(ctx, kinds=KINDS, canonical=False):
    """All tame types for the context, in a deterministic order.

    Ordered enumeration lists every principal-series pair (k0, k0p) and
    every nondegenerate cuspidal exponent.  With canonical=True the pairs
    (k0, k0p) ~ (k0p, k0) and cuspidal orbits k0 ~ q*k0 are identified;
    swapping the pair replaces each shape by its complement downstream.
    """
    out = []
    if PS in kinds:
        n = ctx.ekk(PS)
        scalars = [make_type(ctx, PS, k, k) for k in range(n)]
        nonscalar = []
        for k0 in range(n):
            for k0p in range(n):
                if k0 == k0p:
                    continue
                if canonical and k0 < k0p:
                    continue
                nonscalar.append(make_type(ctx, PS, k0, k0p))
        out.extend(scalars)
        out.extend(sorted(nonscalar, key=lambda t: (t.k0, t.k0p)))
    if CUSPIDAL in kinds:
        n = ctx.ekk(CUSPIDAL)
        cusp = []
        for k0 in range(n):
            if k0 * ctx.q % n == k0:
                continue
            if canonical and _cuspidal_orbit_rep(ctx, k0) != k0:
                continue
            cusp.append(make_type(ctx, CUSPIDAL, k0))
        out.extend(cusp)
    return out
