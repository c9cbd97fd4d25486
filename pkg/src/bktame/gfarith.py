"""Exact arithmetic over small finite fields GF(p^m), truncated Laurent
series over them, and dense rank/kernel/cokernel linear algebra.

Polynomials over GF(p) are coefficient tuples, constant term first.
The field modulus is always the lexicographically smallest monic
irreducible (coefficients compared low degree first), so construction is
deterministic without external tables.  Fields of order up to 2^16 get
exp/log tables for fast multiplication.
"""

from functools import lru_cache

from .errors import DegreeTooLarge, NotPrime, TruncationExceeded

_TABLE_LIMIT = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(n):
    """Prime factors of a small integer, ascending, without multiplicity."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomial helpers over GF(p); tuples, constant term first --


def _ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        coef = (a[i + len(b) - 1] * binv) % p
        if coef:
            q[i] = coef
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - coef * bj) % p
    return _ptrim(q), _ptrim(a)


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def _ppowmod(base, exp, mod, p):
    result = (1,)
    base = _pdivmod(base, mod, p)[1]
    while exp > 0:
        if exp & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        exp >>= 1
    return result


def _is_irreducible(poly, m, p):
    """No irreducible factor of degree <= m/2, via gcd with x^(p^k) - x.

    x^(p^k) - x is the product of all monic irreducibles of degree dividing
    k, so scanning k = 1..m//2 rules out every possible proper factor.
    """
    x = (0, 1)
    for k in range(1, m // 2 + 1):
        xq = _ppowmod(x, p ** k, poly, p)
        g = _pgcd(_psub(xq, x, p), poly, p)
        if len(g) > 1:
            return False
    return True


class FieldSpec:
    """The field GF(p^m) with a fixed monic irreducible modulus."""

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.order = p ** m
        self._exp = None
        self._log = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

    # elements are indexed 0..order-1 by sum(coeffs[j] * p^j)

    def _coeffs_of_index(self, idx):
        c = []
        for _ in range(self.m):
            c.append(idx % self.p)
            idx //= self.p
        return tuple(c)

    def _index_of_coeffs(self, coeffs):
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + c
        return idx

    def _build_tables(self):
        g = self._find_generator_coeffs()
        exp = [None] * (self.order - 1)
        log = {}
        cur = (1,) + (0,) * (self.m - 1)
        for k in range(self.order - 1):
            idx = self._index_of_coeffs(cur)
            exp[k] = idx
            log[idx] = k
            cur = self._raw_mul(cur, g)
        self._exp = exp
        self._log = log

    def _raw_mul(self, a, b):
        prod = _pmul(a, b, self.p)
        rem = _pdivmod(prod, self.modulus, self.p)[1]
        return rem + (0,) * (self.m - len(rem))

    def _find_generator_coeffs(self):
        qm1 = self.order - 1
        if qm1 == 1:
            return (1,) + (0,) * (self.m - 1)
        primes = _factorize(qm1)
        for idx in range(2, self.order):
            cand = self._coeffs_of_index(idx)
            cpoly = _ptrim(cand)
            if all(_ppowmod(cpoly, qm1 // ell, self.modulus, self.p) != (1,)
                   for ell in primes):
                return cand
        raise AssertionError("no multiplicative generator found")

    def elem(self, coeffs):
        if isinstance(coeffs, int):
            coeffs = (coeffs % self.p,) + (0,) * (self.m - 1)
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.m:
            coeffs = coeffs + (0,) * (self.m - len(coeffs))
        return FieldElem(self, coeffs)

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def gen(self):
        """The class of x (only meaningful for m >= 2)."""
        return self.elem((0, 1) + (0,) * (self.m - 2)) if self.m >= 2 else self.one()

    def elements(self):
        for idx in range(self.order):
            yield FieldElem(self, self._coeffs_of_index(idx))

    def nonzero_elements(self):
        for idx in range(1, self.order):
            yield FieldElem(self, self._coeffs_of_index(idx))

    def multiplicative_generator(self):
        """First element in index order with full multiplicative order."""
        return FieldElem(self, self._find_generator_coeffs())

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.m) if self.m > 1 else "GF(%d)" % self.p


@lru_cache(maxsize=None)
def build_field(p, m):
    """GF(p^m) with the lex-smallest monic irreducible modulus.

    Coefficients are compared low degree first; repeat calls return the
    identical cached spec.
    """
    if not is_prime(p):
        raise NotPrime("p = %d is not prime" % p)
    if not 1 <= m <= 12:
        raise DegreeTooLarge("extension degree %d outside 1..12" % m)
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    for idx in range(p ** m):
        low = []
        k = idx
        for _ in range(m):
            low.append(k % p)
            k //= p
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, m, p):
            return FieldSpec(p, m, cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldElem:
    """Immutable element of a FieldSpec; coeffs reduced mod p."""

    __slots__ = ("owner", "coeffs")

    def __init__(self, owner, coeffs):
        self.owner = owner
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.owner != self.owner:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.owner.elem(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.owner.p
        return FieldElem(self.owner, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.owner.p
        return FieldElem(self.owner, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        p = self.owner.p
        return FieldElem(self.owner, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.owner
        if F._log is not None:
            ia = F._index_of_coeffs(self.coeffs)
            ib = F._index_of_coeffs(other.coeffs)
            if ia == 0 or ib == 0:
                return F.zero()
            k = (F._log[ia] + F._log[ib]) % (F.order - 1)
            return FieldElem(F, F._coeffs_of_index(F._exp[k]))
        return FieldElem(F, F._raw_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        F = self.owner
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if F._log is not None:
            k = (-F._log[F._index_of_coeffs(self.coeffs)]) % (F.order - 1)
            return FieldElem(F, F._coeffs_of_index(F._exp[k]))
        # extended euclid against the modulus
        a, b = _ptrim(self.coeffs), F.modulus
        s0, s1 = (1,), ()
        while b:
            q, r = _pdivmod(a, b, F.p)
            a, b = b, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, F.p), F.p)
        lead_inv = pow(a[-1], F.p - 2, F.p)
        inv = _pmul(s0, (lead_inv,), F.p)
        return F.elem(inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        F = self.owner
        if not self:
            if n == 0:
                return F.one()
            if n < 0:
                raise ZeroDivisionError("inverse of zero")
            return F.zero()
        if F._log is not None:
            k = (F._log[F._index_of_coeffs(self.coeffs)] * n) % (F.order - 1)
            return FieldElem(F, F._coeffs_of_index(F._exp[k]))
        if n < 0:
            return self.inverse() ** (-n)
        result, base, e = F.one(), self, n
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def multiplicative_order(self):
        if not self:
            raise ZeroDivisionError("order of zero")
        n = self.owner.order - 1
        for ell in _factorize(n):
            while n % ell == 0 and self ** (n // ell) == self.owner.one():
                n //= ell
        return n

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.owner.elem(other)
        return (isinstance(other, FieldElem) and self.owner == other.owner
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.owner.p, self.owner.m, self.coeffs))

    def __repr__(self):
        return "%r%r" % (list(self.coeffs), self.owner)


def frobenius(x):
    """x -> x^p; iterating m times is the identity."""
    return x ** x.owner.p


class TruncSeries:
    """Truncated (Laurent) series over a FieldSpec.

    Coefficients of degree >= trunc_order are unknown; trunc_order None
    means the series is exact (a Laurent polynomial).  Normalised so the
    lowest stored coefficient is nonzero unless the series is zero.
    """

    __slots__ = ("owner", "terms", "low_degree", "trunc_order")

    def __init__(self, owner, terms=None, trunc_order=None):
        self.owner = owner
        clean = {}
        for d, c in (terms or {}).items():
            if isinstance(c, int):
                c = owner.elem(c)
            if c:
                if trunc_order is not None and d >= trunc_order:
                    continue
                clean[d] = c
        self.terms = clean
        self.trunc_order = trunc_order
        if clean:
            self.low_degree = min(clean)
        else:
            self.low_degree = trunc_order if trunc_order is not None else 0

    @classmethod
    def monomial(cls, owner, degree, coeff=1, trunc_order=None):
        return cls(owner, {degree: coeff}, trunc_order)

    def is_zero(self):
        """True if all *known* coefficients vanish."""
        return not self.terms

    def coeff(self, d):
        if self.trunc_order is not None and d >= self.trunc_order:
            raise TruncationExceeded("coefficient of u^%d is unknown" % d)
        return self.terms.get(d, self.owner.zero())

    def _min_trunc(self, other):
        if self.trunc_order is None:
            return other.trunc_order
        if other.trunc_order is None:
            return self.trunc_order
        return min(self.trunc_order, other.trunc_order)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        trunc = self._min_trunc(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, self.owner.zero()) + c
        return TruncSeries(self.owner, terms, trunc)

    def __neg__(self):
        return TruncSeries(self.owner, {d: -c for d, c in self.terms.items()},
                           self.trunc_order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int)):
            c = other if isinstance(other, FieldElem) else self.owner.elem(other)
            return TruncSeries(self.owner, {d: cc * c for d, cc in self.terms.items()},
                               self.trunc_order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        # known window of the product: min(N1 + low2, N2 + low1)
        trunc = None
        if self.trunc_order is not None:
            trunc = self.trunc_order + other.low_degree
        if other.trunc_order is not None:
            t2 = other.trunc_order + self.low_degree
            trunc = t2 if trunc is None else min(trunc, t2)
        terms = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d = d1 + d2
                if trunc is not None and d >= trunc:
                    continue
                prev = terms.get(d)
                terms[d] = c1 * c2 if prev is None else prev + c1 * c2
        return TruncSeries(self.owner, terms, trunc)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by u^k."""
        return TruncSeries(self.owner, {d + k: c for d, c in self.terms.items()},
                           None if self.trunc_order is None else self.trunc_order + k)

    def valuation(self):
        """Degree of the lowest nonzero term; None for (known-)zero series."""
        if self.terms:
            return self.low_degree
        return None

    def divisible_by_power(self, k):
        """Whether u^k divides the series; may raise TruncationExceeded."""
        if any(d < k for d in self.terms):
            return False
        if self.trunc_order is not None and self.trunc_order < k:
            raise TruncationExceeded("window ends at u^%d, need u^%d"
                                     % (self.trunc_order, k))
        return True

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.owner == other.owner
                and self.terms == other.terms and self.trunc_order == other.trunc_order)

    def __hash__(self):
        return hash((self.owner, tuple(sorted(self.terms.items(), key=lambda t: t[0])),
                     self.trunc_order))

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join("%r*u^%d" % (list(c.coeffs), d)
                              for d, c in sorted(self.terms.items()))
        tail = "" if self.trunc_order is None else " + O(u^%d)" % self.trunc_order
        return "<%s%s>" % (body, tail)


def semilinear_substitute(s):
    """s(u) -> s(u^p) with coefficients unchanged.

    After the idempotent decomposition the Frobenius between graded pieces
    is coefficient-linear, so only the variable is raised to the p-th power.
    The known window scales: the output is known below p * trunc_order.
    """
    p = s.owner.p
    return TruncSeries(s.owner, {p * d: c for d, c in s.terms.items()},
                       None if s.trunc_order is None else p * s.trunc_order)


class LinearMap:
    """Dense matrix over a FieldSpec; rows index the codomain."""

    def __init__(self, domain_dim, codomain_dim, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != codomain_dim or any(len(r) != domain_dim for r in rows):
            raise ValueError("matrix shape does not match the stated dimensions")
        self.domain_dim = domain_dim
        self.codomain_dim = codomain_dim
        self.rows = rows


def gauss_rank(rows):
    """Row-reduce a list of FieldElem lists in place; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def nullspace_basis(rows, ncols, field):
    """Basis of the kernel of the matrix (rows over FieldElem)."""
    work = [list(r) for r in rows]
    rank = gauss_rank(work)
    work = work[:rank]
    pivots = []
    for r in range(rank):
        for c in range(ncols):
            if work[r][c]:
                pivots.append(c)
                break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [field.zero()] * ncols
        vec[fcol] = field.one()
        for r, pcol in enumerate(pivots):
            vec[pcol] = -work[r][fcol]
        basis.append(vec)
    return basis


def rank_kernel_cokernel(lmap):
    """(rank, kernel dim, cokernel dim) by Gaussian elimination."""
    work = [list(r) for r in lmap.rows]
    rank = gauss_rank(work)
    return rank, lmap.domain_dim - rank, lmap.codomain_dim - rank
