"""Serre weights, the weights attached to shapes of a tame type,
Jordan-Holder sets, descent characters of the standard submodules,
Dieudonne vanishing patterns and component labels, and the cycle
arithmetic with the integer decomposition solver.

Weights are stored in the normal form (t, s) with both vectors of length
f and digits in [0, p-1], t never all p-1; two det-twists are identified
when sum t_j p^j agrees mod p^f - 1.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidShape, NotInPTau, ScalarType, SteinbergWeight
from .intlinalg import IntegerColumnSolver
from .rng import SplitMix64
from .shapes import Shape, p_tau
from .tametypes import CUSPIDAL, PS, enumerate_types, gamma_digits

ZERO = "zero"
UNIT = "unit"
GENERIC = "genericCoefficient"

BOTH_IN = "bothIn"
BOTH_OUT = "bothOut"
OUT_OF_J = "outOfJ"
INTO_J = "intoJ"


@dataclass(frozen=True)
class SerreWeight:
    p: int
    f: int
    t: tuple
    s: tuple

    def __post_init__(self):
        rng = range(self.p)
        if len(self.t) != self.f or len(self.s) != self.f:
            raise InvalidShape("weight vectors must have length f")
        if any(x not in rng for x in self.t) or any(x not in rng for x in self.s):
            raise InvalidShape("weight digits must lie in [0, p-1]")
        if all(x == self.p - 1 for x in self.t):
            raise InvalidShape("t must not be all p-1")

    @property
    def is_steinberg(self):
        return all(x == self.p - 1 for x in self.s)

    @property
    def dim(self):
        prod = 1
        for x in self.s:
            prod *= x + 1
        return prod

    def label(self):
        return "t=%s,s=%s" % (list(self.t), list(self.s))


def _digits(value, p, f):
    out = []
    for _ in range(f):
        out.append(value % p)
        value //= p
    return tuple(out)


def canonical_weight(p, f, t_raw, s):
    """Normalise the det-twist: the unique digit vector, not all p-1, with
    the same sum t_j p^j mod p^f - 1."""
    qm1 = p ** f - 1
    total = sum(x * p ** j for j, x in enumerate(t_raw)) % qm1
    return SerreWeight(p, f, _digits(total, p, f), tuple(s))


@dataclass(frozen=True)
class WeightFormulaData:
    """Raw shape-dependent exponent vectors; cuspidal types also carry the
    norm-factored det exponent."""

    sJ: tuple
    tJ: tuple
    theta_exp: int  # None for principal series


def _as_shape(tau, J):
    return J if isinstance(J, Shape) else Shape(tau, frozenset(J))


def weight_formula_data(tau, J):
    """The per-index exponents attached to a shape.

    Outside J-boundaries the s-exponent is the plain digit (less one when
    the next index sits in J); across a boundary it is complemented.  The
    t-exponent is nonzero only when the previous index lies in J.
    """
    shape = _as_shape(tau, J)
    Jset = shape.J
    gamma = gamma_digits(tau)
    p, fp = tau.p_, tau.fprime
    comp = [i for i in range(fp) if i not in Jset]
    sJ, tJ = [], []
    for i in range(fp):
        in_prev = (i - 1) % fp in Jset
        if in_prev:
            sJ.append(p - 1 - gamma[i] - (1 if i in comp else 0))
            tJ.append(gamma[i] + (1 if i in comp else 0))
        else:
            sJ.append(gamma[i] - (1 if i in Jset else 0))
            tJ.append(0)
    theta = None
    if tau.kind == CUSPIDAL:
        f, ekk, q = tau.ctx.f, tau.ekk, tau.ctx.q
        for i in range(f):
            assert sJ[i] == sJ[i + f], "cuspidal s-vector must be f-periodic"
        exp = tau.k0p
        for i in range(fp):
            exp += tJ[i] * pow(p, fp - i, ekk)
        exp %= ekk
        assert exp % (q + 1) == 0, "det character must factor through the norm"
        theta = (exp // (q + 1)) % (q - 1)
    return WeightFormulaData(tuple(sJ), tuple(tJ), theta)


def sigma_tau_J(tau, J):
    """The Serre weight attached to a shape in the admissible set."""
    shape = _as_shape(tau, J)
    if shape not in p_tau(tau):
        raise NotInPTau("shape %s is not admissible for %s"
                        % (sorted(shape.J), tau.label()))
    data = weight_formula_data(tau, shape)
    f, p = tau.ctx.f, tau.p_
    s = data.sJ[:f]
    assert all(0 <= x <= p - 1 for x in s)
    if tau.kind == PS:
        t_raw = tuple(data.tJ[i] + d for i, d in enumerate(_digits(tau.k0p, p, f)))
        return canonical_weight(p, f, t_raw, s)
    return canonical_weight(p, f, _digits(data.theta_exp, p, f), s)


@lru_cache(maxsize=None)
def jh_factors(tau):
    """Weights of the admissible shapes; asserted pairwise distinct."""
    out = {}
    for shape in p_tau(tau):
        out[shape] = sigma_tau_J(tau, shape)
    weights = list(out.values())
    assert len(set(weights)) == len(weights), "weights of one type must be distinct"
    return frozenset(weights)


def char_TN(tau, J):
    """Tame exponent (normalised at index 0) of the descent character of
    the standard maximal submodule of the shape.

    The exponent is k0 minus the twisted-digit sum; for cuspidal types the
    result is checked to be fixed by the q-power map, so it really is the
    exponent of a character of the base field.
    """
    shape = _as_shape(tau, J)
    Jset = shape.J
    gamma = gamma_digits(tau)
    p, fp, ekk = tau.p_, tau.fprime, tau.ekk
    exp = tau.k0
    for i in range(fp):
        if (i - 1) % fp in Jset:
            t_i = gamma[i] + (0 if i in Jset else 1)
            exp -= t_i * pow(p, fp - i, ekk)
    exp %= ekk
    if tau.kind == CUSPIDAL:
        assert exp * tau.ctx.q % ekk == exp, "descent exponent must have niveau one"
    return exp


@dataclass(frozen=True)
class DieudonnePattern:
    entries: tuple  # per index: (case tag, F value, V value)

    def __post_init__(self):
        for _tag, fval, vval in self.entries:
            assert (fval == ZERO) != (vval == ZERO)

    def f_vanishing(self):
        return frozenset(j for j, (_, fval, _v) in enumerate(self.entries)
                         if fval == ZERO)


def dieudonne_pattern(tau, J):
    """Per-index vanishing of F: D_j -> D_{j+1} and V: D_{j+1} -> D_j.

    Within J the Frobenius vanishes and V is a unit; outside J the roles
    swap; at a boundary the non-vanishing operator carries the lowest
    coefficient of the extension parameter, which is generically nonzero.
    """
    if tau.is_scalar:
        raise ScalarType("vanishing patterns ask for a nonscalar type")
    shape = _as_shape(tau, J)
    Jset = shape.J
    fp = tau.fprime
    entries = []
    for j in range(fp):
        jin, nin = j in Jset, (j + 1) % fp in Jset
        if jin and nin:
            entries.append((BOTH_IN, ZERO, UNIT))
        elif not jin and not nin:
            entries.append((BOTH_OUT, UNIT, ZERO))
        elif jin:
            entries.append((OUT_OF_J, GENERIC, ZERO))
        else:
            entries.append((INTO_J, ZERO, GENERIC))
    return DieudonnePattern(tuple(entries))


def divisor_support(tau, J):
    """Indices j in [0, f) whose Frobenius divisor contains the component:
    exactly those with j+1 in J (computed mod f', reported mod f)."""
    if tau.is_scalar:
        raise ScalarType("divisor supports ask for a nonscalar type")
    shape = _as_shape(tau, J)
    fp = tau.fprime
    return frozenset(j for j in range(tau.ctx.f) if (j + 1) % fp in shape.J)


def components_count(tau):
    """Number of component labels: 2^f for nonscalar types, 1 for scalar."""
    return 1 if tau.is_scalar else 2 ** tau.ctx.f


class Cycle:
    """Finitely supported integer combination of Serre weights."""

    def __init__(self, mult=None):
        self.mult = {w: m for w, m in (mult or {}).items() if m}

    def __add__(self, other):
        out = dict(self.mult)
        for w, m in other.mult.items():
            out[w] = out.get(w, 0) + m
        return Cycle(out)

    def scale(self, k):
        return Cycle({w: k * m for w, m in self.mult.items()})

    @property
    def is_effective(self):
        return all(m >= 0 for m in self.mult.values())

    @property
    def is_reduced_effective(self):
        return all(m in (0, 1) for m in self.mult.values())

    @classmethod
    def unit(cls, weight):
        return cls({weight: 1})

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.mult == other.mult

    def __repr__(self):
        body = ", ".join("%s:%+d" % (w.label(), m)
                         for w, m in sorted(self.mult.items(),
                                            key=lambda t: (t[0].t, t[0].s)))
        return "<cycle %s>" % (body or "0")


def z_tau_cycle(tau):
    """Reduced effective cycle of the type: one per admissible weight."""
    return Cycle({w: 1 for w in jh_factors(tau)})


def all_weights(ctx):
    """Every non-Steinberg weight, ordered by (t, s)."""
    p, f = ctx.p, ctx.f
    qm1 = p ** f - 1
    out = []
    for tval in range(qm1):
        t = _digits(tval, p, f)
        for sval in range(p ** f):
            s = _digits(sval, p, f)
            if all(x == p - 1 for x in s):
                continue
            out.append(SerreWeight(p, f, t, s))
    return sorted(out, key=lambda w: (w.t, w.s))


@lru_cache(maxsize=None)
def _bm_system(ctx, permute_seed=None):
    """Types, weights, the 0/1 multiplicity matrix, and its factorisation."""
    types = enumerate_types(ctx, canonical=True)
    weights = all_weights(ctx)
    w_index = {w: i for i, w in enumerate(weights)}
    order = list(range(len(types)))
    if permute_seed is not None:
        SplitMix64(permute_seed).shuffle(order)
    columns = []
    for j in order:
        col = {}
        for w in jh_factors(types[j]):
            col[w_index[w]] = 1
        columns.append(col)
    solver = IntegerColumnSolver(columns, len(weights))
    return types, weights, w_index, order, solver


def solve_n_tau(ctx, weight, permute_seed=None):
    """Integers n with sum_tau n_tau [weight set of tau] = [weight].

    Solved by integer column elimination over the canonical unordered type
    list (scalars, then principal series by exponent pair, then cuspidal
    orbit representatives); a permutation seed reorders the elimination to
    exhibit independence of the choice.
    """
    if weight.is_steinberg:
        raise SteinbergWeight("no decomposition for Steinberg weights")
    types, weights, w_index, order, solver = _bm_system(ctx, permute_seed)
    combo = solver.solve({w_index[weight]: 1})
    return {types[order[j]]: v for j, v in sorted(combo.items())}


def c_sigma_cycle(ctx, weight, permute_seed=None):
    """The cycle sum_tau n_tau Z(tau); equal to the unit cycle at the
    weight whenever the decomposition solves exactly."""
    if weight.is_steinberg:
        raise SteinbergWeight("no cycle for Steinberg weights")
    n = solve_n_tau(ctx, weight, permute_seed)
    total = Cycle()
    for tau, coeff in n.items():
        total = total + z_tau_cycle(tau).scale(coeff)
    return total


def verify_orthogonality(ctx):
    """sum_tau n_tau(w) m_{w'}(tau) = delta_{w,w'} over all non-Steinberg
    pairs, for the solver's own output."""
    types, weights, w_index, _, _ = _bm_system(ctx)
    jh = {tau: jh_factors(tau) for tau in types}
    for w in weights:
        n = solve_n_tau(ctx, w)
        acc = {}
        for tau, coeff in n.items():
            for wp in jh[tau]:
                acc[wp] = acc.get(wp, 0) + coeff
        for wp in weights:
            if acc.get(wp, 0) != (1 if wp == w else 0):
                return False
    return True
