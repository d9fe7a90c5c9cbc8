"""Diagonal intertwiner matrix elements, their three routes, and traces.

The matrix element c(mu, lam) at level k is computed three ways: by
applying index-side difference operators to a falling-factorial kernel
(mat_elt), by an explicit box summation (diag_coeff_sum), and in squared
form through reduced Clebsch-Gordan coefficients (c_squared_chain).  All
are rational in q.

The closed formulas are ratios that can develop removable 0/0 at lattice
points where bar-shifted coordinates collide (such points do occur inside
trace summations).  Both rational routes therefore evaluate along an exact
one-parameter regularization: every q-number argument c is perturbed to
c + z*d with a fixed generic integer direction d per coordinate pair, the
whole expression is carried as a rational function of Z = q^z, and Z -> 1
is substituted at the end.  A fast unregularized path handles the generic
case; vanishing regularized factors cancel only when their directions
match, which is an identity, not a limit.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, product

from .combinat import interlaces, is_dominant, shifted_chain_enumerate, sig_sum
from .combinat import shift as sig_shift
from .npoly import NPoly
from .qfield import (CR_ONE, CR_ZERO, CoeffRat, DomainViolationError, LaurentQT,
                     UnitMono, qfact, qfall, qnum)
from .sympoly import SymLaurent, from_npoly


class _NeedRegularization(Exception):
    """Internal: an unmatched vanishing denominator factor was met."""


def _bar(sig, k):
    return tuple(sig[i] - k * i for i in range(len(sig)))


# ---------------------------------------------------------------------------
# Regularized evaluation core.  A factor (c, d) stands for the q-number
# [c + z*d]; writing B(c, d) = q^c Z^d - q^{-c} Z^{-d} with Z = q^z, each
# term of a sum is a signed q-power times a ratio of B-atoms (the powers of
# q - q^{-1} are counted separately).  The whole sum is assembled over the
# common atom denominator as one integer Laurent polynomial in (q, Z),
# divided exactly by (Z - 1)^M, and evaluated at Z = 1.

def _atom_norm(c, d):
    if c < 0 or (c == 0 and d < 0):
        return (-c, -d), -1
    return (c, d), 1


def _atom_laurent(key):
    c, d = key
    return LaurentQT({(c, d): 1, (-c, -d): -1})


_QMQI = LaurentQT({(1, 0): 1, (-1, 0): -1})


def _div_z_minus_1(A):
    """Exact division of a Laurent term map in (q, Z) by (Z - 1)."""
    cols = {}
    for (a, b), c in A.items():
        cols.setdefault(a, {})[b] = c
    out = {}
    for a, col in cols.items():
        bmax = max(col)
        bmin = min(col)
        h = 0
        for b in range(bmax, bmin, -1):
            h = col.get(b, 0) + h
            if h:
                out[(a, b - 1)] = h
        if col.get(bmin, 0) + h != 0:
            raise DomainViolationError("pole at the regularization limit")
    return out


def _normalize_term(mono, num, den):
    """Normalized term (sign, q-power, epow, num Counter, den Counter) or
    None when an identically-zero numerator atom kills the term."""
    sign = mono.sign
    epow = len(den) - len(num)
    cn = Counter()
    cd = Counter()
    for c, d in num:
        key, s = _atom_norm(c, d)
        if key == (0, 0):
            return None
        sign *= s
        cn[key] += 1
    for c, d in den:
        key, s = _atom_norm(c, d)
        if key == (0, 0):
            raise DomainViolationError("identically vanishing denominator")
        sign *= s
        cd[key] += 1
    for key in list(cd):
        m = min(cn.get(key, 0), cd[key])
        if m:
            cn[key] -= m
            cd[key] -= m
    return (sign, mono.a, epow,
            {k: v for k, v in cn.items() if v},
            {k: v for k, v in cd.items() if v})


def _combine_terms(terms):
    """Sum terms over their common atom denominator.

    Returns (N, common, emin) with N a Laurent term map in (q, Z), common
    the denominator atom multiset, and emin the net power of q - q^{-1};
    None when every term dies."""
    norm = [t for t in map(lambda a: _normalize_term(*a), terms) if t is not None]
    if not norm:
        return None
    common = {}
    for _, _, _, _, cd in norm:
        for key, cnt in cd.items():
            if common.get(key, 0) < cnt:
                common[key] = cnt
    emin = min(e for _, _, e, _, _ in norm)
    N = {}
    for sign, qa, epow, cn, cd in norm:
        p = {(qa, 0): sign}
        for key, cnt in cn.items():
            for _ in range(cnt):
                p = _lmul(p, _atom_laurent(key).terms)
        for key, cnt in common.items():
            for _ in range(cnt - cd.get(key, 0)):
                p = _lmul(p, _atom_laurent(key).terms)
        for _ in range(epow - emin):
            p = _lmul(p, _QMQI.terms)
        N = _ladd(N, p)
    return N, common, emin


def _finish_limit(N, common, emin):
    """Exact Z -> 1 value of (q - q^{-1})^emin * N / prod(common atoms)."""
    zero_order = sum(cnt for (c, _), cnt in common.items() if c == 0)
    for _ in range(zero_order):
        if not N:
            break
        N = _div_z_minus_1(N)
    n1 = {}
    for (a, b), c in N.items():
        w = n1.get((a, 0), 0) + c
        if w:
            n1[(a, 0)] = w
        else:
            n1.pop((a, 0), None)
    dlim = LaurentQT.const(1)
    for (c, d), cnt in common.items():
        if c == 0:
            dlim = dlim * LaurentQT.const((2 * d) ** cnt)
        else:
            dlim = dlim * LaurentQT({(c, 0): 1, (-c, 0): -1}) ** cnt
    value = CoeffRat(LaurentQT(n1), dlim)
    if emin >= 0:
        return value * CoeffRat.from_laurent(_QMQI ** emin)
    return value / CoeffRat.from_laurent(_QMQI ** (-emin))


def _limit_terms(terms):
    """Exact Z -> 1 value of sum_i mono_i prod [num_i] / prod [den_i].

    Each term is (mono, num, den) with mono a q-power UnitMono and num/den
    lists of (c, d) factor descriptors.
    """
    combo = _combine_terms(terms)
    if combo is None:
        return CR_ZERO
    return _finish_limit(*combo)


def _lmul(A, B):
    out = {}
    for (a1, b1), c1 in A.items():
        for (a2, b2), c2 in B.items():
            key = (a1 + a2, b1 + b2)
            w = out.get(key, 0) + c1 * c2
            if w:
                out[key] = w
            else:
                del out[key]
    return out


def _ladd(A, B):
    out = dict(A)
    for k, v in B.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


@lru_cache(maxsize=None)
def delta1(mu, k):
    """prod_{i<j} [mubar_i - mubar_j + (k-1)]_{k-1}."""
    b = _bar(mu, k)
    r = CR_ONE
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            r = r * qfall(b[i] - b[j] + k - 1, k - 1)
    return r


@lru_cache(maxsize=None)
def delta2(mu, k):
    """prod_{i<j} [mubar_i - mubar_j - 1]_{k-1}."""
    b = _bar(mu, k)
    r = CR_ONE
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            r = r * qfall(b[i] - b[j] - 1, k - 1)
    return r


@lru_cache(maxsize=None)
def delta_cross(mu, lam, k):
    """prod_{i<=j} [lambar_i - mubar_j + k-1]_{k-1}
       * prod_{i<j} [mubar_i - lambar_j - 1]_{k-1}."""
    lb = _bar(lam, k)
    mb = _bar(mu, k)
    m = len(mu)
    r = CR_ONE
    for j in range(m):
        for i in range(j + 1):
            r = r * qfall(lb[i] - mb[j] + k - 1, k - 1)
    for i in range(m):
        for j in range(i + 1, len(lam)):
            r = r * qfall(mb[i] - lb[j] - 1, k - 1)
    return r


class DeltaFactors:
    """Cached evaluators for the three falling-factorial products at level k."""

    def __init__(self, k):
        if k < 1:
            raise ValueError("k must be a positive integer")
        self.k = k

    def d1(self, mu):
        return delta1(tuple(mu), self.k)

    def d2(self, mu):
        return delta2(tuple(mu), self.k)

    def cross(self, mu, lam):
        return delta_cross(tuple(mu), tuple(lam), self.k)


def psi_qnum(lam, mu, k):
    """Branching coefficient at t = q^k:

        psi = Delta(mu, lam) / ([k-1]!^{n-1} Delta_1(mu) Delta_2(lam)),

    the normalization that reproduces the generic branching coefficient
    under q -> q^2, t -> q^{2k} (the extra [k-1]! power per row is forced
    by that comparison)."""
    lam, mu = tuple(lam), tuple(mu)
    if not interlaces(mu, lam):
        raise ValueError("mu must interlace lam")
    n = len(lam)
    den = qfact(k - 1) ** (n - 1) * delta1(mu, k) * delta2(lam, k)
    return delta_cross(mu, lam, k) / den


# ---------------------------------------------------------------------------
# The explicit box summation for c(mu, lam).

def _diag_factor_lists(mu, lam, k, v):
    """Regularized factor lists (c, d) for one summand of the box sum.

    Directions: coordinate i of mu carries d = i, coordinate j of lam
    carries d = n + j, so every pair difference has a nonzero direction.
    """
    n = len(lam)
    m = n - 1
    lb = _bar(lam, k)
    mbp = [mu[i] + (k - 1) - k * i for i in range(m)]
    nbp = [mbp[i] - v[i] for i in range(m)]
    num = []
    den = []
    for i in range(m):
        for c in range(1, k - v[i]):
            den.append((c, 0))
        for c in range(1, v[i] + 1):
            den.append((c, 0))
        for j in range(i + 1, m):
            d = i - j
            A = mbp[i] - mbp[j]
            for s in range(2 * k - 1):
                num.append((A + k - 1 - s, d))
            num.append((nbp[i] - nbp[j], d))
            for s in range(k):
                den.append((nbp[i] - mbp[j] + k - 1 - s, d))
                den.append((mbp[i] - nbp[j] - s, d))
            for s in range(k - 1):
                den.append((A + k - 1 - s, d))
    for j in range(m):
        for i in range(j + 1):
            for s in range(k - 1):
                num.append((lb[i] - nbp[j] + k - 1 - s, (n + i) - j))
    for i in range(m):
        for j in range(i + 1, n):
            for s in range(k - 1):
                num.append((nbp[i] - lb[j] - 1 - s, i - (n + j)))
    for i in range(n):
        for j in range(i + 1, n):
            for s in range(k - 1):
                den.append((lb[i] - lb[j] - 1 - s, i - j))
    return num, den


def _eval_plain(num, den):
    """Evaluate factor lists without regularization.

    Vanishing factors cancel pairwise only for matching directions; a
    leftover vanishing numerator kills the summand (returns None), a
    leftover vanishing denominator needs the regularized path.
    """
    nz = Counter()
    dz = Counter()
    for c, d in den:
        if c == 0:
            if d == 0:
                raise DomainViolationError("identically vanishing denominator")
            dz[d] += 1
    for c, d in num:
        if c == 0:
            nz[d] += 1
    for d in list(dz):
        m = min(nz.get(d, 0), dz[d])
        nz[d] -= m
        dz[d] -= m
    if any(x > 0 for x in dz.values()):
        raise _NeedRegularization
    if any(x > 0 for x in nz.values()):
        return None
    val = CR_ONE
    for c, _ in num:
        val = val * qnum(c)
    dval = CR_ONE
    for c, _ in den:
        dval = dval * qnum(c)
    return val / dval


def diag_coeff_sum(mu, lam, k):
    """c(mu, lam) as the explicit finite sum over the shifted box.

    The sum runs over nu' in [mu' - (k-1), mu'] componentwise with
    mu' = mu + (k-1); signs, q-powers, factorial and falling-factorial
    factors per summand, against the global prefactor
    (-1)^{(n-1)(k-1)} q^{(n-1)k(k-1)} / (Delta_2(lam) Delta_1(mu)).
    """
    mu, lam = tuple(mu), tuple(lam)
    n = len(lam)
    m = n - 1
    if len(mu) != m:
        raise ValueError("mu must be one entry shorter than lam")
    if k < 1:
        raise ValueError("k must be a positive integer")

    def scal(v):
        sv = sum(v)
        return UnitMono(-1 if sv % 2 else 1, -k * sv, 0).as_coeffrat()

    pref = UnitMono(-1 if (m * (k - 1)) % 2 else 1, m * k * (k - 1), 0)
    try:
        total = CR_ZERO
        for v in product(range(k), repeat=m):
            num, den = _diag_factor_lists(mu, lam, k, v)
            term = _eval_plain(num, den)
            if term is None:
                continue
            total = total + term * scal(v)
        return total * pref.as_coeffrat()
    except _NeedRegularization:
        pass
    terms = []
    for v in product(range(k), repeat=m):
        num, den = _diag_factor_lists(mu, lam, k, v)
        sv = sum(v)
        mono = UnitMono(-1 if sv % 2 else 1, -k * sv, 0) * pref
        terms.append((mono, num, den))
    return _limit_terms(terms)


# ---------------------------------------------------------------------------
# The operator route for c(mu, lam).

def _kernel_atoms(lam, k, nu):
    """Factor descriptors of the falling-factorial kernel at the point nu."""
    n = len(lam)
    m = n - 1
    lb = _bar(lam, k)
    nbp = [nu[j] + (k - 1) - k * j for j in range(m)]
    atoms = []
    for j in range(m):
        for i in range(j + 1):
            for s in range(k - 1):
                atoms.append((lb[i] - nbp[j] + k - 1 - s, (n + i) - j))
    for i in range(m):
        for j in range(i + 1, n):
            for s in range(k - 1):
                atoms.append((nbp[i] - lb[j] - 1 - s, i - (n + j)))
    return atoms


def mat_elt(mu, lam, k):
    """c(mu, lam) by applying prod_{a=1}^{k-1} D(q^{2a}; q^{-2}, q^{2(k-1)})
    to the kernel, evaluating at mu, and dividing by

        prod_{i<=j} [mubar'_i - mubar'_j + k-1]_{k-1}
        * prod_{i<j} [lambar_i - lambar_j - 1]_{k-1}.

    The composition is expanded into shift paths; each path contributes one
    product of factor atoms, so the whole value goes through the exact
    regularization limit in one pass.
    """
    mu, lam = tuple(mu), tuple(lam)
    n = len(lam)
    m = n - 1
    if len(mu) != m:
        raise ValueError("mu must be one entry shorter than lam")
    if k < 1:
        raise ValueError("k must be a positive integer")
    lb = _bar(lam, k)
    mbp = [mu[i] + (k - 1) - k * i for i in range(m)]
    den_global = []
    for i in range(m):
        for j in range(i, m):
            for s in range(k - 1):
                den_global.append((mbp[i] - mbp[j] + k - 1 - s, i - j))
    for i in range(n):
        for j in range(i + 1, n):
            for s in range(k - 1):
                den_global.append((lb[i] - lb[j] - 1 - s, i - j))
    terms = []

    def expand(a, point, qexp, sign, num, den):
        if a == 0:
            terms.append((UnitMono(sign, qexp, 0),
                          num + _kernel_atoms(lam, k, point),
                          den + den_global))
            return
        bar = [point[i] - k * i for i in range(m)]
        for r in range(m + 1):
            s2 = sign if (m - r) % 2 == 0 else -sign
            base_q = qexp + 2 * a * (m - r) + (k - 1) * r * (r - m)
            for I in combinations(range(m), r):
                iset = set(I)
                addn = []
                addd = []
                pairs = 0
                for i in I:
                    for j in range(m):
                        if j in iset:
                            continue
                        pairs += 1
                        addn.append((bar[i] - bar[j] + k - 1, i - j))
                        addd.append((bar[i] - bar[j], i - j))
                shifted = tuple(x - 1 if i in iset else x
                                for i, x in enumerate(point))
                expand(a - 1, shifted, base_q + (k - 1) * pairs, s2,
                       num + addn, den + addd)

    expand(k - 1, mu, 0, 1, [], [])
    return _limit_terms(terms)


# ---------------------------------------------------------------------------
# Reduced Clebsch-Gordan route, carried in squared form.

def s_factorial_sq(a, b):
    """S(a, b)^2 = prod_{i<=j} [a_i - b_j + j - i]! / prod_{i<j} [b_i - a_j + j - i - 1]!.

    Arguments index a in the numerator's first slot and b in the second;
    a negative factorial argument means the pattern is inadmissible.
    """
    val = CR_ONE
    for i in range(len(a)):
        for j in range(i, len(b)):
            x = a[i] - b[j] + j - i
            if x < 0:
                raise ValueError("inadmissible pattern: negative factorial argument")
            val = val * qfact(x)
    for i in range(len(b)):
        for j in range(i + 1, len(a)):
            x = b[i] - a[j] + j - i - 1
            if x < 0:
                raise ValueError("inadmissible pattern: negative factorial argument")
            val = val / qfact(x)
    return val


def cg_reduced_squared(tau, p, tau_p, eta, r, eta_p):
    """Square of the reduced Clebsch-Gordan coefficient for
    L_{tau'} -> L_tau (x) Sym^p, between rows (eta, r) and (eta', ...).

    Everything is squared, so the value lives in Q(q) with no root
    ambiguity; the overall sign is not recoverable from this route.
    """
    tau, tau_p, eta, eta_p = tuple(tau), tuple(tau_p), tuple(eta), tuple(eta_p)
    n = len(tau)
    m = len(eta)
    if len(tau_p) != n or len(eta_p) != m or m != n - 1:
        raise ValueError("row lengths must be n, n, n-1, n-1")
    los = [max(eta[i], tau_p[i + 1]) for i in range(m)]
    his = [min(eta_p[i], tau[i]) for i in range(m)]
    if any(lo > hi for lo, hi in zip(los, his)):
        return CR_ZERO
    b = 0
    for i in range(n):
        for j in range(i + 1, n):
            b += (tau_p[i] - tau[i]) * (tau_p[j] - tau[j])
    for i in range(m):
        for j in range(i + 1, m):
            b -= (eta_p[i] - eta[i]) * (eta_p[j] - eta[j])
    for i in range(m):
        b += (eta_p[i] - eta[i]) * (eta[i] - i)
    for i in range(n):
        b -= (tau_p[i] - tau[i]) * (tau[i] - i)
    b += (p - r) * (sum(tau) - sum(eta))
    pref = s_factorial_sq(eta_p, eta) * s_factorial_sq(tau, eta) \
        * s_factorial_sq(tau_p, tau_p) * s_factorial_sq(eta, eta) \
        / (s_factorial_sq(tau_p, tau) * s_factorial_sq(tau_p, eta_p))
    total = CR_ZERO
    for sigma in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        dsum = sum(sigma) - sum(eta)
        term = s_factorial_sq(sigma, sigma) * s_factorial_sq(tau_p, sigma) \
            / (s_factorial_sq(sigma, eta) * s_factorial_sq(eta_p, sigma)
               * s_factorial_sq(tau, sigma))
        total = total + term * UnitMono(-1 if dsum % 2 else 1,
                                        (p - r + 1) * dsum, 0).as_coeffrat()
    return UnitMono.q(-b).as_coeffrat() * qfact(p - r) * pref * total * total


def cg_diag_sq(lam, n, k):
    """Square of the iterated diagonal Clebsch-Gordan coefficient of the
    highest weight vector, normalized consistently with the untranslated
    reduced coefficient: q^{-n(n-1)k(k-1)/2} times the falling-factorial
    ratio over pairs.  (Each single level-j step squared carries
    q^{-(j-1)k(k-1)} times its pair ratio.)"""
    lam = tuple(lam)
    lb = _bar(lam, k)
    val = UnitMono.q(-n * (n - 1) * k * (k - 1) // 2).as_coeffrat()
    for i in range(n):
        for j in range(i + 1, n):
            val = val * qfall(lb[i] - lb[j] - 1, k - 1) \
                / qfall(lb[i] - lb[j] + k - 1, k - 1)
    return val


def _s_sq_fact_atoms(a, da, b, db, fnum, fden):
    """Factorial descriptors (argument, direction) of S(a, b)^2."""
    for i in range(len(a)):
        for j in range(i, len(b)):
            fnum.append((a[i] - b[j] + j - i, da[i] - db[j]))
    for i in range(len(b)):
        for j in range(i + 1, len(a)):
            fden.append((b[i] - a[j] + j - i - 1, db[i] - da[j]))


def _telescope(fnum, fden):
    """Pair factorial descriptors per direction into q-number atoms.

    Paired factorials telescope into finite falling products (valid for
    negative arguments, matching the Gamma-reflection conventions);
    unpaired ones must have non-negative argument.
    """
    groups = {}
    for c, d in fnum:
        groups.setdefault(d, ([], []))[0].append(c)
    for c, d in fden:
        groups.setdefault(d, ([], []))[1].append(c)
    num_atoms = []
    den_atoms = []
    for d, (ln, ld) in groups.items():
        ln.sort(reverse=True)
        ld.sort(reverse=True)
        pairs = min(len(ln), len(ld))
        for aa, bb in zip(ln[:pairs], ld[:pairs]):
            if aa >= bb:
                num_atoms += [(j, d) for j in range(bb + 1, aa + 1)]
            else:
                den_atoms += [(j, d) for j in range(aa + 1, bb + 1)]
        for c in ln[pairs:]:
            if c < 0:
                raise ValueError("inadmissible pattern: negative factorial argument")
            num_atoms += [(j, d) for j in range(1, c + 1)]
        for c in ld[pairs:]:
            if c < 0:
                raise ValueError("inadmissible pattern: negative factorial argument")
            den_atoms += [(j, d) for j in range(1, c + 1)]
    return num_atoms, den_atoms


def _cg_chain_regularized(mu, lam, k):
    """The chain value at boundary patterns, as one exact limit.

    The reduced-coefficient square, the level normalization of mu and the
    inverse normalization of lam are combined into a single sum of atom
    products before the regularization limit, since the pieces can carry
    compensating zeros and poles individually.
    """
    n = len(lam)
    m = n - 1
    tau_p = sig_shift(lam, k, "tilde")
    tau = tuple(x - (k - 1) for x in tau_p)
    eta_p = sig_shift(mu, k, "tilde")
    eta = tuple(x - (k - 1) for x in eta_p)
    p, r = n * (k - 1), m * (k - 1)
    dtau = [n + i for i in range(n)]
    deta = list(range(m))
    b = 0
    for i in range(n):
        for j in range(i + 1, n):
            b += (tau_p[i] - tau[i]) * (tau_p[j] - tau[j])
    for i in range(m):
        for j in range(i + 1, m):
            b -= (eta_p[i] - eta[i]) * (eta_p[j] - eta[j])
    for i in range(m):
        b += (eta_p[i] - eta[i]) * (eta[i] - i)
    for i in range(n):
        b -= (tau_p[i] - tau[i]) * (tau[i] - i)
    b += (p - r) * (sum(tau) - sum(eta))
    fnum = [(p - r, 0)]
    fden = []
    _s_sq_fact_atoms(eta_p, deta, eta, deta, fnum, fden)
    _s_sq_fact_atoms(tau, dtau, eta, deta, fnum, fden)
    _s_sq_fact_atoms(tau_p, dtau, tau_p, dtau, fnum, fden)
    _s_sq_fact_atoms(eta, deta, eta, deta, fnum, fden)
    _s_sq_fact_atoms(tau_p, dtau, tau, dtau, fden, fnum)
    _s_sq_fact_atoms(tau_p, dtau, eta_p, deta, fden, fnum)
    diag_num = []
    diag_den = []
    mb = _bar(mu, k)
    for i in range(m):
        for j in range(i + 1, m):
            for s in range(k - 1):
                diag_num.append((mb[i] - mb[j] - 1 - s, i - j))
                diag_den.append((mb[i] - mb[j] + k - 1 - s, i - j))
    lb = _bar(lam, k)
    for i in range(n):
        for j in range(i + 1, n):
            for s in range(k - 1):
                diag_den.append((lb[i] - lb[j] - 1 - s, i - j))
                diag_num.append((lb[i] - lb[j] + k - 1 - s, i - j))
    qconst = -b - m * (m - 1) * k * (k - 1) // 2 + n * (n - 1) * k * (k - 1) // 2
    # Only the eta-side window clips survive regularization exactly (their
    # cropping factorials share the perturbation direction of sigma); the
    # tau-side clips become soft zeros that the limit accounts for itself.
    # The sigma-summand factorials and the prefactor factorials each
    # telescope on their own (direction counts balance by construction), so
    # the sum is assembled once and squared as a fraction.
    sig_terms = []
    for sigma in product(*(range(lo, hi + 1) for lo, hi in zip(eta, eta_p))):
        snum = []
        sden = []
        _s_sq_fact_atoms(sigma, deta, sigma, deta, snum, sden)
        _s_sq_fact_atoms(tau_p, dtau, sigma, deta, snum, sden)
        _s_sq_fact_atoms(sigma, deta, eta, deta, sden, snum)
        _s_sq_fact_atoms(eta_p, deta, sigma, deta, sden, snum)
        _s_sq_fact_atoms(tau, dtau, sigma, deta, sden, snum)
        dsum = sum(sigma) - sum(eta)
        na, da = _telescope(snum, sden)
        sig_terms.append((UnitMono(-1 if dsum % 2 else 1,
                                   (p - r + 1) * dsum, 0), na, da))
    combo = _combine_terms(sig_terms)
    if combo is None:
        return CR_ZERO
    n_s, common_s, emin_s = combo
    fa_num, fa_den = _telescope(fnum, fden)
    final = _normalize_term(UnitMono(1, qconst, 0),
                            fa_num + diag_num, fa_den + diag_den)
    if final is None:
        return CR_ZERO
    sign, qa, epow, cn, cd = final
    N = _lmul(n_s, n_s)
    N = _lmul(N, {(qa, 0): sign})
    for key, cnt in cn.items():
        for _ in range(cnt):
            N = _lmul(N, _atom_laurent(key).terms)
    common = dict(cd)
    for key, cnt in common_s.items():
        common[key] = common.get(key, 0) + 2 * cnt
    return _finish_limit(N, common, 2 * emin_s + epow)


def c_squared_chain(mu, lam, k):
    """c(mu, lam)^2 assembled from the reduced Clebsch-Gordan square and
    the two diagonal normalizations.

    Interior patterns compose the three closed pieces directly; boundary
    patterns (where individual pieces hit factorial poles and zeros) are
    evaluated through the combined regularization limit.
    """
    mu, lam = tuple(mu), tuple(lam)
    n = len(lam)
    tl = sig_shift(lam, k, "tilde")
    tm = sig_shift(mu, k, "tilde")
    try:
        c2 = cg_reduced_squared(
            tau=tuple(x - (k - 1) for x in tl), p=n * (k - 1), tau_p=tl,
            eta=tuple(x - (k - 1) for x in tm), r=(n - 1) * (k - 1), eta_p=tm)
        dmu = cg_diag_sq(mu, n - 1, k)
        if not dmu:
            raise ValueError("vanishing level normalization")
        return c2 * dmu / cg_diag_sq(lam, n, k)
    except (ValueError, ZeroDivisionError):
        return _cg_chain_regularized(mu, lam, k)


# ---------------------------------------------------------------------------
# Branching and trace reconstruction.

def branch_reconstruct_qk(lam, n, k):
    """Assemble sum over interlacing mu of x_n^{|lam|-|mu|} P_mu psi at
    t = q^k; equals P_lam(x; q^2, q^{2k}) exactly."""
    from .combinat import interlacing_signatures
    from .macops import macdonald_qk
    from .sympoly import orbit

    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("signature length must equal the variable count")
    if n == 1:
        return SymLaurent(1, {lam: CR_ONE})
    acc = NPoly.zero(n)
    for mu in interlacing_signatures(lam):
        psi = psi_qnum(lam, mu, k)
        sub = macdonald_qk(mu, n - 1, k)
        xn = sum(lam) - sum(mu)
        for sig, c in sub.terms.items():
            w = c * psi
            for e in orbit(sig):
                acc = acc + NPoly.monomial(e + (xn,), w)
    return from_npoly(acc)


def ek_denominator(n, k):
    """(x_1...x_n)^{-(k-1)(n-1)} prod_{s=1}^{k-1} prod_{i<j} (x_i - q^{2s} x_j).

    Not symmetric for k > 1; returned as a plain Laurent polynomial."""
    out = NPoly.one(n)
    for s in range(1, k):
        for i in range(n):
            for j in range(i + 1, n):
                ei = [0] * n
                ej = [0] * n
                ei[i] = 1
                ej[j] = 1
                out = out * NPoly(n, {tuple(ei): CR_ONE,
                                      tuple(ej): -UnitMono.q(2 * s).as_coeffrat()})
    return out.mul_monomial((-(k - 1) * (n - 1),) * n)


def trace_reconstruct(lam, n, k):
    """Sum over shifted chains of the c-products times the chain weight.

    The weight exponent of x_i is |tilde mu^i| - |tilde mu^{i-1}|; the
    result is a plain Laurent polynomial whose ratio against
    ek_denominator is symmetric."""
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("signature length must equal the variable count")
    if not is_dominant(lam):
        raise ValueError("signature must be dominant")
    acc = NPoly.zero(n)
    for chain in shifted_chain_enumerate(lam, k):
        coeff = CR_ONE
        for i in range(n - 1):
            coeff = coeff * diag_coeff_sum(chain[i], chain[i + 1], k)
            if not coeff:
                break
        if not coeff:
            continue
        tsums = [sig_sum(sig_shift(row, k, "tilde")) for row in chain]
        exps = tuple(tsums[i] - (tsums[i - 1] if i else 0) for i in range(n))
        acc = acc + NPoly.monomial(exps, coeff)
    return acc


def trace_ratio(lam, n, k):
    """trace_reconstruct(lam) / ek_denominator as an exact SymLaurent."""
    num = trace_reconstruct(lam, n, k)
    for s in range(1, k):
        for i in range(n):
            for j in range(i + 1, n):
                num = num.divexact_binomial(i, j, UnitMono.q(2 * s))
    num = num.mul_monomial(((k - 1) * (n - 1),) * n)
    return from_npoly(num)
