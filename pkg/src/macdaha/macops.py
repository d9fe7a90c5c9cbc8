"""Macdonald difference operators and Macdonald polynomials.

The r-th operator with multiplicative shift S and half-parameter tau acts as

    D^r f = tau^{r(r-n)} sum_{|I|=r} prod_{i in I, j not in I}
            (tau^2 x_i - x_j)/(x_i - x_j) * f(x with x_i -> S x_i, i in I),

so (S, tau) = (q^2, t) gives the classical operators with parameters
(q^2, t^2) and eigenvalue e_r at the point (S^{lam_i} tau^{n+1-2i}).  The
half-parameter keeps every computed quantity inside Q(q, t).

Three independent constructions of the joint eigenfunctions are provided:
a triangular eigenvalue solve, the branching recursion, and the
Gelfand-Tsetlin summation formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinat import gt_enumerate, interlaces, interlacing_signatures, is_dominant, sig_sum
from .npoly import NPoly
from .qfield import CR_ONE, CR_ZERO, CoeffRat, UnitMono, poch_ratio, qfall
from .sympoly import SymLaurent, eval_sym, e_sym, from_npoly, m_sym, mono_shift, orbit, to_npoly


@dataclass(frozen=True)
class MacParams:
    """Operator parameters: multiplicative shift and half of the t-argument."""

    shift: UnitMono
    thalf: UnitMono


def generic_params():
    """Formal parameters (q^2, t^2): shift q^2 and half-parameter t."""
    return MacParams(shift=UnitMono.q(2), thalf=UnitMono.t(1))


def mac_apply(f, r, params, half_root=None):
    """Apply D^r exactly to a symmetric Laurent polynomial.

    With half_root set to a square root of the shift, the input is read as
    (x_1...x_n)^{1/2} * f and the output in the same convention; this only
    multiplies the subset term by half_root^r.
    """
    n = f.n
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    if f.is_zero():
        return f
    tau = params.thalf
    tau2 = (tau * tau).as_coeffrat()
    fn = to_npoly(f)
    acc = NPoly.zero(n)
    for I in combinations(range(n), r):
        iset = set(I)
        comp = [j for j in range(n) if j not in iset]
        inv = sum(1 for i in I for j in comp if i > j)
        g = fn.scale_vars(I, params.shift)
        for i in I:
            for j in comp:
                ei = [0] * n
                ej = [0] * n
                ei[i] = 1
                ej[j] = 1
                g = g * NPoly(n, {tuple(ei): tau2, tuple(ej): -CR_ONE})
        for a, b in combinations(range(n), 2):
            if (a in iset) == (b in iset):
                ea = [0] * n
                eb = [0] * n
                ea[a] = 1
                eb[b] = 1
                g = g * NPoly(n, {tuple(ea): CR_ONE, tuple(eb): -CR_ONE})
        if inv % 2:
            g = -g
        acc = acc + g
    for a, b in combinations(range(n), 2):
        acc = acc.divexact_binomial(a, b)
    scale = (tau ** (r * (r - n))).as_coeffrat()
    if half_root is not None:
        scale = scale * (half_root ** r).as_coeffrat()
    return from_npoly(acc.scalar_mul(scale))


def mac_generator_apply(f, u, params, half_root=None):
    """Apply the generating combination sum_r (-u)^{n-r} D^r."""
    n = f.n
    if isinstance(u, UnitMono):
        u = u.as_coeffrat()
    elif isinstance(u, int):
        u = CoeffRat.from_int(u)
    out = SymLaurent.zero(n)
    upow = CR_ONE
    terms = []
    for r in range(n, -1, -1):
        terms.append((r, upow))
        upow = upow * u
    for r, up in terms:
        term = mac_apply(f, r, params, half_root=half_root).scalar_mul(up)
        if (n - r) % 2:
            term = -term
        out = out + term
    return out


def eigen_point(lam, n, params):
    """The point (S^{lam_i} tau^{n+1-2i}) whose e_r values are eigenvalues."""
    return tuple(params.shift ** lam[i] * params.thalf ** (n - 1 - 2 * i)
                 for i in range(n))


def eigenvalue(lam, r, n, params):
    return eval_sym(e_sym(r, n), eigen_point(lam, n, params))


def _partitions_below(lam):
    """Partitions of |lam| with len(lam) parts, dominated by lam."""
    n = len(lam)
    d = sum(lam)
    psum = [sum(lam[:i + 1]) for i in range(n)]
    out = []

    def rec(prefix, rem, mx):
        i = len(prefix)
        if i == n:
            if rem == 0:
                out.append(tuple(prefix))
            return
        top = min(mx, psum[i] - (d - rem))
        lo = -(-rem // (n - i))  # ceil: keep room for weak decrease
        for p in range(top, lo - 1, -1):
            if p * (n - i) < rem:
                break
            rec(prefix + [p], rem - p, p)

    rec([], d, lam[0] if lam else 0)
    return out


def _dominance_key(mu):
    s = 0
    key = []
    for p in mu:
        s += p
        key.append(s)
    return tuple(key)


@lru_cache(maxsize=None)
def _op_column(mu, n, params):
    """Expansion of D^1 m_mu in the orbit basis."""
    return mac_apply(m_sym(mu, n), 1, params).terms


@lru_cache(maxsize=None)
def _eigen_cached(lam, n, params):
    if lam and lam[-1] < 0:
        c = lam[-1]
        base = _eigen_cached(tuple(x - c for x in lam), n, params)
        return mono_shift(base, c)
    if n == 1:
        return SymLaurent(1, {lam: CR_ONE})
    basis = sorted(_partitions_below(lam), key=_dominance_key, reverse=True)
    cols = {mu: _op_column(mu, n, params) for mu in basis}
    eig = eigenvalue(lam, 1, n, params)
    coeffs = {lam: CR_ONE}
    for mu in basis:
        if mu == lam:
            continue
        s = CR_ZERO
        for nu, c in coeffs.items():
            if nu == mu:
                continue
            a = cols[nu].get(mu)
            if a is not None:
                s = s + a * c
        gap = eig - cols[mu].get(mu, CR_ZERO)
        if not gap:
            raise ArithmeticError("eigenvalue collision in triangular solve")
        coeffs[mu] = s * gap.inv()
    return SymLaurent(n, {k: v for k, v in coeffs.items() if v})


def macdonald_eigen(lam, n, params=None):
    """Joint eigenfunction with leading orbit monomial m_lam, by the
    triangular solve against D^1."""
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("signature length must equal the variable count")
    if not is_dominant(lam):
        raise ValueError("signature must be dominant")
    if params is None:
        params = generic_params()
    return _eigen_cached(lam, n, params)


@lru_cache(maxsize=None)
def psi_branch(lam, mu):
    """Branching coefficient psi_{lam/mu}(q, t) as a finite Pochhammer product.

    Each infinite Pochhammer pairs with the one sharing its t-power and an
    integer q-gap lam_i - mu_i >= 0 forced by interlacing, leaving four
    finite gap products per index pair.
    """
    if not interlaces(mu, lam):
        raise ValueError("mu must interlace lam")
    r = CR_ONE
    lm = len(mu)
    for i in range(lm):
        d = lam[i] - mu[i]
        if d == 0:
            continue
        for j in range(i, lm):
            num = poch_ratio(mu[i] - mu[j], d, j - i + 1) \
                * poch_ratio(mu[i] - lam[j + 1] + 1, d, j - i)
            den = poch_ratio(mu[i] - lam[j + 1], d, j - i + 1) \
                * poch_ratio(mu[i] - mu[j] + 1, d, j - i)
            r = r * num / den
    return r


@lru_cache(maxsize=None)
def _psi_for_params(lam, mu, params):
    return psi_branch(lam, mu).subst(params.shift, params.thalf ** 2)


@lru_cache(maxsize=None)
def _branch_cached(lam, n, params):
    if n == 0:
        return SymLaurent.one(0)
    if n == 1:
        return SymLaurent(1, {lam: CR_ONE})
    acc = NPoly.zero(n)
    for mu in interlacing_signatures(lam):
        psi = _psi_for_params(lam, mu, params)
        sub = _branch_cached(mu, n - 1, params)
        xn = sig_sum(lam) - sig_sum(mu)
        for sig, c in sub.terms.items():
            w = c * psi
            for e in orbit(sig):
                acc = acc + NPoly.monomial(e + (xn,), w)
    return from_npoly(acc)


def macdonald_branch(lam, n, params=None):
    """Same polynomial via the branching recursion over interlacing mu."""
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("signature length must equal the variable count")
    if not is_dominant(lam):
        raise ValueError("signature must be dominant")
    if params is None:
        params = generic_params()
    return _branch_cached(lam, n, params)


def macdonald_gt(lam, n, params=None):
    """Same polynomial as a sum over Gelfand-Tsetlin patterns."""
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError("signature length must equal the variable count")
    if not is_dominant(lam):
        raise ValueError("signature must be dominant")
    if params is None:
        params = generic_params()
    acc = NPoly.zero(n)
    for pattern in gt_enumerate(lam):
        rows = ((),) + pattern.rows
        coeff = CR_ONE
        for i in range(1, len(rows)):
            coeff = coeff * _psi_for_params(rows[i], rows[i - 1], params)
        exps = tuple(sig_sum(rows[i]) - sig_sum(rows[i - 1])
                     for i in range(1, len(rows)))
        acc = acc + NPoly.monomial(exps, coeff)
    return from_npoly(acc)


@lru_cache(maxsize=None)
def macdonald_qk(lam, n, k):
    """P_lam(x; q^2, q^{2k}): generic coefficients specialized at t = q^k."""
    f = macdonald_eigen(lam, n)
    qk = UnitMono.q(k)
    out = {}
    for sig, c in f.terms.items():
        w = c.subst(t_image=qk)
        if w:
            out[sig] = w
    return SymLaurent._raw(n, out)


def symmetry_check(lam, mu, k):
    """Both sides of the index/variable symmetry identity at t = q^k.

    Returns (LHS, RHS) where LHS = P_lam evaluated at q^{2mu + 2k rho} and
    RHS carries the falling-factorial ratio times P_mu at q^{2lam + 2k rho}.
    """
    n = len(lam)
    if len(mu) != n:
        raise ValueError("lam and mu must have equal length")
    p_lam = macdonald_qk(tuple(lam), n, k)
    p_mu = macdonald_qk(tuple(mu), n, k)
    pt_mu = tuple(UnitMono.q(2 * mu[i] + k * (n - 1 - 2 * i)) for i in range(n))
    pt_lam = tuple(UnitMono.q(2 * lam[i] + k * (n - 1 - 2 * i)) for i in range(n))
    lhs = eval_sym(p_lam, pt_mu)
    ratio = CR_ONE
    for i in range(n):
        for j in range(i + 1, n):
            ratio = ratio * qfall(lam[i] - lam[j] + k * (j - i) + k - 1, k) \
                / qfall(mu[i] - mu[j] + k * (j - i) + k - 1, k)
    rhs = ratio * eval_sym(p_mu, pt_lam)
    return lhs, rhs
