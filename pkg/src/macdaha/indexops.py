"""Difference operators acting on a discrete index lattice.

Functions here take an additive lattice point mu in Z^{n-1}; the operators
act through the bar-shifted coordinates mubar_i = mu_i - k(i-1) and shift
the argument by +-1_I.  The Jackson-type pairing is a finite box sum, and
summation by parts holds against it once the left factor vanishes on a
border shell of the box ("adaptedness", checked exhaustively on the finite
shell: operator shifts never reach beyond it).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .qfield import CR_ONE, CR_ZERO, DomainViolationError, UnitMono, qnum


@lru_cache(maxsize=None)
def _qpow(a):
    return UnitMono.q(a).as_coeffrat()


class AdaptednessError(ValueError):
    """The left factor of a summation-by-parts pairing is not adapted."""


@dataclass(frozen=True)
class Box:
    """Integer box [lower, upper] with componentwise lower <= upper."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("box bounds must have equal length")
        if any(u < l for l, u in zip(self.lower, self.upper)):
            raise ValueError("box upper bound below lower bound")

    @property
    def dim(self):
        return len(self.lower)

    def points(self):
        return product(*(range(l, u + 1) for l, u in zip(self.lower, self.upper)))

    def enlarged(self, l):
        return Box(tuple(x - l for x in self.lower),
                   tuple(x + l for x in self.upper))

    def raised(self, l):
        return Box(self.lower, tuple(x + l for x in self.upper))


@dataclass(frozen=True)
class IndexOpParams:
    """Operator selector: level k, variant plain/tilde/dagger, degree r."""

    k: int
    variant: str
    r: int

    def __post_init__(self):
        if self.variant not in ("plain", "tilde", "dagger"):
            raise ValueError("variant must be plain, tilde or dagger")
        if self.k < 1:
            raise ValueError("k must be a positive integer")


def jackson_inner(f, g, box):
    """Finite inner product sum_{mu in box} f(mu) g(mu)."""
    total = CR_ZERO
    for mu in box.points():
        total = total + f(mu) * g(mu)
    return total


def is_adapted(f, box, l):
    """True iff f vanishes on the width-l border shell around the box.

    The shell consists of lattice points of the l-enlarged box having some
    coordinate strictly outside the box; the check is exhaustive over that
    finite set.
    """
    if l == 0:
        return True
    for mu in box.enlarged(l).points():
        if all(lo <= x <= up for x, lo, up in zip(mu, box.lower, box.upper)):
            continue
        if f(mu):
            return False
    return True


def _bar(mu, k):
    return tuple(mu[i] - k * i for i in range(len(mu)))


def _qnum_nonzero(d):
    v = qnum(d)
    if not v:
        raise DomainViolationError(f"vanishing q-number [{d}] in an operator coefficient")
    return v


def plain_apply(f, mu, r, qdir, m, k):
    """D^r with shift q^{2*qdir} and t-argument q^{2m}, on additive indices.

    Coefficients are evaluated at the bar-shift of mu with level k; the
    function argument moves by qdir per selected index.
    """
    np_ = len(mu)
    if not 0 <= r <= np_:
        raise ValueError("need 0 <= r <= arity")
    bar = _bar(mu, k)
    total = CR_ZERO
    for I in combinations(range(np_), r):
        iset = set(I)
        coeff = CR_ONE
        for i in I:
            for j in range(np_):
                if j in iset:
                    continue
                d = bar[i] - bar[j]
                coeff = coeff * _qpow(m) * qnum(d + m) / _qnum_nonzero(d)
        shifted = tuple(x + qdir if i in iset else x for i, x in enumerate(mu))
        total = total + coeff * f(shifted)
    return _qpow(m * r * (r - np_)) * total


def index_apply(f, params, mu):
    """Apply one index-side operator at the point mu.

    plain: the t-conjugated original with shift q^2 and t-argument q^{2k};
    tilde: the diagonalized conjugate (shift +1 per selected index);
    dagger: the adjoint conjugate (shift -1 per selected index).
    """
    mu = tuple(mu)
    k, r = params.k, params.r
    if params.variant == "plain":
        return plain_apply(f, mu, r, +1, k, k)
    bar = _bar(mu, k)
    np_ = len(mu)
    if not 0 <= r <= np_:
        raise ValueError("need 0 <= r <= arity")
    total = CR_ZERO
    for I in combinations(range(np_), r):
        iset = set(I)
        coeff = CR_ONE
        for i in I:
            for j in range(np_):
                if j in iset or i < j:
                    continue
                d = bar[i] - bar[j]
                if params.variant == "tilde":
                    coeff = coeff * qnum(d + k) * qnum(d - k + 1) \
                        / (_qnum_nonzero(d) * _qnum_nonzero(d + 1))
                else:
                    coeff = coeff * qnum(d + k - 1) * qnum(d - k) \
                        / (_qnum_nonzero(d - 1) * _qnum_nonzero(d))
        step = 1 if params.variant == "tilde" else -1
        shifted = tuple(x + step if i in iset else x for i, x in enumerate(mu))
        total = total + coeff * f(shifted)
    return total


def op_transform(f, params):
    """The operator as a function transformer: returns the image IndexFn."""
    return lambda mu: index_apply(f, params, mu)


def verify_adjoint(f, g, box, rseq, k):
    """Exact summation-by-parts check.

    Requires f to be (box, l)-adapted with l = len(rseq); raises
    AdaptednessError otherwise.  Returns True iff

        < prod_i Dagger^{r_{l+1-i}} f, g >_{(lower, upper + l)}
            = < f, prod_i Tilde^{r_i} g >_box.
    """
    l = len(rseq)
    if not is_adapted(f, box, l):
        raise AdaptednessError("left factor is not adapted to the box")
    lhs_fn = f
    for r in rseq:
        lhs_fn = op_transform(lhs_fn, IndexOpParams(k=k, variant="dagger", r=r))
    rhs_fn = g
    for r in reversed(rseq):
        rhs_fn = op_transform(rhs_fn, IndexOpParams(k=k, variant="tilde", r=r))
    lhs = jackson_inner(lhs_fn, g, box.raised(l))
    rhs = jackson_inner(f, rhs_fn, box)
    return lhs == rhs
