"""Sparse Laurent polynomials in n variables over the scalar field Q(q, t).

Workhorse representation behind the symmetric-polynomial layer, the
difference operators (which divide exactly by Vandermonde factors) and the
Hecke-operator action.  Supports exact division by binomials x_i - c*x_j.
"""

from __future__ import annotations

from .qfield import CR_ONE, CR_ZERO, CoeffRat, UnitMono


class NPoly:
    """Laurent polynomial in x_1..x_n: {exponent tuple: CoeffRat}."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    @classmethod
    def _raw(cls, n, terms):
        self = object.__new__(cls)
        self.n = n
        self.terms = terms
        return self

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: CR_ONE})

    @classmethod
    def monomial(cls, exps, coeff=CR_ONE):
        if not coeff:
            return cls.zero(len(exps))
        return cls._raw(len(exps), {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, NPoly) and self.n == other.n
                and self.terms == other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return NPoly._raw(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NPoly._raw(self.n, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (CoeffRat, int)):
            return self.scalar_mul(other)
        A, B = self.terms, other.terms
        if len(A) > len(B):
            A, B = B, A
        out = {}
        for ka, va in A.items():
            for kb, vb in B.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                w = out.get(k)
                w = va * vb if w is None else w + va * vb
                if w:
                    out[k] = w
                else:
                    del out[k]
        return NPoly._raw(self.n, out)

    def scalar_mul(self, c):
        if isinstance(c, int):
            c = CoeffRat.from_int(c)
        if not c:
            return NPoly.zero(self.n)
        return NPoly._raw(self.n, {k: v * c for k, v in self.terms.items()})

    def mul_monomial(self, exps, coeff=CR_ONE):
        out = {}
        for k, v in self.terms.items():
            w = v * coeff
            if w:
                out[tuple(a + b for a, b in zip(k, exps))] = w
        return NPoly._raw(self.n, out)

    def scale_vars(self, idxs, u):
        """Substitute x_i -> u*x_i for every i in idxs (u a unit monomial)."""
        out = {}
        for k, v in self.terms.items():
            e = sum(k[i] for i in idxs)
            out[k] = v * (u ** e).as_coeffrat()
        return NPoly._raw(self.n, out)

    def permute(self, perm):
        """Relabel variables: x_i -> x_{perm[i]}."""
        out = {}
        for k, v in self.terms.items():
            nk = [0] * self.n
            for i, e in enumerate(k):
                nk[perm[i]] = e
            out[tuple(nk)] = v
        return NPoly._raw(self.n, out)

    def swap(self, i, j):
        perm = list(range(self.n))
        perm[i], perm[j] = perm[j], perm[i]
        return self.permute(perm)

    def divexact_binomial(self, i, j, c=None):
        """Exact division by (x_i - c*x_j); raises ArithmeticError if inexact."""
        if not self.terms:
            return self
        if c is None:
            c = CR_ONE
        elif isinstance(c, UnitMono):
            c = c.as_coeffrat()
        slices = {}
        for k, v in self.terms.items():
            m = k[i]
            rest = k[:i] + (0,) + k[i + 1:]
            slices.setdefault(m, {})[rest] = v
        mmax = max(slices)
        mmin = min(slices)
        out = {}
        carry = {}
        for m in range(mmax, mmin, -1):
            cur = dict(slices.get(m, {}))
            for rest, v in carry.items():
                shifted = rest[:j] + (rest[j] + 1,) + rest[j + 1:]
                w = cur.get(shifted)
                w = v * c if w is None else w + v * c
                if w:
                    cur[shifted] = w
                else:
                    cur.pop(shifted, None)
            for rest, v in cur.items():
                out[rest[:i] + (m - 1,) + rest[i + 1:]] = v
            carry = cur
        bottom = dict(slices.get(mmin, {}))
        for rest, v in carry.items():
            shifted = rest[:j] + (rest[j] + 1,) + rest[j + 1:]
            w = bottom.get(shifted)
            w = v * c if w is None else w + v * c
            if w:
                bottom[shifted] = w
            else:
                bottom.pop(shifted, None)
        if bottom:
            raise ArithmeticError("polynomial not divisible by binomial")
        return NPoly._raw(self.n, out)

    def is_symmetric(self):
        try:
            self.fold_symmetric()
        except ArithmeticError:
            return False
        return True

    def fold_symmetric(self):
        """Collect a symmetric polynomial into {dominant exponent: coeff}.

        Raises ArithmeticError when the polynomial is not symmetric.
        """
        out = {}
        total = 0
        for k, v in self.terms.items():
            sk = tuple(sorted(k, reverse=True))
            if sk == k:
                out[sk] = v
                total += _orbit_size(sk)
        if total != len(self.terms):
            raise ArithmeticError("polynomial is not symmetric")
        for k, v in self.terms.items():
            sk = tuple(sorted(k, reverse=True))
            if out.get(sk) != v:
                raise ArithmeticError("polynomial is not symmetric")
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i+1}^{e}" for i, e in enumerate(k) if e)
            bits.append(f"({self.terms[k]})*{mono or '1'}")
        return " + ".join(bits)

    def __repr__(self):
        return f"NPoly({self})"


def _orbit_size(sig):
    from math import factorial

    size = factorial(len(sig))
    run = 1
    for i in range(1, len(sig)):
        if sig[i] == sig[i - 1]:
            run += 1
        else:
            size //= factorial(run)
            run = 1
    size //= factorial(run)
    return size
