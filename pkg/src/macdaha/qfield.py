"""Exact coefficient arithmetic in the rational-function field Q(q, t).

Everything downstream is computed over this field: Laurent polynomials in
(q, t) with arbitrary-precision integer coefficients, reduced fractions of
those, q-numbers [a] = (q^a - q^-a)/(q - q^-1), q-factorials, falling
q-factorials, and finite Pochhammer ratios.

Canonical form of a fraction: gcd(num, den) = 1, the denominator is a
genuine polynomial (no negative exponents, no monomial factor) whose
leading coefficient under graded lex order (q before t) is positive.  The
canonical form is unique per value, so equality is plain structural
equality and string rendering is deterministic.
"""

from __future__ import annotations

import math
from functools import lru_cache, reduce


class DomainViolationError(ZeroDivisionError):
    """An operation divided by a vanishing q-number or rational function."""


# ---------------------------------------------------------------------------
# Term-map cores.  A Laurent polynomial is {(q_exp, t_exp): coeff} with no
# stored zero coefficients; {} is zero.

def _add(A, B):
    C = dict(A)
    for k, v in B.items():
        w = C.get(k, 0) + v
        if w:
            C[k] = w
        else:
            C.pop(k, None)
    return C


def _neg(A):
    return {k: -v for k, v in A.items()}


def _scale(A, c):
    if c == 0:
        return {}
    return {k: c * v for k, v in A.items()}


def _mul(A, B):
    if not A or not B:
        return {}
    if len(A) > len(B):
        A, B = B, A
    C = {}
    for (a1, b1), c1 in A.items():
        for (a2, b2), c2 in B.items():
            k = (a1 + a2, b1 + b2)
            w = C.get(k, 0) + c1 * c2
            if w:
                C[k] = w
            else:
                del C[k]
    return C


def _shift(A, da, db):
    if da == 0 and db == 0:
        return dict(A)
    return {(a + da, b + db): c for (a, b), c in A.items()}


def _min_exps(A):
    qa = min(a for a, _ in A)
    tb = min(b for _, b in A)
    return qa, tb


def _glex_key(k):
    a, b = k
    return (a + b, a, b)


def _lead_coeff(A):
    return A[max(A, key=_glex_key)]


_ONE_D = {(0, 0): 1}


# ---------------------------------------------------------------------------
# gcd machinery over Z[q, t] (non-negative exponents).  Recursive primitive
# pseudo-remainder sequences: main variable t, coefficients in Z[q].

def _to_t(A):
    D = {}
    for (a, b), c in A.items():
        D.setdefault(b, {})[a] = c
    return D


def _from_t(D):
    return {(a, b): c for b, u in D.items() for a, c in u.items()}


def _q_sub(u, v):
    w = dict(u)
    for a, c in v.items():
        x = w.get(a, 0) - c
        if x:
            w[a] = x
        else:
            w.pop(a, None)
    return w


def _q_mul(u, v):
    w = {}
    for a, c in u.items():
        for b, d in v.items():
            k = a + b
            x = w.get(k, 0) + c * d
            if x:
                w[k] = x
            else:
                del w[k]
    return w


def _q_scale(u, c):
    return {a: c * v for a, v in u.items()} if c else {}


def _q_int_content(u):
    return reduce(math.gcd, (abs(c) for c in u.values()))


def _q_divexact_int(u, c):
    if c == 1:
        return u
    return {a: v // c for a, v in u.items()}


def _q_prem(u, v):
    """Sloppy pseudo-remainder of u by v in Z[q]; exact up to lc(v) powers."""
    dv = max(v)
    lcv = v[dv]
    r = dict(u)
    while r:
        dr = max(r)
        if dr < dv:
            break
        lcr = r.pop(dr)
        r = {a: c * lcv for a, c in r.items()}
        for a, c in v.items():
            if a == dv:
                continue
            k = a + dr - dv
            x = r.get(k, 0) - lcr * c
            if x:
                r[k] = x
            else:
                r.pop(k, None)
    return r


def _q_gcd(u, v):
    """gcd in Z[q] including integer content, leading coefficient > 0."""
    if not u:
        u, v = v, u
    if not v:
        if not u:
            return {}
        c = _q_int_content(u)
        u = _q_divexact_int(u, c)
        if u[max(u)] < 0:
            u = {a: -x for a, x in u.items()}
        return _q_scale(u, c)
    cu, cv = _q_int_content(u), _q_int_content(v)
    c = math.gcd(cu, cv)
    u = _q_divexact_int(u, cu)
    v = _q_divexact_int(v, cv)
    while v:
        r = _q_prem(u, v)
        if r:
            r = _q_divexact_int(r, _q_int_content(r))
        u, v = v, r
    if u[max(u)] < 0:
        u = {a: -x for a, x in u.items()}
    return _q_scale(u, c)


def _q_divexact(u, v):
    """Exact division in Z[q]; raises ArithmeticError if not divisible."""
    if not u:
        return {}
    dv = max(v)
    lcv = v[dv]
    quo = {}
    r = dict(u)
    while r:
        dr = max(r)
        if dr < dv:
            raise ArithmeticError("inexact polynomial division in Z[q]")
        c, rem = divmod(r[dr], lcv)
        if rem:
            raise ArithmeticError("inexact polynomial division in Z[q]")
        quo[dr - dv] = c
        del r[dr]
        for a, d in v.items():
            if a == dv:
                continue
            k = a + dr - dv
            x = r.get(k, 0) - c * d
            if x:
                r[k] = x
            else:
                r.pop(k, None)
    return quo


def _t_content(F):
    return reduce(_q_gcd, F.values())


def _t_map(F, fn):
    return {b: fn(u) for b, u in F.items()}


def _t_prem(F, G):
    """Sloppy pseudo-remainder in (Z[q])[t]."""
    dG = max(G)
    lcG = G[dG]
    R = dict(F)
    while R:
        dR = max(R)
        if dR < dG:
            break
        lcR = R.pop(dR)
        R = {b: _q_mul(u, lcG) for b, u in R.items()}
        for b, u in G.items():
            if b == dG:
                continue
            k = b + dR - dG
            w = _q_sub(R.get(k, {}), _q_mul(u, lcR))
            if w:
                R[k] = w
            else:
                R.pop(k, None)
    return R


def _poly_gcd(A, B):
    """gcd in Z[q, t] of non-zero term maps with non-negative exponents.

    Includes the integer content; normalized so the graded-lex leading
    coefficient is positive.
    """
    if A == B:
        C = A
        if _lead_coeff(C) < 0:
            C = _neg(C)
        return dict(C)
    if len(A) == 1 or len(B) == 1:
        # Against a monomial the gcd is the per-variable minimum exponent
        # together with the integer content gcd.
        qa = min(min(a for a, _ in A), min(a for a, _ in B))
        tb = min(min(b for _, b in A), min(b for _, b in B))
        c = reduce(math.gcd, (abs(v) for v in A.values()))
        c = reduce(math.gcd, (abs(v) for v in B.values()), c)
        return {(qa, tb): c}
    FA, FB = _to_t(A), _to_t(B)
    if max(FA) == 0 and max(FB) == 0:
        g = _q_gcd(FA[0], FB[0])
        return {(a, 0): c for a, c in g.items()}
    ca, cb = _t_content(FA), _t_content(FB)
    cont = _q_gcd(ca, cb)
    U = _t_map(FA, lambda u: _q_divexact(u, ca))
    V = _t_map(FB, lambda u: _q_divexact(u, cb))
    if max(U) < max(V):
        U, V = V, U
    while V:
        R = _t_prem(U, V)
        if R:
            cr = _t_content(R)
            R = _t_map(R, lambda u: _q_divexact(u, cr))
        U, V = V, R
    G = _from_t(_t_map(U, lambda u: _q_mul(u, cont)))
    if _lead_coeff(G) < 0:
        G = _neg(G)
    return G


def _poly_divexact(A, B):
    """Exact division in Z[q, t]; raises ArithmeticError if not divisible."""
    if not A:
        return {}
    if B == _ONE_D:
        return dict(A)
    F, G = _to_t(A), _to_t(B)
    dG = max(G)
    lcG = G[dG]
    Q = {}
    while F:
        dF = max(F)
        if dF < dG:
            raise ArithmeticError("inexact polynomial division in Z[q,t]")
        qc = _q_divexact(F[dF], lcG)
        Q[dF - dG] = qc
        for b, u in G.items():
            k = b + dF - dG
            w = _q_sub(F.get(k, {}), _q_mul(u, qc))
            if w:
                F[k] = w
            else:
                F.pop(k, None)
    return _from_t(Q)


def _gcd_qt(A, B):
    """Monomial-free gcd core of two Laurent term maps.

    Monomials are units in the Laurent ring; the returned representative has
    exponent minimum 0 in each variable, positive graded-lex leading
    coefficient, and includes the integer content.
    """
    if not A or not B:
        return dict(_ONE_D)
    qa1, tb1 = _min_exps(A)
    qa2, tb2 = _min_exps(B)
    A0 = _shift(A, -qa1, -tb1) if (qa1 or tb1) else A
    B0 = _shift(B, -qa2, -tb2) if (qa2 or tb2) else B
    return _poly_gcd(A0, B0)


# ---------------------------------------------------------------------------
# Public wrappers.

class LaurentQT:
    """Laurent polynomial in (q, t) over Z, stored as a sparse term map."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, terms):
        self = object.__new__(cls)
        self.terms = terms
        return self

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def mono(cls, a, b, c=1):
        return cls._raw({(a, b): c} if c else {})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentQT) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        return LaurentQT._raw(_add(self.terms, other.terms))

    def __sub__(self, other):
        return LaurentQT._raw(_add(self.terms, _neg(other.terms)))

    def __neg__(self):
        return LaurentQT._raw(_neg(self.terms))

    def __mul__(self, other):
        return LaurentQT._raw(_mul(self.terms, other.terms))

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a Laurent polynomial")
        r = {(0, 0): 1}
        base = self.terms
        while e:
            if e & 1:
                r = _mul(r, base)
            e >>= 1
            if e:
                base = _mul(base, base)
        return LaurentQT._raw(r)

    def subst_mono(self, q_image, t_image):
        """Apply the monomial substitution q -> q_image, t -> t_image."""
        out = {}
        for (a, b), c in self.terms.items():
            s = c
            if a and q_image.sign < 0 and a % 2:
                s = -s
            if b and t_image.sign < 0 and b % 2:
                s = -s
            k = (a * q_image.a + b * t_image.a, a * q_image.b + b * t_image.b)
            w = out.get(k, 0) + s
            if w:
                out[k] = w
            else:
                del out[k]
        return LaurentQT._raw(out)

    def __str__(self):
        return _render_poly(self.terms)

    def __repr__(self):
        return f"LaurentQT({self})"


L_ZERO = LaurentQT._raw({})
L_ONE = LaurentQT._raw({(0, 0): 1})


class UnitMono:
    """An invertible monomial +-q^a t^b."""

    __slots__ = ("sign", "a", "b")

    def __init__(self, sign, a, b):
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        self.sign = sign
        self.a = a
        self.b = b

    @classmethod
    def q(cls, a=1):
        return cls(1, a, 0)

    @classmethod
    def t(cls, b=1):
        return cls(1, 0, b)

    @classmethod
    def one(cls):
        return cls(1, 0, 0)

    def __mul__(self, other):
        return UnitMono(self.sign * other.sign, self.a + other.a, self.b + other.b)

    def inv(self):
        return UnitMono(self.sign, -self.a, -self.b)

    def __pow__(self, e):
        s = self.sign if e % 2 else 1
        return UnitMono(s, self.a * e, self.b * e)

    def __eq__(self, other):
        return (isinstance(other, UnitMono)
                and (self.sign, self.a, self.b) == (other.sign, other.a, other.b))

    def __hash__(self):
        return hash((self.sign, self.a, self.b))

    def as_laurent(self):
        return LaurentQT.mono(self.a, self.b, self.sign)

    def as_coeffrat(self):
        return CoeffRat._raw(self.as_laurent(), L_ONE)

    def __repr__(self):
        return f"UnitMono({self.sign:+d}, q^{self.a}, t^{self.b})"


def _canonical(num, den):
    """Reduce a term-map fraction to canonical form; returns (num, den)."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, dict(_ONE_D)
    # Move the denominator's monomial content into the numerator.
    da, db = _min_exps(den)
    if da or db:
        den = _shift(den, -da, -db)
        num = _shift(num, -da, -db)
    if den == _ONE_D:
        return num, dict(_ONE_D)
    na, nb = _min_exps(num)
    num0 = _shift(num, -na, -nb) if (na or nb) else num
    g = _poly_gcd(num0, den)
    if g != _ONE_D:
        num0 = _poly_divexact(num0, g)
        den = _poly_divexact(den, g)
    if _lead_coeff(den) < 0:
        num0 = _neg(num0)
        den = _neg(den)
    return _shift(num0, na, nb), den


class CoeffRat:
    """Reduced fraction of Laurent polynomials in (q, t): the scalar field."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=L_ONE):
        n, d = _canonical(num.terms, den.terms)
        self.num = LaurentQT._raw(n)
        self.den = LaurentQT._raw(d)

    @classmethod
    def _raw(cls, num, den):
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def from_int(cls, c):
        return cls._raw(LaurentQT.const(c), L_ONE)

    @classmethod
    def from_laurent(cls, p):
        return cls._raw(LaurentQT._raw(dict(p.terms)), L_ONE)

    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CoeffRat.from_int(other)
        return (isinstance(other, CoeffRat)
                and self.num.terms == other.num.terms
                and self.den.terms == other.den.terms)

    def __hash__(self):
        return hash((frozenset(self.num.terms.items()),
                     frozenset(self.den.terms.items())))

    def __neg__(self):
        return CoeffRat._raw(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, int):
            other = CoeffRat.from_int(other)
        a, b = self.num.terms, self.den.terms
        c, d = other.num.terms, other.den.terms
        if b == d:
            n, dd = _canonical(_add(a, c), b)
            return CoeffRat._raw(LaurentQT._raw(n), LaurentQT._raw(dd))
        g = _gcd_qt(b, d)
        if g == _ONE_D:
            num = _add(_mul(a, d), _mul(c, b))
            den = _mul(b, d)
            if not num:
                return CR_ZERO
            if _lead_coeff(den) < 0:
                num, den = _neg(num), _neg(den)
            return CoeffRat._raw(LaurentQT._raw(num), LaurentQT._raw(den))
        b1 = _poly_divexact(b, g)
        d1 = _poly_divexact(d, g)
        tnum = _add(_mul(a, d1), _mul(c, b1))
        if not tnum:
            return CR_ZERO
        g2 = _gcd_qt(tnum, g)
        if g2 != _ONE_D:
            tnum = _div_laurent(tnum, g2)
            den = _mul(b1, _poly_divexact(d, g2))
        else:
            den = _mul(b1, d)
        if _lead_coeff(den) < 0:
            tnum, den = _neg(tnum), _neg(den)
        return CoeffRat._raw(LaurentQT._raw(tnum), LaurentQT._raw(den))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, int):
            other = CoeffRat.from_int(other)
        return self.__add__(-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = CoeffRat.from_int(other)
        elif isinstance(other, UnitMono):
            other = other.as_coeffrat()
        a, b = self.num.terms, self.den.terms
        c, d = other.num.terms, other.den.terms
        if not a or not c:
            return CR_ZERO
        g1 = _gcd_qt(a, d) if d != _ONE_D else _ONE_D
        g2 = _gcd_qt(c, b) if b != _ONE_D else _ONE_D
        if g1 != _ONE_D:
            a = _div_laurent(a, g1)
            d = _poly_divexact(d, g1)
        if g2 != _ONE_D:
            c = _div_laurent(c, g2)
            b = _poly_divexact(b, g2)
        num = _mul(a, c)
        den = _mul(b, d)
        if _lead_coeff(den) < 0:
            num, den = _neg(num), _neg(den)
        return CoeffRat._raw(LaurentQT._raw(num), LaurentQT._raw(den))

    def __rmul__(self, other):
        return self.__mul__(other)

    def inv(self):
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero")
        num, den = _canonical(dict(self.den.terms), dict(self.num.terms))
        return CoeffRat._raw(LaurentQT._raw(num), LaurentQT._raw(den))

    def __truediv__(self, other):
        if isinstance(other, int):
            other = CoeffRat.from_int(other)
        return self.__mul__(other.inv())

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        r = CR_ONE
        base = self
        while e:
            if e & 1:
                r = r * base
            e >>= 1
            if e:
                base = base * base
        return r

    def subst(self, q_image=None, t_image=None):
        """Ring homomorphism q -> q_image, t -> t_image (unit monomials)."""
        if q_image is None:
            q_image = UnitMono.q()
        if t_image is None:
            t_image = UnitMono.t()
        num = self.num.subst_mono(q_image, t_image)
        den = self.den.subst_mono(q_image, t_image)
        if den.is_zero():
            raise DomainViolationError("denominator vanishes under substitution")
        return CoeffRat(num, den)

    def __str__(self):
        if self.den.terms == _ONE_D:
            return _render_poly(self.num.terms)
        return "({})/({})".format(_render_poly(self.num.terms),
                                  _render_poly(self.den.terms))

    def __repr__(self):
        return f"CoeffRat({self})"


def _div_laurent(A, g):
    """Exact division of a Laurent term map by a polynomial term map."""
    if not A:
        return {}
    na, nb = _min_exps(A)
    A0 = _shift(A, -na, -nb) if (na or nb) else A
    return _shift(_poly_divexact(A0, g), na, nb)


CR_ZERO = CoeffRat._raw(L_ZERO, L_ONE)
CR_ONE = CoeffRat._raw(L_ONE, L_ONE)


def _render_poly(A):
    if not A:
        return "0"
    parts = []
    for (a, b) in sorted(A, key=_glex_key, reverse=True):
        c = A[(a, b)]
        mono = []
        if a:
            mono.append("q" if a == 1 else f"q^{a}")
        if b:
            mono.append("t" if b == 1 else f"t^{b}")
        mono = "*".join(mono)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# q-numbers and friends.

_QNUM_DEN = LaurentQT._raw({(1, 0): 1, (-1, 0): -1})


@lru_cache(maxsize=None)
def qnum(a):
    """[a] = (q^a - q^-a)/(q - q^-1), expanded as a Laurent polynomial."""
    if a == 0:
        return CR_ZERO
    if a < 0:
        return -qnum(-a)
    return CoeffRat._raw(
        LaurentQT._raw({(a - 1 - 2 * i, 0): 1 for i in range(a)}), L_ONE)


@lru_cache(maxsize=None)
def qfact(a):
    """[a]! = [a][a-1]...[1]; defined for a >= 0 only."""
    if a < 0:
        raise ValueError("q-factorial of a negative integer")
    if a == 0:
        return CR_ONE
    return qfact(a - 1) * qnum(a)


@lru_cache(maxsize=None)
def qfall(a, m):
    """Falling q-factorial [a]_m = [a][a-1]...[a-m+1]."""
    if m < 0:
        raise ValueError("falling q-factorial with negative length")
    r = CR_ONE
    for i in range(m):
        f = qnum(a - i)
        if not f:
            return CR_ZERO
        r = r * f
    return r


@lru_cache(maxsize=None)
def poch_ratio(a, d, tpow):
    """prod_{m=a}^{a+d-1} (1 - q^m t^tpow), the gap-d Pochhammer ratio."""
    if d < 0:
        raise ValueError("negative Pochhammer gap")
    r = L_ONE
    for m in range(a, a + d):
        r = r * LaurentQT._raw({(0, 0): 1, (m, tpow): -1})
    return CoeffRat.from_laurent(r)


def subst(x, q_image=None, t_image=None):
    """The ring homomorphism q -> q_image, t -> t_image applied to x."""
    return x.subst(q_image, t_image)
