"""Signatures, interlacing, Gelfand-Tsetlin patterns, weights and shifts.

A signature is a weakly decreasing tuple of integers (negative entries
allowed, empty tuple allowed).  Gelfand-Tsetlin patterns subordinate to a
signature are interlacing chains ending at it; they index both the
monomial expansion of the associated symmetric polynomials and the trace
summations used elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product


def is_dominant(sig):
    return all(sig[i] >= sig[i + 1] for i in range(len(sig) - 1))


def sig_sum(sig):
    return sum(sig)


def parse_signature(text):
    """Parse a comma-separated signature string such as "2,1,0" or "1,-1"."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed signature {text!r}") from None
    if not is_dominant(parts):
        raise ValueError(f"signature {text!r} is not weakly decreasing")
    return parts


def format_signature(sig):
    return ",".join(str(p) for p in sig)


def interlaces(mu, lam):
    """True iff lam_1 >= mu_1 >= lam_2 >= ... >= mu_{n-1} >= lam_n."""
    if len(mu) != len(lam) - 1:
        raise ValueError("interlacing requires len(mu) == len(lam) - 1")
    for i in range(len(mu)):
        if not (lam[i] >= mu[i] >= lam[i + 1]):
            return False
    return True


def interlacing_signatures(lam):
    """All mu of length len(lam)-1 with mu interlacing lam, in lex order."""
    n = len(lam)
    if n == 0:
        raise ValueError("no signatures interlace the empty signature")
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n - 1)]
    return [tuple(mu) for mu in product(*ranges)]


@dataclass(frozen=True)
class GTPattern:
    """Triangular interlacing array; rows[l-1] has length l, last row = lam."""

    rows: tuple

    def __post_init__(self):
        for l, row in enumerate(self.rows, start=1):
            if len(row) != l:
                raise ValueError("row lengths must be 1, 2, ..., n")
        for l in range(len(self.rows) - 1):
            if not interlaces(self.rows[l], self.rows[l + 1]):
                raise ValueError("adjacent rows must interlace")

    @property
    def top(self):
        return self.rows[-1]

    def sort_key(self):
        return tuple(x for row in self.rows for x in row)


def gt_enumerate(lam):
    """All Gelfand-Tsetlin patterns subordinate to lam, each exactly once.

    Ordered lexicographically on the concatenation of rows bottom-up.
    """
    if not is_dominant(lam):
        raise ValueError("signature must be dominant")
    n = len(lam)
    if n == 0:
        return [GTPattern(rows=())]
    chains = [(lam,)]
    for _ in range(n - 1):
        chains = [(mu,) + chain
                  for chain in chains
                  for mu in interlacing_signatures(chain[0])]
    patterns = [GTPattern(rows=chain) for chain in chains]
    patterns.sort(key=GTPattern.sort_key)
    return patterns


def gt_weight(pattern):
    """Weight vector (|mu^n|-|mu^{n-1}|, ..., |mu^2|-|mu^1|, |mu^1|)."""
    sums = [sig_sum(row) for row in pattern.rows]
    n = len(sums)
    return tuple(sums[n - 1 - i] - (sums[n - 2 - i] if n - 2 - i >= 0 else 0)
                 for i in range(n))


def rho(n):
    """rho_i = (n + 1 - 2i)/2 as exact fractions."""
    return tuple(Fraction(n + 1 - 2 * i, 2) for i in range(1, n + 1))


def rho_tilde(n):
    """rho~_i = -(i - 1)."""
    return tuple(-(i - 1) for i in range(1, n + 1))


def shift(lam, k, variant):
    """Shifted signature: tilde_i = lam_i - (k-1)(i-1), bar_i = lam_i - k(i-1)."""
    if variant == "tilde":
        c = k - 1
    elif variant == "bar":
        c = k
    else:
        raise ValueError("variant must be 'tilde' or 'bar'")
    return tuple(lam[i] - c * i for i in range(len(lam)))


def shifted_chain_enumerate(lam, k):
    """Chains mu^1, ..., mu^n = lam whose (k-1)-tilde shifts interlace.

    Equivalently mu^{i+1}_j >= mu^i_j >= mu^{i+1}_{j+1} - (k-1).  At k = 1
    these are exactly the Gelfand-Tsetlin patterns subordinate to lam.
    Ordered lexicographically on the concatenated rows bottom-up.
    """
    if not is_dominant(shift(lam, k, "tilde")):
        raise ValueError("tilde-shifted top row must be dominant")
    n = len(lam)
    chains = [(lam,)]
    for _ in range(n - 1):
        new = []
        for chain in chains:
            top = chain[0]
            ranges = [range(top[j + 1] - (k - 1), top[j] + 1)
                      for j in range(len(top) - 1)]
            for mu in product(*ranges):
                new.append((tuple(mu),) + chain)
        chains = new
    chains.sort(key=lambda ch: tuple(x for row in ch for x in row))
    return chains
