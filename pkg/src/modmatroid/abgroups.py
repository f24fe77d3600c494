"""Finitely generated abelian groups and their local forms.

A group is stored canonically as a free rank plus an invariant-factor
chain n_1 | n_2 | ... with every n_i >= 2, so equality of values is
isomorphism.  Localizing at a prime p forgets everything coprime to p
and records the module over the p-local integers as a multiset of
exponents; the d-sequence calculus (d_i = generator count of N/p^i N)
lives on that side.

``INF`` is a first-class arithmetic value: n + INF = INF and
min(n, INF) = n, which is exactly what the d-sequence formulas need.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .intmat import Mat, shape, smith_normal_form

INF = math.inf


@dataclass(frozen=True)
class FgAbGroup:
    """Free rank plus invariant-factor chain; the canonical form over the integers."""

    rank: int = 0
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for f in self.factors:
            if f < 2:
                raise ValueError(f"invariant factor {f} < 2")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(f"broken divisibility chain: {a} does not divide {b}")

    @property
    def torsion_order(self) -> int:
        return math.prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.factors

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{f}" for f in self.factors)
        return " + ".join(parts) if parts else "0"


TRIVIAL = FgAbGroup()


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for anything this package will ever see
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    counts: Counter[int] = Counter()
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            counts[p] += 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if _is_probable_prime(m):
            counts[m] += 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return tuple(sorted(counts.items()))


def pval(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def canonicalize(orders: Iterable[int], rank: int = 0) -> FgAbGroup:
    """Group with cyclic summands of the given orders, in canonical form.

    Order 0 encodes a free summand, order 1 is dropped.  Non-chain inputs
    are merged through their primary decomposition (CRT), so the input
    ordering never matters.
    """
    fs: list[int] = []
    r = rank
    for n in orders:
        n = abs(int(n))
        if n == 0:
            r += 1
        elif n > 1:
            fs.append(n)
    fs.sort()
    if all(b % a == 0 for a, b in zip(fs, fs[1:])):
        return FgAbGroup(r, tuple(fs))
    primary: dict[int, list[int]] = {}
    for n in fs:
        for p, e in factorize(n):
            primary.setdefault(p, []).append(e)
    for es in primary.values():
        es.sort(reverse=True)
    depth = max(len(es) for es in primary.values())
    chain = []
    for k in range(depth):
        f = 1
        for p, es in primary.items():
            if k < len(es):
                f *= p ** es[k]
        chain.append(f)
    chain.reverse()
    return FgAbGroup(r, tuple(chain))


def group_sum(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return canonicalize(a.factors + b.factors, a.rank + b.rank)


def tensor_group(g: FgAbGroup, k: int) -> FgAbGroup:
    """g tensored with Z/k: free summands become Z/k, Z/n becomes Z/gcd(n, k)."""
    if k < 2:
        raise ValueError("modulus must be at least 2")
    return canonicalize([math.gcd(n, k) for n in g.factors] + [k] * g.rank)


def cokernel(relations: Mat) -> FgAbGroup:
    """Quotient of Z^n by the column span of an n-row relation matrix."""
    rows, _ = shape(relations)
    d = smith_normal_form(relations).d
    nonzero = [x for x in d if x]
    return FgAbGroup(rows - len(nonzero), tuple(x for x in nonzero if x > 1))


def support_primes(*groups: FgAbGroup) -> tuple[int, ...]:
    """Primes dividing any torsion order of the given groups, ascending."""
    primes: set[int] = set()
    for g in groups:
        for n in g.factors:
            primes.update(p for p, _ in factorize(n))
    return tuple(sorted(primes))


@dataclass(frozen=True)
class DMod:
    """Module over a discrete valuation ring: free rank plus torsion exponents.

    ``exps`` is the nonincreasing multiset of exponents e of the cyclic
    summands R/m^e.  The d-sequence is d_i = rank + #{e >= i}; it is
    nonincreasing in i and eventually constant at ``rank``.
    """

    rank: int = 0
    exps: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for e in self.exps:
            if e < 1:
                raise ValueError("exponents must be positive")
        for a, b in zip(self.exps, self.exps[1:]):
            if b > a:
                raise ValueError("exponents must be nonincreasing")

    @property
    def length(self) -> int:
        return sum(self.exps)

    @property
    def max_exp(self) -> int:
        return self.exps[0] if self.exps else 0


@lru_cache(maxsize=None)
def localize(g: FgAbGroup, p: int) -> DMod:
    lam = sorted((v for v in (pval(n, p) for n in g.factors) if v), reverse=True)
    return DMod(g.rank, tuple(lam))


def d_i(m: DMod, i: int) -> int:
    """Minimal generator count of m/p^i m, for finite i >= 1."""
    return m.rank + sum(1 for e in m.exps if e >= i)


def d_leq(m: DMod, n):
    """Partial sum d_1 + ... + d_n; INF allowed (total length, or INF if free part)."""
    if n is INF or (isinstance(n, float) and math.isinf(n)):
        return INF if m.rank else sum(m.exps)
    if n < 1:
        raise ValueError("horizon must be at least 1")
    return n * m.rank + sum(min(e, n) for e in m.exps)
