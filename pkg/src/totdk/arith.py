"""Integer factorization and multiplicative arithmetic functions.

Covers everything the identity chain needs from elementary number theory:
prime factorization, the Moebius function, Euler's totient, the count and
product of distinct prime factors, divisor enumeration, totatives, and
p-adic valuations.  A smallest-prime-factor sieve amortizes factorization
across bulk verification ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, ResourceLimitError

#: Largest n for which totatives are enumerated brute force.  The cap doubles
#: as an exactness guarantee for the vectorized int64 reductions used by the
#: bulk verifiers: every dot product taken over the residues of n is a sum of
#: fewer than n terms, each below n**2, so it stays under 2**63 whenever
#: n <= 2_000_000.
ENUMERATION_BOUND = 2_000_000

gcd = math.gcd


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes strictly ascending.

    The empty tuple represents 1.
    """

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class TotativeSet:
    """The ascending integers a with 1 <= a < n and gcd(a, n) = 1.

    For n = 1 the set is (1,) by convention; the totative-sum formulas in
    the spence module reject n = 1 outright rather than extend to it.
    """

    n: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def factorize(n: int) -> Factorization:
    """Canonical prime factorization by trial division (2, 3, then 6k+-1)."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    pairs = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
    i = 5
    while i * i <= n:
        for p in (i, i + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                pairs.append((p, e))
        i += 6
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def moebius(n: int) -> int:
    """0 if n has a squared prime factor, else (-1)**(number of prime factors)."""
    fact = factorize(n)
    if any(e >= 2 for _, e in fact):
        return 0
    return -1 if len(fact.pairs) % 2 else 1


def totient(n: int) -> int:
    """Euler's phi: the number of totatives of n."""
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def omega(n: int) -> int:
    """Number of distinct prime factors (0 for n = 1)."""
    return len(factorize(n).pairs)


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; the square-free part (1 for n = 1)."""
    out = 1
    for p, _ in factorize(n):
        out *= p
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order, including 1 and n."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_divisors(n: int) -> list[tuple[int, int]]:
    """Ascending (d, moebius(d)) for the square-free divisors of n.

    These are exactly the divisors with a nonzero Moebius weight, so a sum of
    mu(d) * g(d) over all divisors may be taken over this list alone.
    """
    return squarefree_divisors_from(factorize(n).distinct_primes())


def squarefree_divisors_from(primes: Sequence[int]) -> list[tuple[int, int]]:
    """Square-free divisor/Moebius pairs built from a distinct-prime list."""
    divs = [(1, 1)]
    for p in primes:
        divs += [(d * p, -mu) for d, mu in divs]
    divs.sort()
    return divs


def valuation(p: int, n: int) -> int:
    """p-adic valuation: the exponent of the prime p in n."""
    if p < 2 or factorize(p).pairs != ((p, 1),):
        raise DomainError(f"valuation requires a prime base, got {p}")
    if n < 1:
        raise DomainError(f"valuation requires n >= 1, got {n}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def coprime_residues(
    n: int,
    primes: Sequence[int] | None = None,
    *,
    bound: int | None = None,
) -> np.ndarray:
    """Ascending int64 array of the totatives of n ((1,) for n = 1).

    Sieves multiples of each distinct prime of n out of [1, n).  `primes`
    may be supplied (e.g. from a Sieve) to skip refactorization.
    """
    if n < 1:
        raise DomainError(f"totatives require n >= 1, got {n}")
    limit = bound if bound is not None else ENUMERATION_BOUND
    if n > limit:
        raise ResourceLimitError(
            f"totative enumeration bound exceeded: n={n} > {limit}"
        )
    if n == 1:
        return np.ones(1, dtype=np.int64)
    if primes is None:
        primes = factorize(n).distinct_primes()
    mask = np.ones(n, dtype=bool)
    mask[0] = False
    for p in primes:
        mask[p::p] = False
    return np.flatnonzero(mask).astype(np.int64, copy=False)


def totatives(n: int, *, bound: int | None = None) -> TotativeSet:
    """The ascending TotativeSet of n; its length equals totient(n)."""
    residues = coprime_residues(n, bound=bound)
    return TotativeSet(n=n, members=tuple(residues.tolist()))


class Sieve:
    """Smallest-prime-factor table over [0, limit].

    Build once, then factor any 1 <= n <= limit in O(log n); meant to be
    shared read-only across range verifications (and across worker
    processes, which each build their own copy).
    """

    def __init__(self, limit: int):
        if limit < 1:
            raise DomainError(f"sieve limit must be >= 1, got {limit}")
        self.limit = limit
        spf = list(range(limit + 1))
        for i in range(2, math.isqrt(limit) + 1):
            if spf[i] == i:
                for j in range(i * i, limit + 1, i):
                    if spf[j] == j:
                        spf[j] = i
        self._spf = spf

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise DomainError(f"n={n} outside sieve range [1, {self.limit}]")

    def factorize(self, n: int) -> Factorization:
        self._check(n)
        spf = self._spf
        pairs = []
        while n > 1:
            p = spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        return Factorization(tuple(pairs))

    def distinct_primes(self, n: int) -> tuple[int, ...]:
        self._check(n)
        spf = self._spf
        primes = []
        while n > 1:
            p = spf[n]
            primes.append(p)
            while n % p == 0:
                n //= p
        return tuple(primes)

    def totient(self, n: int) -> int:
        out = n
        for p in self.distinct_primes(n):
            out = out // p * (p - 1)
        return out

    def moebius(self, n: int) -> int:
        fact = self.factorize(n)
        if any(e >= 2 for _, e in fact):
            return 0
        return -1 if len(fact.pairs) % 2 else 1

    def radical(self, n: int) -> int:
        return math.prod(self.distinct_primes(n))
