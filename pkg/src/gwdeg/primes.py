"""Integer primality, factorization, and squarefree parts.

Trial division strips primes up to 10**6; any survivor is split by Pollard's
rho after a Miller-Rabin check.  The fixed Miller-Rabin base set is
deterministic for inputs below 3.3e24, far beyond the magnitudes produced by
the rest of the package.
"""
from __future__ import annotations

import functools
import math

from .errors import MathDomainError

TRIAL_LIMIT = 10**6
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n."""
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


@functools.lru_cache(maxsize=16384)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a sorted tuple of (prime, exponent)."""
    if n < 1:
        raise MathDomainError("factorize expects a positive integer")
    exps: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
            exps[p] = exps.get(p, 0) + 1
    # wheel over residues coprime to 30
    p = 7
    increments = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p <= TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            n //= p
            exps[p] = exps.get(p, 0) + 1
        p += increments[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            exps[m] = exps.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return tuple(sorted(exps.items()))


def squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer: n modulo square factors."""
    if n == 0:
        raise MathDomainError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorize(abs(n)):
        if e % 2:
            out *= p
    return sign * out
