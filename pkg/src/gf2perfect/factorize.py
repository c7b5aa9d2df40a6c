"""Irreducibility, square-freeness and factorization over GF(2).

The complete factoring pipeline is classical: peel off square roots
while the derivative vanishes, split into square-free parts, separate
those by factor degree with gcd(x^(2^k) - x, f), then break same-degree
products with random trace polynomials.  The randomness is drawn from a
generator seeded by the input bits, so every run factors a given
polynomial identically.

`factor_over_family` is deliberately weaker than `factor_full`: it only
divides by members of a supplied family and reports failure instead of
falling back to general factoring.  Several classification routines
depend on that distinction.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .gf2poly import (
    Poly,
    _degree,
    _derivative,
    _divmod,
    _gcd,
    _mod,
    _mul,
    _powmod,
    _sqrt,
    _square,
)


def _prime_divisors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _is_irreducible_bits(a):
    d = _degree(a)
    # x and x+1 are the degree-1 primes; degree >= 2 needs the real test.
    if d == 1:
        return True
    if not (a & 1):
        return False  # divisible by x
    # Rabin: x^(2^d) == x mod a, and for every prime p | d the map
    # x -> x^(2^(d/p)) must move x (gcd check).
    x = 2
    for p in _prime_divisors(d):
        e = d // p
        t = x
        for _ in range(e):
            t = _mod(_square(t), a)
        if _gcd(t ^ x, a) != 1:
            return False
    t = x
    for _ in range(d):
        t = _mod(_square(t), a)
    return t == x


def is_irreducible(p: Poly) -> bool:
    """Irreducibility over GF(2); constant input is an error."""
    if _degree(p.bits) < 1:
        raise ValueError("irreducibility is a question for degree >= 1")
    return _is_irreducible_bits(p.bits)


def is_squarefree(p: Poly) -> bool:
    """True when no irreducible factor of p repeats.

    A vanishing derivative means the polynomial is a square of
    something nonconstant (false, except for the unit).  Otherwise
    square-freeness is exactly gcd(p, p') = 1.
    """
    a = p.bits
    if a == 0:
        raise ValueError("square-freeness of the zero polynomial")
    if a == 1:
        return True
    d = _derivative(a)
    if d == 0:
        return False
    return _gcd(a, d) == 1


class FactorMap:
    """Ordered multiset of (irreducible, exponent) pairs.

    Entries are kept sorted by (degree, little-endian coefficient
    value), which for the integer packing is plain integer order.  The
    product over entries reconstructs the factored polynomial.
    """

    __slots__ = ("entries",)

    def __init__(self, pairs):
        merged = {}
        for prime, exp in pairs:
            if not isinstance(prime, Poly):
                prime = Poly(prime)
            if exp < 1:
                raise ValueError("factor exponents must be positive")
            merged[prime.bits] = merged.get(prime.bits, 0) + exp
        self_entries = tuple(
            (Poly(bits), merged[bits]) for bits in sorted(merged)
        )
        object.__setattr__(self, "entries", self_entries)

    def __setattr__(self, name, value):
        raise AttributeError("FactorMap is immutable")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, FactorMap) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple((p.bits, e) for p, e in self.entries))

    def __repr__(self):
        inner = ", ".join(f"{p.text()}:{e}" for p, e in self.entries)
        return f"FactorMap({{{inner}}})"

    @property
    def omega(self):
        """Number of distinct irreducible factors."""
        return len(self.entries)

    def exponent(self, prime: Poly) -> int:
        """Exponent of a given prime, 0 when absent."""
        for p, e in self.entries:
            if p.bits == prime.bits:
                return e
        return 0

    def product(self) -> Poly:
        bits = 1
        for p, e in self.entries:
            q = p.bits
            k = e
            while k:
                if k & 1:
                    bits = _mul(bits, q)
                k >>= 1
                if k:
                    q = _square(q)
        return Poly(bits)

    def to_json(self) -> dict:
        return {
            "poly": self.product().text(),
            "factors": [
                {"prime": p.text(), "exp": e} for p, e in self.entries
            ],
        }

    def text(self) -> str:
        if not self.entries:
            return "1"
        parts = []
        for p, e in self.entries:
            body = p.text()
            if len(self.entries) > 1 or e > 1:
                body = f"({body})"
            parts.append(body if e == 1 else f"{body}^{e}")
        return " * ".join(parts)


def _squarefree_parts(a):
    """Square-free decomposition: dict {square-free factor bits: exponent}."""
    out = {}

    def absorb(f, mult):
        if f == 1:
            return
        out[f] = out.get(f, 0) + mult

    def walk(a, mult):
        d = _derivative(a)
        if d == 0:
            # a is a perfect square; halve it and double multiplicities.
            walk(_sqrt(a), 2 * mult)
            return
        g = _gcd(a, d)
        w = _divmod(a, g)[0]
        i = 1
        while w != 1:
            y = _gcd(w, g)
            z = _divmod(w, y)[0]
            absorb(z, i * mult)
            w = y
            g = _divmod(g, y)[0]
            i += 1
        if g != 1:
            walk(g, mult)

    walk(a, 1)
    return out


def _distinct_degree(f):
    """Split square-free f into [(product of its degree-k primes, k)]."""
    out = []
    h = 2  # x
    k = 0
    while f != 1:
        k += 1
        if 2 * k > _degree(f):
            out.append((f, _degree(f)))
            break
        h = _mod(_square(h), f)
        g = _gcd(h ^ 2, f)
        if g != 1:
            out.append((g, k))
            f = _divmod(f, g)[0]
            h = _mod(h, f)
    return out


def _equal_degree(g, k, rng):
    """Split g, a product of distinct degree-k primes, into those primes."""
    d = _degree(g)
    if d == k:
        return [g]
    # Trace map into GF(2): T(r) = r + r^2 + ... + r^(2^(k-1)) takes a
    # value in {0,1} modulo each prime factor, so gcd(T(r), g) cuts g
    # roughly in half for random r.
    while True:
        r = rng.getrandbits(d)
        t = 0
        s = _mod(r, g)
        for _ in range(k):
            t ^= s
            s = _mod(_square(s), g)
        split = _gcd(t, g)
        if split not in (1, g):
            left = split
            right = _divmod(g, split)[0]
            return _equal_degree(left, k, rng) + _equal_degree(right, k, rng)


def factor_full(p: Poly) -> FactorMap:
    """Complete factorization of a nonzero polynomial."""
    a = p.bits
    if a == 0:
        raise ValueError("cannot factor the zero polynomial")
    if a == 1:
        return FactorMap([])
    rng = random.Random(a)
    pairs = []
    for part, mult in _squarefree_parts(a).items():
        for prod, k in _distinct_degree(part):
            for prime in _equal_degree(prod, k, rng):
                pairs.append((Poly(prime), mult))
    return FactorMap(pairs)


def factor_over_family(p: Poly, family) -> FactorMap | None:
    """Factor p using only the given irreducibles, or report failure.

    Divides repeatedly by each family member in canonical order;
    returns the exponent map when the quotient reaches 1 and None when
    a nontrivial cofactor remains.  Never invokes general factoring.
    """
    members = []
    seen = set()
    for q in family:
        if not isinstance(q, Poly):
            q = Poly(q)
        if not is_irreducible(q):
            raise ValueError(f"family member {q.text()} is not irreducible")
        if q.bits in seen:
            raise ValueError(f"family member {q.text()} listed twice")
        seen.add(q.bits)
        members.append(q.bits)
    members.sort()
    a = p.bits
    if a == 0:
        raise ValueError("cannot factor the zero polynomial")
    pairs = []
    for q in members:
        e = 0
        while True:
            quo, rem = _divmod(a, q)
            if rem != 0:
                break
            a = quo
            e += 1
        if e:
            pairs.append((Poly(q), e))
    if a != 1:
        return None
    return FactorMap(pairs)
