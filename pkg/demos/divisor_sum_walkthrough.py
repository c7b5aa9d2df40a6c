#!/usr/bin/env python3
"""Divisor sums by hand and by formula."""

from gf2perfect import (
    Poly,
    X,
    X1,
    factor_full,
    mersenne,
    sigma,
    sigma_prime_power,
    trivial_perfect,
)

# sigma adds up every divisor of a polynomial.  For a prime power the
# sum telescopes, and the general case is multiplicative over coprime
# factors, so everything reduces to factoring.

p = Poly.parse("x^4+x^2")
print(f"A = {p.text()}")
print(f"factors: {factor_full(p).text()}")
print(f"sigma(A) = {sigma(p).text()}")

# check that against the definition, the hard way
divisors = []
for bits in range(1, 1 << (p.degree + 1)):
    d = Poly(bits)
    q, r = divmod(p, d)
    if r.bits == 0:
        divisors.append(d)
total = Poly(0)
for d in divisors:
    total = total + d
print(f"naive sum over {len(divisors)} divisors: {total.text()}")
assert total == sigma(p)

# ---------------------------------------------------------------------------
# prime powers have closed forms

print()
m1 = mersenne(1)
for e in (1, 2, 3, 4):
    print(f"sigma(M1^{e}) = {sigma_prime_power(m1, e).text()}")

# even exponents keep the result odd, which is why the searches only
# ever look at squares
s = sigma_prime_power(m1, 2)
print(f"sigma(M1^2) is odd: {bool(s.bits & 1) and bin(s.bits).count('1') % 2 == 1}")

# ---------------------------------------------------------------------------
# fixed points

print()
for n in (1, 2, 3):
    t = trivial_perfect(n)
    print(f"x^(2^{n}-1) (x+1)^(2^{n}-1) = {t.text()}")
    assert sigma(t) == t
print("the splitting fixed points check out")

# the smallest fixed point with an odd prime factor
t1 = X ** 2 * X1 * m1
print(f"\nsmallest mixed fixed point: {t1.text()}")
print(f"sigma of it:                {sigma(t1).text()}")
assert sigma(t1) == t1
