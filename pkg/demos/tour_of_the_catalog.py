#!/usr/bin/env python3
"""A walk through the built-in constants.

The package ships 28 named odd primes and 11 divisor-sum fixed points.
This script prints them, pulls apart a few valuation chains, and shows
how conjugation and reversal act on the named entries.
"""

from gf2perfect import (
    bar,
    by_name,
    catalog_constants,
    chain_length,
    classify,
    family_degree_sum,
    mersenne_family,
    name_of,
    representation,
    star,
    two_mersenne_family,
)

# ---------------------------------------------------------------------------
# the raw inventory

entries = catalog_constants()
print(f"catalog holds {len(entries)} entries")
for e in entries:
    print(f"  {e.name:>3}  deg {e.poly.degree:>2}  {e.poly.text()}")

print()
print(f"degree sum over the prime family: {family_degree_sum()}")

# ---------------------------------------------------------------------------
# valuation chains
#
# Adding 1 to an odd polynomial leaves something divisible by both
# linear primes.  Stripping those valuations and repeating gives a
# finite chain; its length is the catalog's organizing principle.
# One-step entries are the M series, two-step entries the S series.

print()
for name in ("M1", "M13", "S1", "S3"):
    p = by_name(name).poly
    rep = representation(p)
    print(f"{name}: {rep.text()}")

# A handful of S entries need more than two steps even though their
# defining shape has the two-step form.  The chain tells the truth.
print()
for name in ("S7", "S9"):
    p = by_name(name).poly
    print(f"{name}: length {chain_length(p)}")

# classify() recovers shape parameters from nothing but the polynomial
print()
print("M6 ->", classify(by_name("M6").poly).text())
print("S3 ->", classify(by_name("S3").poly).text())

# ---------------------------------------------------------------------------
# conjugation x -> x+1 permutes each series

print()
print("conjugate partners in the one-step series:")
for p in mersenne_family():
    partner = name_of(bar(p))
    print(f"  bar({name_of(p):>3}) = {partner}")

# reversal keeps some entries inside the family and throws others out
print()
kept, lost = [], []
family_bits = {p.bits for p in mersenne_family()} | {
    p.bits for p in two_mersenne_family()
}
for p in two_mersenne_family():
    (kept if star(p).bits in family_bits else lost).append(name_of(p))
print("reversal stays in the family for:", ", ".join(kept))
print("reversal leaves the family for:  ", ", ".join(lost))
