#!/usr/bin/env python3
"""Run the staged sieve and watch the candidate pool shrink.

The sieve enumerates exponent tuples for candidates of the shape
x^a (x+1)^b M1^c1 .. M5^c5 S1^d1 .. S8^d8, prunes them through
divisor-sum exponent arithmetic, and hands the survivors to an exact
sigma check.  Stage counts are compared against fixed references; the
second stage's reference is not reproduced by either documented
pruning rule, and the result object says so rather than hiding it.
"""

from gf2perfect import is_indecomposable_perfect, name_of, run_search, sigma

for stage in ("1", "2", "3"):
    res = run_search(stage)
    print(f"stage {stage}: {res.count} candidates")

res = run_search("final")
print()
print("final survivors:")
for p in res.tuples:
    label = name_of(p) or "(unnamed)"
    indecomposable = is_indecomposable_perfect(p)
    print(
        f"  {label:>3}  deg {p.degree:>2}  {p.text()}"
        f"  sigma-fixed={sigma(p) == p}  indecomposable={indecomposable}"
    )

print()
if res.matches_reference():
    print("every stage count matches its reference")
else:
    print("reference mismatch, variant counts follow")
    for stage_key, d in (res.filter_diff or {}).items():
        print(f"  stage {stage_key}: got {d['count']}, reference {d['reference']}")
        for rule, count in d["variants"].items():
            print(f"    rule {rule!r}: {count}")
