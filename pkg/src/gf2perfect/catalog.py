"""Fixed prime catalog and the classification tools built around it.

The catalog holds three families.  Thirteen Mersenne primes (M1..M13)
of the shape 1 + x^a (x+1)^b, fifteen primes (S1..S15) of the shape
1 + x^a (x+1)^b M1^c built over the smallest Mersenne prime, and the
eleven known nontrivial perfect polynomials (T1..T11).  Every entry is
rebuilt from its defining parameters at first use and self-checked:
the primes must pass irreducibility, the perfect entries must be fixed
points of the divisor sum, and conjugation must permute each family
exactly the way the partner tables say.

On top of the catalog sit the representation chain of an odd
polynomial, the k-step classification it induces, and the
admissibility test for families of odd primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .factorize import factor_over_family, is_irreducible
from .gf2poly import ONE, Poly, X, X1, _mul, bar, star, val_x, val_x1
from .sigma import is_perfect, sigma_prime_power

# Shape parameters (a, b) with Mi = 1 + x^a (x+1)^b.
MERSENNE_AB = {
    1: (1, 1),
    2: (1, 2),
    3: (2, 1),
    4: (1, 3),
    5: (3, 1),
    6: (3, 2),
    7: (3, 4),
    8: (6, 1),
    9: (2, 3),
    10: (4, 3),
    11: (1, 6),
    12: (1, 8),
    13: (8, 1),
}

# Shape parameters (a, b, c) with Sj = 1 + x^a (x+1)^b M1^c.
TWO_MERSENNE_ABN = {
    1: (1, 1, 1),
    2: (2, 2, 1),
    3: (1, 3, 4),
    4: (3, 1, 1),
    5: (1, 3, 1),
    6: (3, 1, 4),
    7: (1, 1, 3),
    8: (3, 3, 1),
    9: (1, 1, 5),
    10: (4, 1, 1),
    11: (1, 2, 1),
    12: (2, 1, 2),
    13: (1, 4, 1),
    14: (2, 1, 1),
    15: (1, 2, 2),
}

# Odd-index perfect entries as (a, b, catalog prime powers); the even
# index in each pair is the conjugate of its predecessor, which is how
# the family is defined in the first place.
PERFECT_SHAPES = {
    1: (2, 1, (("M1", 1),)),
    3: (4, 3, (("M4", 1),)),
    5: (4, 4, (("M4", 1), ("M5", 1))),
    6: (6, 3, (("M2", 1), ("M3", 1))),
    8: (4, 6, (("M2", 1), ("M3", 1), ("M4", 1))),
    10: (2, 1, (("M1", 2), ("S1", 1))),
}

BAR_MERSENNE = {
    1: 1, 2: 3, 3: 2, 4: 5, 5: 4, 6: 9, 9: 6,
    7: 10, 10: 7, 8: 11, 11: 8, 12: 13, 13: 12,
}
BAR_TWO_MERSENNE = {
    1: 1, 2: 2, 7: 7, 8: 8, 9: 9, 3: 6, 6: 3,
    4: 5, 5: 4, 10: 13, 13: 10, 11: 14, 14: 11, 12: 15, 15: 12,
}
BAR_PERFECT = {
    1: 2, 2: 1, 3: 4, 4: 3, 5: 5,
    6: 7, 7: 6, 8: 9, 9: 8, 10: 11, 11: 10,
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    poly: Poly
    kind: str  # "mersenne" | "two_mersenne" | "perfect"
    mersenne_params: tuple[int, int] | None
    two_mersenne_params: tuple[int, int, int] | None
    bar_partner: str

    def to_json(self) -> dict:
        params: tuple | None
        if self.kind == "mersenne":
            params = self.mersenne_params
        elif self.kind == "two_mersenne":
            params = self.two_mersenne_params
        else:
            params = None
        return {
            "name": self.name,
            "poly": self.poly.text(),
            "kind": self.kind,
            "params": list(params) if params is not None else None,
            "bar_partner": self.bar_partner,
        }


def _shape(a: int, b: int) -> Poly:
    """1 + x^a (x+1)^b."""
    return Poly(1 ^ _mul(1 << a, (X1**b).bits))


def mersenne(i: int) -> Poly:
    a, b = MERSENNE_AB[i]
    return _shape(a, b)


def two_mersenne(j: int) -> Poly:
    a, b, c = TWO_MERSENNE_ABN[j]
    return Poly(1 ^ _mul(_mul(1 << a, (X1**b).bits), (mersenne(1) ** c).bits))


def _perfect_poly(k: int, primes: dict[str, Poly]) -> Poly:
    if k in PERFECT_SHAPES:
        a, b, powers = PERFECT_SHAPES[k]
        bits = _mul(1 << a, (X1**b).bits)
        for name, exp in powers:
            bits = _mul(bits, (primes[name] ** exp).bits)
        return Poly(bits)
    return bar(_perfect_poly(BAR_PERFECT[k], primes))


class CatalogError(RuntimeError):
    """A self-check of the built-in catalog failed; the build is broken."""


@lru_cache(maxsize=1)
def catalog_constants() -> tuple[CatalogEntry, ...]:
    """All 39 catalog entries, rebuilt from parameters and self-checked."""
    entries: list[CatalogEntry] = []
    primes: dict[str, Poly] = {}
    for i, (a, b) in MERSENNE_AB.items():
        p = _shape(a, b)
        if not is_irreducible(p):
            raise CatalogError(f"M{i} = {p.text()} is not irreducible")
        primes[f"M{i}"] = p
        entries.append(
            CatalogEntry(f"M{i}", p, "mersenne", (a, b), None, f"M{BAR_MERSENNE[i]}")
        )
    for j, (a, b, c) in TWO_MERSENNE_ABN.items():
        p = two_mersenne(j)
        if not is_irreducible(p):
            raise CatalogError(f"S{j} = {p.text()} is not irreducible")
        primes[f"S{j}"] = p
        entries.append(
            CatalogEntry(
                f"S{j}", p, "two_mersenne", None, (a, b, c), f"S{BAR_TWO_MERSENNE[j]}"
            )
        )
    for k in range(1, 12):
        p = _perfect_poly(k, primes)
        if not is_perfect(p):
            raise CatalogError(f"T{k} = {p.text()} is not a divisor-sum fixed point")
        entries.append(
            CatalogEntry(f"T{k}", p, "perfect", None, None, f"T{BAR_PERFECT[k]}")
        )
    by = {e.name: e for e in entries}
    for e in entries:
        if bar(e.poly) != by[e.bar_partner].poly:
            raise CatalogError(f"conjugate of {e.name} is not {e.bar_partner}")
    total = sum(e.poly.degree for e in entries if e.kind != "perfect")
    if total != 184:
        raise CatalogError(f"prime degree sum is {total}, expected 184")
    return tuple(entries)


def by_name(name: str) -> CatalogEntry:
    for e in catalog_constants():
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}")


def name_of(p: Poly) -> str | None:
    """Catalog name of p, or None when p is not a catalog member."""
    return _bits_to_name().get(p.bits)


@lru_cache(maxsize=1)
def _bits_to_name() -> dict[int, str]:
    return {e.poly.bits: e.name for e in catalog_constants()}


def mersenne_family() -> tuple[Poly, ...]:
    return tuple(e.poly for e in catalog_constants() if e.kind == "mersenne")


def two_mersenne_family() -> tuple[Poly, ...]:
    return tuple(e.poly for e in catalog_constants() if e.kind == "two_mersenne")


def prime_family() -> tuple[Poly, ...]:
    return tuple(e.poly for e in catalog_constants() if e.kind != "perfect")


def perfect_family() -> tuple[Poly, ...]:
    return tuple(e.poly for e in catalog_constants() if e.kind == "perfect")


def family_degree_sum() -> int:
    return sum(p.degree for p in prime_family())


def catalog_json() -> list[dict]:
    return [e.to_json() for e in catalog_constants()]


# ---------------------------------------------------------------------------
# representation chains


def _is_odd_poly(p: Poly) -> bool:
    """No root at 0 or 1, i.e. coprime to x and to x+1."""
    return bool(p.bits & 1) and bool(p.bits.bit_count() & 1)


@dataclass(frozen=True)
class Representation:
    """Valuation chain of an odd polynomial.

    Pair j holds the x- and (x+1)-valuations of 1 + P_j, and P_{j+1}
    is the remaining cofactor; the chain stops when that cofactor is
    the constant 1.  The degrees telescope, so the pair entries sum to
    the degree of the original polynomial.
    """

    pairs: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.pairs)

    def text(self) -> str:
        inner = ",".join(f"[{a},{b}]" for a, b in self.pairs)
        return f"[{inner}] length={self.length}"


def representation(p: Poly) -> Representation:
    """Iterated extraction of linear-prime valuations from 1 + P."""
    if p.degree < 1:
        raise ValueError("constant polynomial has no representation")
    if not _is_odd_poly(p):
        raise ValueError("even polynomial has no representation")
    pairs = []
    q = p
    while q != ONE:
        r = q + ONE
        a = val_x(r)
        b = val_x1(r)
        q = r // Poly(_mul(1 << a, (X1**b).bits))
        pairs.append((a, b))
    return Representation(tuple(pairs))


def chain_length(p: Poly) -> int:
    return representation(p).length


@dataclass(frozen=True)
class Classification:
    """Chain length of an odd polynomial plus its shape parameters.

    k = 1 means the Mersenne shape 1 + x^a (x+1)^b, reported as
    (a, b).  k = 2 means a two-step chain; when the cofactor after the
    first step is a power of a single Mersenne prime M, the shape
    1 + x^a (x+1)^b M^c is reported as (a, b, M, c), otherwise the
    shape parameters are withheld and only k is reported.
    """

    k: int
    mersenne_params: tuple[int, int] | None = None
    two_mersenne_params: tuple[int, int, Poly, int] | None = None

    def text(self) -> str:
        if self.k == 1:
            a, b = self.mersenne_params
            return f"1-step (mersenne) a={a} b={b}"
        if self.k == 2 and self.two_mersenne_params is not None:
            a, b, m, c = self.two_mersenne_params
            return f"2-step over {m.text()}: a={a} b={b} c={c}"
        return f"{self.k}-step"


def classify(p: Poly) -> Classification:
    """Chain classification with recovered shape parameters."""
    rep = representation(p)
    if rep.length == 1:
        return Classification(k=1, mersenne_params=rep.pairs[0])
    if rep.length == 2:
        a, b = rep.pairs[0]
        a2, b2 = rep.pairs[1]
        # The cofactor is 1 + x^a2 (x+1)^b2.  It is a prime power only
        # when pulling out the full 2-power of gcd(a2, b2) leaves an
        # irreducible core: an irreducible 1 + x^r (x+1)^s never has r
        # and s both even, so no smaller root can work.
        t = ((a2 | b2) & -(a2 | b2)).bit_length() - 1
        base = _shape(a2 >> t, b2 >> t)
        if is_irreducible(base):
            return Classification(k=2, two_mersenne_params=(a, b, base, 1 << t))
        return Classification(k=2)
    return Classification(k=rep.length)


# ---------------------------------------------------------------------------
# admissibility


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    detail: tuple[str, ...]


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    closure: ConditionReport
    linear_tables: ConditionReport
    member_feedback: ConditionReport
    budget_note: str

    def text(self) -> str:
        lines = [f"admissible: {str(self.admissible).lower()}", self.budget_note]
        for label, cond in (
            ("closure under conjugate/reciprocal", self.closure),
            ("linear-prime divisor sums factor over family", self.linear_tables),
            ("member feedback through 1+T or divisor sums", self.member_feedback),
        ):
            lines.append(f"[{'ok' if cond.holds else 'fail'}] {label}")
            lines.extend(f"    {d}" for d in cond.detail)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "budget": self.budget_note,
            "conditions": {
                "closure": {
                    "holds": self.closure.holds,
                    "detail": list(self.closure.detail),
                },
                "linear_tables": {
                    "holds": self.linear_tables.holds,
                    "detail": list(self.linear_tables.detail),
                },
                "member_feedback": {
                    "holds": self.member_feedback.holds,
                    "detail": list(self.member_feedback.detail),
                },
            },
        }


def _label(p: Poly) -> str:
    return name_of(p) or p.text()


def admissibility_budget(family: tuple[Poly, ...], s: Poly) -> int:
    """Scan bound for divisor sums of s: degrees of family and catalog
    primes combined, divided by the degree of s^2."""
    seen = {q.bits for q in prime_family()} | {q.bits for q in family}
    total = sum(Poly(b).degree for b in seen)
    return max(1, total // (2 * s.degree))


def is_admissible(
    family, h_budget: int | None = None
) -> tuple[bool, AdmissibilityReport]:
    """Closure test for a family of odd primes.

    The family passes when any one of three conditions holds: (i) each
    member keeps its conjugate or its reciprocal inside the family,
    (ii) some divisor sum x^2h or (x+1)^2h factors entirely over the
    family, (iii) every member T feeds back into the family extended
    by the linear primes, through 1+T or through some divisor sum
    sigma(T^2h).  The existential h in (ii) and (iii) is scanned up to
    a degree-based budget unless an explicit h_budget overrides it.
    """
    members: list[Poly] = []
    seen: set[int] = set()
    for p in family:
        if not is_irreducible(p):
            raise ValueError(f"family member {p.text()} is reducible")
        if not _is_odd_poly(p):
            raise ValueError(f"family member {p.text()} is even")
        if p.bits not in seen:
            seen.add(p.bits)
            members.append(p)
    if not members:
        raise ValueError("family is empty")
    if h_budget is not None and h_budget < 1:
        raise ValueError("h_budget must be at least 1")
    fam = tuple(members)

    def budget(s: Poly) -> int:
        return h_budget if h_budget is not None else admissibility_budget(fam, s)

    closure_detail = []
    closure_ok = True
    for t in fam:
        if bar(t).bits in seen:
            closure_detail.append(f"{_label(t)}: conjugate stays in family")
        elif star(t).bits in seen:
            closure_detail.append(f"{_label(t)}: reciprocal stays in family")
        else:
            closure_detail.append(f"{_label(t)}: neither conjugate nor reciprocal")
            closure_ok = False

    linear_detail = []
    linear_ok = False
    for s in (X, X1):
        cap = budget(s)
        for h in range(1, cap + 1):
            if factor_over_family(sigma_prime_power(s, 2 * h), fam) is not None:
                linear_detail.append(
                    f"sigma({s.text()}^{2 * h}) factors over the family"
                )
                linear_ok = True
                break
        if linear_ok:
            break
    if not linear_ok:
        linear_detail.append("no divisor sum of x or x+1 factors within budget")

    extended = fam + (X, X1)
    feedback_detail = []
    feedback_ok = True
    for t in fam:
        if factor_over_family(t + ONE, extended) is not None:
            feedback_detail.append(f"{_label(t)}: 1+T factors over extended family")
            continue
        cap = budget(t)
        hit = None
        for h in range(1, cap + 1):
            if factor_over_family(sigma_prime_power(t, 2 * h), extended) is not None:
                hit = h
                break
        if hit is not None:
            feedback_detail.append(
                f"{_label(t)}: sigma(T^{2 * hit}) factors over extended family"
            )
        else:
            feedback_detail.append(f"{_label(t)}: no feedback within budget")
            feedback_ok = False

    if h_budget is not None:
        note = f"budget: fixed h <= {h_budget}"
    else:
        note = "budget: degree rule, h <= (combined degree)/(2 deg S) per base S"
    report = AdmissibilityReport(
        admissible=closure_ok or linear_ok or feedback_ok,
        closure=ConditionReport(closure_ok, tuple(closure_detail)),
        linear_tables=ConditionReport(linear_ok, tuple(linear_detail)),
        member_feedback=ConditionReport(feedback_ok, tuple(feedback_detail)),
        budget_note=note,
    )
    return report.admissible, report
