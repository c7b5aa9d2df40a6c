"""The divisor-sum function and the exponent calculus behind it.

For an irreducible P, sigma(P^e) is the geometric sum 1 + P + ... + P^e.
Writing e = 2^t * s - 1 with s odd gives the factored form

    sigma(P^e) = (1 + P)^(2^t - 1) * sigma(P^(s-1))^(2^t),

which the search layer leans on: it turns divisor sums of huge prime
powers into data about small ones.  Both evaluation routes are public
and must agree bit for bit.

The second half of the module is symbolic.  A candidate perfect
polynomial is described by an ExponentTuple (the 2-adic shape of every
exponent in its factorization over the fixed catalog families), and
SigmaExponents gives the exponent of each catalog prime in sigma of
that candidate as a closed integer formula.  No polynomial arithmetic
is involved there, which is what makes the exhaustive search cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factorize import FactorMap, factor_full, is_irreducible
from .gf2poly import ONE, Poly, X1, _mul, _square, bar

US = (1, 3, 5, 7, 9, 13, 15)
U1S = (1, 3, 5, 7, 15)
U23S = (1, 3)


def decompose_exponent(e: int) -> tuple[int, int]:
    """Write e = 2^t * s - 1 with s odd; return (t, s).

    This is the 2-adic valuation of e + 1 and its odd part, computed
    with bit arithmetic so it stays exact for any size.
    """
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    k = e + 1
    t = (k & -k).bit_length() - 1
    return t, k >> t


def sigma_prime_power(p: Poly, e: int) -> Poly:
    """sigma(p^e) = 1 + p + ... + p^e for irreducible p, by Horner."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if not is_irreducible(p):
        raise ValueError(f"{p.text()} is not irreducible")
    acc = 1
    for _ in range(e):
        acc = _mul(acc, p.bits) ^ 1
    return Poly(acc)


def sigma_prime_power_split(p: Poly, e: int) -> Poly:
    """sigma(p^e) through the factored form, agreeing with the direct sum."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if not is_irreducible(p):
        raise ValueError(f"{p.text()} is not irreducible")
    return _sigma_pp_split_unchecked(p, e)


def _sigma_pp_split_unchecked(p: Poly, e: int) -> Poly:
    if e == 0:
        return ONE
    t, s = decompose_exponent(e)
    outer = (p + ONE) ** (2**t - 1)
    acc = 1
    for _ in range(s - 1):
        acc = _mul(acc, p.bits) ^ 1
    inner = acc
    for _ in range(t):
        inner = _square(inner)
    return Poly(_mul(outer.bits, inner))


def sigma(a: Poly) -> Poly:
    """Sum of all divisors; multiplicative over the factorization."""
    if a.bits == 0:
        raise ValueError("sigma of the zero polynomial")
    bits = 1
    for prime, exp in factor_full(a):
        bits = _mul(bits, _sigma_pp_split_unchecked(prime, exp).bits)
    return Poly(bits)


def sigma_of_factor_map(fm: FactorMap) -> Poly:
    """Sum of divisors straight from a known factorization."""
    bits = 1
    for prime, exp in fm:
        bits = _mul(bits, _sigma_pp_split_unchecked(prime, exp).bits)
    return Poly(bits)


def is_perfect(a: Poly) -> bool:
    """True when sigma(a) + a = 0."""
    if a.bits == 0:
        raise ValueError("perfection of the zero polynomial")
    return sigma(a).bits == a.bits


MAX_OMEGA_FOR_DECOMPOSITION = 30


def is_indecomposable_perfect(a: Poly) -> bool:
    """True when no coprime bipartition of a splits it into two perfects.

    Requires a perfect input.  Decides by walking every bipartition of
    the prime-power factors; both sides of a bipartition are coprime
    and nonconstant by construction, so each check is a plain sigma
    fixed-point test on the side's known factorization.
    """
    fm = factor_full(a)
    sig = sigma_of_factor_map(fm)
    if sig.bits != a.bits:
        raise ValueError("input is not perfect")
    w = fm.omega
    if w > MAX_OMEGA_FOR_DECOMPOSITION:
        raise ValueError(f"too many distinct factors ({w}) for bipartition search")
    if w < 2:
        return True
    entries = list(fm.entries)
    powers = [(p ** e).bits for p, e in entries]
    sigmas = [_sigma_pp_split_unchecked(p, e).bits for p, e in entries]
    # Fix factor 0 on the left side so each unordered bipartition is
    # visited once.
    for mask in range(1, 1 << (w - 1)):
        left = right = 1
        sleft = sright = 1
        for i in range(w):
            if i == 0 or (mask >> (i - 1)) & 1:
                left = _mul(left, powers[i])
                sleft = _mul(sleft, sigmas[i])
            else:
                right = _mul(right, powers[i])
                sright = _mul(sright, sigmas[i])
        if right != 1 and left == sleft and right == sright:
            return False
    return True


# ---------------------------------------------------------------------------
# symbolic exponent calculus


def chi(w: int, t: int) -> int:
    """Indicator of the singleton {w}."""
    return 1 if t == w else 0


@dataclass(frozen=True)
class IndicatorProfile:
    """The four indicator sums the closed formulas share."""

    xi1: int
    xi2: int
    xi3: int
    xi4: int

    def __post_init__(self):
        for name in ("xi1", "xi2", "xi3", "xi4"):
            value = getattr(self, name)
            # The indicator argument sets are disjoint, so each sum is
            # 0 or 1 even though three terms are added.
            if not 0 <= value <= 1:
                raise ValueError(f"{name} = {value} escapes {{0, 1}}")

    @classmethod
    def of(cls, u: int, v: int) -> "IndicatorProfile":
        return cls(
            xi1=chi(3, u) + chi(9, u) + chi(15, u),
            xi2=chi(3, v) + chi(9, v) + chi(15, v),
            xi3=chi(5, u) + chi(15, u),
            xi4=chi(5, v) + chi(15, v),
        )


@dataclass(frozen=True)
class ExponentTuple:
    """2-adic shape of a candidate's exponents over the catalog.

    The candidate is x^a (x+1)^b * prod Mi^ci * prod Sj^dj with
    a = 2^n u - 1, b = 2^m v - 1, ci = 2^(ni) ui - 1 and
    dj = 2^(mj) vj - 1, all the u's and v's odd.  Only the first five
    Mersenne and first eight 2-Mersenne slots can carry a nonzero
    exponent for a perfect candidate, so that is all this records.
    """

    n: int
    u: int
    m: int
    v: int
    ni: tuple[int, int, int, int, int]
    ui: tuple[int, int, int, int, int]
    mj: tuple[int, int, int, int, int, int, int, int]
    vj: tuple[int, int, int, int, int, int, int, int]

    @property
    def a(self) -> int:
        return 2**self.n * self.u - 1

    @property
    def b(self) -> int:
        return 2**self.m * self.v - 1

    @property
    def c(self) -> tuple[int, ...]:
        return tuple(2**n * u - 1 for n, u in zip(self.ni, self.ui))

    @property
    def d(self) -> tuple[int, ...]:
        return tuple(2**m * v - 1 for m, v in zip(self.mj, self.vj))

    def validate(self, relax_tail: bool = False) -> None:
        """Check the search domain bounds; name the violated one.

        With relax_tail the slots past the first divisor-sum index are
        allowed the same room as the first one (exponent cap 3, odd
        part 1 or 3) instead of the tight default (cap 1, odd part 1).
        """
        if self.u not in US:
            self._bad(f"u = {self.u} not in {US}")
        if self.v not in US:
            self._bad(f"v = {self.v} not in {US}")
        if not 0 <= self.n <= 4:
            self._bad(f"n = {self.n} exceeds 4")
        if not 0 <= self.m <= 4:
            self._bad(f"m = {self.m} exceeds 4")
        if self.ui[0] not in U1S:
            self._bad(f"u1 = {self.ui[0]} not in {U1S}")
        if self.ui[1] not in U23S or self.ui[2] not in U23S:
            self._bad(f"u2, u3 = {self.ui[1]}, {self.ui[2]} not in {U23S}")
        if self.ui[3] != 1 or self.ui[4] != 1:
            self._bad(f"u4, u5 = {self.ui[3]}, {self.ui[4]} must be 1")
        if not 0 <= self.ni[0] <= 4:
            self._bad(f"n1 = {self.ni[0]} exceeds 4")
        if not (0 <= self.ni[1] <= 3 and 0 <= self.ni[2] <= 3):
            self._bad(f"n2, n3 = {self.ni[1]}, {self.ni[2]} exceed 3")
        if not (0 <= self.ni[3] <= 5 and 0 <= self.ni[4] <= 5):
            self._bad(f"n4, n5 = {self.ni[3]}, {self.ni[4]} exceed 5")
        if self.vj[0] not in U23S:
            self._bad(f"v1 = {self.vj[0]} not in {U23S}")
        if not 0 <= self.mj[0] <= 3:
            self._bad(f"m1 = {self.mj[0]} exceeds 3")
        tail_m_cap = 3 if relax_tail else 1
        tail_v = U23S if relax_tail else (1,)
        for j in range(1, 8):
            if self.vj[j] not in tail_v:
                self._bad(f"v{j + 1} = {self.vj[j]} not in {tail_v}")
            if not 0 <= self.mj[j] <= tail_m_cap:
                self._bad(f"m{j + 1} = {self.mj[j]} exceeds {tail_m_cap}")

    @staticmethod
    def _bad(message: str):
        raise ValueError(f"exponent tuple out of domain: {message}")

    @classmethod
    def from_parts(cls, n=0, u=1, m=0, v=1, ni=None, ui=None, mj=None, vj=None):
        return cls(
            n=n,
            u=u,
            m=m,
            v=v,
            ni=tuple(ni) if ni else (0,) * 5,
            ui=tuple(ui) if ui else (1,) * 5,
            mj=tuple(mj) if mj else (0,) * 8,
            vj=tuple(vj) if vj else (1,) * 8,
        )


@dataclass(frozen=True)
class SigmaExponents:
    """Exponents of x, x+1 and each catalog prime in sigma(candidate)."""

    alpha: int
    beta: int
    gamma: tuple[int, int, int, int, int]
    delta: tuple[int, int, int, int, int, int, int, int]


def sigma_exponents(t: ExponentTuple, relax_tail: bool = False) -> SigmaExponents:
    """Closed-form exponents of sigma of the candidate described by t.

    Pure integer arithmetic over the catalog shape parameters.  The
    test suite pins every formula against exponents read off an actual
    factorization of sigma, which is the ground truth here; in
    particular the last two delta formulas are the ones that
    factorization forces (delta7 tracks chi_15 alone and delta8 the
    chi_5 + chi_15 sum).

    relax_tail is forwarded to the domain validation; the formulas
    themselves do not depend on it.
    """
    from .catalog import MERSENNE_AB, TWO_MERSENNE_ABN

    t.validate(relax_tail)
    n, u, m, v = t.n, t.u, t.m, t.v
    n1, n2, n3 = t.ni[0], t.ni[1], t.ni[2]
    u1, u2, u3 = t.ui[0], t.ui[1], t.ui[2]
    m1 = t.mj[0]
    v1 = t.vj[0]
    prof = IndicatorProfile.of(u, v)

    alpha = 2**m - 1
    beta = 2**n - 1
    for i in range(1, 6):
        ai, bi = MERSENNE_AB[i]
        alpha += (2 ** t.ni[i - 1] - 1) * ai
        beta += (2 ** t.ni[i - 1] - 1) * bi
    gamma1 = 0
    for j in range(1, 9):
        aj, bj, nuj = TWO_MERSENNE_ABN[j]
        alpha += (2 ** t.mj[j - 1] - 1) * aj
        beta += (2 ** t.mj[j - 1] - 1) * bj
        gamma1 += (2 ** t.mj[j - 1] - 1) * nuj
    gamma1 += (
        prof.xi1 * 2**n
        + prof.xi2 * 2**m
        + chi(3, u2) * 2**n2
        + chi(3, u3) * 2**n3
    )
    gamma2 = chi(7, u) * 2**n + chi(7, v) * 2**m + chi(7, u1) * 2**n1
    gamma4 = (
        prof.xi3 * 2**n
        + chi(15, v) * 2**m
        + chi(15, u1) * 2**n1
        + chi(3, u3) * 2**n3
        + chi(3, v1) * 2**m1
    )
    gamma5 = (
        chi(15, u) * 2**n
        + prof.xi4 * 2**m
        + chi(15, u1) * 2**n1
        + chi(3, u2) * 2**n2
        + chi(3, v1) * 2**m1
    )
    delta = (
        chi(15, u) * 2**n + chi(15, v) * 2**m + (chi(3, u1) + chi(15, u1)) * 2**n1,
        chi(7, u1) * 2**n1,
        chi(13, u) * 2**n,
        chi(9, u) * 2**n,
        chi(9, v) * 2**m,
        chi(13, v) * 2**m,
        chi(15, u1) * 2**n1,
        (chi(5, u1) + chi(15, u1)) * 2**n1,
    )
    return SigmaExponents(
        alpha=alpha,
        beta=beta,
        gamma=(gamma1, gamma2, gamma2, gamma4, gamma5),
        delta=delta,
    )


def assemble(t: ExponentTuple) -> Poly:
    """Materialize the candidate x^a (x+1)^b prod Mi^ci prod Sj^dj."""
    from .catalog import mersenne, two_mersenne

    bits = 1 << t.a
    bits = _mul(bits, (X1 ** t.b).bits)
    for i, ci in enumerate(t.c, start=1):
        if ci:
            bits = _mul(bits, (mersenne(i) ** ci).bits)
    for j, dj in enumerate(t.d, start=1):
        if dj:
            bits = _mul(bits, (two_mersenne(j) ** dj).bits)
    return Poly(bits)


def sigma_of_tuple(t: ExponentTuple) -> Poly:
    """sigma of the candidate, from its known factorization."""
    from .catalog import mersenne, two_mersenne

    bits = _sigma_pp_split_unchecked(Poly(2), t.a).bits
    bits = _mul(bits, _sigma_pp_split_unchecked(X1, t.b).bits)
    for i, ci in enumerate(t.c, start=1):
        if ci:
            bits = _mul(bits, _sigma_pp_split_unchecked(mersenne(i), ci).bits)
    for j, dj in enumerate(t.d, start=1):
        if dj:
            bits = _mul(bits, _sigma_pp_split_unchecked(two_mersenne(j), dj).bits)
    return Poly(bits)


def trivial_perfect(n: int) -> Poly:
    """The splitting perfect x^(2^n - 1) (x+1)^(2^n - 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    e = 2**n - 1
    return Poly(_mul(1 << e, (X1**e).bits))


def sigma_check_bar_symmetry(a: Poly) -> bool:
    """sigma commutes with the conjugation automorphism."""
    return sigma(bar(a)) == bar(sigma(a))
