"""Dense arithmetic for polynomials over the two-element field.

A polynomial is stored as a nonnegative Python integer: bit i of the
integer is the coefficient of x^i, so the constant term sits in bit 0
and the integer 0b111 = 7 is x^2 + x + 1.  With this little-endian
packing, addition is XOR, squaring spreads the bits apart, the
valuation at x is a trailing-zero count and the reciprocal is a plain
bit reversal.

The public type is the immutable :class:`Poly`.  Raw-integer helpers
(prefixed with an underscore) carry the hot loops; they are shared by
the factoring and search layers, which sometimes work on bare ints to
avoid wrapper churn.

Two structural maps beyond ring arithmetic appear throughout the
package: ``bar`` substitutes x by x+1 (an involutive automorphism) and
``star`` reverses the coefficient string (the reciprocal polynomial).
"""

from __future__ import annotations

NEG_INF = float("-inf")

# Degree above which multiplication switches from the shift-XOR
# schoolbook loop to the guard-bit integer product.  Both paths are
# exercised and compared by the test suite.
_CLMUL_THRESHOLD = 256


class PolyParseError(ValueError):
    """Raised for malformed polynomial text; carries the bad offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


# ---------------------------------------------------------------------------
# raw-integer kernels


def _degree(a):
    return a.bit_length() - 1 if a else NEG_INF


def _mul_schoolbook(a, b):
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _mul_clmul(a, b):
    # Carry-less product via one big integer multiplication.  Each
    # coefficient is given a 16-bit lane; a column sum never exceeds
    # min(len(a), len(b)) so lanes cannot overflow for any operand
    # below 2^65535 bits, far beyond anything this package touches.
    na = a.bit_length()
    nb = b.bit_length()
    wide_a = 0
    i = 0
    while a:
        if a & 1:
            wide_a |= 1 << (i << 4)
        a >>= 1
        i += 1
    wide_b = 0
    i = 0
    while b:
        if b & 1:
            wide_b |= 1 << (i << 4)
        b >>= 1
        i += 1
    prod = wide_a * wide_b
    nlanes = na + nb - 1
    raw = prod.to_bytes(2 * nlanes + 2, "little")
    c = 0
    for k in range(nlanes):
        if raw[2 * k] & 1:
            c |= 1 << k
    return c


def _mul(a, b):
    if a == 0 or b == 0:
        return 0
    if a.bit_length() > _CLMUL_THRESHOLD and b.bit_length() > _CLMUL_THRESHOLD:
        return _mul_clmul(a, b)
    return _mul_schoolbook(a, b)


def _divmod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = b.bit_length()
    q = 0
    m = a.bit_length()
    while m >= n:
        shift = m - n
        a ^= b << shift
        q |= 1 << shift
        m = a.bit_length()
    return q, a


def _mod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = b.bit_length()
    m = a.bit_length()
    while m >= n:
        a ^= b << (m - n)
        m = a.bit_length()
    return a


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


def _square(a):
    c = 0
    i = 0
    while a:
        if a & 1:
            c |= 1 << (i << 1)
        a >>= 1
        i += 1
    return c


def _sqrt(a):
    # Inverse of _square; valid only when all set bits sit at even
    # positions (callers check via the derivative).
    c = 0
    k = 0
    while a:
        if a & 1:
            c |= 1 << k
        a >>= 2
        k += 1
    return c


def _derivative(a):
    n = a.bit_length()
    if n & 1:
        n += 1
    mask = ((1 << n) - 1) // 3  # 0b0101...01
    return (a >> 1) & mask


def _powmod(base, e, modulus):
    result = 1
    base = _mod(base, modulus)
    while e:
        if e & 1:
            result = _mod(_mul(result, base), modulus)
        e >>= 1
        if e:
            base = _mod(_square(base), modulus)
    return result


def _bar(a):
    # Substitute x by x+1, divide and conquer on the bit string:
    # with a = hi * x^(2^k) + lo one has
    # bar(a) = bar(hi) * (x+1)^(2^k) + bar(lo)
    #        = (bar(hi) << 2^k) ^ bar(hi) ^ bar(lo).
    if a < 2:
        return a
    k = 1
    while (k << 1) < a.bit_length():
        k <<= 1
    hi = _bar(a >> k)
    lo = _bar(a & ((1 << k) - 1))
    return (hi << k) ^ hi ^ lo


def _reverse(a):
    c = 0
    while a:
        c = (c << 1) | (a & 1)
        a >>= 1
    return c


# ---------------------------------------------------------------------------
# the value type


class Poly:
    """An immutable polynomial over GF(2), packed into an int."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        if isinstance(bits, Poly):
            bits = bits.bits
        if not isinstance(bits, int) or bits < 0:
            raise TypeError("Poly wants a nonnegative int bit-vector")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def parse(cls, text):
        """Read a polynomial from canonical text or from hex form.

        The grammar is a '+'-separated sum of terms "1", "x" or "x^k"
        with decimal k >= 2; repeated terms cancel in pairs.  A string
        starting with "0x" is read as the coefficient bits instead,
        lowest hex digit first.  The single term "0" denotes the zero
        polynomial.
        """
        if not isinstance(text, str):
            raise PolyParseError("polynomial text must be a string", 0)
        stripped = text.strip()
        if not stripped:
            raise PolyParseError("empty polynomial text", 0)
        if stripped.lower().startswith("0x"):
            try:
                return cls(int(stripped, 16))
            except ValueError:
                raise PolyParseError("malformed hex polynomial", text.find("0x")) from None
        if stripped == "0":
            return cls(0)
        bits = 0
        pos = 0
        for piece in text.split("+"):
            term = piece.strip()
            offset = pos + piece.index(term) if term else pos
            if not term:
                raise PolyParseError("empty term", offset)
            if term == "1":
                exponent = 0
            elif term == "x":
                exponent = 1
            elif term.startswith("x^"):
                digits = term[2:]
                if not digits.isdigit():
                    raise PolyParseError(f"malformed exponent {digits!r}", offset + 2)
                exponent = int(digits)
                if exponent < 2:
                    raise PolyParseError("exponents below 2 must be written as 1 or x", offset + 2)
            else:
                raise PolyParseError(f"malformed term {term!r}", offset)
            bits ^= 1 << exponent
            pos += len(piece) + 1
        return cls(bits)

    @classmethod
    def monomial(cls, k):
        """x^k."""
        if k < 0:
            raise ValueError("negative exponent")
        return cls(1 << k)

    # -- rendering ---------------------------------------------------------

    def text(self):
        """Canonical text: strictly decreasing exponents, "0" for zero."""
        a = self.bits
        if a == 0:
            return "0"
        terms = []
        for i in range(a.bit_length() - 1, -1, -1):
            if (a >> i) & 1:
                if i == 0:
                    terms.append("1")
                elif i == 1:
                    terms.append("x")
                else:
                    terms.append(f"x^{i}")
        return "+".join(terms)

    def hex(self):
        """Compact coefficient-bits form, e.g. "0x7" for x^2+x+1."""
        return hex(self.bits)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Poly({self.text()!r})"

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        return _degree(self.bits)

    def is_zero(self):
        return self.bits == 0

    def is_one(self):
        return self.bits == 1

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        return isinstance(other, Poly) and self.bits == other.bits

    def __hash__(self):
        return hash(("gf2perfect.Poly", self.bits))

    def __lt__(self, other):
        # Degree first, then little-endian coefficient value; for this
        # packing both collapse to plain integer comparison.
        return self.bits < other.bits

    def __le__(self, other):
        return self.bits <= other.bits

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        return Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        return Poly(_mul(self.bits, other.bits))

    def __divmod__(self, other):
        q, r = _divmod(self.bits, other.bits)
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return Poly(_divmod(self.bits, other.bits)[0])

    def __mod__(self, other):
        return Poly(_mod(self.bits, other.bits))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if e == 0:
            if self.bits == 0:
                raise ValueError("0**0 is undefined here")
            return ONE
        result = 1
        base = self.bits
        while e:
            if e & 1:
                result = _mul(result, base)
            e >>= 1
            if e:
                base = _square(base)
        return Poly(result)


# ---------------------------------------------------------------------------
# module-level operations (the names the rest of the package uses)


def add(a: Poly, b: Poly) -> Poly:
    """Sum of two polynomials (XOR of coefficient vectors)."""
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    """Product of two polynomials."""
    return a * b


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of a by nonzero b, deg r < deg b."""
    return divmod(a, b)


def gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor (monic for free over GF(2))."""
    return Poly(_gcd(a.bits, b.bits))


def power(a: Poly, e: int) -> Poly:
    """a raised to a nonnegative integer exponent."""
    return a ** e


def derivative(a: Poly) -> Poly:
    """Formal derivative; in characteristic 2 even-power terms vanish."""
    return Poly(_derivative(a.bits))


def bar(a: Poly) -> Poly:
    """Substitute x by x+1.  An involution and a ring automorphism."""
    return Poly(_bar(a.bits))


def star(a: Poly) -> Poly:
    """The reciprocal x^deg(a) * a(1/x): reverse the coefficient string."""
    if a.bits == 0:
        raise ValueError("the zero polynomial has no reciprocal")
    return Poly(_reverse(a.bits))


def val_x(a: Poly) -> int:
    """Multiplicity of x in a, i.e. the index of the lowest set bit."""
    if a.bits == 0:
        raise ValueError("valuation of the zero polynomial")
    return (a.bits & -a.bits).bit_length() - 1


def val_x1(a: Poly) -> int:
    """Multiplicity of x+1 in a."""
    if a.bits == 0:
        raise ValueError("valuation of the zero polynomial")
    return val_x(bar(a))


def is_even(a: Poly) -> bool:
    """True when x or x+1 divides a (a has a linear factor)."""
    if a.bits == 0:
        raise ValueError("parity of the zero polynomial")
    # x divides a iff the constant term is 0; x+1 divides a iff a(1) = 0,
    # i.e. the number of set bits is even.
    return (a.bits & 1) == 0 or (a.bits.bit_count() & 1) == 0


def is_odd(a: Poly) -> bool:
    """True when a has no linear factor."""
    return not is_even(a)


ZERO = Poly(0)
ONE = Poly(1)
X = Poly(2)
X1 = Poly(3)  # x + 1
