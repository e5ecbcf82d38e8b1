"""Exact arithmetic for the finite fields GF(p) and GF(2^k).

Field elements are plain Python ints ("codes"): the residue 0..p-1 for a
prime field, or the coefficient bitmask for a binary extension field
(bit i holds the coefficient of x^i). Zero and one are always the ints
0 and 1, so element equality, hashing and serialization need no wrapper
type. A FieldSpec validates its parameters once at construction and then
performs all arithmetic on codes.

The default modulus for GF(2^k) is the irreducible polynomial of degree
k with the smallest coefficient mask, a fixed table so that independent
implementations agree byte-for-byte:

    k=1   x                  0x2        k=9    x^9+x+1            0x203
    k=2   x^2+x+1            0x7        k=10   x^10+x^3+1         0x409
    k=3   x^3+x+1            0xB        k=11   x^11+x^2+1         0x805
    k=4   x^4+x+1            0x13       k=12   x^12+x^3+1         0x1009
    k=5   x^5+x^2+1          0x25       k=13   x^13+x^4+x^3+x+1   0x201B
    k=6   x^6+x+1            0x43       k=14   x^14+x^5+1         0x4021
    k=7   x^7+x+1            0x83       k=15   x^15+x+1           0x8003
    k=8   x^8+x^4+x^3+x+1    0x11B      k=16   x^16+x^5+x^3+x+1   0x1002B

Any other irreducible polynomial of the right degree may be passed in
explicitly (e.g. the mask 0x11D for the Reed-Solomon flavour of GF(2^8)).

Field notation used by files and the CLI: ``gf(p)`` for prime fields and
``gf(2^k;0xMASK)`` for binary fields (``gf(2^k)`` selects the default
modulus). Parsing is case-insensitive and whitespace-free.
"""

from __future__ import annotations

import re

PRIME = "prime"
BINARY = "binary"

#: Exclusive upper bound on the prime p; keeps every code in 16 bits.
MAX_PRIME = 1 << 16
#: Largest supported extension degree for GF(2^k).
MAX_DEGREE = 16

DEFAULT_MODULUS = {
    1: 0x2,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}


class FieldError(ValueError):
    """Invalid field description."""


class NotPrimeError(FieldError):
    """Requested prime field with a composite characteristic."""


class ReduciblePolynomialError(FieldError):
    """Modulus polynomial factors over GF(2)."""


class DegreeMismatchError(FieldError):
    """Modulus polynomial degree differs from the extension degree."""


class UnsupportedSizeError(FieldError):
    """Field size outside the supported range."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mod(a: int, m: int) -> int:
    """Remainder of the GF(2) polynomial a modulo m."""
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _poly_mulmod(a: int, b: int, m: int) -> int:
    """Carry-less multiply of a and b, reduced modulo m."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    return _poly_mod(r, m)


def _is_irreducible(mask: int, k: int) -> bool:
    """Trial division by every polynomial of degree 1..k//2."""
    for d in range(1, k // 2 + 1):
        for t in range(1 << d, 1 << (d + 1)):
            if _poly_mod(mask, t) == 0:
                return False
    return True


class FieldSpec:
    """A finite field GF(p) or GF(2^k), operating on int element codes.

    Immutable after construction; all methods are pure functions of their
    arguments, so a FieldSpec may be shared freely across threads.
    """

    __slots__ = ("kind", "characteristic", "degree", "modulus", "order",
                 "_exp", "_log")

    def __init__(self, kind: str, size: int, modulus: int | None = None):
        """Build GF(size) for kind PRIME, or GF(2^size) for kind BINARY."""
        if kind == PRIME:
            if modulus is not None:
                raise FieldError("prime fields take no modulus polynomial")
            if size >= MAX_PRIME:
                raise UnsupportedSizeError(f"prime {size} is >= 2^16")
            if not _is_prime(size):
                raise NotPrimeError(f"{size} is not prime")
            self.characteristic = size
            self.degree = 1
            self.modulus = None
            self.order = size
        elif kind == BINARY:
            if not 1 <= size <= MAX_DEGREE:
                raise UnsupportedSizeError(
                    f"extension degree {size} outside 1..{MAX_DEGREE}")
            if modulus is None:
                modulus = DEFAULT_MODULUS[size]
            if modulus.bit_length() - 1 != size:
                raise DegreeMismatchError(
                    f"modulus 0x{modulus:x} has degree {modulus.bit_length() - 1}, "
                    f"expected {size}")
            if not _is_irreducible(modulus, size):
                raise ReduciblePolynomialError(
                    f"modulus 0x{modulus:x} is reducible over GF(2)")
            self.characteristic = 2
            self.degree = size
            self.modulus = modulus
            self.order = 1 << size
        else:
            raise FieldError(f"unknown field kind {kind!r}")
        self.kind = kind
        self._exp: list[int] | None = None
        self._log: list[int] | None = None

    # ------------------------------------------------------------------
    # identity / notation
    # ------------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and self.kind == other.kind
                and self.order == other.order
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.kind, self.order, self.modulus))

    def __str__(self):
        if self.kind == PRIME:
            return f"gf({self.characteristic})"
        return f"gf(2^{self.degree};0x{self.modulus:x})"

    def __repr__(self):
        return f"FieldSpec({self})"

    def elements(self) -> range:
        """All element codes 0 .. order-1."""
        return range(self.order)

    def validate_code(self, code) -> None:
        """Raise ValueError unless code is a canonical element of this field."""
        if not isinstance(code, int) or isinstance(code, bool):
            raise ValueError(f"element code must be an int, got {code!r}")
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for {self}")

    # ------------------------------------------------------------------
    # arithmetic on codes
    # ------------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.kind == PRIME:
            return (a + b) % self.characteristic
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        if self.kind == PRIME:
            return (a - b) % self.characteristic
        return a ^ b

    def neg(self, a: int) -> int:
        if self.kind == PRIME:
            return (-a) % self.characteristic
        return a

    def mul(self, a: int, b: int) -> int:
        if self.kind == PRIME:
            return (a * b) % self.characteristic
        if self.order == 2:
            return a & b
        if a == 0 or b == 0:
            return 0
        exp, log = self._mul_tables()
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no multiplicative inverse in {self}")
        if self.kind == PRIME:
            return pow(a, self.characteristic - 2, self.characteristic)
        if self.order == 2:
            return 1
        exp, log = self._mul_tables()
        return exp[self.order - 1 - log[a]]

    # ------------------------------------------------------------------
    # log/exp tables (binary fields with order > 2)
    # ------------------------------------------------------------------
    def _mul_tables(self):
        """Discrete log/antilog tables w.r.t. the smallest generator.

        Built lazily on first multiplication; the exp table is doubled so
        exp[log[a] + log[b]] never needs a modular reduction.
        """
        if self._exp is None:
            q = self.order
            g = self._find_generator()
            exp = [1] * (2 * (q - 1))
            log = [0] * q
            v = 1
            for i in range(q - 1):
                exp[i] = v
                exp[i + q - 1] = v
                log[v] = i
                v = _poly_mulmod(v, g, self.modulus)
            # _exp is the guard: set _log first so a concurrent reader
            # that sees _exp non-None also sees _log
            self._log = log
            self._exp = exp
        return self._exp, self._log

    def _pow_raw(self, base: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = _poly_mulmod(r, base, self.modulus)
            base = _poly_mulmod(base, base, self.modulus)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.order - 1
        factors = []
        m, d = n, 2
        while d * d <= m:
            if m % d == 0:
                factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            factors.append(m)
        for g in range(2, self.order):
            if all(self._pow_raw(g, n // f) != 1 for f in factors):
                return g
        raise AssertionError(f"no generator found for {self}")


def prime_field(p: int) -> FieldSpec:
    """GF(p) for a prime p < 2^16."""
    return FieldSpec(PRIME, p)


def binary_field(k: int, modulus: int | None = None) -> FieldSpec:
    """GF(2^k) for 1 <= k <= 16, with the table default or a given modulus."""
    return FieldSpec(BINARY, k, modulus)


_PRIME_RE = re.compile(r"gf\((\d+)\)")
_BINARY_RE = re.compile(r"gf\(2\^(\d+)(?:;0x([0-9a-f]+))?\)")


def parse_field(text: str) -> FieldSpec:
    """Parse field notation: gf(p), gf(2^k) or gf(2^k;0xMASK)."""
    s = text.strip().lower()
    m = _BINARY_RE.fullmatch(s)
    if m:
        mask = int(m.group(2), 16) if m.group(2) else None
        return binary_field(int(m.group(1)), mask)
    m = _PRIME_RE.fullmatch(s)
    if m:
        return prime_field(int(m.group(1)))
    raise FieldError(f"cannot parse field notation {text!r}")
