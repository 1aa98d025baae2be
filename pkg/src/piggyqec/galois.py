"""GF(2^r) arithmetic via log/antilog tables.

Addition is XOR; multiplication and division go through exp/log tables
built once per field from a primitive polynomial. Construction verifies
primitivity directly: x must generate all 2^r - 1 nonzero elements.
"""

from __future__ import annotations

# Conventional primitive polynomials, bit i = coefficient of x^i.
DEFAULT_PRIMITIVE_POLY = {
    2: 0b111,            # x^2 + x + 1
    3: 0b1011,           # x^3 + x + 1
    4: 0b10011,          # x^4 + x + 1
    5: 0b100101,         # x^5 + x^2 + 1
    6: 0b1000011,        # x^6 + x + 1
    7: 0b10000011,       # x^7 + x + 1
    8: 0b100011101,      # x^8 + x^4 + x^3 + x^2 + 1
}


class GaloisField:
    """The field GF(2^r) with a fixed primitive polynomial."""

    def __init__(self, r: int, primitive_polynomial: int | None = None):
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        if primitive_polynomial is None:
            try:
                primitive_polynomial = DEFAULT_PRIMITIVE_POLY[r]
            except KeyError:
                raise ValueError(f"no default polynomial for degree {r}") from None
        if primitive_polynomial.bit_length() != r + 1:
            raise ValueError(
                f"polynomial 0b{primitive_polynomial:b} does not have degree {r}"
            )
        self.r = r
        self.primitive_polynomial = primitive_polynomial
        self.size = 1 << r
        self.order = self.size - 1

        # exp table doubled so products of two logs never need a modulo.
        exp = [0] * (2 * self.order)
        log = [0] * self.size
        x = 1
        for i in range(self.order):
            if x == 1 and i > 0:
                raise ValueError(
                    f"0b{primitive_polynomial:b} is not primitive: "
                    f"x has order {i} < {self.order}"
                )
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.size:
                x ^= primitive_polynomial
        if x != 1:
            raise ValueError(f"0b{primitive_polynomial:b} is not primitive")
        for i in range(self.order, 2 * self.order):
            exp[i] = exp[i - self.order]
        self.exp = exp
        self.log = log

    def _check(self, a: int) -> None:
        if not 0 <= a < self.size:
            raise ValueError(f"symbol {a} out of range for GF({self.size})")

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def div(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if b == 0:
            raise ZeroDivisionError("division by zero in GF")
        if a == 0:
            return 0
        return self.exp[self.log[a] - self.log[b] + self.order]

    def inv(self, a: int) -> int:
        return self.div(1, a)

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        return self.exp[(self.log[a] * e) % self.order]

    def alpha_pow(self, e: int) -> int:
        """Power of the generator element alpha = x."""
        return self.exp[e % self.order]

    def __repr__(self) -> str:
        return f"GaloisField(r={self.r}, poly=0b{self.primitive_polynomial:b})"
