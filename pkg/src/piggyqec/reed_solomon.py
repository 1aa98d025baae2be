"""Reed-Solomon codec RS(N, K) over GF(2^r), N = 2^r - 1.

Systematic narrow-sense construction: the generator polynomial has roots
alpha^1 .. alpha^2T, parity symbols occupy the low-order coefficient
positions 0..2T-1 and the message appears verbatim at positions 2T..N-1
(position i = coefficient of x^i).

Decoding is bounded-distance: syndromes, Berlekamp-Massey for the error
locator, Chien-style root search, Forney magnitudes. When the locator
degree exceeds T, the root count disagrees, or the corrected word still
has nonzero syndromes, decoding reports failure as a value (None) rather
than raising; callers decide what a failure means.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import GaloisField


@dataclass(frozen=True)
class DecodeResult:
    """Successful decode: recovered message and the positions changed."""

    message: tuple[int, ...]
    corrected_positions: tuple[int, ...]


class RSCode:
    """RS(N, K) over GF(2^r), correcting T = (N - K) / 2 symbol errors."""

    def __init__(self, field: GaloisField, K: int, N: int | None = None):
        self.field = field
        if N is None:
            N = field.order
        if N != field.order:
            raise ValueError(f"block length must be {field.order} for GF({field.size})")
        if not 1 <= K < N:
            raise ValueError(f"need 1 <= K < N, got K={K}, N={N}")
        if (N - K) % 2:
            raise ValueError(f"N - K must be even, got {N - K}")
        self.N = N
        self.K = K
        self.T = (N - K) // 2
        self.generator_poly = self._build_generator()

    def _build_generator(self) -> list[int]:
        """(x - alpha^1)(x - alpha^2)...(x - alpha^2T), low-order first."""
        f = self.field
        g = [1]
        for j in range(1, 2 * self.T + 1):
            root = f.alpha_pow(j)
            nxt = [0] * (len(g) + 1)
            for i, c in enumerate(g):
                nxt[i + 1] ^= c                      # c * x
                nxt[i] ^= f.mul(c, root)             # c * root  (minus = plus)
            g = nxt
        return g

    def encode(self, message) -> list[int]:
        """Systematic codeword for K message symbols."""
        f = self.field
        msg = list(message)
        if len(msg) != self.K:
            raise ValueError(f"message must have {self.K} symbols, got {len(msg)}")
        for s in msg:
            f._check(s)
        # Remainder of m(x) * x^(2T) divided by g(x), by synthetic division.
        twot = 2 * self.T
        rem = [0] * twot
        gen = self.generator_poly
        exp, log = f.exp, f.log
        for coef in reversed(msg):
            factor = rem[-1] ^ coef
            rem.pop()
            rem.insert(0, 0)
            if factor:
                lf = log[factor]
                for i in range(twot):
                    gi = gen[i]
                    if gi:
                        rem[i] ^= exp[log[gi] + lf]
        return rem + msg

    def _syndromes(self, word: list[int]) -> list[int]:
        """S_j = word(alpha^j) for j = 1..2T (Horner, high-order first)."""
        f = self.field
        exp, log, order = f.exp, f.log, f.order
        out = []
        for j in range(1, 2 * self.T + 1):
            lroot = j % order
            acc = 0
            for c in reversed(word):
                if acc:
                    acc = exp[log[acc] + lroot]
                acc ^= c
            out.append(acc)
        return out

    def _berlekamp_massey(self, synd: list[int]) -> list[int]:
        """Error locator polynomial from the syndrome sequence.

        Polynomials are low-order first with locator[0] = 1, so the roots
        are the inverse error locations.
        """
        f = self.field
        exp, log = f.exp, f.log
        err_loc = [1]
        old_loc = [1]
        for i in range(len(synd)):
            old_loc = [0] + old_loc
            delta = 0
            for j in range(min(len(err_loc), i + 1)):
                c, s = err_loc[j], synd[i - j]
                if c and s:
                    delta ^= exp[log[c] + log[s]]
            if delta:
                if len(old_loc) > len(err_loc):
                    new_loc = [f.mul(c, delta) for c in old_loc]
                    inv_delta = f.inv(delta)
                    old_loc = [f.mul(c, inv_delta) for c in err_loc]
                    err_loc = new_loc
                if len(old_loc) > len(err_loc):
                    err_loc = err_loc + [0] * (len(old_loc) - len(err_loc))
                for idx, c in enumerate(old_loc):
                    if c:
                        err_loc[idx] ^= exp[log[c] + log[delta]]
        while len(err_loc) > 1 and err_loc[-1] == 0:
            err_loc.pop()
        return err_loc

    def decode(self, received) -> DecodeResult | None:
        """Correct up to T symbol errors; None signals decode failure.

        A bounded-distance decoder may also miscorrect (return a valid but
        wrong codeword) when more than T errors occurred; both outcomes are
        the caller's residual-error events.
        """
        f = self.field
        word = list(received)
        if len(word) != self.N:
            raise ValueError(f"received word must have {self.N} symbols, got {len(word)}")
        for s in word:
            f._check(s)
        synd = self._syndromes(word)
        if not any(synd):
            return DecodeResult(tuple(word[2 * self.T:]), ())

        err_loc = self._berlekamp_massey(synd)
        n_errors = len(err_loc) - 1
        if n_errors == 0 or n_errors > self.T:
            return None

        # Chien-style search: position i is in error iff locator(alpha^-i) = 0.
        positions = []
        exp, log, order = f.exp, f.log, f.order
        for i in range(self.N):
            acc = 0
            for deg, c in enumerate(err_loc):
                if c:
                    acc ^= exp[(log[c] + deg * (order - i)) % order]
            if acc == 0:
                positions.append(i)
        if len(positions) != n_errors:
            return None

        # Forney: evaluator = (syndrome poly * locator) mod x^(2T);
        # magnitude at X_i = evaluator(X_i^-1) / locator'(X_i^-1).
        evaluator = [0] * (2 * self.T)
        for deg in range(2 * self.T):
            acc = 0
            for j, c in enumerate(err_loc):
                if j > deg:
                    break
                s = synd[deg - j]
                if c and s:
                    acc ^= exp[log[c] + log[s]]
            evaluator[deg] = acc
        for i in positions:
            x_inv = f.alpha_pow(order - i)  # alpha^-i
            num = _poly_eval(f, evaluator, x_inv)
            den = _poly_eval(f, _formal_derivative(err_loc), x_inv)
            if den == 0:
                return None
            word[i] ^= f.div(num, den)

        if any(self._syndromes(word)):
            return None
        return DecodeResult(tuple(word[2 * self.T:]), tuple(positions))

    def __repr__(self) -> str:
        return f"RSCode(N={self.N}, K={self.K}, T={self.T}, GF({self.field.size}))"


def _poly_eval(f: GaloisField, poly: list[int], x: int) -> int:
    """Evaluate a low-order-first polynomial at x."""
    acc = 0
    for c in reversed(poly):
        acc = f.mul(acc, x) ^ c
    return acc


def _formal_derivative(poly: list[int]) -> list[int]:
    """d/dx in characteristic 2: only odd-degree coefficients survive."""
    return [c if deg % 2 == 0 else 0 for deg, c in enumerate(poly[1:])]


def rs_for_quantum_code(n_minus_k: int, K: int) -> RSCode:
    """RS code over GF(2^(n-k)) paired with an [[n,k]] stabilizer code."""
    return RSCode(GaloisField(n_minus_k), K)
