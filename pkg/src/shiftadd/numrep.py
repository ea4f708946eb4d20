"""Signed-digit number representations for arbitrary-precision naturals.

Values are plain Python ints (exact, unbounded). This module adds the
signed-digit layer on top: canonical signed digit (CSD) recoding, signed
evaluation of digit strings, and odd normalization of positive integers.

Digit strings are stored least-significant first so that digit index i
always weighs 2**i. Textual rendering is most-significant first with the
characters '1', '0' and '-' (for digit value -1).
"""

from __future__ import annotations

from dataclasses import dataclass

DIGIT_CHARS = {1: "1", 0: "0", -1: "-"}
CHAR_DIGITS = {"1": 1, "0": 0, "-": -1}


@dataclass(frozen=True)
class SignedDigits:
    """A signed-digit string over {-1, 0, +1}, least-significant first."""

    digits: tuple[int, ...]
    canonical: bool = False

    def __post_init__(self):
        if any(d not in (-1, 0, 1) for d in self.digits):
            raise ValueError("digits must be in {-1, 0, 1}")

    def __len__(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        """Exact signed evaluation sum(d_i * 2**i)."""
        return sum(d << i for i, d in enumerate(self.digits) if d)

    def nonzero_count(self) -> int:
        return sum(1 for d in self.digits if d)

    def nonzero_positions(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.digits) if d)

    def render(self) -> str:
        """MSB-first text using '1', '0', '-'; the zero value renders as '0'."""
        if not self.digits:
            return "0"
        return "".join(DIGIT_CHARS[d] for d in reversed(self.digits))

    @classmethod
    def parse(cls, text: str, canonical: bool = False) -> "SignedDigits":
        """Inverse of render: MSB-first text to a digit string."""
        if text == "0":
            return cls((), canonical)
        try:
            digits = tuple(CHAR_DIGITS[c] for c in reversed(text))
        except KeyError as exc:
            raise ValueError(f"bad signed-digit character in {text!r}") from exc
        return cls(digits, canonical)


def to_csd(x: int) -> SignedDigits:
    """Canonical signed digit form of a non-negative integer.

    Reitwiesner's carry-based linear scan: at each odd residue emit +1 or -1
    so that the next two bits never leave adjacent nonzeros. The result has
    no two adjacent nonzero digits and the minimal nonzero count over all
    signed-digit forms of x.
    """
    if x < 0:
        raise ValueError("to_csd is defined for non-negative values")
    digits = []
    carry = 0
    while x > 0 or carry:
        b = (x & 1) + carry
        if b == 1:
            if (x >> 1) & 1:
                digits.append(-1)
                carry = 1
            else:
                digits.append(1)
                carry = 0
        else:
            # b is 0 or 2: even residue, emit 0
            digits.append(0)
            carry = b >> 1
        x >>= 1
    return SignedDigits(tuple(digits), canonical=True)


def from_digits(d: SignedDigits) -> int:
    """Exact signed value of a digit string (may be negative)."""
    return d.value()


def make_odd(x: int) -> tuple[int, int]:
    """Split x > 0 into (odd, shift) with odd * 2**shift == x."""
    if x <= 0:
        raise ValueError("make_odd requires a positive value")
    shift = (x & -x).bit_length() - 1
    return x >> shift, shift


def is_valid_pattern(value: int, width: int) -> bool:
    """A pattern is an odd positive value of at most `width` bits."""
    return value > 0 and value & 1 == 1 and value.bit_length() <= width
