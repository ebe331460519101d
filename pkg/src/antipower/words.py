"""Thue-Morse letters, factors and the morphisms mu / sigma.

All public positions are 1-based: ``tm_letter(1)`` is the first letter and
``FactorSpec(alpha, beta)`` is the closed interval alpha..beta.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from . import _backend


class MalformedWordError(ValueError):
    """A word is not in the domain of the requested morphism."""


@dataclass(frozen=True)
class Word:
    """Finite binary word packed into an int (first letter is the most significant bit).

    Equality compares the length first, then the packed content, so ``0``
    and ``00`` are different words.
    """

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits do not fit in the stated length")

    @classmethod
    def from_str(cls, s: str) -> Word:
        if s.strip("01"):
            raise ValueError(f"not a binary word: {s!r}")
        return cls(len(s), int(s, 2) if s else 0)

    @classmethod
    def from_letters(cls, letters) -> Word:
        arr = np.asarray(letters, dtype=np.uint8)
        n = arr.size
        if n == 0:
            return cls(0, 0)
        if arr.max() > 1:
            raise ValueError("letters must be 0 or 1")
        packed = np.packbits(arr).tobytes()
        return cls(n, int.from_bytes(packed, "big") >> (8 * len(packed) - n))

    def __len__(self):
        return self.length

    def __str__(self):
        return format(self.bits, f"0{self.length}b") if self.length else ""

    def __add__(self, other: Word) -> Word:
        return Word(self.length + other.length, (self.bits << other.length) | other.bits)

    def letter(self, i: int) -> int:
        """1-based letter access."""
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return (self.bits >> (self.length - i)) & 1

    def letters(self) -> tuple[int, ...]:
        return tuple(int(c) for c in str(self))

    def complement(self) -> Word:
        return Word(self.length, self.bits ^ ((1 << self.length) - 1))


@dataclass(frozen=True)
class FactorSpec:
    """The factor <alpha, beta> = t_alpha ... t_beta (1-based, inclusive)."""

    alpha: int
    beta: int

    def __post_init__(self):
        if not 1 <= self.alpha <= self.beta:
            raise ValueError(f"need 1 <= alpha <= beta, got <{self.alpha},{self.beta}>")

    def __len__(self):
        return self.beta - self.alpha + 1


class Morphism(enum.Enum):
    MU = "mu"
    SIGMA = "sigma"


def tm_letter(i: int) -> int:
    """t_i: parity of the number of ones in the binary expansion of i - 1."""
    if i < 1:
        raise ValueError(f"positions start at 1, got {i}")
    return (i - 1).bit_count() & 1


def tm_factor(spec: FactorSpec) -> Word:
    return Word.from_letters(_backend.tm_letters(spec.alpha - 1, len(spec)))


def tm_prefix_packed(n: int) -> Word:
    """The prefix of length n, generated a machine word at a time."""
    if n < 1:
        raise ValueError("prefix length must be positive")
    return tm_factor(FactorSpec(1, n))


def factors_equal(a: int, b: int, length: int) -> bool:
    """<a, a+length-1> == <b, b+length-1> without materialising either factor."""
    if a < 1 or b < 1 or length < 1:
        raise ValueError("positions and length must be positive")
    return _backend.factors_equal(a - 1, b - 1, length)


_MU = {"0": "01", "1": "10"}
_SIGMA = {"01": "0", "10": "1"}


def apply_morphism(which: Morphism | str, w: Word) -> Word:
    which = Morphism(which)
    s = str(w)
    if which is Morphism.MU:
        return Word.from_str(s.translate(str.maketrans(_MU)))
    if len(s) % 2:
        raise MalformedWordError("sigma needs a word of even length")
    try:
        return Word.from_str("".join(_SIGMA[s[i:i + 2]] for i in range(0, len(s), 2)))
    except KeyError as exc:
        raise MalformedWordError(f"aligned block {exc.args[0]} is not 01 or 10") from None


def mu_power(n: int, w: Word) -> Word:
    for _ in range(n):
        w = apply_morphism(Morphism.MU, w)
    return w


def a_n(n: int) -> Word:
    """A_n = mu^n(0)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return mu_power(n, Word(1, 0))


def b_n(n: int) -> Word:
    """B_n = mu^n(1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return mu_power(n, Word(1, 1))


def check_fact1(n: int, r: int) -> bool:
    """<2^n r + 1, 2^n (r+1)> == mu^n(t_{r+1})."""
    block = 1 << n
    image = b_n(n) if tm_letter(r + 1) else a_n(n)
    return tm_factor(FactorSpec(block * r + 1, block * (r + 1))) == image


def equal_factor_classes(m: int, n: int) -> list[list[int]]:
    """Group the start positions of the length-m factors of the length-n prefix by value.

    Only classes with at least two positions are returned, each sorted, in
    order of first occurrence.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= N")
    buf = _backend.tm_letters(0, n).tobytes()
    groups = defaultdict(list)
    # bytes keys: a hash match is always followed by a full equality test
    for a in range(n - m + 1):
        groups[buf[a:a + m]].append(a + 1)
    return [pos for pos in groups.values() if len(pos) > 1]


def find_equal_factors(m: int, n: int) -> list[tuple[int, int]]:
    """Every pair a < b with <a, a+m-1> == <b, b+m-1> inside the prefix of length n."""
    pairs = []
    for pos in equal_factor_classes(m, n):
        for i, a in enumerate(pos):
            pairs.extend((a, b) for b in pos[i + 1:])
    pairs.sort()
    return pairs
