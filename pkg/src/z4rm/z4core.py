"""Arithmetic over Z4 vectors, the Lee metric, and the Gray map.

Words are stored bit-packed: a Z4Word keeps two bits per coordinate in a
single Python int (coordinate i in bits 2i and 2i+1), a BitWord keeps one
bit per coordinate.  All arithmetic runs word-parallel on the packed
integers; the observable behaviour is plain coordinatewise arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DimensionError

__all__ = [
    "Z4Word",
    "BitWord",
    "add",
    "negate",
    "lee_weight",
    "lee_distance",
    "alpha",
    "beta",
    "gamma",
    "gray",
    "gray_inverse",
    "hamming_distance",
]


@lru_cache(maxsize=None)
def _lane_masks(n):
    """(lo, full) masks for n two-bit lanes: 0b0101..01 and 0b1111..11."""
    full = (1 << (2 * n)) - 1
    return full // 3, full


@lru_cache(maxsize=None)
def _mask_ladder(n):
    """Masks keeping the low 2^j bits of each 2^(j+1)-bit block, wide enough for 2n bits."""
    width = 2 * n
    masks = []
    block = 1
    while block < 2 * width:
        pattern = (1 << block) - 1
        mask = 0
        pos = 0
        while pos < 2 * width:
            mask |= pattern << pos
            pos += 2 * block
        masks.append(mask)
        block *= 2
    return tuple(masks)


def _gather_even_bits(x, n):
    # bit 2i of x -> bit i of the result
    masks = _mask_ladder(n)
    x &= masks[0]
    for j in range(1, len(masks)):
        x = (x | (x >> (1 << (j - 1)))) & masks[j]
    return x


def _spread_bits(x, n):
    # bit i of x -> bit 2i of the result (inverse of _gather_even_bits)
    masks = _mask_ladder(n)
    for j in range(len(masks) - 1, 0, -1):
        x = (x | (x << (1 << (j - 1)))) & masks[j - 1]
    return x


class Z4Word:
    """Immutable fixed-length vector over the integers mod 4."""

    __slots__ = ("n", "_packed")

    def __init__(self, symbols: Iterable[int]):
        packed = 0
        n = 0
        for s in symbols:
            if not 0 <= s <= 3:
                raise ValueError(f"symbol {s!r} at position {n} is not in 0..3")
            packed |= s << (2 * n)
            n += 1
        if n == 0:
            raise ValueError("a Z4Word needs at least one coordinate")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_packed", packed)

    @classmethod
    def _raw(cls, n: int, packed: int) -> "Z4Word":
        w = object.__new__(cls)
        object.__setattr__(w, "n", n)
        object.__setattr__(w, "_packed", packed)
        return w

    @classmethod
    def zero(cls, n: int) -> "Z4Word":
        if n < 1:
            raise ValueError("length must be positive")
        return cls._raw(n, 0)

    @classmethod
    def from_string(cls, digits: str) -> "Z4Word":
        for i, c in enumerate(digits):
            if c not in "0123":
                raise ValueError(f"bad symbol character {c!r} at position {i}")
        return cls(int(c) for c in digits)

    def __setattr__(self, name, value):
        raise AttributeError("Z4Word is immutable")

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self._packed >> (2 * i)) & 3

    def __iter__(self) -> Iterator[int]:
        p = self._packed
        for _ in range(self.n):
            yield p & 3
            p >>= 2

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Z4Word)
            and self.n == other.n
            and self._packed == other._packed
        )

    def __hash__(self) -> int:
        return hash((self.n, self._packed))

    def __add__(self, other: "Z4Word") -> "Z4Word":
        return add(self, other)

    def __neg__(self) -> "Z4Word":
        return negate(self)

    def __repr__(self) -> str:
        return f"Z4Word({self.digits()!r})"

    def digits(self) -> str:
        return "".join(str(s) for s in self)


class BitWord:
    """Immutable fixed-length binary vector."""

    __slots__ = ("n", "_packed")

    def __init__(self, bits: Iterable[int]):
        packed = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit {b!r} at position {n} is not 0 or 1")
            packed |= b << n
            n += 1
        if n == 0:
            raise ValueError("a BitWord needs at least one coordinate")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_packed", packed)

    @classmethod
    def _raw(cls, n: int, packed: int) -> "BitWord":
        w = object.__new__(cls)
        object.__setattr__(w, "n", n)
        object.__setattr__(w, "_packed", packed)
        return w

    @classmethod
    def zero(cls, n: int) -> "BitWord":
        if n < 1:
            raise ValueError("length must be positive")
        return cls._raw(n, 0)

    @classmethod
    def from_string(cls, bits: str) -> "BitWord":
        for i, c in enumerate(bits):
            if c not in "01":
                raise ValueError(f"bad bit character {c!r} at position {i}")
        return cls(int(c) for c in bits)

    def __setattr__(self, name, value):
        raise AttributeError("BitWord is immutable")

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self._packed >> i) & 1

    def __iter__(self) -> Iterator[int]:
        p = self._packed
        for _ in range(self.n):
            yield p & 1
            p >>= 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitWord)
            and self.n == other.n
            and self._packed == other._packed
        )

    def __hash__(self) -> int:
        return hash((self.n, self._packed, "bit"))

    def __xor__(self, other: "BitWord") -> "BitWord":
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")
        return BitWord._raw(self.n, self._packed ^ other._packed)

    def __repr__(self) -> str:
        return f"BitWord({self.digits()!r})"

    def digits(self) -> str:
        return "".join(str(b) for b in self)

    def weight(self) -> int:
        return self._packed.bit_count()


def add(x: Z4Word, y: Z4Word) -> Z4Word:
    """Coordinatewise sum mod 4."""
    if x.n != y.n:
        raise DimensionError(f"length mismatch: {x.n} vs {y.n}")
    a, b = x._packed, y._packed
    lo = _lane_masks(x.n)[0]
    # per-lane add: carries from the low bit stay inside their lane
    return Z4Word._raw(x.n, (a ^ b) ^ (((a & b) & lo) << 1))


def negate(x: Z4Word) -> Z4Word:
    """Coordinatewise additive inverse mod 4."""
    lo, full = _lane_masks(x.n)
    c = x._packed ^ full  # 3 - s per lane
    return Z4Word._raw(x.n, (c ^ lo) ^ ((c & lo) << 1))  # add 1 per lane


def lee_weight(x: Z4Word) -> int:
    """Sum of the per-symbol Lee weights 0,1,2,1 for symbols 0,1,2,3."""
    lo = _lane_masks(x.n)[0]
    hi = (x._packed >> 1) & lo
    return hi.bit_count() + (hi ^ (x._packed & lo)).bit_count()


def lee_distance(x: Z4Word, y: Z4Word) -> int:
    """Lee weight of the coordinatewise difference x - y."""
    return lee_weight(add(x, negate(y)))


def alpha(x: Z4Word) -> BitWord:
    """Componentwise map 0,1,2,3 -> 0,1,0,1 (the mod-2 reduction)."""
    return BitWord._raw(x.n, _gather_even_bits(x._packed, x.n))


def beta(x: Z4Word) -> BitWord:
    """Componentwise map 0,1,2,3 -> 0,0,1,1."""
    return BitWord._raw(x.n, _gather_even_bits(x._packed >> 1, x.n))


def gamma(x: Z4Word) -> BitWord:
    """Componentwise map 0,1,2,3 -> 0,1,1,0."""
    return BitWord._raw(x.n, _gather_even_bits(x._packed ^ (x._packed >> 1), x.n))


def gray(x: Z4Word) -> BitWord:
    """Isometric embedding of a length-n Z4 word into 2n bits.

    Output is the full beta block followed by the full gamma block
    (block layout, not interleaved), so Hamming weight equals Lee weight.
    """
    p = x._packed
    b = _gather_even_bits(p >> 1, x.n)
    g = _gather_even_bits(p ^ (p >> 1), x.n)
    return BitWord._raw(2 * x.n, b | (g << x.n))


def gray_inverse(b: BitWord) -> Z4Word:
    """Inverse of :func:`gray`; requires even length."""
    if b.n % 2:
        raise DimensionError(f"length {b.n} is odd; Gray images have even length")
    n = b.n // 2
    bb = b._packed & ((1 << n) - 1)
    gg = b._packed >> n
    # symbol low bit = beta xor gamma, high bit = beta
    return Z4Word._raw(n, _spread_bits(bb ^ gg, n) | (_spread_bits(bb, n) << 1))


def hamming_distance(a: BitWord, b: BitWord) -> int:
    """Number of coordinates where the two words differ."""
    if a.n != b.n:
        raise DimensionError(f"length mismatch: {a.n} vs {b.n}")
    return (a._packed ^ b._packed).bit_count()
