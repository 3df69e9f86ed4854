"""Generator-matrix linear algebra over Z4.

A linear quaternary code is the row span of a generator matrix.  Row
reduction brings the matrix to the block shape [[I A B], [0 2I 2C]] (up to
a recorded column permutation): k1 rows with unit pivots and k2 rows with
pivot 2 and only even entries.  The code then has exactly 4^k1 * 2^k2
codewords, reachable by a mixed-radix coefficient sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DimensionError
from .z4core import Z4Word, add, negate

__all__ = [
    "DEFAULT_BUDGET",
    "GeneratorMatrix",
    "StandardForm",
    "standard_form",
    "log2_size",
    "membership",
    "residue",
    "enumerate_codewords",
]

# log2 of the largest codeword count the enumeration paths will sweep
DEFAULT_BUDGET = 28


def _scale(w: Z4Word, c: int) -> Z4Word:
    if c == 0:
        return Z4Word.zero(w.n)
    if c == 1:
        return w
    if c == 2:
        return add(w, w)
    return negate(w)  # 3*w == -w mod 4


class GeneratorMatrix:
    """Immutable sequence of equal-length Z4 generator rows."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Iterable[Z4Word], n: int | None = None):
        rows = tuple(rows)
        if rows:
            row_n = rows[0].n
            for r in rows:
                if r.n != row_n:
                    raise DimensionError(
                        f"row length {r.n} differs from first row length {row_n}"
                    )
            if n is not None and n != row_n:
                raise DimensionError(f"declared length {n} but rows have length {row_n}")
            n = row_n
        elif n is None:
            raise ValueError("an empty generator matrix needs an explicit length")
        elif n < 1:
            raise ValueError("length must be positive")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_strings(cls, rows: Sequence[str], n: int | None = None) -> "GeneratorMatrix":
        return cls([Z4Word.from_string(r) for r in rows], n=n)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorMatrix is immutable")

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Z4Word]:
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneratorMatrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"GeneratorMatrix([{', '.join(r.digits() for r in self.rows)}], n={self.n})"


@dataclass(frozen=True)
class StandardForm:
    """Reduced generator rows plus the pivot bookkeeping.

    rows[:k1] carry unit pivots at unit_cols, rows[k1:] carry pivot 2 at
    two_cols and have only even entries.  Rows stay in original coordinate
    order; column_permutation lists pivot columns first so that permuting
    coordinates by it exposes the [[I A B], [0 2I 2C]] block shape.
    """

    n: int
    k1: int
    k2: int
    rows: tuple
    unit_cols: tuple
    two_cols: tuple

    @property
    def reduced_rows(self) -> tuple:
        return self.rows

    @property
    def column_permutation(self) -> tuple:
        pivots = self.unit_cols + self.two_cols
        rest = tuple(c for c in range(self.n) if c not in set(pivots))
        return pivots + rest

    @property
    def log2_size(self) -> int:
        return 2 * self.k1 + self.k2


def standard_form(g: GeneratorMatrix) -> StandardForm:
    """Deterministic row reduction: leftmost pivot column, topmost pivot row."""
    rows = list(g.rows)
    n = g.n
    p = 0
    unit_cols = []
    for col in range(n):
        pivot = next(
            (i for i in range(p, len(rows)) if rows[i][col] in (1, 3)), None
        )
        if pivot is None:
            continue
        rows[p], rows[pivot] = rows[pivot], rows[p]
        if rows[p][col] == 3:
            rows[p] = _scale(rows[p], 3)
        for j in range(len(rows)):
            if j != p and rows[j][col]:
                rows[j] = add(rows[j], _scale(negate(rows[p]), rows[j][col]))
        unit_cols.append(col)
        p += 1
    k1 = p
    two_cols = []
    for col in range(n):
        pivot = next((i for i in range(p, len(rows)) if rows[i][col] == 2), None)
        if pivot is None:
            continue
        rows[p], rows[pivot] = rows[pivot], rows[p]
        for j in range(len(rows)):
            # subtracting the 2-row clears even entries and reduces odd ones mod 2
            if j != p and rows[j][col] in (2, 3):
                rows[j] = add(rows[j], negate(rows[p]))
        two_cols.append(col)
        p += 1
    zero = Z4Word.zero(n)
    assert all(r == zero for r in rows[p:]), "nonzero row survived reduction"
    return StandardForm(
        n=n,
        k1=k1,
        k2=p - k1,
        rows=tuple(rows[:p]),
        unit_cols=tuple(unit_cols),
        two_cols=tuple(two_cols),
    )


def log2_size(g: GeneratorMatrix) -> int:
    """log2 of the codeword count: 2*k1 + k2."""
    return standard_form(g).log2_size


def residue(sf: StandardForm, x: Z4Word) -> Z4Word:
    """Remainder of x after reduction against the standard-form rows."""
    if x.n != sf.n:
        raise DimensionError(f"word length {x.n} does not match code length {sf.n}")
    for i, col in enumerate(sf.unit_cols):
        c = x[col]
        if c:
            x = add(x, _scale(negate(sf.rows[i]), c))
    for j, col in enumerate(sf.two_cols):
        if x[col] == 2:
            x = add(x, negate(sf.rows[sf.k1 + j]))
    return x


def membership(g: GeneratorMatrix | StandardForm, x: Z4Word) -> bool:
    """True iff x is a Z4-linear combination of the generator rows."""
    sf = g if isinstance(g, StandardForm) else standard_form(g)
    return residue(sf, x) == Z4Word.zero(sf.n)


def _mixed_radix_basis(sf: StandardForm) -> list:
    """Word added when index bit p flips, LSB first.

    The enumeration index packs the order-4 coefficients of the unit-pivot
    rows (first row most significant, two bits each) above the order-2
    coefficients of the even rows (one bit each).
    """
    basis = []
    for j in range(sf.k2 - 1, -1, -1):
        basis.append(sf.rows[sf.k1 + j])
    for i in range(sf.k1 - 1, -1, -1):
        row = sf.rows[i]
        basis.append(row)
        basis.append(add(row, row))
    return basis


def enumerate_codewords(
    g: GeneratorMatrix | StandardForm, budget: int = DEFAULT_BUDGET
) -> Iterator[Z4Word]:
    """Yield every codeword exactly once, in the frozen mixed-radix order."""
    sf = g if isinstance(g, StandardForm) else standard_form(g)
    k = sf.log2_size
    if k > budget:
        raise CapacityError(
            f"enumeration needs budget {k} but only {budget} is configured",
            required=k,
            configured=budget,
        )
    return _codeword_stream(sf, k)


def _codeword_stream(sf: StandardForm, k: int) -> Iterator[Z4Word]:
    basis = _mixed_radix_basis(sf)
    zero = Z4Word.zero(sf.n)
    suffix = [zero] * (k + 1)  # suffix[b]: contribution of index bits >= b
    yield zero
    for t in range(1, 1 << k):
        b = (t & -t).bit_length() - 1  # lowest set bit: all lower bits just cleared
        w = add(suffix[b + 1], basis[b])
        for i in range(b + 1):
            suffix[i] = w
        yield w
