"""The Brandt semigroup B_n: elements, dense encoding, addition.

B_n is ([n] x [n]) u {theta} with (i,j) + (k,l) = (i,l) when j = k and
theta otherwise; theta absorbs on both sides.  Everything downstream works
on integer codes, so the addition table is materialized once per n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations


@dataclass(frozen=True)
class BrandtElement:
    """Either the absorbing zero theta (row is None) or an ordered pair."""

    row: int | None
    col: int | None

    @property
    def is_theta(self) -> bool:
        return self.row is None

    def __str__(self) -> str:
        return "theta" if self.is_theta else f"({self.row},{self.col})"


THETA = BrandtElement(None, None)


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..n: {self.images!r}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def word(self) -> str:
        return "".join(str(i) for i in self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int) -> list["Permutation"]:
        return [cls(p) for p in _permutations(range(1, n + 1))]


class Brandt:
    """Construction context for B_n with a dense addition table over codes.

    Codes: 0 is theta and (i-1)*n + j is the pair (i, j); the encoding is a
    bijection onto 0..n^2.  The context carries n, so operands from a
    different B_m are rejected by the range checks here rather than mixing
    silently.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.size = n * n + 1
        self.theta = 0
        add = [[0] * self.size for _ in range(self.size)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                a = (i - 1) * n + j
                for k in range(1, n + 1):
                    add[a][(j - 1) * n + k] = (i - 1) * n + k
        self.add_table = add

    def pair_code(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"pair ({i},{j}) out of range for n={self.n}")
        return (i - 1) * self.n + j

    def encode(self, a: BrandtElement) -> int:
        if a.is_theta:
            return 0
        return self.pair_code(a.row, a.col)

    def decode(self, code: int) -> BrandtElement:
        if not (0 <= code < self.size):
            raise ValueError(f"code {code} out of range for n={self.n}")
        if code == 0:
            return THETA
        return BrandtElement((code - 1) // self.n + 1, (code - 1) % self.n + 1)

    def add_code(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def add(self, a: BrandtElement, b: BrandtElement) -> BrandtElement:
        return self.decode(self.add_table[self.encode(a)][self.encode(b)])

    def codes(self) -> range:
        return range(self.size)

    def pair_codes(self) -> range:
        return range(1, self.size)


def brandt_add(bn: Brandt, a: BrandtElement, b: BrandtElement) -> BrandtElement:
    """Addition on elements: (i,j) + (j,l) = (i,l), everything else theta."""
    return bn.add(a, b)
