"""Finitely generated abelian groups as rank plus a torsion divisor chain."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .snf import smith_normal_form


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di >= 2.

    >>> print(AbelianGroup(3, (2,)))
    Z^3 x Z/2
    >>> AbelianGroup(0, ()).order
    1
    """

    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion divisors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion chain violated: {a} does not divide {b}")

    @property
    def is_finite(self):
        return self.rank == 0

    @property
    def order(self):
        """Order of the group; raises for infinite groups."""
        if self.rank:
            raise ValueError("infinite group has no order")
        return prod(self.torsion)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def cokernel(matrix, nrows=None):
    """Cokernel of an integer matrix viewed as a map Z^cols -> Z^rows.

    ``nrows`` disambiguates matrices with zero columns.

    >>> print(cokernel([[1, 1, 1]], nrows=1))
    0
    >>> print(cokernel([[1], [1], [1]], nrows=3))
    Z^2
    """
    if nrows is None:
        nrows = len(matrix)
    form = smith_normal_form(matrix)
    rank = nrows - len(form.divisors)
    torsion = tuple(d for d in form.divisors if d > 1)
    return AbelianGroup(rank, torsion)
