"""Fox free differential calculus and Alexander matrices.

Derivatives are taken directly in the Laurent image of an abelianization
map (never in the group ring of the free group): for a word w = l_1...l_k,

    d(w)/dg = sum over positions of  phi(l_1...l_{i-1}) * d(l_i)/dg

with d(g)/dg = 1, d(g^-1)/dg = -phi(g)^-1 and d(h)/dg = 0 otherwise.

The matrix orientation is rows = generators, columns = relators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .laurent import LaurentPoly
from .polygcd import laurent_gcd
from .polymat import LaurentMatrix, determinant


@dataclass(frozen=True)
class AbelianizationMap:
    """A homomorphism sending each generator to a signed monomial unit.

    ``images`` maps generator -> (sign, exponent vector over ``vars``).
    """

    source: tuple
    vars: tuple
    images: dict

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "vars", tuple(self.vars))
        images = {}
        for g in self.source:
            if g not in self.images:
                raise ValueError(f"no image for generator {g!r}")
            sign, exp = self.images[g]
            if sign not in (1, -1):
                raise ValueError("images must be units: sign +-1")
            images[g] = (sign, tuple(int(e) for e in exp))
            if len(images[g][1]) != len(self.vars):
                raise ValueError("image exponent length does not match variables")
        object.__setattr__(self, "images", images)

    def image_monomial(self, gen, power=1):
        sign, exp = self.images[gen]
        s = sign if power % 2 else 1
        return (s, tuple(power * e for e in exp))

    def image_poly(self, gen, power=1):
        s, exp = self.image_monomial(gen, power)
        return LaurentPoly.monomial(self.vars, exp, s)

    def word_image(self, word):
        """(sign, exponent vector) of a word's image."""
        sign = 1
        exp = [0] * len(self.vars)
        for g, e in word.runs:
            s, image_exp = self.image_monomial(g, e)
            sign *= s
            for i, v in enumerate(image_exp):
                exp[i] += v
        return sign, tuple(exp)

    def to_json(self):
        return {
            "vars": list(self.vars),
            "images": {
                g: {"sign": s, "exp": list(e)} for g, (s, e) in self.images.items()
            },
        }

    @classmethod
    def from_json(cls, data, source=None):
        images = {
            g: (entry["sign"], tuple(entry["exp"]))
            for g, entry in data["images"].items()
        }
        if source is None:
            source = tuple(sorted(images))
        return cls(tuple(source), tuple(data["vars"]), images)

    @classmethod
    def loads(cls, text, source=None):
        return cls.from_json(json.loads(text), source=source)


def fox_derivative(word, gen, phi):
    """The image of d(word)/d(gen) under the abelianization map.

    >>> from .words import parse_word
    >>> phi = AbelianizationMap(("a",), ("x",), {"a": (1, (1,))})
    >>> print(fox_derivative(parse_word("a^-1", ["a"]), "a", phi))
    -x^-1
    """
    if gen not in phi.images:
        raise ValueError(f"unknown generator {gen!r}")
    terms = {}
    sign, exp = 1, tuple([0] * len(phi.vars))

    def add(s, e):
        terms[e] = terms.get(e, 0) + s

    for g, step in word.single_letters():
        if step > 0:
            if g == gen:
                add(sign, exp)
            s, ge = phi.image_monomial(g)
            sign, exp = sign * s, tuple(a + b for a, b in zip(exp, ge))
        else:
            s, ge = phi.image_monomial(g, -1)
            sign, exp = sign * s, tuple(a + b for a, b in zip(exp, ge))
            if g == gen:
                add(-sign, exp)
    return LaurentPoly(phi.vars, terms)


@dataclass(frozen=True)
class AlexanderMatrix:
    """Fox-derivative matrix of a presentation relative to a map.

    Rows follow the presentation's generator order; column j is relator j.
    """

    matrix: LaurentMatrix
    phi: AbelianizationMap
    presentation_name: str

    @property
    def shape(self):
        return self.matrix.shape


def alexander_matrix(p, phi):
    """Generators x relators grid of Fox derivatives pushed through phi."""
    missing = set(p.generators) - set(phi.images)
    if missing:
        raise ValueError(f"map lacks images for generators {sorted(missing)}")
    col_labels = tuple(f"r{j + 1}" for j in range(len(p.relators)))
    entries = [
        tuple(fox_derivative(r, g, phi) for r in p.relators) for g in p.generators
    ]
    grid = LaurentMatrix(p.generators, col_labels, entries)
    return AlexanderMatrix(grid, phi, p.name)


def minor_polys(am):
    """Row-deletion minors of a deficiency-one Alexander matrix, in normal form.

    For each generator g, the determinant of the matrix with row g deleted.
    """
    nrows, ncols = am.shape
    if nrows != ncols + 1:
        raise ValueError(f"need rows = cols + 1, got {nrows}x{ncols}")
    out = {}
    for g in am.matrix.row_labels:
        out[g] = determinant(am.matrix.delete_row(g)).normal_form()
    return out


def _square_minors(grid, size):
    """All size x size minors of a LaurentMatrix (unnormalized)."""
    from itertools import combinations

    nrows, ncols = len(grid.row_labels), len(grid.col_labels)
    vars = grid.vars
    for rows in combinations(range(nrows), size):
        for cols in combinations(range(ncols), size):
            sub = LaurentMatrix(
                tuple(grid.row_labels[i] for i in rows),
                tuple(grid.col_labels[j] for j in cols),
                tuple(
                    tuple(grid.entries[i][j] for j in cols) for i in rows
                ),
            )
            yield determinant(sub)


def alexander_poly(p, phi):
    """Gcd of the codimension-one minors of the Alexander matrix.

    For a deficiency-one presentation (g generators, g-1 relators) these are
    the row-deletion minors.  In general the minors of size
    min(g - 1, #relators) are used; an empty determinant is 1, so free
    presentations of rank one and the ``rst`` style presentations give 1.
    Zero minors are excluded from the gcd unless all minors vanish, in which
    case the result is the zero polynomial.
    """
    am = alexander_matrix(p, phi)
    nrows, ncols = am.shape
    size = min(nrows - 1, ncols)
    if size <= 0:
        return LaurentPoly.constant(phi.vars, 1)
    if nrows == ncols + 1:
        minors = list(minor_polys(am).values())
    else:
        minors = list(_square_minors(am.matrix, size))
    nonzero = [m for m in minors if not m.is_zero]
    if not nonzero:
        return LaurentPoly.zero(phi.vars)
    return laurent_gcd(nonzero)
