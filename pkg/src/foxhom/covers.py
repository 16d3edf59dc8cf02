"""Finite cyclic covers: Reidemeister-Schreier rewriting, transfers, fillings.

A cyclic quotient map grades the generators over Z/n; the degree of a word
is its graded exponent sum.  The cover's coset space is Z/n itself, the
Schreier transversal is the powers of a fixed section generator whose degree
is coprime to n, and the deck action is the coset shift c -> c + 1.

Cover generators are named ``g@c`` for base generator g at coset c.  The raw
Schreier presentation keeps all n * (base generators) symbols and
n * (base relators) rewritten relators; ``kernel_presentation`` appends the
n - 1 relators that trivialize the transversal symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import cokernel
from .laurent import LaurentPoly, substitute_monomial
from .polygcd import RootCount, shared_root_count
from .presentations import Presentation, abelianize
from .words import Word, exponent_vector


@dataclass(frozen=True)
class CyclicQuotientMap:
    """A surjection of the presented group onto Z/n via generator degrees.

    ``degrees`` assigns each generator an integer grading; it must reduce to
    a surjection (the degrees generate Z/n) and every relator must have
    total degree 0 mod n.
    """

    base: Presentation
    n: int
    degrees: dict

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be at least 1")
        degs = {}
        for g in self.base.generators:
            if g not in self.degrees:
                raise ValueError(f"no degree for generator {g!r}")
            degs[g] = int(self.degrees[g]) % self.n
        object.__setattr__(self, "degrees", degs)
        span = gcd(self.n, *degs.values()) if degs else self.n
        if span != 1:
            raise ValueError(f"degrees do not generate Z/{self.n}")
        for i, r in enumerate(self.base.relators):
            if self.word_degree(r) != 0:
                raise ValueError(f"relator {i} has nonzero degree mod {self.n}")

    def word_degree(self, word):
        vec = exponent_vector(word, self.base.generators)
        total = sum(d * self.degrees[g] for g, d in zip(self.base.generators, vec))
        return total % self.n

    def section_generator(self):
        """First generator whose degree is coprime to n (the transversal base)."""
        for g in self.base.generators:
            if gcd(self.degrees[g], self.n) == 1:
                return g
        raise ValueError(
            "no single generator has degree coprime to n; "
            "such quotients are not supported"
        )


def cover_gen(g, c):
    return f"{g}@{c}"


@dataclass(frozen=True)
class CoverPresentation:
    """Bookkeeping for an n-fold cyclic cover.

    ``presentation`` is the raw Schreier presentation: one generator per
    (base generator, coset) pair and one relator per (base relator, coset)
    pair.  ``trivial_generators`` are the n - 1 transversal symbols that
    freely reduce to the identity; they are killed by
    ``kernel_presentation`` before any homology is computed.
    """

    quotient: CyclicQuotientMap
    section: str
    presentation: Presentation
    trivial_generators: tuple

    @property
    def base(self):
        return self.quotient.base

    @property
    def n(self):
        return self.quotient.n

    def rewrite(self, word, start=0):
        """Rewrite a base word into cover generators, starting at a coset."""
        n = self.n
        degrees = self.quotient.degrees
        coset = start % n
        runs = []
        for g, step in word.single_letters():
            if step > 0:
                runs.append((cover_gen(g, coset), 1))
                coset = (coset + degrees[g]) % n
            else:
                coset = (coset - degrees[g]) % n
                runs.append((cover_gen(g, coset), -1))
        return Word(runs)

    def kernel_presentation(self):
        """The Schreier presentation with transversal symbols trivialized."""
        extra = tuple(Word([(g, 1)]) for g in self.trivial_generators)
        return Presentation(
            self.presentation.name,
            self.presentation.generators,
            self.presentation.relators + extra,
        )

    def deck_shift(self, vector, steps=1):
        """Push an abelianized chain vector through the coset shift c -> c+1."""
        gens = self.presentation.generators
        index = {g: i for i, g in enumerate(gens)}
        out = [0] * len(gens)
        for g in self.base.generators:
            for c in range(self.n):
                src = index[cover_gen(g, c)]
                dst = index[cover_gen(g, (c + steps) % self.n)]
                out[dst] += vector[src]
        return out


def reidemeister_schreier(p, q):
    """Present the kernel of a cyclic quotient map.

    The cover of a (g generators, r relators) presentation has n*g Schreier
    generators and n*r rewritten relators; the transversal is the powers of
    the section generator, which trivializes n - 1 of the section symbols.

    >>> from .words import parse_word
    >>> free = Presentation("free", ("a",), ())
    >>> cover = reidemeister_schreier(free, CyclicQuotientMap(free, 3, {"a": 1}))
    >>> len(cover.presentation.generators), cover.trivial_generators
    (3, ('a@0', 'a@1'))
    """
    if not isinstance(q, CyclicQuotientMap):
        raise TypeError("need a CyclicQuotientMap")
    if q.base is not p and q.base != p:
        raise ValueError("quotient map built from a different presentation")
    n = q.n
    section = q.section_generator()
    gens = tuple(cover_gen(g, c) for g in p.generators for c in range(n))

    # the transversal rep of coset c is section^j with j*deg(section) = c;
    # section symbols at cosets j*deg for j = 0..n-2 reduce to the identity
    d = q.degrees[section]
    trivial = tuple(cover_gen(section, (j * d) % n) for j in range(n - 1))

    shell = CoverPresentation(
        q,
        section,
        Presentation(f"{p.name}~{n}fold", gens, ()),
        trivial,
    )
    relators = tuple(
        shell.rewrite(r, start=c) for r in p.relators for c in range(n)
    )
    return CoverPresentation(
        q,
        section,
        Presentation(f"{p.name}~{n}fold", gens, relators),
        trivial,
    )


def h1_cover(p, q):
    """First homology of the n-fold cyclic cover.

    >>> from .words import parse_word
    >>> free = Presentation("free", ("a", "b"), ())
    >>> print(h1_cover(free, CyclicQuotientMap(free, 2, {"a": 1, "b": 0})))
    Z^3
    """
    return abelianize(reidemeister_schreier(p, q).kernel_presentation())


def transfer(cover, word):
    """Class of the full preimage of a base loop, as an abelianized vector.

    The transfer sums the lifts of the loop over all cosets, so the vector
    has the exponent sum of g in ``word`` at every coordinate (g, c).  It is
    additive in the homology class of ``word`` and fixed by the deck action.
    """
    vec = exponent_vector(word, cover.base.generators)
    gens = cover.presentation.generators
    out = []
    for g, total in zip(cover.base.generators, vec):
        out.extend([total] * cover.n)
    assert len(out) == len(gens)
    return out


@dataclass(frozen=True)
class FillingSpec:
    """Boundary slopes to fill, as words in the base generators."""

    slopes: tuple

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(self.slopes))
        if not self.slopes:
            raise ValueError("no slopes to fill")
        for s in self.slopes:
            if not s:
                raise ValueError("empty slope word")


def transversal_word(cover, coset):
    """The transversal representative of a coset: a power of the section."""
    d = cover.quotient.degrees[cover.section]
    n = cover.n
    j = next(j for j in range(n) if (j * d) % n == coset % n)
    return Word([(cover.section, j)]) if j else Word()

def filled_relators(cover, spec):
    """Filling relators: one rewritten conjugate of w^o per shift orbit.

    For a slope w of degree d, o is the order of d in Z/n, and the orbits of
    the shift c -> c + d are the residues mod n/o.  The relator at orbit
    representative c is the rewrite of  t_c w^o t_c^-1  from coset 0, where
    t_c is the transversal representative.
    """
    if not isinstance(spec, FillingSpec):
        spec = FillingSpec(tuple(spec))
    n = cover.n
    out = []
    for w in spec.slopes:
        d = cover.quotient.word_degree(w)
        orbits = gcd(n, d)
        order = n // orbits
        power = w**order
        for c in range(orbits):
            t = transversal_word(cover, c)
            out.append(cover.rewrite(t * power * ~t, start=0))
    return out


def _quotient_by_rows(cover, extra_rows):
    kernel = cover.kernel_presentation()
    matrix = kernel.relator_matrix()
    for row in extra_rows:
        for i, v in enumerate(row):
            matrix[i].append(v)
    return cokernel(matrix, nrows=len(kernel.generators))


def fill(cover, spec):
    """Homology after filling the given slopes in the cover.

    Each filled relator imposes its class as a relation; the result is the
    abelianization of the augmented kernel presentation.
    """
    gens = cover.presentation.generators
    rows = [
        exponent_vector(r, gens) for r in filled_relators(cover, spec)
    ]
    return _quotient_by_rows(cover, rows)


def sakuma_quotient(cover, meridian="m", doubled=("s", "t")):
    """Quotient of the cover homology by tr(meridian) and doubled transfers.

    Models the filled manifold's homology as H_1(cover) / <tr(m), tr(2s),
    tr(2t)> for the bundled data; the generator names are parameters so the
    construction is reusable.
    """
    for g in (meridian, *doubled):
        if g not in cover.base.generators:
            raise ValueError(f"no base generator named {g!r}")
    rows = [transfer(cover, Word([(meridian, 1)]))]
    for g in doubled:
        rows.append([2 * v for v in transfer(cover, Word([(g, 1)]))])
    return _quotient_by_rows(cover, rows)


def h_n_module(cover):
    """Cover homology modulo the transfers of every base generator.

    For n = 1 the transfers generate everything and the result is trivial.
    """
    rows = [transfer(cover, Word([(g, 1)])) for g in cover.base.generators]
    return _quotient_by_rows(cover, rows)


def branched_betti(delta, k, n):
    """First Betti number of the (n, k) branched cover of a two-variable link.

    Counts the roots shared by (t-1) * delta(t^k, t) and nu_n.  A zero
    specialization returns the flagged count n - 1: the Betti number is
    positive, its exact value is not asserted.
    """
    if not (0 < k < n):
        raise ValueError("need 0 < k < n")
    if gcd(k, n) != 1:
        raise ValueError(f"k = {k} and n = {n} are not coprime")
    if len(delta.vars) != 2:
        raise ValueError("need a two-variable polynomial")
    a, b = delta.vars
    spec = substitute_monomial(delta, {a: (1, (k,)), b: (1, (1,))}, ("t",))
    t = LaurentPoly.variable(("t",), "t")
    poly = (t - 1) * spec
    if poly.is_zero:
        return RootCount(n - 1, all_roots=True)
    return shared_root_count(poly, n)


def mutation_invariance_check(delta_a, delta_b):
    """Whether two two-variable polynomials agree on the diagonal, up to unit.

    The diagonal specialization x, y -> t is insensitive to mutation, so
    mutant pairs must pass this check.
    """
    out = []
    for p in (delta_a, delta_b):
        if len(p.vars) != 2:
            raise ValueError("need two-variable polynomials")
        a, b = p.vars
        out.append(substitute_monomial(p, {a: (1, (1,)), b: (1, (1,))}, ("t",)))
    return out[0].unit_equivalent(out[1])
