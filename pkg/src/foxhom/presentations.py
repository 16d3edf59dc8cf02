"""Finitely presented groups: presentations, Tietze moves, abelianization.

The presentation file format is JSON::

    {"name": str, "generators": [str], "relators": [str]}

with relator words in the ``parse_word`` syntax.  An optional "note" field
is carried through for bundled datasets and otherwise ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import cokernel
from .words import Word, exponent_vector, parse_word


def _check_name(name):
    if not name or any(c.isspace() for c in name) or "^" in name:
        raise ValueError(f"invalid generator name {name!r}")


@dataclass(frozen=True)
class Presentation:
    """An ordered generator list and a list of relator words.

    >>> p = Presentation("rst", ("r", "s", "t"), (parse_word("r s t", "rst"),))
    >>> print(abelianize(p))
    Z^2
    """

    name: str
    generators: tuple
    relators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        seen = set()
        for g in self.generators:
            _check_name(g)
            if g in seen:
                raise ValueError(f"duplicate generator {g!r}")
            seen.add(g)
        for r in self.relators:
            stray = r.generators_used() - seen
            if stray:
                raise ValueError(f"relator uses unknown generators {sorted(stray)}")

    def relator_matrix(self):
        """Exponent-sum matrix, generators as rows and relators as columns."""
        cols = [exponent_vector(r, self.generators) for r in self.relators]
        return [[col[i] for col in cols] for i in range(len(self.generators))]

    def parse(self, text):
        return parse_word(text, self.generators)

    def to_json(self):
        return {
            "name": self.name,
            "generators": list(self.generators),
            "relators": [str(r) for r in self.relators],
        }

    @classmethod
    def from_json(cls, data):
        gens = tuple(data["generators"])
        relators = tuple(parse_word(text, gens) for text in data["relators"])
        return cls(data["name"], gens, relators)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


def abelianize(p):
    """H_1 of the presented group: cokernel of the relator exponent lattice.

    A presentation with no relators abelianizes to Z^(number of generators).
    """
    return cokernel(p.relator_matrix(), nrows=len(p.generators))


def tietze_add_generator(p, name, definition):
    """Add ``name`` with defining relator name^-1 * definition.

    ``definition`` must be a word in the existing generators.
    """
    if name in p.generators:
        raise ValueError(f"generator {name!r} already present")
    _check_name(name)
    stray = definition.generators_used() - set(p.generators)
    if stray:
        raise ValueError(f"definition uses unknown generators {sorted(stray)}")
    relator = Word([(name, -1)]) * definition
    return Presentation(p.name, p.generators + (name,), p.relators + (relator,))


def tietze_eliminate(p, gen, rel_index):
    """Remove ``gen`` by solving relator ``rel_index`` for it.

    The chosen relator must contain ``gen`` exactly once, with exponent +-1.
    Every other occurrence of ``gen`` is replaced by the solved word and
    freely reduced.
    """
    if gen not in p.generators:
        raise ValueError(f"no generator named {gen!r}")
    relator = p.relators[rel_index]
    runs = relator.runs
    hits = [i for i, (g, _) in enumerate(runs) if g == gen]
    if len(hits) != 1 or abs(runs[hits[0]][1]) != 1:
        raise ValueError(
            f"relator {rel_index} must contain {gen!r} exactly once with exponent +-1"
        )
    i = hits[0]
    before = Word(runs[:i])
    after = Word(runs[i + 1 :])
    if runs[i][1] == 1:
        # A g B = 1  =>  g = A^-1 B^-1
        solution = ~before * ~after
    else:
        # A g^-1 B = 1  =>  g = B A
        solution = after * before
    new_relators = tuple(
        r.substitute(gen, solution)
        for j, r in enumerate(p.relators)
        if j != rel_index
    )
    new_generators = tuple(g for g in p.generators if g != gen)
    return Presentation(p.name, new_generators, new_relators)
