"""Words, presentations and first homology.

Walks the bundled presentations from the raw face-pairing groups down to
the final six-generator presentation, checking homology at every step.
Run with:  python demos/01_presentations.py
"""

from foxhom import abelianize, datasets, parse_word, tietze_add_generator, tietze_eliminate

# The two polyhedral pieces and their amalgam.
for name in ("rst", "nb", "amalgam", "n-final"):
    p = datasets.load_presentation(name)
    print(f"{name:>8}:  {len(p.generators)} generators, "
          f"{len(p.relators)} relators,  H1 = {abelianize(p)}")

print()
print("Reducing the amalgam by explicit Tietze moves:")
p = datasets.load_presentation("amalgam")
print(f"  start:              H1 = {abelianize(p)}   generators {p.generators}")

# The last relator expresses g2 in terms of the others.
p = tietze_eliminate(p, "g2", 3)
print(f"  eliminate g2:       H1 = {abelianize(p)}   generators {p.generators}")

# Introduce the meridian m = g1^-1 f4, then discard g1.
p = tietze_add_generator(p, "m", parse_word("g1^-1 f4", p.generators))
p = tietze_eliminate(p, "g1", len(p.relators) - 1)
print(f"  swap g1 for m:      H1 = {abelianize(p)}   generators {p.generators}")

# Two conjugate copies of the meridian, then u = t^-1 s^-1 f4 m^-1,
# which has order two in homology and replaces f4.
p = tietze_add_generator(p, "m1", parse_word("f4^-1 m f4", p.generators))
p = tietze_add_generator(p, "m2", parse_word("s t^-1 s t m1 t^-1 s^-1 t s^-1", p.generators))
p = tietze_add_generator(p, "u", parse_word("t^-1 s^-1 f4 m^-1", p.generators))
p = tietze_eliminate(p, "f4", len(p.relators) - 1)
print(f"  swap f4 for u:      H1 = {abelianize(p)}   generators {p.generators}")

final = datasets.load_presentation("n-final")
print()
print(f"bundled n-final has the same homology: {abelianize(final)}")

# The peripheral words ride along as data; the longitude dies in homology.
words = datasets.load_constants()
print()
print("peripheral constants:")
for key in ("bob", "rita", "m", "l", "slope-a", "slope-b"):
    w = words[key]
    print(f"  {key:>7} = {str(w)[:60]}{' ...' if len(str(w)) > 60 else ''}")
