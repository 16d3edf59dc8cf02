import random
from math import gcd

import pytest

from foxhom import datasets
from foxhom.abelian import AbelianGroup
from foxhom.covers import (
    CyclicQuotientMap,
    FillingSpec,
    branched_betti,
    fill,
    filled_relators,
    h1_cover,
    h_n_module,
    mutation_invariance_check,
    reidemeister_schreier,
    sakuma_quotient,
    transfer,
    transversal_word,
)
from foxhom.laurent import LaurentPoly, parse_poly
from foxhom.presentations import Presentation, abelianize
from foxhom.snf import hermite_normal_form, lattice_contains, lattice_equal
from foxhom.words import Word, exponent_vector, parse_word


@pytest.fixture(scope="module")
def paper_cover():
    job = datasets.standard_cover_job()
    covers = {}
    for n in (1, 3, 5, 7, 9):
        q = CyclicQuotientMap(job["presentation"], n, job["degrees"])
        covers[n] = reidemeister_schreier(job["presentation"], q)
    return job, covers


def free_presentation(*gens):
    return Presentation("free", tuple(gens), ())


# ---- quotient map validation -------------------------------------------


def test_quotient_map_validation(cover_job):
    p = cover_job["presentation"]
    with pytest.raises(ValueError):
        CyclicQuotientMap(p, 0, cover_job["degrees"])
    with pytest.raises(ValueError):
        CyclicQuotientMap(p, 4, {g: 2 for g in p.generators})  # not surjective
    with pytest.raises(ValueError):
        CyclicQuotientMap(p, 3, {g: 0 for g in p.generators})
    bad = dict(cover_job["degrees"])
    bad["m"] = 3  # relator degrees no longer vanish
    with pytest.raises(ValueError):
        CyclicQuotientMap(p, 5, bad)
    missing = dict(cover_job["degrees"])
    del missing["u"]
    with pytest.raises(ValueError):
        CyclicQuotientMap(p, 3, missing)


def test_section_generator_requires_coprime_degree():
    p = free_presentation("a", "b")
    q = CyclicQuotientMap(p, 6, {"a": 2, "b": 3})  # jointly surjective
    with pytest.raises(ValueError):
        q.section_generator()


# ---- Reidemeister-Schreier ------------------------------------------------


def test_rank_one_cover():
    p = free_presentation("a")
    cover = reidemeister_schreier(p, CyclicQuotientMap(p, 3, {"a": 1}))
    assert len(cover.presentation.generators) == 3
    assert len(cover.trivial_generators) == 2
    assert abelianize(cover.kernel_presentation()) == AbelianGroup(1)


def test_rank_formula_two_generators():
    p = free_presentation("a", "b")
    cover = reidemeister_schreier(p, CyclicQuotientMap(p, 2, {"a": 1, "b": 0}))
    assert abelianize(cover.kernel_presentation()) == AbelianGroup(3)


def test_nielsen_schreier_rank_formula_random():
    rng = random.Random(3)
    for _ in range(30):
        g = rng.randrange(1, 4)
        n = rng.randrange(1, 7)
        gens = tuple(f"g{i}" for i in range(g))
        degrees = {x: rng.randrange(-5, 6) for x in gens}
        degrees[rng.choice(gens)] = 1  # force a section
        p = free_presentation(*gens)
        cover = reidemeister_schreier(p, CyclicQuotientMap(p, n, degrees))
        assert len(cover.presentation.generators) == n * g
        assert len(cover.presentation.relators) == 0
        got = abelianize(cover.kernel_presentation())
        assert got == AbelianGroup(n * (g - 1) + 1)


def test_bundled_cover_bookkeeping(paper_cover):
    _, covers = paper_cover
    cover = covers[3]
    assert len(cover.presentation.generators) == 18
    assert len(cover.presentation.relators) == 15
    assert abelianize(cover.kernel_presentation()).rank == 3


def test_rewrites_preserve_degree_zero(paper_cover):
    job, covers = paper_cover
    cover = covers[5]
    p = job["presentation"]
    # a rewritten relator is a genuine relator of the kernel presentation
    for r in p.relators:
        for c in range(5):
            w = cover.rewrite(r, start=c)
            assert w in cover.presentation.relators


def test_rewrite_roundtrip_inverse(paper_cover):
    job, covers = paper_cover
    cover = covers[7]
    w = parse_word("m s t^-1 u", job["presentation"].generators)
    for c in (0, 3):
        assert cover.rewrite(w, c) * cover.rewrite(~w, (c + cover.quotient.word_degree(w)) % 7) == Word()


# ---- homology of covers -----------------------------------------------------


def test_h1_cover_level_one_matches_base(cover_job):
    p = cover_job["presentation"]
    q = CyclicQuotientMap(p, 1, cover_job["degrees"])
    assert h1_cover(p, q) == abelianize(p) == AbelianGroup(3, (2,))


@pytest.mark.parametrize("n", [3, 5])
def test_h1_cover_rank_three(cover_job, n):
    p = cover_job["presentation"]
    q = CyclicQuotientMap(p, n, cover_job["degrees"])
    assert h1_cover(p, q).rank == 3


# ---- transfers ----------------------------------------------------------------


def test_transfer_level_one_is_identity(paper_cover):
    job, covers = paper_cover
    cover = covers[1]
    p = job["presentation"]
    w = parse_word("m s^2 t^-1", p.generators)
    assert transfer(cover, w) == exponent_vector(w, p.generators)


def test_transfer_of_generator_sums_lifts(paper_cover):
    _, covers = paper_cover
    cover = covers[3]
    vec = transfer(cover, Word([("s", 1)]))
    gens = cover.presentation.generators
    for g, v in zip(gens, vec):
        assert v == (1 if g.startswith("s@") else 0)


def test_transfer_equals_full_preimage_cycle(paper_cover):
    """The chain of the rewritten loop m^k equals the transfer vector."""
    _, covers = paper_cover
    cover = covers[3]
    k = 3  # order of deg(m) = 2 in Z/3
    loop = cover.rewrite(Word([("m", k)]), start=0)
    chain = exponent_vector(loop, cover.presentation.generators)
    assert chain == transfer(cover, Word([("m", 1)]))


def test_transfer_additive_in_homology(paper_cover):
    job, covers = paper_cover
    cover = covers[5]
    p = job["presentation"]
    u = parse_word("s t s^-1 t", p.generators)
    doubled = [2 * v for v in transfer(cover, Word([("t", 1)]))]
    assert transfer(cover, u) == doubled


def test_transfer_fixed_by_deck_action(paper_cover):
    job, covers = paper_cover
    cover = covers[7]
    for text in ("m", "s", "t", "u", "m s t"):
        vec = transfer(cover, parse_word(text, job["presentation"].generators))
        assert cover.deck_shift(vec) == vec


# ---- fillings -------------------------------------------------------------------


def test_fill_level_one(paper_cover):
    job, covers = paper_cover
    got = fill(covers[1], FillingSpec(job["fill"]))
    assert got == AbelianGroup(0, (2, 2, 2))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_fill_is_rational_homology_sphere(paper_cover, n):
    job, covers = paper_cover
    got = fill(covers[n], FillingSpec(job["fill"]))
    assert got.rank == 0


def test_fill_rejects_empty_slope():
    with pytest.raises(ValueError):
        FillingSpec((Word(),))
    with pytest.raises(ValueError):
        FillingSpec(())


def test_filled_relator_count_and_orbits(cover_job):
    # at even level the meridian (degree 2) has two shift orbits
    p = cover_job["presentation"]
    q = CyclicQuotientMap(p, 4, cover_job["degrees"])
    cover = reidemeister_schreier(p, q)
    spec = FillingSpec((Word([("m", 1)]),))
    relators = filled_relators(cover, spec)
    assert len(relators) == 2  # gcd(4, 2) orbits
    # chain of each relator is the partial transfer over one shift orbit;
    # the conjugating transversal letters cancel in the exponent vector
    gens = cover.presentation.generators
    chains = [exponent_vector(r, gens) for r in relators]
    for orbit, chain in zip(((0, 2), (1, 3)), chains):
        expected = [
            1 if g in {f"m@{c}" for c in orbit} else 0 for g in gens
        ]
        assert chain == expected


def test_fill_independent_of_orbit_representative(paper_cover):
    """Conjugating the filled slope by any transversal word fixes the result."""
    job, covers = paper_cover
    cover = covers[3]
    base = fill(cover, FillingSpec(job["fill"]))
    gens = cover.presentation.generators
    kernel = cover.kernel_presentation()
    for c in (1, 2):
        rows = []
        for w in job["fill"]:
            o = cover.n // gcd(cover.n, cover.quotient.word_degree(w))
            t = transversal_word(cover, c)
            rows.append(exponent_vector(cover.rewrite(t * w**o * ~t, 0), gens))
        matrix = kernel.relator_matrix()
        for row in rows:
            for i, v in enumerate(row):
                matrix[i].append(v)
        from foxhom.abelian import cokernel

        assert cokernel(matrix, nrows=len(gens)) == base


# ---- transfer quotients -----------------------------------------------------------


def test_sakuma_level_one(paper_cover):
    _, covers = paper_cover
    got = sakuma_quotient(covers[1])
    assert got.rank == 0 and got.order == 8


@pytest.mark.parametrize("n", [3, 5])
def test_sakuma_finite(paper_cover, n):
    assert sakuma_quotient(paper_cover[1][n]).rank == 0


def test_sakuma_name_validation(paper_cover):
    with pytest.raises(ValueError):
        sakuma_quotient(paper_cover[1][3], meridian="nope")


def test_h_n_level_one_trivial(paper_cover):
    got = h_n_module(paper_cover[1][1])
    assert got == AbelianGroup(0)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_transfer_quotient_extension_bound(paper_cover, n):
    _, covers = paper_cover
    sak = sakuma_quotient(covers[n])
    hn = h_n_module(covers[n])
    assert hn.rank == 0
    assert sak.order % hn.order == 0
    assert 8 % (sak.order // hn.order) == 0


# ---- filling classes generate the same subgroup as the transfers -------------


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_transfer_filling_subgroup_equivalence(paper_cover, n):
    job, covers = paper_cover
    cover = covers[n]
    gens = cover.presentation.generators
    relator_rows = cover.kernel_presentation().relator_matrix()
    base_rows = [
        [relator_rows[i][j] for i in range(len(gens))]
        for j in range(len(relator_rows[0]) if relator_rows else 0)
    ]
    fill_rows = [
        exponent_vector(r, gens) for r in filled_relators(cover, FillingSpec(job["fill"]))
    ]
    transfer_rows = [transfer(cover, Word([("m", 1)]))]
    for g in ("s", "t"):
        transfer_rows.append([2 * v for v in transfer(cover, Word([(g, 1)]))])

    transfer_lattice = hermite_normal_form(base_rows + transfer_rows)
    for row in fill_rows:
        assert lattice_contains(transfer_lattice, row)
    assert lattice_equal(base_rows + fill_rows, base_rows + transfer_rows)
    # consequently the two quotients agree outright
    assert fill(cover, FillingSpec(job["fill"])) == sakuma_quotient(cover)


# ---- branched covers -----------------------------------------------------------


@pytest.fixture(scope="module")
def delta_L():
    return datasets.load_poly("delta_L")


def test_branched_betti_prime_levels(delta_L):
    assert branched_betti(delta_L, 2, 5) == 0
    for k in (2, 3, 4, 5):
        assert branched_betti(delta_L, k, 7) == 0


def test_branched_betti_flagged_cases(delta_L):
    flagged = branched_betti(delta_L, 1, 5)
    assert flagged.all_roots and flagged == 4
    edge = branched_betti(delta_L, 4, 5)
    assert edge == 4 and not edge.all_roots


def test_branched_betti_composite_level(delta_L):
    # the k+1 = 6 factor is the comparison polynomial itself
    assert branched_betti(delta_L, 5, 6) == 5


def test_branched_betti_symmetry(delta_L):
    for n in (5, 7, 9):
        for k in range(2, n - 1):
            if gcd(k, n) == 1:
                assert branched_betti(delta_L, k, n) == branched_betti(
                    delta_L, n - k, n
                )


def test_branched_betti_validation(delta_L):
    with pytest.raises(ValueError):
        branched_betti(delta_L, 2, 6)
    with pytest.raises(ValueError):
        branched_betti(delta_L, 0, 5)
    with pytest.raises(ValueError):
        branched_betti(parse_poly("x", ("x",)), 1, 2)


# ---- mutation ---------------------------------------------------------------------


def test_mutation_invariance(delta_L):
    zero = LaurentPoly.zero(("x", "y"))
    assert mutation_invariance_check(delta_L, zero)  # both diagonals vanish
    assert mutation_invariance_check(delta_L, delta_L)
    a = parse_poly("x - 1", ("x", "y"))
    b = parse_poly("y - 1", ("x", "y"))
    assert mutation_invariance_check(a, b)
    assert not mutation_invariance_check(a, parse_poly("x*y - 2", ("x", "y")))
