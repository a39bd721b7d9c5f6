from __future__ import annotations

import inspect
import itertools
import random
from fractions import Fraction as F

import pytest

from helpers import fs, load_fixture, unit
from grmeasure import thin_rep as tr
from grmeasure.chain_core import Ordering, l_star, oracle_l_star
from grmeasure.errors import DisconnectedSupportError, FiltrationError, HypothesisError, UnsupportedSupportError
from grmeasure.quiver_poset import Arrow, Quiver, full_support
from grmeasure.random_quivers import acyclic_cycle_orientations, cycle_quiver, random_corpus, random_tree_quiver
from grmeasure.thin_rep import (
    ThinRep,
    d4_limit_comparison,
    d4_quiver,
    embeds,
    gr_factor,
    gr_filtrations,
    gr_measure,
    is_indecomposable,
    iso_equal,
    length_of,
    subobject_poset,
)


def example2_rep():
    qf = load_fixture("example2.quiver")
    return qf.quiver, ThinRep(qf.quiver, qf.reps["M"])


# -- brute-force morphisms between thin representations over GF(p) --------------
# A thin representation is a support plus one scalar per support arrow.  A morphism
# N -> M is a scalar phi_v per vertex with phi_t * N_a == M_a * phi_s for every arrow;
# it is a monomorphism iff phi_v != 0 on the support of N.


def scalars(rep: ThinRep, values=None):
    values = values or {}
    return {a.id: (values.get(a.id, 1) if a in rep.support.arrows else 0) for a in rep.quiver.arrows}


def exists_morphism(n: ThinRep, n_maps, m: ThinRep, m_maps, p: int, iso: bool = False) -> bool:
    q = n.quiver
    if not n.vertices <= m.vertices or (iso and n.vertices != m.vertices):
        return False
    vs = sorted(n.vertices)
    for phi_values in itertools.product(range(1, p), repeat=len(vs)):
        phi = dict(zip(vs, phi_values))
        if all(
            (phi.get(a.target, 0) * n_maps[a.id] - m_maps[a.id] * phi.get(a.source, 0)) % p == 0
            for a in q.arrows
        ):
            return True
    return False


class TestStructure:
    def test_indecomposable(self):
        q, m = example2_rep()
        assert is_indecomposable(m)
        assert not is_indecomposable(ThinRep.on(q, ["1", "5"]))
        d4 = d4_quiver()
        assert is_indecomposable(ThinRep(d4, full_support(d4)))

    def test_iso_equal(self):
        q, m = example2_rep()
        assert iso_equal(m, ThinRep.on(q, "3456"))
        assert not iso_equal(ThinRep.simple(q, "3"), ThinRep.simple(q, "5"))
        assert not iso_equal(ThinRep.on(q, "56", ["e"]), ThinRep.on(q, "56"))

    def test_iso_rejects_cycles(self):
        sq = cycle_quiver((True, False, True, False))
        with pytest.raises(HypothesisError):
            iso_equal(ThinRep(sq, full_support(sq)), ThinRep(sq, full_support(sq)))

    def test_iso_scalars_normalise(self):
        # M with maps *3, id, *2 is isomorphic to the canonical one
        q, m = example2_rep()
        assert exists_morphism(m, scalars(m, {"c": 3, "e": 2}), m, scalars(m), 7, iso=True)

    def test_embeds(self):
        q, m = example2_rep()
        assert embeds(ThinRep.on(q, "56"), m)
        assert embeds(ThinRep.simple(q, "5"), ThinRep.on(q, "56"))
        assert not embeds(ThinRep.on(q, "34"), m)
        assert not embeds(ThinRep.simple(q, "6"), m)

    def test_missing_arrow_of_cycle_does_not_embed(self):
        # N: all four vertices of the square, arrow c1: 1 -> 2 removed.  Commutativity at c1
        # gives phi_2 * 0 = M_c1 * phi_1, and M_c1 is invertible, so phi_1 = 0: no monomorphism.
        sq = cycle_quiver((True, False, True, False))
        top = ThinRep(sq, full_support(sq))
        path = ThinRep.on(sq, sq.vertices, ["c1"])
        assert not embeds(path, top)
        assert not exists_morphism(path, scalars(path), top, scalars(top), 5)

    def test_embed_hypotheses(self):
        q, m = example2_rep()
        with pytest.raises(HypothesisError):
            embeds(ThinRep.on(q, ["3", "5"]), m)
        sq = cycle_quiver((True, False, True, False))
        with pytest.raises(HypothesisError):
            embeds(ThinRep(sq, full_support(sq)), ThinRep(sq, full_support(sq)))

    @pytest.mark.parametrize("seed", range(12))
    def test_embeds_matches_linear_algebra(self, seed):
        rng = random.Random(seed)
        if seed % 3 == 2:
            q = cycle_quiver(rng.choice(acyclic_cycle_orientations(rng.randint(2, 5))))
        else:
            q = random_tree_quiver(rng, rng.randint(1, 6))
        m = ThinRep(q, full_support(q))
        for r in range(1, len(q.vertices) + 1):
            for vs in itertools.combinations(q.vertices, r):
                n = ThinRep.on(q, vs)
                if not is_indecomposable(n) or tr._has_cycle(n.support):
                    continue
                assert embeds(n, m) == exists_morphism(n, scalars(n), m, scalars(m), 3)

    def test_length_of(self):
        q, m = example2_rep()
        assert length_of(m, unit(q.vertices)) == 4
        assert length_of(ThinRep.simple(q, "6"), {"6": F(7, 3)}) == F(7, 3)
        w = {"1": F(1), "2": F(2), "3": F(5), "4": F(11)}
        assert length_of({"1": 1, "2": 1, "3": 2, "4": 1}, w) == 1 + 2 + 10 + 11


class TestMeasure:
    def test_example2(self):
        q, m = example2_rep()
        assert gr_measure(m, unit(q.vertices)) == (1, 2, 4)
        assert gr_filtrations(m, unit(q.vertices)) == [fs("5", "56", "3456")]

    def test_example1(self):
        qf = load_fixture("example1.quiver")
        rep = ThinRep(qf.quiver, full_support(qf.quiver))
        assert gr_measure(rep, qf.weights) == (F(1, 2), F(5, 2), F(7, 2), F(11, 2))
        assert gr_filtrations(rep, qf.weights) == [fs("3", "345", "3456", "123456")]

    def test_two_filtrations(self):
        q, m = example2_rep()
        w = {"1": F(1), "2": F(1), "3": F(1), "4": F(2), "5": F(1), "6": F(6)}
        assert gr_filtrations(m, w) == [fs("3", "345", "3456"), fs("5", "345", "3456")]

    def test_simple(self):
        q, _ = example2_rep()
        assert gr_measure(ThinRep.simple(q, "4"), {"4": F(3)}) == (3,)
        assert gr_filtrations(ThinRep.simple(q, "4"), {"4": F(3)}) == [fs("4")]

    def test_errors(self):
        q, _ = example2_rep()
        with pytest.raises(DisconnectedSupportError):
            gr_measure(ThinRep.on(q, ["1", "5"]), unit(q.vertices))
        theta = Quiver("t", ("1", "2", "3"), (Arrow("x", "1", "2"), Arrow("y", "2", "3"), Arrow("z", "1", "3"), Arrow("w", "1", "3")))
        with pytest.raises(UnsupportedSupportError):
            gr_measure(ThinRep(theta, full_support(theta)), unit("123"))

    def test_corpus_against_oracle_and_recursion(self):
        for inst in random_corpus(42, 80, 9):
            poset, lengths = subobject_poset(inst.rep, inst.weights)
            top = inst.rep.vertices
            mu = gr_measure(inst.rep, inst.weights)
            assert mu == l_star(poset, lengths, top) == oracle_l_star(poset, lengths, top)
            assert mu[-1] == length_of(inst.rep, inst.weights)
            assert mu[0] == min(inst.weights[s] for s in inst.rep.support.sinks())

    def test_deterministic(self):
        for inst in random_corpus(5, 20, 8):
            runs = {repr(gr_filtrations(inst.rep, inst.weights)) for _ in range(3)}
            assert len(runs) == 1

    def test_no_field_parameter(self):
        for name, fn in inspect.getmembers(tr, inspect.isfunction):
            assert not {"field", "k", "K"} & set(inspect.signature(fn).parameters), name


class TestFactors:
    def test_example2(self):
        q, m = example2_rep()
        assert gr_factor(m, "5", "56") == {"1": 0, "2": 0, "3": 0, "4": 0, "5": 0, "6": 1}
        assert gr_factor(m, "345", "3456")["6"] == 1
        assert sum(gr_factor(m, "3", "345").values()) == 2

    def test_non_cover(self):
        q, m = example2_rep()
        with pytest.raises(FiltrationError):
            gr_factor(m, "5", "3456")

    def test_quotient_additivity(self):
        for inst in random_corpus(8, 30, 8):
            poset, lengths = subobject_poset(inst.rep, inst.weights)
            for x, y in poset.covers():
                dims = gr_factor(inst.rep, x, y)
                assert lengths[y] - lengths[x] == length_of(dims, inst.weights)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_cycle_top_factor_is_simple_at_source(self, n):
        for o in acyclic_cycle_orientations(n):
            q = cycle_quiver(o)
            top = ThinRep(q, full_support(q))
            poset, _ = subobject_poset(top, unit(q.vertices))
            for x in poset.lower_covers(top.vertices):
                dims = gr_factor(top, x, top.vertices)
                (i,) = [v for v, d in dims.items() if d]
                assert i in top.support.sources()


class TestD4:
    def test_equal_weights(self):
        c = d4_limit_comparison({v: F(1) for v in "1234"})
        assert c.lightest_sink == "1"
        assert c.measure_n == (1, 4)
        assert [mu for _, mu, _ in c.rivals] == [(1, 3), (1, 3)]
        assert c.ok

    def test_rivals_contain_lightest_sink(self):
        c = d4_limit_comparison({"1": F(5), "2": F(2), "3": F(1), "4": F(9)})
        assert c.lightest_sink == "2"
        assert all("2" in s and "3" in s and len(s) == 3 for s, _, _ in c.rivals)
        assert all(order is Ordering.LESS for _, _, order in c.rivals)

    def test_n_prime_rejected_by_n(self):
        # N' is not a subobject of N: a set containing the source must contain every sink
        d4 = d4_quiver()
        n = ThinRep(d4, full_support(d4))
        assert not embeds(ThinRep.on(d4, "123"), n)

    def test_dimension_vector_of_m(self):
        w = {"1": F(2), "2": F(3), "3": F(5), "4": F(7)}
        assert length_of({"1": 1, "2": 1, "3": 2, "4": 1}, w) == 22
