"""The two-flavor cover poset, its chains, and the chain/dream bijection."""

import pytest

from flagpipes.decperm import covers_by_shift, parse_decperm
from flagpipes.exceptions import DomainError, GuardExceededError, SizeMismatchError
from flagpipes.pipedream import construct_fpp, enumerate_fpps
from flagpipes.poset import (
    build_poset,
    chain_to_fpp,
    check_self_dual,
    export_dot,
    export_json,
    fpp_to_chain,
    iter_maximal_chains,
    maximal_chain_count,
    missing_covers,
)
from flagpipes.positroid import enumerate_positroids, is_quotient


class TestBuild:
    def test_published_numbers_at_three(self):
        rep = build_poset(3)
        mat = build_poset(3, "matroidal")
        assert len(rep.elements) == len(mat.elements) == 16
        assert maximal_chain_count(rep) == 19
        assert maximal_chain_count(mat) == 22
        assert len(rep.covers) == 33
        assert len(mat.covers) == 36

    def test_levels_match_rank_counts(self):
        poset = build_poset(3)
        by_rank = {}
        for P in enumerate_positroids(3):
            by_rank[P.rank] = by_rank.get(P.rank, 0) + 1
        for k in range(4):
            assert len(poset.rank_indices(k)) == by_rank[k]
        assert poset.elements[poset.bottom].rank == 0
        assert poset.elements[poset.top].rank == 3

    def test_edges_go_up_one_rank(self):
        for flavor in ("representable", "matroidal"):
            poset = build_poset(3, flavor)
            for a, b in poset.covers:
                pa, pb = poset.elements[a], poset.elements[b]
                assert pb.rank == pa.rank + 1
                assert is_quotient(pa.bases, pb.bases)

    def test_representable_edges_match_shift_route(self):
        poset = build_poset(3)
        for i, name in enumerate(poset.names):
            ups = {poset.names[b] for a, b in poset.covers if a == i}
            shifts = {q.to_string() for q in covers_by_shift(parse_decperm(name))}
            assert ups == shifts

    def test_flavor_and_guards(self):
        with pytest.raises(DomainError):
            build_poset(3, flavor="bogus")
        with pytest.raises(GuardExceededError):
            build_poset(6)
        with pytest.raises(GuardExceededError):
            build_poset(5, "matroidal")


class TestMissingCovers:
    def test_exact_three_at_n_three(self):
        assert missing_covers(3) == (
            ("3o1u2u", "3o2o1u"),
            ("3o2u1u", "2o3o1u"),
            ("3o2u1u", "3o2o1u"),
        )

    def test_matroidal_extends_representable(self):
        rep = build_poset(3)
        mat = build_poset(3, "matroidal")
        rep_edges = {(rep.names[a], rep.names[b]) for a, b in rep.covers}
        mat_edges = {(mat.names[a], mat.names[b]) for a, b in mat.covers}
        assert rep_edges < mat_edges
        assert mat_edges - rep_edges == set(missing_covers(3))


class TestSelfDuality:
    @pytest.mark.parametrize("flavor", ["representable", "matroidal"])
    def test_n_three(self, flavor):
        assert check_self_dual(build_poset(3, flavor))


class TestChains:
    def test_chains_step_through_covers(self):
        poset = build_poset(3)
        edge_set = set(poset.covers)
        index = {p.key: i for i, p in enumerate(poset.elements)}
        count = 0
        for chain in iter_maximal_chains(poset):
            count += 1
            assert [p.rank for p in chain] == [0, 1, 2, 3]
            for p, q in zip(chain, chain[1:]):
                assert (index[p.key], index[q.key]) in edge_set
        assert count == maximal_chain_count(poset)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_bijection_with_dreams(self, n):
        poset = build_poset(n)
        chains = list(iter_maximal_chains(poset))
        dreams = list(enumerate_fpps(n))
        assert len(chains) == len(dreams)
        for chain in chains:
            back = fpp_to_chain(chain_to_fpp(chain))
            assert tuple(p.key for p in back) == tuple(p.key for p in chain)
        for D in dreams:
            assert chain_to_fpp(fpp_to_chain(D)) == D

    def test_fpp_to_chain_needs_complete(self):
        from flagpipes.pipedream import restrict
        with pytest.raises(DomainError):
            fpp_to_chain(restrict(construct_fpp((1, 2), (2, 1)), 1))

    def test_chain_to_fpp_rejects_malformed(self):
        good = fpp_to_chain(construct_fpp((1, 2, 3), (3, 1, 2)))
        with pytest.raises(DomainError):
            chain_to_fpp(())
        with pytest.raises(DomainError):
            chain_to_fpp(good[:-1])  # ranks stop short
        with pytest.raises(DomainError):
            chain_to_fpp(tuple(reversed(good)))
        # basis deltas of size two between adjacent links
        from flagpipes.decperm import parse_decperm, positroid_of
        jump = (
            good[0],
            positroid_of(parse_decperm("1u2o3u")),   # lex-min {2}
            positroid_of(parse_decperm("1o2u3o")),   # lex-min {1, 3}
            good[3],
        )
        with pytest.raises(DomainError):
            chain_to_fpp(jump)
        # deltas look fine but the restrictions disagree with the links
        splice = tuple(
            positroid_of(parse_decperm(s))
            for s in ("1u2u3u", "2o1u3u", "3o2o1u", "1o2o3o"))
        with pytest.raises(DomainError):
            chain_to_fpp(splice)
        mixed = fpp_to_chain(construct_fpp((1, 2), (2, 1)))
        with pytest.raises(SizeMismatchError):
            chain_to_fpp((good[0], mixed[1], good[2], good[3]))


class TestExports:
    def test_json_shape(self):
        data = export_json(build_poset(2))
        assert data["n"] == 2
        assert data["flavor"] == "representable"
        assert data["nodes"][0] == {"decperm": "1u2u", "rank": 0}
        assert all(len(edge) == 2 for edge in data["covers"])
        assert len(data["nodes"]) == 5

    def test_dot_shape(self):
        poset = build_poset(2)
        dot = export_dot(poset)
        assert dot.splitlines()[0] == "digraph quotient_poset {"
        assert "rankdir=BT;" in dot
        assert dot.count("rank=same") == 3
        assert dot.rstrip().endswith("}")

    def test_dot_dashed_edges(self):
        mat = build_poset(3, "matroidal")
        dot = export_dot(mat, dashed=missing_covers(3))
        assert dot.count("[style=dashed]") == 3
        assert '"3o2u1u" -> "3o2o1u" [style=dashed];' in dot
