import pytest

from conftest import random_graph
from forcing_lab.families import (
    make_G1_member,
    make_H,
    make_H_hat,
    make_H_hat_join,
    make_matching_join,
)
from forcing_lab.graphs import build_graph, cartesian_product, disjoint_union, generate
from forcing_lab.solver import spectrum
from forcing_lab.verify import (
    are_isomorphic,
    looks_like_H,
    looks_like_H_hat,
    looks_like_H_hat_join,
    verify_crossover_remark,
    verify_equality_case,
    verify_graph,
    verify_known_values,
    verify_pachter_kim,
)


def records_by_id(records):
    return {r.theorem_id: r for r in records}


class TestIsomorphism:
    def test_relabelled_pairs(self, rng):
        for _ in range(30):
            g = random_graph(7, 0.5, rng)
            perm = list(range(7))
            rng.shuffle(perm)
            h = build_graph(7, [(perm[u], perm[v]) for u, v in g.edges])
            assert are_isomorphic(g, h)

    def test_non_isomorphic_same_degrees(self):
        # C6 vs 2 triangles: both 2-regular on 6 vertices
        c6 = generate("cycle", 6)
        two_k3 = disjoint_union(generate("cycle", 3), generate("cycle", 3))
        assert not are_isomorphic(c6, two_k3)

    def test_structural_recognizers_agree_with_iso(self):
        for n in range(1, 5):
            for k in range(n):
                target = make_H(n, k)
                assert looks_like_H(target, n, k)
                jt = make_H_hat_join(n, k)
                assert looks_like_H_hat_join(jt, n, k)
            assert looks_like_H_hat(make_H_hat(n), n)

    def test_recognizers_reject_near_misses(self, rng):
        for _ in range(200):
            n = rng.randint(2, 4)
            g = random_graph(2 * n, rng.random(), rng)
            for k in range(n):
                assert looks_like_H(g, n, k) == are_isomorphic(g, make_H(n, k))
                assert looks_like_H_hat_join(g, n, k) == are_isomorphic(
                    g, make_H_hat_join(n, k)
                )
            assert looks_like_H_hat(g, n) == are_isomorphic(g, make_H_hat(n))


class TestEqualityCases:
    def test_unique_pm_maximal_bipartite_is_h(self):
        rec = verify_equality_case("THM_1_4", make_H(4, 0))
        assert rec.equality_case == "equality_matches_extremal"

    def test_unique_pm_maximal_is_hhat(self):
        rec = verify_equality_case("THM_1_5", make_H_hat(3))
        assert rec.equality_case == "equality_matches_extremal"

    def test_exhaustive_bipartite_side3_f1_e8(self):
        # every side-3 bipartite graph with a PM, f=1 and e=8 is H_{3,1}
        from forcing_lab.sweep import bipartite_graph_from_mask
        from forcing_lab.matchings import has_perfect_matching

        hits = 0
        for mask in range(1 << 9):
            g = bipartite_graph_from_mask(3, mask)
            if g.edge_count != 8 or not has_perfect_matching(g):
                continue
            if spectrum(g).f_min != 1:
                continue
            hits += 1
            assert are_isomorphic(g, make_H(3, 1))
        assert hits > 0

    def test_mismatch_reported(self):
        # C6 has a unique... no: C6 has f=1; force a mismatch artificially:
        # a graph with f=0 and fewer edges than the extremal bound is strict,
        # so check a true mismatch via THM_3_4 equality on the prism instead
        prism = cartesian_product(generate("path", 2), generate("cycle", 3))
        rec = verify_equality_case("THM_3_4", prism)
        assert rec.equality_case == "equality_mismatch"


class TestVerifyGraph:
    def test_k33_records(self):
        recs = records_by_id(verify_graph(generate("complete_bipartite", 3, 3)))
        assert recs["THM_3_4"].status == "pass"
        assert recs["THM_3_4"].equality_case == "equality_matches_extremal"
        assert recs["THM_2_3"].status == "pass"
        assert recs["THM_2_3"].equality_case == "equality_matches_extremal"
        assert recs["THM_4_2"].status == "pass"

    def test_h62_thm23_equality(self):
        recs = records_by_id(verify_graph(make_H(6, 2)))
        assert recs["THM_2_3"].status == "pass"
        assert recs["THM_2_3"].equality_case == "equality_matches_extremal"

    def test_two_c4_prop32_equality(self):
        g = disjoint_union(generate("cycle", 4), generate("cycle", 4))
        recs = records_by_id(verify_graph(g))
        assert recs["PROP_3_2"].status == "pass"
        assert recs["PROP_3_2"].equality_case == "equality_matches_extremal"
        assert recs["PROP_3_2"].observed == 2

    def test_no_pm_single_inapplicable(self):
        recs = verify_graph(generate("cycle", 5))
        assert len(recs) == 1
        assert recs[0].theorem_id == "NO_PERFECT_MATCHING"
        assert recs[0].status == "inapplicable"

    def test_prism_torus_like_values(self):
        # the prism attains THM_3_4 equality without being nK2 or K_{n,n}:
        # classified n/a, never equality_mismatch, and still passes
        prism = cartesian_product(generate("path", 2), generate("cycle", 3))
        recs = records_by_id(verify_graph(prism))
        assert recs["THM_3_4"].status == "pass"
        assert recs["THM_3_4"].equality_case == "n/a"

    def test_deterministic_records(self):
        g = make_H_hat_join(3, 1)
        a = [r.to_json_dict() for r in verify_graph(g)]
        b = [r.to_json_dict() for r in verify_graph(g)]
        assert a == b

    def test_unique_pm_equality_family(self):
        recs = records_by_id(verify_graph(make_H_hat(4)))
        assert recs["THM_1_5"].equality_case == "equality_matches_extremal"
        recs = records_by_id(verify_graph(make_H(4, 0)))
        assert recs["THM_1_4"].equality_case == "equality_matches_extremal"

    def test_hhat_join_thm21_equality(self):
        recs = records_by_id(verify_graph(make_H_hat_join(4, 1)))
        assert recs["THM_2_1"].equality_case == "equality_matches_extremal"
        assert recs["COR_2_2"].equality_case == "equality_matches_extremal"

    def test_matching_join_thm28_equality(self):
        recs = records_by_id(verify_graph(make_matching_join(3, 1)))
        assert recs["THM_2_8"].status == "pass"
        assert recs["THM_2_8"].equality_case == "equality_matches_extremal"

    def test_g1_member_thm45(self):
        recs = records_by_id(verify_graph(make_G1_member(3, [(1, 2)])))
        assert recs["THM_4_5"].status == "pass"
        assert recs["REM_4_8"].status == "pass"


class TestKnownValues:
    def test_small_grid_and_cubes(self):
        recs = verify_known_values(["grid:4x4", "Q:2", "Q:3", "pc:2x3"])
        assert all(r.status == "pass" for r in recs)
        byq = {(r.inputs["family"], r.inputs["quantity"]): r.observed for r in recs}
        assert byq[("grid:4x4", "f")] == 2
        assert byq[("grid:4x4", "F")] == 4
        assert byq[("Q:3", "f")] == 2
        assert byq[("pc:2x3", "F")] == 2


class TestPachterKim:
    def test_grids_and_even_cycles(self):
        targets = [
            cartesian_product(generate("path", 2), generate("path", 4)),
            cartesian_product(generate("path", 4), generate("path", 4)),
            generate("cycle", 8),
            disjoint_union(generate("cycle", 4), generate("cycle", 4)),
        ]
        for g in targets:
            assert verify_pachter_kim(g).status == "pass"


class TestRemark49:
    def test_disconnected_members_are_two_complete_bipartite(self):
        # every disconnected G1/G2 member over sides <= 4 splits into exactly
        # two balanced complete bipartite components
        from forcing_lab.families import classify
        from forcing_lab.graphs import components, induced_subgraph, is_connected
        from forcing_lab.matchings import has_perfect_matching
        from forcing_lab.sweep import bipartite_graph_from_mask
        from forcing_lab.verify import is_complete_bipartite_balanced

        hits = 0
        for side in (2, 3, 4):
            for mask in range(1 << (side * side)):
                g = bipartite_graph_from_mask(side, mask)
                if not has_perfect_matching(g) or is_connected(g):
                    continue
                report = classify(g)
                if not (report.g1_member or report.g2_member):
                    continue
                hits += 1
                comps = components(g)
                assert len(comps) == 2
                for comp in comps:
                    sub = induced_subgraph(g, comp)
                    assert is_complete_bipartite_balanced(sub)
                    assert has_perfect_matching(sub)
        assert hits > 0


class TestCrossover:
    def test_spec_examples(self):
        recs = verify_crossover_remark([6], [21])
        assert recs[0].status == "pass"
        assert "(e-n)/2" in recs[0].bound
        recs = verify_crossover_remark([4], [14])
        assert recs[0].status == "pass"
        assert "r=" in recs[0].bound

    def test_small_e_inapplicable(self):
        recs = verify_crossover_remark([4], [5])
        assert recs[0].status == "inapplicable"

    def test_full_ranges_pass(self):
        for rec in verify_crossover_remark(range(2, 9)):
            assert rec.status in ("pass", "inapplicable")

    def test_k22_sanity_bound_value(self):
        from fractions import Fraction
        from forcing_lab.solver import ExactBound

        # n=2, e=4: the sqrt bound evaluates to exactly 1 = n-1
        bound = ExactBound(Fraction(2 - 4 - 1, 2), Fraction(1, 2), Fraction(25))
        assert bound.equals(1)
