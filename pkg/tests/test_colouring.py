import random

import pytest

from oddcluster import (
    Budgets,
    Graph,
    OddModelCertificate,
    assemble_certificate,
    bfs_layers,
    clustering_budget,
    colour_bounded_tw,
    colour_budget,
    colour_pipeline,
    exact_treewidth,
    find_odd_model,
    heuristic_decomposition,
    is_nontrivial,
    layered_spanning_tree,
    u_graph,
    verify_colouring,
    verify_model,
    verify_odd_witness,
)
from oddcluster.colouring import monochromatic_components
from oddcluster.decomposition import trivial_decomposition
from oddcluster.generators import (
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    random_partial_ktree,
    star_graph,
)


def decompose(g):
    if g.n <= 18:
        return exact_treewidth(g)[1]
    return heuristic_decomposition(g)


def check_certificate(g, cert):
    ok, why = verify_model(g, cert.model)
    assert ok, why
    ok, why = verify_odd_witness(g, cert.model, cert.witness)
    assert ok, why
    assert is_nontrivial(cert.model)
    assert cert.model.pattern == u_graph(cert.h, cert.d)


class TestBudgets:
    def test_small_values(self):
        assert colour_budget(1) == 1
        assert colour_budget(2) == 4
        assert colour_budget(3) == 10

    def test_recurrence(self):
        for h in range(2, 12):
            assert colour_budget(h) == 2 * (colour_budget(h - 1) + 1)

    def test_clustering_identity(self):
        assert clustering_budget(2, 1) == 3
        for d in range(1, 6):
            for w in range(0, 6):
                assert clustering_budget(d, w) == (d - 1) * (w + 1) + 1

    def test_budgets_dataclass(self):
        b = Budgets(h=3, d=2, w=2)
        assert b.colours == 10 and b.clustering == 4

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            colour_budget(0)
        with pytest.raises(ValueError):
            clustering_budget(0, 1)


class TestBaseCase:
    def test_edgeless(self):
        g = empty_graph(7)
        out = colour_bounded_tw(g, 1, 1, trivial_decomposition(g))
        assert out.num_colours == 1 and out.max_cluster == 1

    def test_edge_gives_certificate(self):
        g = path_graph(2)
        out = colour_bounded_tw(g, 1, 3, trivial_decomposition(g))
        assert isinstance(out, OddModelCertificate)
        assert out.h == 1
        check_certificate(g, out)


class TestColourBoundedTw:
    def test_star_h2(self):
        g = star_graph(4)
        w, dec = exact_treewidth(g)
        assert find_odd_model(g, u_graph(1, 1), require_nontrivial=True) is None or True
        out = colour_bounded_tw(g, 2, 1, dec)
        ok, why = verify_colouring(g, out, colour_budget(2), clustering_budget(1, w))
        assert ok, why

    def test_large_even_cycle(self):
        g = cycle_graph(20)
        dec = decompose(g)
        out = colour_bounded_tw(g, 2, 2, dec)
        ok, why = verify_colouring(g, out, 4, clustering_budget(2, dec.width))
        assert ok, why

    def test_certificate_arm_h2_d1(self):
        # hub 0 over {1,2,3} with the edge 2-3 inside layer 1
        g = Graph(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
        out = colour_bounded_tw(g, 2, 1, decompose(g))
        assert isinstance(out, OddModelCertificate)
        assert (out.h, out.d) == (2, 1)
        check_certificate(g, out)

    def test_certificate_arm_h2_d2(self):
        g = Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 3), (4, 5)])
        out = colour_bounded_tw(g, 2, 2, decompose(g))
        assert isinstance(out, OddModelCertificate)
        check_certificate(g, out)

    def test_disconnected_input(self):
        g = Graph(8, [(0, 1), (1, 2), (4, 5), (5, 6), (6, 7)])
        out = colour_bounded_tw(g, 2, 1, decompose(g))
        ok, why = verify_colouring(g, out, colour_budget(2), clustering_budget(1, 1))
        assert ok, why

    def test_dichotomy_totality_and_soundness_fuzz(self):
        rng = random.Random(4242)
        for _ in range(60):
            n = rng.randint(2, 30)
            k = rng.randint(1, 3)
            g = random_partial_ktree(n, k, rng.randrange(10**6), edge_keep=rng.uniform(0.4, 1.0))
            dec = decompose(g)
            h = rng.randint(1, 3)
            d = rng.randint(1, 3)
            out = colour_bounded_tw(g, h, d, dec)
            if isinstance(out, OddModelCertificate):
                check_certificate(g, out)
            else:
                ok, why = verify_colouring(
                    g, out, colour_budget(h), clustering_budget(d, max(dec.width, 0))
                )
                assert ok, why

    def test_layer_locality_of_clusters(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_partial_ktree(25, 2, rng.randrange(10**6))
            out = colour_bounded_tw(g, 3, 2, decompose(g))
            if isinstance(out, OddModelCertificate):
                continue
            for comp in monochromatic_components(g, out.colour):
                scopes = {out.scope[v] for v in comp}
                assert len(scopes) == 1

    def test_deterministic(self):
        g = random_partial_ktree(18, 2, 123)
        dec = decompose(g)
        a = colour_bounded_tw(g, 2, 2, dec)
        b = colour_bounded_tw(g, 2, 2, dec)
        assert type(a) is type(b)
        if not isinstance(a, OddModelCertificate):
            assert a.colour == b.colour


class TestAssembleCertificate:
    def _fixture(self):
        # hub 1 hangs off 0; layer 2 = {2,3,4} with the edge 3-4
        g = Graph(5, [(0, 1), (1, 2), (1, 3), (1, 4), (3, 4)])
        layering = bfs_layers(g, 0)
        assert layering.layers == ((0,), (1,), (2, 3, 4))
        found = find_odd_model(g, u_graph(1, 1), region=[3, 4], require_nontrivial=True)
        assert found is not None
        tree = layered_spanning_tree(g, layering, 2, 2)
        return g, layering, tree, found

    def test_d1_h2(self):
        g, layering, tree, found = self._fixture()
        cert = assemble_certificate(g, layering, 2, 2, tree, [found], 2, 1)
        check_certificate(g, cert)
        assert set(cert.model.branch_sets[0]) == tree.vertices()

    def test_parity_colouring_proper(self):
        g, layering, tree, found = self._fixture()
        cert = assemble_certificate(g, layering, 2, 2, tree, [found], 2, 1)
        layer_of = layering.layer_of()
        for c, p in tree.parent.items():
            assert cert.witness.colour[c] != cert.witness.colour[p]
        for v in tree.vertices():
            if layer_of[v] == 1:
                assert cert.witness.colour[v] == 0  # layer i-1 is red

    def test_monochromatic_join_to_layer_below(self):
        g, layering, tree, found = self._fixture()
        cert = assemble_certificate(g, layering, 2, 2, tree, [found], 2, 1)
        child_set = cert.model.branch_sets[1]
        reds = [v for v in child_set if cert.witness.colour[v] == 0]
        assert any(
            cert.witness.colour.get(u) == 0 for v in reds for u in g.adj[v] if u in tree.vertices()
        )

    def test_rejects_wrong_count(self):
        g, layering, tree, found = self._fixture()
        with pytest.raises(ValueError):
            assemble_certificate(g, layering, 2, 2, tree, [found, found], 2, 1)

    def test_rejects_trivial_submodel(self):
        g, layering, tree, _ = self._fixture()
        trivial = find_odd_model(g, u_graph(1, 1), region=[3, 4], require_nontrivial=False)
        with pytest.raises(ValueError):
            assemble_certificate(g, layering, 2, 2, tree, [trivial], 2, 1)


class TestPipeline:
    def test_bipartite_forest_k3(self):
        g = Graph(9, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (7, 8)])
        out = colour_pipeline(g, complete_graph(3))
        assert not isinstance(out, OddModelCertificate)
        assert out.num_colours <= colour_budget(3)

    def test_c6_k2_all_red(self):
        g = cycle_graph(6)
        out = colour_pipeline(g, Graph(2, [(0, 1)]), partition=["r"] * 6)
        assert out.num_colours <= colour_budget(2)  # blue side is empty

    def test_total_bound_arithmetic(self):
        from oddcluster import connected_tree_depth

        assert connected_tree_depth(Graph(2, [(0, 1)]))[0] == 2
        assert 3 * 2**2 - 4 == 8 == 2 * colour_budget(2)

    def test_mixed_partition(self):
        g = cycle_graph(8)
        partition = ["r", "r", "b", "b", "r", "r", "b", "b"]
        out = colour_pipeline(g, complete_graph(3), partition=partition)
        assert not isinstance(out, OddModelCertificate)
        assert out.num_colours <= 2 * colour_budget(3)
        ok, why = verify_colouring(g, out, 2 * colour_budget(3), clustering_budget(3, 2))
        assert ok, why

    def test_certificate_bubbles_up(self):
        # odd cycle against K_1: every edge is a non-trivial odd model
        g = cycle_graph(5)
        out = colour_pipeline(g, Graph(1))
        assert isinstance(out, OddModelCertificate)
        check_certificate(g, out)

    def test_rejects_bad_partition(self):
        with pytest.raises(ValueError):
            colour_pipeline(cycle_graph(4), Graph(2, [(0, 1)]), partition=["r", "b"])
