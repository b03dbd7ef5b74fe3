import pytest

from monotree import (
    PseudorandomConfig,
    SimpleGraph,
    check_common_neighbourhoods,
    check_degrees,
    check_edge_density,
    generate_gnp,
)


def star(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(0, v) for v in range(1, n)])


class TestConfig:
    def test_invalid_values_rejected(self):
        with pytest.raises(ValueError):
            PseudorandomConfig(epsilon=0.0)
        with pytest.raises(ValueError):
            PseudorandomConfig(max_tuple=7)
        with pytest.raises(ValueError):
            PseudorandomConfig(size_constant=-1.0)
        with pytest.raises(ValueError):
            PseudorandomConfig(pair_size=0)


class TestEdgeDensity:
    def test_complete_graph_all_pass(self):
        g = SimpleGraph.complete(200)
        cfg = PseudorandomConfig(epsilon=0.1, pair_size=40, density_samples=50)
        out = check_edge_density(g, 1.0, cfg, seed=1).outcome("edge-density")
        assert out.all_passed
        assert out.passes == 50

    def test_empty_graph_all_fail(self):
        g = SimpleGraph.empty(200)
        cfg = PseudorandomConfig(epsilon=0.1, pair_size=40, density_samples=20)
        out = check_edge_density(g, 0.5, cfg, seed=1).outcome("edge-density")
        assert out.fails == 20
        assert not out.all_passed

    def test_too_small_graph_is_vacuous(self):
        g = SimpleGraph.complete(10)
        cfg = PseudorandomConfig(pair_size=8)
        out = check_edge_density(g, 1.0, cfg, seed=0).outcome("edge-density")
        assert out.status == "vacuous"
        assert not out.all_passed
        assert out.passes == 0

    def test_p_zero_is_vacuous(self):
        out = check_edge_density(
            SimpleGraph.complete(30), 0.0, PseudorandomConfig(), seed=0
        ).outcome("edge-density")
        assert out.status == "vacuous"

    def test_default_size_uses_constant(self):
        # C ln(n) / p = 10 * ln(100) / 0.9 ~ 51 > n/2, so vacuous
        g = generate_gnp(100, 0.9, seed=0)
        out = check_edge_density(g, 0.9, PseudorandomConfig(), seed=2).outcome(
            "edge-density"
        )
        assert out.status == "vacuous"

    def test_deterministic(self):
        g = generate_gnp(300, 0.5, seed=5)
        cfg = PseudorandomConfig(pair_size=30, density_samples=40)
        a = check_edge_density(g, 0.5, cfg, seed=9)
        b = check_edge_density(g, 0.5, cfg, seed=9)
        assert a == b


class TestDegrees:
    def test_complete_graph_passes(self):
        g = SimpleGraph.complete(200)
        out = check_degrees(g, 1.0, PseudorandomConfig(epsilon=0.01)).outcome("degrees")
        assert out.all_passed

    def test_tiny_epsilon_on_complete_graph_noted(self):
        g = SimpleGraph.complete(100)
        out = check_degrees(g, 1.0, PseudorandomConfig(epsilon=0.001)).outcome("degrees")
        assert out.fails == 100
        assert out.notes  # the epsilon >= 1/n caveat

    def test_empty_graph_fails(self):
        g = SimpleGraph.empty(50)
        out = check_degrees(g, 0.5, PseudorandomConfig()).outcome("degrees")
        assert out.fails == 50

    def test_empty_vertex_set_is_vacuous(self):
        out = check_degrees(SimpleGraph.empty(0), 0.5, PseudorandomConfig()).outcome(
            "degrees"
        )
        assert out.status == "vacuous"

    def test_sampled_graph_concentrates(self):
        g = generate_gnp(800, 0.5, seed=13)
        out = check_degrees(g, 0.5, PseudorandomConfig(epsilon=0.15)).outcome("degrees")
        assert out.fails == 0
        assert out.passes == 800


class TestCommonNeighbourhoods:
    def test_complete_graph_pairs(self):
        g = SimpleGraph.complete(100)
        cfg = PseudorandomConfig(epsilon=0.05, max_tuple=2, neighbourhood_samples=30)
        report = check_common_neighbourhoods(g, 1.0, cfg, seed=3)
        out = report.outcome("common-neighbourhood i=2")
        assert out.all_passed  # n-2 inside (1 +- 0.05) n for n = 100

    def test_star_graph_fails(self):
        g = star(50)
        cfg = PseudorandomConfig(epsilon=0.25, max_tuple=2, neighbourhood_samples=30)
        out = check_common_neighbourhoods(g, 0.5, cfg, seed=4).outcome(
            "common-neighbourhood i=2"
        )
        assert out.fails == 30

    def test_regime_invalid_flagged(self):
        g = generate_gnp(60, 0.2, seed=6)
        cfg = PseudorandomConfig(epsilon=0.25, max_tuple=4)
        report = check_common_neighbourhoods(g, 0.2, cfg, seed=6)
        # p^4 n = 0.096 < 4 = 1/epsilon
        out = report.outcome("common-neighbourhood i=4")
        assert out.status == "regime-invalid"
        assert out.passes == 0 and not out.all_passed

    def test_tiny_graph_vacuous(self):
        report = check_common_neighbourhoods(
            SimpleGraph.complete(2), 1.0, PseudorandomConfig(max_tuple=3), seed=0
        )
        assert report.outcome("common-neighbourhood i=2").status == "vacuous"

    def test_sampled_graph_passes(self):
        g = generate_gnp(1500, 0.5, seed=8)
        cfg = PseudorandomConfig(epsilon=0.25, max_tuple=3, neighbourhood_samples=40)
        report = check_common_neighbourhoods(g, 0.5, cfg, seed=8)
        for i in (1, 2, 3):
            out = report.outcome(f"common-neighbourhood i={i}")
            assert out.status == "ok"
            assert out.pass_fraction() >= 0.99

    def test_quadruple_neighbourhoods_at_scale(self):
        # expected quadruple count 0.5^4 * 5000 = 312.5, far above the
        # validity floor 1/epsilon = 4; concentration makes misses rare
        g = generate_gnp(5000, 0.5, seed=12)
        cfg = PseudorandomConfig(epsilon=0.25, max_tuple=4, neighbourhood_samples=100)
        out = check_common_neighbourhoods(g, 0.5, cfg, seed=12).outcome(
            "common-neighbourhood i=4"
        )
        assert out.status == "ok"
        assert out.pass_fraction() >= 0.99

    def test_deterministic(self):
        g = generate_gnp(200, 0.4, seed=2)
        cfg = PseudorandomConfig(epsilon=0.3, max_tuple=2)
        a = check_common_neighbourhoods(g, 0.4, cfg, seed=11)
        b = check_common_neighbourhoods(g, 0.4, cfg, seed=11)
        assert a == b

    def test_json_shape(self):
        g = generate_gnp(100, 0.5, seed=1)
        report = check_common_neighbourhoods(
            g, 0.5, PseudorandomConfig(max_tuple=2), seed=1
        )
        data = report.to_json()
        assert {o["label"] for o in data["outcomes"]} == {
            "common-neighbourhood i=1",
            "common-neighbourhood i=2",
        }


class TestCompleteGraphBoundary:
    def test_every_check_passes_at_epsilon_six_over_n(self):
        n = 120
        g = SimpleGraph.complete(n)
        cfg = PseudorandomConfig(
            epsilon=6 / n,
            max_tuple=4,
            pair_size=20,
            density_samples=30,
            neighbourhood_samples=30,
        )
        assert check_degrees(g, 1.0, cfg).outcome("degrees").all_passed
        assert check_edge_density(g, 1.0, cfg, seed=3).outcome("edge-density").all_passed
        report = check_common_neighbourhoods(g, 1.0, cfg, seed=3)
        for out in report.outcomes:
            assert out.all_passed
