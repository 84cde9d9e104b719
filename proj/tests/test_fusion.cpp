#include <doctest.h>

#include "cyclo/fusion.hpp"
#include "cyclo/qscalar.hpp"
#include "cyclo/subfield.hpp"

using namespace cyclo;

TEST_CASE("graph parsing and structure") {
  auto g = BipartiteGraph::parse_string("# A3\nroot a\na b\nb c\n", "A3");
  CHECK(g.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.is_connected());
  CHECK(g.is_bipartite());
  CHECK(g.depths() == std::vector<int>{0, 1, 2});
  CHECK(BipartiteGraph::parse_string(g.to_text()).edges == g.edges);
  CHECK_THROWS_AS(BipartiteGraph::parse_string("a b c\n"), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph::parse_string("a a\n"), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph::parse_string("# nothing\n"), std::invalid_argument);
  auto tri = BipartiteGraph::parse_string("a b\nb c\nc a\n");
  CHECK_FALSE(tri.is_bipartite());
  auto split = BipartiteGraph::parse_string("a b\nc d\n");
  CHECK_FALSE(split.is_connected());
  CHECK_THROWS_AS(graph_norm(split), std::invalid_argument);
}

TEST_CASE("hard-coded graphs") {
  auto p0 = principal_graph(0), d0 = dual_graph(0), p1 = principal_graph(1), d1 = dual_graph(1);
  CHECK(p0.labels.size() == 10);
  CHECK(d0.labels.size() == 8);
  CHECK(p1.labels.size() == 14);
  CHECK(d1.labels.size() == 12);
  for (const auto* g : {&p0, &d0, &p1, &d1}) {
    CHECK(g->is_connected());
    CHECK(g->is_bipartite());
    CHECK(g->edges.size() + 1 == g->labels.size());
  }
  CHECK(p0.depths()[static_cast<std::size_t>(p0.index_of("P"))] == 4);
  CHECK(d1.depths()[static_cast<std::size_t>(d1.index_of("A"))] == 8);
}

TEST_CASE("characteristic polynomials") {
  CHECK(characteristic_polynomial(path_graph(2).adjacency()) == Poly{-1, 0, 1});
  CHECK(characteristic_polynomial(path_graph(3).adjacency()) == Poly{0, -2, 0, 1});
  // Star with three leaves: x^4 - 3x^2.
  auto star = BipartiteGraph::parse_string("c a\nc b\nc d\n");
  CHECK(characteristic_polynomial(star.adjacency()) == Poly{0, 0, -3, 0, 1});
}

TEST_CASE("graph norms") {
  CHECK(graph_norm_squared(path_graph(2)).is_one());
  NFElem a3 = graph_norm_squared(path_graph(3));
  CHECK(a3 == a3.field()->from_rat(2));
  for (int level : {0, 1}) {
    const ScalarPack& s = ScalarPack::get(level);
    for (const auto& g : {principal_graph(level), dual_graph(level)}) {
      NFElem n2 = graph_norm_squared(g);
      CHECK(minimal_polynomial(n2) == index_min_poly(level));
      CHECK(same_algebraic_number(n2, s.d_index));
      auto ex = express_in_subfield(n2, s.params->index_field);
      REQUIRE(ex.present());
      CHECK(ex.value() == s.d_index);
    }
  }
  CHECK(minimal_polynomial(graph_norm_squared(principal_graph(0))) == Poly{3, -5, 1});
}

TEST_CASE("Perron-Frobenius dimensions") {
  auto a3 = pf_dimensions(path_graph(3));
  CHECK(a3.eigen_equation);
  CHECK(a3.all_positive);
  CHECK(a3.dims.at("v0").is_one());
  CHECK(a3.dims.at("v1") * a3.dims.at("v1") == a3.norm.field->from_rat(2));
  CHECK(a3.dims.at("v2").is_one());
  for (int level : {0, 1}) {
    const ScalarPack& s = ScalarPack::get(level);
    auto pd = pf_dimensions(dual_graph(level));
    auto pp = pf_dimensions(principal_graph(level));
    CHECK(pd.eigen_equation);
    CHECK(pd.all_positive);
    CHECK(pp.all_positive);
    CHECK(pp.dims.at("P") == pp.dims.at("Q"));
    CHECK(pp.dims.at("X") == pp.norm.norm);
    auto ratio = express_in_subfield(pd.dims.at("B") / pd.dims.at("A"), s.params->index_field);
    REQUIRE(ratio.present());
    CHECK(ratio.value() == s.rcheck_index);
    const PlanarParams& lp = *s.params;
    CHECK(ratio.value() == to_index_field(lp, quantum_int(lp, s.n + 2) / quantum_int(lp, s.n)));
  }
}

TEST_CASE("comparison of algebraic numbers") {
  const ScalarPack& s = ScalarPack::get(0);
  CHECK(same_algebraic_number(s.d_index, s.d_index));
  CHECK_FALSE(same_algebraic_number(s.d_index, s.d_index * Rat(-1) + Rat(5)));
  CHECK_FALSE(same_algebraic_number(s.d_index, s.rcheck_index));
}
