#pragma once

/**
 * @file fusion.hpp
 * @brief Principal graphs and their Perron-Frobenius data, computed exactly.
 */

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "cyclo/number_field.hpp"

namespace cyclo {

struct BipartiteGraph {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;  // multi-edges allowed
  int root = 0;

  int index_of(const std::string& label) const;  // -1 if absent
  int add_vertex(const std::string& label);      // existing index if present
  void add_edge(const std::string& a, const std::string& b);
  std::vector<std::vector<Rat>> adjacency() const;
  /// BFS depth from the root; -1 for unreachable vertices.
  std::vector<int> depths() const;
  bool is_connected() const;
  /// Every edge joins vertices of opposite depth parity.
  bool is_bipartite() const;

  /// Adjacency-list text: one edge "a b" per line, optional "root a" line, '#' comments.
  /// The first vertex mentioned is the root unless a root line is given.
  static BipartiteGraph parse(std::istream& in, std::string name = "graph");
  static BipartiteGraph parse_string(const std::string& text, std::string name = "graph");
  std::string to_text() const;
};

/// Path 1 - X - JW2 - ... - JW_{n-1} branching into the two arms of the given labels.
BipartiteGraph principal_graph(int level);
BipartiteGraph dual_graph(int level);
BipartiteGraph path_graph(int vertices);

/// det(xI - M) by the Faddeev-LeVerrier recursion.
Poly characteristic_polynomial(const std::vector<std::vector<Rat>>& m);

struct GraphNorm {
  Poly char_poly;
  Poly factor;     // irreducible factor carrying the largest eigenvalue
  FieldPtr field;  // Q(norm), designated root the largest eigenvalue
  NFElem norm;
  NFElem norm_sq;
};
/// Throws std::invalid_argument for an empty or disconnected graph.
GraphNorm graph_norm(const BipartiteGraph& g);
NFElem graph_norm_squared(const BipartiteGraph& g);

/// Perron-Frobenius eigenvector with the root scaled to 1, entries in Q(norm).
struct PFData {
  GraphNorm norm;
  std::map<std::string, NFElem> dims;
  bool eigen_equation = false;   // A v = norm v exactly
  bool all_positive = false;     // certified under the designated embedding
};
PFData pf_dimensions(const BipartiteGraph& g);

/// a and b (possibly in different fields) have the same minimal polynomial and overlapping
/// certified embeddings.
bool same_algebraic_number(const NFElem& a, const NFElem& b);

}  // namespace cyclo
