#pragma once

#include <string>
#include <vector>

#include "tdcount/formula.hpp"

namespace tdcount {

// Undirected graph over integer vertex ids. No self-loops; adjacency is
// kept symmetric and sorted so traversals are deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<int> vertices);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const;

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& neighbors(int v) const;
  std::size_t edge_count() const;

 private:
  std::vector<int> vertices_;                 // ascending
  std::vector<std::vector<int>> adjacency_;   // parallel to vertices_, each sorted
  int index_of(int v) const;
};

// Primal graph: one vertex per occurring variable, an edge between two
// variables iff they share a clause.
Graph primal_graph(const CnfFormula& f);

// Maximal connected vertex sets, each sorted, ordered by minimum vertex id.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Graph restricted to abstraction variables A: an edge {u,v} for distinct
// u,v in A iff the primal graph has a path between them whose interior
// vertices all lie outside A. Built as direct edges within A plus a clique
// over N(U) ∩ A for every connected component U of primal(F) - A.
Graph nested_primal_graph(const CnfFormula& f, const std::vector<int>& abstraction_vars);

// DOT text for debugging.
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace tdcount
