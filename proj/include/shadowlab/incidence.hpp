#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "shadowlab/set_family.hpp"

namespace shadowlab {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// k-uniform hypergraph with the members of B as vertices and the members of
/// A as edges. Each edge is wired to the k colex-smallest members of B it
/// contains. Immutable once built.
class IncidenceHypergraph {
 public:
  /// Throws std::invalid_argument if the (A, B, k) cover condition fails.
  static IncidenceHypergraph build(const SetFamily& a, const SetFamily& b, unsigned k);

  unsigned k() const { return k_; }
  unsigned r() const { return edges_.member_size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const SetFamily& vertices() const { return vertices_; }
  const SetFamily& edges() const { return edges_; }
  const KSet& vertex(VertexId v) const { return vertices_[v]; }
  const KSet& edge(EdgeId e) const { return edges_[e]; }

  /// The k incident vertices of edge e, ascending.
  std::span<const VertexId> edge_vertices(EdgeId e) const { return edge_vertices_[e]; }
  /// Incident edges of vertex v, ascending.
  std::span<const EdgeId> vertex_edges(VertexId v) const { return vertex_edges_[v]; }
  unsigned degree(VertexId v) const { return static_cast<unsigned>(vertex_edges_[v].size()); }
  std::vector<unsigned> degrees() const;

  std::optional<VertexId> vertex_index(const KSet& s) const { return vertices_.index_of(s); }
  std::optional<EdgeId> edge_index(const KSet& s) const { return edges_.index_of(s); }

  bool incident(VertexId v, EdgeId e) const;

 private:
  SetFamily vertices_;
  SetFamily edges_;
  unsigned k_ = 0;
  std::vector<std::vector<VertexId>> edge_vertices_;
  std::vector<std::vector<EdgeId>> vertex_edges_;
};

/// Half the symmetric difference of two equal-size sets.
std::size_t distance(const KSet& b1, const KSet& b2);

}  // namespace shadowlab
