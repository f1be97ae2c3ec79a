#include "shadowlab/incidence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace shadowlab {

IncidenceHypergraph IncidenceHypergraph::build(const SetFamily& a, const SetFamily& b, unsigned k) {
  const CoverReport report = validate(a, b, k);
  if (!report.pass)
    throw std::invalid_argument("configuration fails the k-cover condition: member " +
                                a[report.violating.front()].to_string() + " contains only " +
                                std::to_string(report.counts[report.violating.front()]) +
                                " members of B, needs " + std::to_string(k));
  IncidenceHypergraph h;
  h.vertices_ = b;
  h.edges_ = a;
  h.k_ = k;
  h.edge_vertices_.resize(a.size());
  h.vertex_edges_.resize(b.size());
  for (EdgeId e = 0; e < a.size(); ++e) {
    const KSet& set = a[e];
    // Dropping a larger element gives a colex-smaller subset.
    for (std::size_t t = set.size(); t-- > 0 && h.edge_vertices_[e].size() < k;) {
      if (auto v = b.index_of(set.without(set[t]))) {
        h.edge_vertices_[e].push_back(*v);
        h.vertex_edges_[*v].push_back(e);
      }
    }
    std::sort(h.edge_vertices_[e].begin(), h.edge_vertices_[e].end());
  }
  return h;
}

std::vector<unsigned> IncidenceHypergraph::degrees() const {
  std::vector<unsigned> d;
  d.reserve(vertex_edges_.size());
  for (const auto& es : vertex_edges_) d.push_back(static_cast<unsigned>(es.size()));
  return d;
}

bool IncidenceHypergraph::incident(VertexId v, EdgeId e) const {
  const auto& vs = edge_vertices_[e];
  return std::binary_search(vs.begin(), vs.end(), v);
}

std::size_t distance(const KSet& b1, const KSet& b2) {
  if (b1.size() != b2.size())
    throw std::invalid_argument("distance needs equal-size sets, got " + b1.to_string() + " and " +
                                b2.to_string());
  return symmetric_difference_size(b1, b2) / 2;
}

}  // namespace shadowlab
