#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shadowlab/incidence.hpp"
#include "shadowlab/natural.hpp"

// Pair-counting accounting for 3-uniform incidence hypergraphs.
//
// Every ordered pair of distinct vertices (B, B') falls in exactly one of
// three buckets by distance, and each bucket is counted two ways: once from
// the edges (intersecting edge pairs, per-edge vertex pairs) and once from the
// vertex pairs themselves.  The error terms below are the per-vertex
// discrepancies between the two counts; summing them recovers b(b-1) exactly.
namespace shadowlab::k3 {

/// Error terms at one vertex B.
struct VertexEpsilon {
  /// (deg(B) - 3a/b)^2
  Rational e1;
  /// Intersecting edge pairs with B a non-centre vertex whose cross endpoint
  /// pairs include exactly 3 (e2) or 4 (e3) at distance 2.
  std::uint64_t e2 = 0;
  std::uint64_t e3 = 0;
  /// Distance-2 partners of B joined by exactly 3, 2, 1, 0 two-edge paths.
  std::uint64_t e4 = 0;
  std::uint64_t e5 = 0;
  std::uint64_t e6 = 0;
  std::uint64_t e7 = 0;
  /// Distance-1 partners sharing no edge.
  std::uint64_t e8 = 0;
  /// Partners at distance >= 3.
  std::uint64_t e9 = 0;
};

struct EpsilonProfile {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::vector<VertexEpsilon> per_vertex;
  VertexEpsilon totals;

  /// Unordered pairs of distinct edges sharing an incident vertex.
  std::uint64_t intersecting_pairs = 0;
  /// Ordered vertex pairs at distance 1, 2, and >= 3.
  std::uint64_t ordered_distance1 = 0;
  std::uint64_t ordered_distance2 = 0;
  std::uint64_t ordered_far = 0;
  /// |J| counted from intersecting edge pairs (4/6/8 per pair) and from
  /// distance-2 vertex pairs (number of connecting centres).
  std::uint64_t j_from_pairs = 0;
  std::uint64_t j_from_partners = 0;
  /// Smallest and largest number of distance-2 cross pairs seen on an
  /// intersecting edge pair (0 when there are none).
  unsigned min_cross_pairs = 0;
  unsigned max_cross_pairs = 0;
};

/// Number of unordered pairs of distinct edges sharing an incident vertex,
/// enumerated pairwise.
std::uint64_t count_p2(const IncidenceHypergraph& h);

EpsilonProfile epsilon_profile(const IncidenceHypergraph& h);

/// e1/2 + e2/8 + e3/4 + e4/4 + e5/2 + 3e6/4 + e7 + e8 + e9
Rational gamma_of(const VertexEpsilon& eps);

Rational k3_gamma(const IncidenceHypergraph& h, VertexId v);

struct IdentityReport {
  Rational lhs;  // b(b-1)
  Rational rhs;  // 9a^2/(2b) - 3a/2 + 6a + sum of gamma
  bool equal = false;
};

IdentityReport identity_check(const IncidenceHypergraph& h);
IdentityReport identity_check(const EpsilonProfile& profile);

/// Number of two-edge paths B - C - B' through an incident centre C, for a
/// pair at distance 2 (at most 4).
unsigned connecting_paths(const IncidenceHypergraph& h, VertexId from, VertexId to);

using Colour = std::pair<Element, Element>;

struct ColourClass {
  Colour colour;
  std::vector<EdgeId> edges;
};

/// Incident edges of B grouped by the pair of B's elements that the edge's
/// other two vertices drop.
struct ColourClassReport {
  VertexId focus = 0;
  std::vector<ColourClass> classes;  // ordered by colour
  unsigned s = 0;                    // largest class size
  std::optional<Colour> chosen;      // largest class, smallest colour on ties
  std::optional<KSet> core;          // B minus the chosen colour
  std::uint64_t same_colour_pairs = 0;
};

ColourClassReport colour_classes(const IncidenceHypergraph& h, VertexId v);

struct OctahedronReport {
  std::uint64_t octahedra = 0;
  ColourClassReport colour_report;
};

/// Distance-2 partners of B realising all four connecting paths.
OctahedronReport octahedron_census(const IncidenceHypergraph& h, VertexId v);

struct EdgeClassification {
  std::uint64_t nice = 0;
  std::uint64_t linking = 0;
  std::uint64_t outside = 0;
  /// Every linking edge through an outside vertex T equals T u S.
  bool linking_unique = true;
};

/// Splits edges by how many incident vertices contain `core` (all, some,
/// none). Requires |core| = r - k.
EdgeClassification classify_edges(const IncidenceHypergraph& h, const KSet& core);

}  // namespace shadowlab::k3
