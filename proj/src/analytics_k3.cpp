#include "shadowlab/analytics_k3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shadowlab::k3 {

namespace {

void require_k3(const IncidenceHypergraph& h) {
  if (h.k() != 3)
    throw std::invalid_argument("k=3 analytics called on a hypergraph with k=" + std::to_string(h.k()));
}

// Row-major vertex distance table.
class DistanceTable {
 public:
  explicit DistanceTable(const IncidenceHypergraph& h) : n_(h.vertex_count()), d_(n_ * n_) {
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v = u + 1; v < n_; ++v)
        d_[u * n_ + v] = d_[v * n_ + u] =
            static_cast<unsigned>(distance(h.vertex(u), h.vertex(v)));
  }
  unsigned operator()(VertexId u, VertexId v) const { return d_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<unsigned> d_;
};

std::vector<VertexId> others(const IncidenceHypergraph& h, EdgeId e, VertexId centre) {
  std::vector<VertexId> out;
  for (VertexId w : h.edge_vertices(e))
    if (w != centre) out.push_back(w);
  return out;
}

// The single element of `a` missing from `b` (sets of equal size at distance 1).
Element dropped(const KSet& a, const KSet& b) {
  for (Element x : a)
    if (!b.contains(x)) return x;
  throw std::logic_error("dropped: sets are equal");
}

bool shares_edge(const IncidenceHypergraph& h, VertexId u, VertexId v) {
  const KSet& bu = h.vertex(u);
  const KSet& bv = h.vertex(v);
  const auto e = h.edge_index(bu.with(dropped(bv, bu)));
  return e && h.incident(u, *e) && h.incident(v, *e);
}

KSet set_union(const KSet& a, const KSet& b) {
  std::vector<Element> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return KSet::from_sorted(std::move(out));
}

}  // namespace

std::uint64_t count_p2(const IncidenceHypergraph& h) {
  require_k3(h);
  std::uint64_t count = 0;
  for (EdgeId e1 = 0; e1 < h.edge_count(); ++e1) {
    const auto v1 = h.edge_vertices(e1);
    for (EdgeId e2 = e1 + 1; e2 < h.edge_count(); ++e2) {
      const auto v2 = h.edge_vertices(e2);
      const bool share = std::any_of(v1.begin(), v1.end(), [&](VertexId v) {
        return std::binary_search(v2.begin(), v2.end(), v);
      });
      if (share) ++count;
    }
  }
  return count;
}

unsigned connecting_paths(const IncidenceHypergraph& h, VertexId from, VertexId to) {
  const KSet& b = h.vertex(from);
  const KSet& target = h.vertex(to);
  if (distance(b, target) != 2)
    throw std::invalid_argument("connecting_paths needs a pair at distance 2");
  std::vector<Element> xs, ys;
  for (Element x : target)
    if (!b.contains(x)) xs.push_back(x);
  for (Element y : b)
    if (!target.contains(y)) ys.push_back(y);

  unsigned paths = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (Element y : ys) {
      const KSet centre_set = b.with(xs[i]).without(y);
      const auto centre = h.vertex_index(centre_set);
      if (!centre) continue;
      const auto first = h.edge_index(b.with(xs[i]));
      if (!first || !h.incident(from, *first) || !h.incident(*centre, *first)) continue;
      const auto second = h.edge_index(centre_set.with(xs[1 - i]));
      if (!second || !h.incident(*centre, *second) || !h.incident(to, *second)) continue;
      ++paths;
    }
  }
  return paths;
}

EpsilonProfile epsilon_profile(const IncidenceHypergraph& h) {
  require_k3(h);
  if (h.vertex_count() == 0) throw std::invalid_argument("epsilon_profile needs b >= 1");
  EpsilonProfile p;
  p.a = h.edge_count();
  p.b = h.vertex_count();
  p.per_vertex.resize(p.b);
  const DistanceTable dist(h);

  const Rational mean(Natural(3 * p.a), Natural(p.b));
  for (VertexId v = 0; v < p.b; ++v) {
    const Rational dev = Rational(h.degree(v)) - mean;
    p.per_vertex[v].e1 = dev * dev;
  }

  p.min_cross_pairs = 4;
  for (VertexId centre = 0; centre < p.b; ++centre) {
    const auto es = h.vertex_edges(centre);
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::vector<VertexId> left = others(h, es[i], centre);
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        const std::vector<VertexId> right = others(h, es[j], centre);
        unsigned cross = 0;
        for (VertexId u : left)
          for (VertexId w : right)
            if (dist(u, w) == 2) ++cross;
        ++p.intersecting_pairs;
        p.j_from_pairs += 2 * cross;
        p.min_cross_pairs = std::min(p.min_cross_pairs, cross);
        p.max_cross_pairs = std::max(p.max_cross_pairs, cross);
        if (cross == 3 || cross == 4) {
          for (const auto* side : {&left, &right})
            for (VertexId u : *side) (cross == 3 ? p.per_vertex[u].e2 : p.per_vertex[u].e3) += 1;
        }
      }
    }
  }
  if (p.intersecting_pairs == 0) p.min_cross_pairs = 0;

  for (VertexId u = 0; u < p.b; ++u) {
    VertexEpsilon& eps = p.per_vertex[u];
    for (VertexId v = 0; v < p.b; ++v) {
      if (u == v) continue;
      const unsigned d = dist(u, v);
      if (d == 1) {
        ++p.ordered_distance1;
        if (!shares_edge(h, u, v)) ++eps.e8;
      } else if (d == 2) {
        ++p.ordered_distance2;
        const unsigned paths = connecting_paths(h, u, v);
        p.j_from_partners += paths;
        switch (paths) {
          case 3: ++eps.e4; break;
          case 2: ++eps.e5; break;
          case 1: ++eps.e6; break;
          case 0: ++eps.e7; break;
          default: break;
        }
      } else {
        ++p.ordered_far;
        ++eps.e9;
      }
    }
  }

  for (const VertexEpsilon& eps : p.per_vertex) {
    p.totals.e1 += eps.e1;
    p.totals.e2 += eps.e2;
    p.totals.e3 += eps.e3;
    p.totals.e4 += eps.e4;
    p.totals.e5 += eps.e5;
    p.totals.e6 += eps.e6;
    p.totals.e7 += eps.e7;
    p.totals.e8 += eps.e8;
    p.totals.e9 += eps.e9;
  }
  return p;
}

Rational gamma_of(const VertexEpsilon& eps) {
  return eps.e1 / 2 + Rational(eps.e2, 8) + Rational(eps.e3, 4) + Rational(eps.e4, 4) +
         Rational(eps.e5, 2) + Rational(3 * eps.e6, 4) + Rational(eps.e7) + Rational(eps.e8) +
         Rational(eps.e9);
}

Rational k3_gamma(const IncidenceHypergraph& h, VertexId v) {
  if (v >= h.vertex_count()) throw std::out_of_range("k3_gamma: unknown vertex");
  return gamma_of(epsilon_profile(h).per_vertex[v]);
}

IdentityReport identity_check(const EpsilonProfile& p) {
  IdentityReport r;
  const Rational a(p.a), b(p.b);
  r.lhs = b * (b - 1);
  r.rhs = 9 * a * a / (2 * b) - 3 * a / 2 + 6 * a + gamma_of(p.totals);
  r.equal = r.lhs == r.rhs;
  return r;
}

IdentityReport identity_check(const IncidenceHypergraph& h) { return identity_check(epsilon_profile(h)); }

ColourClassReport colour_classes(const IncidenceHypergraph& h, VertexId v) {
  require_k3(h);
  ColourClassReport rep;
  rep.focus = v;
  const KSet& b = h.vertex(v);
  std::map<Colour, std::vector<EdgeId>> classes;
  for (EdgeId e : h.vertex_edges(v)) {
    const std::vector<VertexId> rest = others(h, e, v);
    Element y = dropped(b, h.vertex(rest[0]));
    Element z = dropped(b, h.vertex(rest[1]));
    if (y > z) std::swap(y, z);
    classes[{y, z}].push_back(e);
  }
  for (auto& [colour, edges] : classes) {
    const unsigned size = static_cast<unsigned>(edges.size());
    rep.same_colour_pairs += std::uint64_t{size} * (size - 1) / 2;
    if (size > rep.s) {
      rep.s = size;
      rep.chosen = colour;
    }
    rep.classes.push_back({colour, std::move(edges)});
  }
  if (rep.chosen) rep.core = b.without(rep.chosen->first).without(rep.chosen->second);
  return rep;
}

OctahedronReport octahedron_census(const IncidenceHypergraph& h, VertexId v) {
  require_k3(h);
  OctahedronReport rep;
  rep.colour_report = colour_classes(h, v);
  if (h.degree(v) == 0) return rep;
  const KSet& b = h.vertex(v);
  for (VertexId w = 0; w < h.vertex_count(); ++w) {
    if (w != v && distance(b, h.vertex(w)) == 2 && connecting_paths(h, v, w) == 4) ++rep.octahedra;
  }
  return rep;
}

EdgeClassification classify_edges(const IncidenceHypergraph& h, const KSet& core) {
  if (core.size() + h.k() != h.r())
    throw std::invalid_argument("classify_edges needs |S| = r - k");
  EdgeClassification c;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    unsigned inside = 0;
    for (VertexId v : h.edge_vertices(e))
      if (core.is_subset_of(h.vertex(v))) ++inside;
    if (inside == h.k()) {
      ++c.nice;
    } else if (inside == 0) {
      ++c.outside;
    } else {
      ++c.linking;
      for (VertexId v : h.edge_vertices(e)) {
        const KSet& t = h.vertex(v);
        if (!core.is_subset_of(t) && set_union(t, core) != h.edge(e)) c.linking_unique = false;
      }
    }
  }
  return c;
}

}  // namespace shadowlab::k3
