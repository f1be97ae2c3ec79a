#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shadowlab/analytics_k3.hpp"
#include "shadowlab/incidence.hpp"
#include "shadowlab/set_family.hpp"

using namespace shadowlab;

namespace {

IncidenceHypergraph canonical(unsigned r, unsigned c) {
  const BeConfiguration be = construct_canonical(r, 3, c);
  return IncidenceHypergraph::build(be.a, be.b, 3);
}

/// Two-edge paths from u to v counted over all centres and edge pairs.
unsigned brute_paths(const IncidenceHypergraph& h, VertexId u, VertexId v) {
  unsigned total = 0;
  for (VertexId c = 0; c < h.vertex_count(); ++c) {
    if (c == u || c == v) continue;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (!h.incident(u, e) || !h.incident(c, e)) continue;
      for (EdgeId f = 0; f < h.edge_count(); ++f)
        if (f != e && h.incident(c, f) && h.incident(v, f)) ++total;
    }
  }
  return total;
}

struct BruteTotals {
  Rational e1;
  std::uint64_t e4 = 0, e5 = 0, e6 = 0, e7 = 0, e8 = 0, e9 = 0;
};

BruteTotals brute_totals(const IncidenceHypergraph& h) {
  BruteTotals t;
  const Rational mean(3 * h.edge_count(), h.vertex_count());
  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    const Rational dev = Rational(h.degree(u)) - mean;
    t.e1 += dev * dev;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
      if (u == v) continue;
      const std::size_t d = symmetric_difference_size(h.vertex(u), h.vertex(v)) / 2;
      if (d == 1) {
        bool share = false;
        for (EdgeId e = 0; e < h.edge_count(); ++e) share |= h.incident(u, e) && h.incident(v, e);
        t.e8 += !share;
      } else if (d == 2) {
        switch (brute_paths(h, u, v)) {
          case 3: ++t.e4; break;
          case 2: ++t.e5; break;
          case 1: ++t.e6; break;
          case 0: ++t.e7; break;
          default: break;
        }
      } else {
        ++t.e9;
      }
    }
  }
  return t;
}

}  // namespace

TEST_CASE("canonical configurations are exact") {
  for (unsigned r : {3u, 4u}) {
    for (unsigned c = 4; c <= 6; ++c) {
      const IncidenceHypergraph h = canonical(r, c);
      CAPTURE(r);
      CAPTURE(c);
      const k3::IdentityReport id = k3::identity_check(h);
      CHECK(id.equal);
      CHECK(id.lhs == Rational(oracle::binom(c, 2) * (oracle::binom(c, 2) - 1)));
      for (VertexId v = 0; v < h.vertex_count(); ++v) CHECK(k3::k3_gamma(h, v) == 0);
      const k3::EpsilonProfile p = k3::epsilon_profile(h);
      CHECK(p.totals.e1 == 0);
      CHECK(p.totals.e8 == 0);
      CHECK(p.totals.e9 == 0);
    }
  }
  const IncidenceHypergraph c4 = canonical(3, 4);
  CHECK(k3::count_p2(c4) == 6);
  CHECK(k3::identity_check(c4).lhs == 30);
}

TEST_CASE("one missing edge leaves a positive error") {
  const SetFamily b(2, oracle::all_subsets(4, 2));
  const SetFamily a(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  const IncidenceHypergraph h = IncidenceHypergraph::build(a, b, 3);
  const k3::EpsilonProfile p = k3::epsilon_profile(h);
  CHECK(p.totals.e8 == 6);
  CHECK(k3::identity_check(p).equal);
  CHECK(k3::k3_gamma(h, *h.vertex_index(KSet{2, 3})) > 0);
}

TEST_CASE("a single edge has only the degree term") {
  const SetFamily a(3, {{1, 2, 3}});
  const IncidenceHypergraph h = IncidenceHypergraph::build(a, shadow(a), 3);
  const k3::EpsilonProfile p = k3::epsilon_profile(h);
  CHECK(p.totals.e1 == 0);
  CHECK(p.totals.e2 + p.totals.e3 + p.totals.e4 + p.totals.e5 + p.totals.e6 + p.totals.e7 + p.totals.e8 +
            p.totals.e9 ==
        0);
  CHECK(k3::identity_check(p).equal);
}

TEST_CASE("error terms agree with brute force on random configurations") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const unsigned n = 5 + oracle::pick(rng, 3);
    const unsigned r = 3 + oracle::pick(rng, 2);
    const Configuration cfg = oracle::random_configuration(rng, n, r, 3);
    const IncidenceHypergraph h = IncidenceHypergraph::build(cfg.a, cfg.b, 3);
    const k3::EpsilonProfile p = k3::epsilon_profile(h);
    const BruteTotals bt = brute_totals(h);
    CAPTURE(t);
    CHECK(p.totals.e1 == bt.e1);
    CHECK(p.totals.e4 == bt.e4);
    CHECK(p.totals.e5 == bt.e5);
    CHECK(p.totals.e6 == bt.e6);
    CHECK(p.totals.e7 == bt.e7);
    CHECK(p.totals.e8 == bt.e8);
    CHECK(p.totals.e9 == bt.e9);
    CHECK(k3::identity_check(p).equal);
    CHECK(p.ordered_distance1 + p.ordered_distance2 + p.ordered_far == p.b * (p.b - 1));
    CHECK(p.j_from_pairs == p.j_from_partners);
    CHECK(p.ordered_distance1 == 6 * p.a + p.totals.e8);
    CHECK(p.totals.e2 % 4 == 0);
    CHECK(p.totals.e3 % 4 == 0);
    if (p.intersecting_pairs > 0) {
      CHECK(p.min_cross_pairs >= 2);
      CHECK(p.max_cross_pairs <= 4);
    }
    // Sum of binom(deg, 2) counts intersecting edge pairs.
    std::uint64_t pairs = 0;
    for (unsigned d : h.degrees()) pairs += std::uint64_t{d} * (d - 1) / 2;
    CHECK(k3::count_p2(h) == pairs);
    CHECK(p.intersecting_pairs == pairs);
    Rational sum = 0;
    for (VertexId v = 0; v < h.vertex_count(); ++v) sum += k3::k3_gamma(h, v);
    CHECK(sum == k3::identity_check(p).rhs - Rational(9 * p.a * p.a, 2 * p.b) + Rational(3 * p.a, 2) -
                     Rational(6 * p.a));
    for (VertexId u = 0; u < h.vertex_count(); ++u)
      for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (distance(h.vertex(u), h.vertex(v)) == 2) CHECK(k3::connecting_paths(h, u, v) == brute_paths(h, u, v));
  }
}

TEST_CASE("octahedra and colour classes") {
  const IncidenceHypergraph c4 = canonical(3, 4);
  const IncidenceHypergraph c5 = canonical(3, 5);
  for (VertexId v = 0; v < c4.vertex_count(); ++v) {
    const k3::OctahedronReport o = k3::octahedron_census(c4, v);
    CHECK(o.octahedra == 1);
    CHECK(o.colour_report.s == 2);
  }
  for (VertexId v = 0; v < c5.vertex_count(); ++v) {
    const k3::OctahedronReport o = k3::octahedron_census(c5, v);
    CHECK(o.octahedra == 3);
    CHECK(o.colour_report.s == 3);
  }
  // With r = 4 every edge through B = S u {x, y} drops the pair of B's
  // elements outside S, so a single colour holds all of them.
  const BeConfiguration be = construct_canonical(4, 3, 5);
  const IncidenceHypergraph h = IncidenceHypergraph::build(be.a, be.b, 3);
  const VertexId v = *h.vertex_index(be.b[0]);
  const k3::ColourClassReport cc = k3::colour_classes(h, v);
  CHECK(cc.s == h.degree(v));
  REQUIRE(cc.core);
  CHECK(*cc.core == be.core);
}

TEST_CASE("edge classification around the core") {
  const BeConfiguration be = construct_canonical(4, 3, 5);
  const IncidenceHypergraph h = IncidenceHypergraph::build(be.a, be.b, 3);
  const k3::EdgeClassification ec = k3::classify_edges(h, be.core);
  CHECK(ec.nice == h.edge_count());
  CHECK(ec.linking == 0);
  CHECK(ec.outside == 0);
  CHECK_THROWS_AS(k3::classify_edges(h, KSet{}), std::invalid_argument);

  // Adding a vertex outside the core and an edge linking it.
  std::vector<KSet> bs(be.b.begin(), be.b.end());
  std::vector<KSet> as(be.a.begin(), be.a.end());
  bs.push_back(KSet{1, 2, 3});
  as.push_back(KSet{1, 2, 3, 6});
  const SetFamily b2(3, bs), a2(4, as);
  if (validate(a2, b2, 3).pass) {
    const IncidenceHypergraph h2 = IncidenceHypergraph::build(a2, b2, 3);
    const k3::EdgeClassification ec2 = k3::classify_edges(h2, be.core);
    CHECK(ec2.linking + ec2.nice + ec2.outside == h2.edge_count());
    CHECK(ec2.linking >= 1);
  }
}

TEST_CASE("analytics reject other uniformities") {
  const BeConfiguration be = construct_canonical(4, 4, 5);
  const IncidenceHypergraph h = IncidenceHypergraph::build(be.a, be.b, 4);
  CHECK_THROWS_AS(k3::epsilon_profile(h), std::invalid_argument);
  CHECK_THROWS_AS(k3::identity_check(h), std::invalid_argument);
}
