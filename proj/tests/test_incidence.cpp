#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shadowlab/incidence.hpp"
#include "shadowlab/set_family.hpp"

using namespace shadowlab;

TEST_CASE("incidence examples") {
  const BeConfiguration c4 = construct_canonical(3, 3, 4);
  const IncidenceHypergraph h = IncidenceHypergraph::build(c4.a, c4.b, 3);
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 4);
  for (unsigned d : h.degrees()) CHECK(d == 2);

  const SetFamily a(3, {{1, 2, 3}});
  const IncidenceHypergraph single = IncidenceHypergraph::build(a, shadow(a), 3);
  CHECK(single.degrees() == std::vector<unsigned>{1, 1, 1});

  const BeConfiguration be = construct_be(5, 3, 6);
  const IncidenceHypergraph hb = IncidenceHypergraph::build(be.a, be.b, 3);
  auto sorted = [](std::vector<unsigned> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(hb.degrees()) == sorted(h.degrees()));

  CHECK_THROWS_AS(IncidenceHypergraph::build(a, SetFamily(2, {{1, 2}}), 3), std::invalid_argument);
}

TEST_CASE("distance") {
  CHECK(distance(KSet{1, 2}, KSet{1, 2}) == 0);
  CHECK(distance(KSet{1, 2}, KSet{1, 3}) == 1);
  CHECK(distance(KSet{1, 2}, KSet{3, 4}) == 2);
  CHECK_THROWS_AS(distance(KSet{1, 2}, KSet{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("incidence invariants on random configurations") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const unsigned n = 5 + oracle::pick(rng, 3);
    const unsigned r = 3 + oracle::pick(rng, 2);
    const unsigned k = 2 + oracle::pick(rng, r - 1);
    const Configuration cfg = oracle::random_configuration(rng, n, r, k);
    const IncidenceHypergraph h = IncidenceHypergraph::build(cfg.a, cfg.b, k);
    const IncidenceHypergraph again = IncidenceHypergraph::build(cfg.a, cfg.b, k);
    std::uint64_t degree_sum = 0;
    for (unsigned d : h.degrees()) degree_sum += d;
    CHECK(degree_sum == std::uint64_t{k} * h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      const auto vs = h.edge_vertices(e);
      REQUIRE(vs.size() == k);
      for (VertexId v : vs) CHECK(h.vertex(v).is_subset_of(h.edge(e)));
      CHECK(std::equal(vs.begin(), vs.end(), again.edge_vertices(e).begin()));
      // The chosen vertices are the colex-smallest contained members.
      std::vector<KSet> contained;
      for (Element x : h.edge(e))
        if (cfg.b.contains(h.edge(e).without(x))) contained.push_back(h.edge(e).without(x));
      std::sort(contained.begin(), contained.end());
      for (unsigned j = 0; j < k; ++j) CHECK(h.vertex(vs[j]) == contained[j]);
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      for (EdgeId f = e + 1; f < h.edge_count(); ++f) {
        unsigned shared = 0;
        for (VertexId v : h.edge_vertices(e)) shared += h.incident(v, f);
        CHECK(shared <= 1);
      }
    for (VertexId u = 0; u < h.vertex_count(); ++u)
      for (VertexId v = 0; v < h.vertex_count(); ++v) {
        CHECK(symmetric_difference_size(h.vertex(u), h.vertex(v)) % 2 == 0);
        if (distance(h.vertex(u), h.vertex(v)) != 1) continue;
        unsigned joint = 0;
        for (EdgeId e = 0; e < h.edge_count(); ++e) joint += h.incident(u, e) && h.incident(v, e);
        CHECK(joint <= 1);
      }
  }
}
