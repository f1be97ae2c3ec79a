#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shadowlab/family_io.hpp"
#include "shadowlab/set_family.hpp"

using namespace shadowlab;

namespace {

SetFamily fam(unsigned r, std::vector<KSet> sets) { return SetFamily(r, std::move(sets)); }

std::vector<Element> random_perm(std::mt19937_64& rng, unsigned n) {
  std::vector<Element> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i + 1;
  for (unsigned i = n; i > 1; --i) std::swap(p[i - 1], p[oracle::pick(rng, i)]);
  return p;
}

}  // namespace

TEST_CASE("families are deduplicated and colex sorted") {
  const SetFamily f = fam(2, {{2, 3}, {1, 2}, {2, 3}, {1, 3}});
  REQUIRE(f.size() == 3);
  CHECK(f[0] == KSet{1, 2});
  CHECK(f[1] == KSet{1, 3});
  CHECK(f[2] == KSet{2, 3});
  CHECK(f.ground_max() == 3);
  CHECK_THROWS_AS(fam(2, {{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("shadow examples") {
  CHECK(shadow(fam(4, {{1, 2, 3, 4}})).size() == 4);
  const SetFamily five = colex_initial_segment(5, 4);
  CHECK(five == fam(4, oracle::all_subsets(5, 4)));
  CHECK(shadow(five) == fam(3, oracle::all_subsets(5, 3)));
  CHECK(shadow(SetFamily(3)).empty());
}

TEST_CASE("shadow is monotone") {
  std::mt19937_64 rng(11);
  const std::vector<KSet> pool = oracle::all_subsets(7, 3);
  for (int t = 0; t < 50; ++t) {
    std::vector<KSet> small, big;
    for (const KSet& s : pool) {
      const auto roll = oracle::pick(rng, 3);
      if (roll == 0) small.push_back(s);
      if (roll <= 1) big.push_back(s);
    }
    CHECK(shadow(fam(3, small)).is_subfamily_of(shadow(fam(3, big))));
  }
}

TEST_CASE("cover counts and validation") {
  const SetFamily a = fam(3, {{1, 2, 3}});
  const SetFamily full = fam(2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(cover_counts(a, full).counts == std::vector<unsigned>{3});
  CHECK(cover_counts(a, fam(2, {{1, 2}})).counts == std::vector<unsigned>{1});
  CHECK(validate(a, full, 3).pass);
  const CoverReport fail = validate(a, fam(2, {{1, 2}}), 2);
  CHECK_FALSE(fail.pass);
  CHECK(fail.violating == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(cover_counts(a, fam(3, {{1, 2, 3}})), std::invalid_argument);

  const BeConfiguration be = construct_be(5, 3, 6);
  const CoverReport rep = validate(be.a, be.b, 3);
  CHECK(rep.pass);
  for (unsigned c : rep.counts) CHECK(c == 3);
}

TEST_CASE("construction examples") {
  const BeConfiguration x = construct_be(5, 3, 6);
  CHECK(x.b.size() == 6);
  CHECK(x.a.size() == 4);
  CHECK(x.core == KSet{5, 6});
  const BeConfiguration y = construct_be(3, 3, 3);
  CHECK(y.b.size() == 3);
  CHECK(y.a.size() == 1);
  CHECK(y.core.empty());
  const BeConfiguration z = construct_be(5, 4, 13);
  CHECK(z.b.size() == 13);
  CHECK(z.a.size() == 6);
  CHECK(validate(z.a, z.b, 4).pass);
  CHECK_THROWS_AS(construct_be(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(construct_be(3, 4, 4), std::invalid_argument);
}

TEST_CASE("construction sizes follow the cascade") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const unsigned r = 2 + oracle::pick(rng, 6);
    const unsigned k = 2 + oracle::pick(rng, r - 1);
    const std::uint64_t b = 1 + oracle::pick(rng, 150);
    const BeConfiguration be = construct_be(r, k, b);
    CAPTURE(r);
    CAPTURE(k);
    CAPTURE(b);
    CHECK(be.b.size() == b);
    CHECK(Natural(be.a.size()) == cascade_shift(cascade_decompose(b, k - 1), +1));
    CHECK(validate(be.a, be.b, k).pass);
    for (const KSet& s : be.a) CHECK(oracle::hits(s, be.b) >= k);
  }
}

TEST_CASE("canonical form examples") {
  CHECK(canonical_form(fam(2, {{2, 3}}), 3) == fam(2, {{1, 2}}));
  const SetFamily f = fam(2, {{1, 2}, {1, 3}});
  CHECK(canonical_form(f) == f);
}

TEST_CASE("canonical form matches brute force and is relabel invariant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const unsigned n = 4 + oracle::pick(rng, 3);
    const unsigned r = 2 + oracle::pick(rng, 2);
    std::vector<KSet> sets;
    for (const KSet& s : oracle::all_subsets(n, r))
      if (oracle::pick(rng, 2)) sets.push_back(s);
    if (sets.empty()) continue;
    const SetFamily f = fam(r, sets);
    const SetFamily c = canonical_form(f, n);
    CHECK(colex_ranks(c) == oracle::brute_canonical_key(f, n));
    CHECK(canonical_form(c, n) == c);
    CHECK(canonical_form(relabel(f, random_perm(rng, n)), n) == c);
  }
}

TEST_CASE("family JSON is bit exact and round trips") {
  const SetFamily f = fam(3, {{1, 2, 3}, {1, 2, 4}});
  CHECK(family_to_json(f) == R"({"r": 3, "sets": [[1,2,3],[1,2,4]]})");
  CHECK(family_from_json(parse_json_text(family_to_json(f))) == f);
  const BeConfiguration be = construct_be(3, 3, 6);
  const Configuration cfg{3, be.a, be.b};
  const Configuration back = configuration_from_json(parse_json_text(configuration_to_json(cfg)));
  CHECK(back.k == 3);
  CHECK(back.a == cfg.a);
  CHECK(back.b == cfg.b);
}

TEST_CASE("malformed family JSON reports a location") {
  CHECK_THROWS_WITH_AS(parse_json_text(R"({"r": 3, "sets": [[1,2,)"), doctest::Contains("byte"), FormatError);
  CHECK_THROWS_WITH_AS(family_from_json(parse_json_text(R"({"r": 2, "sets": [[1,2],[3,0]]})")),
                       doctest::Contains("sets[1][1]"), FormatError);
  CHECK_THROWS_WITH_AS(family_from_json(parse_json_text(R"({"r": 2, "sets": [[1,2,3]]})")),
                       doctest::Contains("sets[0]"), FormatError);
  CHECK_THROWS_WITH_AS(configuration_from_json(parse_json_text(R"({"k": 3, "A": {"r": 3, "sets": []}})")),
                       doctest::Contains("B"), FormatError);
  CHECK_THROWS_AS(family_from_json(parse_json_text(R"({"r": 2, "sets": [[1,1]]})")), FormatError);
}
