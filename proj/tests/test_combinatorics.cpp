#include <map>
#include <set>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/set_family.hpp"

using namespace shadowlab;

namespace {

CascadeRep rep(std::initializer_list<std::pair<int, unsigned>> terms, unsigned top) {
  CascadeRep r;
  r.top_index = top;
  for (auto [c, i] : terms) r.terms.push_back({Natural(c), i});
  return r;
}

// Number of strictly decreasing sequences c_s > ... > c_t >= t >= 1 whose
// binomial sum is m, for every m <= limit.
std::map<std::uint64_t, unsigned> representation_counts(unsigned s, std::uint64_t limit) {
  std::map<std::uint64_t, unsigned> counts;
  auto rec = [&](auto&& self, unsigned index, std::uint64_t bound_c, std::uint64_t sum) -> void {
    if (index == 0) return;
    for (std::uint64_t c = index; c < bound_c; ++c) {
      const std::uint64_t v = oracle::binom(c, index).convert_to<std::uint64_t>();
      if (sum + v > limit) break;
      ++counts[sum + v];
      self(self, index - 1, c, sum + v);
    }
  };
  rec(rec, s, limit + s + 1, 0);
  return counts;
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binom(5, 3) == 10);
  CHECK(binom(0, 1) == 0);
  CHECK(binom(29, 3) == 3654);
  CHECK(binom(Natural(100), 50) == Natural("100891344545564193334812497256"));
  CHECK(binom_u64(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binom_u64(100, 50), std::overflow_error);
}

TEST_CASE("cascade examples") {
  CHECK(cascade_decompose(13, 3) == rep({{5, 3}, {3, 2}}, 3));
  CHECK(cascade_decompose(1, 3) == rep({{3, 3}}, 3));
  CHECK(cascade_decompose(10, 2) == rep({{5, 2}}, 2));
  CHECK(cascade_decompose(0, 4).terms.empty());
  CHECK(cascade_eval(rep({{5, 3}, {3, 2}}, 3)) == 13);
  CHECK(cascade_eval(rep({}, 3)) == 0);
  CHECK(cascade_eval(rep({{3, 3}}, 3)) == 1);
  CHECK(cascade_shift(rep({{5, 2}}, 2), 1) == 10);
  CHECK(cascade_shift(rep({{5, 3}, {3, 2}}, 3), 1) == 6);
  CHECK(cascade_shift(rep({{3, 3}}, 3), 0) == 1);
}

TEST_CASE("malformed cascades are rejected") {
  CHECK_THROWS_AS(cascade_eval(rep({{3, 3}, {4, 2}}, 3)), std::invalid_argument);
  CHECK_THROWS_AS(cascade_eval(rep({{1, 3}}, 3)), std::invalid_argument);
  CHECK_THROWS_AS(cascade_shift(rep({{3, 1}}, 1), -1), std::invalid_argument);
}

TEST_CASE("cascade uniqueness against exhaustive sequences") {
  for (unsigned s = 1; s <= 4; ++s) {
    const auto counts = representation_counts(s, 600);
    for (std::uint64_t m = 1; m <= 600; ++m) {
      CAPTURE(s);
      CAPTURE(m);
      REQUIRE(counts.count(m));
      CHECK(counts.at(m) == 1);
    }
  }
}

TEST_CASE("cascade round trip and greedy maximality") {
  for (unsigned s = 1; s <= 6; ++s) {
    for (std::uint64_t m = 0; m <= 3000; m += 7) {
      const CascadeRep r = cascade_decompose(m, s);
      REQUIRE(cascade_eval(r) == m);
      Natural rest = m;
      for (const CascadeTerm& t : r.terms) {
        CHECK(binom(t.c, t.index) <= rest);
        CHECK(binom(t.c + 1, t.index) > rest);
        rest -= binom(t.c, t.index);
      }
    }
  }
  const Natural big = Natural("123456789012345678901234567890");
  CHECK(cascade_eval(cascade_decompose(big, 5)) == big);
}

TEST_CASE("telescoping identity") {
  for (unsigned s = 1; s <= 6; ++s)
    for (unsigned x = s; x <= 30; ++x) {
      Natural sum = 0;
      for (unsigned j = 0; j < s; ++j) sum += binom(x - j, s - j);
      CHECK(sum == binom(x + 1, s) - 1);
    }
}

TEST_CASE("classical Kruskal-Katona values") {
  CHECK(kk_max_a(10, 3) == 10);
  CHECK(kk_max_a(7, 3) == 4);
  CHECK(kk_max_a(406, 3) == 3654);
  CHECK(kk_min_b(10, 3) == 10);
  CHECK(kk_min_b(4, 3) == 6);
  CHECK(kk_min_b(5, 3) == 8);
}

TEST_CASE("Kruskal-Katona against brute-force shadows") {
  for (unsigned r = 2; r <= 5; ++r) {
    Natural prev_max = 0, prev_min = 0;
    for (std::uint64_t a = 0; a <= 120; ++a) {
      const SetFamily seg = colex_initial_segment(a, r);
      std::set<KSet> sh;
      for (const KSet& s : seg)
        for (Element x : s) sh.insert(s.without(x));
      CHECK(kk_min_b(a, r) == sh.size());
      CHECK(kk_min_b(a, r) >= prev_min);
      prev_min = kk_min_b(a, r);
      // Largest colex segment whose shadow fits in a members.
      const Natural best = kk_max_a(a, r);
      CHECK(best >= prev_max);
      prev_max = best;
      CHECK(kk_min_b(best, r) <= a);
      CHECK(kk_min_b(best + 1, r) > a);
    }
  }
}

TEST_CASE("colex rank examples") {
  CHECK(colex_rank(KSet{1, 2, 3, 4}) == 0);
  CHECK(colex_rank(KSet{1, 2, 3, 6}) == 5);
  CHECK(colex_unrank(std::uint64_t{2}, 4) == KSet{1, 2, 4, 5});
  CHECK(colex_unrank(Natural(2), 4) == KSet{1, 2, 4, 5});
}

TEST_CASE("colex rank is a bijection agreeing with the definition") {
  for (unsigned r = 1; r <= 4; ++r) {
    const std::vector<KSet> seg = colex_segment(binom_u64(9, r), r);
    for (std::uint64_t i = 0; i < seg.size(); ++i) {
      CHECK(colex_rank_u64(seg[i]) == i);
      CHECK(colex_unrank(i, r) == seg[i]);
      if (i) {
        CHECK(oracle::colex_less_def(seg[i - 1], seg[i]));
        CHECK(colex_less(seg[i - 1], seg[i]));
      }
    }
  }
  std::mt19937_64 rng(7);
  const std::vector<KSet> pool = oracle::all_subsets(10, 4);
  for (int t = 0; t < 2000; ++t) {
    const KSet& x = pool[oracle::pick(rng, pool.size())];
    const KSet& y = pool[oracle::pick(rng, pool.size())];
    CHECK(oracle::colex_less_def(x, y) == (colex_rank(x) < colex_rank(y)));
    CHECK(oracle::colex_less_def(x, y) == (x < y));
  }
}

TEST_CASE("KSet construction") {
  CHECK(KSet(std::vector<Element>{3, 1, 2}) == KSet{1, 2, 3});
  CHECK_THROWS_AS(KSet(std::vector<Element>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(KSet(std::vector<Element>{0, 1}), std::invalid_argument);
  CHECK(KSet{1, 3}.with(2) == KSet{1, 2, 3});
  CHECK(KSet{1, 2, 3}.without(2) == KSet{1, 3});
  CHECK(KSet::from_mask(KSet{2, 5, 64}.mask()) == KSet{2, 5, 64});
  CHECK(KSet{1, 2}.to_string() == "{1,2}");
}
