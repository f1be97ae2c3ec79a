#pragma once

// Test-side reference implementations. They share no code paths with the
// library beyond KSet and SetFamily storage.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "shadowlab/family_io.hpp"
#include "shadowlab/incidence.hpp"
#include "shadowlab/natural.hpp"

namespace oracle {

using shadowlab::Configuration;
using shadowlab::Element;
using shadowlab::KSet;
using shadowlab::Natural;
using shadowlab::SetFamily;

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline Natural binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Natural num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// All r-subsets of [n] in lexicographic order.
inline std::vector<KSet> all_subsets(unsigned n, unsigned r) {
  std::vector<KSet> out;
  std::vector<Element> cur;
  auto rec = [&](auto&& self, Element next) -> void {
    if (cur.size() == r) {
      out.push_back(KSet(cur));
      return;
    }
    for (Element x = next; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Colex from the definition: a < b iff the largest element of the symmetric
/// difference lies in b.
inline bool colex_less_def(const KSet& a, const KSet& b) {
  Element top = 0;
  bool in_b = false;
  for (Element x : a)
    if (!b.contains(x) && x > top) top = x, in_b = false;
  for (Element x : b)
    if (!a.contains(x) && x > top) top = x, in_b = true;
  return top != 0 && in_b;
}

inline unsigned hits(const KSet& a, const SetFamily& b) {
  unsigned h = 0;
  for (Element x : a)
    if (b.contains(a.without(x))) ++h;
  return h;
}

/// Every r-set of [n] containing at least k members of b.
inline SetFamily saturate(const SetFamily& b, unsigned n, unsigned r, unsigned k) {
  std::vector<KSet> a;
  for (const KSet& s : all_subsets(n, r))
    if (hits(s, b) >= k) a.push_back(s);
  return SetFamily(r, std::move(a));
}

/// Random valid configuration over [n]: B is a random family of (r-1)-sets
/// and A is a nonempty random subfamily of the r-sets it k-covers.
inline Configuration random_configuration(std::mt19937_64& rng, unsigned n, unsigned r, unsigned k) {
  const std::vector<KSet> pool = all_subsets(n, r - 1);
  for (;;) {
    std::vector<KSet> chosen;
    const std::uint64_t density = 35 + pick(rng, 55);
    for (const KSet& s : pool)
      if (pick(rng, 100) < density) chosen.push_back(s);
    SetFamily b(r - 1, chosen);
    SetFamily full = saturate(b, n, r, k);
    if (full.empty()) continue;
    std::vector<KSet> a;
    for (const KSet& s : full)
      if (pick(rng, 100) < 80) a.push_back(s);
    if (a.empty()) a.push_back(full[pick(rng, full.size())]);
    return Configuration{k, SetFamily(r, std::move(a)), std::move(b)};
  }
}

/// max a over every b-subset of the (r-1)-sets of [n].
inline std::uint64_t brute_force_f(unsigned r, unsigned k, unsigned b, unsigned n) {
  const std::vector<KSet> items = all_subsets(n, r - 1);
  const std::vector<KSet> rsets = all_subsets(n, r);
  std::vector<std::vector<std::size_t>> sub(rsets.size());
  for (std::size_t a = 0; a < rsets.size(); ++a)
    for (Element x : rsets[a])
      sub[a].push_back(std::find(items.begin(), items.end(), rsets[a].without(x)) - items.begin());
  std::vector<int> sel(items.size(), 0);
  std::fill(sel.end() - b, sel.end(), 1);
  std::uint64_t best = 0;
  do {
    std::uint64_t a = 0;
    for (const auto& s : sub) {
      unsigned h = 0;
      for (std::size_t i : s) h += sel[i];
      if (h >= k) ++a;
    }
    best = std::max(best, a);
  } while (std::next_permutation(sel.begin(), sel.end()));
  return best;
}

/// Walks of length i counted by brute force over all vertex/edge sequences.
inline std::uint64_t brute_walk_count(const shadowlab::IncidenceHypergraph& h, unsigned i) {
  std::uint64_t total = 0;
  std::vector<std::size_t> verts;
  auto rec = [&](auto&& self, unsigned depth) -> void {
    if (depth == i) {
      ++total;
      return;
    }
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      if (!h.incident(verts.back(), e)) continue;
      for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        if (!h.incident(v, e)) continue;
        verts.push_back(v);
        self(self, depth + 1);
        verts.pop_back();
      }
    }
  };
  for (std::size_t v0 = 0; v0 < h.vertex_count(); ++v0) {
    verts.assign(1, v0);
    rec(rec, 0);
  }
  return total;
}

/// Lex-least sorted rank vector over all relabelings of [ground].
inline std::vector<std::uint64_t> brute_canonical_key(const SetFamily& f, unsigned ground) {
  std::vector<Element> perm(ground);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> key;
    for (const KSet& s : f) {
      std::vector<Element> img;
      for (Element x : s) img.push_back(perm[x - 1]);
      std::sort(img.begin(), img.end());
      // Colex rank from the binomial sum.
      std::uint64_t rank = 0;
      for (std::size_t j = 0; j < img.size(); ++j) rank += binom(img[j] - 1, j + 1).convert_to<std::uint64_t>();
      key.push_back(rank);
    }
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
