#include "shadowlab/set_family.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shadowlab {

SetFamily::SetFamily(unsigned member_size, std::vector<KSet> sets)
    : member_size_(member_size), sets_(std::move(sets)) {
  for (const KSet& s : sets_) {
    if (s.size() != member_size_)
      throw std::invalid_argument("set " + s.to_string() + " has size " + std::to_string(s.size()) +
                                  ", family expects " + std::to_string(member_size_));
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

Element SetFamily::ground_max() const {
  Element m = 0;
  for (const KSet& s : sets_) m = std::max(m, s.max());
  return m;
}

bool SetFamily::contains(const KSet& s) const {
  return s.size() == member_size_ && std::binary_search(sets_.begin(), sets_.end(), s);
}

std::optional<std::size_t> SetFamily::index_of(const KSet& s) const {
  if (s.size() != member_size_) return std::nullopt;
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
  return member_size_ == other.member_size_ &&
         std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(), sets_.end());
}

SetFamily shadow(const SetFamily& f) {
  if (f.member_size() < 1) throw std::invalid_argument("shadow needs member size >= 1");
  std::vector<KSet> out;
  out.reserve(f.size() * f.member_size());
  for (const KSet& s : f)
    for (Element e : s) out.push_back(s.without(e));
  return SetFamily(f.member_size() - 1, std::move(out));
}

SetFamily colex_initial_segment(std::uint64_t count, unsigned r) {
  return SetFamily(r, colex_segment(count, r));
}

CoverReport cover_counts(const SetFamily& a, const SetFamily& b, unsigned threshold) {
  if (a.member_size() != b.member_size() + 1)
    throw std::invalid_argument("cover check needs |A| members of size r and B of size r-1, got " +
                                std::to_string(a.member_size()) + " and " +
                                std::to_string(b.member_size()));
  CoverReport rep;
  rep.threshold = threshold;
  rep.min_count = a.member_size();
  rep.counts.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned count = 0;
    for (Element e : a[i])
      if (b.contains(a[i].without(e))) ++count;
    rep.counts.push_back(count);
    rep.min_count = std::min(rep.min_count, count);
    if (count < threshold) rep.violating.push_back(i);
  }
  rep.pass = rep.violating.empty();
  return rep;
}

BeConfiguration construct_be(unsigned r, unsigned k, std::uint64_t b) {
  if (k < 2) throw std::invalid_argument("construct_be needs k >= 2 (k <= 1 is handled in closed form)");
  if (k > r) throw std::invalid_argument("construct_be needs k <= r");
  BeConfiguration cfg;
  cfg.k = k;
  cfg.rep = cascade_decompose(b, k - 1);
  const std::uint64_t a = to_u64(cascade_shift(cfg.rep, +1));
  const std::vector<KSet> xs = colex_segment(a, k);
  const std::vector<KSet> ys = colex_segment(b, k - 1);

  Element ground = 0;
  for (const KSet& x : xs) ground = std::max(ground, x.max());
  for (const KSet& y : ys) ground = std::max(ground, y.max());

  std::vector<Element> core(r - k);
  std::iota(core.begin(), core.end(), ground + 1);
  cfg.core = KSet::from_sorted(core);

  auto lift = [&](const KSet& base) {
    std::vector<Element> e(base.begin(), base.end());
    e.insert(e.end(), core.begin(), core.end());
    return KSet::from_sorted(std::move(e));
  };
  std::vector<KSet> as, bs;
  as.reserve(xs.size());
  bs.reserve(ys.size());
  for (const KSet& x : xs) as.push_back(lift(x));
  for (const KSet& y : ys) bs.push_back(lift(y));
  cfg.a = SetFamily(r, std::move(as));
  cfg.b = SetFamily(r - 1, std::move(bs));
  return cfg;
}

SetFamily relabel(const SetFamily& f, std::span<const Element> perm) {
  std::vector<KSet> out;
  out.reserve(f.size());
  for (const KSet& s : f) {
    std::vector<Element> e;
    e.reserve(s.size());
    for (Element x : s) e.push_back(x <= perm.size() ? perm[x - 1] : x);
    out.push_back(KSet(std::move(e)));
  }
  return SetFamily(f.member_size(), std::move(out));
}

std::vector<std::uint64_t> colex_ranks(const SetFamily& f) {
  std::vector<std::uint64_t> ranks;
  ranks.reserve(f.size());
  for (const KSet& s : f) ranks.push_back(colex_rank_u64(s));
  return ranks;  // members are colex-sorted, so ranks are ascending
}

namespace {

std::vector<std::uint64_t> image_ranks(const std::vector<std::uint64_t>& masks,
                                       std::span<const Element> perm) {
  std::vector<std::uint64_t> ranks;
  ranks.reserve(masks.size());
  for (std::uint64_t m : masks) {
    std::uint64_t rank = 0;
    unsigned j = 0;
    std::uint64_t img = 0;
    while (m) {
      const unsigned e = static_cast<unsigned>(std::countr_zero(m));
      img |= std::uint64_t{1} << (perm[e] - 1);
      m &= m - 1;
    }
    while (img) {
      const unsigned e = static_cast<unsigned>(std::countr_zero(img));
      rank += binom_u64(e, ++j);
      img &= img - 1;
    }
    ranks.push_back(rank);
  }
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

// Orders elements by descending degree, then by descending sorted co-degree
// profile; ties keep the original label order.
std::vector<Element> refinement_order(const SetFamily& f, Element ground) {
  std::vector<std::vector<unsigned>> profile(ground + 1);
  std::vector<unsigned> degree(ground + 1, 0);
  std::vector<std::vector<unsigned>> co(ground + 1, std::vector<unsigned>(ground + 1, 0));
  for (const KSet& s : f)
    for (Element x : s) {
      ++degree[x];
      for (Element y : s)
        if (x != y) ++co[x][y];
    }
  for (Element x = 1; x <= ground; ++x) {
    profile[x] = co[x];
    std::sort(profile[x].rbegin(), profile[x].rend());
  }
  std::vector<Element> order(ground);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
    if (degree[x] != degree[y]) return degree[x] > degree[y];
    return profile[x] > profile[y];
  });
  return order;
}

}  // namespace

SetFamily canonical_form(const SetFamily& f, Element ground) {
  if (ground == 0) ground = f.ground_max();
  if (ground < f.ground_max())
    throw std::invalid_argument("canonical_form ground is smaller than the family's elements");
  if (f.empty() || ground == 0) return f;

  if (ground > kExactCanonicalGround) {
    const std::vector<Element> order = refinement_order(f, ground);
    std::vector<Element> perm(ground);
    for (Element pos = 0; pos < ground; ++pos) perm[order[pos] - 1] = pos + 1;
    return relabel(f, perm);
  }

  std::vector<std::uint64_t> masks;
  masks.reserve(f.size());
  for (const KSet& s : f) masks.push_back(s.mask());

  std::vector<Element> perm(ground);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Element> best_perm = perm;
  std::vector<std::uint64_t> best = image_ranks(masks, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint64_t> img = image_ranks(masks, perm);
    if (img < best) {
      best = std::move(img);
      best_perm = perm;
    }
  }
  return relabel(f, best_perm);
}

}  // namespace shadowlab
