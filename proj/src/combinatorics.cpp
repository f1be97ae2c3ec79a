#include "shadowlab/combinatorics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace shadowlab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// binom(n, k) clamped to kSaturated on overflow.
std::uint64_t binom_saturating(std::uint64_t n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = static_cast<unsigned>(n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

// Largest c with binom(c, i) <= m, for m >= 1 and i >= 1. The answer is >= i.
std::uint64_t largest_c_u64(std::uint64_t m, unsigned i) {
  if (i == 1) return m;
  double fact = 1.0;
  for (unsigned j = 2; j <= i; ++j) fact *= j;
  // binom(c, i) ~ (c - (i-1)/2)^i / i!
  double guess = std::pow(static_cast<double>(m) * fact, 1.0 / i) + (i - 1) / 2.0;
  std::uint64_t c = guess < i ? i : static_cast<std::uint64_t>(guess);
  while (c > i && binom_saturating(c, i) > m) --c;
  while (binom_saturating(c + 1, i) <= m) ++c;
  return c;
}

Natural largest_c(const Natural& m, unsigned i) {
  if (m < Natural(1) << 62) return largest_c_u64(to_u64(m), i);
  if (i == 1) return m;
  Natural lo = i;  // binom(lo, i) = 1 <= m
  Natural hi = 2 * lo;
  while (binom(hi, i) <= m) {
    lo = hi;
    hi *= 2;
  }
  // binom(lo, i) <= m < binom(hi, i)
  while (hi - lo > 1) {
    Natural mid = (lo + hi) / 2;
    if (binom(mid, i) <= m)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

Natural binom(const Natural& n, unsigned k) {
  if (n < k) return 0;
  if (n < Natural(1) << 62) {
    std::uint64_t v = binom_saturating(to_u64(n), k);
    if (v != kSaturated) return v;
  }
  Natural kk = k;
  if (n - kk < kk) kk = n - kk;
  const unsigned steps = kk.convert_to<unsigned>();
  Natural r = 1;
  for (unsigned i = 0; i < steps; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

std::uint64_t binom_u64(std::uint64_t n, unsigned k) {
  std::uint64_t v = binom_saturating(n, k);
  if (v == kSaturated)
    throw std::overflow_error("binom(" + std::to_string(n) + ", " + std::to_string(k) +
                              ") exceeds 64 bits");
  return v;
}

void CascadeRep::validate() const {
  if (top_index < 1) throw std::invalid_argument("cascade top index must be >= 1");
  if (terms.empty()) return;
  if (terms.front().index != top_index)
    throw std::invalid_argument("cascade must start at its top index");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const CascadeTerm& term = terms[t];
    if (term.index < 1) throw std::invalid_argument("cascade index must be >= 1");
    if (term.c < term.index)
      throw std::invalid_argument("cascade term c=" + term.c.str() + " is below its index " +
                                  std::to_string(term.index));
    if (t > 0) {
      if (term.index + 1 != terms[t - 1].index)
        throw std::invalid_argument("cascade indices must decrease by one");
      if (term.c >= terms[t - 1].c)
        throw std::invalid_argument("cascade c values must be strictly decreasing");
    }
  }
}

CascadeRep cascade_decompose(const Natural& m, unsigned top_index) {
  if (top_index < 1) throw std::invalid_argument("cascade top index must be >= 1");
  if (m < 0) throw std::invalid_argument("cascade_decompose needs m >= 0");
  CascadeRep rep;
  rep.top_index = top_index;
  Natural rem = m;
  for (unsigned i = top_index; i >= 1 && rem > 0; --i) {
    Natural c = largest_c(rem, i);
    rem -= binom(c, i);
    rep.terms.push_back({std::move(c), i});
  }
  return rep;
}

Natural cascade_eval(const CascadeRep& rep) { return cascade_shift(rep, 0); }

Natural cascade_shift(const CascadeRep& rep, int delta) {
  rep.validate();
  Natural sum = 0;
  for (const CascadeTerm& t : rep.terms) {
    const long shifted = static_cast<long>(t.index) + delta;
    if (shifted < 1)
      throw std::invalid_argument("cascade_shift: index " + std::to_string(t.index) +
                                  " shifted by " + std::to_string(delta) + " drops below 1");
    sum += binom(t.c, static_cast<unsigned>(shifted));
  }
  return sum;
}

Natural kk_max_a(const Natural& b, unsigned r) {
  if (r < 2) throw std::invalid_argument("kk_max_a needs r >= 2");
  return cascade_shift(cascade_decompose(b, r - 1), +1);
}

Natural kk_min_b(const Natural& a, unsigned r) {
  if (r < 1) throw std::invalid_argument("kk_min_b needs r >= 1");
  const CascadeRep rep = cascade_decompose(a, r);
  Natural b = 0;
  for (const CascadeTerm& t : rep.terms) {
    // binom(c_0, 0) is the "+1 if c_0 > 0" correction.
    b += t.index >= 2 ? binom(t.c, t.index - 1) : Natural(1);
  }
  return b;
}

Natural colex_rank(const KSet& s) {
  Natural rank = 0;
  for (std::size_t j = 0; j < s.size(); ++j) rank += binom(Natural(s[j] - 1), static_cast<unsigned>(j + 1));
  return rank;
}

std::uint64_t colex_rank_u64(const KSet& s) {
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < s.size(); ++j) rank += binom_u64(s[j] - 1, static_cast<unsigned>(j + 1));
  return rank;
}

KSet colex_unrank(const Natural& idx, unsigned r) {
  if (idx < 0) throw std::invalid_argument("colex_unrank needs idx >= 0");
  if (r == 0) {
    if (idx != 0) throw std::invalid_argument("only one set of size 0 exists");
    return {};
  }
  const CascadeRep rep = cascade_decompose(idx, r);
  std::vector<Element> elems(r);
  for (unsigned j = 1; j <= r; ++j) elems[j - 1] = j;  // omitted terms have c_j = j - 1
  for (const CascadeTerm& t : rep.terms) elems[t.index - 1] = t.c.convert_to<Element>() + 1;
  return KSet::from_sorted(std::move(elems));
}

KSet colex_unrank(std::uint64_t idx, unsigned r) { return colex_unrank(Natural(idx), r); }

std::vector<KSet> colex_segment(std::uint64_t count, unsigned r) {
  std::vector<KSet> out;
  out.reserve(count);
  std::vector<Element> cur(r);
  for (unsigned j = 0; j < r; ++j) cur[j] = j + 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    out.push_back(KSet::from_sorted(cur));
    if (r == 0) break;
    // Colex successor: bump the lowest element that has room, reset those below it.
    unsigned j = 0;
    while (j + 1 < r && cur[j] + 1 == cur[j + 1]) ++j;
    ++cur[j];
    for (unsigned t = 0; t < j; ++t) cur[t] = t + 1;
  }
  return out;
}

}  // namespace shadowlab
