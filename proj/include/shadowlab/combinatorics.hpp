#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shadowlab/kset.hpp"
#include "shadowlab/natural.hpp"

namespace shadowlab {

/// Exact binomial coefficient; zero when n < k.
Natural binom(const Natural& n, unsigned k);
std::uint64_t binom_u64(std::uint64_t n, unsigned k);

struct CascadeTerm {
  Natural c;
  unsigned index = 0;

  bool operator==(const CascadeTerm&) const = default;
};

/// Greedy binomial decomposition m = sum binom(c_i, i), indices running
/// s, s-1, ... downward with strictly decreasing c_i >= i.  Terms that would
/// evaluate to zero are omitted, so the list stops as soon as the remainder is
/// exhausted and the representation is canonical.
struct CascadeRep {
  std::vector<CascadeTerm> terms;
  unsigned top_index = 1;

  /// Throws std::invalid_argument unless the terms form a canonical cascade.
  void validate() const;

  bool operator==(const CascadeRep&) const = default;
};

CascadeRep cascade_decompose(const Natural& m, unsigned top_index);

/// Sum of binom(c_i, i). Rejects malformed representations.
Natural cascade_eval(const CascadeRep& rep);

/// Sum of binom(c_i, i + delta). Rejects any term whose shifted index falls
/// below one.
Natural cascade_shift(const CascadeRep& rep, int delta);

/// Largest |A| over r-uniform families whose shadow has at most b members.
Natural kk_max_a(const Natural& b, unsigned r);

/// Smallest shadow of an r-uniform family with a members.
Natural kk_min_b(const Natural& a, unsigned r);

/// Position of s in the colex order of |s|-sets over the positive integers;
/// {1,...,r} has rank 0.
Natural colex_rank(const KSet& s);
std::uint64_t colex_rank_u64(const KSet& s);

KSet colex_unrank(const Natural& idx, unsigned r);
KSet colex_unrank(std::uint64_t idx, unsigned r);

/// The first `count` sets of size r in colex order.
std::vector<KSet> colex_segment(std::uint64_t count, unsigned r);

}  // namespace shadowlab
