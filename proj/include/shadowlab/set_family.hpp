#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shadowlab/combinatorics.hpp"
#include "shadowlab/kset.hpp"

namespace shadowlab {

/// A deduplicated family of equal-size sets, kept in colex order.
class SetFamily {
 public:
  explicit SetFamily(unsigned member_size = 0) : member_size_(member_size) {}

  /// Sorts and deduplicates; throws std::invalid_argument if any set has the
  /// wrong size.
  SetFamily(unsigned member_size, std::vector<KSet> sets);

  unsigned member_size() const { return member_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::span<const KSet> sets() const { return sets_; }
  const KSet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  /// Largest element appearing in any member, 0 for an empty family.
  Element ground_max() const;

  bool contains(const KSet& s) const;
  std::optional<std::size_t> index_of(const KSet& s) const;

  /// True when every member of this family is a member of `other`.
  bool is_subfamily_of(const SetFamily& other) const;

  bool operator==(const SetFamily&) const = default;

 private:
  unsigned member_size_;
  std::vector<KSet> sets_;
};

/// All (r-1)-subsets of members of F.
SetFamily shadow(const SetFamily& f);

/// The first `count` r-sets in colex order.
SetFamily colex_initial_segment(std::uint64_t count, unsigned r);

struct CoverReport {
  /// counts[i] = number of (r-1)-subsets of A[i] present in B.
  std::vector<unsigned> counts;
  /// Minimum over `counts`; equals the member size of A when A is empty.
  unsigned min_count = 0;
  unsigned threshold = 0;
  bool pass = true;
  /// Indices into A of members below the threshold.
  std::vector<std::size_t> violating;
};

/// Throws std::invalid_argument unless A.member_size() == B.member_size() + 1.
CoverReport cover_counts(const SetFamily& a, const SetFamily& b, unsigned threshold = 0);

/// The k-cover condition: every member of A contains at least k members of B.
inline CoverReport validate(const SetFamily& a, const SetFamily& b, unsigned k) {
  return cover_counts(a, b, k);
}

/// S u (initial colex segment) configuration: B = {S u Y} over the first b
/// colex (k-1)-sets, A = {S u X} over the first cascade_shift(rep, +1) colex
/// k-sets, with S = {M+1, ..., M+r-k} placed just above every X and Y.
struct BeConfiguration {
  SetFamily a;
  SetFamily b;
  KSet core;
  CascadeRep rep;
  unsigned k = 0;
};

BeConfiguration construct_be(unsigned r, unsigned k, std::uint64_t b);

/// Canonical configuration for parameter c: B = S u [c]^(k-1), A = S u [c]^(k).
inline BeConfiguration construct_canonical(unsigned r, unsigned k, unsigned c) {
  return construct_be(r, k, binom_u64(c, k - 1));
}

/// Applies element e -> perm[e-1]; elements beyond perm.size() are fixed.
SetFamily relabel(const SetFamily& f, std::span<const Element> perm);

/// Colex ranks of the members, ascending.
std::vector<std::uint64_t> colex_ranks(const SetFamily& f);

/// Lexicographically least relabeling of F under permutations of [ground]
/// (ground defaults to F.ground_max()).  Families are compared by their
/// ascending colex-rank lists.  Exact for ground <= 9; above that a
/// degree-refinement ordering is used and the result is only a heuristic.
SetFamily canonical_form(const SetFamily& f, Element ground = 0);

constexpr Element kExactCanonicalGround = 9;

}  // namespace shadowlab
