#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shadowlab {

using Element = std::uint32_t;

/// A finite set of positive integers, stored sorted ascending.
///
/// Ordering is colex within a size (larger sizes sort after smaller ones), so
/// ordered containers of KSets of one size iterate in colex order.
class KSet {
 public:
  KSet() = default;
  KSet(std::initializer_list<Element> elems);

  /// Sorts the input; throws std::invalid_argument on duplicates or zero.
  explicit KSet(std::vector<Element> elems);

  /// Trusts the caller: `sorted` must already be strictly increasing and >= 1.
  static KSet from_sorted(std::vector<Element> sorted);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  Element operator[](std::size_t i) const { return elems_[i]; }
  Element max() const { return elems_.empty() ? 0 : elems_.back(); }
  std::span<const Element> elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(Element x) const;
  bool is_subset_of(const KSet& other) const;

  KSet without(Element x) const;
  KSet with(Element x) const;

  /// Bitmask over elements 1..64 (bit e-1 for element e).
  std::uint64_t mask() const;
  static KSet from_mask(std::uint64_t mask);

  std::string to_string() const;

  bool operator==(const KSet&) const = default;
  std::strong_ordering operator<=>(const KSet& other) const;

 private:
  std::vector<Element> elems_;
};

/// True when a precedes b in colex order (sizes must match).
bool colex_less(const KSet& a, const KSet& b);

/// Size of the symmetric difference.
std::size_t symmetric_difference_size(const KSet& a, const KSet& b);

struct KSetHash {
  std::size_t operator()(const KSet& s) const noexcept;
};

}  // namespace shadowlab
