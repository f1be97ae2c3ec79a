#include "shadowlab/kset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace shadowlab {

KSet::KSet(std::initializer_list<Element> elems) : KSet(std::vector<Element>(elems)) {}

KSet::KSet(std::vector<Element> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  if (!elems_.empty() && elems_.front() == 0)
    throw std::invalid_argument("KSet elements must be positive integers");
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::invalid_argument("KSet elements must be distinct");
}

KSet KSet::from_sorted(std::vector<Element> sorted) {
  KSet s;
  s.elems_ = std::move(sorted);
  return s;
}

bool KSet::contains(Element x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool KSet::is_subset_of(const KSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

KSet KSet::without(Element x) const {
  std::vector<Element> out;
  out.reserve(elems_.size());
  for (Element e : elems_)
    if (e != x) out.push_back(e);
  return from_sorted(std::move(out));
}

KSet KSet::with(Element x) const {
  if (x == 0) throw std::invalid_argument("KSet elements must be positive integers");
  std::vector<Element> out = elems_;
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it != out.end() && *it == x) return *this;
  out.insert(it, x);
  return from_sorted(std::move(out));
}

std::uint64_t KSet::mask() const {
  std::uint64_t m = 0;
  for (Element e : elems_) {
    if (e > 64) throw std::out_of_range("KSet::mask supports elements up to 64");
    m |= std::uint64_t{1} << (e - 1);
  }
  return m;
}

KSet KSet::from_mask(std::uint64_t mask) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    out.push_back(static_cast<Element>(std::countr_zero(mask)) + 1);
    mask &= mask - 1;
  }
  return from_sorted(std::move(out));
}

std::string KSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems_[i]);
  }
  return s + "}";
}

bool colex_less(const KSet& a, const KSet& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::strong_ordering KSet::operator<=>(const KSet& other) const {
  if (size() != other.size()) return size() <=> other.size();
  for (std::size_t i = size(); i-- > 0;) {
    if (elems_[i] != other.elems_[i]) return elems_[i] <=> other.elems_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t symmetric_difference_size(const KSet& a, const KSet& b) {
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return a.size() + b.size() - 2 * common;
}

std::size_t KSetHash::operator()(const KSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ s.size();
  for (Element e : s) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace shadowlab
