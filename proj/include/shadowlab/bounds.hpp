#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/natural.hpp"

namespace shadowlab {

/// Exact answers for k <= 2.
///   k = 2: value is b, returns the maximum a = binom(b, 2).
///   k = 1: value is a, returns the minimum b (1 if a >= 1, else 0).
///   k = 0: returns b = 0 regardless of value.
/// Throws std::invalid_argument for k >= 3.
Natural exact_small_k(unsigned k, const Natural& value);

/// Largest a with b(b-1) >= 9a^2/(2b) - 3a/2 + 6a, decided exactly as
/// 2b^2(b-1) >= 9a^2 + 9ab. Requires b >= 1.
Natural k3_upper(const Natural& b);

/// b^(k/(k-1)) * (k-1)!^(1/(k-1)) / k. Leading term only: the true upper bound
/// carries an additional O(b ln b) term. Requires k >= 2.
long double general_upper_leading(const Natural& b, unsigned k);

/// The construction value for b, i.e. the cascade of b with top index k-1
/// shifted up by one. Requires k >= 2.
Natural be_lower(const Natural& b, unsigned k);

/// cascade_shift(rep, +1); requires rep.top_index == k - 1. Exact only once
/// every cascade coefficient exceeds an unknown constant depending on k.
Natural theorem2_value(const CascadeRep& rep, unsigned k);

/// (6a + 3b)^2 <= (8b + 1) b^2, i.e. a <= b(sqrt(8b+1) - 3)/6.
bool within_real_k3_bound(const Natural& a, const Natural& b);

struct BoundRow {
  Natural b;
  unsigned k = 0;
  Natural be_lower;
  std::optional<Natural> k_specific_upper;  // exact; k = 2 and k = 3 only
  long double general_leading = 0;          // advisory
  std::optional<Natural> theorem2_value;    // advisory; only with all k-1 cascade terms
  std::string notes;
};

/// One row per b in [b_lo, b_hi]. Requires k >= 2 and b_lo >= 1.
std::vector<BoundRow> conjecture_table(unsigned k, const Natural& b_lo, const Natural& b_hi);

/// Columns: k,b,be_lower,k_specific_upper,k_specific_upper_status,
/// general_leading,general_leading_status,theorem2_value,theorem2_status,notes
std::string bounds_csv(const std::vector<BoundRow>& rows);
nlohmann::ordered_json bounds_json(const std::vector<BoundRow>& rows);

}  // namespace shadowlab
