#include "shadowlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace shadowlab {

Natural exact_small_k(unsigned k, const Natural& value) {
  switch (k) {
    case 0: return 0;
    case 1: return value >= 1 ? 1 : 0;
    case 2: return binom(value, 2);
    default: throw std::invalid_argument("exact_small_k covers k <= 2, got k=" + std::to_string(k));
  }
}

Natural k3_upper(const Natural& b) {
  if (b < 1) throw std::invalid_argument("k3_upper needs b >= 1");
  const Natural lhs = 2 * b * b * (b - 1);
  auto fits = [&](const Natural& a) { return 9 * a * a + 9 * a * b <= lhs; };
  // Positive root of 9a^2 + 9ab - lhs, then correct the integer rounding.
  const Natural disc = 81 * b * b + 36 * lhs;
  Natural a = (boost::multiprecision::sqrt(disc) - 9 * b) / 18;
  while (a > 0 && !fits(a)) --a;
  while (fits(a + 1)) ++a;
  return a;
}

long double general_upper_leading(const Natural& b, unsigned k) {
  if (k < 2) throw std::invalid_argument("general_upper_leading needs k >= 2");
  if (b == 0) return 0;
  long double log_fact = 0;
  for (unsigned t = 2; t < k; ++t) log_fact += std::log(static_cast<long double>(t));
  const long double e = static_cast<long double>(k) / (k - 1);
  return std::exp(e * log_natural(b) + log_fact / (k - 1)) / k;
}

Natural be_lower(const Natural& b, unsigned k) {
  if (k < 2) throw std::invalid_argument("be_lower needs k >= 2");
  return cascade_shift(cascade_decompose(b, k - 1), +1);
}

Natural theorem2_value(const CascadeRep& rep, unsigned k) {
  if (k < 2 || rep.top_index != k - 1)
    throw std::invalid_argument("theorem2_value needs a cascade with top index k-1=" +
                                std::to_string(k < 1 ? 0 : k - 1) + ", got " + std::to_string(rep.top_index));
  return cascade_shift(rep, +1);
}

bool within_real_k3_bound(const Natural& a, const Natural& b) {
  const Natural lhs = 6 * a + 3 * b;
  return lhs * lhs <= (8 * b + 1) * b * b;
}

std::vector<BoundRow> conjecture_table(unsigned k, const Natural& b_lo, const Natural& b_hi) {
  if (k < 2) throw std::invalid_argument("conjecture_table needs k >= 2");
  if (b_lo < 1) throw std::invalid_argument("conjecture_table needs b >= 1");
  std::vector<BoundRow> rows;
  for (Natural b = b_lo; b <= b_hi; ++b) {
    BoundRow row;
    row.b = b;
    row.k = k;
    const CascadeRep rep = cascade_decompose(b, k - 1);
    row.be_lower = cascade_shift(rep, +1);
    if (k == 2) row.k_specific_upper = exact_small_k(2, b);
    if (k == 3) row.k_specific_upper = k3_upper(b);
    row.general_leading = general_upper_leading(b, k);
    if (rep.terms.size() == k - 1) row.theorem2_value = theorem2_value(rep, k);
    if (row.k_specific_upper && *row.k_specific_upper == row.be_lower) row.notes = "tight";
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

constexpr const char* kExact = "exact";
constexpr const char* kAdvisory = "advisory";
constexpr const char* kTheorem2Status = "advisory: exact once every cascade coefficient exceeds a nonconstructive constant";

}  // namespace

std::string bounds_csv(const std::vector<BoundRow>& rows) {
  std::string out =
      "k,b,be_lower,k_specific_upper,k_specific_upper_status,general_leading,general_leading_status,"
      "theorem2_value,theorem2_status,notes\n";
  for (const BoundRow& r : rows) {
    out += std::to_string(r.k) + ',' + r.b.str() + ',' + r.be_lower.str() + ',';
    out += r.k_specific_upper ? r.k_specific_upper->str() + ',' + kExact : std::string(",");
    out += ',' + format_real(r.general_leading) + ',' + kAdvisory + ',';
    out += r.theorem2_value ? r.theorem2_value->str() + ",\"" + kTheorem2Status + '"' : std::string(",");
    out += ',' + r.notes + '\n';
  }
  return out;
}

nlohmann::ordered_json bounds_json(const std::vector<BoundRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const BoundRow& r : rows) {
    nlohmann::ordered_json row;
    row["k"] = r.k;
    row["b"] = r.b.str();
    row["be_lower"] = r.be_lower.str();
    if (r.k_specific_upper)
      row["k_specific_upper"] = {{"value", r.k_specific_upper->str()}, {"status", kExact}};
    else
      row["k_specific_upper"] = nullptr;
    row["general_leading"] = {{"value", format_real(r.general_leading)}, {"status", kAdvisory}};
    if (r.theorem2_value)
      row["theorem2_value"] = {{"value", r.theorem2_value->str()}, {"status", kTheorem2Status}};
    else
      row["theorem2_value"] = nullptr;
    row["notes"] = r.notes;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace shadowlab
