#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shadowlab/incidence.hpp"
#include "shadowlab/natural.hpp"

// Walks v0, e1, v1, ..., ei, vi in an incidence hypergraph, where consecutive
// vertices are both incident to the edge between them (repeats allowed).
//
// The weight of a walk is 1 / (deg(v1)...deg(v_{i-1}) * a * k^(i+1)); the
// weights of each length form a probability distribution whose endpoint
// marginal is deg(v) / (k a).
namespace shadowlab {

struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const Path&) const = default;
};

inline constexpr std::uint64_t kDefaultPathCap = 10'000'000;

class PathSpaceTooLarge : public std::runtime_error {
 public:
  PathSpaceTooLarge(unsigned length, Natural size, std::uint64_t cap);
  unsigned length;
  Natural size;
  std::uint64_t cap;
};

/// |L_i| by dynamic programming over endpoints, without enumeration.
Natural count_paths(const IncidenceHypergraph& h, unsigned i);

bool is_valid_path(const IncidenceHypergraph& h, const Path& p);

/// Visits every walk of length i >= 1 in lexicographic (v0, e1, v1, ...)
/// order. Throws PathSpaceTooLarge before visiting anything if |L_i| > cap.
void for_each_path(const IncidenceHypergraph& h, unsigned i,
                   const std::function<void(const Path&)>& visit,
                   std::uint64_t cap = kDefaultPathCap);

std::vector<Path> enumerate_paths(const IncidenceHypergraph& h, unsigned i,
                                  std::uint64_t cap = kDefaultPathCap);

/// Closed-form weight. Throws std::invalid_argument on an invalid walk.
Rational mu(const IncidenceHypergraph& h, const Path& p);
/// Same weight built up one step at a time from the length-1 weight.
Rational mu_recursive(const IncidenceHypergraph& h, const Path& p);
/// deg(v) / (k a)
Rational mu0(const IncidenceHypergraph& h, VertexId v);

/// -sum mu ln mu over walks of length i (i = 0 uses mu0 over vertices).
long double entropy(const IncidenceHypergraph& h, unsigned i,
                    std::uint64_t cap = kDefaultPathCap);

struct PathOptions {
  std::uint64_t cap = kDefaultPathCap;
  unsigned threads = 1;
};

/// Walks whose endpoints are at distance exactly i. Only defined for
/// 1 <= i <= k-1.
struct StraightStats {
  unsigned length = 0;
  std::uint64_t m_size = 0;
  Rational p;  // total weight of M_i
  /// Largest number of M_i walks joining one ordered endpoint pair.
  std::uint64_t per_pair_max = 0;
  /// Ordered vertex pairs at distance i.
  std::uint64_t distance_pairs = 0;
  /// Pairs joined by exactly ((k-1)!)^2 walks; only filled when i = k-1.
  std::optional<std::uint64_t> nice_pairs;
};

StraightStats straight_stats(const IncidenceHypergraph& h, unsigned i, const PathOptions& opts = {});

/// Everything computed for one length, with each bound evaluated exactly.
struct LengthReport {
  unsigned length = 0;
  Natural l_size;       // by enumeration
  Natural l_size_dp;    // by count_paths
  long double d = 0;    // entropy of mu_i
  long double recursion_residual = 0;  // relative
  bool marginal_ok = false;

  Rational count_bound;  // (a k^2 / b)^i * b
  bool count_bound_ok = false;
  /// |L_i| <= a k^(i+1) b^(i-1); only for i >= 2.
  std::optional<bool> crude_upper_ok;
  bool entropy_le_log_count = false;

  std::optional<StraightStats> straight;
  std::optional<Rational> p_lower;         // lower bound on P_i
  std::optional<bool> p_lower_ok;
  std::optional<Rational> p_upper;         // (k-1)! / ((k-i-1)! k^i), reported only
  std::optional<bool> p_upper_holds;
  std::optional<Rational> m_reference;     // (k-1)!/(k-i-1)! (ak/b)^i b, reported only
  std::optional<bool> per_pair_cap_ok;
  std::optional<bool> p1_exact;            // P_1 = (k-1)/k
};

struct EntropyReport {
  long double d0 = 0;
  std::vector<LengthReport> lengths;
};

/// Lengths 1..max_len. Recursion residuals compare each length with the
/// previous one (length 1 against the mu0 entropy).
EntropyReport entropy_report(const IncidenceHypergraph& h, unsigned max_len, const PathOptions& opts = {});

/// Tolerance for the entropy recursion and the entropy-vs-log-count check.
inline constexpr long double kEntropyRelTol = 1e-9L;

}  // namespace shadowlab
