#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shadowlab/set_family.hpp"

// Computes f_n(r, k, b): the largest number of r-subsets of [n] that each
// contain at least k members of some b-family B of (r-1)-subsets of [n].
// Only B is searched; a is counted from B.
namespace shadowlab {

enum class SearchMode { exhaustive, heuristic };

const char* to_string(SearchMode m);
SearchMode parse_search_mode(const std::string& s);

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000;

/// Ground sets up to this size get exact isomorph rejection.
inline constexpr unsigned kMaxSymmetricGround = 8;
/// Upper limit on binom(n, r-1).
inline constexpr std::size_t kMaxItems = 128;

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t budget = kDefaultNodeBudget;
  unsigned threads = 1;
  /// Skip families that are not lex-least among their relabelings.
  bool isomorph_rejection = true;
  /// Keep every optimal family instead of the lex-least one. Not combinable
  /// with a checkpoint.
  bool collect_all_optima = false;
  /// Prefix depth at which the tree is split into independent tasks.
  unsigned split_depth = 2;
  std::optional<std::string> checkpoint_path;
  bool resume = false;
  /// Heuristic mode: number of random restarts after the seeded climb; each
  /// restart needs `seed`.
  unsigned restarts = 0;
  std::optional<std::uint64_t> seed;
};

struct SearchCertificate {
  unsigned r = 0;
  unsigned k = 0;
  std::uint64_t b = 0;
  unsigned n = 0;
  SearchMode mode = SearchMode::exhaustive;
  SetFamily best_b;
  std::uint64_t achieved_a = 0;
  /// Exhaustive mode finished: no family over [n] beats achieved_a.
  bool exhausted = false;
  /// With threads > 1 this depends on scheduling.
  std::uint64_t nodes_visited = 0;
  double wall_time = 0;
  std::optional<std::string> checkpoint_id;
  bool isomorph_rejection = false;
  /// Filled only with collect_all_optima; ascending lex order of item ranks.
  std::vector<SetFamily> all_optima;
};

/// Requires 1 <= k <= r <= n, b <= binom(n, r-1) <= kMaxItems.
SearchCertificate solve_max_a(unsigned r, unsigned k, std::uint64_t b, unsigned n, const SearchOptions& opts = {});

struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;
};

/// Recounts a from best_b by scanning every r-subset of [n].
CertificateCheck verify_certificate(const SearchCertificate& cert);

struct SweepEntry {
  unsigned n = 0;
  bool feasible = false;  // b <= binom(n, r-1)
  std::optional<SearchCertificate> certificate;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  /// The last two feasible entries are both exhausted and agree.
  bool stabilized = false;
  std::optional<std::uint64_t> stable_value;
  /// Value at the largest feasible n.
  std::optional<std::uint64_t> final_value;
};

SweepReport sweep_n(unsigned r, unsigned k, std::uint64_t b, unsigned n_lo, unsigned n_hi,
                    const SearchOptions& opts = {});

/// Sets as nested arrays; wall_time only when `timing` is set.
nlohmann::ordered_json certificate_to_json(const SearchCertificate& cert, bool timing = false);

}  // namespace shadowlab
