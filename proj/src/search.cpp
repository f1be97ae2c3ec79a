#include "shadowlab/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "shadowlab/bounds.hpp"
#include "shadowlab/combinatorics.hpp"

namespace shadowlab {

const char* to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "heuristic"; }

SearchMode parse_search_mode(const std::string& s) {
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "heuristic") return SearchMode::heuristic;
  throw std::invalid_argument("unknown search mode '" + s + "'");
}

namespace {

using Item = std::uint16_t;
using Prefix = std::vector<Item>;

struct Mask {
  std::array<std::uint64_t, 2> w{};
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  Mask with(std::size_t i) const {
    Mask m = *this;
    m.set(i);
    return m;
  }
};

// Order of the sorted item sequences: the lowest differing item decides.
bool seq_less(const Mask& x, const Mask& y) {
  for (std::size_t q = 0; q < x.w.size(); ++q) {
    const std::uint64_t d = x.w[q] ^ y.w[q];
    if (d) return (x.w[q] & (d & (~d + 1))) != 0;
  }
  return false;
}

struct Universe {
  unsigned r = 0, k = 0, n = 0;
  std::uint64_t b = 0;
  std::vector<KSet> items;
  std::vector<std::vector<Item>> rset_items;          // ascending
  std::vector<std::vector<std::uint32_t>> item_rsets;
  std::vector<std::vector<Item>> perm_items;          // non-identity relabelings
  std::uint64_t cap = 0;
  unsigned spread = 0;                                // r-sets containing one item

  std::size_t m() const { return items.size(); }
};

Universe make_universe(unsigned r, unsigned k, std::uint64_t b, unsigned n, bool iso) {
  if (r < 2) throw std::invalid_argument("search needs r >= 2");
  if (k < 1 || k > r || r > n)
    throw std::invalid_argument("search needs 1 <= k <= r <= n, got r=" + std::to_string(r) +
                                " k=" + std::to_string(k) + " n=" + std::to_string(n));
  const std::uint64_t m = binom_u64(n, r - 1);
  if (m > kMaxItems)
    throw std::invalid_argument("binom(n, r-1) = " + std::to_string(m) + " exceeds the search limit of " +
                                std::to_string(kMaxItems));
  if (b > m)
    throw std::invalid_argument("b = " + std::to_string(b) + " exceeds binom(n, r-1) = " + std::to_string(m));

  Universe u;
  u.r = r;
  u.k = k;
  u.n = n;
  u.b = b;
  u.spread = n - r + 1;
  u.items = colex_segment(m, r - 1);
  u.item_rsets.resize(m);
  const std::vector<KSet> rsets = colex_segment(binom_u64(n, r), r);
  for (std::uint32_t a = 0; a < rsets.size(); ++a) {
    std::vector<Item> sub;
    for (Element x : rsets[a]) sub.push_back(static_cast<Item>(colex_rank_u64(rsets[a].without(x))));
    std::sort(sub.begin(), sub.end());
    for (Item i : sub) u.item_rsets[i].push_back(a);
    u.rset_items.push_back(std::move(sub));
  }

  u.cap = rsets.size();
  if (b >= 1 && k == 3) u.cap = std::min(u.cap, to_u64(k3_upper(b)));
  if (k == 2) u.cap = std::min(u.cap, to_u64(binom(Natural(b), 2)));
  if (k == r) u.cap = std::min(u.cap, to_u64(kk_max_a(b, r)));

  if (iso && n <= kMaxSymmetricGround) {
    std::vector<Element> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i + 1;
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<Item> map(m);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Element> img;
        for (Element x : u.items[i]) img.push_back(perm[x - 1]);
        map[i] = static_cast<Item>(colex_rank_u64(KSet(std::move(img))));
      }
      u.perm_items.push_back(std::move(map));
    }
  }
  return u;
}

// Best value known anywhere, with the order of the task that produced it.
// Packed so that a larger key is a larger value, then an earlier task.
class Incumbent {
 public:
  static constexpr std::uint64_t kNoWitness = 0xFFFFFFFFu;

  void init(std::uint64_t value, std::uint64_t order) { key_.store(pack(value, order)); }
  void offer(std::uint64_t value, std::uint64_t order) {
    const std::uint64_t key = pack(value, order);
    std::uint64_t cur = key_.load();
    while (key > cur && !key_.compare_exchange_weak(cur, key)) {
    }
  }
  std::pair<std::uint64_t, std::uint64_t> get() const {
    const std::uint64_t key = key_.load(std::memory_order_relaxed);
    return {key >> 32, kNoWitness - (key & kNoWitness)};
  }

 private:
  static std::uint64_t pack(std::uint64_t value, std::uint64_t order) { return (value << 32) | (kNoWitness - order); }
  std::atomic<std::uint64_t> key_{0};
};

struct TaskResult {
  bool has_best = false;
  std::uint64_t value = 0;
  Prefix best;
  std::vector<Prefix> optima;
  std::uint64_t nodes = 0;
};

struct Shared {
  Incumbent incumbent;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t budget = 0;
  bool collect_all = false;
};

// Incremental state of one partial family: per r-set hit counts.
class FamilyState {
 public:
  explicit FamilyState(const Universe& u) : u_(u), have_(u.rset_items.size(), 0) {}

  void add(Item j) {
    chosen_.push_back(j);
    for (std::uint32_t a : u_.item_rsets[j])
      if (++have_[a] == u_.k) ++satisfied_;
  }
  void remove_last() {
    const Item j = chosen_.back();
    chosen_.pop_back();
    for (std::uint32_t a : u_.item_rsets[j])
      if (have_[a]-- == u_.k) --satisfied_;
  }
  void reset() {
    while (!chosen_.empty()) remove_last();
  }

  std::uint64_t satisfied() const { return satisfied_; }
  const Prefix& chosen() const { return chosen_; }
  unsigned have(std::size_t a) const { return have_[a]; }

  // Optimistic value of any completion using `slots` more items above `last`.
  std::uint64_t bound(int last, std::uint64_t slots) const {
    if (slots == 0) return satisfied_;
    std::array<std::uint64_t, 64> by_need{};
    for (std::size_t a = 0; a < have_.size(); ++a) {
      if (have_[a] >= u_.k) continue;
      std::uint64_t avail = 0;
      for (Item i : u_.rset_items[a])
        if (static_cast<int>(i) > last) ++avail;
      const unsigned need = u_.k - have_[a];
      if (need <= std::min(avail, slots)) ++by_need[need];
    }
    // Each new item raises at most `spread` hit counts.
    std::uint64_t budget = slots * u_.spread, extra = 0;
    for (unsigned need = 1; need <= u_.k && budget >= need; ++need) {
      const std::uint64_t take = std::min(by_need[need], budget / need);
      extra += take;
      budget -= take * need;
    }
    return std::min(satisfied_ + extra, u_.cap);
  }

 private:
  const Universe& u_;
  std::vector<std::uint8_t> have_;
  std::uint64_t satisfied_ = 0;
  Prefix chosen_;
};

class Explorer {
 public:
  Explorer(const Universe& u, Shared& shared)
      : u_(u), shared_(shared), state_(u), masks_(u.b + 1), images_(u.b + 1) {
    for (auto& level : images_) level.resize(u.perm_items.size());
  }

  // Pushes j at the current depth; false when the result is not lex-least.
  bool push_canonical(Item j) {
    const std::size_t d = state_.chosen().size();
    state_.add(j);
    masks_[d + 1] = masks_[d].with(j);
    for (std::size_t p = 0; p < u_.perm_items.size(); ++p) {
      const Mask img = images_[d][p].with(u_.perm_items[p][j]);
      if (seq_less(img, masks_[d + 1])) return false;
      images_[d + 1][p] = img;
    }
    return true;
  }

  void pop() { state_.remove_last(); }

  void reset() {
    state_.reset();
    masks_[0] = Mask{};
    for (auto& img : images_[0]) img = Mask{};
  }

  // Children of the current node in increasing item order, up to depth `to`.
  template <class F>
  void for_each_child(F&& f) {
    const std::size_t d = state_.chosen().size();
    const int last = d == 0 ? -1 : state_.chosen().back();
    const std::size_t hi = u_.m() - (u_.b - d);
    for (std::size_t j = static_cast<std::size_t>(last + 1); j <= hi; ++j) {
      if (push_canonical(static_cast<Item>(j))) f();
      pop();
    }
  }

  void prefixes(std::size_t depth, std::vector<Prefix>& out) {
    if (state_.chosen().size() == depth) {
      out.push_back(state_.chosen());
      return;
    }
    for_each_child([&] { prefixes(depth, out); });
  }

  // Explores the subtree below `prefix`; false if the node budget ran out.
  bool run_task(const Prefix& prefix, std::uint64_t order, TaskResult& out) {
    reset();
    for (Item j : prefix)
      if (!push_canonical(j)) throw std::logic_error("task prefix is not canonical");
    order_ = order;
    result_ = &out;
    explore();
    return !shared_.stop.load();
  }

 private:
  void explore() {
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    ++result_->nodes;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
      shared_.stop.store(true);
      return;
    }
    const std::size_t d = state_.chosen().size();
    if (d == u_.b) {
      leaf(state_.satisfied());
      return;
    }
    const int last = d == 0 ? -1 : state_.chosen().back();
    if (prunable(state_.bound(last, u_.b - d))) return;
    for_each_child([&] { explore(); });
  }

  bool prunable(std::uint64_t bnd) const {
    const bool ties = !shared_.collect_all;
    if (result_->has_best && (bnd < result_->value || (ties && bnd == result_->value))) return true;
    const auto [value, order] = shared_.incumbent.get();
    return bnd < value || (ties && bnd == value && order < order_);
  }

  void leaf(std::uint64_t value) {
    TaskResult& r = *result_;
    if (shared_.collect_all) {
      if (!r.has_best || value > r.value) {
        r.has_best = true;
        r.value = value;
        r.best = state_.chosen();
        r.optima.clear();
      }
      if (value == r.value) r.optima.push_back(state_.chosen());
    } else if (!r.has_best || value > r.value) {
      r.has_best = true;
      r.value = value;
      r.best = state_.chosen();
    }
    shared_.incumbent.offer(value, order_);
  }

  const Universe& u_;
  Shared& shared_;
  FamilyState state_;
  std::vector<Mask> masks_;
  std::vector<std::vector<Mask>> images_;
  std::uint64_t order_ = 0;
  TaskResult* result_ = nullptr;
};

SetFamily to_family(const Universe& u, const Prefix& items) {
  std::vector<KSet> sets;
  for (Item i : items) sets.push_back(u.items[i]);
  return SetFamily(u.r - 1, std::move(sets));
}

std::uint64_t evaluate(const Universe& u, const Prefix& items) {
  FamilyState s(u);
  for (Item i : items) s.add(i);
  return s.satisfied();
}

// Construction family as item ranks when it fits in [n].
std::optional<Prefix> construction_items(const Universe& u) {
  if (u.k < 2) return std::nullopt;
  try {
    const BeConfiguration be = construct_be(u.r, u.k, u.b);
    if (be.b.size() != u.b || (be.b.size() && be.b.ground_max() > u.n)) return std::nullopt;
    Prefix items;
    for (const KSet& s : be.b) items.push_back(static_cast<Item>(colex_rank_u64(s)));
    std::sort(items.begin(), items.end());
    return items;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Prefix default_seed(const Universe& u) {
  if (auto be = construction_items(u)) return *be;
  Prefix items(u.b);
  for (std::size_t i = 0; i < u.b; ++i) items[i] = static_cast<Item>(i);
  return items;
}

nlohmann::ordered_json checkpoint_header(const Universe& u, std::size_t depth) {
  nlohmann::ordered_json h;
  h["r"] = u.r;
  h["k"] = u.k;
  h["b"] = u.b;
  h["n"] = u.n;
  h["split_depth"] = depth;
  h["isomorph_rejection"] = !u.perm_items.empty();
  return {{"header", h}};
}

struct CheckpointState {
  std::map<Prefix, TaskResult> done;
};

CheckpointState read_checkpoint(const std::string& path, const nlohmann::ordered_json& header) {
  CheckpointState st;
  std::ifstream in(path);
  if (!in) return st;
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    nlohmann::ordered_json rec;
    try {
      rec = nlohmann::ordered_json::parse(lines[i]);
    } catch (const nlohmann::json::parse_error&) {
      if (i + 1 == lines.size()) break;  // torn final write
      throw std::runtime_error(path + ": malformed checkpoint record on line " + std::to_string(i + 1));
    }
    if (i == 0) {
      if (rec != header) throw std::invalid_argument(path + ": checkpoint was written for different parameters");
      continue;
    }
    if (rec.value("status", "") != "done") continue;
    TaskResult r;
    const Prefix prefix = rec.at("prefix").get<Prefix>();
    r.nodes = rec.value("nodes", std::uint64_t{0});
    if (!rec.at("best_a").is_null()) {
      r.has_best = true;
      r.value = rec.at("best_a").get<std::uint64_t>();
      r.best = rec.at("best").get<Prefix>();
    }
    st.done[prefix] = std::move(r);
  }
  return st;
}

SearchCertificate solve_exhaustive(const Universe& u, const SearchOptions& opts) {
  if (opts.collect_all_optima && opts.checkpoint_path)
    throw std::invalid_argument("collecting all optima cannot be combined with a checkpoint");
  Shared shared;
  shared.budget = opts.budget;
  shared.collect_all = opts.collect_all_optima;
  const std::optional<Prefix> seed = construction_items(u);
  if (seed) {
    const std::uint64_t s = evaluate(u, *seed);
    if (s >= 1) shared.incumbent.init(s - 1, 0);
  }

  const std::size_t depth = std::min<std::uint64_t>(u.b, opts.split_depth);
  std::vector<Prefix> tasks;
  {
    Explorer gen(u, shared);
    gen.reset();
    gen.prefixes(depth, tasks);
  }

  std::vector<TaskResult> results(tasks.size());
  std::vector<char> finished(tasks.size(), 0);
  std::unique_ptr<std::ofstream> log;
  std::mutex log_mutex;
  if (opts.checkpoint_path) {
    const auto header = checkpoint_header(u, depth);
    CheckpointState prior;
    if (opts.resume) prior = read_checkpoint(*opts.checkpoint_path, header);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      auto it = prior.done.find(tasks[t]);
      if (it == prior.done.end()) continue;
      results[t] = it->second;
      finished[t] = 1;
      if (results[t].has_best) shared.incumbent.offer(results[t].value, t + 1);
    }
    const bool fresh = !opts.resume || prior.done.empty();
    log = std::make_unique<std::ofstream>(*opts.checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
    if (!*log) throw std::runtime_error(*opts.checkpoint_path + ": cannot write checkpoint");
    if (fresh) *log << header.dump() << '\n' << std::flush;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Explorer ex(u, shared);
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || shared.stop.load()) return;
      if (finished[t]) continue;
      TaskResult r;
      if (!ex.run_task(tasks[t], t + 1, r)) return;
      results[t] = r;
      finished[t] = 1;
      if (log) {
        nlohmann::ordered_json rec;
        rec["prefix"] = tasks[t];
        rec["status"] = "done";
        rec["nodes"] = r.nodes;
        rec["best_a"] = r.has_best ? nlohmann::ordered_json(r.value) : nlohmann::ordered_json(nullptr);
        rec["best"] = r.has_best ? nlohmann::ordered_json(r.best) : nlohmann::ordered_json(nullptr);
        std::lock_guard<std::mutex> lock(log_mutex);
        *log << rec.dump() << '\n' << std::flush;
      }
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchCertificate cert;
  cert.exhausted = !shared.stop.load() && std::all_of(finished.begin(), finished.end(), [](char f) { return f; });
  const TaskResult* best = nullptr;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    cert.nodes_visited += results[t].nodes;
    if (results[t].has_best && (!best || results[t].value > best->value)) best = &results[t];
  }
  if (best) {
    cert.best_b = to_family(u, best->best);
    cert.achieved_a = best->value;
    if (opts.collect_all_optima)
      for (const TaskResult& r : results)
        if (r.has_best && r.value == best->value)
          for (const Prefix& p : r.optima) cert.all_optima.push_back(to_family(u, p));
  }
  // Tasks pruned against the seed or cut by the budget leave the seed as best.
  const Prefix fallback = default_seed(u);
  const std::uint64_t fallback_value = evaluate(u, fallback);
  if (!best || fallback_value > cert.achieved_a) {
    cert.best_b = to_family(u, fallback);
    cert.achieved_a = fallback_value;
  }
  return cert;
}

SearchCertificate solve_heuristic(const Universe& u, const SearchOptions& opts) {
  if (opts.restarts > 0 && !opts.seed) throw std::invalid_argument("random restarts need a seed");
  std::uint64_t evals = 0;
  bool out_of_budget = false;

  auto climb = [&](Prefix items) {
    FamilyState s(u);
    std::vector<char> in(u.m(), 0);
    for (Item i : items) {
      s.add(i);
      in[i] = 1;
    }
    std::uint64_t value = s.satisfied();
    bool improved = true;
    while (improved && !out_of_budget) {
      improved = false;
      for (std::size_t pos = 0; pos < items.size() && !improved && !out_of_budget; ++pos) {
        for (std::size_t j = 0; j < u.m() && !improved; ++j) {
          if (in[j]) continue;
          if (++evals > opts.budget) {
            out_of_budget = true;
            break;
          }
          // Swap items[pos] for j, keeping the chosen-list order irrelevant.
          FamilyState trial(u);
          for (std::size_t q = 0; q < items.size(); ++q) trial.add(q == pos ? static_cast<Item>(j) : items[q]);
          if (trial.satisfied() > value) {
            in[items[pos]] = 0;
            in[j] = 1;
            items[pos] = static_cast<Item>(j);
            value = trial.satisfied();
            improved = true;
          }
        }
      }
    }
    std::sort(items.begin(), items.end());
    return std::make_pair(value, items);
  };

  auto [best_value, best_items] = climb(default_seed(u));
  if (opts.restarts > 0) {
    std::mt19937_64 rng(*opts.seed);
    for (unsigned t = 0; t < opts.restarts && !out_of_budget; ++t) {
      std::vector<Item> pool(u.m());
      for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Item>(i);
      for (std::size_t i = 0; i < u.b; ++i) std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
      auto [value, items] = climb(Prefix(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(u.b)));
      if (value > best_value || (value == best_value && items < best_items)) {
        best_value = value;
        best_items = std::move(items);
      }
    }
  }

  SearchCertificate cert;
  cert.best_b = to_family(u, best_items);
  cert.achieved_a = best_value;
  cert.nodes_visited = evals;
  cert.exhausted = false;
  return cert;
}

}  // namespace

SearchCertificate solve_max_a(unsigned r, unsigned k, std::uint64_t b, unsigned n, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const bool iso = opts.mode == SearchMode::exhaustive && opts.isomorph_rejection;
  const Universe u = make_universe(r, k, b, n, iso);
  SearchCertificate cert =
      opts.mode == SearchMode::exhaustive ? solve_exhaustive(u, opts) : solve_heuristic(u, opts);
  cert.r = r;
  cert.k = k;
  cert.b = b;
  cert.n = n;
  cert.mode = opts.mode;
  cert.isomorph_rejection = iso && n <= kMaxSymmetricGround;
  cert.checkpoint_id = opts.checkpoint_path;
  cert.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

CertificateCheck verify_certificate(const SearchCertificate& cert) {
  CertificateCheck out;
  if (cert.r < 2 || cert.r > cert.n) {
    out.diagnostic = "certificate parameters are out of range";
    return out;
  }
  if (cert.best_b.member_size() != cert.r - 1) {
    out.diagnostic = "best_B members have size " + std::to_string(cert.best_b.member_size()) + ", expected " +
                     std::to_string(cert.r - 1);
    return out;
  }
  if (cert.best_b.size() != cert.b) {
    out.diagnostic = "best_B has " + std::to_string(cert.best_b.size()) + " members, expected b=" +
                     std::to_string(cert.b);
    return out;
  }
  if (!cert.best_b.empty() && cert.best_b.ground_max() > cert.n) {
    out.diagnostic = "best_B uses element " + std::to_string(cert.best_b.ground_max()) + " outside [n]";
    return out;
  }
  std::uint64_t a = 0;
  for (const KSet& s : colex_segment(binom_u64(cert.n, cert.r), cert.r)) {
    unsigned hits = 0;
    for (Element x : s)
      if (cert.best_b.contains(s.without(x))) ++hits;
    if (hits >= cert.k) ++a;
  }
  if (a != cert.achieved_a) {
    out.diagnostic = "best_B yields a=" + std::to_string(a) + ", certificate claims " +
                     std::to_string(cert.achieved_a);
    return out;
  }
  out.ok = true;
  return out;
}

SweepReport sweep_n(unsigned r, unsigned k, std::uint64_t b, unsigned n_lo, unsigned n_hi,
                    const SearchOptions& opts) {
  SearchOptions per_n = opts;
  per_n.checkpoint_path.reset();
  per_n.resume = false;
  SweepReport rep;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    SweepEntry e;
    e.n = n;
    e.feasible = r <= n && binom_u64(n, r - 1) >= b;
    if (e.feasible) e.certificate = solve_max_a(r, k, b, n, per_n);
    rep.entries.push_back(std::move(e));
  }
  std::vector<const SearchCertificate*> feasible;
  for (const SweepEntry& e : rep.entries)
    if (e.certificate) feasible.push_back(&*e.certificate);
  if (!feasible.empty()) rep.final_value = feasible.back()->achieved_a;
  if (feasible.size() >= 2) {
    const SearchCertificate& x = *feasible[feasible.size() - 2];
    const SearchCertificate& y = *feasible.back();
    if (x.exhausted && y.exhausted && x.achieved_a == y.achieved_a) {
      rep.stabilized = true;
      rep.stable_value = y.achieved_a;
    }
  }
  return rep;
}

namespace {

nlohmann::ordered_json family_value(const SetFamily& f) {
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const KSet& s : f) sets.push_back(std::vector<Element>(s.begin(), s.end()));
  return {{"r", f.member_size()}, {"sets", sets}};
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const SearchCertificate& cert, bool timing) {
  nlohmann::ordered_json j;
  j["r"] = cert.r;
  j["k"] = cert.k;
  j["b"] = cert.b;
  j["n"] = cert.n;
  j["mode"] = to_string(cert.mode);
  j["achieved_a"] = cert.achieved_a;
  j["exhausted"] = cert.exhausted;
  j["nodes_visited"] = cert.nodes_visited;
  j["isomorph_rejection"] = cert.isomorph_rejection;
  j["checkpoint"] = cert.checkpoint_id ? nlohmann::ordered_json(*cert.checkpoint_id) : nlohmann::ordered_json(nullptr);
  j["best_B"] = family_value(cert.best_b);
  if (!cert.all_optima.empty()) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const SetFamily& f : cert.all_optima) all.push_back(family_value(f));
    j["all_optima"] = all;
  }
  if (timing) j["wall_time"] = format_real(cert.wall_time);
  return j;
}

}  // namespace shadowlab
