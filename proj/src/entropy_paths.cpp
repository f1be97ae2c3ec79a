#include "shadowlab/entropy_paths.hpp"

#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>

#include "shadowlab/combinatorics.hpp"

namespace shadowlab {

PathSpaceTooLarge::PathSpaceTooLarge(unsigned len, Natural sz, std::uint64_t c)
    : std::runtime_error("walks of length " + std::to_string(len) + " number " + sz.str() +
                         ", above the cap of " + std::to_string(c) + "; raise the cap to proceed"),
      length(len),
      size(std::move(sz)),
      cap(c) {}

namespace {

Natural factorial(unsigned n) {
  Natural f = 1;
  for (unsigned t = 2; t <= n; ++t) f *= t;
  return f;
}

Natural power(Natural base, unsigned e) {
  Natural out = 1;
  while (e--) out *= base;
  return out;
}

void require_nonempty(const IncidenceHypergraph& h) {
  if (h.edge_count() == 0 || h.k() == 0) throw std::invalid_argument("empty path space: no edges");
}

// Interior-degree product of the walk currently on the stack.
std::uint64_t times(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("interior degree product exceeds 64 bits");
  return out;
}

// Depth-first walk enumeration; `keep_first` filters the first edge.
template <class Visit, class Keep>
void walk(const IncidenceHypergraph& h, unsigned len, Keep&& keep_first, Visit&& visit) {
  Path p;
  p.vertices.reserve(len + 1);
  p.edges.reserve(len);
  auto step = [&](auto&& self, std::uint64_t prod) -> void {
    const unsigned depth = static_cast<unsigned>(p.edges.size());
    if (depth == len) {
      visit(p, prod);
      return;
    }
    const VertexId v = p.vertices.back();
    if (depth >= 1) prod = times(prod, h.degree(v));
    for (EdgeId e : h.vertex_edges(v)) {
      if (depth == 0 && !keep_first(e)) continue;
      p.edges.push_back(e);
      for (VertexId u : h.edge_vertices(e)) {
        p.vertices.push_back(u);
        self(self, prod);
        p.vertices.pop_back();
      }
      p.edges.pop_back();
    }
  };
  for (VertexId v0 = 0; v0 < h.vertex_count(); ++v0) {
    p.vertices.assign(1, v0);
    step(step, 1);
  }
}

void check_cap(const IncidenceHypergraph& h, unsigned i, std::uint64_t cap) {
  Natural size = count_paths(h, i);
  if (size > cap) throw PathSpaceTooLarge(i, std::move(size), cap);
}

class DistanceLookup {
 public:
  explicit DistanceLookup(const IncidenceHypergraph& h) : h_(h), n_(h.vertex_count()) {
    if (n_ <= kTableLimit) {
      table_.resize(n_ * n_);
      for (VertexId u = 0; u < n_; ++u)
        for (VertexId v = u + 1; v < n_; ++v)
          table_[u * n_ + v] = table_[v * n_ + u] =
              static_cast<std::uint8_t>(std::min<std::size_t>(distance(h.vertex(u), h.vertex(v)), 255));
    }
  }
  std::size_t operator()(VertexId u, VertexId v) const {
    if (!table_.empty()) return table_[u * n_ + v];
    return distance(h_.vertex(u), h_.vertex(v));
  }

 private:
  static constexpr std::size_t kTableLimit = 4096;
  const IncidenceHypergraph& h_;
  std::size_t n_;
  std::vector<std::uint8_t> table_;
};

struct Tally {
  std::map<std::uint64_t, std::uint64_t> by_product;
  std::map<std::pair<VertexId, std::uint64_t>, std::uint64_t> by_endpoint;
  std::map<std::uint64_t, std::uint64_t> straight_by_product;
  std::unordered_map<std::uint64_t, std::uint64_t> straight_pairs;
  std::uint64_t straight = 0;

  void merge(const Tally& o) {
    for (const auto& [key, n] : o.by_product) by_product[key] += n;
    for (const auto& [key, n] : o.by_endpoint) by_endpoint[key] += n;
    for (const auto& [key, n] : o.straight_by_product) straight_by_product[key] += n;
    for (const auto& [key, n] : o.straight_pairs) straight_pairs[key] += n;
    straight += o.straight;
  }
};

Tally tally_length(const IncidenceHypergraph& h, unsigned i, bool want_straight,
                   const DistanceLookup& dist, const PathOptions& opts) {
  check_cap(h, i, opts.cap);
  const std::uint64_t b = h.vertex_count();
  auto run = [&](unsigned part, unsigned parts) {
    Tally t;
    walk(h, i, [&](EdgeId e) { return e % parts == part; },
         [&](const Path& p, std::uint64_t prod) {
           const VertexId v0 = p.vertices.front();
           const VertexId vi = p.vertices.back();
           ++t.by_product[prod];
           ++t.by_endpoint[{vi, prod}];
           if (want_straight && dist(v0, vi) == i) {
             ++t.straight;
             ++t.straight_by_product[prod];
             ++t.straight_pairs[v0 * b + vi];
           }
         });
    return t;
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) return run(0, 1);
  std::vector<Tally> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { parts[t] = run(t, threads); });
  for (auto& th : pool) th.join();
  Tally total;
  for (const Tally& part : parts) total.merge(part);
  return total;
}

// Weight denominator a k^(i+1), the factor shared by every walk of length i.
Natural shared_denominator(const IncidenceHypergraph& h, unsigned i) {
  return Natural(h.edge_count()) * power(Natural(h.k()), i + 1);
}

long double entropy_from(const std::map<std::uint64_t, std::uint64_t>& by_product,
                         const IncidenceHypergraph& h, unsigned i) {
  const long double log_shared =
      std::log(static_cast<long double>(h.edge_count())) + (i + 1) * std::log(static_cast<long double>(h.k()));
  const long double shared = static_cast<long double>(h.edge_count()) * std::pow(static_cast<long double>(h.k()), i + 1);
  // Neumaier compensated sum, ascending product order.
  long double sum = 0, comp = 0;
  for (const auto& [prod, n] : by_product) {
    const long double ln_n = std::log(static_cast<long double>(prod)) + log_shared;
    const long double term = static_cast<long double>(n) * ln_n / (static_cast<long double>(prod) * shared);
    const long double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

long double entropy0(const IncidenceHypergraph& h) {
  require_nonempty(h);
  const long double ka = static_cast<long double>(h.k()) * h.edge_count();
  long double sum = 0, comp = 0;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) continue;
    const long double m = h.degree(v) / ka;
    const long double term = -m * std::log(m);
    const long double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

Natural count_paths(const IncidenceHypergraph& h, unsigned i) {
  if (i == 0) return Natural(h.vertex_count());
  // ends[v] = walks of the current length ending at v.
  std::vector<Natural> ends(h.vertex_count(), Natural(1));
  for (unsigned step = 0; step < i; ++step) {
    std::vector<Natural> edge_in(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      for (VertexId u : h.edge_vertices(e)) edge_in[e] += ends[u];
    std::vector<Natural> next(h.vertex_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      for (VertexId v : h.edge_vertices(e)) next[v] += edge_in[e];
    ends = std::move(next);
  }
  Natural total = 0;
  for (const Natural& n : ends) total += n;
  return total;
}

bool is_valid_path(const IncidenceHypergraph& h, const Path& p) {
  if (p.vertices.size() != p.edges.size() + 1) return false;
  for (VertexId v : p.vertices)
    if (v >= h.vertex_count()) return false;
  for (std::size_t j = 0; j < p.edges.size(); ++j) {
    const EdgeId e = p.edges[j];
    if (e >= h.edge_count() || !h.incident(p.vertices[j], e) || !h.incident(p.vertices[j + 1], e)) return false;
  }
  return true;
}

void for_each_path(const IncidenceHypergraph& h, unsigned i, const std::function<void(const Path&)>& visit,
                   std::uint64_t cap) {
  if (i == 0) throw std::invalid_argument("walk length must be at least 1");
  check_cap(h, i, cap);
  walk(h, i, [](EdgeId) { return true; }, [&](const Path& p, std::uint64_t) { visit(p); });
}

std::vector<Path> enumerate_paths(const IncidenceHypergraph& h, unsigned i, std::uint64_t cap) {
  std::vector<Path> out;
  for_each_path(h, i, [&](const Path& p) { out.push_back(p); }, cap);
  return out;
}

Rational mu0(const IncidenceHypergraph& h, VertexId v) {
  require_nonempty(h);
  return Rational(Natural(h.degree(v)), Natural(h.k()) * h.edge_count());
}

Rational mu(const IncidenceHypergraph& h, const Path& p) {
  if (!is_valid_path(h, p)) throw std::invalid_argument("mu: not a walk of the hypergraph");
  if (p.length() == 0) return mu0(h, p.vertices.front());
  Natural den = shared_denominator(h, static_cast<unsigned>(p.length()));
  for (std::size_t j = 1; j < p.length(); ++j) den *= h.degree(p.vertices[j]);
  return Rational(Natural(1), den);
}

Rational mu_recursive(const IncidenceHypergraph& h, const Path& p) {
  if (!is_valid_path(h, p)) throw std::invalid_argument("mu: not a walk of the hypergraph");
  if (p.length() == 0) return mu0(h, p.vertices.front());
  Rational w(Natural(1), shared_denominator(h, 1));
  for (std::size_t j = 1; j < p.length(); ++j) w /= Natural(h.degree(p.vertices[j])) * h.k();
  return w;
}

long double entropy(const IncidenceHypergraph& h, unsigned i, std::uint64_t cap) {
  if (i == 0) return entropy0(h);
  require_nonempty(h);
  check_cap(h, i, cap);
  std::map<std::uint64_t, std::uint64_t> by_product;
  walk(h, i, [](EdgeId) { return true; }, [&](const Path&, std::uint64_t prod) { ++by_product[prod]; });
  return entropy_from(by_product, h, i);
}

namespace {

StraightStats straight_from(const IncidenceHypergraph& h, unsigned i, const Tally& t, const DistanceLookup& dist) {
  StraightStats s;
  s.length = i;
  s.m_size = t.straight;
  const Natural shared = shared_denominator(h, i);
  for (const auto& [prod, n] : t.straight_by_product) s.p += Rational(Natural(n), shared * prod);
  for (const auto& [key, n] : t.straight_pairs) s.per_pair_max = std::max(s.per_pair_max, n);
  for (VertexId u = 0; u < h.vertex_count(); ++u)
    for (VertexId v = 0; v < h.vertex_count(); ++v)
      if (u != v && dist(u, v) == i) ++s.distance_pairs;
  if (i + 1 == h.k()) {
    const Natural full = factorial(i) * factorial(i);
    std::uint64_t nice = 0;
    for (const auto& [key, n] : t.straight_pairs)
      if (Natural(n) == full) ++nice;
    s.nice_pairs = nice;
  }
  return s;
}

void check_straight_length(const IncidenceHypergraph& h, unsigned i) {
  if (i == 0 || i + 1 > h.k())
    throw std::invalid_argument("straight walks are defined for lengths 1..k-1, got " + std::to_string(i));
}

}  // namespace

StraightStats straight_stats(const IncidenceHypergraph& h, unsigned i, const PathOptions& opts) {
  check_straight_length(h, i);
  require_nonempty(h);
  const DistanceLookup dist(h);
  return straight_from(h, i, tally_length(h, i, true, dist, opts), dist);
}

EntropyReport entropy_report(const IncidenceHypergraph& h, unsigned max_len, const PathOptions& opts) {
  require_nonempty(h);
  EntropyReport rep;
  rep.d0 = entropy0(h);
  const DistanceLookup dist(h);
  const unsigned k = h.k();
  const Natural a(h.edge_count());
  const Natural b(h.vertex_count());
  const long double log_ak2 = std::log(static_cast<long double>(h.edge_count()) * k * k);
  long double prev = rep.d0;

  for (unsigned i = 1; i <= max_len; ++i) {
    const bool straight = i + 1 <= k;
    const Tally t = tally_length(h, i, straight, dist, opts);
    LengthReport r;
    r.length = i;
    for (const auto& [prod, n] : t.by_product) r.l_size += n;
    r.l_size_dp = count_paths(h, i);
    r.d = entropy_from(t.by_product, h, i);
    const long double predicted = (i == 1) ? log_ak2 : prev - rep.d0 + log_ak2;
    r.recursion_residual = std::fabs(r.d - predicted) / std::fabs(r.d);
    prev = r.d;

    const Natural shared = shared_denominator(h, i);
    std::vector<Rational> marginal(h.vertex_count());
    for (const auto& [key, n] : t.by_endpoint) marginal[key.first] += Rational(Natural(n), shared * key.second);
    r.marginal_ok = true;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
      if (marginal[v] != mu0(h, v)) r.marginal_ok = false;

    r.count_bound = Rational(power(a * k * k, i), power(b, i)) * b;
    r.count_bound_ok = Rational(r.l_size) >= r.count_bound;
    if (i >= 2) r.crude_upper_ok = r.l_size <= a * power(Natural(k), i + 1) * power(b, i - 1);
    r.entropy_le_log_count = r.d <= log_natural(r.l_size) * (1 + kEntropyRelTol);

    if (straight) {
      r.straight = straight_from(h, i, t, dist);
      const Rational lead(factorial(k - 1), factorial(k - i - 1) * power(Natural(k), i));
      r.p_lower = lead - Rational(Natural(k - i), Natural(k)) * Rational(Natural(i) * (i - 1), Natural(2)) *
                             Rational(b, Natural(k) * a);
      r.p_lower_ok = r.straight->p >= *r.p_lower;
      r.p_upper = lead;
      r.p_upper_holds = r.straight->p <= lead;
      r.m_reference = Rational(factorial(k - 1), factorial(k - i - 1)) *
                      Rational(power(a * k, i), power(b, i)) * b;
      r.per_pair_cap_ok = Natural(r.straight->per_pair_max) <= factorial(i) * factorial(i);
      if (i == 1) r.p1_exact = r.straight->p == Rational(Natural(k - 1), Natural(k));
    }
    rep.lengths.push_back(std::move(r));
  }
  return rep;
}

}  // namespace shadowlab
