#include "shadowlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "shadowlab/analytics_k3.hpp"
#include "shadowlab/bounds.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/entropy_paths.hpp"
#include "shadowlab/family_io.hpp"
#include "shadowlab/incidence.hpp"
#include "shadowlab/search.hpp"
#include "shadowlab/set_family.hpp"

namespace shadowlab::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag values or unmet preconditions; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const std::string& flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(flag + ": expected a non-negative integer, got '" + text + "'");
  return Natural(text);
}

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const Natural v = parse_natural(tok, "--set");
    if (v == 0 || v > std::numeric_limits<Element>::max()) throw UsageError("--set: elements must be positive");
    out.push_back(v.convert_to<Element>());
  }
  return out;
}

Json family_value(const SetFamily& f) { return parse_json_text(family_to_json(f)); }

Json cascade_value(const CascadeRep& rep) {
  Json terms = Json::array();
  for (const CascadeTerm& t : rep.terms) terms.push_back({{"c", t.c.str()}, {"i", t.index}});
  return terms;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SHADOWLAB_BUDGET")) {
    const std::string text(env);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("SHADOWLAB_BUDGET: expected a positive integer, got '" + text + "'");
    return std::stoull(text);
  }
  return kDefaultNodeBudget;
}

struct Output {
  std::string path;

  void emit(std::ostream& out, const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError(path + ": cannot write");
    f << text;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void add_output(CLI::App* sub, Output& o) { sub->add_option("--output", o.path, "Write to this file instead of stdout"); }

// decompose ---------------------------------------------------------------

struct DecomposeArgs {
  std::string value;
  unsigned top = 1;
  Output out;
};

int do_decompose(const DecomposeArgs& a, std::ostream& out) {
  const Natural m = parse_natural(a.value, "--value");
  if (a.top == 0) throw UsageError("--top-index must be positive");
  const CascadeRep rep = cascade_decompose(m, a.top);
  Json j;
  j["value"] = m.str();
  j["top_index"] = a.top;
  j["terms"] = cascade_value(rep);
  j["shift_up"] = cascade_shift(rep, +1).str();
  j["shift_down"] = rep.terms.empty() || rep.terms.back().index > 1 ? Json(cascade_shift(rep, -1).str()) : Json(nullptr);
  a.out.emit(out, dump(j));
  return kExitOk;
}

// colex ---------------------------------------------------------------------

struct ColexArgs {
  unsigned r = 0;
  std::optional<std::string> rank;
  std::optional<std::string> set;
  std::optional<std::uint64_t> count;
  Output out;
};

int do_colex(const ColexArgs& a, std::ostream& out) {
  const int modes = a.rank.has_value() + a.set.has_value() + a.count.has_value();
  if (modes != 1) throw UsageError("colex needs exactly one of --rank, --set, --count");
  Json j;
  if (a.set) {
    const KSet s(parse_elements(*a.set));
    j["set"] = std::vector<Element>(s.begin(), s.end());
    j["rank"] = colex_rank(s).str();
  } else {
    if (a.r == 0) throw UsageError("--r is required with --rank and --count");
    if (a.rank) {
      const Natural idx = parse_natural(*a.rank, "--rank");
      const KSet s = colex_unrank(idx, a.r);
      j["r"] = a.r;
      j["rank"] = idx.str();
      j["set"] = std::vector<Element>(s.begin(), s.end());
    } else {
      j["r"] = a.r;
      j["family"] = family_value(colex_initial_segment(*a.count, a.r));
    }
  }
  a.out.emit(out, dump(j));
  return kExitOk;
}

// shadow --------------------------------------------------------------------

struct ShadowArgs {
  std::string input;
  unsigned r = 0;
  std::optional<std::uint64_t> count;
  Output out;
};

int do_shadow(const ShadowArgs& a, std::ostream& out) {
  SetFamily f;
  Json j;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw FormatError(a.input + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      f = family_from_json(parse_json_text(ss.str()));
    } catch (const FormatError& e) {
      throw FormatError(a.input + ": " + e.what());
    }
  } else if (a.count && a.r > 0) {
    f = colex_initial_segment(*a.count, a.r);
  } else {
    throw UsageError("shadow needs --input, or --r with --count");
  }
  const SetFamily sh = shadow(f);
  j["size"] = f.size();
  j["shadow_size"] = sh.size();
  bool ok = true;
  if (f.member_size() >= 1) {
    const Natural min_b = kk_min_b(f.size(), f.member_size());
    j["kk_min_b"] = min_b.str();
    ok = Natural(sh.size()) >= min_b;
    j["kk_ok"] = ok;
  }
  j["shadow"] = family_value(sh);
  a.out.emit(out, dump(j));
  return ok ? kExitOk : kExitCheckFailed;
}

// construct -----------------------------------------------------------------

struct ConstructArgs {
  std::string kind = "canonical";
  unsigned r = 0, k = 0;
  std::optional<unsigned> c;
  std::optional<std::uint64_t> b;
  Output out;
};

int do_construct(const ConstructArgs& a, std::ostream& out) {
  BeConfiguration be;
  if (a.kind == "canonical") {
    if (!a.c) throw UsageError("construct --kind canonical needs --c");
    be = construct_canonical(a.r, a.k, *a.c);
  } else if (a.kind == "be") {
    if (!a.b) throw UsageError("construct --kind be needs --b");
    be = construct_be(a.r, a.k, *a.b);
  } else {
    throw UsageError("--kind must be canonical or be");
  }
  a.out.emit(out, configuration_to_json(Configuration{be.k, be.a, be.b}) + "\n");
  return kExitOk;
}

// validate ------------------------------------------------------------------

struct InputArgs {
  std::string input;
  Output out;
};

int do_validate(const InputArgs& a, std::ostream& out) {
  const Configuration cfg = load_configuration(a.input);
  const CoverReport rep = validate(cfg.a, cfg.b, cfg.k);
  Json j;
  j["k"] = cfg.k;
  j["a"] = cfg.a.size();
  j["b"] = cfg.b.size();
  j["pass"] = rep.pass;
  j["min_count"] = rep.min_count;
  Json bad = Json::array();
  for (std::size_t i : rep.violating) {
    const KSet& s = cfg.a[i];
    bad.push_back({{"set", std::vector<Element>(s.begin(), s.end())}, {"count", rep.counts[i]}});
  }
  j["violating"] = bad;
  a.out.emit(out, dump(j));
  return rep.pass ? kExitOk : kExitCheckFailed;
}

IncidenceHypergraph load_hypergraph(const std::string& path, Configuration& cfg) {
  cfg = load_configuration(path);
  const CoverReport rep = validate(cfg.a, cfg.b, cfg.k);
  if (!rep.pass) throw UsageError(path + ": configuration fails the cover condition (run validate for details)");
  return IncidenceHypergraph::build(cfg.a, cfg.b, cfg.k);
}

// analyze -------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  bool per_vertex = false;
  std::optional<std::size_t> vertex;
  Output out;
};

Json epsilon_value(const k3::VertexEpsilon& e) {
  return {{"e1", to_string(e.e1)}, {"e2", e.e2}, {"e3", e.e3}, {"e4", e.e4}, {"e5", e.e5},
          {"e6", e.e6},            {"e7", e.e7}, {"e8", e.e8}, {"e9", e.e9}};
}

int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
  Configuration cfg;
  const IncidenceHypergraph h = load_hypergraph(a.input, cfg);
  if (h.k() != 3) throw UsageError("analyze needs k=3, configuration has k=" + std::to_string(h.k()));
  if (h.vertex_count() == 0) throw UsageError("analyze needs b >= 1");
  const k3::EpsilonProfile p = k3::epsilon_profile(h);
  const k3::IdentityReport id = k3::identity_check(p);

  Rational gamma_max = 0;
  for (const auto& v : p.per_vertex) gamma_max = std::max(gamma_max, k3::gamma_of(v));
  std::uint64_t p2_by_degree = 0;
  for (VertexId v = 0; v < h.vertex_count(); ++v) p2_by_degree += std::uint64_t{h.degree(v)} * (h.degree(v) - 1) / 2;
  const std::uint64_t p2 = k3::count_p2(h);

  const bool d1_ok = p.ordered_distance1 == 6 * p.a + p.totals.e8;
  const bool j_ok = p.j_from_pairs == p.j_from_partners;
  const bool cross_ok = p.intersecting_pairs == 0 || (p.min_cross_pairs >= 2 && p.max_cross_pairs <= 4);
  const bool div_ok = p.totals.e2 % 4 == 0 && p.totals.e3 % 4 == 0;
  const bool ineq_ok = within_real_k3_bound(p.a, p.b);

  Json j;
  j["a"] = p.a;
  j["b"] = p.b;
  j["identity"] = {{"lhs", to_string(id.lhs)}, {"rhs", to_string(id.rhs)}, {"equal", id.equal}};
  j["epsilon_sums"] = epsilon_value(p.totals);
  j["gamma_sum"] = to_string(k3::gamma_of(p.totals));
  j["gamma_max"] = to_string(gamma_max);
  j["p2"] = p2;
  j["checks"] = {
      {"p2_equals_degree_sum", p2 == p2_by_degree},
      {"distance1_pairs", {{"count", p.ordered_distance1}, {"expected", 6 * p.a + p.totals.e8}, {"ok", d1_ok}}},
      {"j_counts", {{"from_edge_pairs", p.j_from_pairs}, {"from_vertex_pairs", p.j_from_partners}, {"ok", j_ok}}},
      {"cross_pairs", {{"min", p.min_cross_pairs}, {"max", p.max_cross_pairs}, {"ok", cross_ok}}},
      {"e2_e3_divisible_by_4", div_ok},
      {"inequality_a_bound", ineq_ok},
  };
  if (a.per_vertex) {
    Json rows = Json::array();
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
      Json row;
      const KSet& s = h.vertex(v);
      row["vertex"] = std::vector<Element>(s.begin(), s.end());
      row["degree"] = h.degree(v);
      row["epsilon"] = epsilon_value(p.per_vertex[v]);
      row["gamma"] = to_string(k3::gamma_of(p.per_vertex[v]));
      rows.push_back(std::move(row));
    }
    j["per_vertex"] = rows;
  }
  if (a.vertex) {
    if (*a.vertex >= h.vertex_count()) throw UsageError("--vertex out of range");
    const k3::OctahedronReport oct = k3::octahedron_census(h, *a.vertex);
    const k3::ColourClassReport& cr = oct.colour_report;
    Json classes = Json::array();
    for (const auto& cc : cr.classes)
      classes.push_back({{"colour", {cc.colour.first, cc.colour.second}}, {"size", cc.edges.size()}});
    Json focus;
    const KSet& s = h.vertex(*a.vertex);
    focus["vertex"] = std::vector<Element>(s.begin(), s.end());
    focus["octahedra"] = oct.octahedra;
    focus["colour_classes"] = classes;
    focus["s"] = cr.s;
    focus["same_colour_pairs"] = cr.same_colour_pairs;
    focus["core"] = cr.core ? Json(std::vector<Element>(cr.core->begin(), cr.core->end())) : Json(nullptr);
    if (cr.core) {
      const k3::EdgeClassification ec = k3::classify_edges(h, *cr.core);
      focus["edges"] = {{"nice", ec.nice}, {"linking", ec.linking}, {"outside", ec.outside},
                        {"linking_unique", ec.linking_unique}};
    }
    j["focus"] = focus;
  }
  a.out.emit(out, dump(j));
  const bool ok = id.equal && d1_ok && j_ok && cross_ok && div_ok && ineq_ok && p2 == p2_by_degree;
  return ok ? kExitOk : kExitCheckFailed;
}

// entropy -------------------------------------------------------------------

struct EntropyArgs {
  std::string input;
  unsigned max_len = 1;
  std::uint64_t cap = kDefaultPathCap;
  unsigned threads = 1;
  Output out;
};

Json opt_rational(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }
Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

int do_entropy(const EntropyArgs& a, std::ostream& out) {
  Configuration cfg;
  const IncidenceHypergraph h = load_hypergraph(a.input, cfg);
  if (a.max_len == 0) throw UsageError("--max-len must be at least 1");
  if (h.edge_count() == 0) throw UsageError("entropy needs at least one member of A");
  const EntropyReport rep = entropy_report(h, a.max_len, PathOptions{a.cap, a.threads});
  bool ok = true;
  Json lengths = Json::array();
  for (const LengthReport& r : rep.lengths) {
    Json j;
    j["i"] = r.length;
    j["L"] = r.l_size.str();
    j["M"] = r.straight ? Json(r.straight->m_size) : Json(nullptr);
    j["P"] = r.straight ? Json(to_string(r.straight->p)) : Json(nullptr);
    j["D"] = format_real(r.d);
    j["recursion_residual"] = format_real(r.recursion_residual);
    Json b;
    b["marginal"] = r.marginal_ok;
    b["recursion"] = r.recursion_residual <= kEntropyRelTol;
    b["count_lower"] = {{"value", to_string(r.count_bound)}, {"ok", r.count_bound_ok}};
    b["count_upper"] = opt_bool(r.crude_upper_ok);
    b["entropy_le_log_count"] = r.entropy_le_log_count;
    b["dp_count_agrees"] = r.l_size == r.l_size_dp;
    b["p_lower"] = {{"value", opt_rational(r.p_lower)}, {"ok", opt_bool(r.p_lower_ok)}};
    b["p_upper_reported"] = {{"value", opt_rational(r.p_upper)}, {"holds", opt_bool(r.p_upper_holds)}};
    b["m_reference_reported"] = opt_rational(r.m_reference);
    b["per_pair_cap"] = {{"max", r.straight ? Json(r.straight->per_pair_max) : Json(nullptr)},
                         {"ok", opt_bool(r.per_pair_cap_ok)}};
    b["p1_exact"] = opt_bool(r.p1_exact);
    if (r.straight && r.straight->nice_pairs)
      b["nice_pairs"] = {{"nice", *r.straight->nice_pairs}, {"distance_pairs", r.straight->distance_pairs}};
    j["bounds"] = b;
    lengths.push_back(std::move(j));
    ok = ok && r.marginal_ok && r.recursion_residual <= kEntropyRelTol && r.count_bound_ok &&
         r.crude_upper_ok.value_or(true) && r.entropy_le_log_count && r.l_size == r.l_size_dp &&
         r.p_lower_ok.value_or(true) && r.per_pair_cap_ok.value_or(true) && r.p1_exact.value_or(true);
  }
  Json j;
  j["k"] = h.k();
  j["a"] = h.edge_count();
  j["b"] = h.vertex_count();
  j["D0"] = format_real(rep.d0);
  j["lengths"] = lengths;
  a.out.emit(out, dump(j));
  return ok ? kExitOk : kExitCheckFailed;
}

// bounds --------------------------------------------------------------------

struct BoundsArgs {
  unsigned k = 3;
  std::string b_lo = "1", b_hi = "10";
  std::string format = "json";
  Output out;
};

int do_bounds(const BoundsArgs& a, std::ostream& out) {
  const Natural lo = parse_natural(a.b_lo, "--b-lo");
  const Natural hi = parse_natural(a.b_hi, "--b-hi");
  if (a.k < 2) throw UsageError("bounds tables need k >= 2");
  if (lo < 1 || hi < lo) throw UsageError("need 1 <= --b-lo <= --b-hi");
  const std::vector<BoundRow> rows = conjecture_table(a.k, lo, hi);
  bool ok = true;
  for (const BoundRow& r : rows)
    if (r.k_specific_upper && r.be_lower > *r.k_specific_upper) ok = false;
  if (a.format == "csv")
    a.out.emit(out, bounds_csv(rows));
  else if (a.format == "json")
    a.out.emit(out, dump(bounds_json(rows)));
  else
    throw UsageError("--format must be json or csv");
  return ok ? kExitOk : kExitCheckFailed;
}

// solve / sweep -------------------------------------------------------------

struct SearchArgs {
  unsigned r = 0, k = 0, n = 0, n_lo = 0, n_hi = 0;
  std::uint64_t b = 0;
  std::string mode = "exhaustive";
  std::optional<std::uint64_t> budget;
  std::string checkpoint;
  bool resume = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
  unsigned restarts = 0;
  bool timing = false;
  bool all_optima = false;
  bool no_isomorph_rejection = false;
  Output out;
};

SearchOptions search_options(const SearchArgs& a) {
  SearchOptions o;
  o.mode = parse_search_mode(a.mode);
  o.budget = a.budget ? *a.budget : default_budget();
  o.threads = a.threads;
  o.seed = a.seed;
  o.restarts = a.restarts;
  o.collect_all_optima = a.all_optima;
  o.isomorph_rejection = !a.no_isomorph_rejection;
  if (!a.checkpoint.empty()) o.checkpoint_path = a.checkpoint;
  o.resume = a.resume;
  if (o.resume && !o.checkpoint_path) throw UsageError("--resume needs --checkpoint");
  if (o.restarts > 0 && !o.seed) throw UsageError("--restarts needs --seed");
  return o;
}

int do_solve(const SearchArgs& a, std::ostream& out) {
  const SearchCertificate cert = solve_max_a(a.r, a.k, a.b, a.n, search_options(a));
  const CertificateCheck check = verify_certificate(cert);
  Json j = certificate_to_json(cert, a.timing);
  j["verified"] = check.ok;
  if (!check.ok) j["diagnostic"] = check.diagnostic;
  a.out.emit(out, dump(j));
  return check.ok ? kExitOk : kExitCheckFailed;
}

int do_sweep(const SearchArgs& a, std::ostream& out) {
  if (a.n_hi < a.n_lo) throw UsageError("need --n-lo <= --n-hi");
  const SweepReport rep = sweep_n(a.r, a.k, a.b, a.n_lo, a.n_hi, search_options(a));
  bool ok = true;
  Json entries = Json::array();
  for (const SweepEntry& e : rep.entries) {
    Json j;
    j["n"] = e.n;
    j["feasible"] = e.feasible;
    if (e.certificate) {
      const CertificateCheck check = verify_certificate(*e.certificate);
      ok = ok && check.ok;
      j["achieved_a"] = e.certificate->achieved_a;
      j["exhausted"] = e.certificate->exhausted;
      j["verified"] = check.ok;
      j["certificate"] = certificate_to_json(*e.certificate, a.timing);
    }
    entries.push_back(std::move(j));
  }
  Json j;
  j["r"] = a.r;
  j["k"] = a.k;
  j["b"] = a.b;
  j["entries"] = entries;
  j["stabilized"] = rep.stabilized;
  j["stable_value"] = rep.stable_value ? Json(*rep.stable_value) : Json(nullptr);
  j["final_value"] = rep.final_value ? Json(*rep.final_value) : Json(nullptr);
  a.out.emit(out, dump(j));
  return ok ? kExitOk : kExitCheckFailed;
}

void add_search_flags(CLI::App* sub, SearchArgs& a) {
  sub->add_option("--r", a.r, "Size of the members of A")->required();
  sub->add_option("--k", a.k, "Members of B each member of A must contain")->required();
  sub->add_option("--b", a.b, "Size of B")->required();
  sub->add_option("--mode", a.mode, "exhaustive or heuristic")->check(CLI::IsMember({"exhaustive", "heuristic"}));
  sub->add_option("--budget", a.budget, "Node budget (default: SHADOWLAB_BUDGET or 2e9)");
  sub->add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", a.seed, "Seed for heuristic restarts");
  sub->add_option("--restarts", a.restarts, "Random restarts in heuristic mode");
  sub->add_flag("--timing", a.timing, "Include wall time (makes output non-reproducible)");
  sub->add_flag("--no-isomorph-rejection", a.no_isomorph_rejection, "Search labelled families");
  add_output(sub, a.out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shadow problem toolkit: exact kernels, identity checks, bounds and search for f(r,k,b)", "shadowlab"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* s_dec = app.add_subcommand(
      "decompose", "Greedy cascade m = binom(c_s, s) + binom(c_{s-1}, s-1) + ... with strictly decreasing c");
  s_dec->add_option("--value", dec.value, "The integer m")->required();
  s_dec->add_option("--top-index", dec.top, "Top index s")->required();
  add_output(s_dec, dec.out);

  ColexArgs col;
  auto* s_col = app.add_subcommand("colex", "Colex rank of a set, the set of a rank, or an initial segment");
  s_col->add_option("--r", col.r, "Set size");
  s_col->add_option("--rank", col.rank, "Unrank this index");
  s_col->add_option("--set", col.set, "Rank this set, e.g. 1,2,4");
  s_col->add_option("--count", col.count, "List the first COUNT r-sets");
  add_output(s_col, col.out);

  ShadowArgs sha;
  auto* s_sha = app.add_subcommand("shadow", "Shadow of a family, compared with the Kruskal-Katona minimum");
  s_sha->add_option("--input", sha.input, "Family JSON {\"r\":..,\"sets\":[..]}");
  s_sha->add_option("--r", sha.r, "Set size of a colex initial segment");
  s_sha->add_option("--count", sha.count, "Length of the colex initial segment");
  add_output(s_sha, sha.out);

  ConstructArgs con;
  auto* s_con = app.add_subcommand(
      "construct", "Write the core-plus-colex-segment configuration (or its canonical case b = binom(c, k-1))");
  s_con->add_option("--kind", con.kind, "canonical or be")->check(CLI::IsMember({"canonical", "be"}));
  s_con->add_option("--r", con.r, "Size of the members of A")->required();
  s_con->add_option("--k", con.k, "Cover threshold")->required();
  s_con->add_option("--c", con.c, "Canonical parameter c");
  s_con->add_option("--b", con.b, "Size of B");
  add_output(s_con, con.out);

  InputArgs val;
  auto* s_val = app.add_subcommand("validate", "Check that every member of A contains at least k members of B");
  s_val->add_option("--input", val.input, "Configuration JSON {\"k\":..,\"A\":..,\"B\":..}")->required();
  add_output(s_val, val.out);

  AnalyzeArgs ana;
  auto* s_ana = app.add_subcommand(
      "analyze", "k=3 pair accounting: error terms, the exact b(b-1) identity, colour classes and octahedra");
  s_ana->add_option("--input", ana.input, "Configuration JSON with k=3")->required();
  s_ana->add_flag("--per-vertex", ana.per_vertex, "Emit error terms for every vertex");
  s_ana->add_option("--vertex", ana.vertex, "Colour classes, octahedra and edge split at this vertex index");
  add_output(s_ana, ana.out);

  EntropyArgs ent;
  auto* s_ent = app.add_subcommand(
      "entropy", "Walk counts, walk-distribution entropy and its recursion, straight-walk probabilities");
  s_ent->add_option("--input", ent.input, "Configuration JSON")->required();
  s_ent->add_option("--max-len", ent.max_len, "Largest walk length")->required();
  s_ent->add_option("--cap", ent.cap, "Largest walk count to enumerate");
  s_ent->add_option("--threads", ent.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_output(s_ent, ent.out);

  BoundsArgs bnd;
  auto* s_bnd = app.add_subcommand(
      "bounds", "Construction value, exact k<=3 upper bounds and advisory leading terms for a range of b");
  s_bnd->add_option("--k", bnd.k, "Cover threshold (>= 2)");
  s_bnd->add_option("--b-lo", bnd.b_lo, "First b");
  s_bnd->add_option("--b-hi", bnd.b_hi, "Last b");
  s_bnd->add_option("--format", bnd.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_output(s_bnd, bnd.out);

  SearchArgs sol;
  auto* s_sol = app.add_subcommand("solve", "Maximum a over families B inside the ground set [n], with certificate");
  add_search_flags(s_sol, sol);
  s_sol->add_option("--n", sol.n, "Ground set size")->required();
  s_sol->add_option("--checkpoint", sol.checkpoint, "Append completed subtrees to this file");
  s_sol->add_flag("--resume", sol.resume, "Skip subtrees recorded in the checkpoint");
  s_sol->add_flag("--all-optima", sol.all_optima, "List every optimal family up to relabeling");

  SearchArgs swp;
  auto* s_swp = app.add_subcommand("sweep", "Run solve for each ground set size and report whether a stabilizes");
  add_search_flags(s_swp, swp);
  s_swp->add_option("--n-lo", swp.n_lo, "Smallest ground set")->required();
  s_swp->add_option("--n-hi", swp.n_hi, "Largest ground set")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (s_dec->parsed()) return do_decompose(dec, out);
    if (s_col->parsed()) return do_colex(col, out);
    if (s_sha->parsed()) return do_shadow(sha, out);
    if (s_con->parsed()) return do_construct(con, out);
    if (s_val->parsed()) return do_validate(val, out);
    if (s_ana->parsed()) return do_analyze(ana, out);
    if (s_ent->parsed()) return do_entropy(ent, out);
    if (s_bnd->parsed()) return do_bounds(bnd, out);
    if (s_sol->parsed()) return do_solve(sol, out);
    if (s_swp->parsed()) return do_sweep(swp, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PathSpaceTooLarge& e) {
    err << "error: " << e.what() << " (--cap)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shadowlab::cli
