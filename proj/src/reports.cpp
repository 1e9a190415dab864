#include "t5census/reports.hpp"

#include <cmath>
#include <sstream>

namespace t5census {

namespace {

using nlohmann::json;

std::string scalar_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& cols, const json& row) {
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    if (row.contains(cols[i])) out += csv_escape(scalar_string(row.at(cols[i])));
  }
  out += '\n';
  return out;
}

json config_json(const ConfigEcho& cfg) {
  json out = json::object();
  for (const auto& [k, v] : cfg) out[k] = v;
  return out;
}

std::string config_string(const ConfigEcho& cfg) {
  std::string out;
  for (const auto& [k, v] : cfg) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

json edge_json(const std::array<int, 3>& e) { return json::array({e[0], e[1], e[2]}); }

double u128_log2(u128 v) {
  double r = 0;
  while (v >> 53) {
    v >>= 1;
    r += 1;
  }
  return r + std::log2(static_cast<double>(static_cast<std::uint64_t>(v)));
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown format: " + name);
}

std::string emit_report(const Report& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::Json:
      return r.body.dump(2) + "\n";
    case ReportFormat::Csv: {
      std::string out;
      for (std::size_t i = 0; i < r.csv_columns.size(); ++i) {
        if (i) out += ',';
        out += r.csv_columns[i];
      }
      out += '\n';
      if (r.csv_rows.empty()) {
        out += csv_line(r.csv_columns, r.body);
      } else {
        for (const auto& row : r.csv_rows) out += csv_line(r.csv_columns, row);
      }
      return out;
    }
    case ReportFormat::Text: {
      std::string out;
      for (auto it = r.body.begin(); it != r.body.end(); ++it)
        out += it.key() + ": " + scalar_string(it.value()) + "\n";
      for (const auto& c : r.claims) out += "claim: " + c + "\n";
      return out;
    }
  }
  throw std::invalid_argument("unknown format");
}

json partition_to_json(const OrderedPartition& p) {
  json out;
  out["x_mask"] = std::to_string(p.x_mask);
  out["x"] = p.x_vertices();
  return out;
}

Report check_report(const TripleSystem& h, int sweep_cap, const ConfigEcho& cfg) {
  Report rep;
  auto wit = contains_t5(h);
  rep.body["n"] = h.n();
  rep.body["edge_count"] = h.edge_count();
  rep.body["contains_t5"] = wit.has_value();
  if (wit) {
    json w;
    w["u"] = wit->u;
    w["v"] = wit->v;
    w["edge"] = edge_json(wit->edge);
    rep.body["t5_witness"] = w;
  } else {
    rep.body["t5_witness"] = nullptr;
  }
  rep.body["independent_neighborhoods"] = has_independent_neighborhoods(h);
  if (h.n() <= sweep_cap) {
    auto p = is_semibipartite(h, sweep_cap);
    rep.body["semibipartite"] = p.has_value();
    rep.body["semibipartite_witness"] = p ? partition_to_json(*p) : json(nullptr);
  } else {
    rep.body["semibipartite"] = nullptr;
    rep.body["semibipartite_witness"] = nullptr;
  }
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"n", "edge_count", "contains_t5", "independent_neighborhoods",
                     "semibipartite", "config"};
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {
      "a triple system has independent neighborhoods if and only if it has no T5 copy",
      "semi-bipartite: some ordered partition (X,Y) leaves every edge with exactly two "
      "points in X"};
  return rep;
}

Report partition_report(const TripleSystem& h, const Thresholds& t, std::size_t witness_cap,
                        int sweep_cap, const ConfigEcho& cfg) {
  Report rep;
  auto opt = optimal_partitions(h, witness_cap, sweep_cap);
  auto flags = classify_conditions(h, t, sweep_cap);
  rep.body["n"] = h.n();
  rep.body["edge_count"] = h.edge_count();
  rep.body["d_h"] = opt.d_h;
  rep.body["total_optimal_partitions"] = opt.total_witnesses;
  rep.body["witness_cap"] = witness_cap;
  json parts = json::array();
  for (const auto& p : opt.witnesses) parts.push_back(partition_to_json(p));
  rep.body["optimal_partitions"] = parts;
  rep.body["conditions"] = {{"c1", flags.c1}, {"c2", flags.c2}, {"c3", flags.c3},
                            {"c4", flags.c4}, {"c5", flags.c5}};
  json wits = json::array();
  for (const auto& w : flags.witnesses) {
    json jw;
    jw["condition"] = w.condition;
    jw["partition"] = partition_to_json(w.partition);
    if (w.vertex >= 0) jw["vertex"] = w.vertex;
    if (w.edge[0] >= 0) jw["edge"] = edge_json(w.edge);
    wits.push_back(jw);
  }
  rep.body["condition_witnesses"] = wits;
  rep.body["thresholds"] = {{"eta", t.eta}, {"mu", t.mu}, {"alpha", t.alpha}, {"beta", t.beta}};
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"n", "edge_count", "d_h", "total_optimal_partitions",
                     "c1", "c2", "c3", "c4", "c5", "config"};
  json row;
  row["n"] = h.n();
  row["edge_count"] = h.edge_count();
  row["d_h"] = opt.d_h;
  row["total_optimal_partitions"] = opt.total_witnesses;
  row["c1"] = flags.c1;
  row["c2"] = flags.c2;
  row["c3"] = flags.c3;
  row["c4"] = flags.c4;
  row["c5"] = flags.c5;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {
      "(1) in every optimal partition, every x in X has |L_YY(x)| < beta n^2",
      "(2) in every optimal partition, every y in Y has |L_YY(y)| < 2 mu n^2",
      "(3) no optimal partition contains an alpha-rich edge",
      "(4) no optimal partition leaves an inconsistent edge with zero or three points in X",
      "(5) no optimal partition leaves an inconsistent edge with exactly one point in X"};
  return rep;
}

Report census_report(const CensusReport& r, bool cached, const ConfigEcho& cfg, bool timings) {
  Report rep;
  Theorem1Result t1 = verify_theorem1_lower(r);
  rep.body["n"] = r.n;
  rep.body["total"] = u128_to_string(r.total);
  rep.body["i_n"] = u128_to_string(r.i_n);
  rep.body["s_n"] = u128_to_string(r.s_n);
  rep.body["t5_free"] = u128_to_string(r.t5_free);
  rep.body["extra"] = u128_to_string(r.extra);
  rep.body["max_t5free_edges"] = r.max_t5free_edges;
  rep.body["workers"] = r.workers;
  rep.body["version"] = r.version;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(census_checksum(r)));
  rep.body["checksum"] = std::string(buf);
  rep.body["theorem1_holds"] = t1.holds;
  rep.body["theorem1_margin"] = i128_to_string(t1.margin);
  rep.body["cached"] = cached;
  if (timings) rep.body["elapsed_seconds"] = r.elapsed_seconds;
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"n", "total", "i_n", "s_n", "extra", "t5_free", "max_t5free_edges",
                     "workers", "version", "checksum", "theorem1_holds", "theorem1_margin",
                     "cached", "config"};
  if (timings) rep.csv_columns.push_back("elapsed_seconds");
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"i_n = t5_free: independent neighborhoods coincide with T5-freeness",
                "s_n <= i_n: every semi-bipartite system has independent neighborhoods",
                "2^(4n) (i_n - s_n) > s_n, evaluated in exact integer arithmetic"};
  return rep;
}

Report extremal_report(const ExtremalResult& r, const ConfigEcho& cfg, bool timings) {
  Report rep;
  B3Result b = b3(r.n);
  TripleSystem w(r.n, r.witness);
  bool witness_valid = !contains_t5(w) && w.edge_count() == r.lower;
  rep.body["n"] = r.n;
  rep.body["lower"] = r.lower;
  rep.body["upper"] = r.upper;
  rep.body["completed"] = r.completed;
  rep.body["nodes"] = r.nodes;
  json edges = json::array();
  for (const auto& e : r.witness) edges.push_back(edge_json(e));
  rep.body["witness"] = edges;
  rep.body["witness_valid"] = witness_valid;
  rep.body["b3_value"] = b.value;
  rep.body["at_least_b3"] = r.lower >= b.value;
  rep.body["cubic_bound"] = r.cubic_bound;
  rep.body["within_cubic_bound"] = r.within_cubic_bound;
  if (timings) rep.body["elapsed_seconds"] = r.elapsed_seconds;
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"n", "lower", "upper", "completed", "nodes", "witness_valid",
                     "b3_value", "at_least_b3", "cubic_bound", "within_cubic_bound", "config"};
  if (timings) rep.csv_columns.push_back("elapsed_seconds");
  json row = rep.body;
  row.erase("witness");
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"ex(n,T5) >= b3(n): the extremal semi-bipartite system is T5-free",
                "ex(n,T5) <= 2n^3/27 (recorded against the completed search value)"};
  return rep;
}

Report entropy_report(const EntropyFactsResult& r, const ConfigEcho& cfg) {
  Report rep;
  rep.body["n"] = r.n;
  rep.body["x_num"] = r.x.num;
  rep.body["x_den"] = r.x.den;
  rep.body["x"] = rational_value(r.x);
  rep.body["exact"] = r.exact;
  rep.body["single_holds"] = r.single_holds;
  rep.body["tail_holds"] = r.tail_holds;
  rep.body["single_margin_bits"] = r.single_margin_bits;
  rep.body["tail_margin_bits"] = r.tail_margin_bits;
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"n", "x", "exact", "single_holds", "tail_holds",
                     "single_margin_bits", "tail_margin_bits", "config"};
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"C(n, floor(xn)) < 2^(H(x) n)",
                "sum over i <= floor(xn) of C(n,i) < 2^(H(x) n), for x sufficiently small"};
  return rep;
}

Report chernoff_report(std::uint64_t m, double p, double a, double bound,
                       const std::optional<ChernoffEmpirical>& empirical, const ConfigEcho& cfg) {
  Report rep;
  rep.body["m"] = m;
  rep.body["p"] = p;
  rep.body["a"] = a;
  rep.body["bound"] = bound;
  if (empirical) {
    rep.body["trials"] = empirical->trials;
    rep.body["hits"] = empirical->hits;
    rep.body["observed"] = empirical->observed;
    rep.body["observed_below_bound"] = empirical->observed < bound;
  }
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"m", "p", "a", "bound", "trials", "hits", "observed",
                     "observed_below_bound", "config"};
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"P(S < E S - a) < exp(-a^2 / (2pm)) for S ~ Bin(m, p)"};
  return rep;
}

Report matching_report(int trials, int max_n, std::uint64_t seed, bool all_hold,
                       std::uint64_t worst_edges, std::uint64_t worst_size,
                       const ConfigEcho& cfg) {
  Report rep;
  rep.body["trials"] = trials;
  rep.body["max_n"] = max_n;
  rep.body["seed"] = seed;
  rep.body["all_hold"] = all_hold;
  rep.body["tightest_edges"] = worst_edges;
  rep.body["tightest_matching"] = worst_size;
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"trials", "max_n", "seed", "all_hold", "tightest_edges",
                     "tightest_matching", "config"};
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"every graph G on n vertices contains a matching of size at least |G|/(2n)"};
  return rep;
}

Report matchcount_report(const MatchCountResult& r, const ConfigEcho& cfg) {
  Report rep;
  rep.body["n_vertices"] = r.n_vertices;
  rep.body["m"] = r.m;
  rep.body["exact_count"] = r.exact_count;
  rep.body["bound"] = r.bound;
  rep.body["holds"] = r.exact_count <= r.bound;
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"n_vertices", "m", "exact_count", "bound", "holds", "config"};
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"graphs on [N] keeping a fixed m-matching maximum number at most "
                "2^(2m^2-2m) (N-2m+2^(N-2m+1))^m"};
  return rep;
}

Report triangle_report(int m, int l, std::uint64_t seed, std::uint64_t count, double expected,
                       bool within, const ConfigEcho& cfg) {
  Report rep;
  rep.body["m"] = m;
  rep.body["l"] = l;
  rep.body["seed"] = seed;
  rep.body["count"] = count;
  rep.body["expected"] = expected;
  rep.body["within_tolerance"] = within;
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"m", "l", "seed", "count", "expected", "within_tolerance", "config"};
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"random tripartite graphs with pair density 1/l carry (1 +- 0.1) m^3/l^3 "
                "transversal triangles"};
  return rep;
}

Report lowdense_report(const LowerDensityReport& r, const ConfigEcho& cfg) {
  static const char* names[5] = {"i", "ii", "iii", "iv", "v"};
  Report rep;
  rep.body["mu"] = r.mu;
  json conds = json::array();
  for (int i = 0; i < 5; ++i) {
    const auto& c = r.conditions[i];
    json jc;
    jc["condition"] = names[i];
    jc["status"] = condition_status_name(c.status);
    jc["lhs"] = c.lhs;
    jc["rhs"] = c.rhs;
    jc["witness"] = c.witness;
    conds.push_back(jc);
  }
  rep.body["conditions"] = conds;
  rep.body["any_violated"] = r.any_violated();
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"mu", "c_i", "c_ii", "c_iii", "c_iv", "c_v", "any_violated", "config"};
  json row;
  row["mu"] = r.mu;
  for (int i = 0; i < 5; ++i)
    row[std::string("c_") + names[i]] = condition_status_name(r.conditions[i].status);
  row["any_violated"] = r.any_violated();
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {
      "(i) matchings G1 in X and graphs G2 in X x Y with |G1| > mu n, |G2| > mu n^2 "
      "carry more than |G1||G2|/72 completing pairs",
      "(ii) graphs G1 in X and matchings G2 in Y with |G1| > mu n^2, |G2| > mu n "
      "carry more than |G1||G2|/8 completing pairs",
      "(iii) A_X, A_Y with |A_X|,|A_Y| >= mu n span more than |A_X|^2 |A_Y|/8 edges",
      "(iv) Y' with per-y sets X_y (|Y'| >= 2 mu n, |X_y| > 200 mu n) spans more than "
      "10000 mu^3 n^3 edges",
      "(v) ||Y| - n/3| < mu n"};
  return rep;
}

Report sbound_report(const SBoundResult& r, const std::optional<u128>& s_n,
                     const ConfigEcho& cfg) {
  Report rep;
  rep.body["n"] = r.n;
  rep.body["bound_log2"] = r.bound_log2;
  rep.body["construction_ok"] = r.construction_ok;
  rep.body["exact_holds"] = r.exact_holds ? json(*r.exact_holds) : json(nullptr);
  rep.body["recursion_holds"] = r.recursion_holds ? json(*r.recursion_holds) : json(nullptr);
  rep.body["s_n"] = s_n ? json(u128_to_string(*s_n)) : json(nullptr);
  rep.body["log2_s_n"] = s_n ? json(u128_log2(*s_n)) : json(nullptr);
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"n", "bound_log2", "construction_ok", "exact_holds", "recursion_holds",
                     "s_n", "log2_s_n", "config"};
  json row = rep.body;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {"log2 S(n) >= (2 n^3 - 3 n^2 - 3 n)/27",
                "S(n)^9 >= S(n-1)^9 * 2^(2 n^2 - 5 n + 1)"};
  return rep;
}

Report hierarchy_report(const Thresholds& t, const HierarchyResult& r, const ConfigEcho& cfg) {
  static const char* texts[4] = {"0.01 > H(alpha)", "alpha^2 > 100 (H(beta) + H(2 mu) + mu^2)",
                                 "beta > 100 H(2 mu)", "mu^3 >= 1000 H(eta)"};
  Report rep;
  rep.body["eta"] = t.eta;
  rep.body["mu"] = t.mu;
  rep.body["alpha"] = t.alpha;
  rep.body["beta"] = t.beta;
  rep.body["ok"] = r.ok;
  json ineqs = json::array();
  for (int i = 0; i < 4; ++i) {
    json ji;
    ji["text"] = texts[i];
    ji["lhs"] = r.lhs[i];
    ji["rhs"] = r.rhs[i];
    ji["holds"] = r.inequality[i];
    ineqs.push_back(ji);
  }
  rep.body["inequalities"] = ineqs;
  rep.body["config"] = config_json(cfg);
  rep.csv_columns = {"eta", "mu", "alpha", "beta", "ok", "config"};
  json row;
  row["eta"] = t.eta;
  row["mu"] = t.mu;
  row["alpha"] = t.alpha;
  row["beta"] = t.beta;
  row["ok"] = r.ok;
  row["config"] = config_string(cfg);
  rep.csv_rows = {row};
  rep.claims = {texts[0], texts[1], texts[2], texts[3]};
  return rep;
}

}  // namespace t5census
