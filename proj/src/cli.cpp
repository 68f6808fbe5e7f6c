#include "qdilog/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdilog/io.hpp"

namespace qdilog {

namespace {

class Reporter {
 public:
  Reporter(std::ostream& out, bool jsonl) : out_(out), jsonl_(jsonl) {}

  bool jsonl() const { return jsonl_; }
  void line(const std::string& text) {
    if (!jsonl_) out_ << text << '\n';
  }
  void row(const std::string& kind, Json j) {
    if (!jsonl_) return;
    j["kind"] = kind;
    out_ << j.dump() << '\n';
  }
  int summary(int code, const std::string& command, const std::string& message) {
    const char* status = code == kExitPass ? "PASS" : code == kExitFail ? "FAIL" : "ERROR";
    if (jsonl_) {
      out_ << Json{{"kind", "summary"}, {"command", command}, {"status", status},
                   {"exit_code", code}, {"message", message}}
                  .dump()
           << '\n';
    } else {
      out_ << command << ": " << status << ": " << message << '\n';
    }
    return code;
  }

 private:
  std::ostream& out_;
  bool jsonl_;
};

std::string names(const Quiver& q, const std::vector<std::size_t>& idx) {
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += q.vertex_name(idx[k]);
  }
  return s + "]";
}

std::string truncation(const DimVector& bound, int v_max) {
  std::ostringstream os;
  os << "bound " << to_string(bound) << ", q-order " << v_max / 2 << " (v^" << v_max << ")";
  return os.str();
}

std::string matrix_text(const Quiver& q, const IntMatrix& m) {
  std::ostringstream os;
  std::size_t width = 2;
  for (const auto& v : q.vertices()) width = std::max(width, v.size() + 1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    width = std::max(width, std::to_string(m.row(i).minCoeff()).size() + 1);
  }
  os << std::string(width, ' ');
  for (const auto& v : q.vertices()) os << std::string(width - v.size(), ' ') << v;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const auto& name = q.vertex_name(static_cast<std::size_t>(i));
    os << '\n' << std::string(width - name.size(), ' ') << name;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto cell = std::to_string(m(i, j));
      os << std::string(width - cell.size(), ' ') << cell;
    }
  }
  return os.str();
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

std::string cycle_text(const Quiver& contracted, const ContractionCycle& c) {
  std::string s = contracted.vertex_name(c.blocks[0]);
  for (std::size_t k = 0; k < c.arrows.size(); ++k) {
    s += " -" + c.arrows[k] + "-> " + contracted.vertex_name(c.blocks[k + 1]);
  }
  return s;
}

Json cycle_json(const Quiver& contracted, const ContractionCycle& c) {
  Json blocks = Json::array();
  for (auto b : c.blocks) blocks.push_back(contracted.vertex_name(b));
  return {{"blocks", blocks}, {"arrows", c.arrows}, {"length", c.length()}};
}

std::string poincare_text(const std::vector<int>& ks) {
  std::map<int, int, std::greater<>> count;
  for (int k : ks) ++count[k];
  std::string s;
  for (const auto& [k, e] : count) {
    if (!s.empty()) s += " ";
    s += "P_" + std::to_string(k);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

struct Context {
  RunConfig cfg;
  Quiver q;
  Reporter& rep;
};

SubquiverPartition chosen_partition(const Context& c) {
  const auto mode = c.cfg.spanning_blocks ? BlockArrows::DynkinSpanning : BlockArrows::Induced;
  if (!c.cfg.partition_spec.empty()) {
    return make_partition(c.q, partition_from_json(read_json_argument(c.cfg.partition_spec)),
                          mode);
  }
  // Default: the whole quiver if it is connected Dynkin, else singletons.
  std::vector<std::size_t> all(c.q.num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (!all.empty() && is_connected(c.q) &&
      std::holds_alternative<DynkinType>(classify_dynkin(c.q))) {
    return make_partition(c.q, {all}, mode);
  }
  std::vector<std::vector<std::size_t>> singles;
  for (auto i : all) singles.push_back({i});
  return make_partition(c.q, singles, mode);
}

DimVector chosen_gamma(const Context& c) {
  if (c.cfg.gamma_spec.empty()) throw Error(ErrorKind::InvalidArgument, "--gamma is required");
  return gamma_from_json(c.q, read_json_argument(c.cfg.gamma_spec));
}

DimVector chosen_bound(const Context& c) {
  if (c.cfg.bound_spec.empty()) {
    DimVector b = c.q.zero();
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = 2;
    return b;
  }
  return gamma_from_json(c.q, read_json_argument(c.cfg.bound_spec));
}

std::string types_text(const SubquiverPartition& p) {
  std::string s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += ",";
    s += to_string(p.types[j]);
  }
  return s;
}

int cmd_analyze(Context& c) {
  const auto& q = c.q;
  auto& rep = c.rep;
  rep.line("vertices: " + std::to_string(q.num_vertices()) +
           ", arrows: " + std::to_string(q.num_arrows()));
  for (const auto& a : q.arrows()) {
    rep.line("  " + a.id + ": " + q.vertex_name(a.tail) + " -> " + q.vertex_name(a.head));
  }
  VertexOrder order;
  try {
    order = topological_vertex_order(q);
  } catch (const CyclicQuiverError& e) {
    std::string walk;
    for (const auto& v : e.witness()) walk += (walk.empty() ? "" : " -> ") + v;
    rep.line("acyclic: no (cycle " + walk + ")");
    rep.row("analyze", {{"acyclic", false}, {"cycle", e.witness()}});
    return rep.summary(kExitInput, "analyze", "quiver has a directed cycle " + walk);
  }
  const IntMatrix chi = euler_matrix(q);
  const IntMatrix lam = lambda_matrix(q);
  rep.line("acyclic: yes");
  rep.line("head-before-tail order: " + names(q, order.sequence));
  rep.line("euler form chi(e_i, e_j):\n" + matrix_text(q, chi));
  rep.line("lambda(e_i, e_j):\n" + matrix_text(q, lam));
  Json comps = Json::array();
  for (const auto& comp : connected_components(q)) {
    const auto kind = classify_dynkin(induced_subquiver(q, comp));
    Json row{{"vertices", Json::array()}};
    for (auto v : comp) row["vertices"].push_back(q.vertex_name(v));
    if (const auto* t = std::get_if<DynkinType>(&kind)) {
      rep.line("component " + names(q, comp) + ": Dynkin " + to_string(*t));
      row["type"] = to_string(*t);
    } else {
      const auto& why = std::get<NotDynkin>(kind).reason;
      rep.line("component " + names(q, comp) + ": NotDynkin (" + why + ")");
      row["not_dynkin"] = why;
    }
    comps.push_back(row);
  }
  std::vector<std::string> ord;
  for (auto v : order.sequence) ord.push_back(q.vertex_name(v));
  rep.row("analyze", {{"acyclic", true},
                      {"vertices", q.vertices()},
                      {"order", ord},
                      {"euler", matrix_json(chi)},
                      {"lambda", matrix_json(lam)},
                      {"components", comps}});
  return rep.summary(kExitPass, "analyze",
                     "acyclic quiver, order " + names(q, order.sequence));
}

// Prints the verdict; returns true if admissible. `why` receives the witness.
bool report_admissibility(Context& c, const SubquiverPartition& p, std::string* why = nullptr) {
  const auto verdict = check_admissible(c.q, p);
  const Quiver contracted = contraction_quiver(c.q, p);
  Json row{{"partition", to_string(c.q, p)}, {"types", types_text(p)},
           {"admissible", verdict.admissible}, {"ordered", verdict.ordered}};
  std::string text = to_string(c.q, p) + " types " + types_text(p) + ": ";
  if (verdict.admissible) {
    text += verdict.ordered ? "admissible (ordered)" : "admissible";
  } else {
    const auto& w = *verdict.witness;
    const char* what = w.length() == 1 ? "loop" : w.length() == 2 ? "2-cycle" : "cycle";
    const auto detail = std::string(what) + " " + cycle_text(contracted, w);
    text += "not admissible, " + detail;
    if (why) *why = detail;
    row["witness"] = cycle_json(contracted, w);
  }
  c.rep.line(text);
  c.rep.row("partition", row);
  return verdict.admissible;
}

int cmd_partitions(Context& c) {
  if (!c.cfg.partition_spec.empty()) {
    const auto p = chosen_partition(c);
    std::string why;
    if (report_admissibility(c, p, &why)) {
      return c.rep.summary(kExitPass, "partitions", to_string(c.q, p) + " is admissible");
    }
    return c.rep.summary(kExitInput, "partitions",
                         to_string(c.q, p) + " is not admissible: " + why);
  }
  const auto all = enumerate_partitions(c.q, !c.cfg.all_partitions);
  std::size_t admissible = 0;
  for (const auto& p : all) admissible += report_admissibility(c, p) ? 1 : 0;
  return c.rep.summary(kExitPass, "partitions",
                       std::to_string(admissible) + " admissible of " +
                           std::to_string(all.size()) + " listed");
}

int cmd_roots(Context& c) {
  const auto p = chosen_partition(c);
  std::string why;
  if (!report_admissibility(c, p, &why)) {
    if (c.cfg.brute_force) {
      const auto valid = brute_force_valid_orders(c.q, p, OrderRules::Strict);
      const auto r = partition_roots(p, c.q.num_vertices()).entries.size();
      c.rep.line("brute force over all orders of " + std::to_string(r) + " roots: " +
                 std::to_string(valid.size()) + " valid");
      c.rep.row("brute_force", {{"roots", r}, {"valid_orders", valid.size()}});
    }
    return c.rep.summary(kExitInput, "roots", to_string(c.q, p) + " is not admissible: " + why);
  }
  const auto order = admissible_total_order(c.q, p);
  const auto verdict = validate_order(c.q, p, order);
  Json roots = Json::array();
  for (const auto& e : order.entries) {
    c.rep.line("  " + to_string(e.root) + "  block " + block_name(c.q, p.blocks[e.block]));
    roots.push_back({{"root", to_json(e.root)}, {"block", block_name(c.q, p.blocks[e.block])}});
  }
  c.rep.line("order: " + to_string(order));
  c.rep.row("order", {{"partition", to_string(c.q, p)}, {"roots", roots}, {"valid", verdict.valid}});
  if (!verdict.valid) {
    return c.rep.summary(kExitFail, "roots", "constructed order violates " +
                                                 verdict.violation->rule);
  }
  return c.rep.summary(kExitPass, "roots",
                       std::to_string(order.entries.size()) + " roots in a valid order");
}

int cmd_dt(Context& c) {
  const auto bound = chosen_bound(c);
  const auto a = make_algebra(c.q, bound, c.cfg.v_max());
  const auto e = trivial_dt(a);
  c.rep.line("E_Q = product of E(y_e_i) in order " + names(c.q, a->basis_order().sequence));
  c.rep.line("truncation: " + truncation(bound, c.cfg.v_max()));
  const auto terms = e.terms();
  for (const auto& [g, s] : terms) {
    c.rep.line("  y^" + to_string(g) + ": " + to_string(s));
    c.rep.row("term", {{"gamma", to_json(g)}, {"coeff", to_json(s)}});
  }
  return c.rep.summary(kExitPass, "dt",
                       std::to_string(terms.size()) + " terms, " +
                           truncation(bound, c.cfg.v_max()));
}

int cmd_factorize(Context& c) {
  const auto bound = chosen_bound(c);
  std::vector<SubquiverPartition> parts;
  if (c.cfg.all_partitions) {
    parts = enumerate_partitions(c.q, true);
  } else {
    parts.push_back(chosen_partition(c));
    std::string why;
    if (!report_admissibility(c, parts[0], &why)) {
      return c.rep.summary(kExitInput, "factorize",
                           to_string(c.q, parts[0]) + " is not admissible: " + why);
    }
  }
  std::size_t failed = 0;
  std::string first_failure;
  for (const auto& p : parts) {
    const auto r = verify_factorization(c.q, p, bound, c.cfg.v_max());
    std::string order;
    for (std::size_t k = 0; k < r.order.size(); ++k) {
      order += (k ? " " : "") + std::string("E(y_") + to_string(r.order[k]) + ")";
    }
    c.rep.line(r.partition + ": E_Q = " + order);
    if (r.passed()) {
      c.rep.line("  PASS: " + std::to_string(r.checked) + " coefficients equal, " +
                 truncation(r.bound, r.v_max));
    } else {
      const auto& d = r.discrepancies.front();
      c.rep.line("  FAIL: " + std::to_string(r.discrepancies.size()) +
                 " coefficients differ; first at y^" + to_string(d.gamma));
      c.rep.line("    trivial:       " + to_string(d.expected));
      c.rep.line("    factorization: " + to_string(d.actual));
      if (failed++ == 0) first_failure = r.partition + " at y^" + to_string(d.gamma);
    }
    c.rep.row("factorization", to_json(r));
  }
  const auto trunc = truncation(bound, c.cfg.v_max());
  if (failed) {
    return c.rep.summary(kExitFail, "factorize",
                         std::to_string(failed) + " of " + std::to_string(parts.size()) +
                             " factorizations differ, first " + first_failure + "; " + trunc);
  }
  return c.rep.summary(kExitPass, "factorize",
                       std::to_string(parts.size()) + " factorization(s) equal E_Q; " + trunc);
}

int cmd_codim(Context& c) {
  const auto p = chosen_partition(c);
  const auto gamma = chosen_gamma(c);
  const bool admissible = check_admissible(c.q, p).admissible;
  const auto series = kostant_series(c.q, p, gamma, c.cfg.cap);
  c.rep.line("partition " + to_string(c.q, p) + ", gamma " + to_string(gamma) +
             (admissible ? "" : " (not admissible: block-wise codimensions only)"));
  std::size_t width = 6;
  for (const auto& m : series) width = std::max(width, to_string(m).size());
  c.rep.line("  " + std::string("series") + std::string(width - 6, ' ') +
             "  codim  sign  blocks");
  std::size_t mismatches = 0;
  for (const auto& m : series) {
    long block_sum = blockwise_codim(p, m);
    Json row{{"series", to_json(m)}, {"block_codim", block_sum}};
    std::string codim = std::to_string(block_sum);
    std::string sign = "-";
    if (admissible) {
      const auto r = codim_of_stratum(c.q, p, m, gamma);
      row["report"] = to_json(r);
      codim = std::to_string(r.codim);
      sign = r.sign_exponent_parity ? "-1" : "+1";
      if (r.codim != block_sum) ++mismatches;
    }
    const auto label = to_string(m);
    c.rep.line("  " + label + std::string(width - label.size(), ' ') + "  " +
               std::string(5 - std::min<std::size_t>(5, codim.size()), ' ') + codim + "  " +
               std::string(4 - std::min<std::size_t>(4, sign.size()), ' ') + sign + "  " +
               std::to_string(block_sum));
    c.rep.row("codim", row);
  }
  if (mismatches) {
    return c.rep.summary(kExitFail, "codim",
                         std::to_string(mismatches) + " strata where codim is not additive");
  }
  return c.rep.summary(kExitPass, "codim", std::to_string(series.size()) + " strata");
}

int cmd_betti(Context& c) {
  const auto p = chosen_partition(c);
  const auto gamma = chosen_gamma(c);
  const auto r = betti_identity_check(c.q, p, gamma, c.cfg.v_max(), c.cfg.cap);
  std::vector<int> lhs_ks;
  for (std::size_t i = 0; i < gamma.size(); ++i) lhs_ks.push_back(gamma[i]);
  c.rep.line("partition " + r.partition + ", gamma " + to_string(gamma) + ", q-order " +
             std::to_string(r.v_max / 2));
  c.rep.line("lhs: " + poincare_text(lhs_ks));
  std::string rhs;
  for (const auto& t : r.terms) {
    if (!rhs.empty()) rhs += " + ";
    rhs += "q^" + std::to_string(t.codim) + " " + poincare_text(t.multiplicities);
    c.rep.line("  " + to_string(t.series) + ": codim " + std::to_string(t.codim) + ", " +
               poincare_text(t.multiplicities));
  }
  c.rep.line("rhs: " + rhs);
  c.rep.row("betti", to_json(r));
  if (!r.passed()) {
    c.rep.line("lhs = " + to_string(r.lhs));
    c.rep.line("rhs = " + to_string(r.rhs));
    return c.rep.summary(kExitFail, "betti",
                         "sides differ at q^{" + std::to_string(r.differing.front()) + "/2}");
  }
  return c.rep.summary(kExitPass, "betti",
                       std::to_string(r.terms.size()) + " terms, sides equal to q-order " +
                           std::to_string(r.v_max / 2));
}

int cmd_orbits(Context& c) {
  const auto p = chosen_partition(c);
  const auto gamma = chosen_gamma(c);
  const auto all = kostant_partitions(c.q, gamma, c.cfg.cap);
  std::size_t covered = 0;
  for (const auto& m : kostant_series(c.q, p, gamma, c.cfg.cap)) {
    const auto orbits = stratum_orbit_decomposition(c.q, p, m, gamma, c.cfg.cap);
    covered += orbits.size();
    c.rep.line(to_string(m) + ": " + std::to_string(orbits.size()) + " orbit(s)");
    Json list = Json::array();
    for (const auto& o : orbits) {
      c.rep.line("  " + to_string(o));
      list.push_back(to_json(o));
    }
    c.rep.row("stratum", {{"series", to_json(m)}, {"orbits", list}});
  }
  if (covered != all.size()) {
    return c.rep.summary(kExitFail, "orbits",
                         std::to_string(covered) + " orbits assigned, " +
                             std::to_string(all.size()) + " exist");
  }
  return c.rep.summary(kExitPass, "orbits",
                       std::to_string(all.size()) + " orbits partitioned among the strata");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quantum dilogarithm factorizations of quiver DT invariants"};
  app.require_subcommand(1);

  const std::vector<std::pair<const char*, const char*>> commands{
      {"analyze", "Acyclicity, vertex order, Euler and lambda forms, Dynkin components"},
      {"partitions", "Enumerate Dynkin subquiver partitions or check one"},
      {"roots", "Admissible total order on the partition's roots"},
      {"dt", "The DT invariant E_Q from the trivial factorization"},
      {"factorize", "Verify the factorization of E_Q for a partition"},
      {"codim", "Codimensions of the quiver strata for gamma"},
      {"betti", "Check the Poincare series identity for gamma"},
      {"orbits", "Decompose type-A strata into orbits"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--quiver", cfg.quiver_path, "Quiver file")->required();
    sub->add_option("--partition", cfg.partition_spec, "Partition: JSON array of name arrays, or a path");
    sub->add_option("--gamma", cfg.gamma_spec, "Dimension vector: JSON object, or a path");
    sub->add_option("--gamma-bound", cfg.bound_spec, "Truncation bound (default 2 per vertex)");
    sub->add_option("--q-order", cfg.q_order, "Series truncation order in q")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "jsonl"}));
    sub->add_flag("--all-partitions", cfg.all_partitions,
                  "partitions: include non-admissible; factorize: every admissible partition");
    sub->add_option("--cap", cfg.cap, "Kostant enumeration cap");
    sub->add_flag("--spanning-blocks", cfg.spanning_blocks,
                  "Keep a spanning Dynkin arrow set in non-Dynkin blocks");
    sub->add_flag("--brute-force", cfg.brute_force,
                  "roots: search every order when the partition is not admissible");
    sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << "qdilog: ERROR: " << e.what() << '\n';
    return kExitInput;
  }

  Reporter rep(out, cfg.format == "jsonl");
  try {
    Context c{cfg, load_quiver(cfg.quiver_path), rep};
    const std::map<std::string, std::function<int(Context&)>> dispatch{
        {"analyze", cmd_analyze}, {"partitions", cmd_partitions}, {"roots", cmd_roots},
        {"dt", cmd_dt},           {"factorize", cmd_factorize},   {"codim", cmd_codim},
        {"betti", cmd_betti},     {"orbits", cmd_orbits},
    };
    return dispatch.at(cfg.command)(c);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    const int code = e.kind() == ErrorKind::InconsistentCodim ? kExitFail : kExitInput;
    return rep.summary(code, cfg.command,
                       std::string(to_string(e.kind())) + ": " + e.what());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return rep.summary(kExitInput, cfg.command, e.what());
  }
}

}  // namespace qdilog
