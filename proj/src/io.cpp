#include "qdilog/io.hpp"

#include <fstream>
#include <sstream>

namespace qdilog {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorKind::Parse, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  const Json& as = field(j, "arrows");
  if (!vs.is_array() || !as.is_array()) {
    throw Error(ErrorKind::Parse, "\"vertices\" and \"arrows\" must be arrays");
  }
  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw Error(ErrorKind::Parse, "vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : as) {
    arrows.emplace_back(string_field(a, "id"), string_field(a, "tail"), string_field(a, "head"));
  }
  return Quiver::from_names(std::move(vertices), arrows);
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back(
        {{"id", a.id}, {"tail", q.vertex_name(a.tail)}, {"head", q.vertex_name(a.head)}});
  }
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read quiver file " + path);
  try {
    return quiver_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

Json read_json_argument(const std::string& spec_or_path) {
  const auto first = spec_or_path.find_first_not_of(" \t\n");
  try {
    if (first != std::string::npos &&
        (spec_or_path[first] == '[' || spec_or_path[first] == '{')) {
      return Json::parse(spec_or_path);
    }
    std::ifstream in(spec_or_path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + spec_or_path);
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, spec_or_path + ": " + e.what());
  }
}

std::vector<std::vector<std::string>> partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "partition must be an array of arrays");
  std::vector<std::vector<std::string>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw Error(ErrorKind::Parse, "partition block must be an array");
    auto& out = blocks.emplace_back();
    for (const auto& v : b) {
      if (!v.is_string()) throw Error(ErrorKind::Parse, "partition entries must be vertex names");
      out.push_back(v.get<std::string>());
    }
  }
  return blocks;
}

DimVector gamma_from_json(const Quiver& q, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "dimension vector must be an object");
  DimVector g = q.zero();
  for (const auto& [name, value] : j.items()) {
    if (!value.is_number_integer() || value.get<long>() < 0) {
      throw Error(ErrorKind::Parse, "entry for vertex " + name + " must be a non-negative integer");
    }
    g[q.vertex_index(name)] = value.get<int>();
  }
  return g;
}

Json to_json(const DimVector& g) {
  Json a = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) a.push_back(g[i]);
  return a;
}

DimVector dim_vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "dimension vector must be an array");
  DimVector g(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) g[i] = j[i].get<int>();
  return g;
}

Json to_json(const VSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
  return {{"v_max", s.v_max()}, {"min_exp", s.min_exp()}, {"coeffs", coeffs}};
}

VSeries vseries_from_json(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : field(j, "coeffs")) coeffs.emplace_back(c.get<std::string>());
  return VSeries::from_coefficients(field(j, "min_exp").get<int>(), std::move(coeffs),
                                    field(j, "v_max").get<int>());
}

Json to_json(const KostantPartition& m) {
  Json roots = Json::array();
  for (const auto& r : m.roots) roots.push_back(to_json(r));
  return {{"roots", roots}, {"multiplicities", m.multiplicities}};
}

KostantPartition kostant_partition_from_json(const Json& j) {
  KostantPartition m;
  for (const auto& r : field(j, "roots")) m.roots.push_back(dim_vector_from_json(r));
  m.multiplicities = field(j, "multiplicities").get<std::vector<int>>();
  return m;
}

Json to_json(const KostantSeries& m) {
  Json a = Json::array();
  for (const auto& b : m.per_block) a.push_back(to_json(b));
  return a;
}

KostantSeries kostant_series_from_json(const Json& j) {
  KostantSeries m;
  for (const auto& b : j) m.per_block.push_back(kostant_partition_from_json(b));
  return m;
}

Json to_json(const VerificationReport& r) {
  Json order = Json::array();
  for (const auto& g : r.order) order.push_back(to_json(g));
  Json bad = Json::array();
  for (const auto& d : r.discrepancies) {
    bad.push_back(
        {{"gamma", to_json(d.gamma)}, {"expected", to_json(d.expected)}, {"actual", to_json(d.actual)}});
  }
  return {{"partition", r.partition}, {"bound", to_json(r.bound)}, {"v_max", r.v_max},
          {"order", order},           {"checked", r.checked},      {"passed", r.passed()},
          {"discrepancies", bad}};
}

VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  r.partition = string_field(j, "partition");
  r.bound = dim_vector_from_json(field(j, "bound"));
  r.v_max = field(j, "v_max").get<int>();
  for (const auto& g : field(j, "order")) r.order.push_back(dim_vector_from_json(g));
  r.checked = field(j, "checked").get<std::size_t>();
  for (const auto& d : field(j, "discrepancies")) {
    r.discrepancies.push_back({dim_vector_from_json(field(d, "gamma")),
                               vseries_from_json(field(d, "expected")),
                               vseries_from_json(field(d, "actual"))});
  }
  return r;
}

Json to_json(const CodimReport& r) {
  return {{"series", to_json(r.series)},
          {"sign", r.form.sign},
          {"v_power", r.form.v_power},
          {"gamma", to_json(r.form.gamma)},
          {"codim", r.codim},
          {"sign_exponent_parity", r.sign_exponent_parity}};
}

CodimReport codim_report_from_json(const Json& j) {
  CodimReport r;
  r.series = kostant_series_from_json(field(j, "series"));
  r.form.sign = field(j, "sign").get<int>();
  r.form.v_power = field(j, "v_power").get<long>();
  r.form.gamma = dim_vector_from_json(field(j, "gamma"));
  r.codim = field(j, "codim").get<long>();
  r.sign_exponent_parity = field(j, "sign_exponent_parity").get<int>();
  return r;
}

Json to_json(const BettiReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"series", to_json(t.series)},
                     {"codim", t.codim},
                     {"multiplicities", t.multiplicities},
                     {"value", to_json(t.value)}});
  }
  return {{"partition", r.partition}, {"gamma", to_json(r.gamma)}, {"v_max", r.v_max},
          {"lhs", to_json(r.lhs)},     {"rhs", to_json(r.rhs)},     {"terms", terms},
          {"differing", r.differing},  {"passed", r.passed()}};
}

BettiReport betti_report_from_json(const Json& j) {
  BettiReport r;
  r.partition = string_field(j, "partition");
  r.gamma = dim_vector_from_json(field(j, "gamma"));
  r.v_max = field(j, "v_max").get<int>();
  r.lhs = vseries_from_json(field(j, "lhs"));
  r.rhs = vseries_from_json(field(j, "rhs"));
  for (const auto& t : field(j, "terms")) {
    BettiTerm term;
    term.series = kostant_series_from_json(field(t, "series"));
    term.codim = field(t, "codim").get<long>();
    term.multiplicities = field(t, "multiplicities").get<std::vector<int>>();
    term.value = vseries_from_json(field(t, "value"));
    r.terms.push_back(std::move(term));
  }
  r.differing = field(j, "differing").get<std::vector<int>>();
  return r;
}

}  // namespace qdilog
