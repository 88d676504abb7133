#include "intangle/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "intangle/errors.hpp"

namespace intangle {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_fail(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t fnv_elements(const std::vector<Element>& xs) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Element x : xs) {
    for (int k = 0; k < 4; ++k) {
      h ^= (x >> (8 * k)) & 0xFF;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

Json opt_surd(const std::optional<Surd>& s) { return s ? surd_to_json(*s) : Json(nullptr); }

std::optional<Surd> opt_surd_from(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return surd_from_json(*it);
}

Json opt_float(const std::optional<double>& d) { return d ? Json(format_float(*d)) : Json(nullptr); }

std::optional<double> opt_float_from(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) parse_fail(std::string("\"") + key + "\" must be a string");
  try {
    return std::stod(it->get<std::string>());
  } catch (const std::exception&) {
    parse_fail(std::string("\"") + key + "\" is not a number");
  }
}

std::string classification(const QuadrupleReport& r) {
  std::string out;
  auto add = [&](bool flag, const char* name) {
    if (!flag) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(r.commuting, "commuting");
  add(r.cocommuting, "cocommuting");
  add(r.parallelogram, "parallelogram");
  add(r.nested.has_value(), "nested");
  return out.empty() ? "generic" : out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json element_labels(const FiniteGroup& g, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (Element x : xs) out.push_back(g.label(x));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- text and files

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    parse_fail(source + ": " + line_col(text, byte) + ": malformed JSON");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << text;
}

// ---------------------------------------------------------------- groups

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table_rows();
  Json labels = Json::array();
  for (Element x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  j["labels"] = labels;
  return j;
}

GroupPtr group_from_json(const Json& j, const GroupLimits& limits, bool unchecked) {
  const Json& table = j.is_array() ? j : field(j, "table");
  if (!table.is_array()) parse_fail("\"table\" must be an array of rows");
  std::vector<std::vector<Element>> rows;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& row = table[r];
    if (!row.is_array()) parse_fail("table row " + std::to_string(r) + " is not an array");
    std::vector<Element> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_unsigned()) {
        parse_fail("table entry [" + std::to_string(r) + "][" + std::to_string(c) + "] is not a nonnegative integer");
      }
      out.push_back(row[c].get<Element>());
    }
    rows.push_back(std::move(out));
  }
  if (j.is_object()) {
    if (auto it = j.find("order"); it != j.end() && (!it->is_number_unsigned() || it->get<std::size_t>() != rows.size())) {
      parse_fail("\"order\" does not match the number of table rows");
    }
  }

  GroupPtr g;
  if (unchecked) {
    const std::size_t n = rows.size();
    std::vector<Element> flat;
    for (const auto& row : rows) {
      if (row.size() != n) throw Error(ErrorKind::BadTable, "table is not square");
      for (Element x : row) {
        if (x >= n) throw Error(ErrorKind::BadTable, "entry " + std::to_string(x) + " out of range");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    if (n > limits.max_order) {
      throw Error(ErrorKind::CapExceeded, "order " + std::to_string(n) + " exceeds max order " +
                                                    std::to_string(limits.max_order));
    }
    auto grp = FiniteGroup::from_table_unchecked(n, std::move(flat));
    grp.set_name("table(" + std::to_string(n) + ")");
    g = std::make_shared<const FiniteGroup>(std::move(grp));
  } else {
    g = group_from_table(rows, limits);
  }
  if (j.is_object() && (j.contains("labels") || j.contains("name"))) {
    auto copy = *g;
    if (auto it = j.find("labels"); it != j.end()) {
      auto labels = it->get<std::vector<std::string>>();
      if (labels.size() != copy.order()) parse_fail("\"labels\" must have one entry per element");
      copy.set_labels(std::move(labels));
    }
    if (auto it = j.find("name"); it != j.end() && it->is_string()) copy.set_name(it->get<std::string>());
    g = std::make_shared<const FiniteGroup>(std::move(copy));
  }
  return g;
}

// ---------------------------------------------------------------- numbers

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) parse_fail("expected an exact rational string such as \"1/7\", got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail("not a rational: " + j.dump());
  }
}

Json surd_to_json(const Surd& s) {
  Json j;
  j["exact"] = s.to_string();
  j["coeff"] = to_string(s.coefficient());
  j["radicand"] = s.radicand().str();
  j["float"] = to_decimal(s, 12);
  return j;
}

Surd surd_from_json(const Json& j) {
  if (j.is_string()) return Surd::parse(j.get<std::string>());
  const Rational c = rational_from_json(field(j, "coeff"));
  const auto& r = field(j, "radicand");
  BigInt rad;
  if (r.is_number_unsigned()) {
    rad = r.get<std::uint64_t>();
  } else if (r.is_string()) {
    try {
      rad = BigInt(r.get<std::string>());
    } catch (const std::exception&) {
      parse_fail("bad radicand " + r.dump());
    }
  } else {
    parse_fail("bad radicand " + r.dump());
  }
  if (rad <= 0) parse_fail("radicand must be positive");
  return Surd::make(c, rad);
}

// ---------------------------------------------------------------- trace data and reports

Json trace_data_to_json(const TraceData& td) {
  Json j;
  j["tau"] = rational_to_json(td.tau);
  j["tau_p"] = rational_to_json(td.tau_p);
  j["tau_q"] = rational_to_json(td.tau_q);
  j["tr_pq"] = rational_to_json(td.tr_pq);
  if (td.tau_meet) j["tau_meet"] = rational_to_json(*td.tau_meet);
  if (td.minimal_pair) j["minimal_pair"] = *td.minimal_pair;
  return j;
}

TraceData trace_data_from_json(const Json& j) {
  TraceData td;
  td.tau = rational_from_json(field(j, "tau"));
  td.tau_p = rational_from_json(field(j, "tau_p"));
  td.tau_q = rational_from_json(field(j, "tau_q"));
  td.tr_pq = rational_from_json(field(j, "tr_pq"));
  if (auto it = j.find("tau_meet"); it != j.end() && !it->is_null()) td.tau_meet = rational_from_json(*it);
  if (auto it = j.find("minimal_pair"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) parse_fail("\"minimal_pair\" must be a boolean");
    td.minimal_pair = it->get<bool>();
  }
  td.validate();
  return td;
}

std::vector<TraceData> trace_data_list_from_json(const Json& j) {
  std::vector<TraceData> out;
  if (!j.is_array()) {
    out.push_back(trace_data_from_json(j));
    return out;
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      out.push_back(trace_data_from_json(j[i]));
    } catch (const Error& e) {
      throw Error(e.kind(), "entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

Json report_to_json(const QuadrupleReport& r) {
  Json j;
  j["trace"] = trace_data_to_json(r.trace);
  j["cos_alpha"] = opt_surd(r.cos_alpha);
  j["cos_beta"] = opt_surd(r.cos_beta);
  j["alpha_radians"] = opt_float(r.alpha_radians);
  j["beta_radians"] = opt_float(r.beta_radians);
  j["commuting"] = r.commuting;
  j["cocommuting"] = r.cocommuting;
  j["parallelogram"] = r.parallelogram;
  j["classification"] = classification(r);
  if (r.nested) {
    Json n;
    n["index_pn"] = rational_to_json(r.nested->index_pn);
    n["index_qn"] = rational_to_json(r.nested->index_qn);
    n["index_mq"] = rational_to_json(r.nested->index_mq);
    n["index_mp"] = rational_to_json(r.nested->index_mp);
    n["cos_alpha"] = opt_surd(r.nested->cos_alpha);
    n["cos_beta"] = opt_surd(r.nested->cos_beta);
    j["nested"] = n;
  } else {
    j["nested"] = nullptr;
  }
  return j;
}

QuadrupleReport report_from_json(const Json& j) {
  QuadrupleReport r;
  r.trace = trace_data_from_json(field(j, "trace"));
  r.cos_alpha = opt_surd_from(j, "cos_alpha");
  r.cos_beta = opt_surd_from(j, "cos_beta");
  r.alpha_radians = opt_float_from(j, "alpha_radians");
  r.beta_radians = opt_float_from(j, "beta_radians");
  r.commuting = field(j, "commuting").get<bool>();
  r.cocommuting = field(j, "cocommuting").get<bool>();
  r.parallelogram = field(j, "parallelogram").get<bool>();
  if (auto it = j.find("nested"); it != j.end() && !it->is_null()) {
    ChainData c;
    c.index_pn = rational_from_json(field(*it, "index_pn"));
    c.index_qn = rational_from_json(field(*it, "index_qn"));
    c.index_mq = rational_from_json(field(*it, "index_mq"));
    c.index_mp = rational_from_json(field(*it, "index_mp"));
    c.cos_alpha = opt_surd_from(*it, "cos_alpha");
    c.cos_beta = opt_surd_from(*it, "cos_beta");
    r.nested = std::move(c);
  }
  return r;
}

// ---------------------------------------------------------------- algebra elements

Json coset_function_to_json(const CosetFunction& f) {
  Json j;
  const auto& model = *f.model();
  j["base_order"] = model.base().order();
  Json values = Json::object();
  for (std::size_t c = 0; c < model.coset_count(); ++c) {
    values[std::to_string(model.representative(c))] = to_string(f.values()[c]);
  }
  j["values"] = values;
  return j;
}

Json two_box_to_json(const TwoBoxElement& x) {
  Json j;
  j["side"] = x.side() == Side::Pointwise ? "pointwise" : "convolution";
  j["base_order"] = x.base_order();
  Json values = Json::object();
  for (Element g = 0; g < x.group().order(); ++g) values[std::to_string(g)] = x.at(g).to_string();
  j["values"] = values;
  return j;
}

// ---------------------------------------------------------------- census

Json subgroup_to_json(const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["generators"] = element_labels(s.group(), s.generators());
  j["elements"] = s.elements();
  return j;
}

Json census_to_json(const IntermediateLattice& cen) {
  const auto& lat = cen.lattice;
  Json j;
  j["group"] = lat.group->name();
  j["group_order"] = lat.group->order();
  j["base"] = subgroup_to_json(lat.base());
  j["index"] = rational_to_json(cen.index);
  j["dim_commutant"] = cen.dim_commutant;
  j["lattice_size"] = lat.size();
  Json nodes = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Json n = subgroup_to_json(lat.nodes[i]);
    n["id"] = i;
    nodes.push_back(std::move(n));
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [a, b] : lat.hasse_edges) edges.push_back({a, b});
  j["hasse_edges"] = edges;
  j["atoms"] = lat.atoms;
  j["coatoms"] = lat.coatoms;
  j["proper"] = cen.proper;
  Json pairs = Json::array();
  for (std::size_t a = 0; a < cen.proper.size(); ++a) {
    for (std::size_t b = 0; b < cen.proper.size(); ++b) {
      Json p = report_to_json(cen.reports[a][b]);
      p["p"] = cen.proper[a];
      p["q"] = cen.proper[b];
      pairs.push_back(std::move(p));
    }
  }
  j["pairs"] = pairs;
  return j;
}

std::string hasse_to_dot(const SubgroupLattice& lat) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::string label = lat.nodes[i].describe();
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    os << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& [a, b] : lat.hasse_edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

AngleCsv angle_csv(const SubgroupLattice& lat, const std::vector<PairSpec>& pairs) {
  const std::string header = "row,col,p,q,exact,float,classification\n";
  AngleCsv out{header, header};
  const std::string na = "NA:angle-undefined";
  for (const auto& [p, q] : pairs) {
    const auto quad = Quadruple::make(lat.base(), lat.nodes.at(p), lat.nodes.at(q));
    const auto report = classify(quad);
    const std::string prefix = std::to_string(p) + "," + std::to_string(q) + "," +
                               csv_field(lat.nodes[p].describe()) + "," + csv_field(lat.nodes[q].describe()) + ",";
    const std::string cls = classification(report);
    auto row = [&](const std::optional<Surd>& c) {
      if (!c) return prefix + na + ",NA," + cls + "\n";
      return prefix + csv_field(c->to_string()) + "," + to_decimal(*c, 12) + "," + cls + "\n";
    };
    out.alpha += row(report.cos_alpha);
    out.beta += row(report.cos_beta);
  }
  return out;
}

// ---------------------------------------------------------------- batteries and verdicts

Json sym_battery_to_json(const SymBattery& b) {
  Json j;
  Json conds = Json::array();
  for (std::size_t i = 0; i < b.conditions.size(); ++i) {
    conds.push_back({{"name", SymBattery::names[i]}, {"holds", b.conditions[i]}});
  }
  j["conditions"] = conds;
  j["transfer_checks_agree"] = b.transfer_checks_agree;
  j["consistent"] = b.consistent();
  return j;
}

Json po2_battery_to_json(const Po2Battery& b) {
  Json j;
  Json conds = Json::array();
  for (std::size_t i = 0; i < b.conditions.size(); ++i) {
    conds.push_back({{"name", Po2Battery::names[i]}, {"holds", b.conditions[i]}});
  }
  j["conditions"] = conds;
  j["consistent"] = b.consistent();
  return j;
}

Json verify_result_to_json(const VerifyResult& r) {
  Json j;
  j["passed"] = r.passed();
  j["checks"] = r.checks();
  j["failures"] = r.failures();
  Json ts = Json::array();
  for (const auto& t : r.tallies()) {
    Json x;
    x["suite"] = t.suite;
    x["name"] = t.name;
    x["passed"] = t.passed;
    x["failed"] = t.failed;
    x["counterexample"] = t.counterexample ? Json(*t.counterexample) : Json(nullptr);
    ts.push_back(std::move(x));
  }
  j["theorems"] = ts;
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["index"] = rational_to_json(r.index);
  j["n"] = r.n;
  j["packing_bound"] = r.packing_bound.str();
  j["kissing"] = r.kissing ? Json(r.kissing->str()) : Json(nullptr);
  j["m_bound"] = r.m_bound.str();
  j["recursion"] = r.recursion.str();
  j["whole_bound"] = r.whole_bound.str();
  j["abelian_recursion"] = rational_to_json(r.abelian_recursion);
  j["abelian_stated"] = format_float(r.abelian_stated);
  j["abelian_proof_variant"] = format_float(r.abelian_proof_variant);
  if (r.stats) {
    j["stats"] = {{"lattice_size", r.stats->lattice_size},
                  {"atoms", r.stats->atoms},
                  {"abelian_commutant", r.stats->abelian_commutant}};
  } else {
    j["stats"] = nullptr;
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"observed", c.observed}, {"bound", c.bound}, {"holds", c.holds}, {"asserted", c.asserted}});
  }
  j["checks"] = checks;
  j["asserted_hold"] = r.asserted_hold();
  return j;
}

Json mini_check_to_json(const MiniCheck& m) {
  Json j;
  j["lhs"] = rational_to_json(m.lhs);
  j["rhs"] = rational_to_json(m.rhs);
  j["cos_alpha"] = surd_to_json(m.cos_alpha);
  j["tight"] = m.tight;
  j["below_half"] = m.below_half;
  return j;
}

// ---------------------------------------------------------------- lattice cache

std::filesystem::path lattice_cache_path(const std::filesystem::path& dir, const Subgroup& base) {
  return dir / ("lattice-v" + std::to_string(kLatticeCacheVersion) + "-" + hex64(base.group().table_hash()) + "-" +
                hex64(fnv_elements(base.elements())) + ".json");
}

std::optional<SubgroupLattice> load_lattice_cache(const std::filesystem::path& dir, const Subgroup& base) {
  const auto path = lattice_cache_path(dir, base);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    const Json j = Json::parse(read_text_file(path));
    if (j.at("version").get<int>() != kLatticeCacheVersion) return std::nullopt;
    if (j.at("table_hash").get<std::string>() != hex64(base.group().table_hash())) return std::nullopt;
    if (j.at("base").get<std::vector<Element>>() != base.elements()) return std::nullopt;
    SubgroupLattice lat;
    lat.group = base.parent();
    for (const auto& n : j.at("nodes")) {
      const auto elems = n.at("elements").get<std::vector<Element>>();
      const auto gens = n.at("generators").get<std::vector<Element>>();
      // Validates closure; any mismatch makes the entry a miss.
      const auto checked = Subgroup::from_elements(lat.group, elems);
      lat.nodes.emplace_back(lat.group, checked.members(), gens);
    }
    if (lat.nodes.empty() || !(lat.nodes.front() == base) || !lat.nodes.back().is_whole()) return std::nullopt;
    lat.hasse_edges = j.at("hasse_edges").get<std::vector<std::pair<std::size_t, std::size_t>>>();
    lat.atoms = j.at("atoms").get<std::vector<std::size_t>>();
    lat.coatoms = j.at("coatoms").get<std::vector<std::size_t>>();
    for (const auto& [a, b] : lat.hasse_edges) {
      if (a >= lat.size() || b >= lat.size()) return std::nullopt;
    }
    return lat;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_lattice_cache(const std::filesystem::path& dir, const SubgroupLattice& lat) {
  Json j;
  j["version"] = kLatticeCacheVersion;
  j["table_hash"] = hex64(lat.group->table_hash());
  j["base"] = lat.base().elements();
  Json nodes = Json::array();
  for (const auto& n : lat.nodes) nodes.push_back({{"elements", n.elements()}, {"generators", n.generators()}});
  j["nodes"] = nodes;
  j["hasse_edges"] = lat.hasse_edges;
  j["atoms"] = lat.atoms;
  j["coatoms"] = lat.coatoms;
  write_text_file(lattice_cache_path(dir, lat.base()), j.dump() + "\n");
}

}  // namespace intangle
