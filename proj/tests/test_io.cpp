#include <catch_amalgamated.hpp>

#include <filesystem>

#include "intangle/errors.hpp"
#include "intangle/io.hpp"
#include "intangle/lattice.hpp"
#include "support.hpp"

using namespace intangle;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("intangle_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("malformed JSON reports line and column") {
  try {
    (void)parse_json_text("{\n  \"table\": [[0, 1],\n            [1, 0,]]\n}", "t.json");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("t.json: line 3, column") != std::string::npos);
  }
}

TEST_CASE("group tables round-trip") {
  const auto g = parse_group_spec("dihedral:5");
  const auto j = group_to_json(*g);
  const auto back = group_from_json(parse_json_text(j.dump()));
  CHECK(back->table_hash() == g->table_hash());
  CHECK(back->label(3) == g->label(3));
  CHECK(group_to_json(*back).dump() == j.dump());
}

TEST_CASE("group table errors") {
  CHECK_THROWS_AS(group_from_json(parse_json_text(R"({"table": [[0, "x"], [1, 0]]})")), Error);
  CHECK_THROWS_AS(group_from_json(parse_json_text(R"({"order": 3, "table": [[0, 1], [1, 0]]})")), Error);
  CHECK_THROWS_AS(group_from_json(parse_json_text(R"({"table": [[0, 1], [1, 1]]})")), Error);
  // Unchecked loading keeps a non-group table for the verifier to inspect.
  const auto bad = group_from_json(parse_json_text(R"({"table": [[0, 1], [1, 1]]})"), {}, true);
  CHECK(find_axiom_violation(*bad).has_value());
}

TEST_CASE("surds and trace data round-trip as exact strings") {
  const Surd s = Surd(1) / Surd::sqrt(7);
  const auto j = surd_to_json(s);
  CHECK(j["exact"] == "1/7√7");
  CHECK(j["float"] == "0.377964473009");
  CHECK(surd_from_json(j) == s);
  CHECK(surd_from_json(Json("3/7")) == Surd(Rational(3, 7)));

  TraceData td{Rational(1, 16), Rational(1, 4), Rational(1, 4), Rational(1, 7), Rational(1, 16), true};
  CHECK(trace_data_from_json(trace_data_to_json(td)) == td);
  CHECK_THROWS_AS(trace_data_from_json(parse_json_text(R"({"tau": "1/8", "tau_p": 0.5, "tau_q": "1/2", "tr_pq": "1/4"})")), Error);
  CHECK_THROWS_AS(trace_data_from_json(parse_json_text(R"({"tau": "1/8", "tau_p": "1/2", "tau_q": "1/2"})")), Error);
  try {
    (void)trace_data_from_json(parse_json_text(R"({"tau": "1/8", "tau_p": "1/2", "tau_q": "1/2", "tr_pq": "1/16"})"));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidTraceData);
    CHECK(std::string(e.what()).find("tr_pq < tau") != std::string::npos);
  }
  const auto list = trace_data_list_from_json(parse_json_text(R"([{"tau": "1/4", "tau_p": "1/2", "tau_q": "1/2", "tr_pq": "1/4"},
      {"tau": 1, "tau_p": 1, "tau_q": 1, "tr_pq": 1}])"));
  CHECK(list.size() == 2);
}

TEST_CASE("reports round-trip byte for byte") {
  const auto g = parse_group_spec("symmetric:4");
  const auto lat = enumerate_subgroups(Subgroup::trivial(g));
  for (std::size_t a = 0; a < lat.size(); a += 3) {
    for (std::size_t b = 0; b < lat.size(); b += 2) {
      const auto r = classify(Quadruple::make(lat.base(), lat.nodes[a], lat.nodes[b]));
      const auto text = report_to_json(r).dump();
      const auto back = report_from_json(parse_json_text(text));
      CHECK(back.trace == r.trace);
      CHECK(back.cos_alpha == r.cos_alpha);
      CHECK(back.cos_beta == r.cos_beta);
      CHECK(back.commuting == r.commuting);
      CHECK(back.nested.has_value() == r.nested.has_value());
      CHECK(report_to_json(back).dump() == text);
    }
  }
}

TEST_CASE("angle CSV marks undefined angles") {
  const auto g = parse_group_spec("cyclic:30");
  const auto lat = enumerate_subgroups(Subgroup::trivial(g));
  const std::vector<Element> g15{15}, g3{3};
  const auto p = *lat.find(closure(g, g15).members());
  const auto q = *lat.find(closure(g, g3).members());
  const auto csv = angle_csv(lat, {{p, q}, {0, p}});
  CHECK(csv.alpha.find(",1/3,0.333333333333,nested\n") != std::string::npos);
  CHECK(csv.beta.find(",1/7√7,0.377964473009,nested\n") != std::string::npos);
  CHECK(csv.alpha.find("NA:angle-undefined") != std::string::npos);
  CHECK(csv.alpha.rfind("row,col,p,q,exact,float,classification\n", 0) == 0);
}

TEST_CASE("Hasse DOT output lists every node and edge") {
  const auto lat = enumerate_subgroups(Subgroup::trivial(parse_group_spec("symmetric:3")));
  const auto dot = hasse_to_dot(lat);
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(dot.find("n" + std::to_string(i) + " [label=") != std::string::npos);
  for (const auto& [a, b] : lat.hasse_edges) {
    CHECK(dot.find("n" + std::to_string(a) + " -> n" + std::to_string(b) + ";") != std::string::npos);
  }
}

TEST_CASE("lattice cache: hit, version mismatch and corruption") {
  const auto dir = scratch_dir("cache");
  const auto g = parse_group_spec("dihedral:6");
  const auto base = Subgroup::trivial(g);
  CHECK_FALSE(load_lattice_cache(dir, base).has_value());
  const auto lat = enumerate_subgroups(base);
  store_lattice_cache(dir, lat);
  const auto hit = load_lattice_cache(dir, base);
  REQUIRE(hit.has_value());
  CHECK(hit->nodes == lat.nodes);
  CHECK(hit->hasse_edges == lat.hasse_edges);
  CHECK(hasse_to_dot(*hit) == hasse_to_dot(lat));

  // Same table, other base: a different key.
  const std::vector<Element> r{1};
  CHECK_FALSE(load_lattice_cache(dir, closure(g, r)).has_value());

  const auto path = lattice_cache_path(dir, base);
  auto j = parse_json_text(read_text_file(path));
  j["version"] = kLatticeCacheVersion + 1;
  write_text_file(path, j.dump());
  CHECK_FALSE(load_lattice_cache(dir, base).has_value());
  write_text_file(path, "{ truncated");
  CHECK_FALSE(load_lattice_cache(dir, base).has_value());
  fs::remove_all(dir);
}

TEST_CASE("census, bounds and verdict JSON are deterministic") {
  const auto base = Subgroup::trivial(parse_group_spec("quaternion:3"));
  CHECK(census_to_json(census(base)).dump() == census_to_json(census(base)).dump());
  const auto b = bound_report(12, 6);
  CHECK(bound_report_to_json(b).dump() == bound_report_to_json(bound_report(12, 6)).dump());
  CHECK(bound_report_to_json(b)["recursion"] == recursion_bound(12).str());
}
