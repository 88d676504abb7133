#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "intangle/bounds.hpp"
#include "intangle/census.hpp"
#include "intangle/coset_function.hpp"
#include "intangle/pp_basis.hpp"
#include "intangle/quadruple.hpp"
#include "intangle/two_box.hpp"
#include "intangle/verify.hpp"

namespace intangle {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with "line L, column C".
Json parse_json_text(const std::string& text, const std::string& source = "input");
std::string read_text_file(const std::filesystem::path& path);
/// Writes text atomically enough for reports (truncate + write).
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"order": n, "table": [[...]]}, entry [a][b] = index of a·b.
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j, const GroupLimits& limits = {}, bool unchecked = false);

/// Exact rationals are strings "a/b".
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"coeff": "a/b", "radicand": n}.
Json surd_to_json(const Surd& s);
Surd surd_from_json(const Json& j);

/// {"tau": "1/16", "tau_p": ..., "tau_q": ..., "tr_pq": ..., "tau_meet"?, "minimal_pair"?}.
Json trace_data_to_json(const TraceData& td);
/// Validates; violations raise InvalidTraceData.
TraceData trace_data_from_json(const Json& j);
/// A single object or an array of objects.
std::vector<TraceData> trace_data_list_from_json(const Json& j);

Json report_to_json(const QuadrupleReport& r);
QuadrupleReport report_from_json(const Json& j);

/// Coset representative index → "a/b".
Json coset_function_to_json(const CosetFunction& f);
/// Element index → "a" or "a+b√n".
Json two_box_to_json(const TwoBoxElement& x);

Json subgroup_to_json(const Subgroup& s);
Json census_to_json(const IntermediateLattice& cen);
/// Hasse diagram; nodes labeled by generators and order.
std::string hasse_to_dot(const SubgroupLattice& lat);

/// Long-form CSV, one row per (row, col) pair: exact surd string, a 12-digit
/// float column and the classification. Undefined angles are
/// "NA:angle-undefined".
struct AngleCsv {
  std::string alpha;
  std::string beta;
};
struct PairSpec {
  std::size_t p;
  std::size_t q;
};
AngleCsv angle_csv(const SubgroupLattice& lat, const std::vector<PairSpec>& pairs);

Json sym_battery_to_json(const SymBattery& b);
Json po2_battery_to_json(const Po2Battery& b);
Json verify_result_to_json(const VerifyResult& r);
Json bound_report_to_json(const BoundReport& r);
Json mini_check_to_json(const MiniCheck& m);

/// Lattice cache keyed by the multiplication-table hash and the base.
/// Unreadable or mismatching cache files count as misses.
inline constexpr int kLatticeCacheVersion = 1;
std::filesystem::path lattice_cache_path(const std::filesystem::path& dir, const Subgroup& base);
std::optional<SubgroupLattice> load_lattice_cache(const std::filesystem::path& dir, const Subgroup& base);
void store_lattice_cache(const std::filesystem::path& dir, const SubgroupLattice& lat);

}  // namespace intangle
