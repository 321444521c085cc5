#pragma once

#include <necklace/cat_coalgebra.hpp>
#include <necklace/exact_linalg.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace necklace {

enum class Route { CoHochschild, HochschildOfCobar };

std::string route_name(Route r);
/// Accepts "coch" and "ch".
Route parse_route(const std::string& s);

struct LoopHomologyConfig {
  CoefficientRing ring = CoefficientRing::rationals();
  int min_degree = 0;
  int max_degree = 4;
  std::size_t max_length = 6;
  bool extended = false;
  Route route = Route::CoHochschild;
  /// Sectors -max_winding..max_winding are reported when there is one edge.
  int max_winding = 3;
  bool allow_truncation = false;
};

/// A computation would report numbers that are not provably exact and the
/// caller did not opt in.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

nlohmann::json homology_json(const HomologyResult& h);

/// {meta: {ring, window, flags}, results: {degree: {free_rank, torsion, exact}}}.
/// With a single edge in extended mode the results are split by winding
/// under "windings" instead.
nlohmann::json loop_homology_report(const CatCoalgebra& C, const LoopHomologyConfig& cfg);

struct ReportDiff {
  bool equal = true;
  nlohmann::json differences = nlohmann::json::array();
};

/// Compares the result sections of two reports over the same window.
/// Throws std::invalid_argument on a window mismatch.
ReportDiff compare_reports(const nlohmann::json& a, const nlohmann::json& b);

}  // namespace necklace
