#include <necklace/cohochschild.hpp>
#include <necklace/json_util.hpp>
#include <necklace/report.hpp>

namespace necklace {

std::string route_name(Route r) { return r == Route::CoHochschild ? "coch" : "ch"; }

Route parse_route(const std::string& s) {
  if (s == "coch") return Route::CoHochschild;
  if (s == "ch") return Route::HochschildOfCobar;
  throw std::invalid_argument("unknown route '" + s + "' (expected coch or ch)");
}

nlohmann::json homology_json(const HomologyResult& h) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [n, d] : h.degrees) {
    nlohmann::json tors = nlohmann::json::array();
    for (const auto& t : d.torsion) tors.push_back(integer_json(t));
    out[std::to_string(n)] = {{"free_rank", d.free_rank}, {"torsion", tors}, {"exact", d.exact}};
  }
  return out;
}

namespace {

HomologyResult run(const CatCoalgebra& C, const LoopHomologyConfig& cfg, std::optional<int> winding) {
  HomologyResult h;
  if (cfg.route == Route::CoHochschild)
    h = coch_homology(C, CoChRequest{cfg.min_degree, cfg.max_degree, cfg.max_length, cfg.extended, winding}, cfg.ring);
  else
    h = ch_homology(C, ChRequest{cfg.min_degree, cfg.max_degree, cfg.max_length, cfg.extended, winding}, cfg.ring);
  if (!cfg.allow_truncation)
    for (const auto& [n, d] : h.degrees)
      if (!d.exact)
        throw TruncationError("degree " + std::to_string(n) +
                              " is only computed up to the length window; pass --allow-truncation to accept");
  return h;
}

}  // namespace

nlohmann::json loop_homology_report(const CatCoalgebra& C, const LoopHomologyConfig& cfg) {
  if (cfg.min_degree > cfg.max_degree) throw std::invalid_argument("empty degree window");
  const bool by_winding = cfg.extended && C.cells_of_degree(1).size() == 1;
  nlohmann::json meta = {
      {"ring", cfg.ring.name()},
      {"window", {{"min_degree", cfg.min_degree}, {"max_degree", cfg.max_degree}, {"max_length", cfg.max_length}}},
      {"flags", {{"extended", cfg.extended}, {"route", route_name(cfg.route)}, {"per_winding", by_winding}}},
      {"input", C.name},
  };
  nlohmann::json out = {{"meta", meta}};
  if (!by_winding) {
    out["results"] = homology_json(run(C, cfg, std::nullopt));
    return out;
  }
  out["meta"]["flags"]["max_winding"] = cfg.max_winding;
  nlohmann::json sectors = nlohmann::json::object();
  for (int w = -cfg.max_winding; w <= cfg.max_winding; ++w) sectors[std::to_string(w)] = homology_json(run(C, cfg, w));
  out["windings"] = sectors;
  return out;
}

ReportDiff compare_reports(const nlohmann::json& a, const nlohmann::json& b) {
  const auto& wa = a.at("meta").at("window");
  const auto& wb = b.at("meta").at("window");
  if (wa.at("min_degree") != wb.at("min_degree") || wa.at("max_degree") != wb.at("max_degree"))
    throw std::invalid_argument("reports cover different degree windows");
  ReportDiff diff;
  for (const char* section : {"results", "windings"}) {
    nlohmann::json x = a.value(section, nlohmann::json::object());
    nlohmann::json y = b.value(section, nlohmann::json::object());
    if (x == y) continue;
    diff.equal = false;
    for (const auto& d : nlohmann::json::diff(x, y)) {
      nlohmann::json entry = d;
      entry["section"] = section;
      diff.differences.push_back(entry);
    }
  }
  return diff;
}

}  // namespace necklace
