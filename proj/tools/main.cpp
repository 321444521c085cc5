// Batch front end: validate presentations, compute loop homology, compare
// reports and run the Hopf identity suite.

#include <necklace/chains.hpp>
#include <necklace/fixtures.hpp>
#include <necklace/hopf_suite.hpp>
#include <necklace/json_util.hpp>
#include <necklace/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace necklace;

namespace {

enum Exit { Pass = 0, Failure = 1, Usage = 2 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::string ring = "q";
  std::int64_t p = 0;
  int min_degree = 0;
  int max_degree = 4;
  std::size_t max_length = 6;
  bool extended = false;
  std::string format = "json";
  std::string route = "coch";
  int max_winding = 3;
  bool allow_truncation = false;
  std::string config;
};

/// Reads a JSON file, reporting syntax errors as path:line:col.
nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

/// Keys of a config file override whatever the flags said.
void apply_config(JobConfig& job) {
  if (job.config.empty()) return;
  nlohmann::json j = read_json(job.config);
  if (!j.is_object()) throw UsageError(job.config + ": config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "ring") job.ring = v.get<std::string>();
    else if (key == "p") job.p = v.get<std::int64_t>();
    else if (key == "min_degree") job.min_degree = v.get<int>();
    else if (key == "max_degree") job.max_degree = v.get<int>();
    else if (key == "max_length") job.max_length = v.get<std::size_t>();
    else if (key == "extended") job.extended = v.get<bool>();
    else if (key == "format") job.format = v.get<std::string>();
    else if (key == "route") job.route = v.get<std::string>();
    else if (key == "max_winding") job.max_winding = v.get<int>();
    else if (key == "allow_truncation") job.allow_truncation = v.get<bool>();
    else throw UsageError(job.config + ": unknown key '" + key + "'");
  }
}

CoefficientRing make_ring(const JobConfig& job) {
  if (job.ring == "z") return CoefficientRing::integers();
  if (job.ring == "q") return CoefficientRing::rationals();
  if (job.ring == "fp") {
    if (job.p == 0) throw UsageError("--ring fp needs --p <prime>");
    try {
      return CoefficientRing::prime_field(job.p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown ring '" + job.ring + "' (expected z, q or fp)");
}

LoopHomologyConfig homology_config(JobConfig job) {
  apply_config(job);
  if (job.min_degree > job.max_degree) throw UsageError("empty degree window");
  if (job.format != "json" && job.format != "text") throw UsageError("--format must be json or text");
  LoopHomologyConfig cfg;
  cfg.ring = make_ring(job);
  cfg.min_degree = job.min_degree;
  cfg.max_degree = job.max_degree;
  cfg.max_length = job.max_length;
  cfg.extended = job.extended;
  try {
    cfg.route = parse_route(job.route);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.max_winding = job.max_winding;
  cfg.allow_truncation = job.allow_truncation;
  return cfg;
}

/// A path to a presentation file, or fixture:<name> for a built-in one.
SimplicialSet load_input(const std::string& input) {
  const std::string prefix = "fixture:";
  if (input.rfind(prefix, 0) == 0) return fixtures::by_name(input.substr(prefix.size()));
  return load_simplicial_set(input);
}

void add_window_flags(CLI::App* cmd, JobConfig& job) {
  cmd->add_option("--ring", job.ring, "Coefficient ring: z, q or fp")->check(CLI::IsMember({"z", "q", "fp"}));
  cmd->add_option("--p", job.p, "Characteristic for --ring fp");
  cmd->add_option("--min-degree", job.min_degree, "Lowest degree reported");
  cmd->add_option("--max-degree", job.max_degree, "Highest degree reported");
  cmd->add_option("--max-length", job.max_length, "Word and necklace length bound");
  cmd->add_flag("--extended", job.extended, "Invert the edges (extended cobar)");
  cmd->add_option("--format", job.format, "Output format: json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--max-winding", job.max_winding, "Largest |winding| reported per sector");
  cmd->add_flag("--allow-truncation", job.allow_truncation, "Accept numbers that are only exact up to the length window");
  cmd->add_option("--config", job.config, "JSON config; its keys override flags");
}

std::string homology_text(const nlohmann::json& results) {
  std::ostringstream os;
  for (const auto& [deg, d] : results.items()) {
    os << "  H_" << deg << ": rank " << d.at("free_rank").get<std::size_t>();
    if (!d.at("torsion").empty()) os << ", torsion " << d.at("torsion").dump();
    os << (d.at("exact").get<bool>() ? "" : " (truncated)") << "\n";
  }
  return os.str();
}

std::string report_text(const nlohmann::json& r) {
  std::ostringstream os;
  const auto& m = r.at("meta");
  os << m.at("input").get<std::string>() << " over " << m.at("ring").get<std::string>() << ", route "
     << m.at("flags").at("route").get<std::string>() << "\n";
  if (r.contains("windings"))
    for (const auto& [w, res] : r.at("windings").items()) os << " winding " << w << "\n" << homology_text(res);
  else
    os << homology_text(r.at("results"));
  return os.str();
}

void emit(const std::string& format, const nlohmann::json& j, const std::string& text) {
  if (format == "text") std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

int cmd_validate(const std::string& input, const std::string& format) {
  SimplicialSet X = load_input(input);
  nlohmann::json out = {{"input", input}};
  std::ostringstream text;
  ValidationReport v = validate_presentation(X);
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& e : v.violations) {
    viol.push_back({{"kind", e.kind}, {"simplex", e.simplex}, {"detail", e.detail}});
    text << "violation " << e.kind << " at " << e.simplex << ": " << e.detail << "\n";
  }
  out["simplicial"] = {{"ok", v.ok()}, {"violations", viol}};
  bool ok = v.ok();
  if (ok) {
    ChainsModel M = to_categorical_coalgebra(X);
    AxiomReport a = check_axioms(M.C);
    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& r : a.results) {
      axioms.push_back({{"axiom", r.axiom}, {"passed", r.passed}, {"verifiable", r.verifiable}, {"witness", r.witness},
                        {"detail", r.detail}});
      text << "axiom " << r.axiom << ": " << (r.passed ? "ok" : "FAILED at " + r.witness + " " + r.detail) << "\n";
    }
    nlohmann::json curv = nlohmann::json::object();
    for (int c = 0; c < M.C.size(); ++c)
      if (M.C.h[static_cast<std::size_t>(c)] != 0) {
        curv[M.C.cells[static_cast<std::size_t>(c)].name] = integer_json(M.C.h[static_cast<std::size_t>(c)]);
        text << "curvature h(" << M.C.cells[static_cast<std::size_t>(c)].name << ") = " << M.C.h[static_cast<std::size_t>(c)] << "\n";
      }
    out["coalgebra"] = {{"ok", a.ok()}, {"axioms", axioms}, {"curvature", curv}};
    ok = a.ok();
  }
  out["ok"] = ok;
  text << (ok ? "valid" : "invalid") << "\n";
  emit(format, out, text.str());
  return ok ? Pass : Failure;
}

int cmd_loop_homology(const std::string& input, const JobConfig& job) {
  LoopHomologyConfig cfg = homology_config(job);
  JobConfig eff = job;
  apply_config(eff);
  ChainsModel M = to_categorical_coalgebra(load_input(input));
  M.C.name = input;
  nlohmann::json r = loop_homology_report(M.C, cfg);
  emit(eff.format, r, report_text(r));
  return Pass;
}

int cmd_compare(const std::string& a, const std::string& b, JobConfig ja, JobConfig jb) {
  LoopHomologyConfig ca = homology_config(ja), cb = homology_config(jb);
  apply_config(ja);
  ChainsModel Ma = to_categorical_coalgebra(load_input(a));
  ChainsModel Mb = to_categorical_coalgebra(load_input(b));
  Ma.C.name = a;
  Mb.C.name = b;
  nlohmann::json ra = loop_homology_report(Ma.C, ca), rb = loop_homology_report(Mb.C, cb);
  ReportDiff d = compare_reports(ra, rb);
  nlohmann::json out = {{"equal", d.equal}, {"differences", d.differences}, {"a", ra}, {"b", rb}};
  std::string text = report_text(ra) + report_text(rb) + (d.equal ? "equal\n" : "different\n");
  for (const auto& e : d.differences) text += "  " + e.dump() + "\n";
  emit(ja.format, out, text);
  return d.equal ? Pass : Failure;
}

int cmd_hopf_check(const std::string& input, JobConfig job, bool flip) {
  apply_config(job);
  ChainsModel M = to_categorical_coalgebra(load_input(input));
  LoopBialgebra H(M, flip);
  HopfWindow w;
  w.max_degree = job.max_degree;
  w.max_length = job.max_length;
  w.extended = job.extended;
  w.max_winding = job.max_winding;
  HopfSuiteReport rep = hopf_suite(H, w);
  nlohmann::json checks = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& c : rep.checks) {
    checks.push_back({{"identity", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"witness", c.witness}});
    text << (c.passed ? "ok     " : "FAILED ") << c.name << " (" << c.checked << " generators)"
         << (c.passed ? "" : " at " + c.witness) << "\n";
  }
  nlohmann::json out = {{"input", input}, {"ok", rep.ok()}, {"checks", checks}};
  if (const auto* f = rep.first_failure()) out["first_failure"] = {{"identity", f->name}, {"witness", f->witness}};
  emit(job.format, out, text.str());
  return rep.ok() ? Pass : Failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact free loop space models of simplicial sets"};
  app.require_subcommand(1);

  std::string input, input_b, format = "json";
  JobConfig job, job_b;
  bool flip = false;

  auto* validate = app.add_subcommand("validate", "Check a presentation and its chains coalgebra");
  validate->add_option("input", input, "Presentation JSON or fixture:<name>")->required();
  validate->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* loop = app.add_subcommand("loop-homology", "Homology of the free loop space model");
  loop->add_option("input", input, "Presentation JSON or fixture:<name>")->required();
  add_window_flags(loop, job);
  loop->add_option("--route", job.route, "coch (coHochschild) or ch (Hochschild of the cobar)");

  auto* compare = app.add_subcommand("compare", "Compare loop homology of two inputs");
  compare->add_option("a", input, "First input")->required();
  compare->add_option("b", input_b, "Second input")->required();
  add_window_flags(compare, job);
  compare->add_option("--route-a", job.route, "Route for the first input");
  compare->add_option("--route-b", job_b.route, "Route for the second input");
  compare->add_option("--config-b", job_b.config, "JSON config applied to the second input only");

  auto* hopf = app.add_subcommand("hopf-check", "Bialgebra, antipode and twisted tensor identities");
  hopf->add_option("input", input, "Presentation JSON or fixture:<name>")->required();
  add_window_flags(hopf, job);
  hopf->add_flag("--flip-coproduct-sign", flip, "Negative control: corrupt the coproduct signs");

  job.max_length = 6;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Pass : Usage;
  }

  try {
    if (*validate) return cmd_validate(input, format);
    if (*loop) return cmd_loop_homology(input, job);
    if (*compare) {
      JobConfig b = job;
      if (compare->count("--route-b")) b.route = job_b.route;
      if (!job_b.config.empty()) b.config = job_b.config;
      return cmd_compare(input, input_b, job, b);
    }
    if (*hopf) {
      if (!hopf->count("--max-length")) job.max_length = 4;
      return cmd_hopf_check(input, job, flip);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Failure;
  }
  return Usage;
}
