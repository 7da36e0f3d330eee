#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <linkforge/analysis.hpp>
#include <linkforge/energy.hpp>
#include <linkforge/errors.hpp>
#include <linkforge/experiments.hpp>
#include <linkforge/families.hpp>
#include <linkforge/geometry.hpp>
#include <linkforge/io.hpp>
#include <linkforge/optimize.hpp>
#include <linkforge/parallel.hpp>

namespace lf = linkforge;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kDivergence = 3, kTopology = 4 };

constexpr double kDegree = std::numbers::pi / 180.0;

struct FamilyFlags {
  std::string family;
  lf::FamilyOptions options;
  std::string shape = "circle";
  std::string tilt = "checkerboard-diagonal";
  int vertices = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "Family name (see `linkforge families`)")->required();
    cmd->add_option("--vertices", vertices, "Vertices per smooth component (default: family default)");
    cmd->add_option("--size", options.size, "Chain components, chainmail width N, tambourine count, or chain layers");
    cmd->add_option("--sides", options.sides, "Polygon sides for hopf-polygons and borromean-ngon");
    cmd->add_option("--alpha", options.alpha, "Radius of the second circle for hopf-circles");
    cmd->add_option("--radius", options.radius, "Small-circle radius for tambourine");
    cmd->add_option("--shape", shape, "Ring shape for chains and chainmail: circle | square");
    cmd->add_option("--tilt", tilt, "4-in-1 tilt: checkerboard-diagonal | checkerboard-y | rows-y");
    cmd->add_option("--p", options.p, "Torus winding p");
    cmd->add_option("--q", options.q, "Torus winding q");
  }

  lf::FamilySpec spec() {
    options.shape = lf::parse_ring_shape(shape);
    options.tilt = lf::parse_european_tilt(tilt);
    return lf::make_family(family, options);
  }
};

// Angles are read and written in degrees on the command line.
std::vector<double> to_internal(const lf::FamilySpec& f, std::vector<double> x) {
  for (std::size_t i = 0; i < x.size() && i < f.params.size(); ++i)
    if (f.params[i].angle) x[i] *= kDegree;
  return x;
}

double to_cli(const lf::FamilySpec& f, std::size_t i, double v) { return f.params[i].angle ? v / kDegree : v; }

std::string cli_name(const lf::FamilySpec& f, std::size_t i) {
  return f.params[i].angle ? f.params[i].name + "_deg" : f.params[i].name;
}

std::vector<double> start_point(const lf::FamilySpec& f, const std::vector<double>& x0_cli) {
  if (x0_cli.empty()) return f.initial();
  if (x0_cli.size() != f.n_params())
    throw lf::InvalidArgument("--x0 needs " + std::to_string(f.n_params()) + " values for " + f.name);
  return to_internal(f, x0_cli);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_energy(const std::string& path, const std::string& kind) {
  const lf::Link link = lf::read_link_file(path);
  if (kind == "both") {
    print_json({{"mobius", lf::mobius_total(link)}, {"md", lf::md_energy(link)}});
  } else {
    print_json(lf::evaluate(link, lf::parse_energy_kind(kind)));
  }
  return kOk;
}

int cmd_minimize(FamilyFlags& flags, const std::string& kind, const std::vector<double>& x0_cli,
                 const std::string& method, int max_evals, bool history) {
  const auto f = flags.spec();
  lf::OptimizerConfig config;
  if (method == "golden")
    config.method = lf::Method::golden_section;
  else if (method != "nelder-mead")
    throw lf::InvalidArgument("unknown method '" + method + "' (nelder-mead | golden)");
  config.max_evals = max_evals;
  config.record_history = history;
  const auto r = lf::minimize_family(f, lf::parse_energy_kind(kind), start_point(f, x0_cli), config, flags.vertices);
  json j = r;
  json params = json::object();
  for (std::size_t i = 0; i < f.n_params(); ++i) params[cli_name(f, i)] = to_cli(f, i, r.params_opt[i]);
  j["params"] = params;
  j["vertices"] = flags.vertices > 0 ? flags.vertices : f.default_vertices;
  print_json(j);
  return kOk;
}

int cmd_sweep(FamilyFlags& flags, const std::string& kind_name, const std::string& param,
              const std::vector<double>& range, int steps, const std::vector<std::string>& fixed,
              const std::vector<double>& x0_cli, bool components, const std::string& out_path) {
  const auto f = flags.spec();
  const auto kind = lf::parse_energy_kind(kind_name);
  const std::size_t k = f.param_index(param);
  if (range.size() != 2) throw lf::InvalidArgument("--range needs lo,hi");
  if (steps < 2) throw lf::InvalidArgument("--steps must be at least 2");
  std::vector<double> base = start_point(f, x0_cli);
  const double lo_int = f.params[k].angle ? range[0] * kDegree : range[0];
  const double hi_int = f.params[k].angle ? range[1] * kDegree : range[1];
  if (!(lo_int < hi_int)) throw lf::InvalidArgument("--range needs lo < hi");
  if (!(lo_int > f.params[k].lo && hi_int < f.params[k].hi))
    throw lf::InvalidArgument("sweep range for " + param + " must lie inside (" +
                              std::to_string(to_cli(f, k, f.params[k].lo)) + ", " +
                              std::to_string(to_cli(f, k, f.params[k].hi)) + ")");
  for (const auto& item : fixed) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw lf::InvalidArgument("--fixed entries look like name=value");
    const std::size_t i = f.param_index(item.substr(0, eq));
    double v = 0.0;
    try {
      v = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw lf::InvalidArgument("bad number in --fixed " + item);
    }
    base[i] = f.params[i].angle ? v * kDegree : v;
  }

  struct Row {
    double value = std::numeric_limits<double>::infinity();
    lf::EnergyReport report;
    bool ok = false;
  };
  std::vector<Row> rows(static_cast<std::size_t>(steps));
  std::vector<double> grid(rows.size());
  for (std::size_t s = 0; s < rows.size(); ++s) grid[s] = lo_int + (hi_int - lo_int) * s / (steps - 1);
  lf::parallel_for(rows.size(), [&](std::size_t s) {
    std::vector<double> x = base;
    x[k] = grid[s];
    try {
      rows[s].report = lf::evaluate(f.build(x, flags.vertices), kind);
      rows[s].value = rows[s].report.total;
      rows[s].ok = true;
    } catch (const lf::InvalidArgument&) {
    } catch (const lf::DivergenceError&) {
    }
  });

  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv.precision(17);
  csv << "param,energy";
  std::size_t n_comp = 0;
  for (const auto& r : rows)
    if (r.ok) n_comp = std::max(n_comp, r.report.self_energies.size());
  if (components) {
    for (std::size_t i = 0; i < n_comp; ++i) csv << ",self_" << i;
    for (std::size_t i = 0; i < n_comp; ++i)
      for (std::size_t j = i + 1; j < n_comp; ++j) csv << ",cross_" << i << '_' << j;
  }
  csv << '\n';
  for (std::size_t s = 0; s < rows.size(); ++s) {
    csv << to_cli(f, k, grid[s]) << ',';
    if (rows[s].ok)
      csv << rows[s].value;
    else
      csv << "inf";
    if (components) {
      const std::size_t n_cols = n_comp + n_comp * (n_comp - 1) / 2;
      if (!rows[s].ok) {
        for (std::size_t c = 0; c < n_cols; ++c) csv << ",inf";
      } else {
        for (double e : rows[s].report.self_energies) csv << ',' << e;
        for (std::size_t i = 0; i < n_comp; ++i)
          for (std::size_t j = i + 1; j < n_comp; ++j) csv << ',' << rows[s].report.cross(i, j);
      }
    }
    csv << '\n';
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw lf::InvalidArgument("cannot write '" + out_path + "'");
    out << csv.str();
  }
  return kOk;
}

int cmd_validate(const std::string& path) {
  const lf::Link link = lf::read_link_file(path);
  const std::size_t m = link.size();
  json matrix = json::array(), raw = json::array(), flags = json::array();
  const double scale = link.diameter();
  for (std::size_t i = 0; i < m; ++i) {
    json row = json::array(), raw_row = json::array();
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        row.push_back(0);
        raw_row.push_back(0.0);
        continue;
      }
      const double lk = lf::linking_number_raw(link[i], link[j]);
      const double frac = std::abs(lk - std::round(lk));
      raw_row.push_back(lk);
      row.push_back(frac <= lf::kLinkingSnapTolerance ? json(static_cast<int>(std::lround(lk))) : json(nullptr));
      if (i < j) {
        const double gap = lf::curve_min_distance(link[i], link[j]);
        std::vector<std::string> reasons;
        if (frac > lf::kLinkingSnapTolerance)
          reasons.push_back("linking number not resolved");
        else if (frac > 1e-3)
          reasons.push_back("linking number off-integer by more than 1e-3");
        if (gap < 1e-3 * scale) reasons.push_back("components within 1e-3 of the link diameter");
        if (!reasons.empty())
          flags.push_back({{"i", i}, {"j", j}, {"raw", lk}, {"min_distance", gap}, {"reasons", reasons}});
      }
    }
    matrix.push_back(row);
    raw.push_back(raw_row);
  }
  json j = {{"components", m}, {"linking_matrix", matrix}, {"raw", raw}, {"near_resolution", flags}};
  if (!link.labels().empty()) j["labels"] = std::vector<std::string>(link.labels().begin(), link.labels().end());
  std::vector<int> valence(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t jj = 0; jj < m; ++jj)
      if (matrix[i][jj].is_number_integer() && matrix[i][jj].get<int>() != 0) ++valence[i];
  j["valence"] = valence;
  print_json(j);
  return kOk;
}

int cmd_reproduce(const std::string& name, bool all, bool as_json) {
  if (!all && name.empty()) throw lf::InvalidArgument("reproduce needs an experiment name or --all");
  std::vector<const lf::Experiment*> todo;
  if (all)
    for (const auto& e : lf::experiments()) todo.push_back(&e);
  else
    todo.push_back(&lf::find_experiment(name));

  bool ok = true;
  json out = json::array();
  for (const auto* e : todo) {
    const auto r = lf::run_experiment(*e);
    ok = ok && r.passed();
    if (as_json) {
      out.push_back(r);
      continue;
    }
    std::printf("%s  %d. %s (%s, %.1f s)\n", r.passed() ? "PASS" : "FAIL", r.criterion, r.title.c_str(), r.name.c_str(),
                r.seconds);
    for (const auto& c : r.checks)
      std::printf("    %-4s %-70s obtained %-14.8g expected %s\n", c.pass ? "ok" : "FAIL", c.label.c_str(), c.obtained,
                  c.expected.c_str());
    for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  if (as_json) print_json(out);
  return ok ? kOk : kFailure;
}

int cmd_generate(FamilyFlags& flags, const std::vector<double>& x0_cli, const std::string& out_path) {
  const auto f = flags.spec();
  const lf::Link link = f.build(start_point(f, x0_cli), flags.vertices);
  if (out_path.empty())
    lf::write_link(std::cout, link);
  else
    lf::write_link_file(out_path, link);
  return kOk;
}

int cmd_families() {
  json out = json::array();
  for (const auto& name : lf::family_names()) {
    const auto f = lf::make_family(name);
    json params = json::array();
    for (std::size_t i = 0; i < f.n_params(); ++i)
      params.push_back({{"name", cli_name(f, i)},
                        {"lo", to_cli(f, i, f.params[i].lo)},
                        {"hi", to_cli(f, i, f.params[i].hi)},
                        {"initial", to_cli(f, i, f.params[i].initial)}});
    out.push_back({{"name", name}, {"default_vertices", f.default_vertices}, {"params", params}});
  }
  print_json(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energies and minimizers of links built from planar curves"};
  app.require_subcommand(1);

  std::string path, kind = "mobius";
  auto* energy = app.add_subcommand("energy", "Evaluate the energy of a link file");
  energy->add_option("file", path, "Link JSON file")->required();
  energy->add_option("--energy", kind, "mobius | md | both")->check(CLI::IsMember({"mobius", "md", "both"}));

  FamilyFlags min_flags;
  std::vector<double> x0;
  std::string method = "nelder-mead";
  int max_evals = 4000;
  bool history = false;
  auto* minimize = app.add_subcommand("minimize", "Minimize a family's energy over its parameters");
  min_flags.add_to(minimize);
  minimize->add_option("--energy", kind, "mobius | md")->check(CLI::IsMember({"mobius", "md"}));
  minimize->add_option("--x0", x0, "Start point, comma separated; angles in degrees")->delimiter(',');
  minimize->add_option("--method", method, "nelder-mead | golden");
  minimize->add_option("--max-evals", max_evals, "Evaluation budget");
  minimize->add_flag("--history", history, "Include every evaluation in the output");

  FamilyFlags sweep_flags;
  std::string param, out_path;
  std::vector<double> range;
  std::vector<std::string> fixed;
  int steps = 50;
  bool components = false;
  auto* sweep = app.add_subcommand("sweep", "Evaluate the energy along one parameter; writes CSV");
  sweep_flags.add_to(sweep);
  sweep->add_option("--energy", kind, "mobius | md")->check(CLI::IsMember({"mobius", "md"}));
  sweep->add_option("--param", param, "Parameter to sweep")->required();
  sweep->add_option("--range", range, "lo,hi (degrees for angles)")->delimiter(',')->required();
  sweep->add_option("--steps", steps, "Number of grid points, at least 2");
  sweep->add_option("--fixed", fixed, "name=value pairs for the other parameters, comma separated")->delimiter(',');
  sweep->add_option("--x0", x0, "Values for the other parameters, in family order")->delimiter(',');
  sweep->add_flag("--components", components, "Add per-component self and pairwise cross-energy columns");
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Report pairwise linking numbers of a link file");
  validate->add_option("file", path, "Link JSON file")->required();

  std::string experiment;
  bool all = false, as_json = false;
  auto* reproduce = app.add_subcommand("reproduce", "Run named reproduction experiments");
  reproduce->add_option("name", experiment, "Experiment name");
  reproduce->add_flag("--all", all, "Run every experiment");
  reproduce->add_flag("--json", as_json, "JSON output");
  reproduce->add_flag_callback("--list", [] {
    for (const auto& e : lf::experiments()) std::printf("%-22s %s\n", e.name.c_str(), e.title.c_str());
    std::exit(kOk);
  }, "List experiment names");

  FamilyFlags gen_flags;
  auto* generate = app.add_subcommand("generate", "Write a family member as link JSON");
  gen_flags.add_to(generate);
  generate->add_option("--x0", x0, "Parameters, comma separated; angles in degrees")->delimiter(',');
  generate->add_option("--out", out_path, "Output file (default stdout)");

  auto* families = app.add_subcommand("families", "List families and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*energy) return cmd_energy(path, kind);
    if (*minimize) return cmd_minimize(min_flags, kind, x0, method, max_evals, history);
    if (*sweep) return cmd_sweep(sweep_flags, kind, param, range, steps, fixed, x0, components, out_path);
    if (*validate) return cmd_validate(path);
    if (*reproduce) return cmd_reproduce(experiment, all, as_json);
    if (*generate) return cmd_generate(gen_flags, x0, out_path);
    if (*families) return cmd_families();
  } catch (const lf::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lf::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lf::DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kDivergence;
  } catch (const lf::ResolutionError& e) {
    std::cerr << "unresolved: " << e.what() << '\n';
    return kDivergence;
  } catch (const lf::TopologyError& e) {
    std::cerr << "topology: " << e.what() << '\n';
    return kTopology;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
