#ifndef LINKFORGE_OPTIMIZE_HPP
#define LINKFORGE_OPTIMIZE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "energy.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "geometry.hpp"

namespace linkforge {

enum class Method { nelder_mead, golden_section };

struct OptimizerConfig {
  Method method = Method::nelder_mead;
  double param_tol = 1e-6;
  double value_tol = 1e-9;  // relative
  int max_evals = 4000;
  int restarts = 1;  // fresh simplices started from the best point after convergence
  bool record_history = false;
};

struct EvalRecord {
  std::vector<double> x;
  double value = 0.0;
};

struct MinimizeResult {
  std::vector<double> params_opt;
  double energy_opt = std::numeric_limits<double>::infinity();
  std::optional<double> energy_doubled;
  int n_evals = 0;
  bool converged = false;
  std::vector<EvalRecord> history;
  // Filled by minimize_family.
  std::string family;
  std::string energy_kind;
  std::vector<std::string> param_names;
  std::vector<bool> param_is_angle;
  LinkingMatrix topology;
};

inline void to_json(nlohmann::json& j, const MinimizeResult& r) {
  nlohmann::json params = nlohmann::json::object();
  for (std::size_t i = 0; i < r.params_opt.size(); ++i) {
    const std::string key = i < r.param_names.size() ? r.param_names[i] : "x" + std::to_string(i);
    params[key] = r.params_opt[i];
  }
  j = {{"params", params},
       {"params_opt", r.params_opt},
       {"energy_opt", r.energy_opt},
       {"energy_doubled", r.energy_doubled ? nlohmann::json(*r.energy_doubled) : nlohmann::json(nullptr)},
       {"n_evals", r.n_evals},
       {"converged", r.converged}};
  if (r.energy_doubled) j["doubled_change"] = *r.energy_doubled - r.energy_opt;
  if (!r.family.empty()) j["family"] = r.family;
  if (!r.energy_kind.empty()) j["energy"] = r.energy_kind;
  if (!r.topology.empty()) j["topology"] = r.topology;
  if (!r.history.empty()) {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& e : r.history) h.push_back({{"x", e.x}, {"value", e.value}});
    j["history"] = h;
  }
}

// ---------------------------------------------------------------------------
// Golden-section search
// ---------------------------------------------------------------------------

inline constexpr double kInvGoldenRatio = 0.6180339887498949;

/// Upper bound on the evaluations golden_section makes for a given bracket.
inline int golden_section_eval_bound(double lo, double hi, double tol) {
  return static_cast<int>(std::ceil(std::log(tol / (hi - lo)) / std::log(kInvGoldenRatio))) + 2;
}

/// Minimizes a unimodal f on (lo, hi). The endpoints are never evaluated; the
/// bracket shrinks by the golden ratio per evaluation until narrower than `tol`.
inline MinimizeResult golden_section(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-8,
                                     bool record_history = false) {
  require(lo < hi, "golden_section: need lo < hi");
  require(tol > 0.0, "golden_section: tolerance must be positive");
  MinimizeResult r;
  const auto eval = [&](double x) {
    double v = f(x);
    if (!std::isfinite(v)) v = std::numeric_limits<double>::infinity();
    ++r.n_evals;
    if (record_history) r.history.push_back({{x}, v});
    return v;
  };
  double a = lo, b = hi;
  double c = b - kInvGoldenRatio * (b - a);
  double d = a + kInvGoldenRatio * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a >= tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGoldenRatio * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGoldenRatio * (b - a);
      fd = eval(d);
    }
  }
  if (!std::isfinite(fc) && !std::isfinite(fd))
    throw InvalidArgument("golden_section: objective is not finite anywhere in the final bracket");
  r.params_opt = {fc <= fd ? c : d};
  r.energy_opt = std::min(fc, fd);
  r.converged = true;
  return r;
}

// ---------------------------------------------------------------------------
// Nelder-Mead
// ---------------------------------------------------------------------------

/// Maps an unconstrained coordinate onto a bounded parameter: logit for
/// two-sided bounds, log for one-sided ones, identity otherwise.
struct BoundTransform {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  // Saturated transforms are nudged back inside the open interval.
  double to_param(double y) const {
    const bool has_lo = std::isfinite(lo), has_hi = std::isfinite(hi);
    double x = y;
    if (has_lo && has_hi)
      x = lo + (hi - lo) / (1.0 + std::exp(-y));
    else if (has_lo)
      x = lo + std::exp(y);
    else if (has_hi)
      x = hi - std::exp(y);
    if (has_lo && x <= lo) x = std::nextafter(lo, hi);
    if (has_hi && x >= hi) x = std::nextafter(hi, lo);
    return x;
  }
  double to_free(double x) const {
    const bool has_lo = std::isfinite(lo), has_hi = std::isfinite(hi);
    if (has_lo && has_hi) return std::log((x - lo) / (hi - x));
    if (has_lo) return std::log(x - lo);
    if (has_hi) return std::log(hi - x);
    return x;
  }
  bool contains(double x) const { return x > lo && x < hi; }
};

namespace detail {

struct Simplex {
  std::vector<std::vector<double>> points;  // free coordinates
  std::vector<double> values;

  void sort() {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> p;
    std::vector<double> v;
    for (auto i : order) {
      p.push_back(std::move(points[i]));
      v.push_back(values[i]);
    }
    points = std::move(p);
    values = std::move(v);
  }

  double diameter() const {
    double d = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
      for (std::size_t k = 0; k < points[0].size(); ++k) d = std::max(d, std::abs(points[i][k] - points[0][k]));
    return d;
  }
};

}  // namespace detail

/// Nelder-Mead simplex minimization (reflection 1, expansion 2, contraction
/// 0.5, shrink 0.5) in transformed coordinates. Non-finite values are treated
/// as +infinity, so constraint violations act as walls.
inline MinimizeResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                                  const OptimizerConfig& config = {},
                                  std::vector<std::pair<double, double>> bounds = {}) {
  const std::size_t dim = x0.size();
  require(dim >= 1, "nelder_mead: need at least one parameter");
  require(bounds.empty() || bounds.size() == dim, "nelder_mead: bounds must match the parameter count");
  std::vector<BoundTransform> tr(dim);
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    tr[k] = {bounds[k].first, bounds[k].second};
    require(tr[k].contains(x0[k]), "nelder_mead: start point is outside the bounds");
  }

  MinimizeResult r;
  std::vector<double> x(dim);
  const auto to_params = [&](const std::vector<double>& y) {
    for (std::size_t k = 0; k < dim; ++k) x[k] = tr[k].to_param(y[k]);
    return x;
  };
  const auto eval = [&](const std::vector<double>& y) {
    const auto& p = to_params(y);
    double v = f(p);
    if (!std::isfinite(v)) v = std::numeric_limits<double>::infinity();
    ++r.n_evals;
    if (config.record_history) r.history.push_back({p, v});
    return v;
  };

  const double f0 = f(x0);
  ++r.n_evals;
  if (config.record_history) r.history.push_back({x0, std::isfinite(f0) ? f0 : std::numeric_limits<double>::infinity()});
  if (!std::isfinite(f0)) throw InvalidArgument("nelder_mead: objective is not finite at the start point");

  std::vector<double> best_free(dim);
  for (std::size_t k = 0; k < dim; ++k) best_free[k] = tr[k].to_free(x0[k]);
  double best_value = f0;
  std::vector<double> start = x0;

  for (int attempt = 0; attempt <= config.restarts; ++attempt) {
    detail::Simplex s;
    s.points.push_back(best_free);
    s.values.push_back(best_value);
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<double> p = start;
      const double step = p[k] != 0.0 ? 0.05 * p[k] : 0.00025;
      p[k] = tr[k].contains(p[k] + step) ? p[k] + step : p[k] - step;
      std::vector<double> y(dim);
      for (std::size_t i = 0; i < dim; ++i) y[i] = tr[i].to_free(p[i]);
      s.points.push_back(y);
      s.values.push_back(eval(y));
    }

    bool converged = false;
    while (r.n_evals < config.max_evals) {
      s.sort();
      const double spread = s.values.back() - s.values.front();
      if (s.diameter() < config.param_tol ||
          (std::isfinite(spread) && spread <= config.value_tol * std::abs(s.values.front()) + 1e-300)) {
        converged = true;
        break;
      }
      std::vector<double> centroid(dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) centroid[k] += s.points[i][k] / dim;
      const auto along = [&](double t) {
        std::vector<double> y(dim);
        for (std::size_t k = 0; k < dim; ++k) y[k] = centroid[k] + t * (s.points.back()[k] - centroid[k]);
        return y;
      };
      auto reflected = along(-1.0);
      const double fr = eval(reflected);
      if (fr < s.values.front()) {
        auto expanded = along(-2.0);
        const double fe = eval(expanded);
        if (fe < fr) {
          s.points.back() = std::move(expanded);
          s.values.back() = fe;
        } else {
          s.points.back() = std::move(reflected);
          s.values.back() = fr;
        }
        continue;
      }
      if (fr < s.values[dim - 1]) {
        s.points.back() = std::move(reflected);
        s.values.back() = fr;
        continue;
      }
      const bool outside = fr < s.values.back();
      auto contracted = along(outside ? -0.5 : 0.5);
      const double fc = eval(contracted);
      if (outside ? fc <= fr : fc < s.values.back()) {
        s.points.back() = std::move(contracted);
        s.values.back() = fc;
        continue;
      }
      for (std::size_t i = 1; i <= dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) s.points[i][k] = s.points[0][k] + 0.5 * (s.points[i][k] - s.points[0][k]);
        s.values[i] = eval(s.points[i]);
      }
    }
    s.sort();
    if (s.values.front() <= best_value) {
      best_value = s.values.front();
      best_free = s.points.front();
    }
    r.converged = converged;
    start = to_params(best_free);
    if (!converged) break;
  }

  r.params_opt = to_params(best_free);
  r.energy_opt = best_value;
  return r;
}

// ---------------------------------------------------------------------------
// Family minimization
// ---------------------------------------------------------------------------

/// Matrix of |linking number|; orientation-free, used to compare topologies
/// across parameter values.
inline LinkingMatrix topology_fingerprint(const Link& link) {
  auto m = linking_matrix(link);
  for (auto& row : m)
    for (auto& v : row) v = std::abs(v);
  return m;
}

/// Energy of the family's link at x, or +infinity when the builder rejects x
/// or the configuration diverges.
inline double family_energy(const FamilySpec& family, EnergyKind kind, std::span<const double> x, int vertices = 0) {
  try {
    return evaluate(family.build(x, vertices), kind).total;
  } catch (const InvalidArgument&) {
  } catch (const DivergenceError&) {
  }
  return std::numeric_limits<double>::infinity();
}

/// Minimizes the family's energy over its parameters, then re-evaluates the
/// optimum with twice the vertices and checks that the linking pattern did
/// not change.
inline MinimizeResult minimize_family(const FamilySpec& family, EnergyKind kind, std::vector<double> x0,
                                      const OptimizerConfig& config = {}, int vertices = 0) {
  if (x0.empty()) x0 = family.initial();
  require(x0.size() == family.n_params(), "minimize_family: x0 has the wrong length");
  const int n = vertices > 0 ? vertices : family.default_vertices;

  const LinkingMatrix start_topology = topology_fingerprint(family.build(x0, n));
  if (!family.expected_topology.empty() && start_topology != family.expected_topology)
    throw TopologyError("minimize_family: start point of " + family.name + " does not have the expected linking pattern");

  const auto objective = [&](std::span<const double> x) { return family_energy(family, kind, x, n); };
  MinimizeResult r;
  if (config.method == Method::golden_section) {
    require(family.n_params() == 1, "golden-section search needs a one-parameter family");
    const auto& p = family.params[0];
    require(std::isfinite(p.lo) && std::isfinite(p.hi), "golden-section search needs finite bounds");
    r = golden_section([&](double t) { return objective(std::span<const double>(&t, 1)); }, p.lo, p.hi,
                       config.param_tol, config.record_history);
  } else {
    std::vector<std::pair<double, double>> bounds;
    for (const auto& p : family.params) bounds.emplace_back(p.lo, p.hi);
    r = nelder_mead(objective, x0, config, bounds);
  }

  const Link optimum = family.build(r.params_opt, n);
  r.topology = topology_fingerprint(optimum);
  if (r.topology != start_topology)
    throw TopologyError("minimize_family: optimum of " + family.name + " changed the linking pattern");
  r.energy_doubled = family_energy(family, kind, r.params_opt, 2 * n);
  r.family = family.name;
  r.energy_kind = to_string(kind);
  r.param_names = family.param_names();
  for (const auto& p : family.params) r.param_is_angle.push_back(p.angle);
  return r;
}

}  // namespace linkforge

#endif  // LINKFORGE_OPTIMIZE_HPP
