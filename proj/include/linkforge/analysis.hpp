#ifndef LINKFORGE_ANALYSIS_HPP
#define LINKFORGE_ANALYSIS_HPP

#include <cmath>
#include <numbers>
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

// Published constants, kept as literals rather than re-derived.

/// Denominator of the energy-based ropelength bound L > (E_M / 4.57)^(3/4).
inline constexpr double kRopelengthDenominator = 4.57;
/// The same denominator in the limit of large crossing number.
inline constexpr double kRopelengthDenominatorLargeC = 3.63;
/// Minimum MD cross-energy of two linked squares.
inline constexpr double kMdSquareHopfCrossMin = 85.5;
/// Best proven prefactor of the universal C^(3/4) ropelength lower bound.
inline constexpr double kCurrentRopelengthPrefactor = 1.10;

/// Which pair-counting convention the cross-energy uses: 4 pi^2 (pairs counted
/// twice, the library default) or 2 pi^2 (pairs counted once) per Hopf link.
enum class CrossConvention { double_counted, single_counted };

inline double ropelength_lower_bound(double mobius_energy) {
  require(mobius_energy >= kCircleEnergy, "ropelength_lower_bound: energy below the round-circle minimum of 4");
  return std::pow(mobius_energy / kRopelengthDenominator, 0.75);
}

/// Energy of a central circle with N small circles threaded on it, in the
/// limit of vanishing small radius: 4(N+1) + 4 pi^2 N.
inline double tambourine_bound(int n_small) {
  require(n_small >= 1, "tambourine_bound: need N >= 1");
  return kCircleEnergy * (n_small + 1) + kHopfCrossMinimum * n_small;
}

/// Energy per crossing of a large tambourine, which has C = 2N crossings.
inline double tambourine_energy_per_crossing(CrossConvention conv = CrossConvention::double_counted) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return conv == CrossConvention::double_counted ? 2.0 * pi2 + 2.0 : pi2 + 2.0;
}

/// Prefactor k of the conjectured bound L > k C^(3/4).
inline double improved_ropelength_prefactor(CrossConvention conv = CrossConvention::double_counted,
                                            bool large_c_denominator = false) {
  const double den = large_c_denominator ? kRopelengthDenominatorLargeC : kRopelengthDenominator;
  return std::pow(tambourine_energy_per_crossing(conv) / den, 0.75);
}

/// Conjectured ropelength lower bound for any knot or link with C crossings.
inline double improved_ropelength_bound(int crossings, CrossConvention conv = CrossConvention::double_counted,
                                        bool large_c_denominator = false) {
  require(crossings >= 2, "improved_ropelength_bound: need C >= 2");
  return improved_ropelength_prefactor(conv, large_c_denominator) * std::pow(static_cast<double>(crossings), 0.75);
}

/// Largest crossing number in `competing` (pairs of C and a competing lower
/// bound on ropelength, in increasing C) at which the competing bound still
/// exceeds prefactor * C^(3/4); nullopt if it never does.
inline std::optional<int> bound_crossover(std::span<const std::pair<int, double>> competing, double prefactor) {
  std::optional<int> last;
  for (const auto& [c, value] : competing)
    if (value > prefactor * std::pow(static_cast<double>(c), 0.75)) last = c;
  return last;
}

// ---------------------------------------------------------------------------
// Excess energy
// ---------------------------------------------------------------------------

struct EfficiencyReport {
  double total_cross = 0.0;
  int n_linkages = 0;
  double per_link_min = 0.0;
  double ratio = 0.0;
};

inline void to_json(nlohmann::json& j, const EfficiencyReport& r) {
  j = {{"total_cross", r.total_cross}, {"n_linkages", r.n_linkages}, {"per_link_min", r.per_link_min},
       {"ratio", r.ratio}};
}

inline double per_link_minimum(EnergyKind kind) {
  return kind == EnergyKind::mobius ? kHopfCrossMinimum : kMdSquareHopfCrossMin;
}

/// Component pairs with |linking number| = 1.
inline std::vector<std::pair<std::size_t, std::size_t>> hopf_pairs(const LinkingMatrix& lk) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < lk.size(); ++i)
    for (std::size_t j = i + 1; j < lk.size(); ++j)
      if (std::abs(lk[i][j]) == 1) out.emplace_back(i, j);
  return out;
}

/// Ratio of the total cross-energy to the sum of isolated per-linkage minima.
inline EfficiencyReport efficiency(const EnergyReport& report,
                                   std::span<const std::pair<std::size_t, std::size_t>> linkage_pairs,
                                   EnergyKind kind) {
  require(!linkage_pairs.empty(), "efficiency: no linkages given");
  EfficiencyReport r;
  r.total_cross = report.cross_sum();
  r.n_linkages = static_cast<int>(linkage_pairs.size());
  r.per_link_min = per_link_minimum(kind);
  r.ratio = r.total_cross / (r.n_linkages * r.per_link_min);
  return r;
}

inline EfficiencyReport efficiency(const Link& link, std::span<const std::pair<std::size_t, std::size_t>> linkage_pairs,
                                   EnergyKind kind) {
  for (const auto& [i, j] : linkage_pairs) {
    require(i < link.size() && j < link.size() && i != j, "efficiency: linkage pair out of range");
    if (std::abs(linking_number(link[i], link[j])) != 1)
      throw TopologyError("efficiency: pair (" + std::to_string(i) + ", " + std::to_string(j) + ") is not Hopf linked");
  }
  return efficiency(evaluate(link, kind), linkage_pairs, kind);
}

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

/// Extent of the link along the chain axis x.
inline double chain_width(const Link& link) {
  const auto b = link.bounds();
  return b.hi.x - b.lo.x;
}

/// Width of a layered chain in units where the central rectangle has linear
/// size 2 (area 4), the scale of the side-2 squares used for polygonal links.
inline double layered_chain_width(const ChainLayout& layout) {
  return 2.0 * chain_width(family_chain_layered(layout));
}

struct LayerSeries {
  std::vector<double> areas;          // centre first
  std::vector<double> displacements;  // layer 1 outward
  std::vector<double> aspects;        // centre first
  std::vector<double> size_ratios;    // linear size of layer k+1 over layer k, centre included
  std::vector<double> displacement_ratios;
};

inline void to_json(nlohmann::json& j, const LayerSeries& s) {
  j = {{"areas", s.areas},
       {"displacements", s.displacements},
       {"aspects", s.aspects},
       {"size_ratios", s.size_ratios},
       {"displacement_ratios", s.displacement_ratios}};
}

/// Per-layer sizes of a layered chain and the ratios between successive layers.
/// Linear size is sqrt(area).
inline LayerSeries layer_scaling(const ChainLayout& layout) {
  LayerSeries s;
  s.areas.push_back(1.0);
  s.aspects.push_back(layout.center_aspect);
  for (const auto& l : layout.layers) {
    s.areas.push_back(l.area);
    s.displacements.push_back(l.displacement);
    s.aspects.push_back(l.aspect);
  }
  for (std::size_t k = 1; k < s.areas.size(); ++k) s.size_ratios.push_back(std::sqrt(s.areas[k] / s.areas[k - 1]));
  for (std::size_t k = 1; k < s.displacements.size(); ++k)
    s.displacement_ratios.push_back(s.displacements[k] / s.displacements[k - 1]);
  return s;
}

}  // namespace linkforge

#endif  // LINKFORGE_ANALYSIS_HPP
