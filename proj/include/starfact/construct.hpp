#pragma once

// Top-level dispatch: choose the route for an admissible order, run the
// pipeline, normalise the result and verify it before handing it out.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "starfact/arrays.hpp"
#include "starfact/base_factor.hpp"
#include "starfact/direct.hpp"
#include "starfact/lifting.hpp"
#include "starfact/verifier.hpp"

namespace starfact {

enum class Route { direct_12, direct_42, direct_102, general };

struct ConstructPlan {
  int v = 0;
  int g = 0;
  Route route = Route::general;
  int t = 0;  // g mod 6
  int m = 0;  // g = 30m + offset(t); only meaningful for the general route
  int part1_factors = 0;
  int part2_factors = 0;

  std::string route_name() const {
    switch (route) {
      case Route::direct_12: return "direct-12";
      case Route::direct_42: return "direct-42";
      case Route::direct_102: return "direct-102";
      case Route::general: break;
    }
    return "general(t=" + std::to_string(t) + ", m=" + std::to_string(m) + ")";
  }
};

inline ConstructPlan plan(int v) {
  const int total = factor_count(v);
  ConstructPlan p;
  p.v = v;
  p.g = v / 6;
  p.t = p.g % 6;
  if (v == 12) {
    p.route = Route::direct_12;
    p.part1_factors = total;
  } else {
    p.route = v == 42 ? Route::direct_42 : v == 102 ? Route::direct_102 : Route::general;
    p.part1_factors = v / 6;
    p.part2_factors = total - p.part1_factors;
  }
  if (p.route == Route::general) p.m = make_base_params(p.t, (p.g - detail::base_offset(p.t)) / 30).m;
  return p;
}

/// Leaves descending, stars by centre, matching pairs (low, high) sorted.
inline void normalize(Decomposition& d) {
  for (auto& pr : d.one_factor)
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  std::sort(d.one_factor.begin(), d.one_factor.end());
  for (Factor& f : d.factors) {
    for (Star& s : f.stars) std::sort(s.leaves.begin(), s.leaves.end(), std::greater<>());
    std::sort(f.stars.begin(), f.stars.end(),
              [](const Star& a, const Star& b) { return a.center < b.center; });
  }
}

struct Construction {
  ConstructPlan plan;
  std::optional<AlmostStarFactor> base;
  std::optional<BaseBlock> block;
  std::optional<std::array<BalancedStarArray, 6>> arrays;
  Decomposition decomposition;
};

/// Run the pipeline without verification, keeping the intermediate objects.
inline Construction build_construction(int v) {
  Construction c;
  c.plan = plan(v);
  Decomposition& d = c.decomposition;
  if (c.plan.route == Route::direct_12) {
    d = direct_12();
    return c;
  }
  if (c.plan.route == Route::general) {
    c.base = build_base_factor(make_base_params(c.plan.t, c.plan.m));
    c.block = build_base_block(*c.base);
  } else {
    c.block = direct_block(v);
  }
  d.v = v;
  d.one_factor = half_period_matching(v);
  d.factors = develop(c.block->stars, v, v / 6);
  c.arrays = complete_arrays(ledger_from_factors(v, d.factors));
  for (Factor& f : part2_factors(*c.arrays, v)) d.factors.push_back(std::move(f));
  if (static_cast<int>(d.factors.size()) != c.plan.part1_factors + c.plan.part2_factors)
    throw StarfactError(StarfactError::Kind::construction_defect,
                        "v=" + std::to_string(v) + ": produced " +
                            std::to_string(d.factors.size()) + " factors, expected " +
                            std::to_string(c.plan.part1_factors + c.plan.part2_factors));
  return c;
}

/// Verified, normalised decomposition of K_v - I for admissible v.
inline Decomposition construct(int v) {
  Decomposition d = build_construction(v).decomposition;
  normalize(d);
  const VerifyReport rep = verify_decomposition(d);
  if (!rep.valid()) {
    std::string msg = "v=" + std::to_string(v) + ": constructed decomposition fails verification";
    for (std::size_t k = 0; k < rep.errors.size() && k < 5; ++k)
      msg += "\n  " + std::string(to_string(rep.errors[k].code)) + ": " + rep.errors[k].message;
    throw StarfactError(StarfactError::Kind::construction_defect, msg);
  }
  return d;
}

}  // namespace starfact
