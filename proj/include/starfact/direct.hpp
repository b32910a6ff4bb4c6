#pragma once

// Hand-built decompositions for the three orders below the closed-form
// range: v = 12, 42 and 102.

#include <vector>

#include "starfact/arrays.hpp"
#include "starfact/core.hpp"
#include "starfact/lifting.hpp"

namespace starfact {

inline std::vector<std::pair<Vertex, Vertex>> half_period_matching(int v) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < v / 2; ++u) out.emplace_back(u, u + v / 2);
  return out;
}

/// Base factor for v = 42 or 102, developed by +6 into the Part I factors.
inline BaseBlock direct_block(int v) {
  BaseBlock b;
  b.v = v;
  if (v == 42) {
    b.stars = {{36, {37, 38, 39, 40, 41}}, {0, {6, 12, 18, 28, 35}}, {1, {7, 13, 19, 29, 30}},
               {2, {8, 14, 20, 24, 31}},   {3, {9, 15, 21, 25, 32}}, {4, {10, 16, 22, 26, 33}},
               {5, {11, 17, 23, 27, 34}}};
  } else if (v == 102) {
    for (Vertex i = 0; i < 6; ++i) b.stars.push_back({i, {i + 6, i + 12, i + 18, i + 24, i + 30}});
    const std::vector<Star> f2 = {
        {36, {72, 78, 84, 94, 101}}, {37, {73, 79, 85, 95, 96}}, {38, {74, 80, 86, 90, 97}},
        {39, {75, 81, 87, 91, 98}},  {40, {76, 82, 88, 92, 99}}, {41, {77, 83, 89, 93, 100}}};
    const std::vector<Star> f3 = {{42, {49, 50, 51, 52, 53}}, {43, {54, 56, 57, 58, 59}},
                                  {44, {60, 61, 63, 64, 65}}, {45, {66, 67, 68, 70, 71}},
                                  {46, {47, 48, 55, 62, 69}}};
    b.stars.insert(b.stars.end(), f2.begin(), f2.end());
    b.stars.insert(b.stars.end(), f3.begin(), f3.end());
  } else {
    throw StarfactError(StarfactError::Kind::unsupported_parameter,
                        "no direct base factor for v=" + std::to_string(v));
  }
  b.provenance.assign(b.stars.size(), Provenance::direct);
  check_partition(b.stars, v);
  return b;
}

inline Decomposition direct_12() {
  Decomposition d;
  d.v = 12;
  d.one_factor = half_period_matching(12);
  for (Vertex k = 0; k < 6; ++k) {
    Factor f;
    Star a{k, {}};
    Star b{k + 6, {}};
    for (Vertex s = 1; s <= 5; ++s) {
      a.leaves.push_back((k + s) % 12);
      b.leaves.push_back((k + 6 + s) % 12);
    }
    f.stars = {a, b};
    d.factors.push_back(std::move(f));
  }
  return d;
}

namespace detail {

inline Decomposition direct_developed(int v) {
  const BaseBlock b = direct_block(v);
  Decomposition d;
  d.v = v;
  d.one_factor = half_period_matching(v);
  d.factors = develop(b.stars, v, v / 6);
  const DifferenceLedger ledger = ledger_from_factors(v, d.factors);
  for (Factor& f : part2_factors(complete_arrays(ledger), v)) d.factors.push_back(std::move(f));
  return d;
}

}  // namespace detail

inline Decomposition direct_42() { return detail::direct_developed(42); }
inline Decomposition direct_102() { return detail::direct_developed(102); }

}  // namespace starfact
