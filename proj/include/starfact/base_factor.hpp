#pragma once

// Almost 5-star factors on g points: every vertex except t isolated ones is
// covered by a 5-star, each forward difference occurs at most once as a pure
// edge and at most once as a prime edge, and no edge wraps around.
//
// One constructor per isolated-vertex count t, each with an odd-m and an
// even-m branch. Pure stars (P0/P1/P2) and the mixed star come from closed
// forms in m; the leftover vertices are closed off greedily into prime stars.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "starfact/core.hpp"

namespace starfact {

// Star whose leaves carry individual labels; used for the mixed star
// (three pure leaves, two prime leaves, in the order the construction lists
// them).
struct LabeledStar {
  Vertex center = 0;
  std::vector<Vertex> leaves;
  std::vector<EdgeLabel> labels;

  friend bool operator==(const LabeledStar&, const LabeledStar&) = default;

  std::vector<Vertex> leaves_with(EdgeLabel label) const {
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < leaves.size(); ++k)
      if (labels[k] == label) out.push_back(leaves[k]);
    return out;
  }
};

struct AlmostStarFactor {
  int g = 0;
  int t = 0;
  int m = 0;
  std::vector<Star> pure_stars;
  std::optional<LabeledStar> mixed_star;
  std::vector<Star> prime_stars;
  std::optional<Star> little_star;
  std::vector<Vertex> isolated;  // ascending

  friend bool operator==(const AlmostStarFactor&, const AlmostStarFactor&) = default;

  std::size_t star_count() const {
    return pure_stars.size() + prime_stars.size() + (mixed_star ? 1 : 0);
  }
};

struct BaseParams {
  int g = 0;
  int m = 0;
  int t = 0;

  bool odd_m() const { return m % 2 == 1; }
};

namespace detail {

// g = 30m + base_offset(t).
inline int base_offset(int t) {
  switch (t) {
    case 0: return 12;
    case 1: return 7;
    case 2: return 2;
    case 3: return 27;
    case 4: return 22;
    case 5: return 17;
  }
  throw StarfactError(StarfactError::Kind::unsupported_parameter,
                      "isolated-vertex count t must lie in 0..5, got " + std::to_string(t));
}

inline int min_m(int t) { return (t == 1 || t == 2 || t == 5) ? 1 : 0; }

}  // namespace detail

/// Upper end of the difference range each base-factor branch must cover.
inline int declared_max_diff(int t, int m) {
  switch (t) {
    case 0: return 15 * m + 5;
    case 1: return 15 * m + 3;
    case 2: return 15 * m;
    case 3: return 15 * m + 13;
    case 4: return 15 * m + 10;
    case 5: return 15 * m + 8;
  }
  throw StarfactError(StarfactError::Kind::unsupported_parameter,
                      "isolated-vertex count t must lie in 0..5, got " + std::to_string(t));
}

inline BaseParams make_base_params(int t, int m) {
  const int offset = detail::base_offset(t);
  if (m < detail::min_m(t)) {
    const int g = 30 * m + offset;
    throw StarfactError(
        StarfactError::Kind::unsupported_parameter,
        "no closed-form base factor for t=" + std::to_string(t) + ", m=" + std::to_string(m) +
            " (g=" + std::to_string(g) + ", v=" + std::to_string(6 * g) +
            "); this order is covered by the direct constructions for v = 12, 42, 102");
  }
  return {30 * m + offset, m, t};
}

/// Parameters for base order g, or nullopt if g is not of the form 30m + offset(g mod 6).
inline std::optional<BaseParams> base_params_for_order(int g) {
  if (g <= 0) return std::nullopt;
  const int t = g % 6;
  const int offset = detail::base_offset(t);
  if (g < offset || (g - offset) % 30 != 0) return std::nullopt;
  return BaseParams{g, (g - offset) / 30, t};
}

/// Close off the available vertices into 5-stars: the smallest remaining
/// vertex is the center, the five largest remaining are its leaves, listed in
/// descending order.
inline std::vector<Star> greedy_prime_stars(std::span<const Vertex> available) {
  if (available.size() % 6 != 0) {
    throw StarfactError(StarfactError::Kind::leftover_size,
                        "greedy prime stars need a multiple of 6 vertices, got " +
                            std::to_string(available.size()));
  }
  std::vector<Vertex> pool(available.begin(), available.end());
  std::sort(pool.begin(), pool.end());
  if (std::adjacent_find(pool.begin(), pool.end()) != pool.end()) {
    throw StarfactError(StarfactError::Kind::leftover_size,
                        "greedy prime stars received a repeated vertex");
  }
  std::vector<Star> out;
  out.reserve(pool.size() / 6);
  std::size_t lo = 0;
  std::size_t hi = pool.size();
  while (lo < hi) {
    Star s{pool[lo++], {}};
    for (int k = 0; k < kStarLeaves; ++k) s.leaves.push_back(pool[--hi]);
    out.push_back(std::move(s));
  }
  return out;
}

namespace detail {

inline void add_edge(DifferenceCensus& census, std::vector<std::string>& problems,
                     Vertex c, Vertex leaf, int g, EdgeLabel label) {
  if (c == leaf || c < 0 || leaf < 0 || c >= g || leaf >= g) {
    problems.push_back("invalid edge {" + std::to_string(c) + "," + std::to_string(leaf) + "}");
    return;
  }
  const EdgeDifference e = edge_difference(c, leaf, g);
  if (e.orientation == Orientation::wrap_around) {
    problems.push_back("wrap-around edge {" + std::to_string(c) + "," + std::to_string(leaf) +
                       "} (difference " + std::to_string(e.diff) + ")");
  }
  auto& counts = census.by_diff[e.diff];
  if (label == EdgeLabel::pure) {
    if (++counts.pure == 2)
      problems.push_back("pure difference " + std::to_string(e.diff) + " occurs more than once");
  } else {
    if (++counts.prime == 2)
      problems.push_back("prime difference " + std::to_string(e.diff) + " occurs more than once");
  }
}

}  // namespace detail

/// Check every structural property of an almost 5-star factor and return its
/// difference census. Throws construction_defect listing all violations.
inline DifferenceCensus validate_base(const AlmostStarFactor& f, int declared_max) {
  std::vector<std::string> problems;
  DifferenceCensus census;

  if (static_cast<int>(f.isolated.size()) != f.t)
    problems.push_back("isolated set has " + std::to_string(f.isolated.size()) +
                       " vertices, expected t=" + std::to_string(f.t));

  std::vector<int> hits(f.g, 0);
  auto mark = [&](Vertex x) {
    if (x < 0 || x >= f.g) {
      problems.push_back("vertex " + std::to_string(x) + " outside 0.." + std::to_string(f.g - 1));
      return;
    }
    ++hits[x];
  };
  auto five_leaves = [&](Vertex c, std::size_t n) {
    if (n != kStarLeaves)
      problems.push_back("star centred at " + std::to_string(c) + " has " + std::to_string(n) +
                         " leaves");
  };

  for (const Star& s : f.pure_stars) {
    five_leaves(s.center, s.leaves.size());
    mark(s.center);
    for (Vertex l : s.leaves) {
      mark(l);
      detail::add_edge(census, problems, s.center, l, f.g, EdgeLabel::pure);
    }
  }
  if (f.mixed_star) {
    const LabeledStar& ms = *f.mixed_star;
    five_leaves(ms.center, ms.leaves.size());
    if (ms.labels.size() != ms.leaves.size() || ms.leaves_with(EdgeLabel::pure).size() != 3 ||
        ms.leaves_with(EdgeLabel::prime).size() != 2)
      problems.push_back("mixed star must have 3 pure and 2 prime leaves");
    mark(ms.center);
    for (std::size_t k = 0; k < ms.leaves.size() && k < ms.labels.size(); ++k) {
      mark(ms.leaves[k]);
      detail::add_edge(census, problems, ms.center, ms.leaves[k], f.g, ms.labels[k]);
    }
  }
  for (const Star& s : f.prime_stars) {
    five_leaves(s.center, s.leaves.size());
    mark(s.center);
    for (Vertex l : s.leaves) {
      mark(l);
      detail::add_edge(census, problems, s.center, l, f.g, EdgeLabel::prime);
    }
  }

  std::vector<bool> excluded(f.g, false);
  for (Vertex x : f.isolated)
    if (x >= 0 && x < f.g) excluded[x] = true;
  for (Vertex x = 0; x < f.g; ++x) {
    if (excluded[x]) {
      if (hits[x] != 0)
        problems.push_back("isolated vertex " + std::to_string(x) + " is covered by a star");
    } else if (hits[x] == 0) {
      problems.push_back("vertex " + std::to_string(x) + " is not covered");
    } else if (hits[x] > 1) {
      problems.push_back("vertex " + std::to_string(x) + " is covered " + std::to_string(hits[x]) +
                         " times");
    }
  }

  if (f.little_star) {
    const Star& ls = *f.little_star;
    std::vector<Vertex> vs = ls.leaves;
    vs.push_back(ls.center);
    std::sort(vs.begin(), vs.end());
    if (vs != f.isolated) problems.push_back("little star does not span the isolated set");
    for (Vertex l : ls.leaves) detail::add_edge(census, problems, ls.center, l, f.g, EdgeLabel::prime);
  } else if (f.t >= 2) {
    problems.push_back("t=" + std::to_string(f.t) + " requires a little star");
  }

  for (int d = 1; d <= declared_max; ++d) {
    auto it = census.by_diff.find(d);
    if (it == census.by_diff.end() || it->second.pure + it->second.prime == 0)
      problems.push_back("difference " + std::to_string(d) + " is not covered");
  }

  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "almost 5-star factor (g=" << f.g << ", t=" << f.t << ", m=" << f.m << ") invalid:";
    for (const auto& p : problems) msg << "\n  " << p;
    throw StarfactError(StarfactError::Kind::construction_defect, msg.str());
  }
  return census;
}

namespace detail {

// Stars (i-1; j, j-1, j-2, j-3, j-4) with j = j0 - 5i for i = 1..count.
inline void run_stars(std::vector<Star>& out, int count, int j0) {
  for (int i = 1; i <= count; ++i) {
    const int j = j0 - 5 * i;
    out.push_back({i - 1, {j, j - 1, j - 2, j - 3, j - 4}});
  }
}

// Stars (c0 + i; j, j-6, j-12, j-18, j-24) with j = j0 - 29i for i = first..last.
// Each covers five consecutive multiples of 6.
inline void stride_stars(std::vector<Star>& out, int first, int last, int c0, int j0) {
  for (int i = first; i <= last; ++i) {
    const int j = j0 - 29 * i;
    out.push_back({c0 + i, {j, j - 6, j - 12, j - 18, j - 24}});
  }
}

inline LabeledStar mixed(Vertex c, std::vector<std::pair<Vertex, EdgeLabel>> leaves) {
  LabeledStar s{c, {}, {}};
  for (auto [x, l] : leaves) {
    s.leaves.push_back(x);
    s.labels.push_back(l);
  }
  return s;
}

inline constexpr EdgeLabel P = EdgeLabel::pure;
inline constexpr EdgeLabel Q = EdgeLabel::prime;

// Fill the uncovered, non-isolated vertices with greedy prime stars and run
// the full validation.
inline AlmostStarFactor finish(AlmostStarFactor f) {
  std::sort(f.isolated.begin(), f.isolated.end());
  std::vector<bool> used(f.g, false);
  auto take = [&](Vertex x) {
    if (x >= 0 && x < f.g) used[x] = true;
  };
  for (Vertex x : f.isolated) take(x);
  for (const Star& s : f.pure_stars) {
    take(s.center);
    for (Vertex l : s.leaves) take(l);
  }
  if (f.mixed_star) {
    take(f.mixed_star->center);
    for (Vertex l : f.mixed_star->leaves) take(l);
  }
  std::vector<Vertex> available;
  for (Vertex x = 0; x < f.g; ++x)
    if (!used[x]) available.push_back(x);
  f.prime_stars = greedy_prime_stars(available);
  validate_base(f, declared_max_diff(f.t, f.m));
  return f;
}

inline AlmostStarFactor start(const BaseParams& p) {
  AlmostStarFactor f;
  f.g = p.g;
  f.t = p.t;
  f.m = p.m;
  return f;
}

}  // namespace detail

inline AlmostStarFactor build_t1(int m) {
  using namespace detail;
  const BaseParams p = make_base_params(1, m);
  AlmostStarFactor f = start(p);
  if (p.odd_m()) {
    f.isolated = {30 * m + 5};
    run_stars(f.pure_stars, (5 * m + 1) / 2, 15 * m + 7);
    stride_stars(f.pure_stars, 1, (m - 1) / 2, 15 * m + 3, 30 * m + 18);
    f.mixed_star = mixed(15 * m + 3, {{30 * m + 6, P}, {30 * m, P}, {30 * m - 6, P},
                                      {30 * m + 4, Q}, {30 * m + 3, Q}});
  } else {
    f.isolated = {30 * m + 1};
    run_stars(f.pure_stars, 5 * m / 2, 15 * m + 4);
    stride_stars(f.pure_stars, 1, std::min(3, m / 2), 15 * m - 1, 30 * m + 29);
    // Past i = 3 the centres skip 15m+3, the mixed star's centre.
    stride_stars(f.pure_stars, 4, m / 2, 15 * m, 30 * m + 30);
    f.mixed_star = mixed(15 * m + 3, {{30 * m + 6, P}, {30 * m + 5, P}, {30 * m + 4, P},
                                      {30 * m + 3, Q}, {30 * m + 2, Q}});
  }
  return finish(std::move(f));
}

inline AlmostStarFactor build_t3(int m) {
  using namespace detail;
  const BaseParams p = make_base_params(3, m);
  AlmostStarFactor f = start(p);
  if (p.odd_m()) {
    f.isolated = {15 * m + 9, 30 * m + 21, 30 * m + 20};
    f.pure_stars.push_back(
        {15 * m + 13, {30 * m + 26, 30 * m + 25, 30 * m + 24, 30 * m + 23, 30 * m + 22}});
    run_stars(f.pure_stars, (5 * m + 3) / 2, 15 * m + 13);
    stride_stars(f.pure_stars, 1, std::min(2, (m - 1) / 2), 15 * m + 10, 30 * m + 25);
    stride_stars(f.pure_stars, 3, (m - 1) / 2, 15 * m + 11, 30 * m + 26);
    f.mixed_star = mixed(15 * m + 10, {{30 * m + 19, Q}, {30 * m + 18, Q}, {30 * m + 13, P},
                                       {30 * m + 7, P}, {30 * m + 1, P}});
    f.little_star = Star{15 * m + 9, {30 * m + 21, 30 * m + 20}};
  } else {
    f.isolated = {15 * m + 13, 30 * m + 21, 30 * m + 26};
    run_stars(f.pure_stars, (5 * m + 4) / 2, 15 * m + 16);
    stride_stars(f.pure_stars, 1, m / 2, 15 * m + 13, 30 * m + 43);
    f.mixed_star = mixed(15 * m + 12, {{30 * m + 22, Q}, {30 * m + 23, Q}, {30 * m + 25, P},
                                       {30 * m + 24, P}, {30 * m + 18, P}});
    f.little_star = Star{15 * m + 13, {30 * m + 21, 30 * m + 26}};
  }
  return finish(std::move(f));
}

inline AlmostStarFactor build_t5(int m) {
  using namespace detail;
  const BaseParams p = make_base_params(5, m);
  AlmostStarFactor f = start(p);
  if (p.odd_m()) {
    f.isolated = {15 * m + 9, 30 * m + 16, 30 * m + 15, 30 * m + 14, 30 * m + 12};
    run_stars(f.pure_stars, (5 * m + 3) / 2, 15 * m + 13);
    stride_stars(f.pure_stars, 1, (m - 1) / 2, 15 * m + 10, 30 * m + 25);
    f.mixed_star = mixed(15 * m + 10, {{30 * m + 13, P}, {30 * m + 11, Q}, {30 * m + 10, Q},
                                       {30 * m + 7, P}, {30 * m + 1, P}});
    f.little_star = Star{15 * m + 9, {30 * m + 16, 30 * m + 15, 30 * m + 14, 30 * m + 12}};
  } else {
    f.isolated = {15 * m + 8, 30 * m + 16, 30 * m + 15, 30 * m + 9, 30 * m + 8};
    run_stars(f.pure_stars, (5 * m + 2) / 2, 15 * m + 10);
    f.pure_stars.push_back(
        {15 * m + 7, {30 * m + 7, 30 * m + 1, 30 * m - 5, 30 * m - 11, 30 * m - 17}});
    stride_stars(f.pure_stars, 2, m / 2, 15 * m + 7, 30 * m + 37);
    f.mixed_star = mixed(15 * m + 6, {{30 * m + 14, P}, {30 * m + 13, P}, {30 * m + 12, P},
                                      {30 * m + 11, Q}, {30 * m + 10, Q}});
    f.little_star = Star{15 * m + 8, {30 * m + 16, 30 * m + 15, 30 * m + 9, 30 * m + 8}};
  }
  return finish(std::move(f));
}

inline AlmostStarFactor build_t0(int m) {
  using namespace detail;
  const BaseParams p = make_base_params(0, m);
  AlmostStarFactor f = start(p);
  if (p.odd_m()) {
    f.pure_stars.push_back(
        {15 * m + 6, {30 * m + 11, 30 * m + 10, 30 * m + 9, 30 * m + 3, 30 * m - 3}});
    run_stars(f.pure_stars, (5 * m + 1) / 2, 15 * m + 7);
    stride_stars(f.pure_stars, 1, (m - 1) / 2, 15 * m + 6, 30 * m + 21);
  } else {
    run_stars(f.pure_stars, (5 * m + 2) / 2, 15 * m + 10);
    stride_stars(f.pure_stars, 1, m / 2, 15 * m + 5, 30 * m + 35);
  }
  return finish(std::move(f));
}

inline AlmostStarFactor build_t2(int m) {
  using namespace detail;
  const BaseParams p = make_base_params(2, m);
  AlmostStarFactor f = start(p);
  if (p.odd_m()) {
    f.isolated = {15 * m - 3, 30 * m - 3};
    f.pure_stars.push_back(
        {15 * m + 1, {30 * m + 1, 30 * m, 30 * m - 1, 30 * m - 2, 30 * m - 8}});
    run_stars(f.pure_stars, (5 * m - 1) / 2, 15 * m + 1);
    stride_stars(f.pure_stars, 1, (m - 1) / 2, 15 * m + 1, 30 * m + 16);
    f.little_star = Star{15 * m - 3, {30 * m - 3}};
  } else {
    f.isolated = {15 * m, 30 * m};
    run_stars(f.pure_stars, 5 * m / 2, 15 * m + 4);
    stride_stars(f.pure_stars, 1, m / 2, 15 * m, 30 * m + 30);
    f.little_star = Star{15 * m, {30 * m}};
  }
  return finish(std::move(f));
}

inline AlmostStarFactor build_t4(int m) {
  using namespace detail;
  const BaseParams p = make_base_params(4, m);
  AlmostStarFactor f = start(p);
  if (p.odd_m()) {
    f.isolated = {30 * m + 19, 30 * m + 18, 30 * m + 17, 15 * m + 9};
    f.pure_stars.push_back(
        {15 * m + 11, {30 * m + 21, 30 * m + 20, 30 * m + 14, 30 * m + 8, 30 * m + 2}});
    run_stars(f.pure_stars, (5 * m + 3) / 2, 15 * m + 13);
    // Centres start at 15m+12 so that j - centre = 15m+15-30i is a multiple
    // of 6; a centre base of 15m+12 would put these edges at 5 (mod 6).
    stride_stars(f.pure_stars, 1, (m - 1) / 2, 15 * m + 11, 30 * m + 26);
    f.little_star = Star{15 * m + 9, {30 * m + 19, 30 * m + 18, 30 * m + 17}};
  } else {
    f.isolated = {30 * m + 16, 30 * m + 15, 30 * m + 14, 15 * m + 6};
    f.pure_stars.push_back(
        {15 * m + 11, {30 * m + 21, 30 * m + 20, 30 * m + 19, 30 * m + 18, 30 * m + 17}});
    run_stars(f.pure_stars, (5 * m + 2) / 2, 15 * m + 10);
    stride_stars(f.pure_stars, 1, m / 2, 15 * m + 11, 30 * m + 41);
    f.little_star = Star{15 * m + 6, {30 * m + 16, 30 * m + 15, 30 * m + 14}};
  }
  return finish(std::move(f));
}

inline AlmostStarFactor build_base_factor(const BaseParams& params) {
  const BaseParams p = make_base_params(params.t, params.m);
  if (p.g != params.g) {
    throw StarfactError(StarfactError::Kind::unsupported_parameter,
                        "g=" + std::to_string(params.g) + " does not match t=" +
                            std::to_string(params.t) + ", m=" + std::to_string(params.m));
  }
  switch (p.t) {
    case 0: return build_t0(p.m);
    case 1: return build_t1(p.m);
    case 2: return build_t2(p.m);
    case 3: return build_t3(p.m);
    case 4: return build_t4(p.m);
    default: return build_t5(p.m);
  }
}

}  // namespace starfact
